"""Presentations of Grassmannian and BGL_n cohomology rings over Z.

``gr2_ring(s)`` is Z[u]/u^d with d = s // 2.  ``gr_ring(n, s)`` is
Z[p1..pr]/J_{d-r+1} with r = n // 2, valid when d >= r and (n odd implies s
odd).  ``bgl_ring`` and ``bgl_pair_ring`` model homogeneous power series rings
by truncation at a weight cutoff, together with the index d0 past which the
quotients Z[p]/J_d agree with the polynomial ring in all weights up to the
cutoff.  Weight w is displayed as bidegree (8w, 4w).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional

from pontcalc.core.polynomial import (
    GradedPolynomial,
    VarSet,
    format_monomial,
    from_coefficients,
    monomials_of_weight,
    series_inverse_truncated,
)
from pontcalc.errors import HomogeneityError, ParityError, RangeError, VarSetError
from pontcalc.ideals import J, Ideal, free_ranks, ideal_degree_slice
from pontcalc.reports import LemmaReport
from pontcalc.segre import segre


def _generator_docs(varset):
    return [
        {"name": n, "weight": w, "bidegree": list(varset.bidegree(w))}
        for n, w in zip(varset.names, varset.weights)
    ]


@dataclass(frozen=True)
class NormalForm:
    """Coordinates of a homogeneous class on the quotient basis of its weight."""

    weight: Optional[int]
    varset: VarSet
    basis: tuple = ()
    coords: tuple = ()

    def is_zero(self):
        return not any(self.coords)

    def as_polynomial(self):
        if any(isinstance(c, Fraction) and c.denominator != 1 for c in self.coords):
            raise ValueError("normal form has non-integral coordinates")
        return from_coefficients(self.varset, self.basis, [int(c) for c in self.coords])

    def __str__(self):
        return str(self.as_polynomial())


@dataclass(frozen=True)
class RingRank:
    per_weight: tuple
    total: int
    torsion_observed: bool
    vanishes_above_top: bool = True


class Gr2Presentation:
    """Z[u]/u^d, with basis 1, u, ..., u^(d-1)."""

    def __init__(self, s):
        if s < 0:
            raise RangeError("s must be nonnegative")
        self.s = s
        self.d = s // 2
        self.varset = VarSet(("u",), (1,))
        self.u = GradedPolynomial.var(self.varset, "u")

    @property
    def relation(self):
        return self.u ** self.d

    @property
    def basis(self):
        return [self.u ** k for k in range(self.d)]

    def normal_form(self, f):
        """Coefficients of f on 1, u, ..., u^(d-1); u^k vanishes for k >= d."""
        if f.varset != self.varset:
            raise VarSetError("not a polynomial in u")
        return tuple(f.coefficient((k,)) for k in range(self.d))

    def is_zero(self, f):
        return not any(self.normal_form(f))

    def per_weight_ranks(self):
        return tuple(1 for _ in range(self.d))

    def report(self):
        return {
            "s": self.s,
            "d": self.d,
            "generators": _generator_docs(self.varset),
            "relations": [str(self.relation)],
            "per_weight_ranks": list(self.per_weight_ranks()),
            "total_rank": self.d,
            "basis": [str(b) for b in self.basis],
            "basis_bidegrees": [list(self.varset.bidegree(k)) for k in range(self.d)],
        }


def gr2_ring(s):
    return Gr2Presentation(s)


class GrassmannPresentation:
    """Z[p1..pr]/J_{d-r+1} presenting the cohomology of Gr(n, s)."""

    def __init__(self, n, s):
        if n < 0 or s < 0 or n > s:
            raise RangeError("need 0 <= n <= s, got n=%d s=%d" % (n, s))
        if n % 2 == 1 and s % 2 == 0:
            raise ParityError("n=%d is odd but s=%d is even" % (n, s))
        self.n, self.s = n, s
        self.r, self.d = n // 2, s // 2
        if self.d < self.r:
            raise RangeError("need d >= r, got d=%d r=%d" % (self.d, self.r))
        self.relation_index = self.d - self.r + 1
        self.ideal = Ideal(J(self.relation_index), self.r)
        self.varset = self.ideal.varset
        self.top_weight = self.r * (self.d - self.r)

    def relations(self):
        return [segre(self.r, j) for j in range(self.relation_index, self.relation_index + self.r)]

    def _slice(self, w):
        return ideal_degree_slice(self.ideal, w)

    def basis(self, w):
        """Quotient basis monomials at weight w."""
        if w < 0:
            return ()
        sl = self._slice(w)
        _, pivots, _ = sl.reducer
        skip = set(pivots)
        return tuple(m for i, m in enumerate(sl.monomials) if i not in skip)

    def normal_form(self, f):
        if f.varset != self.varset:
            raise VarSetError("polynomial is not in %s" % (self.varset.names,))
        if f.is_zero():
            return NormalForm(None, self.varset)
        w = f.weight  # raises HomogeneityError
        sl = self._slice(w)
        E, pivots, _ = sl.reducer
        vec = sl.coordinates(f)
        for row, c in zip(E, pivots):
            q = vec[c]
            if q:
                vec = [a - q * b for a, b in zip(vec, row)]
        skip = set(pivots)
        keep = [i for i in range(len(sl.monomials)) if i not in skip]
        return NormalForm(w, self.varset, tuple(sl.monomials[i] for i in keep), tuple(vec[i] for i in keep))

    def reduce(self, f):
        """Normal form of an arbitrary (possibly inhomogeneous) polynomial, as a polynomial."""
        total = GradedPolynomial.zero(self.varset)
        for w in sorted(f.weights()):
            nf = self.normal_form(f.component(w))
            if nf.weight is not None:
                total = total + nf.as_polynomial()
        return total

    def integral_basis(self):
        return all(self._slice(w).reducer[2] for w in range(self.top_weight + 1))

    def tautological_quotient_class(self, k):
        """Normal form of s_k(p1..pr), the k-th class of the dual quotient bundle."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        return self.normal_form(segre(self.r, k))

    @cached_property
    def _rank(self):
        per_weight = []
        torsion = False
        for w in range(self.top_weight + 1):
            free, tors = self._slice(w).quotient()
            per_weight.append(free)
            torsion = torsion or bool(tors)
        # an ideal that swallows r consecutive weights swallows everything above
        vanishes = True
        for w in range(self.top_weight + 1, self.top_weight + self.r + 1):
            free, tors = self._slice(w).quotient()
            torsion = torsion or bool(tors)
            vanishes = vanishes and free == 0 and not tors
        return RingRank(tuple(per_weight), sum(per_weight), torsion, vanishes)

    def ring_rank(self):
        return self._rank

    def report(self):
        rank = self.ring_rank()
        return {
            "n": self.n,
            "s": self.s,
            "r": self.r,
            "d": self.d,
            "generators": _generator_docs(self.varset),
            "relations": [str(g) for g in self.relations()],
            "per_weight_ranks": list(rank.per_weight),
            "total_rank": rank.total,
            "torsion_observed": rank.torsion_observed,
            "basis_per_weight": {
                str(w): [format_monomial(self.varset, m) for m in self.basis(w)]
                for w in range(self.top_weight + 1)
            },
        }


def gr_ring(n, s):
    return GrassmannPresentation(n, s)


def normal_form(P, f):
    return P.normal_form(f)


def ring_rank(P):
    return P.ring_rank()


def tautological_quotient_class(P, k):
    return P.tautological_quotient_class(k)


class TruncatedSeriesRing:
    """Z[[p1..pr]]_h represented in weights <= cutoff."""

    blocks = 1

    def __init__(self, n, cutoff):
        if n < 0 or cutoff < 0:
            raise RangeError("n and cutoff must be nonnegative")
        self.n = n
        self.r = n // 2
        self.cutoff = cutoff
        self.varset = Ideal(J(1), self.r, self.blocks).varset

    def relation_ideal(self, d):
        expr = J(d) if self.blocks == 1 else J(d) + J(d, block=1)
        return Ideal(expr, self.r, self.blocks)

    def free_ranks(self):
        return tuple(len(monomials_of_weight(self.varset, w)) for w in range(self.cutoff + 1))

    @cached_property
    def certificate(self):
        """Least d0 >= 1 with J_d0 empty in weights <= cutoff (hence every J_d, d >= d0)."""
        for d in range(1, self.cutoff + 2):
            ideal = self.relation_ideal(d)
            if all(ideal_degree_slice(ideal, w).is_empty() for w in range(self.cutoff + 1)):
                return d
        raise AssertionError("J_d slices did not vanish below weight d")

    @cached_property
    def per_weight_ranks(self):
        """Quotient ranks of Z[p]/J_d0 at weights 0..cutoff, by linear algebra."""
        return tuple(free_ranks(self.relation_ideal(self.certificate), self.cutoff))

    def certificate_verified(self):
        return self.certificate <= self.cutoff + 1 and self.per_weight_ranks == self.free_ranks()

    def element(self, f):
        if f.varset != self.varset:
            raise VarSetError("element is not in %s" % (self.varset.names,))
        return f.truncate(self.cutoff)

    def one(self):
        return GradedPolynomial.one(self.varset)

    def gen(self, name):
        return self.element(GradedPolynomial.var(self.varset, name))

    def mul(self, a, b):
        return a.mul_truncated(b, self.cutoff)

    def add(self, a, b):
        return self.element(a + b)

    def inverse(self, f):
        pieces = series_inverse_truncated(self.element(f), self.cutoff)
        total = GradedPolynomial.zero(self.varset)
        for g in pieces:
            total = total + g
        return total

    def report(self):
        return {
            "n": self.n,
            "r": self.r,
            "cutoff": self.cutoff,
            "generators": _generator_docs(self.varset),
            "stabilization_d0": self.certificate,
            "certificate_verified": self.certificate_verified(),
            "per_weight_ranks": list(self.per_weight_ranks),
            "total_rank": sum(self.per_weight_ranks),
        }


class DoubleSeriesRing(TruncatedSeriesRing):
    """Z[[p1..pr, p1'..pr']]_h in weights <= cutoff, via the ideals J_d + J_d'."""

    blocks = 2


def bgl_ring(n, cutoff):
    return TruncatedSeriesRing(n, cutoff)


def bgl_pair_ring(n, cutoff):
    return DoubleSeriesRing(n, cutoff)


def convolve(a, b, top):
    return tuple(sum(a[i] * b[w - i] for i in range(w + 1)) for w in range(top + 1))


def stabilization_check(r, cutoff, d_range):
    """Compare Z[p]/J_d with Z[p] weight by weight up to ``cutoff`` for d in d_range.

    ``details['least_d']`` is the least d in range from which every later d in
    range agrees (None if the last one still disagrees).
    """
    vs = VarSet.pontryagin(r)
    free = [len(monomials_of_weight(vs, w)) for w in range(cutoff + 1)]
    agree = {}
    for d in d_range:
        agree[d] = free_ranks(Ideal(J(d), r), cutoff) == free
    least = None
    for d in sorted(agree, reverse=True):
        if not agree[d]:
            break
        least = d
    rep = LemmaReport(
        "stabilization",
        {"r": r, "cutoff": cutoff, "d_range": [min(agree), max(agree)] if agree else []},
        cutoff,
        least is not None,
        details={"agree": {str(d): v for d, v in agree.items()}, "least_d": least},
    )
    if least is None:
        rep.first_failure = {"d": max(agree) if agree else None}
    return rep
