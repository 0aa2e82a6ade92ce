"""The ideals J_d and L of Z[p1..pr], computed one weight at a time.

Ideals are written as small expression trees (``J(3)``, ``L**2 * J(1)``,
``J(2) + L``) and bound to an ambient ring with :class:`Ideal`.  All ideals
here are homogeneous, so the weight-w part of an ideal is the integer row
span of the products ``m * g`` for generators g and monomials m of
complementary weight.  Every containment statement is therefore checked weight
by weight, up to an explicit bound; nothing here claims more than that.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Optional

from pontcalc.core.linalg import (
    IntMatrix,
    determinant,
    hermite_rows,
    quotient_structure,
    rational_rank,
    rational_row_reduce,
)
from pontcalc.core.polynomial import GradedPolynomial, VarSet, from_coefficients, monomials_of_weight
from pontcalc.errors import HomogeneityError, VarSetError
from pontcalc.reports import LemmaReport
from pontcalc.segre import segre_table

DEFAULT_SEARCH_BOUND = 12
DEFAULT_WEIGHT_BOUND = 10


class _IdealOps:
    def __add__(self, other):
        return Sum(self, other)

    def __mul__(self, other):
        return Product(self, other)

    def __pow__(self, k):
        return Power(self, k)


@dataclass(frozen=True)
class J(_IdealOps):
    """J_d: generated by s_j for j >= d (the whole ring when d <= 0).

    ``extra`` adds the redundant generators s_{d+r}..s_{d+r-1+extra}; used to
    test that the first r generators already suffice.
    """

    d: int
    block: int = 0
    extra: int = 0

    def __str__(self):
        tick = "'" if self.block else ""
        return "J%s(%d)" % (tick, self.d)


@dataclass(frozen=True)
class L(_IdealOps):
    """The augmentation ideal (p1, ..., pr)."""

    block: int = 0

    def __str__(self):
        return "L'" if self.block else "L"


@dataclass(frozen=True)
class Power(_IdealOps):
    base: object
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("ideal power must be nonnegative")

    def __str__(self):
        return "%s^%d" % (_wrap(self.base), self.k)


@dataclass(frozen=True)
class Product(_IdealOps):
    left: object
    right: object

    def __str__(self):
        return "%s*%s" % (_wrap(self.left), _wrap(self.right))


@dataclass(frozen=True)
class Sum(_IdealOps):
    left: object
    right: object

    def __str__(self):
        return "%s + %s" % (self.left, self.right)


def _wrap(e):
    return "(%s)" % e if isinstance(e, (Sum, Product)) else str(e)


@dataclass(frozen=True)
class Ideal:
    """An ideal expression interpreted in Z[p1..pr] (or Z[p1..pr, p1'..pr'] if blocks=2)."""

    expr: object
    r: int
    blocks: int = 1

    @property
    def varset(self):
        return _ambient(self.r, self.blocks)

    def __str__(self):
        return str(self.expr)


@lru_cache(maxsize=None)
def _ambient(r, blocks):
    if blocks == 1:
        return VarSet.pontryagin(r)
    if blocks == 2:
        return VarSet.pontryagin_pair(r)
    raise ValueError("blocks must be 1 or 2")


def _embed_block(poly, r, blocks, block):
    target = _ambient(r, blocks)
    if blocks == 1:
        return poly
    rename = {"p%d" % i: "p%d'" % i for i in range(1, r + 1)} if block else None
    return poly.embed(target, rename)


@lru_cache(maxsize=4096)
def _generators(expr, r, blocks, cap):
    """Homogeneous generators of weight <= cap (heavier ones never reach weight <= cap)."""
    vs = _ambient(r, blocks)
    if isinstance(expr, J):
        if expr.d <= 0:
            return (GradedPolynomial.one(vs),)
        table = segre_table(r)
        gens = []
        for j in range(expr.d, expr.d + r + expr.extra):
            if j <= cap:
                s = table[j]
                if s:
                    gens.append(_embed_block(s, r, blocks, expr.block))
        return tuple(gens)
    if isinstance(expr, L):
        offset = r if expr.block else 0
        out = []
        for i in range(r):
            if vs.weights[offset + i] <= cap:
                out.append(GradedPolynomial.var(vs, vs.names[offset + i]))
        return tuple(out)
    if isinstance(expr, Sum):
        return _dedupe(_generators(expr.left, r, blocks, cap) + _generators(expr.right, r, blocks, cap))
    if isinstance(expr, Product):
        return _product_gens(_generators(expr.left, r, blocks, cap), _generators(expr.right, r, blocks, cap), cap)
    if isinstance(expr, Power):
        gens = (GradedPolynomial.one(vs),)
        base = _generators(expr.base, r, blocks, cap)
        for _ in range(expr.k):
            nxt = _product_gens(gens, base, cap)
            if not nxt or set(nxt) == set(gens):
                # empty, or a fixed point: higher powers cannot change
                return nxt
            gens = nxt
        return gens
    raise TypeError("not an ideal expression: %r" % (expr,))


def _dedupe(gens):
    seen = {}
    for g in gens:
        seen.setdefault(g, None)
    return tuple(seen)


def _product_gens(a, b, cap):
    out = []
    for x in a:
        wx = x.weight
        for y in b:
            if wx + y.weight <= cap:
                out.append(x * y)
    return _dedupe(out)


def generators(ideal, cap):
    return _generators(ideal.expr, ideal.r, ideal.blocks, cap)


@dataclass(frozen=True)
class DegreeSlice:
    """The weight-w part of an ideal as a row lattice over the weight-w monomials."""

    weight: int
    varset: VarSet
    monomials: tuple
    spanning: IntMatrix

    @cached_property
    def hermite(self):
        # pivots taken from the right: the smallest monomials get eliminated
        # first, so the surviving quotient basis prefers early monomials
        n = len(self.monomials)
        rows = [list(reversed(r)) for r in self.spanning.to_rows()]
        H, pivots, _ = hermite_rows(rows, n)
        return [list(reversed(h)) for h in H], [n - 1 - c for c in pivots]

    @cached_property
    def rational_basis(self):
        n = len(self.monomials)
        rows = [list(reversed(r)) for r in self.spanning.to_rows()]
        R, pivots = rational_row_reduce(rows, n)
        return [list(reversed(h)) for h in R], [n - 1 - c for c in pivots]

    @cached_property
    def reducer(self):
        """Rows ``E`` and pivot columns ``P`` with E[i][P[j]] == [i == j].

        The quotient basis is the lexicographically first set of monomials
        whose complement P carries a unimodular minor of the lattice, so
        reduction by E stays integral.  Returns ``(E, P, integral)``; if no
        monomial Z-basis exists, E is the rational echelon form and
        ``integral`` is False.
        """
        H, _ = self.hermite
        k, n = len(H), len(self.monomials)
        if k == 0:
            return [], [], True
        for basis in combinations(range(n), n - k):
            keep = set(basis)
            P = [c for c in range(n) if c not in keep]
            if abs(determinant([[h[j] for j in P] for h in H])) == 1:
                inv = _inverse([[Fraction(h[j]) for j in P] for h in H])
                E = [[int(sum(inv[i][t] * H[t][c] for t in range(k))) for c in range(n)] for i in range(k)]
                return E, P, True
        R, pivots = self.rational_basis
        return R, pivots, False

    @property
    def rank(self):
        return len(self.hermite[0])

    def is_empty(self):
        return self.rank == 0

    def coordinates(self, f):
        index = {m: i for i, m in enumerate(self.monomials)}
        vec = [0] * len(self.monomials)
        for m, c in f.terms.items():
            if m not in index:
                raise HomogeneityError("%s has terms outside weight %d" % (f, self.weight))
            vec[index[m]] = c
        return vec

    def reduce(self, vec, mode="integer"):
        """Remainder of ``vec`` after echelon reduction against the slice.

        In integer mode the remainder is zero iff vec lies in the lattice.
        """
        if mode == "integer":
            H, pivots = self.hermite
            rest = list(vec)
            for h, c in zip(H, pivots):
                q = rest[c] // h[c]
                if q:
                    rest = [a - q * b for a, b in zip(rest, h)]
            return rest
        if mode == "rational":
            R, pivots = self.rational_basis
            rest = list(vec)
            for h, c in zip(R, pivots):
                q = rest[c]
                if q:
                    rest = [a - q * b for a, b in zip(rest, h)]
            return rest
        raise ValueError("mode must be 'integer' or 'rational'")

    def contains_vector(self, vec, mode="integer"):
        return not any(self.reduce(vec, mode))

    def quotient(self):
        """(free rank, torsion invariant factors) of the weight-w quotient."""
        return quotient_structure(self.spanning.to_rows(), len(self.monomials))


def _inverse(square):
    n = len(square)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(square)]
    R, pivots = rational_row_reduce(aug, 2 * n)
    return [row[n:] for row in R]


@lru_cache(maxsize=8192)
def _slice(expr, r, blocks, w):
    vs = _ambient(r, blocks)
    monos = monomials_of_weight(vs, w)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    seen = set()
    for g in _generators(expr, r, blocks, w):
        gw = g.weight
        for m in monomials_of_weight(vs, w - gw):
            row = [0] * len(monos)
            for gm, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(gm, m))]] = c
            key = tuple(row)
            if key not in seen:
                seen.add(key)
                rows.append(row)
    return DegreeSlice(w, vs, monos, IntMatrix.from_rows(rows, len(monos)))


def ideal_degree_slice(ideal, w):
    if w < 0:
        raise ValueError("weight must be nonnegative")
    return _slice(ideal.expr, ideal.r, ideal.blocks, w)


def ideal_contains_poly(ideal, f, mode="integer"):
    if f.varset != ideal.varset:
        raise VarSetError("polynomial and ideal live in different rings")
    if f.is_zero():
        return True
    w = f.weight  # raises HomogeneityError
    sl = ideal_degree_slice(ideal, w)
    return sl.contains_vector(sl.coordinates(f), mode)


@dataclass
class ContainmentReport:
    left: str
    right: str
    max_weight: int
    mode: str
    per_weight: dict = field(default_factory=dict)
    first_failure: Optional[int] = None
    witness: Optional[str] = None

    @property
    def verdict(self):
        return all(self.per_weight.values())

    def __bool__(self):
        return self.verdict


def ideal_contains_ideal(A, B, max_weight, mode="integer"):
    """Check A ⊆ B at each weight 0..max_weight."""
    if (A.r, A.blocks) != (B.r, B.blocks):
        raise VarSetError("ideals live in different rings")
    report = ContainmentReport(str(A), str(B), max_weight, mode)
    for w in range(max_weight + 1):
        sa = ideal_degree_slice(A, w)
        sb = ideal_degree_slice(B, w)
        ok = True
        for row in sa.spanning.to_rows():
            if not sb.contains_vector(row, mode):
                ok = False
                if report.first_failure is None:
                    report.first_failure = w
                    report.witness = str(from_coefficients(sa.varset, sa.monomials, row))
                break
        report.per_weight[w] = ok
    return report


def minimal_k_for_Lk_in_Jn(n, r, search_bound=DEFAULT_SEARCH_BOUND, weight_bound=DEFAULT_WEIGHT_BOUND):
    """Least k <= search_bound with L^k ⊆ J_n up to weight_bound, or None."""
    target = Ideal(J(n), r)
    for k in range(search_bound + 1):
        if ideal_contains_ideal(Ideal(Power(L(), k), r), target, weight_bound):
            return k
    return None


def minimal_s_for_LsJd_in_Jd1(d, r, search_bound=DEFAULT_SEARCH_BOUND, weight_bound=DEFAULT_WEIGHT_BOUND):
    """Least s <= search_bound with L^s J_d ⊆ J_{d+1} up to weight_bound, or None."""
    target = Ideal(J(d + 1), r)
    for s in range(search_bound + 1):
        if ideal_contains_ideal(Ideal(Product(Power(L(), s), J(d)), r), target, weight_bound):
            return s
    return None


def _drop_last(f, smaller):
    """The map p_r -> 0 from Z[p1..pr] to Z[p1..p_{r-1}]."""
    last = len(f.varset) - 1
    return GradedPolynomial(smaller, {m[:last]: c for m, c in f.terms.items() if m[last] == 0})


def verify_exact_sequence(r, d, max_weight):
    """Check Z[p]/J_{d-1,r} --p_r--> Z[p]/J_{d,r} --(p_r->0)--> Z[p']/J_{d,r-1} --> 0.

    Weight W refers to the middle term.  At each W we check that multiplication
    by p_r is well defined (p_r J_{d-1,r} ⊆ J_{d,r}), that its image equals
    the kernel of p_r -> 0 as lattices, and that p_r -> 0 is onto.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    vs = VarSet.pontryagin(r)
    small = VarSet.pontryagin(r - 1)
    left, mid, right = Ideal(J(d - 1), r), Ideal(J(d), r), Ideal(J(d), r - 1)
    pr = GradedPolynomial.var(vs, "p%d" % r)
    report = LemmaReport(
        "exact_sequence", {"r": r, "d": d}, max_weight, True,
    )
    for W in range(max_weight + 1):
        mid_slice = ideal_degree_slice(mid, W)
        monos = mid_slice.monomials
        problem = None
        # well-defined on the quotient
        if W >= r:
            left_slice = ideal_degree_slice(left, W - r)
            for row in left_slice.spanning.to_rows():
                g = from_coefficients(vs, left_slice.monomials, row) * pr
                if not mid_slice.contains_vector(mid_slice.coordinates(g)):
                    problem = ("p_r*J_{d-1} not in J_d", g)
                    break
        # image lattice: p_r * (everything of weight W-r) + J_{d,r}
        image_rows = mid_slice.spanning.to_rows()
        for m in monomials_of_weight(vs, W - r):
            image_rows.append(mid_slice.coordinates(GradedPolynomial.monomial(vs, m) * pr))
        # kernel lattice: monomials divisible by p_r + J_{d,r-1} lifted back
        right_slice = ideal_degree_slice(right, W)
        kernel_rows = [[int(i == j) for j in range(len(monos))] for i, m in enumerate(monos) if m[-1] > 0]
        for row in right_slice.spanning.to_rows():
            lifted = from_coefficients(small, right_slice.monomials, row).embed(vs)
            kernel_rows.append(mid_slice.coordinates(lifted))
        if problem is None:
            problem = _compare_lattices(vs, monos, image_rows, kernel_rows, W)
        # surjectivity of p_r -> 0
        if problem is None:
            onto_rows = right_slice.spanning.to_rows()
            for m in monos:
                g = _drop_last(GradedPolynomial.monomial(vs, m), small)
                if g:
                    onto_rows.append(right_slice.coordinates(g))
            full = len(right_slice.monomials)
            free, torsion = quotient_structure(onto_rows, full)
            if free or torsion:
                problem = ("p_r -> 0 not surjective", None)
        if problem is not None:
            report.verdict = False
            report.first_failure = {"weight": W, "reason": problem[0]}
            report.witness = None if problem[1] is None else str(problem[1])
            break
    return report


def _compare_lattices(vs, monos, image_rows, kernel_rows, W):
    n = len(monos)
    image = DegreeSlice(W, vs, monos, IntMatrix.from_rows(image_rows, n))
    kernel = DegreeSlice(W, vs, monos, IntMatrix.from_rows(kernel_rows, n))
    for row in image_rows:
        if not kernel.contains_vector(row):
            return ("image not inside kernel", from_coefficients(vs, monos, row))
    for row in kernel_rows:
        if not image.contains_vector(row):
            return ("kernel not inside image", from_coefficients(vs, monos, row))
    return None


@dataclass(frozen=True)
class QuotientRank:
    free_rank: int
    torsion: tuple = ()


def quotient_rank_by_weight(r, d, w):
    """Weight-w part of Z[p1..pr]/J_d as an abelian group."""
    sl = ideal_degree_slice(Ideal(J(d), r), w)
    free, torsion = sl.quotient()
    return QuotientRank(free, torsion)


def free_ranks(ideal, max_weight):
    """Rational ranks of the quotient by ``ideal`` at weights 0..max_weight."""
    out = []
    for w in range(max_weight + 1):
        sl = ideal_degree_slice(ideal, w)
        out.append(len(sl.monomials) - rational_rank(sl.spanning))
    return out
