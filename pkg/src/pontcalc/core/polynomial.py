"""Sparse multivariate polynomials over the integers with weighted variables.

A :class:`VarSet` fixes an ordered list of variables together with a positive
integer weight for each.  Monomials are exponent tuples aligned with that
order.  :class:`GradedPolynomial` is an immutable map from monomials to
nonzero Python integers, so coefficients never overflow.

Terms are ordered by weight first, and inside one weight by the
graded-lexicographic order (largest exponent of the first variable first).
That order is used for printing, for degreewise bases and for echelon pivots.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType
from typing import Sequence

from pontcalc.errors import HomogeneityError, NotAUnitError, ParseError, VarSetError

Monomial = tuple  # tuple[int, ...] aligned with VarSet.names


@dataclass(frozen=True)
class VarSet:
    names: tuple
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.names) != len(self.weights):
            raise VarSetError("names and weights differ in length")
        if len(set(self.names)) != len(self.names):
            raise VarSetError("duplicate variable names: %r" % (self.names,))
        if any(w <= 0 for w in self.weights):
            raise VarSetError("variable weights must be positive")

    @classmethod
    def pontryagin(cls, r, prime=False):
        """p1..pr with p_i of weight i (primed copies if ``prime``)."""
        tick = "'" if prime else ""
        return cls(tuple("p%d%s" % (i, tick) for i in range(1, r + 1)), tuple(range(1, r + 1)))

    @classmethod
    def pontryagin_pair(cls, r):
        a, b = cls.pontryagin(r), cls.pontryagin(r, prime=True)
        return cls(a.names + b.names, a.weights + b.weights)

    @classmethod
    def uniform(cls, names):
        names = tuple(names)
        return cls(names, (1,) * len(names))

    def __len__(self):
        return len(self.names)

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise VarSetError("unknown variable %r" % (name,)) from None

    def weight(self, mono):
        return sum(e * w for e, w in zip(mono, self.weights))

    def unit_monomial(self):
        return (0,) * len(self.names)

    def bidegree(self, w):
        """Display bidegree (8w, 4w) of weight ``w``."""
        return (8 * w, 4 * w)


def _mono_key(varset, mono):
    return (varset.weight(mono), tuple(-e for e in mono))


def format_monomial(varset, mono):
    parts = []
    for name, e in zip(varset.names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts) if parts else "1"


class GradedPolynomial:
    """Immutable sparse polynomial over the integers in the variables of a VarSet."""

    __slots__ = ("varset", "_terms", "_hash")

    def __init__(self, varset, terms=None):
        self.varset = varset
        clean = {}
        if terms:
            n = len(varset)
            for mono, c in terms.items():
                c = int(c)
                if c:
                    mono = tuple(mono)
                    if len(mono) != n or any(e < 0 for e in mono):
                        raise ValueError("bad monomial %r for %r" % (mono, varset.names))
                    clean[mono] = c
        self._terms = clean
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, varset):
        return cls(varset)

    @classmethod
    def constant(cls, varset, c):
        return cls(varset, {varset.unit_monomial(): c})

    @classmethod
    def one(cls, varset):
        return cls.constant(varset, 1)

    @classmethod
    def var(cls, varset, name, power=1):
        mono = [0] * len(varset)
        mono[varset.index(name)] = power
        return cls(varset, {tuple(mono): 1})

    @classmethod
    def monomial(cls, varset, mono, coeff=1):
        return cls(varset, {tuple(mono): coeff})

    # inspection ---------------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coefficient(self, mono):
        return self._terms.get(tuple(mono), 0)

    def constant_term(self):
        return self._terms.get(self.varset.unit_monomial(), 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def weights(self):
        return {self.varset.weight(m) for m in self._terms}

    def is_homogeneous(self):
        return len(self.weights()) <= 1

    @property
    def weight(self):
        """Weight of a nonzero homogeneous polynomial (None for zero)."""
        ws = self.weights()
        if not ws:
            return None
        if len(ws) > 1:
            raise HomogeneityError("polynomial is not homogeneous: %s" % self)
        return next(iter(ws))

    def component(self, w):
        vs = self.varset
        return GradedPolynomial(vs, {m: c for m, c in self._terms.items() if vs.weight(m) == w})

    def truncate(self, max_weight):
        vs = self.varset
        return GradedPolynomial(vs, {m: c for m, c in self._terms.items() if vs.weight(m) <= max_weight})

    def sorted_terms(self):
        vs = self.varset
        return sorted(self._terms.items(), key=lambda mc: _mono_key(vs, mc[0]))

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GradedPolynomial):
            if other.varset != self.varset:
                raise VarSetError("varset mismatch: %r vs %r" % (self.varset.names, other.varset.names))
            return other
        if isinstance(other, int):
            return GradedPolynomial.constant(self.varset, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPolynomial(self.varset, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial(self.varset, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return GradedPolynomial(self.varset, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = GradedPolynomial.one(self.varset)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, mono, coeff=1):
        """Multiply by the monomial ``mono`` (times ``coeff``)."""
        return GradedPolynomial(
            self.varset,
            {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self._terms.items()},
        )

    def mul_truncated(self, other, max_weight):
        other = self._coerce(other)
        vs = self.varset
        out = {}
        for m1, c1 in self._terms.items():
            w1 = vs.weight(m1)
            for m2, c2 in other._terms.items():
                if w1 + vs.weight(m2) > max_weight:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return GradedPolynomial(vs, out)

    # change of ring -----------------------------------------------------

    def embed(self, target, rename=None):
        """Reinterpret in ``target``, mapping each variable by name (optionally renamed)."""
        rename = rename or {}
        idx = [target.index(rename.get(n, n)) for n in self.varset.names]
        out = {}
        for m, c in self._terms.items():
            new = [0] * len(target)
            for i, e in zip(idx, m):
                new[i] += e
            out[tuple(new)] = out.get(tuple(new), 0) + c
        return GradedPolynomial(target, out)

    def substitute(self, values):
        """Substitute polynomials (all in one common varset) for variables.

        Variables not named in ``values`` must also exist in the target varset.
        """
        if not values:
            return self
        target = next(iter(values.values())).varset
        images = []
        for name in self.varset.names:
            if name in values:
                images.append(values[name])
            else:
                images.append(GradedPolynomial.var(target, name))
        result = GradedPolynomial.zero(target)
        for m, c in self._terms.items():
            term = GradedPolynomial.constant(target, c)
            for img, e in zip(images, m):
                if e:
                    term = term * img ** e
            result = result + term
        return result

    # comparison / display -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = GradedPolynomial.constant(self.varset, other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.varset == other.varset and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            body = format_monomial(self.varset, m)
            if body == "1":
                body = str(abs(c))
            elif abs(c) != 1:
                body = "%d*%s" % (abs(c), body)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return "GradedPolynomial(%s)" % self


@lru_cache(maxsize=None)
def monomials_of_weight(varset, w):
    """All monomials of exact weight ``w`` in graded-lexicographic order."""
    n = len(varset)
    if w < 0:
        return ()
    out = []

    def rec(i, remaining, prefix):
        if i == n:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        wt = varset.weights[i]
        for e in range(remaining // wt, -1, -1):
            prefix.append(e)
            rec(i + 1, remaining - e * wt, prefix)
            prefix.pop()

    rec(0, w, [])
    return tuple(out)


def elementary_symmetric(k, roots, varset=None):
    """sigma_k of the variables ``roots``; zero when k < 0 or k > len(roots)."""
    roots = tuple(roots)
    if len(set(roots)) != len(roots):
        raise VarSetError("roots must be distinct")
    if varset is None:
        varset = VarSet.uniform(roots)
    if k < 0 or k > len(roots):
        return GradedPolynomial.zero(varset)
    idx = [varset.index(r) for r in roots]
    terms = {}
    for combo in combinations(idx, k):
        mono = [0] * len(varset)
        for i in combo:
            mono[i] = 1
        terms[tuple(mono)] = 1
    return GradedPolynomial(varset, terms)


def series_inverse_truncated(f, N):
    """Weight components g_0..g_N of 1/f, for f with constant term 1."""
    if f.constant_term() != 1 or (f.component(0) - 1):
        raise NotAUnitError("constant term of %s is not 1" % f)
    vs = f.varset
    pieces = [f.component(i) for i in range(N + 1)]
    g = [GradedPolynomial.one(vs)]
    for n in range(1, N + 1):
        acc = GradedPolynomial.zero(vs)
        for i in range(1, n + 1):
            if pieces[i]:
                acc = acc - pieces[i] * g[n - i]
        g.append(acc)
    return g


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*'*)|(?P<op>[-+*^]))")


def parse_polynomial(text, varset):
    """Parse the canonical text form (``p1^2 - 2*p1*p2 + 1``) into ``varset``."""
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(pos, {"integer", "variable", "operator"})
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    i = 0

    def peek():
        return tokens[i]

    def take(kind, value=None):
        nonlocal i
        tok = tokens[i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ParseError(tok[2], {value or kind})
        i += 1
        return tok

    def factor():
        tok = peek()
        if tok[0] == "int":
            base = GradedPolynomial.constant(varset, int(take("int")[1]))
        elif tok[0] == "name":
            base = GradedPolynomial.var(varset, take("name")[1])
        else:
            raise ParseError(tok[2], {"integer", "variable"})
        if peek()[1] == "^":
            take("op", "^")
            base = base ** int(take("int")[1])
        return base

    def term():
        t = factor()
        while peek()[1] == "*":
            take("op", "*")
            t = t * factor()
        return t

    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take("op")[1] == "-" else 1
    total = term() * sign
    while peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take("op")[1] == "-" else 1
        total = total + term() * sign
    if peek()[0] != "end":
        raise ParseError(peek()[2], {"+", "-", "end of input"})
    return total


def coefficients_in(f: GradedPolynomial, basis: Sequence[Monomial]) -> list:
    """Coordinate vector of ``f`` on a list of monomials (f must be supported there)."""
    index = {m: i for i, m in enumerate(basis)}
    vec = [0] * len(basis)
    for m, c in f.terms.items():
        if m not in index:
            raise HomogeneityError("monomial %s outside the given basis" % format_monomial(f.varset, m))
        vec[index[m]] = c
    return vec


def from_coefficients(varset: VarSet, basis: Sequence[Monomial], vec: Sequence[int]) -> GradedPolynomial:
    return GradedPolynomial(varset, {m: c for m, c in zip(basis, vec)})

