"""Reference computations that share no code with the package.

Everything here goes through sympy expressions and sympy matrices, so the
tests compare two implementations that fail in different ways.
"""

from functools import lru_cache
from itertools import product

import sympy
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ


def p_symbols(r):
    return sympy.symbols(" ".join("p%d" % i for i in range(1, r + 1)), seq=True) if r else ()


@lru_cache(maxsize=None)
def segre_series(r, jmax):
    """[s_0, ..., s_jmax] from the Taylor expansion of 1/(1 + p1 t + ... + pr t^r)."""
    t = sympy.Symbol("t")
    ps = p_symbols(r)
    denom = sympy.Integer(1) + sum(p * t ** (i + 1) for i, p in enumerate(ps))
    ser = sympy.series(1 / denom, t, 0, jmax + 1).removeO()
    ser = sympy.expand(ser)
    return tuple(sympy.expand(ser.coeff(t, j)) for j in range(jmax + 1))


def to_sympy(poly):
    """GradedPolynomial -> sympy expression, through its printed form."""
    text = str(poly).replace("^", "**").replace("'", "_prime")
    names = {n.replace("'", "_prime"): sympy.Symbol(n.replace("'", "_prime")) for n in poly.varset.names}
    return sympy.expand(sympy.sympify(text, locals=names))


def weighted_monomials(r, w):
    """Exponent vectors e with sum (i+1) e_i = w, over p1..pr."""
    out = []
    for e in product(*(range(w // (i + 1) + 1) for i in range(r))):
        if sum((i + 1) * x for i, x in enumerate(e)) == w:
            out.append(e)
    return out


def _mono(ps, e):
    m = sympy.Integer(1)
    for p, x in zip(ps, e):
        m *= p ** x
    return m


@lru_cache(maxsize=None)
def j_rows(r, d, w, extra=0):
    """Monomials of weight w and integer rows spanning J_d there.

    J_d is spanned in weight w by m * s_j over j in [d, d+r-1] and monomials m
    of weight w - j; those generate J_d as an ideal because every later s_j
    lies in the ideal they generate.
    """
    ps = p_symbols(r)
    monos = weighted_monomials(r, w)
    if d <= 0:
        return monos, [[int(i == j) for j in range(len(monos))] for i in range(len(monos))]
    s = segre_series(r, max(w, d + r + extra))
    rows = []
    for j in range(d, d + r + extra):
        if j > w:
            break
        for e in weighted_monomials(r, w - j):
            f = sympy.Poly(sympy.expand(_mono(ps, e) * s[j]), *ps)
            rows.append([int(f.coeff_monomial(_mono(ps, m))) for m in monos])
    return monos, rows


def _lattice_invariants(rows):
    if not rows or not any(any(r) for r in rows):
        return 0, 1
    M = sympy.Matrix(rows)
    rank = M.rank()
    snf = smith_normal_form(M, domain=ZZ)
    det = 1
    for i in range(min(snf.shape)):
        if snf[i, i]:
            det *= abs(int(snf[i, i]))
    return rank, det


def lattice_contains_all(rows, vectors):
    """Every vector lies in the Z-span of rows.

    Adding vectors can only enlarge the lattice, and a sublattice of equal
    rank and equal index is the whole lattice.
    """
    vectors = [list(v) for v in vectors if any(v)]
    if not vectors:
        return True
    return _lattice_invariants(list(rows) + vectors) == _lattice_invariants(list(rows))


def lattice_contains(rows, v):
    return lattice_contains_all(rows, [v])


@lru_cache(maxsize=None)
def quotient_slice(r, d, w):
    """(free rank, nontrivial invariant factors) of Z[p1..pr]/J_d in weight w."""
    monos, rows = j_rows(r, d, w)
    n = len(monos)
    if not rows or not any(any(x) for x in rows):
        return n, ()
    M = sympy.Matrix(rows)
    snf = smith_normal_form(M, domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    return n - M.rank(), tuple(x for x in diag if x > 1)


def j_contained_in_Lk(r, d, k, w):
    """J_d in weight w lies in L^k iff no spanning row touches a monomial of degree < k."""
    monos, rows = j_rows(r, d, w)
    low = [i for i, m in enumerate(monos) if sum(m) < k]
    return all(row[i] == 0 for row in rows for i in low)


def Lk_contained_in_J(r, k, n, w):
    """L^k in weight w is spanned by the monomials of degree >= k."""
    monos, rows = j_rows(r, n, w)
    units = [[int(i == j) for j in range(len(monos))] for i, m in enumerate(monos) if sum(m) >= k]
    return lattice_contains_all(rows, units)


def same_lattice(rows_a, rows_b):
    """Two row lattices are equal iff each contains the other's rows."""
    return lattice_contains_all(rows_a, rows_b) and lattice_contains_all(rows_b, rows_a)


def ls_jd_in_jd1(r, s, d, w):
    """L^s J_d in weight w is spanned by m * g, m a monomial of degree s, g in J_d."""
    monos, target = j_rows(r, d + 1, w)
    index = {m: i for i, m in enumerate(monos)}
    vectors = []
    for wm in range(w + 1):
        for m in weighted_monomials(r, wm):
            if sum(m) != s:
                continue
            inner, rows = j_rows(r, d, w - wm)
            for row in rows:
                v = [0] * len(monos)
                for e, c in zip(inner, row):
                    if c:
                        v[index[tuple(a + b for a, b in zip(e, m))]] += c
                vectors.append(v)
    return lattice_contains_all(target, vectors)


def grassmann_rank(n, s):
    """Total free rank of Z[p1..pr]/J_{d-r+1} summed over weights 0..r(d-r), plus torsion found."""
    r, d = n // 2, s // 2
    total, torsion = 0, []
    for w in range(r * (d - r) + 1):
        free, tors = quotient_slice(r, d - r + 1, w)
        total += free
        torsion.extend(tors)
    return total, torsion


def count_monomials(r, w, blocks=1):
    vs = r * blocks
    if vs == 0:
        return 1 if w == 0 else 0
    weights = [i + 1 for i in range(r)] * blocks
    # coefficient of t^w in prod 1/(1 - t^a)
    coeffs = [1] + [0] * w
    for a in weights:
        for k in range(a, w + 1):
            coeffs[k] += coeffs[k - a]
    return coeffs[w]


def elementary(k, symbols):
    """sigma_k via the generating polynomial prod (1 + x t)."""
    t = sympy.Symbol("t")
    prod = sympy.Integer(1)
    for x in symbols:
        prod *= 1 + x * t
    return sympy.expand(prod).coeff(t, k) if k >= 0 else sympy.Integer(0)
