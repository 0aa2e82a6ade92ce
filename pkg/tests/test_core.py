import pytest
from hypothesis import given, settings, strategies as st

from pontcalc.core import (
    GradedPolynomial,
    IntMatrix,
    VarSet,
    elementary_symmetric,
    lattice_membership,
    monomials_of_weight,
    parse_polynomial,
    rational_rank,
    series_inverse_truncated,
)
from pontcalc.core.linalg import determinant, hermite_rows, invariant_factors, quotient_structure
from pontcalc.errors import DimensionError, HomogeneityError, NotAUnitError, VarSetError

import oracles

VS = VarSet.pontryagin(2)
p1 = GradedPolynomial.var(VS, "p1")
p2 = GradedPolynomial.var(VS, "p2")


def P(text, vs=VS):
    return parse_polynomial(text, vs)


class TestArithmetic:
    def test_additive_inverse(self):
        assert (p1 + (-p1)).is_zero()

    def test_cancellation(self):
        assert (p1 ** 2 - p2) + p2 == p1 ** 2

    def test_disjoint_supports(self):
        f = 1 + p1
        assert len(f) == 2
        assert f.weights() == {0, 1}

    def test_products(self):
        assert (p1 * p1).weight == 2
        assert (1 + p1) * (1 - p1) == 1 - p1 ** 2
        assert (GradedPolynomial.zero(VS) * p2).is_zero()

    def test_varset_mismatch(self):
        other = GradedPolynomial.var(VarSet.pontryagin(1), "p1")
        with pytest.raises(VarSetError):
            p1 + other
        with pytest.raises(VarSetError):
            p1 * other

    def test_weight_of_inhomogeneous(self):
        with pytest.raises(HomogeneityError):
            (1 + p1).weight

    def test_printing(self):
        assert str(-p1 ** 3 + 2 * p1 * p2) == "-p1^3 + 2*p1*p2"
        assert str(GradedPolynomial.zero(VS)) == "0"
        assert str(1 - p1) == "1 - p1"

    def test_parse_round_trip(self):
        for text in ["0", "1", "-p1^3 + 2*p1*p2", "p1^2 - p2", "3*p2^2"]:
            assert str(P(text)) == text

    def test_substitute(self):
        f = p1 ** 2 + p2
        assert f.substitute({"p2": p1 ** 2}) == 2 * p1 ** 2

    def test_truncated_product(self):
        f = 1 + p1 + p2
        assert f.mul_truncated(f, 2) == (f * f).truncate(2)


coeff = st.integers(-5, 5)
polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 2)), coeff, max_size=6
).map(lambda d: GradedPolynomial(VS, d))


@settings(max_examples=150, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_product_matches_sympy(a, b):
    assert oracles.to_sympy(a * b) == (oracles.to_sympy(a) * oracles.to_sympy(b)).expand()


@settings(max_examples=100, deadline=None)
@given(polys)
def test_print_parse_round_trip(a):
    assert P(str(a)) == a


class TestMonomials:
    def test_examples(self):
        assert monomials_of_weight(VS, 2) == ((2, 0), (0, 1))
        assert monomials_of_weight(VarSet.pontryagin(3), 0) == ((0, 0, 0),)
        assert monomials_of_weight(VarSet.pontryagin(1), 3) == ((3,),)

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_counts_match_partition_oracle(self, r):
        vs = VarSet.pontryagin(r)
        for w in range(10):
            monos = monomials_of_weight(vs, w)
            assert len(set(monos)) == len(monos) == oracles.count_monomials(r, w)
            assert all(vs.weight(m) == w for m in monos)


class TestElementary:
    R = VarSet.uniform(["x_a", "x_b"])

    def test_examples(self):
        assert str(elementary_symmetric(1, ["x_a", "x_b"], self.R)) == "x_a + x_b"
        assert str(elementary_symmetric(2, ["x_a", "x_b"], self.R)) == "x_a*x_b"
        assert elementary_symmetric(3, ["x_a", "x_b"], self.R).is_zero()

    def test_against_generating_function(self):
        names = ["x_a", "x_b", "x_c", "x_d"]
        vs = VarSet.uniform(names)
        import sympy
        syms = sympy.symbols(names)
        for k in range(6):
            assert oracles.to_sympy(elementary_symmetric(k, names, vs)) == oracles.elementary(k, syms)


class TestSeriesInverse:
    V1 = VarSet.pontryagin(1)

    def test_examples(self):
        q = GradedPolynomial.var(self.V1, "p1")
        assert series_inverse_truncated(1 + q, 2) == [1, -q, q ** 2]
        assert series_inverse_truncated(GradedPolynomial.one(VS), 3) == [1, 0, 0, 0]
        assert series_inverse_truncated(1 + p1 + p2, 2) == [1, -p1, p1 ** 2 - p2]

    def test_not_a_unit(self):
        with pytest.raises(NotAUnitError):
            series_inverse_truncated(2 + p1, 3)
        with pytest.raises(NotAUnitError):
            series_inverse_truncated(p1, 3)

    def test_is_inverse(self):
        f = 1 + 3 * p1 - p2 + p1 * p2
        inv = series_inverse_truncated(f, 6)
        total = sum(inv[1:], inv[0])
        assert f.mul_truncated(total, 6) == 1


class TestLattice:
    def test_examples(self):
        m = lattice_membership(IntMatrix.from_rows([[2]]), [4])
        assert m and list(m.certificate) == [2]
        assert not lattice_membership(IntMatrix.from_rows([[2]]), [3])
        assert lattice_membership(IntMatrix.identity(3), [7, -1, 5])

    def test_dimension_error(self):
        with pytest.raises(DimensionError):
            lattice_membership(IntMatrix.identity(2), [1, 2, 3])

    def test_rank_examples(self):
        assert rational_rank(IntMatrix.identity(3)) == 3
        assert rational_rank(IntMatrix.zeros(2, 3)) == 0
        assert rational_rank(IntMatrix.from_rows([[1, 2], [2, 4]])) == 1

    @settings(max_examples=150, deadline=None)
    @given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=4),
           st.lists(st.integers(-3, 3), min_size=4, max_size=4))
    def test_membership_and_rank_against_sympy(self, rows, combo):
        import sympy
        M = IntMatrix.from_rows(rows)
        assert rational_rank(M) == sympy.Matrix(rows).rank()
        v = [sum(c * row[j] for c, row in zip(combo, rows)) for j in range(3)]
        res = lattice_membership(M, v)
        assert res
        back = [sum(c * row[j] for c, row in zip(res.certificate, rows)) for j in range(3)]
        assert back == v

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=3, max_size=3))
    def test_determinant_against_sympy(self, rows):
        import sympy
        assert determinant(IntMatrix.from_rows(rows)) == sympy.Matrix(rows).det()

    def test_hermite_is_echelon(self):
        H, pivots, U = hermite_rows([[4, 6, 2], [2, 3, 1], [0, 2, 8]], 3, transform=True)
        assert len(pivots) == 2
        assert all(H[i][c] > 0 for i, c in enumerate(pivots))

    def test_quotient_structure(self):
        assert invariant_factors(IntMatrix.from_rows([[2, 0], [0, 3]])) == (1, 6)
        free, torsion = quotient_structure(IntMatrix.from_rows([[2, 0]]), 2)
        assert free == 1 and list(torsion) == [2]
