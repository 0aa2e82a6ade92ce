import threading

import pytest

from pontcalc.core import GradedPolynomial, VarSet, parse_polynomial
from pontcalc.errors import HomogeneityError
from pontcalc.ideals import (
    J,
    L,
    Ideal,
    ideal_contains_ideal,
    ideal_contains_poly,
    ideal_degree_slice,
    minimal_k_for_Lk_in_Jn,
    minimal_s_for_LsJd_in_Jd1,
    quotient_rank_by_weight,
    verify_exact_sequence,
)
from pontcalc.segre import segre, segre_generators, segre_table

import oracles


def P(text, r):
    return parse_polynomial(text, VarSet.pontryagin(r))


class TestSegre:
    def test_examples(self):
        assert segre(3, 0) == 1
        assert segre(3, -2).is_zero()
        assert str(segre(2, 2)) == "p1^2 - p2"
        assert str(segre(1, 3)) == "-p1^3"

    def test_generators(self):
        assert [str(g) for g in segre_generators(1, 2)] == ["p1^2"]
        assert [str(g) for g in segre_generators(2, 1)] == ["-p1", "p1^2 - p2"]
        assert [str(g) for g in segre_generators(2, 2)] == ["p1^2 - p2", "-p1^3 + 2*p1*p2"]

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_matches_sympy_series(self, r):
        expected = oracles.segre_series(r, 10)
        for j in range(11):
            assert oracles.to_sympy(segre(r, j)) == expected[j]

    def test_homogeneous(self):
        for j in range(1, 9):
            assert segre(3, j).weight == j

    def test_concurrent_table(self):
        table = segre_table(3)
        out = {}

        def work(j):
            out[j] = table[j]

        threads = [threading.Thread(target=work, args=(j,)) for j in range(20, 0, -1)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        for j in range(1, 21):
            assert out[j] == segre(3, j)


class TestSlices:
    def test_empty_below_d(self):
        for w in range(4):
            assert ideal_degree_slice(Ideal(J(4), 2), w).is_empty()

    def test_J0_is_everything(self):
        for w in range(6):
            sl = ideal_degree_slice(Ideal(J(0), 2), w)
            assert sl.rank == len(sl.monomials)
            assert sl.quotient() == (0, ())

    def test_J1_weight2(self):
        I = Ideal(J(1), 2)
        assert ideal_contains_poly(I, P("p1^2", 2))
        assert ideal_contains_poly(I, P("p2", 2))

    def test_containment_examples(self):
        assert ideal_contains_poly(Ideal(J(2), 1), P("p1^2", 1))
        assert not ideal_contains_poly(Ideal(J(2), 1), P("p1", 1))
        assert ideal_contains_poly(Ideal(L(), 3), P("p1*p2", 3))

    def test_inhomogeneous_rejected(self):
        with pytest.raises(HomogeneityError):
            ideal_contains_poly(Ideal(J(1), 2), P("p1 + p1^2", 2))

    def test_integer_vs_rational(self):
        from pontcalc.core import IntMatrix
        from pontcalc.ideals import DegreeSlice
        vs = VarSet.pontryagin(1)
        sl = DegreeSlice(1, vs, ((1,),), IntMatrix.from_rows([[2]]))
        assert not sl.contains_vector([1])
        assert sl.contains_vector([1], mode="rational")
        assert sl.contains_vector([6])


class TestContainment:
    def test_examples(self):
        rep = ideal_contains_ideal(Ideal(J(4), 2), Ideal(L() ** 2, 2), 8)
        assert rep.verdict and all(rep.per_weight.values())
        assert ideal_contains_ideal(Ideal(J(3), 2), Ideal(J(2), 2), 8)
        bad = ideal_contains_ideal(Ideal(L(), 1), Ideal(J(2), 1), 4)
        assert not bad and bad.first_failure == 1 and bad.witness == "p1"

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_J_rk_in_Lk_against_oracle(self, r):
        for k in range(4):
            ours = ideal_contains_ideal(Ideal(J(r * k), r), Ideal(L() ** k, r), 8)
            ref = all(oracles.j_contained_in_Lk(r, r * k, k, w) for w in range(9))
            assert bool(ours) == ref is True

    def test_minimal_k_examples(self):
        assert minimal_k_for_Lk_in_Jn(1, 2) == 1
        assert minimal_k_for_Lk_in_Jn(2, 1) == 2
        for r in (1, 2, 3):
            assert minimal_k_for_Lk_in_Jn(0, r) == 0

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_minimal_k_against_oracle(self, r):
        for n in range(0, 5):
            k = 0
            while not all(oracles.Lk_contained_in_J(r, k, n, w) for w in range(11)):
                k += 1
            assert minimal_k_for_Lk_in_Jn(n, r) == k

    def test_minimal_s_examples(self):
        assert minimal_s_for_LsJd_in_Jd1(0, 1) == 1
        assert minimal_s_for_LsJd_in_Jd1(1, 1) == 1
        assert minimal_s_for_LsJd_in_Jd1(-1, 2) == 0

    def test_power_fixed_point(self):
        # J(0) is the whole ring; a huge power must still be cheap
        I = Ideal(J(0) ** (10 ** 18), 2)
        assert ideal_degree_slice(I, 3).quotient() == (0, ())

    def test_ideal_text(self):
        assert str(J(4)) == "J(4)"
        assert str(L() ** 2) == "L^2"


class TestExactness:
    def test_examples(self):
        assert verify_exact_sequence(2, 2, 8)
        assert verify_exact_sequence(1, 1, 6)
        assert verify_exact_sequence(2, 0, 4)

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_middle_ranks_add_up(self, r):
        # left -> mid -> right -> 0 exact forces right <= mid <= right + left
        d = 3
        for W in range(9):
            mid = oracles.quotient_slice(r, d, W)[0]
            right = oracles.quotient_slice(r - 1, d, W)[0] if r > 1 else int(W == 0)
            left = oracles.quotient_slice(r, d - 1, W - r)[0] if W >= r else 0
            assert right <= mid <= right + left


class TestQuotientRanks:
    def test_examples(self):
        assert quotient_rank_by_weight(1, 3, 2).free_rank == 1
        assert quotient_rank_by_weight(1, 3, 2).torsion == ()
        assert quotient_rank_by_weight(1, 3, 3).free_rank == 0
        assert quotient_rank_by_weight(2, 2, 1).free_rank == 1

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_against_smith_oracle(self, r):
        for d in range(0, 5):
            for w in range(9):
                q = quotient_rank_by_weight(r, d, w)
                assert (q.free_rank, tuple(q.torsion)) == oracles.quotient_slice(r, d, w)
