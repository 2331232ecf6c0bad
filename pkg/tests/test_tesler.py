import json
import random

import pytest

from teslab.qt_algebra import M, ONE, Q, T, LaurentPolyQT, qt_int
from teslab.tesler import (
    TeslerMatrix,
    compositions,
    enumerate_permutational,
    enumerate_tesler,
    parse_hooks,
    tes,
    tes_first_row_chunks,
)

MIXED_SIGN_4X4 = TeslerMatrix([
    [0, 1, 0, 2],
    [0, -1, -1, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
])


class TestValidation:
    def test_mixed_sign_row(self):
        with pytest.raises(ValueError, match="row not sign-homogeneous"):
            TeslerMatrix([[1, -1], [0, 1]])

    def test_zero_row(self):
        with pytest.raises(ValueError, match="zero row"):
            TeslerMatrix([[0, 0], [0, 1]])

    def test_lower_triangle(self):
        with pytest.raises(ValueError, match="not upper triangular"):
            TeslerMatrix([[1, 0], [1, 1]])

    def test_identity_valid(self):
        assert TeslerMatrix([[1, 0], [0, 1]]).hooks() == (1, 1)

    def test_json_roundtrip(self):
        blob = json.dumps(MIXED_SIGN_4X4.to_json())
        assert TeslerMatrix.from_json(json.loads(blob)) == MIXED_SIGN_4X4


class TestHooks:
    def test_mixed_sign_example(self):
        assert MIXED_SIGN_4X4.hooks() == (3, -3, 2, -1)

    def test_identity(self):
        assert TeslerMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).hooks() == (1, 1, 1)

    def test_recursion_illustration_recomputed(self):
        # direct application of the definition, resolving the open question:
        # the 3x3 matrix from the recursion illustration has hooks (3,-5,2)
        U = TeslerMatrix([[0, 3, 0], [0, -1, -1], [0, 0, 1]])
        assert U.hooks() == (3, -5, 2)

    def test_hooks_parse(self):
        assert parse_hooks("2,0,-3,1") == (2, 0, -3, 1)
        with pytest.raises(ValueError):
            parse_hooks("1,x")


class TestEnumeration:
    def test_alpha_11(self):
        got = list(enumerate_tesler((1, 1)))
        assert [m.rows for m in got] == [((1, 0), (0, 1)), ((0, 1), (0, 2))]

    def test_alpha_20(self):
        got = {m.rows for m in enumerate_tesler((2, 0))}
        assert got == {((1, 1), (0, 1)), ((0, 2), (0, 2))}

    def test_alpha1_zero_empty(self):
        assert list(enumerate_tesler((0, 1))) == []

    def test_hooks_invariant(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randint(1, 4)
            alpha = tuple(rng.randint(-2, 2) for _ in range(n))
            for U in enumerate_tesler(alpha):
                assert U.hooks() == alpha
                TeslerMatrix(U.rows)  # revalidates all three conditions

    def test_known_counts_for_ones(self):
        # |T(1^n)| = 1, 2, 7, 40, 357 for n = 1..5
        for n, count in [(1, 1), (2, 2), (3, 7), (4, 40), (5, 357)]:
            assert sum(1 for _ in enumerate_tesler((1,) * n)) == count


class TestPermutational:
    def test_alpha_11_all_permutational(self):
        assert (sorted(m.rows for m in enumerate_permutational((1, 1)))
                == sorted(m.rows for m in enumerate_tesler((1, 1))))

    def test_known_permutational_member(self):
        target = TeslerMatrix([[0, 2, 0, 0], [0, 0, 0, 2], [0, 0, 0, 3], [0, 0, 0, 6]])
        assert target in list(enumerate_permutational((2, 0, 3, 1)))

    def test_count_1_1_1(self):
        assert sum(1 for _ in enumerate_permutational((1, 1, 1))) == 6

    def test_subset_of_enumeration(self):
        rng = random.Random(5)
        for _ in range(25):
            n = rng.randint(1, 4)
            alpha = tuple(rng.randint(-2, 2) for _ in range(n))
            full = {m.rows for m in enumerate_tesler(alpha)}
            perm = {m.rows for m in enumerate_permutational(alpha)}
            assert perm == {r for r in full
                            if all(sum(1 for v in row if v) == 1 for r2 in [r] for row in r2)}


class TestWeight:
    def test_identity_weight(self):
        assert TeslerMatrix([[1, 0], [0, 1]]).weight() == ONE

    def test_second_matrix(self):
        assert TeslerMatrix([[0, 1], [0, 2]]).weight() == Q + T

    def test_mixed_sign_4x4(self):
        qt = Q * T
        expected = -(M * M) * (Q + T) * (qt ** -2)
        assert MIXED_SIGN_4X4.weight() == expected

    def test_negation_relation(self):
        # wt(-U) = (-1/qt)^n * bar(wt(U))
        rng = random.Random(9)
        for _ in range(30):
            n = rng.randint(1, 4)
            alpha = tuple(rng.randint(-2, 2) for _ in range(n))
            for U in enumerate_tesler(alpha):
                lhs = U.negated().weight()
                rhs = (-(Q * T) ** -1) ** n * U.weight().bar()
                assert lhs == rhs

    def test_t1_vanishes_unless_permutational(self):
        for U in enumerate_tesler((1, 1, 1)):
            w1 = U.weight().specialize(t=1)
            if U.is_permutational():
                assert not w1.is_zero()
            else:
                assert w1.is_zero()

    def test_t1_reduces_to_permutational_sum(self):
        rng = random.Random(29)
        for _ in range(20):
            n = rng.randint(1, 4)
            alpha = tuple(rng.randint(-2, 2) for _ in range(n))
            perm_sum = LaurentPolyQT()
            for U in enumerate_permutational(alpha):
                perm_sum = perm_sum + U.weight().specialize(t=1)
            assert tes(alpha).specialize(t=1) == perm_sum


class TestTes:
    def test_single_one(self):
        assert tes((1,)) == ONE

    def test_one_one(self):
        assert tes((1, 1)) == ONE + Q + T

    def test_two_zero(self):
        expected = (Q + T) * (Q + T) - M
        assert tes((2, 0)) == expected
        # cross-check against the binomial closed form at k=1
        assert tes((2, 0)) == qt_int(3) + qt_int(2) - qt_int(1)

    def test_leading_zero_vanishes(self):
        assert tes((0, 1)).is_zero()
        assert tes((0, -2, 1)).is_zero()

    def test_matches_weight_sum(self):
        rng = random.Random(17)
        for _ in range(40):
            n = rng.randint(1, 4)
            alpha = tuple(rng.randint(-2, 2) for _ in range(n))
            total = LaurentPolyQT()
            for U in enumerate_tesler(alpha):
                total = total + U.weight()
            assert tes(alpha) == total

    def test_q_t_symmetry(self):
        # every factor of a weight is invariant under exchanging q and t
        rng = random.Random(37)
        for _ in range(25):
            n = rng.randint(1, 4)
            alpha = tuple(rng.randint(-2, 2) for _ in range(n))
            value = tes(alpha)
            assert value.swap_qt() == value

    def test_chunked_fold_is_associative(self):
        for alpha in [(1, 1, 1), (2, -1, 1), (1, 2, 0, -1)]:
            whole = tes(alpha)
            for chunks in (1, 2, 3, 5):
                parts = tes_first_row_chunks(alpha, chunks)
                total = LaurentPolyQT()
                for p in reversed(parts):
                    total = total + p
                assert total == whole


class TestCompositions:
    def test_colex_order(self):
        assert compositions(2, 2) == ((2, 0), (1, 1), (0, 2))

    def test_empty(self):
        assert compositions(0, 0) == ((),)
        assert compositions(1, 0) == ()
