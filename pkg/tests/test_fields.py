"""Exact F_p linear algebra, cross-checked against brute force."""

import itertools
import random

import pytest

from qsol import fields
from qsol.errors import DependentInput
from qsol.fields import (
    FpMatrix,
    FpVector,
    PrimeModulus,
    complete_basis,
    in_row_space,
    inverse,
    is_prime,
    iter_vectors,
    kernel_basis,
    rank,
    rank_of_vectors,
    row_space,
    row_space_vectors,
    rref,
)


def random_matrix(rng, modulus, nrows, ncols):
    return FpMatrix.from_rows(
        modulus, [[rng.randrange(modulus.p) for _ in range(ncols)] for _ in range(nrows)], ncols
    )


class TestPrimeModulus:
    def test_accepts_all_primes_up_to_31(self):
        for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]:
            assert PrimeModulus(p).p == p

    @pytest.mark.parametrize("bad", [0, 1, 4, 6, 9, 15, 33, 37, -3])
    def test_rejects_non_primes_and_large_primes(self, bad):
        with pytest.raises(ValueError):
            PrimeModulus(bad)

    def test_inverse(self):
        mod = PrimeModulus(7)
        for a in range(1, 7):
            assert (a * mod.inv(a)) % 7 == 1

    def test_is_prime_matches_trial_division(self):
        for n in range(-2, 100):
            expected = n > 1 and all(n % d for d in range(2, n))
            assert is_prime(n) == expected


class TestVectorsAndMatrices:
    def test_entries_reduced_eagerly(self, mod3):
        v = FpVector(mod3, (4, -1, 6))
        assert v.entries == (1, 2, 0)

    def test_vector_arithmetic(self, mod3):
        u = FpVector(mod3, (1, 2, 0))
        v = FpVector(mod3, (2, 2, 1))
        assert (u + v).entries == (0, 1, 1)
        assert (u - v).entries == (2, 0, 2)
        assert u.scale(2).entries == (2, 1, 0)
        assert u.dot(v) == (1 * 2 + 2 * 2) % 3

    def test_shape_mismatch_raises(self, mod2, mod3):
        with pytest.raises(ValueError):
            FpVector(mod2, (1, 0)) + FpVector(mod2, (1, 0, 1))
        with pytest.raises(ValueError):
            FpVector(mod2, (1, 0)) + FpVector(mod3, (1, 0))

    def test_matmul_against_plain_loop(self, mod3):
        rng = random.Random(11)
        for _ in range(25):
            a = random_matrix(rng, mod3, 3, 4)
            b = random_matrix(rng, mod3, 4, 2)
            prod = a @ b
            for i in range(3):
                for j in range(2):
                    expected = sum(a.rows[i][t] * b.rows[t][j] for t in range(4)) % 3
                    assert prod.rows[i][j] == expected

    def test_transpose_round_trip(self, mod2):
        rng = random.Random(5)
        m = random_matrix(rng, mod2, 3, 5)
        assert m.transpose().transpose() == m

    def test_ragged_rows_rejected(self, mod2):
        with pytest.raises(ValueError):
            FpMatrix(mod2, ((1, 0), (1,)), 2)


class TestRref:
    def test_fixed_example(self, mod2):
        m = FpMatrix.from_rows(mod2, [(1, 1, 0), (1, 0, 1), (0, 1, 1)], 3)
        red = rref(m)
        assert red.rank == 2
        assert red.pivots == (0, 1)
        assert red.matrix.rows == ((1, 0, 1), (0, 1, 1), (0, 0, 0))

    def test_rref_is_idempotent(self, mod3):
        rng = random.Random(2)
        for _ in range(50):
            m = random_matrix(rng, mod3, 4, 5)
            once = rref(m).matrix
            assert rref(once).matrix == once

    def test_rank_via_row_space_enumeration(self, mod3):
        # |row space| = p^rank, checked by enumerating the span
        rng = random.Random(3)
        for _ in range(20):
            m = random_matrix(rng, mod3, 3, 4)
            assert len(row_space_vectors(m)) == 3 ** rank(m)

    def test_rank_of_vectors_matches_rref_both_paths(self):
        rng = random.Random(7)
        for p in (2, 3, 5):
            mod = PrimeModulus(p)
            for _ in range(60):
                vecs = [[rng.randrange(p) for _ in range(5)] for _ in range(rng.randrange(1, 5))]
                assert rank_of_vectors(p, vecs) == rank(FpMatrix.from_rows(mod, vecs, 5))

    def test_rank_of_vectors_empty(self):
        assert rank_of_vectors(2, []) == 0


class TestKernelAndInverse:
    def test_kernel_annihilates_and_has_complementary_rank(self):
        rng = random.Random(13)
        for p in (2, 3, 5):
            mod = PrimeModulus(p)
            for _ in range(30):
                m = random_matrix(rng, mod, 3, 5)
                ker = kernel_basis(m)
                assert rank(m) + ker.nrows == 5
                for row in ker.rows:
                    assert (m @ FpVector(mod, row)).is_zero()

    def test_kernel_basis_is_canonical(self, mod2):
        m = FpMatrix.from_rows(mod2, [(1, 0, 1, 1), (0, 1, 1, 0)], 4)
        ker = kernel_basis(m)
        assert rref(ker).matrix.rows[: ker.nrows] == ker.rows

    def test_inverse_round_trip(self):
        rng = random.Random(17)
        for p in (2, 3, 7):
            mod = PrimeModulus(p)
            ident = FpMatrix.identity(mod, 4)
            found = 0
            while found < 10:
                m = random_matrix(rng, mod, 4, 4)
                if rank(m) < 4:
                    continue
                found += 1
                assert m @ inverse(m) == ident
                assert inverse(m) @ m == ident

    def test_inverse_of_singular_raises(self, mod2):
        m = FpMatrix.from_rows(mod2, [(1, 1), (1, 1)], 2)
        with pytest.raises(DependentInput):
            inverse(m)

    def test_in_row_space(self, mod3):
        m = FpMatrix.from_rows(mod3, [(1, 0, 2), (0, 1, 1)], 3)
        assert in_row_space(m, FpVector(mod3, (2, 1, 2)))
        assert not in_row_space(m, FpVector(mod3, (0, 0, 1)))


class TestCompleteBasis:
    def test_prefix_columns_and_determinism(self):
        rng = random.Random(23)
        for p in (2, 3):
            mod = PrimeModulus(p)
            for _ in range(40):
                dim = rng.randrange(2, 6)
                vs = []
                while len(vs) < 2:
                    cand = FpVector(mod, tuple(rng.randrange(p) for _ in range(dim)))
                    if rank_of_vectors(p, [v.entries for v in vs] + [cand.entries]) == len(vs) + 1:
                        vs.append(cand)
                a = complete_basis(vs, dim)
                assert rank(a) == dim
                for j, v in enumerate(vs):
                    assert a.col(j) == v
                assert complete_basis(vs, dim) == a

    def test_dependent_input_raises(self, mod2):
        v = FpVector(mod2, (1, 0, 1))
        with pytest.raises(DependentInput):
            complete_basis([v, v], 3)


def test_iter_vectors_lexicographic(mod2):
    got = [v.entries for v in iter_vectors(mod2, 2)]
    assert got == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_row_space_drops_zero_rows(mod2):
    m = FpMatrix.from_rows(mod2, [(1, 1), (1, 1), (0, 0)], 2)
    assert row_space(m).rows == ((1, 1),)
