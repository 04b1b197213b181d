"""Exact dense linear algebra over the prime fields F_p, 2 <= p <= 31.

Matrices and vectors are immutable; every entry is stored as its smallest
non-negative representative and all arithmetic reduces eagerly, so equality
of values is equality of objects.  All tie-breaking is lexicographic on
entry tuples, which keeps every downstream search reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DependentInput

_MAX_PRIME = 31


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality check (fine for p <= 31)."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, order=True)
class PrimeModulus:
    """A prime local dimension p with 2 <= p <= 31."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p > _MAX_PRIME:
            raise ValueError(f"modulus must be a prime in [2, {_MAX_PRIME}], got {self.p}")

    def inv(self, a: int) -> int:
        """Multiplicative inverse of a nonzero residue."""
        return pow(a % self.p, -1, self.p)


@dataclass(frozen=True, order=True)
class FpVector:
    """An immutable vector of residues mod p."""

    modulus: PrimeModulus
    entries: tuple[int, ...]

    def __post_init__(self):
        p = self.modulus.p
        object.__setattr__(self, "entries", tuple(int(e) % p for e in self.entries))

    @property
    def p(self) -> int:
        return self.modulus.p

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: "FpVector") -> "FpVector":
        self._check(other)
        p = self.p
        return FpVector(self.modulus, tuple((a + b) % p for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "FpVector") -> "FpVector":
        self._check(other)
        p = self.p
        return FpVector(self.modulus, tuple((a - b) % p for a, b in zip(self.entries, other.entries)))

    def scale(self, c: int) -> "FpVector":
        p = self.p
        return FpVector(self.modulus, tuple((c * a) % p for a in self.entries))

    def dot(self, other: "FpVector") -> int:
        self._check(other)
        return sum(a * b for a, b in zip(self.entries, other.entries)) % self.p

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _check(self, other: "FpVector") -> None:
        if self.modulus != other.modulus or len(self) != len(other):
            raise ValueError("vector shape or modulus mismatch")


@dataclass(frozen=True, order=True)
class FpMatrix:
    """An immutable row-major matrix of residues mod p."""

    modulus: PrimeModulus
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        p = self.modulus.p
        reduced = tuple(tuple(int(e) % p for e in row) for row in self.rows)
        for row in reduced:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")
        object.__setattr__(self, "rows", reduced)

    @classmethod
    def from_rows(cls, modulus: PrimeModulus, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "FpMatrix":
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(rows[0])
        return cls(modulus, rows, ncols)

    @classmethod
    def identity(cls, modulus: PrimeModulus, n: int) -> "FpMatrix":
        return cls(modulus, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zero(cls, modulus: PrimeModulus, nrows: int, ncols: int) -> "FpMatrix":
        return cls(modulus, tuple((0,) * ncols for _ in range(nrows)), ncols)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> FpVector:
        return FpVector(self.modulus, self.rows[i])

    def col(self, j: int) -> FpVector:
        return FpVector(self.modulus, tuple(r[j] for r in self.rows))

    def row_vectors(self) -> list[FpVector]:
        return [self.row(i) for i in range(self.nrows)]

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.modulus, tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    def __matmul__(self, other):
        p = self.p
        if isinstance(other, FpVector):
            if len(other) != self.ncols:
                raise ValueError("shape mismatch")
            return FpVector(self.modulus, tuple(sum(a * b for a, b in zip(row, other.entries)) % p for row in self.rows))
        if isinstance(other, FpMatrix):
            if other.nrows != self.ncols:
                raise ValueError("shape mismatch")
            cols = other.transpose().rows
            return FpMatrix(
                self.modulus,
                tuple(tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols) for row in self.rows),
                other.ncols,
            )
        return NotImplemented

    def vstack(self, other: "FpMatrix") -> "FpMatrix":
        if other.ncols != self.ncols:
            raise ValueError("shape mismatch")
        return FpMatrix(self.modulus, self.rows + other.rows, self.ncols)


class RrefResult(NamedTuple):
    matrix: FpMatrix
    rank: int
    pivots: tuple[int, ...]


def _rref_rows(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """In-place Gauss-Jordan elimination; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        if inv != 1:
            rows[r] = [(inv * e) % p for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: FpMatrix) -> RrefResult:
    """Unique reduced row-echelon form, rank and pivot columns."""
    rows = [list(r) for r in m.rows]
    rows, pivots = _rref_rows(rows, m.ncols, m.p)
    return RrefResult(FpMatrix(m.modulus, tuple(tuple(r) for r in rows), m.ncols), len(pivots), tuple(pivots))


def rank(m: FpMatrix) -> int:
    return rref(m).rank


def row_space(m: FpMatrix) -> FpMatrix:
    """Canonical basis (RREF, zero rows dropped) of the row space."""
    red = rref(m)
    return FpMatrix(m.modulus, red.matrix.rows[: red.rank], m.ncols)


def kernel_basis(m: FpMatrix) -> FpMatrix:
    """Canonical (RREF) basis of the right null space, one row per basis vector."""
    red = rref(m)
    p = m.p
    pivots = red.pivots
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * m.ncols
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-red.matrix.rows[r][f]) % p
        basis.append(v)
    rows, piv = _rref_rows(basis, m.ncols, p)
    return FpMatrix(m.modulus, tuple(tuple(r) for r in rows[: len(piv)]), m.ncols)


def in_row_space(m: FpMatrix, v: FpVector) -> bool:
    if len(v) != m.ncols:
        raise ValueError("shape mismatch")
    stacked = m.vstack(FpMatrix(m.modulus, (v.entries,), m.ncols))
    return rank(stacked) == rank(m)


def inverse(m: FpMatrix) -> FpMatrix:
    """Inverse of a square non-singular matrix."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("matrix not square")
    p = m.p
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m.rows)]
    aug, pivots = _rref_rows(aug, 2 * n, p)
    if list(pivots[:n]) != list(range(n)) or len(pivots) < n:
        raise DependentInput("matrix is singular")
    return FpMatrix(m.modulus, tuple(tuple(row[n:]) for row in aug), n)


def complete_basis(vs: Sequence[FpVector], dim: int) -> FpMatrix:
    """Non-singular dim x dim matrix whose first len(vs) columns are vs.

    Completion is greedy over the standard basis vectors in index order,
    so the result is a pure function of the input.
    """
    if not vs:
        raise ValueError("need at least one vector")
    modulus = vs[0].modulus
    cols = [list(v.entries) for v in vs]
    if any(len(c) != dim for c in cols):
        raise ValueError("vectors must have length dim")
    if rank(FpMatrix.from_rows(modulus, cols, dim)) != len(cols):
        raise DependentInput("input vectors are linearly dependent")
    for i in range(dim):
        if len(cols) == dim:
            break
        e = [1 if j == i else 0 for j in range(dim)]
        if rank(FpMatrix.from_rows(modulus, cols + [e], dim)) > len(cols):
            cols.append(e)
    return FpMatrix.from_rows(modulus, cols, dim).transpose()


def rank_of_vectors(p: int, vectors: Sequence[Sequence[int]]) -> int:
    """Rank of a small stack of raw coefficient tuples.

    Bit-packed fast path for p = 2; plain elimination otherwise.  This is
    the inner loop of the skew tests and the dependent-point search.
    """
    if p == 2:
        by_high: dict[int, int] = {}
        for vec in vectors:
            x = 0
            for e in vec:
                x = (x << 1) | (e & 1)
            while x:
                h = x.bit_length()
                if h in by_high:
                    x ^= by_high[h]
                else:
                    by_high[h] = x
                    break
        return len(by_high)
    rows = [[e % p for e in vec] for vec in vectors]
    if not rows:
        return 0
    _, pivots = _rref_rows(rows, len(rows[0]), p)
    return len(pivots)


def iter_vectors(modulus: PrimeModulus, length: int) -> Iterator[FpVector]:
    """All vectors of F_p^length in lexicographic order."""
    for entries in itertools.product(range(modulus.p), repeat=length):
        yield FpVector(modulus, entries)


def row_space_vectors(m: FpMatrix) -> list[FpVector]:
    """Every vector of the row space, sorted lexicographically."""
    basis = row_space(m)
    p = m.p
    out = []
    for coeffs in itertools.product(range(p), repeat=basis.nrows):
        v = [0] * m.ncols
        for c, row in zip(coeffs, basis.rows):
            if c:
                v = [(a + c * b) % p for a, b in zip(v, row)]
        out.append(FpVector(m.modulus, tuple(v)))
    out.sort()
    return out
