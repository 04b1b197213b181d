"""Shared fixtures: worked examples, parsed data files, random generators."""

import random
from pathlib import Path

import pytest

from qsol import io
from qsol.fields import FpMatrix, FpVector, PrimeModulus
from qsol.pauli import PauliOperator, StabiliserGroup, symplectic_form, tau
from qsol.search import LabelledGraph
from qsol import lines as lines_mod

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def mod2():
    return PrimeModulus(2)


@pytest.fixture(scope="session")
def mod3():
    return PrimeModulus(3)


# ---------------------------------------------------------------- pentagon

@pytest.fixture(scope="session")
def pentagon_graph(mod2):
    return LabelledGraph.cycle(mod2, 5)


@pytest.fixture(scope="session")
def five_qubit_group(data_dir):
    return io.parse_generators((data_dir / "pentagon.gens").read_text())


@pytest.fixture(scope="session")
def five_qubit_lines(five_qubit_group):
    return lines_mod.lines_from_matrix(five_qubit_group.gmatrix, 5, 0)


@pytest.fixture(scope="session")
def pentagon_tset(data_dir):
    return io.parse_coding_set((data_dir / "pentagon.tset").read_text())


FIVE_QUBIT_LETTERS = ["XZIIZ", "ZXZII", "IZXZI", "IIZXZ", "ZIIZX"]
FIVE_QUBIT_PRIMED_LETTERS = ["ZYXYZ", "ZZYXY", "YZZYX", "XYZZY", "YXYZZ"]


@pytest.fixture(scope="session")
def five_qubit_ops():
    return [PauliOperator.from_letters(s) for s in FIVE_QUBIT_LETTERS]


@pytest.fixture(scope="session")
def five_qubit_primed_ops():
    return [PauliOperator.from_letters(s) for s in FIVE_QUBIT_PRIMED_LETTERS]


# --------------------------------------------------------------- nine-cycle

@pytest.fixture(scope="session")
def nine_cycle_graph(mod2):
    return LabelledGraph.cycle(mod2, 9)


@pytest.fixture(scope="session")
def nine_cycle_restriction(data_dir, mod2):
    from qsol.fields import kernel_basis
    from qsol.geometry import ProjSubspace

    constraints = io.parse_restriction((data_dir / "nine_cycle.restrict").read_text(), mod2, 9)
    return ProjSubspace(mod2, kernel_basis(constraints))


@pytest.fixture(scope="session")
def nine_cycle_tset(data_dir):
    return io.parse_coding_set((data_dir / "nine_cycle.tset").read_text())


# ------------------------------------------------------------------ ternary

@pytest.fixture(scope="session")
def ternary_group(data_dir):
    return io.parse_generators((data_dir / "ternary.gens").read_text())


@pytest.fixture(scope="session")
def ternary_lines(ternary_group):
    return lines_mod.lines_from_matrix(ternary_group.gmatrix, 11, 4)


@pytest.fixture(scope="session")
def ternary_tset(data_dir):
    return io.parse_coding_set((data_dir / "ternary.tset").read_text())


# ------------------------------------------------------------ random helpers

def random_symplectic_rows(rng: random.Random, modulus: PrimeModulus, n: int, m: int) -> FpMatrix:
    """m independent, pairwise symplectically orthogonal vectors of F_p^{2n}."""
    from qsol.fields import rank_of_vectors
    from qsol.pauli import SymplecticVector

    rows: list[tuple[int, ...]] = []
    attempts = 0
    while len(rows) < m:
        attempts += 1
        if attempts > 20000:
            raise RuntimeError("random group generation stalled")
        cand = tuple(rng.randrange(modulus.p) for _ in range(2 * n))
        if not any(cand):
            continue
        v = SymplecticVector(modulus, n, cand)
        if any(symplectic_form(SymplecticVector(modulus, n, r), v) for r in rows):
            continue
        if rank_of_vectors(modulus.p, rows + [cand]) != len(rows) + 1:
            continue
        rows.append(cand)
    return FpMatrix.from_rows(modulus, rows, 2 * n)


def random_group(rng: random.Random, modulus: PrimeModulus, n: int, m: int) -> StabiliserGroup:
    """A random stabiliser group with m phase-zero generators on n qupits."""
    return StabiliserGroup.from_matrix(modulus, n, random_symplectic_rows(rng, modulus, n, m))


def random_group_with_lines(rng: random.Random, modulus: PrimeModulus, n: int, m: int):
    """A random group whose generator matrix has independent column pairs."""
    from qsol.errors import DegenerateLine

    for _ in range(2000):
        g = random_group(rng, modulus, n, m)
        try:
            x = lines_mod.lines_from_matrix(g.gmatrix, n, n - m)
        except DegenerateLine:
            continue
        return g, x
    raise RuntimeError("no line-compatible random group found")


def all_exponent_vectors(modulus: PrimeModulus, m: int):
    import itertools

    for entries in itertools.product(range(modulus.p), repeat=m):
        yield FpVector(modulus, entries)


def group_elements(s: StabiliserGroup) -> set:
    """Every element of the group, phases included."""
    return {s.element(v.entries) for v in all_exponent_vectors(s.modulus, s.num_generators)}
