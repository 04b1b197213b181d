"""Dense complex-matrix ground truth for constructed codes.

Builds Pauli operators and eigenspace projectors as explicit matrices on
(C^p)^{x n} and checks dimensions, orthogonality and the error-detection
conditions numerically.  Everything is guarded to desk scale (p^n <= 2^14).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import pauli as pauli_mod
from .errors import DimensionMismatch, InvalidGroup, NonCommutingGenerators, TooLarge
from .fields import FpVector, PrimeModulus
from .pauli import PauliOperator, StabiliserGroup

MAX_DIM = 2 ** 14

IDEMPOTENT_TOL = 1e-9
TRACE_TOL = 1e-9
KL_TOL = 1e-9
EQUAL_TOL = 1e-8


def _check_scale(p: int, n: int) -> int:
    dim = p ** n
    if dim > MAX_DIM:
        raise TooLarge(f"p^n = {dim} exceeds the desk-scale guard {MAX_DIM}")
    return dim


def _digits(dim: int, n: int, p: int) -> np.ndarray:
    """Base-p digit expansion of every basis index, most significant first."""
    idx = np.arange(dim)
    digits = np.empty((dim, n), dtype=np.int64)
    for site in range(n - 1, -1, -1):
        digits[:, site] = idx % p
        idx = idx // p
    return digits


def _pauli_action(m: PauliOperator) -> tuple[np.ndarray, np.ndarray]:
    """Column action of the operator: index map and per-column phases.

    M |x> = phases[x] |perm[x]>, so M[perm[x], x] = phases[x].
    """
    p, n = m.p, m.n
    dim = _check_scale(p, n)
    digits = _digits(dim, n, p)
    a = np.array(m.x_part, dtype=np.int64)
    b = np.array(m.z_part, dtype=np.int64)
    shifted = (digits + a) % p
    weights = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    perm = shifted @ weights
    omega = np.exp(2j * np.pi / p)
    exponents = (digits @ b) % p
    if p == 2:
        scalar = 1j ** ((m.phase + int(np.dot(m.x_part, m.z_part))) % 4)
    else:
        scalar = omega ** m.phase
    phases = scalar * omega ** exponents
    return perm, phases


def pauli_dense(m: PauliOperator) -> np.ndarray:
    """The operator as a dense unitary matrix."""
    dim = _check_scale(m.p, m.n)
    perm, phases = _pauli_action(m)
    out = np.zeros((dim, dim), dtype=complex)
    out[perm, np.arange(dim)] = phases
    return out


def apply_right(mat: np.ndarray, m: PauliOperator) -> np.ndarray:
    """mat @ M without forming M densely."""
    perm, phases = _pauli_action(m)
    # (mat @ M)[i, x] = mat[i, perm[x]] * phases[x]
    return mat[:, perm] * phases[np.newaxis, :]


def component_projector(s: StabiliserGroup, t: FpVector | Sequence[int]) -> np.ndarray:
    """Projector onto the joint omega^{t_i}-twisted eigenspaces of the generators."""
    p, n = s.p, s.n
    dim = _check_scale(p, n)
    t_entries = list(t.entries if isinstance(t, FpVector) else t)
    if len(t_entries) != s.num_generators:
        raise ValueError("one sign per generator required")
    if not pauli_mod.is_abelian(s.generators):
        raise NonCommutingGenerators("generators do not commute")
    omega = np.exp(2j * np.pi / p)
    proj = np.eye(dim, dtype=complex)
    for gen, ti in zip(s.generators, t_entries):
        m = pauli_dense(gen)
        acc = np.eye(dim, dtype=complex)
        term = np.eye(dim, dtype=complex)
        for j in range(1, p):
            term = term @ m
            acc = acc + omega ** (-j * ti) * term
        proj = proj @ (acc / p)
    expected = p ** s.k
    if abs(np.trace(proj).real - expected) > TRACE_TOL * dim or abs(np.trace(proj).imag) > TRACE_TOL * dim:
        raise InvalidGroup(
            f"component projector trace {np.trace(proj):.6g} != p^k = {expected}"
        )
    return proj


def code_projector(s: StabiliserGroup, t_set) -> np.ndarray:
    """Sum of component projectors over a coding set (or any vector list)."""
    vectors = getattr(t_set, "vectors", t_set)
    dim = _check_scale(s.p, s.n)
    proj = np.zeros((dim, dim), dtype=complex)
    for t in vectors:
        proj += component_projector(s, t)
    return proj


def error_classes(modulus: PrimeModulus, n: int, w_max: int) -> list[PauliOperator]:
    """One phase-0 Pauli per symplectic class of weight 1..w_max."""
    p = modulus.p
    site_values = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    out = []
    for w in range(1, w_max + 1):
        for support in itertools.combinations(range(n), w):
            for values in itertools.product(site_values, repeat=w):
                x = [0] * n
                z = [0] * n
                for site, (a, b) in zip(support, values):
                    x[site] = a
                    z[site] = b
                out.append(PauliOperator(modulus, n, 0, tuple(x), tuple(z)))
    return out


@dataclass(frozen=True)
class KLReport:
    """Error-detection check: alpha table and residuals per error class."""

    passed: bool
    max_residual: float
    tolerance: float
    alphas: dict
    failures: tuple

    def __len__(self):
        return len(self.alphas)


def kl_detect(pr: np.ndarray, errs: Iterable[PauliOperator], tolerance: float = KL_TOL) -> KLReport:
    """Check P E P = alpha_E P for every error class.

    alpha_E = tr(P E) / tr(P); the residual is the Frobenius norm of
    P E P - alpha_E P relative to the Frobenius norm of P.
    """
    norm_pr = float(np.linalg.norm(pr))
    trace_pr = np.trace(pr)
    if abs(np.linalg.norm(pr @ pr - pr)) > IDEMPOTENT_TOL * max(1.0, norm_pr):
        raise ValueError("projector is not idempotent within tolerance")
    alphas = {}
    failures = []
    max_residual = 0.0
    for e in errs:
        pre = apply_right(pr, e)
        alpha = np.trace(pre) / trace_pr
        residual = float(np.linalg.norm(pre @ pr - alpha * pr)) / norm_pr
        key = (e.x_part, e.z_part)
        alphas[key] = complex(alpha)
        max_residual = max(max_residual, residual)
        if residual > tolerance:
            failures.append((key, residual))
    return KLReport(
        passed=not failures,
        max_residual=max_residual,
        tolerance=tolerance,
        alphas=alphas,
        failures=tuple(failures),
    )


def subspace_equal(a: np.ndarray, b: np.ndarray, tolerance: float = EQUAL_TOL) -> bool:
    """True iff two (idempotent) projectors agree within tolerance * dim."""
    if a.shape != b.shape:
        raise DimensionMismatch("projectors of different dimension")
    for m in (a, b):
        if np.linalg.norm(m @ m - m) > IDEMPOTENT_TOL * max(1.0, np.linalg.norm(m)):
            raise ValueError("operand is not idempotent within tolerance")
    dim = a.shape[0]
    return bool(np.linalg.norm(a - b) <= tolerance * dim)
