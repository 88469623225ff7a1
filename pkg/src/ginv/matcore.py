"""Dense complex-matrix core.

Validation, arithmetic, the SVD and ordered Schur factorizations, and the
single tolerance policy every other module consults.  Matrices are plain
``numpy.ndarray`` values of dtype complex128; :func:`as_matrix` is the
validating constructor used at every public entry point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ConvergenceError, ShapeMismatchError

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOL",
    "as_matrix",
    "multiply",
    "conj_transpose",
    "add",
    "subtract",
    "scale",
    "identity",
    "zeros",
    "frobenius_norm",
    "residual",
    "approx_eq",
    "rank",
    "matpow",
    "SVDResult",
    "svd",
    "SchurResult",
    "schur_ordered",
    "solve_upper_triangular",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical policy: every cutoff in the package derives from these knobs.

    rank_rtol      relative singular-value cutoff for numerical rank
    eq_rtol        relative Frobenius tolerance for matrix equality
    eig_zero_rtol  relative cutoff (vs. the Frobenius norm) that classifies an
                   eigenvalue as zero
    """

    rank_rtol: float = 1e-12
    eq_rtol: float = 1e-9
    eig_zero_rtol: float = 1e-10

    def __post_init__(self) -> None:
        for name in ("rank_rtol", "eq_rtol", "eig_zero_rtol"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise ValueError(f"{name} must lie strictly in (0, 1), got {value!r}")


DEFAULT_TOL = ToleranceConfig()


def as_matrix(data) -> np.ndarray:
    """Validate ``data`` as a dense complex matrix and freeze it.

    Accepts anything ``np.asarray`` does.  Rejects non-2-D input, empty
    dimensions, and non-finite entries.  The returned array is read-only so
    shared values cannot be mutated behind a caller's back.
    """
    arr = np.array(data, dtype=complex, order="C")
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={arr.ndim}")
    rows, cols = arr.shape
    if rows < 1 or cols < 1:
        raise ValueError(f"matrix dimensions must be positive, got {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("matrix entries must be finite (no NaN or Inf)")
    arr.flags.writeable = False
    return arr


def require_square(a: np.ndarray, what: str = "matrix") -> np.ndarray:
    if a.shape[0] != a.shape[1]:
        raise ShapeMismatchError(f"{what} must be square, got shape {a.shape}")
    return a


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def conj_transpose(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"cannot add {a.shape} and {b.shape}")
    return a + b


def subtract(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"cannot subtract {b.shape} from {a.shape}")
    return a - b


def scale(alpha: complex, a: np.ndarray) -> np.ndarray:
    return alpha * a


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=complex)


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a, "fro"))


def residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    """Relative Frobenius residual ||L - R|| / max(1, ||L||, ||R||).

    This is the one normalization used everywhere a matrix equality is
    tested or reported, so ``residual(a, b) <= tol.eq_rtol`` is exactly
    :func:`approx_eq`.
    """
    if lhs.shape != rhs.shape:
        raise ShapeMismatchError(f"cannot compare {lhs.shape} with {rhs.shape}")
    denom = max(1.0, frobenius_norm(lhs), frobenius_norm(rhs))
    return frobenius_norm(lhs - rhs) / denom


def approx_eq(a: np.ndarray, b: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    return residual(a, b) <= tol.eq_rtol


def rank(a: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Numerical rank: singular values above rank_rtol * max(m, n) * sigma_max."""
    if min(a.shape) == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    smax = s[0]
    if smax == 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_rtol * max(a.shape) * smax))


def matpow(a: np.ndarray, j: int) -> np.ndarray:
    """a**j by repeated squaring, snapped to exact zero below the noise floor.

    The j-th power of a numerically nilpotent matrix is pure rounding noise;
    its own sigma_max then makes any relative rank cutoff meaningless.  A
    power whose norm is below n * j * eps * sigma_max(a)**j cannot be
    distinguished from zero, so it is returned as exact zero.
    """
    require_square(a, "matrix power base")
    if j < 0:
        raise ValueError("matrix powers here are nonnegative; inverses have their own routes")
    if j == 0:
        return identity(a.shape[0])
    power = np.linalg.matrix_power(a, j)
    if j > 1 and a.shape[0] > 0:
        smax = float(np.linalg.norm(a, 2))
        floor = a.shape[0] * j * np.finfo(float).eps * smax**j
        if float(np.linalg.norm(power, 2)) <= floor:
            return np.zeros_like(power)
    return power


@dataclass(frozen=True)
class SVDResult:
    """a = U @ diag(singular_values) @ V* with U, V unitary."""

    U: np.ndarray
    singular_values: np.ndarray
    V: np.ndarray


def svd(a: np.ndarray) -> SVDResult:
    u, s, vh = np.linalg.svd(a)
    return SVDResult(U=u, singular_values=s, V=vh.conj().T)


@dataclass(frozen=True)
class SchurResult:
    """a = U @ Tmat @ U* with Tmat upper triangular.

    Eigenvalues on the diagonal of ``Tmat`` are ordered so that every one
    classified nonzero (|lambda| > eig_zero_rtol * ||a||_F) precedes every one
    classified zero; ``num_nonzero`` is the split point.
    """

    U: np.ndarray
    Tmat: np.ndarray
    eigenvalues: np.ndarray
    num_nonzero: int
    warnings: tuple[str, ...] = ()


def schur_ordered(
    a: np.ndarray,
    tol: ToleranceConfig = DEFAULT_TOL,
    zero_cutoff: float | None = None,
) -> SchurResult:
    """Complex Schur form with zero-classified eigenvalues swapped to the bottom.

    The classification cutoff is eig_zero_rtol * ||a||_F unless an explicit
    absolute ``zero_cutoff`` is supplied (the core-EP split passes a
    rank-informed one when the spectrum is defective).  Raises
    ConvergenceError if the QR iteration fails or the reordering cannot
    cleanly separate the zero cluster.
    """
    require_square(a, "schur_ordered input")
    n = a.shape[0]
    cutoff = tol.eig_zero_rtol * frobenius_norm(a) if zero_cutoff is None else zero_cutoff
    if n == 0:
        empty = np.zeros((0, 0), dtype=complex)
        return SchurResult(U=empty, Tmat=empty, eigenvalues=np.zeros(0, dtype=complex), num_nonzero=0)
    try:
        tmat, u, _ = scipy.linalg.schur(
            np.asarray(a, dtype=complex), output="complex",
            sort=lambda lam: abs(lam) > cutoff,
        )
    except scipy.linalg.LinAlgError as exc:
        raise ConvergenceError(f"Schur decomposition did not converge: {exc}") from exc

    eigenvalues = np.diag(tmat).copy()
    nonzero = np.abs(eigenvalues) > cutoff
    num_nonzero = int(np.count_nonzero(nonzero))
    if not np.array_equal(nonzero, np.arange(n) < num_nonzero):
        raise ConvergenceError(
            "eigenvalue reordering failed to separate the zero cluster; "
            f"classification after sorting: {nonzero.tolist()}"
        )
    warns: tuple[str, ...] = ()
    if num_nonzero:
        smallest = float(np.min(np.abs(eigenvalues[:num_nonzero])))
        if smallest <= 10.0 * cutoff:
            warns = (
                f"spectrum poorly separated: smallest nonzero-classified |eigenvalue| "
                f"{smallest:.3e} is within 10x of the zero cutoff {cutoff:.3e}",
            )
    return SchurResult(U=u, Tmat=tmat, eigenvalues=eigenvalues, num_nonzero=num_nonzero, warnings=warns)


def solve_upper_triangular(r: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Back-substitution solve of r @ x = b for upper-triangular r."""
    require_square(r, "triangular system matrix")
    if r.shape[0] != b.shape[0]:
        raise ShapeMismatchError(f"system matrix {r.shape} does not match rhs {b.shape}")
    if r.shape[0] == 0 or b.shape[1] == 0:
        return np.zeros((r.shape[1], b.shape[1]), dtype=complex)
    if np.any(np.diag(r) == 0):
        raise ValueError("triangular matrix is exactly singular")
    return scipy.linalg.solve_triangular(np.asarray(r, dtype=complex), np.asarray(b, dtype=complex), lower=False)
