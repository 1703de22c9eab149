"""Dense complex linear algebra for unitary walk dynamics.

Everything here is plain dense numpy: Hermitian eigendecomposition, the
time-evolution matrix ``exp(i*t*M)`` assembled from it, and a slow
power-series evaluation kept only as an independent cross-check for
small matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ContractViolationError, InvalidInputError

__all__ = [
    "HERMITIAN_TOL",
    "UNITARY_TOL",
    "STATE_NORM_TOL",
    "HermitianEigen",
    "hermitian_eigendecompose",
    "unitary_exp",
    "matrix_exp_series",
    "is_unitary",
]

#: Maximum allowed entrywise deviation |M - M^dagger| for Hermitian input.
HERMITIAN_TOL = 1e-12
#: Maximum allowed entrywise deviation |M^dagger M - I| for unitarity checks.
UNITARY_TOL = 1e-10
#: Maximum allowed deviation of a quantum state's squared norm from 1.
STATE_NORM_TOL = 1e-12


def _as_square_matrix(matrix) -> np.ndarray:
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ContractViolationError(f"expected a square matrix, got shape {m.shape}")
    if m.size and not np.isfinite(m).all():
        raise ContractViolationError("matrix contains non-finite entries")
    return m


@dataclass(frozen=True, eq=False)
class HermitianEigen:
    """Eigendecomposition of a Hermitian matrix.

    Attributes
    ----------
    eigenvalues:
        Real eigenvalues in ascending order.
    eigenvectors:
        Orthonormal eigenvectors as columns; column ``k`` matches
        ``eigenvalues[k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def exp_matrix(self, t: float) -> np.ndarray:
        """Return the unitary ``exp(i*t*M)`` for the decomposed matrix M."""
        phases = np.exp(1j * float(t) * self.eigenvalues)
        return (self.eigenvectors * phases) @ self.eigenvectors.conj().T

    def exp_apply(self, t: float, vec) -> np.ndarray:
        """Apply ``exp(i*t*M)`` to a vector without forming the matrix."""
        v = np.asarray(vec, dtype=np.complex128)
        if v.shape != (self.dim,):
            raise InvalidInputError(
                f"vector of length {v.shape} does not match matrix dimension {self.dim}"
            )
        coeff = self.eigenvectors.conj().T @ v
        return self.eigenvectors @ (np.exp(1j * float(t) * self.eigenvalues) * coeff)


def hermitian_eigendecompose(matrix) -> HermitianEigen:
    """Eigendecompose a Hermitian matrix into ascending eigenvalues and orthonormal columns.

    Raises
    ------
    ContractViolationError
        If the input is not square or deviates from Hermitian symmetry
        by more than ``HERMITIAN_TOL`` entrywise.
    """
    m = _as_square_matrix(matrix)
    if m.size:
        deviation = float(np.abs(m - m.conj().T).max())
        if deviation > HERMITIAN_TOL:
            raise ContractViolationError(
                f"matrix is not Hermitian: max |M - M^dagger| = {deviation:.3e}"
            )
    eigenvalues, eigenvectors = np.linalg.eigh(m)
    return HermitianEigen(eigenvalues, eigenvectors)


def unitary_exp(matrix, t: float) -> np.ndarray:
    """Return ``exp(i*t*M)`` for a Hermitian matrix M."""
    return hermitian_eigendecompose(matrix).exp_matrix(t)


def matrix_exp_series(matrix, t: float, max_terms: int = 200) -> np.ndarray:
    """Evaluate ``exp(i*t*M)`` by its power series.

    Deliberately naive and restricted to dimension <= 8: this exists as
    an independent cross-check for ``unitary_exp``, not as a production
    path.
    """
    m = _as_square_matrix(matrix)
    if m.shape[0] > 8:
        raise InvalidInputError("series evaluation is a small-matrix cross-check (dimension <= 8)")
    result = np.eye(m.shape[0], dtype=np.complex128)
    term = np.eye(m.shape[0], dtype=np.complex128)
    scaled = 1j * float(t) * m
    for k in range(1, max_terms + 1):
        term = term @ scaled / k
        result = result + term
        if float(np.abs(term).max()) < 1e-18:
            break
    return result


def is_unitary(matrix, tol: float = UNITARY_TOL) -> bool:
    """Return True iff ``max |M^dagger M - I| <= tol``."""
    m = _as_square_matrix(matrix)
    gram = m.conj().T @ m
    return bool(np.abs(gram - np.eye(m.shape[0])).max() <= tol)
