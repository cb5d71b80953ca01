"""Cyclic Jacobi eigensolver for small dense Hermitian matrices."""

from __future__ import annotations

import logging
import math

import numpy as np
import numpy.typing as npt

from vqebench.errors import EigenSolverError, NonHermitianError

logger = logging.getLogger(__name__)

ComplexArray = npt.NDArray[np.complex128]


def off_diagonal_norm(a: ComplexArray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def jacobi_eigh(
    matrix: npt.ArrayLike,
    *,
    tol: float = 1e-14,
    max_sweeps: int = 60,
    hermitian_tol: float = 1e-12,
) -> tuple[npt.NDArray[np.float64], ComplexArray]:
    """Return ascending eigenvalues and unit eigenvectors (columns).

    Each rotation first removes the phase of a_pq with a diagonal unitary, then
    applies a real Givens rotation that zeroes it.
    """
    a = np.array(matrix, dtype=np.complex128)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise ValueError("matrix must be square")
    if np.max(np.abs(a - a.conj().T), initial=0.0) > hermitian_tol:
        raise NonHermitianError("matrix is not Hermitian")
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=np.complex128)
    scale = max(1.0, float(np.linalg.norm(a)))

    sweeps = 0
    while off_diagonal_norm(a) > tol * scale:
        if sweeps >= max_sweeps:
            raise EigenSolverError(
                f"Jacobi did not converge in {max_sweeps} sweeps: "
                f"off-diagonal norm {off_diagonal_norm(a):.3e}, Frobenius norm {scale:.3e}, "
                f"condition {np.linalg.cond(a):.3e}"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= 1e-300:
                    continue
                phase = apq / mag
                a[:, q] *= np.conj(phase)
                a[q, :] *= phase
                v[:, q] *= np.conj(phase)

                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                v[:, idx] = v[:, idx] @ rot
    logger.debug("Jacobi converged in %d sweeps (n=%d)", sweeps, n)

    w = np.real(np.diag(a)).copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = v[:, order]
    # fix the global phase: largest component real and positive
    for k in range(n):
        j = int(np.argmax(np.abs(v[:, k])))
        v[:, k] *= np.conj(v[j, k]) / abs(v[j, k])
        v[:, k] /= np.linalg.norm(v[:, k])
    return w, v
