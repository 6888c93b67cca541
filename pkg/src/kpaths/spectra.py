"""Graph matrices (Laplacian, signless Laplacian, adjacency, A_alpha) and their spectra.

Eigenvalues come from a cyclic Jacobi rotation kernel: every symmetric matrix
here is small (order <= 64), and a fixed sweep order makes the result
bit-reproducible for identical input.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import AlphaOutOfRange, NoConvergence
from .graph import Graph

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

MAX_ORDER = 64
MAX_SWEEPS = 64
REL_TOL = 1e-12

# Two objective values closer than this are treated as a tie.
TIE_TOL = 1e-9
# Published tables print four decimals, so true values may differ by 5e-5.
TABLE_TOL = 1e-4


class MatrixKind(str, enum.Enum):
    LAPLACIAN = "laplacian"
    SIGNLESS = "signless"
    ADJACENCY = "adjacency"
    A_ALPHA = "a-alpha"


@dataclass(frozen=True)
class SymmetricMatrix:
    kind: MatrixKind
    data: np.ndarray
    alpha: float | None = None

    @property
    def order(self) -> int:
        return self.data.shape[0]


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues in ascending order."""

    values: np.ndarray
    kind: MatrixKind
    alpha: float | None = None

    def __len__(self) -> int:
        return len(self.values)

    def largest(self, i: int = 1) -> float:
        """i-th largest eigenvalue (1-based)."""
        return float(self.values[-i])

    def smallest(self, i: int = 1) -> float:
        return float(self.values[i - 1])


def _check_alpha(alpha: float) -> None:
    if alpha is None or not (0.0 <= alpha <= 1.0) or math.isnan(alpha):
        raise AlphaOutOfRange(f"alpha must lie in [0, 1], got {alpha}")


def build_matrix(g: Graph, kind: MatrixKind | str, alpha: float | None = None) -> SymmetricMatrix:
    kind = MatrixKind(kind)
    if g.n > MAX_ORDER:
        raise ValueError(f"order {g.n} exceeds {MAX_ORDER}")
    a = g.adjacency_matrix()
    deg = np.diag(a.sum(axis=1))
    if kind is MatrixKind.LAPLACIAN:
        return SymmetricMatrix(kind, deg - a)
    if kind is MatrixKind.SIGNLESS:
        return SymmetricMatrix(kind, deg + a)
    if kind is MatrixKind.ADJACENCY:
        return SymmetricMatrix(kind, a)
    _check_alpha(alpha)
    return SymmetricMatrix(kind, alpha * deg + (1.0 - alpha) * a, float(alpha))


@njit(cache=True, nogil=True)
def _jacobi(a, max_sweeps, rel_tol):
    """Cyclic Jacobi on a copy of ``a``; returns (sorted diagonal, sweeps, converged)."""
    n = a.shape[0]
    m = a.copy()
    total = 0.0
    for i in range(n):
        for j in range(n):
            total += m[i, j] * m[i, j]
    threshold = rel_tol * math.sqrt(total)
    sweeps = 0
    converged = False
    while True:
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += 2.0 * m[p, q] * m[p, q]
        if math.sqrt(off) <= threshold:
            converged = True
            break
        if sweeps == max_sweeps:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if apq == 0.0:
                    continue
                app = m[p, p]
                aqq = m[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    if r != p and r != q:
                        arp = m[r, p]
                        arq = m[r, q]
                        m[r, p] = c * arp - s * arq
                        m[p, r] = m[r, p]
                        m[r, q] = s * arp + c * arq
                        m[q, r] = m[r, q]
                m[p, p] = app - t * apq
                m[q, q] = aqq + t * apq
                m[p, q] = 0.0
                m[q, p] = 0.0
    out = np.empty(n)
    for i in range(n):
        out[i] = m[i, i]
    out.sort()
    return out, sweeps, converged


@njit(cache=True, nogil=True)
def _batch_spectra(adj, alphas, with_laplacian, max_sweeps, rel_tol):
    """Spectra of L (optional) and A_alpha for each adjacency in ``adj``.

    Output shape (B, n_mats, n); slot 0 holds L when ``with_laplacian``.
    ``ok[b]`` is False if any matrix of graph b failed to converge.
    """
    b_count, n, _ = adj.shape
    n_mats = len(alphas) + (1 if with_laplacian else 0)
    out = np.empty((b_count, n_mats, n))
    ok = np.ones(b_count, dtype=np.bool_)
    m = np.empty((n, n))
    for b in range(b_count):
        deg = np.zeros(n)
        for i in range(n):
            for j in range(n):
                deg[i] += adj[b, i, j]
        slot = 0
        if with_laplacian:
            for i in range(n):
                for j in range(n):
                    m[i, j] = -adj[b, i, j]
                m[i, i] = deg[i]
            vals, _, conv = _jacobi(m, max_sweeps, rel_tol)
            out[b, 0, :] = vals
            ok[b] = ok[b] and conv
            slot = 1
        for ai in range(len(alphas)):
            al = alphas[ai]
            for i in range(n):
                for j in range(n):
                    m[i, j] = (1.0 - al) * adj[b, i, j]
                m[i, i] = al * deg[i]
            vals, _, conv = _jacobi(m, max_sweeps, rel_tol)
            out[b, slot + ai, :] = vals
            ok[b] = ok[b] and conv
    return out, ok


def jacobi_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a dense symmetric matrix."""
    a = np.ascontiguousarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] > MAX_ORDER:
        raise ValueError(f"order {a.shape[0]} exceeds {MAX_ORDER}")
    vals, sweeps, converged = _jacobi(a, MAX_SWEEPS, REL_TOL)
    if not converged:
        raise NoConvergence(f"Jacobi did not converge within {MAX_SWEEPS} sweeps")
    return vals


def batch_spectra(adj: np.ndarray, alphas, with_laplacian: bool = True) -> np.ndarray:
    """Laplacian and A_alpha spectra for a stack of adjacency matrices.

    Returns shape (B, len(alphas) + with_laplacian, n), each row ascending.
    Runs without the GIL, so calls from several threads proceed in parallel.
    """
    alphas = np.asarray(alphas, dtype=np.float64).reshape(-1)
    for al in alphas:
        _check_alpha(float(al))
    adj = np.ascontiguousarray(adj, dtype=np.float64)
    out, ok = _batch_spectra(adj, alphas, bool(with_laplacian), MAX_SWEEPS, REL_TOL)
    if not ok.all():
        raise NoConvergence(f"Jacobi did not converge for graph {int(np.argmin(ok))} of the batch")
    return out


def eigenvalues(m: SymmetricMatrix) -> Spectrum:
    return Spectrum(jacobi_eigenvalues(m.data), m.kind, m.alpha)


def spectrum(g: Graph, kind: MatrixKind | str, alpha: float | None = None) -> Spectrum:
    return eigenvalues(build_matrix(g, kind, alpha))


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue; positive iff g is connected."""
    if g.n < 2:
        raise ValueError("algebraic connectivity needs at least two vertices")
    return spectrum(g, MatrixKind.LAPLACIAN).smallest(2)


def alpha_index(g: Graph, alpha: float) -> float:
    """Spectral radius of A_alpha(g)."""
    return spectrum(g, MatrixKind.A_ALPHA, alpha).largest(1)


def second_alpha_eigenvalue(g: Graph, alpha: float) -> float:
    if g.n < 2:
        raise ValueError("second eigenvalue needs at least two vertices")
    return spectrum(g, MatrixKind.A_ALPHA, alpha).largest(2)
