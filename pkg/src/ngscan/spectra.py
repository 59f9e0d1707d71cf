"""Laplacian spectra: combinatorial L = D - A and normalized D^{-1/2} L D^{-1/2}.

Matrices are plain symmetric numpy arrays and the eigensolver is LAPACK's
symmetric driver via ``numpy.linalg.eigvalsh`` (ascending, deterministic,
accurate well past the 1e-10 contract for these bounded matrices).

Isolated vertices get a 0 on the normalized diagonal rather than 1, so each
contributes an extra zero eigenvalue and "lambda_2 = 0 iff disconnected"
holds verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, GraphError, is_connected


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for v, row in enumerate(g.adj):
        while row:
            u = (row & -row).bit_length() - 1
            a[v, u] = 1.0
            row &= row - 1
    return a


def combinatorial_laplacian(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    return np.diag(a.sum(axis=1)) - a


def normalized_laplacian(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    deg = a.sum(axis=1)
    with np.errstate(divide="ignore"):
        dinv = np.where(deg > 0, 1.0 / np.sqrt(np.maximum(deg, 1e-300)), 0.0)
    lap = -a * dinv[:, None] * dinv[None, :]
    np.fill_diagonal(lap, np.where(deg > 0, 1.0, 0.0))
    return lap


def eigenvalues(m: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, nondecreasing."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.allclose(m, m.T, atol=1e-12):
        raise ValueError("matrix is not symmetric")
    return np.linalg.eigvalsh(m)


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: tuple[float, ...]
    lambda2: float
    connected: bool


def normalized_spectrum(g: Graph) -> SpectralSummary:
    evals = eigenvalues(normalized_laplacian(g))
    connected = is_connected(g)
    lam2 = float(evals[1]) if connected else 0.0
    return SpectralSummary(tuple(float(x) for x in evals), lam2, connected)


def lambda2(g: Graph) -> float:
    """Second-smallest normalized-Laplacian eigenvalue; exact 0 if disconnected."""
    if not is_connected(g):
        return 0.0
    return float(eigenvalues(normalized_laplacian(g))[1])


def mu2(g: Graph) -> float:
    """Second-smallest combinatorial-Laplacian eigenvalue (algebraic connectivity)."""
    return float(eigenvalues(combinatorial_laplacian(g))[1])


def join_regular_spectrum_oracle(
    k: int, component_spectra, n1: int, n2: int
) -> np.ndarray:
    """Closed-form normalized-Laplacian spectrum of an apex vertex joined to a
    disconnected k-regular graph with two connected components.

    Each component's adjacency spectrum must contain k exactly once (its
    Perron value); those two copies are consumed by the construction and the
    rest map to 1 - theta/(k+1).  The remaining three eigenvalues are
    0, 1/(k+1) and 1 + 1/(k+1); the total count is n1 + n2 + 1.
    """
    spec1, spec2 = (list(map(float, s)) for s in component_spectra)
    if len(spec1) != n1 or len(spec2) != n2:
        raise ValueError("component spectrum lengths disagree with component orders")
    out = [0.0, 1.0 / (k + 1), 1.0 + 1.0 / (k + 1)]
    for spec in (spec1, spec2):
        top = max(spec)
        if abs(top - k) > 1e-8:
            raise ValueError(f"component spectrum has top value {top}, not k={k}")
        consumed = False
        for theta in spec:
            if not consumed and abs(theta - k) <= 1e-8:
                consumed = True
                continue
            out.append(1.0 - theta / (k + 1))
    result = np.sort(np.asarray(out))
    assert len(result) == n1 + n2 + 1
    return result


def complement_mu_identity_check(g: Graph, tol: float = 1e-8) -> bool:
    """mu_i(G^c) = n - mu_{n-i+2}(G) for i = 2..n (eigensolver sanity check)."""
    from .graphs import complement

    if g.n < 2:
        raise GraphError("identity needs n >= 2")
    mu = eigenvalues(combinatorial_laplacian(g))
    mu_c = eigenvalues(combinatorial_laplacian(complement(g)))
    n = g.n
    for i in range(2, n + 1):
        if abs(mu_c[i - 1] - (n - mu[n - i + 1])) > tol:
            return False
    return True
