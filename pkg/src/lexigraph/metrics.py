"""Pure numeric kernels: cosine similarity, PCA maps, Pearson r, Cohen's kappa.

Everything here is deterministic and side-effect free.  PCA uses an exact
eigendecomposition of the sample covariance; the vocabularies being mapped
are tiny, so no iterative approximation is warranted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    IdenticalPointsError,
    InsufficientDataError,
    ZeroVarianceError,
    ZeroVectorError,
)


def cosine_similarity(a, b) -> float:
    """dot(a, b) / (|a| |b|), in [-1, 1]."""
    va = np.asarray(a, dtype=float)
    vb = np.asarray(b, dtype=float)
    if va.shape != vb.shape or va.ndim != 1:
        raise DimensionMismatchError(f"shape mismatch: {va.shape} vs {vb.shape}")
    na = np.linalg.norm(va)
    nb = np.linalg.norm(vb)
    if na == 0.0 or nb == 0.0:
        raise ZeroVectorError("cosine similarity of a zero vector is undefined")
    return float(np.clip(va @ vb / (na * nb), -1.0, 1.0))


@dataclass(frozen=True)
class PcaModel:
    """Top-k principal axes of a point cloud.

    ``components`` rows are orthonormal, variances non-increasing, and each
    component's first nonzero coordinate is positive so maps are reproducible.
    """

    mean: np.ndarray
    components: np.ndarray          # shape (k, D)
    explained_variance: np.ndarray  # shape (k,)

    @property
    def k(self) -> int:
        return self.components.shape[0]


def _fix_signs(components: np.ndarray) -> np.ndarray:
    fixed = components.copy()
    for i, row in enumerate(fixed):
        nonzero = np.nonzero(np.abs(row) > 1e-12)[0]
        if nonzero.size and row[nonzero[0]] < 0:
            fixed[i] = -row
    return fixed


def pca_fit(points, k: int) -> PcaModel:
    """Fit the top-k principal components of the sample covariance."""
    x = np.asarray(points, dtype=float)
    if x.ndim != 2:
        raise DimensionMismatchError("points must be a 2-D array of row vectors")
    n, d = x.shape
    if n < 2:
        raise InsufficientDataError("PCA needs at least two points")
    if not 1 <= k <= min(d, n):
        raise InsufficientDataError(f"k must be in [1, {min(d, n)}], got {k}")
    mean = x.mean(axis=0)
    centered = x - mean
    if not np.any(centered):
        raise IdenticalPointsError("all points identical: covariance is zero")
    cov = centered.T @ centered / (n - 1)
    eigvals, eigvecs = np.linalg.eigh(cov)
    order = np.argsort(eigvals)[::-1][:k]
    variance = np.clip(eigvals[order], 0.0, None)
    components = _fix_signs(eigvecs[:, order].T)
    return PcaModel(mean=mean, components=components, explained_variance=variance)


def pca_project(model: PcaModel, point) -> np.ndarray:
    """Coordinates of ``point`` in the model's component basis."""
    p = np.asarray(point, dtype=float)
    if p.shape != model.mean.shape:
        raise DimensionMismatchError(f"expected dimension {model.mean.shape[0]}, got {p.shape}")
    return model.components @ (p - model.mean)


@dataclass(frozen=True)
class CorrelationResult:
    r: float
    n: int


def pearson(xs: Sequence[float], ys: Sequence[float]) -> CorrelationResult:
    """Pearson product-moment correlation (no significance testing)."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise DimensionMismatchError("series must be 1-D and of equal length")
    n = x.shape[0]
    if n < 2:
        raise InsufficientDataError("correlation needs at least two pairs")
    dx = x - x.mean()
    dy = y - y.mean()
    sx = float(dx @ dx)
    sy = float(dy @ dy)
    if sx == 0.0 or sy == 0.0:
        raise ZeroVarianceError("correlation undefined for a constant series")
    r = float(dx @ dy / np.sqrt(sx * sy))
    return CorrelationResult(r=max(-1.0, min(1.0, r)), n=n)


def cohens_kappa(ratings_a: Sequence[Hashable], ratings_b: Sequence[Hashable]) -> float:
    """Unweighted Cohen's kappa: (p_o - p_e) / (1 - p_e).

    The degenerate case p_e = 1 (both raters constant on the same category,
    hence perfect agreement) is defined as 1.
    """
    if len(ratings_a) != len(ratings_b):
        raise DimensionMismatchError("rating lists must have equal length")
    n = len(ratings_a)
    if n < 1:
        raise InsufficientDataError("kappa needs at least one rating pair")
    p_o = sum(a == b for a, b in zip(ratings_a, ratings_b)) / n
    count_a = Counter(ratings_a)
    count_b = Counter(ratings_b)
    p_e = sum(count_a[c] / n * count_b.get(c, 0) / n for c in count_a)
    if p_e == 1.0:
        return 1.0
    return (p_o - p_e) / (1.0 - p_e)
