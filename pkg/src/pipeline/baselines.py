"""Comparison methods: k-means and convex clustering, with or without denoising."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from src.models import (
    ClusteringResult,
    FusionGraph,
    InvalidConfigError,
    SolverConfig,
    SparsityWeights,
    WaveletBasis,
)
from src.wavelet import pad_rows, transform_rows, truncate_rows

from .clusters import support_from
from .cwc import convex_cluster, wavelet_sparse_convex_cluster
from .denoise import shrink_coefficients
from .kmeans import DEFAULT_RESTARTS, kmeans


class BaselineMethod(str, Enum):
    KM = "KM"
    CC = "CC"
    D_KM = "D_KM"
    D_CC = "D_CC"
    KM_D = "KM_D"
    CC_D = "CC_D"
    CWC = "CWC"

    @classmethod
    def parse(cls, value) -> "BaselineMethod":
        if isinstance(value, cls):
            return value
        key = str(value).upper().replace("+", "_")
        if key in ("D_KM", "D_CC", "KM_D", "CC_D", "KM", "CC", "CWC"):
            return cls(key)
        raise InvalidConfigError(f"Unknown method '{value}'. Choose one of {', '.join(m.value for m in cls)}")

    @property
    def uses_kmeans(self) -> bool:
        return self in (BaselineMethod.KM, BaselineMethod.D_KM, BaselineMethod.KM_D)

    @property
    def denoise_first(self) -> bool:
        return self in (BaselineMethod.D_KM, BaselineMethod.D_CC)

    @property
    def denoise_after(self) -> bool:
        return self in (BaselineMethod.KM_D, BaselineMethod.CC_D)


@dataclass
class BaselineParams:
    """
    Method parameters. `k` is required by the k-means recipes, `lam` by the
    convex-clustering ones, `lam` and `gamma` by CWC.
    """

    k: Optional[int] = None
    lam: float = 1.0
    gamma: float = 1.0
    graph: Optional[FusionGraph] = None
    omega: Optional[SparsityWeights] = None
    knn: Optional[int] = None
    phi: object = "auto"
    config: SolverConfig = field(default_factory=SolverConfig)
    restarts: int = DEFAULT_RESTARTS
    seed: int = 0
    fixed_sigma: Optional[float] = None
    padding_mode: str = "zero"
    refit: bool = False
    rank_reduce: bool = False


def baseline_pipeline(X, basis: WaveletBasis, method, params: Optional[BaselineParams] = None) -> ClusteringResult:
    """
    Run one of the comparison recipes.

    Everything except CWC works on the wavelet coefficients of the padded
    rows: k-means and gamma = 0 convex clustering only see Euclidean
    geometry, which the orthogonal transform preserves, and thresholded
    coefficients stay exactly zero in the reported centroids.
    """
    method = BaselineMethod.parse(method)
    params = params or BaselineParams()
    if method is BaselineMethod.CWC:
        return wavelet_sparse_convex_cluster(
            X,
            basis,
            params.lam,
            params.gamma,
            params.graph,
            params.omega,
            params.config,
            knn=params.knn,
            phi=params.phi,
            rank_reduce=params.rank_reduce,
            refit=params.refit,
            padding_mode=params.padding_mode,
        )

    padded, layout = pad_rows(X, basis, mode=params.padding_mode)
    coefficients = transform_rows(padded, basis, "forward")
    if method.denoise_first:
        coefficients, _, _ = shrink_coefficients(coefficients, layout, params.fixed_sigma)

    report = None
    if method.uses_kmeans:
        if params.k is None:
            raise InvalidConfigError(f"{method.value} needs the number of clusters k")
        labels, centers = kmeans(coefficients, params.k, restarts=params.restarts, seed=params.seed)
        centroids_wavelet = centers[labels]
        method_params = {"k": int(params.k), "restarts": params.restarts, "seed": params.seed}
    else:
        labels, centroids_wavelet, report = convex_cluster(
            coefficients, params.lam, params.graph, params.config, knn=params.knn, phi=params.phi
        )
        method_params = {"lambda": float(params.lam)}

    if method.denoise_after:
        centroids_wavelet, _, _ = shrink_coefficients(centroids_wavelet, layout, params.fixed_sigma)

    centroids = truncate_rows(transform_rows(centroids_wavelet, basis, "inverse"), layout)
    return ClusteringResult(
        centroids=centroids,
        centroids_wavelet=centroids_wavelet,
        labels=labels,
        support_mask=support_from(centroids_wavelet),
        objective=None if report is None else report.objective,
        report=report,
        method=method.value,
        layout=layout,
        params={**method_params, "basis": basis.family},
    )
