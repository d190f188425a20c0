"""Random instances and independent optimum oracles for solver tests."""

import numpy as np

from src.models import FusionGraph, ProblemSpec
from src.solvers import objective

try:
    import cvxpy as cp
except ImportError:  # pragma: no cover
    cp = None


def tree_graph(n: int, rng: np.random.Generator) -> FusionGraph:
    """Random spanning tree: node i attaches to a random earlier node."""
    edges = [(int(rng.integers(0, i)), i, float(rng.uniform(0.5, 1.5))) for i in range(1, n)]
    return FusionGraph.from_edges(n, edges)


def random_connected_graph(n: int, rng: np.random.Generator, extra: int | None = None) -> FusionGraph:
    """Spanning tree plus `extra` random chords (default n)."""
    edges = {(min(i, j), max(i, j)): w for i, j, w in tree_graph(n, rng).edges}
    extra = n if extra is None else extra
    for _ in range(extra):
        i, j = sorted(int(v) for v in rng.choice(n, size=2, replace=False))
        edges.setdefault((i, j), float(rng.uniform(0.5, 1.5)))
    return FusionGraph.from_edges(n, [(i, j, w) for (i, j), w in edges.items()])


def random_instance(
    rng: np.random.Generator,
    n: int = 10,
    t: int = 8,
    lam: float = 0.3,
    gamma: float = 0.5,
    tree: bool = False,
) -> ProblemSpec:
    X = rng.standard_normal((n, t))
    X[: n // 2] += 2.0
    graph = tree_graph(n, rng) if tree else random_connected_graph(n, rng)
    spec = ProblemSpec.from_graph(X, graph, lam, gamma)
    omega = rng.uniform(0.2, 1.0, size=t)
    return ProblemSpec(spec.X, spec.D, lam, gamma, spec.fusion_weights, omega)


def subgradient_oracle(spec: ProblemSpec, iters: int = 20000, U0=None) -> float:
    """
    Best objective seen along subgradient descent with 1/sqrt(k) steps.
    This bounds the optimum from above only.
    """
    D = spec.D.matrix
    Dt = D.T.tocsr()
    U = spec.X.copy() if U0 is None else np.array(U0, dtype=float)
    best = objective(spec, U)
    for k in range(1, iters + 1):
        DU = D @ U
        row_norms = np.linalg.norm(DU, axis=1)
        row_dirs = np.divide(DU, row_norms[:, None], out=np.zeros_like(DU), where=row_norms[:, None] > 0)
        col_norms = np.linalg.norm(U, axis=0)
        col_dirs = np.divide(U, col_norms[None, :], out=np.zeros_like(U), where=col_norms[None, :] > 0)
        grad = (
            (U - spec.X)
            + spec.lam * (Dt @ (spec.fusion_weights[:, None] * row_dirs))
            + spec.gamma * (col_dirs * spec.sparsity_weights[None, :])
        )
        U = U - (0.05 / np.sqrt(k)) * grad
        best = min(best, objective(spec, U))
    return best


def cvxpy_oracle(spec: ProblemSpec):
    """Optimal value from a conic solver, or None without cvxpy."""
    if cp is None:
        return None
    D = spec.D.matrix.toarray()
    U = cp.Variable(spec.X.shape)
    fit = 0.5 * cp.sum_squares(U - spec.X)
    fusion = cp.sum(cp.multiply(spec.fusion_weights, cp.norm(D @ U, 2, axis=1)))
    sparsity = cp.sum(cp.multiply(spec.sparsity_weights, cp.norm(U, 2, axis=0)))
    problem = cp.Problem(cp.Minimize(fit + spec.lam * fusion + spec.gamma * sparsity))
    problem.solve()
    return float(problem.value)
