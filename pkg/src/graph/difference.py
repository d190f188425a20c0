"""Directed difference matrix and its full-row-rank reduction."""

import numpy as np
import scipy.linalg
import scipy.sparse as sp

from src.models import DifferenceMatrix, FusionGraph, RankReduction


def difference_matrix(graph: FusionGraph) -> DifferenceMatrix:
    """One row per edge (i, j), lexicographic order: +1 at i, -1 at j."""
    m = graph.m
    rows = np.repeat(np.arange(m), 2)
    cols = graph.pairs.reshape(-1)
    data = np.tile([1.0, -1.0], m)
    matrix = sp.csr_matrix((data, (rows, cols)), shape=(m, graph.n))
    return DifferenceMatrix(matrix)


def rank_reduce(D: DifferenceMatrix) -> RankReduction:
    """
    Keep the rows of D picked by QR with column pivoting on D^T.

    The pivoted columns of D^T are linearly independent rows of D spanning
    its row space, so D~ is again a difference matrix (a spanning forest).
    """
    dense_t = D.matrix.T.toarray()
    if D.m == 0:
        return RankReduction(matrix=D, kept_rows=np.arange(0), rank=0)
    _, R, pivots = scipy.linalg.qr(dense_t, mode="economic", pivoting=True)
    diag = np.abs(np.diag(R))
    tol = max(dense_t.shape) * np.finfo(float).eps * (diag[0] if diag.size else 0.0)
    rank = int(np.sum(diag > tol))
    kept = np.sort(pivots[:rank])
    if rank == D.m:
        return RankReduction(matrix=D, kept_rows=np.arange(D.m), rank=rank)
    reduced = DifferenceMatrix(D.matrix[kept].tocsr())
    return RankReduction(matrix=reduced, kept_rows=kept, rank=rank)


def reduce_graph(graph: FusionGraph) -> tuple[FusionGraph, RankReduction]:
    """Fusion graph restricted to the edges of a full-row-rank D~."""
    reduction = rank_reduce(difference_matrix(graph))
    return graph.subgraph(reduction.kept_rows), reduction


def row_space_residual(D: DifferenceMatrix, reduced: DifferenceMatrix) -> float:
    """Largest residual of projecting the rows of D onto the row space of D~."""
    basis, _ = np.linalg.qr(reduced.matrix.toarray().T)
    rows = D.matrix.toarray()
    residual = rows - (rows @ basis) @ basis.T
    return float(np.max(np.abs(residual))) if residual.size else 0.0
