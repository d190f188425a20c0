"""Fusion graph, difference matrix and sparsity weight models"""

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .errors import InvalidInputError


@dataclass(frozen=True)
class FusionGraph:
    """
    Weighted edge set over observations.

    Edges are stored as an (m, 2) integer array with i < j, sorted
    lexicographically, and a matching vector of strictly positive weights.
    """

    n: int
    pairs: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        pairs = np.asarray(self.pairs, dtype=np.int64).reshape(-1, 2)
        weights = np.asarray(self.weights, dtype=float).reshape(-1)
        if self.n < 1:
            raise InvalidInputError("A fusion graph needs at least one observation")
        if pairs.shape[0] != weights.size:
            raise InvalidInputError("Edge and weight counts differ")
        if pairs.size and (np.any(pairs[:, 0] >= pairs[:, 1]) or pairs.min() < 0 or pairs.max() >= self.n):
            raise InvalidInputError("Edges must satisfy 0 <= i < j < n")
        if np.any(~np.isfinite(weights)) or np.any(weights <= 0):
            raise InvalidInputError("Fusion weights must be finite and strictly positive")

        order = np.lexsort((pairs[:, 1], pairs[:, 0]))
        pairs = pairs[order]
        weights = weights[order]
        if pairs.shape[0] > 1 and np.any(np.all(pairs[1:] == pairs[:-1], axis=1)):
            raise InvalidInputError("Duplicate edges in fusion graph")

        pairs.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_edges(cls, n: int, edges) -> "FusionGraph":
        """Build from an iterable of (i, j, w) triples in any order."""
        triples = [(min(i, j), max(i, j), w) for i, j, w in edges]
        if not triples:
            return cls(n=n, pairs=np.empty((0, 2), dtype=np.int64), weights=np.empty(0))
        pairs = np.array([(i, j) for i, j, _ in triples], dtype=np.int64)
        weights = np.array([w for _, _, w in triples], dtype=float)
        return cls(n=n, pairs=pairs, weights=weights)

    @property
    def m(self) -> int:
        return int(self.pairs.shape[0])

    @property
    def edges(self) -> list[tuple[int, int, float]]:
        return [(int(i), int(j), float(w)) for (i, j), w in zip(self.pairs, self.weights)]

    def adjacency(self, mask: np.ndarray | None = None) -> sp.csr_matrix:
        pairs = self.pairs if mask is None else self.pairs[mask]
        data = np.ones(pairs.shape[0])
        return sp.csr_matrix((data, (pairs[:, 0], pairs[:, 1])), shape=(self.n, self.n))

    def components(self, mask: np.ndarray | None = None) -> tuple[int, np.ndarray]:
        return connected_components(self.adjacency(mask), directed=False)

    def is_connected(self) -> bool:
        count, _ = self.components()
        return count == 1

    def subgraph(self, rows) -> "FusionGraph":
        """Graph restricted to the given edge rows."""
        rows = np.asarray(rows, dtype=np.int64)
        return FusionGraph(n=self.n, pairs=self.pairs[rows], weights=self.weights[rows])

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "connected": self.is_connected()}


@dataclass(frozen=True)
class DifferenceMatrix:
    """Sparse m x n matrix with +1 at column i and -1 at column j per edge row."""

    matrix: sp.csr_matrix

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    @property
    def m(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def n(self) -> int:
        return int(self.matrix.shape[1])

    @property
    def T(self) -> sp.csr_matrix:
        return self.matrix.T.tocsr()

    def gram(self) -> np.ndarray:
        """Dense D^T D (the graph Laplacian with unit edge weights)."""
        return (self.matrix.T @ self.matrix).toarray()

    def __matmul__(self, other):
        return self.matrix @ other

    def fingerprint(self) -> bytes:
        csr = self.matrix.tocsr()
        return b"|".join(
            (
                np.asarray(csr.shape, dtype=np.int64).tobytes(),
                csr.indptr.astype(np.int64).tobytes(),
                csr.indices.astype(np.int64).tobytes(),
                csr.data.astype(float).tobytes(),
            )
        )


@dataclass(frozen=True)
class RankReduction:
    """Full-row-rank D~ made of the rows of D that span its row space."""

    matrix: DifferenceMatrix
    kept_rows: np.ndarray
    rank: int

    @property
    def is_identity(self) -> bool:
        return self.kept_rows.size == 0 or (
            self.rank == self.kept_rows.size and np.array_equal(self.kept_rows, np.arange(self.rank))
        )


@dataclass(frozen=True)
class SparsityWeights:
    """One nonnegative weight per wavelet coefficient, all in [0, 1]."""

    omega: np.ndarray

    def __post_init__(self):
        omega = np.asarray(self.omega, dtype=float).reshape(-1)
        if omega.size == 0 or np.any(~np.isfinite(omega)):
            raise InvalidInputError("Sparsity weights must be a nonempty finite vector")
        if np.any(omega < 0) or np.any(omega > 1):
            raise InvalidInputError("Sparsity weights must lie in [0, 1]")
        if not np.any(omega > 0):
            raise InvalidInputError("At least one sparsity weight must be positive")
        omega.setflags(write=False)
        object.__setattr__(self, "omega", omega)

    @classmethod
    def uniform(cls, length: int) -> "SparsityWeights":
        return cls(np.ones(int(length)))

    def __len__(self) -> int:
        return int(self.omega.size)
