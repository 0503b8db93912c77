"""Rank-revealing linear algebra on small dense matrices: nullspaces,
orthonormal subspaces, and orthogonal projections.

Subspace coordinates are always taken with respect to an orthonormal ambient
basis, so Euclidean dot products realize the ambient inner product.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

ORTHONORMALITY_TOL = 1e-10
DEFAULT_RANK_TOL = 1e-9


@dataclass(frozen=True)
class Subspace:
    """A linear subspace given by orthonormal basis rows."""

    ambient_dim: int
    basis: np.ndarray = field(repr=False)  # shape (dim, ambient_dim)

    def __post_init__(self):
        basis = np.atleast_2d(np.asarray(self.basis, dtype=float))
        if basis.size == 0:
            basis = basis.reshape(0, self.ambient_dim)
        if basis.shape[1] != self.ambient_dim:
            raise ValueError(
                f"basis rows have length {basis.shape[1]}, ambient dim is {self.ambient_dim}"
            )
        if not np.all(np.isfinite(basis)):
            raise ValueError("basis entries must be finite")
        gram = basis @ basis.T
        if basis.shape[0] and np.abs(gram - np.eye(basis.shape[0])).max() > ORTHONORMALITY_TOL:
            raise ValueError("basis rows are not orthonormal")
        basis = basis.copy()
        basis.setflags(write=False)
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, np.zeros((0, ambient_dim)))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, np.eye(ambient_dim))

    @staticmethod
    def from_spanning(vectors, ambient_dim: int, tol: float = DEFAULT_RANK_TOL) -> "Subspace":
        """Orthonormal basis for the span of the given (possibly dependent) rows."""
        rows = np.atleast_2d(np.asarray(vectors, dtype=float))
        if rows.size == 0:
            return Subspace.zero(ambient_dim)
        if rows.shape[1] != ambient_dim:
            raise ValueError("spanning vectors do not match ambient dimension")
        u, s, vh = np.linalg.svd(rows, full_matrices=False)
        if s.size == 0 or s[0] == 0.0:
            return Subspace.zero(ambient_dim)
        rank = int(np.sum(s > tol * s[0]))
        return Subspace(ambient_dim, vh[:rank])

    def project(self, v: np.ndarray) -> np.ndarray:
        return orthogonal_projection(v, self)

    def rejection_norm(self, v: np.ndarray) -> float:
        """Distance from v to the subspace."""
        v = np.asarray(v, dtype=float)
        return float(np.linalg.norm(v - self.project(v)))

    def contains(self, v: np.ndarray, tol: float = 1e-9) -> bool:
        v = np.asarray(v, dtype=float)
        scale = max(np.linalg.norm(v), 1.0)
        return self.rejection_norm(v) <= tol * scale

    def coords_of(self, v: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        """Coordinates of v in the subspace basis; v must lie in the subspace."""
        v = np.asarray(v, dtype=float)
        if not self.contains(v, tol):
            raise ValueError("vector does not lie in the subspace")
        return self.basis @ v

    def orthogonal_complement(self) -> "Subspace":
        return nullspace_basis(self.basis, DEFAULT_RANK_TOL) if self.dim else Subspace.full(self.ambient_dim)


def orthogonal_projection(v: np.ndarray, subspace: Subspace) -> np.ndarray:
    """Orthogonal projection of v onto the subspace; idempotent, norm-contracting."""
    v = np.asarray(v, dtype=float)
    if v.shape != (subspace.ambient_dim,):
        raise ValueError(
            f"vector has shape {v.shape}, subspace ambient dim is {subspace.ambient_dim}"
        )
    if subspace.dim == 0:
        return np.zeros_like(v)
    return subspace.basis.T @ (subspace.basis @ v)


def nullspace_basis(mat: np.ndarray, tol: float = DEFAULT_RANK_TOL) -> Subspace:
    """Orthonormal basis of the numerical nullspace of a dense matrix.

    A singular value counts toward the rank when it exceeds tol times the
    largest singular value, so the zero matrix returns the full space.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    mat = np.atleast_2d(np.asarray(mat, dtype=float))
    cols = mat.shape[1]
    if mat.shape[0] == 0 or cols == 0:
        return Subspace.full(cols)
    _, s, vh = np.linalg.svd(mat)
    if s.size == 0 or s[0] == 0.0:
        return Subspace.full(cols)
    rank = int(np.sum(s > tol * s[0]))
    return Subspace(cols, vh[rank:])


def intersect_with_constraints(current: Subspace, constraint: np.ndarray,
                               tol: float = DEFAULT_RANK_TOL) -> Subspace:
    """Subspace of `current` annihilated by the constraint matrix.

    The constraint acts on ambient coordinates; the computation restricts it
    to the current basis so conditioning does not degrade as spaces shrink.
    """
    if current.dim == 0:
        return current
    constraint = np.atleast_2d(np.asarray(constraint, dtype=float))
    restricted = constraint @ current.basis.T  # (n_constraints, current.dim)
    inner = nullspace_basis(restricted, tol)
    if inner.dim == 0:
        return Subspace.zero(current.ambient_dim)
    return Subspace(current.ambient_dim, inner.basis @ current.basis)
