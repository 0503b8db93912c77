"""Quaternion scalars, quaternion matrices, and real matrix embeddings.

Complex and quaternionic matrices are flattened to real block matrices
(2x2 blocks per complex entry, 4x4 blocks per quaternion entry) before any
Lie-algebra computation, so brackets and traces need a single real
implementation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Left-regular representation of the units 1, i, j, k on coordinates (w, x, y, z).
_UNIT_1 = np.eye(4)
_UNIT_I = np.array([
    [0.0, -1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, 1.0, 0.0],
])
_UNIT_J = np.array([
    [0.0, 0.0, -1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
    [1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
])
_UNIT_K = np.array([
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
])

_COMPLEX_J2 = np.array([[0.0, -1.0], [1.0, 0.0]])


@dataclass(frozen=True)
class Quaternion:
    """A quaternion w + x*i + y*j + z*k with Hamilton multiplication."""

    w: float
    x: float
    y: float
    z: float

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        p, q = self, other
        return Quaternion(
            p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        )

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return float(np.sqrt(self.w**2 + self.x**2 + self.y**2 + self.z**2))

    def components(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def isclose(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.components() - other.components()) <= tol))


QUAT_ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
QUAT_I = Quaternion(0.0, 1.0, 0.0, 0.0)
QUAT_J = Quaternion(0.0, 0.0, 1.0, 0.0)
QUAT_K = Quaternion(0.0, 0.0, 0.0, 1.0)


def quaternion_product(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product p*q. The norm is multiplicative: |pq| = |p||q|."""
    return p * q


class QuaternionMatrix:
    """Dense quaternionic matrix stored as four real component matrices."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w, x=None, y=None, z=None):
        w = np.asarray(w, dtype=float)
        self.w = w
        self.x = np.zeros_like(w) if x is None else np.asarray(x, dtype=float)
        self.y = np.zeros_like(w) if y is None else np.asarray(y, dtype=float)
        self.z = np.zeros_like(w) if z is None else np.asarray(z, dtype=float)
        if not (self.w.shape == self.x.shape == self.y.shape == self.z.shape):
            raise ValueError("component matrices must share one shape")
        if self.w.ndim != 2:
            raise ValueError("quaternion matrices are 2-dimensional")

    @property
    def shape(self) -> tuple[int, int]:
        return self.w.shape

    @staticmethod
    def zeros(rows: int, cols: int) -> "QuaternionMatrix":
        return QuaternionMatrix(np.zeros((rows, cols)))

    @staticmethod
    def from_complex(mat) -> "QuaternionMatrix":
        mat = np.asarray(mat, dtype=complex)
        return QuaternionMatrix(mat.real, mat.imag)

    def __add__(self, other: "QuaternionMatrix") -> "QuaternionMatrix":
        return QuaternionMatrix(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "QuaternionMatrix") -> "QuaternionMatrix":
        return QuaternionMatrix(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __matmul__(self, other: "QuaternionMatrix") -> "QuaternionMatrix":
        a, b = self, other
        return QuaternionMatrix(
            a.w @ b.w - a.x @ b.x - a.y @ b.y - a.z @ b.z,
            a.w @ b.x + a.x @ b.w + a.y @ b.z - a.z @ b.y,
            a.w @ b.y - a.x @ b.z + a.y @ b.w + a.z @ b.x,
            a.w @ b.z + a.x @ b.y - a.y @ b.x + a.z @ b.w,
        )

    def conjugate_transpose(self) -> "QuaternionMatrix":
        return QuaternionMatrix(self.w.T.copy(), -self.x.T, -self.y.T, -self.z.T)

    def is_anti_hermitian(self, tol: float = 1e-12) -> bool:
        s = self + self.conjugate_transpose()
        return max(np.abs(c).max(initial=0.0) for c in (s.w, s.x, s.y, s.z)) <= tol

    def real_trace(self) -> float:
        """Real part of the quaternionic trace."""
        return float(np.trace(self.w))


def real_embedding(entries, field: str) -> np.ndarray:
    """Embed a real, complex, or quaternionic matrix as a real block matrix.

    Complex entries become 2x2 blocks [[a, -b], [b, a]]; quaternion entries
    become the 4x4 left-multiplication blocks on (1, i, j, k) coordinates.
    The embedding is an algebra homomorphism: embed(AB) = embed(A) embed(B).
    """
    if field == "real":
        mat = np.asarray(entries, dtype=float)
        if mat.ndim != 2:
            raise ValueError("expected a 2-dimensional matrix")
        if not np.all(np.isfinite(mat)):
            raise ValueError("matrix entries must be finite")
        return mat.copy()
    if field == "complex":
        mat = np.asarray(entries)
        if mat.ndim != 2:
            raise ValueError("expected a 2-dimensional matrix")
        if not np.iscomplexobj(mat):
            mat = mat.astype(complex)
        out = np.kron(mat.real, np.eye(2)) + np.kron(mat.imag, _COMPLEX_J2)
        if not np.all(np.isfinite(out)):
            raise ValueError("matrix entries must be finite")
        return out
    if field == "quaternion":
        if not isinstance(entries, QuaternionMatrix):
            raise ValueError("quaternion field requires a QuaternionMatrix")
        q = entries
        out = (
            np.kron(q.w, _UNIT_1)
            + np.kron(q.x, _UNIT_I)
            + np.kron(q.y, _UNIT_J)
            + np.kron(q.z, _UNIT_K)
        )
        if not np.all(np.isfinite(out)):
            raise ValueError("matrix entries must be finite")
        return out
    raise ValueError(f"unknown scalar field {field!r}; expected real, complex or quaternion")


def embedding_block_size(field: str) -> int:
    """Rows a single scalar occupies after real embedding (1, 2, or 4)."""
    return {"real": 1, "complex": 2, "quaternion": 4}[field]
