"""Compact Lie algebras as real-embedded matrix bases.

An algebra is a direct sum of classical matrix factors so(n), su(n), u(n),
sp(n) and abelian summands R^k. Complex and quaternionic factors are stored
through their real embeddings; every basis element carries a block-diagonal
real matrix plus a vector of abelian coordinates. The basis is normalized to
be orthonormal for the bi-invariant inner product

    <A, B> = sum_f kappa_f * (-Re tr(A_f B_f))  +  Euclidean product on R^k,

so coordinates realize the inner product directly and the Gram matrix is the
identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quaternions import QuaternionMatrix, embedding_block_size, real_embedding

_MATRIX_FAMILIES = {"so": "real", "su": "complex", "u": "complex", "sp": "quaternion"}
_STRUCTURE_TOL = 1e-10


@dataclass(frozen=True)
class Factor:
    """One direct summand: a classical family with rank parameter, or R^n."""

    family: str  # 'so' | 'su' | 'u' | 'sp' | 'abelian'
    n: int
    kappa: float = 1.0

    def __post_init__(self):
        if self.family not in (*_MATRIX_FAMILIES, "abelian"):
            raise ValueError(f"unsupported factor family {self.family!r}")
        minimum = {"so": 2, "su": 2, "u": 1, "sp": 1, "abelian": 1}[self.family]
        if self.n < minimum:
            raise ValueError(f"{self.family}({self.n}) below minimum rank {minimum}")
        if self.kappa <= 0:
            raise ValueError("normalization coefficient must be positive")

    @property
    def field(self) -> str | None:
        return _MATRIX_FAMILIES.get(self.family)

    @property
    def dim(self) -> int:
        n = self.n
        return {
            "so": n * (n - 1) // 2,
            "su": n * n - 1,
            "u": n * n,
            "sp": n * (2 * n + 1),
            "abelian": n,
        }[self.family]

    @property
    def embedded_size(self) -> int:
        if self.family == "abelian":
            return 0
        return self.n * embedding_block_size(self.field)


def _complex_unit(n: int, a: int, b: int, value: complex) -> np.ndarray:
    mat = np.zeros((n, n), dtype=complex)
    mat[a, b] = value
    return mat


def _factor_raw_basis(factor: Factor) -> list:
    """Unnormalized anti-Hermitian basis matrices of one matrix factor."""
    n = factor.n
    basis = []
    if factor.family == "so":
        for a in range(n):
            for b in range(a + 1, n):
                mat = np.zeros((n, n))
                mat[a, b] = 1.0
                mat[b, a] = -1.0
                basis.append(mat)
    elif factor.family in ("su", "u"):
        for a in range(n):
            for b in range(a + 1, n):
                basis.append(_complex_unit(n, a, b, 1.0) - _complex_unit(n, b, a, 1.0))
                basis.append(_complex_unit(n, a, b, 1.0j) + _complex_unit(n, b, a, 1.0j))
        if factor.family == "su":
            # Orthogonal traceless diagonal family i*diag(1,..,1,-a,0,..,0).
            for a in range(1, n):
                diag = np.zeros(n, dtype=complex)
                diag[:a] = 1.0j
                diag[a] = -1.0j * a
                basis.append(np.diag(diag))
        else:
            for a in range(n):
                basis.append(_complex_unit(n, a, a, 1.0j))
    elif factor.family == "sp":
        units = [
            (0.0, 1.0, 0.0, 0.0),
            (0.0, 0.0, 1.0, 0.0),
            (0.0, 0.0, 0.0, 1.0),
        ]
        for a in range(n):
            for b in range(a + 1, n):
                real = np.zeros((n, n))
                real[a, b], real[b, a] = 1.0, -1.0
                basis.append(QuaternionMatrix(real))
                sym = np.zeros((n, n))
                sym[a, b] = sym[b, a] = 1.0
                for _, x, y, z in units:
                    basis.append(QuaternionMatrix(np.zeros((n, n)), x * sym, y * sym, z * sym))
        for a in range(n):
            diag = np.zeros((n, n))
            diag[a, a] = 1.0
            for _, x, y, z in units:
                basis.append(QuaternionMatrix(np.zeros((n, n)), x * diag, y * diag, z * diag))
    else:
        raise ValueError(f"no matrix basis for family {factor.family!r}")
    return basis


class LieAlgebraBasis:
    """A compact Lie algebra with orthonormal basis, structure constants and Gram matrix."""

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ValueError("need at least one factor")
        self.factors = factors
        self.dim = sum(f.dim for f in factors)

        mat_slices: list[slice | None] = []
        ab_slices: list[slice | None] = []
        mat_pos = 0
        ab_pos = 0
        for f in factors:
            if f.family == "abelian":
                mat_slices.append(None)
                ab_slices.append(slice(ab_pos, ab_pos + f.n))
                ab_pos += f.n
            else:
                mat_slices.append(slice(mat_pos, mat_pos + f.embedded_size))
                ab_slices.append(None)
                mat_pos += f.embedded_size
        self.mat_dim = mat_pos
        self.abelian_dim = ab_pos
        self._mat_slices = mat_slices
        self._ab_slices = ab_slices

        mats = np.zeros((self.dim, self.mat_dim, self.mat_dim))
        abelian = np.zeros((self.dim, self.abelian_dim))
        ranges = []
        idx = 0
        for fi, f in enumerate(factors):
            start = idx
            if f.family == "abelian":
                sl = ab_slices[fi]
                for a in range(f.n):
                    abelian[idx, sl.start + a] = 1.0
                    idx += 1
            else:
                sl = mat_slices[fi]
                for raw in _factor_raw_basis(f):
                    mats[idx, sl, sl] = real_embedding(raw, f.field)
                    idx += 1
            ranges.append((start, idx))
        self.factor_basis_ranges = ranges

        norms = np.sqrt(np.diag(self._pair_inner(mats, abelian, mats, abelian)))
        mats /= norms[:, None, None]
        abelian /= norms[:, None]
        self.basis_mats = mats
        self.basis_abelian = abelian

        self.gram = self._pair_inner(mats, abelian, mats, abelian)
        if np.abs(self.gram - np.eye(self.dim)).max() > _STRUCTURE_TOL:
            raise ValueError("basis failed to orthonormalize; factor bases overlap")

        self.structure = self._structure_constants()
        for arr in (self.basis_mats, self.basis_abelian, self.gram, self.structure):
            arr.setflags(write=False)

    def _pair_inner(self, mats1, ab1, mats2, ab2) -> np.ndarray:
        out = np.zeros((mats1.shape[0], mats2.shape[0]))
        for fi, f in enumerate(self.factors):
            if f.family == "abelian":
                sl = self._ab_slices[fi]
                out += f.kappa * ab1[:, sl] @ ab2[:, sl].T
            else:
                sl = self._mat_slices[fi]
                e = embedding_block_size(f.field)
                out -= (f.kappa / e) * np.einsum(
                    "ipq,jqp->ij", mats1[:, sl, sl], mats2[:, sl, sl]
                )
        return out

    def _structure_constants(self) -> np.ndarray:
        c = np.zeros((self.dim, self.dim, self.dim))
        for i in range(self.dim):
            comm = self.basis_mats[i] @ self.basis_mats - self.basis_mats @ self.basis_mats[i]
            coords = self._pair_inner(comm, np.zeros((self.dim, self.abelian_dim)),
                                      self.basis_mats, self.basis_abelian)
            residual = comm - np.einsum("jk,kpq->jpq", coords, self.basis_mats)
            if self.mat_dim and np.abs(residual).max() > _STRUCTURE_TOL:
                raise ValueError("bracket left the basis span; factor construction is broken")
            c[i] = coords
        return c

    # ---- elements -------------------------------------------------------

    def element(self, coords) -> "AlgebraElement":
        coords = np.asarray(coords, dtype=float)
        if coords.shape != (self.dim,):
            raise ValueError(f"coordinate length {coords.shape} != algebra dim {self.dim}")
        return AlgebraElement(self, coords)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, np.zeros(self.dim))

    def element_from_parts(self, factor_mats: dict | None = None,
                           abelian_parts: dict | None = None,
                           tol: float = 1e-9) -> "AlgebraElement":
        """Element from raw per-factor matrices and abelian vectors.

        Raw inputs per family: so -> real (n,n); su/u -> complex (n,n);
        sp -> QuaternionMatrix. Raises when the data does not lie in the
        algebra (e.g. a non-anti-Hermitian matrix).
        """
        mat = np.zeros((self.mat_dim, self.mat_dim))
        ab = np.zeros(self.abelian_dim)
        for fi, raw in (factor_mats or {}).items():
            f = self.factors[fi]
            if f.family == "abelian":
                raise ValueError(f"factor {fi} is abelian; pass it in abelian_parts")
            embedded = real_embedding(raw, f.field)
            sl = self._mat_slices[fi]
            if embedded.shape[0] != sl.stop - sl.start:
                raise ValueError(f"factor {fi} expects size {f.n} over {f.field}")
            mat[sl, sl] = embedded
        for fi, vec in (abelian_parts or {}).items():
            f = self.factors[fi]
            if f.family != "abelian":
                raise ValueError(f"factor {fi} is not abelian")
            vec = np.asarray(vec, dtype=float).reshape(-1)
            if vec.shape[0] != f.n:
                raise ValueError(f"abelian factor {fi} has dimension {f.n}")
            ab[self._ab_slices[fi]] = vec

        coords = self._pair_inner(mat[None], ab[None], self.basis_mats, self.basis_abelian)[0]
        rec_mat = np.einsum("k,kpq->pq", coords, self.basis_mats)
        rec_ab = coords @ self.basis_abelian
        scale = max(np.abs(mat).max(initial=0.0), np.abs(ab).max(initial=0.0), 1.0)
        err = max(np.abs(rec_mat - mat).max(initial=0.0), np.abs(rec_ab - ab).max(initial=0.0))
        if err > tol * scale:
            raise ValueError("matrix data does not lie in the algebra span")
        return AlgebraElement(self, coords)

    def embedded_matrix(self, coords) -> np.ndarray:
        return np.einsum("k,kpq->pq", np.asarray(coords, dtype=float), self.basis_mats)

    def abelian_vector(self, coords) -> np.ndarray:
        return np.asarray(coords, dtype=float) @ self.basis_abelian

    def bracket_coords(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x, y, self.structure)

    def adjoint_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix of ad(x) on algebra coordinates: columns are [x, e_j]."""
        return np.einsum("i,ijk->kj", x, self.structure)


@dataclass(frozen=True)
class AlgebraElement:
    """An algebra element as a coordinate vector in its owning algebra's basis."""

    algebra: LieAlgebraBasis
    coords: np.ndarray

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=float)
        if coords.shape != (self.algebra.dim,):
            raise ValueError("coordinate length does not match the algebra dimension")
        coords = coords.copy()
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _require_same_algebra(self, other)
        return AlgebraElement(self.algebra, self.coords + other.coords)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        _require_same_algebra(self, other)
        return AlgebraElement(self.algebra, self.coords - other.coords)

    def __rmul__(self, scalar: float) -> "AlgebraElement":
        return AlgebraElement(self.algebra, float(scalar) * self.coords)

    def norm(self) -> float:
        return float(np.sqrt(bi_invariant_inner_product(self, self)))

    def embedded(self) -> np.ndarray:
        return self.algebra.embedded_matrix(self.coords)


def _require_same_algebra(x: AlgebraElement, y: AlgebraElement) -> None:
    if x.algebra is not y.algebra:
        raise ValueError("elements belong to different algebras")


def build_lie_algebra(factors) -> LieAlgebraBasis:
    """Direct-sum algebra from factor descriptors; see `Factor` for families."""
    return LieAlgebraBasis([f if isinstance(f, Factor) else Factor(*f) for f in factors])


def bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Lie bracket through structure constants; matches the matrix commutator."""
    _require_same_algebra(x, y)
    return AlgebraElement(x.algebra, x.algebra.bracket_coords(x.coords, y.coords))


def bi_invariant_inner_product(x: AlgebraElement, y: AlgebraElement) -> float:
    _require_same_algebra(x, y)
    return float(x.coords @ x.algebra.gram @ y.coords)


def orthogonal_complement(subspace, within: LieAlgebraBasis):
    """Orthogonal complement of a coordinate subspace inside the algebra."""
    from .linalg import Subspace

    if subspace.ambient_dim != within.dim:
        raise ValueError("subspace does not live in the algebra's coordinate space")
    if subspace.dim == 0:
        return Subspace.full(within.dim)
    return subspace.orthogonal_complement()
