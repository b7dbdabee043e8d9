"""Real-linear kernel for skew-Hermitian matrix spaces.

Skew-Hermitian n x n matrices form a real vector space (u(n) when taken
all together), and the Hilbert-Schmidt pairing Re tr(A^H B) makes it
Euclidean.  Everything downstream -- closures, centralizers, nullspace
splits -- reduces to orthonormal bases of subspaces of that space, so
this module owns the basis bookkeeping: Gram-Schmidt extension with a
re-orthogonalization pass, membership tests, coordinate maps, and the
exact exponential of a skew-Hermitian matrix.

Tolerance conventions: rank/membership decisions are relative at
``TOL_RANK``, skew-Hermiticity is enforced at ``TOL_HERM``, and both are
always scaled by max(1, norm) so tiny matrices are not over-trusted.
"""

import numpy as np

from .errors import NotInSpanError

TOL_HERM = 1e-10
TOL_RANK = 1e-8
TOL_KILLING = 1e-6
TOL_EIG = 1e-6


def skew_hermitian(mat, tol=TOL_HERM):
    """Validate ``mat`` as skew-Hermitian and return its exact skew part.

    Round-off up to ``tol * max(1, ||mat||_F)`` is forgiven and projected
    away via (M - M^H)/2; anything further off raises ValueError.
    """
    a = np.array(mat, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    defect = np.linalg.norm(a + a.conj().T)
    if defect > tol * max(1.0, np.linalg.norm(a)):
        raise ValueError(
            f"matrix is not skew-Hermitian: ||A + A^H||_F = {defect:.3e}")
    return (a - a.conj().T) / 2.0


def commutator(a, b):
    """Matrix commutator [a, b] = ab - ba."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape or a.ndim != 2:
        raise ValueError(
            f"commutator needs equal square shapes, got {a.shape} and {b.shape}")
    return a @ b - b @ a


def hs_inner(a, b):
    """Hilbert-Schmidt inner product Re tr(A^H B), a real number."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.sum(a.conj() * b).real)


def frobenius(a):
    return float(np.linalg.norm(a))


def _vec(mats):
    """Real vectorization of complex matrices, (..., n, n) -> (..., 2n^2).

    Isometric for the Hilbert-Schmidt pairing: Re tr(A^H B) equals the
    ordinary dot product of the vectorizations.
    """
    m = np.asarray(mats, dtype=complex)
    flat = m.reshape(m.shape[:-2] + (m.shape[-1] * m.shape[-2],))
    return np.concatenate([flat.real, flat.imag], axis=-1)


def _unvec(vecs, n):
    """Inverse of :func:`_vec` for vectors of length 2*n*n."""
    v = np.asarray(vecs, dtype=float)
    half = n * n
    re = v[..., :half]
    im = v[..., half:]
    return (re + 1j * im).reshape(v.shape[:-1] + (n, n))


class LieBasis:
    """Ordered, HS-orthonormal basis of a real subspace of u(n).

    Immutable.  ``mats`` stacks the d elements as a (d, n, n) complex
    array, ``vecs`` holds their real vectorizations as rows, so span
    projections and coordinate maps are single matrix products.
    """

    __slots__ = ("n", "mats", "vecs")

    def __init__(self, n, mats=None):
        n = int(n)
        if n < 1:
            raise ValueError("ambient dimension must be positive")
        if mats is None:
            m = np.zeros((0, n, n), dtype=complex)
        else:
            m = np.array(mats, dtype=complex)
        if m.ndim != 3 or m.shape[1:] != (n, n):
            raise ValueError(
                f"expected a stack of {n}x{n} matrices, got shape {m.shape}")
        v = _vec(m)
        if len(m):
            gram = v @ v.T
            if np.abs(gram - np.eye(len(m))).max() > 1e-9:
                raise ValueError("basis elements are not orthonormal")
        m.flags.writeable = False
        v.flags.writeable = False
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mats", m)
        object.__setattr__(self, "vecs", v)

    def __setattr__(self, name, value):
        raise AttributeError("LieBasis is immutable")

    @property
    def dim(self):
        return self.mats.shape[0]

    def __len__(self):
        return self.mats.shape[0]

    def __getitem__(self, i):
        return self.mats[i]

    def __iter__(self):
        return iter(self.mats)

    def __repr__(self):
        return f"LieBasis(n={self.n}, dim={self.dim})"


def empty_basis(n):
    return LieBasis(n)


def extend_basis(basis, candidates, tol=TOL_RANK):
    """Grow ``basis`` by the candidates that stick out of its span.

    Modified Gram-Schmidt with one re-orthogonalization pass.  A candidate
    is accepted when its orthogonal residual exceeds
    ``tol * max(1, ||candidate||_F)``; dependent candidates are dropped
    silently and acceptance order follows candidate order.  Returns a new
    basis, the input is never mutated.
    """
    n = basis.n
    rows = [r for r in basis.vecs]
    kept = [m for m in basis.mats]
    for cand in candidates:
        c = np.asarray(cand)
        if c.shape != (n, n):
            raise ValueError(
                f"candidate shape {c.shape} does not match ambient {(n, n)}")
        v = _vec(c)
        scale = max(1.0, np.linalg.norm(v))
        w = v.copy()
        for _ in range(2):
            for r in rows:
                w -= (r @ w) * r
        resid = np.linalg.norm(w)
        if resid > tol * scale:
            w /= resid
            rows.append(w)
            kept.append(_unvec(w, n))
    if not kept:
        return LieBasis(n)
    return LieBasis(n, np.stack(kept))


def member_coords(basis, x, tol=TOL_RANK):
    """Coordinates of ``x`` in ``basis``, or None when x leaves the span.

    Coordinates are the HS inner products against the basis elements; the
    residual after projection decides membership at the relative ``tol``.
    """
    x = np.asarray(x)
    if x.shape != (basis.n, basis.n):
        raise ValueError(
            f"element shape {x.shape} does not match ambient {(basis.n, basis.n)}")
    v = _vec(x)
    coords = basis.vecs @ v
    resid = v - basis.vecs.T @ coords
    if np.linalg.norm(resid) > tol * max(1.0, np.linalg.norm(v)):
        return None
    return coords


def coords_strict(basis, x, tol=TOL_RANK, what="element"):
    """Like :func:`member_coords` but raises NotInSpanError on failure."""
    coords = member_coords(basis, x, tol)
    if coords is None:
        raise NotInSpanError(f"{what} is not inside the span (tol={tol:g})")
    return coords


def from_coords(basis, rows):
    """Matrices built from coordinate row vectors: rows @ basis."""
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    if rows.shape[-1] != basis.dim:
        raise ValueError(
            f"coordinate length {rows.shape[-1]} does not match basis dim {basis.dim}")
    return np.einsum("ri,inm->rnm", rows, basis.mats)


def project_span(basis, x):
    """Orthogonal projection of ``x`` onto the span of ``basis``."""
    v = _vec(np.asarray(x))
    return _unvec(basis.vecs.T @ (basis.vecs @ v), basis.n)


def nullspace(mat, tol=TOL_RANK):
    """Orthonormal rows spanning the nullspace of a real matrix.

    SVD based; singular values at or below ``tol * max(sigma_max, 1)``
    count as zero.  A matrix with no rows has everything in its nullspace.
    """
    m = np.atleast_2d(np.asarray(mat, dtype=float))
    cols = m.shape[1]
    if m.shape[0] == 0 or cols == 0:
        return np.eye(cols)
    _, s, vh = np.linalg.svd(m)
    smax = s[0] if s.size else 0.0
    cut = tol * max(smax, 1.0)
    svals = np.zeros(cols)
    svals[: s.size] = s
    return vh[svals <= cut]


def expm_skew(a, t=1.0, tol=TOL_HERM):
    """exp(t*a) for skew-Hermitian ``a``, exactly unitary by construction.

    Diagonalizes the Hermitian matrix i*a and exponentiates the phases,
    so the result is a product of unitaries rather than a Pade or
    squaring approximation.  np.linalg.LinAlgError propagates if the
    eigensolver fails to converge.
    """
    a = skew_hermitian(a, tol)
    w, v = np.linalg.eigh(1j * a)
    phases = np.exp(-1j * t * w)
    return (v * phases) @ v.conj().T
