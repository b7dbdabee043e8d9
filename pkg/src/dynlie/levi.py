"""Levi split of a bracket-closed subalgebra of u(n).

For these algebras the radical is exactly the center and the semisimple
part is exactly the derived algebra, so L = [L, L] (+) center(L) as an
orthogonal direct sum.  That makes the split a pair of rank decisions:
a nullspace for the center, a Gram-Schmidt sweep over pairwise brackets
for the derived algebra.
"""

from dataclasses import dataclass

import numpy as np

from .adjoint import _brackets_and_coords
from .errors import DecompositionError
from .linalg import LieBasis, TOL_RANK, empty_basis, extend_basis, from_coords, nullspace


def center(basis, tol=TOL_RANK):
    """Orthonormal basis of {x in span : [x, e_j] = 0 for all j}.

    Solves the stacked linear system sum_i c_i <e_k, [e_i, e_j]> = 0 by
    SVD.  Requires a bracket-closed input (NotClosedError otherwise).
    """
    if basis.dim == 0:
        return basis
    coords = _brackets_and_coords(basis, tol)[1]
    d = basis.dim
    # rows indexed by (j, k), columns by the combination coefficient i
    system = coords.reshape(d, d * d).T
    rows = nullspace(system, tol)
    if rows.shape[0] == 0:
        return empty_basis(basis.n)
    return LieBasis(basis.n, from_coords(basis, rows))


def derived_algebra(basis, tol=TOL_RANK):
    """Orthonormal basis of span{[e_i, e_j]}, the derived algebra [L, L].

    The closure check rides along: brackets leaving the span raise
    NotClosedError.  Candidate order is lexicographic in (i, j), i < j.
    """
    if basis.dim == 0:
        return basis
    brackets = _brackets_and_coords(basis, tol)[0]
    d = basis.dim
    pairs = [brackets[i, j] for i in range(d) for j in range(i + 1, d)]
    return extend_basis(empty_basis(basis.n), pairs, tol)


@dataclass(frozen=True)
class LeviResult:
    """Orthogonal split L = semisimple (+) radical.

    ``radical_lines`` lists the one-dimensional pieces of the radical
    separately; each evolves independently of everything else.
    """

    radical: LieBasis
    semisimple: LieBasis
    radical_lines: tuple

    @property
    def dim(self):
        return self.radical.dim + self.semisimple.dim


def levi_decompose(basis, tol=TOL_RANK):
    """Split a bracket-closed algebra into center plus derived algebra.

    Verifies that the two pieces really decompose the input: dimensions
    must add up to dim L, the combined span must be all of L, and every
    radical element must commute with the whole algebra (residual at
    1e-8).  Inconsistent rank decisions raise DecompositionError.
    """
    rad = center(basis, tol)
    semi = derived_algebra(basis, tol)
    if rad.dim + semi.dim != basis.dim:
        raise DecompositionError(
            f"center (dim {rad.dim}) and derived algebra (dim {semi.dim}) "
            f"do not split the algebra (dim {basis.dim})")
    combined = extend_basis(semi, rad.mats, tol)
    if combined.dim != basis.dim:
        raise DecompositionError(
            "center and derived algebra overlap; rank thresholds inconsistent")
    if rad.dim and basis.dim:
        worst = max(
            float(np.linalg.norm(r @ basis.mats - basis.mats @ r, axis=(1, 2)).max())
            for r in rad.mats
        )
        if worst > 1e-8:
            raise DecompositionError(
                f"radical fails to commute with the algebra, residual {worst:.3e}")
    lines = tuple(LieBasis(basis.n, rad.mats[i : i + 1]) for i in range(rad.dim))
    return LeviResult(radical=rad, semisimple=semi, radical_lines=lines)
