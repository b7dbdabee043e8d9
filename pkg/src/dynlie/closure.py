"""Bracket closure of a generating set and the controllability verdict.

The dynamical Lie algebra of a control system is the smallest real Lie
algebra containing i times its Hamiltonian terms.  Nested brackets of
generators are enough to span it, so the schedule only brackets each new
layer of basis elements against the original generators; depth counts
productive layers.  A final all-pairs sweep guards the schedule against
borderline rank rejections and guarantees the returned basis really is
a subalgebra.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import (
    LieBasis,
    TOL_RANK,
    commutator,
    empty_basis,
    extend_basis,
    skew_hermitian,
)

CONTROLLABLE_U = "controllable-U"
CONTROLLABLE_SU = "controllable-SU"
UNCONTROLLABLE = "uncontrollable"


@dataclass(frozen=True)
class ClosureResult:
    """Closed algebra basis plus bookkeeping about how it was reached.

    ``depth_reached`` is the last bracket depth that produced a new
    direction (0 when the generators alone already span the algebra);
    ``generators_used`` counts the nonzero generators that entered the
    bracketing schedule.
    """

    basis: LieBasis
    depth_reached: int
    generators_used: int

    @property
    def dim(self):
        return self.basis.dim


def generate_closure(generators, tol=TOL_RANK):
    """Close a list of skew-Hermitian generators under commutators.

    Generators are validated, normalized to unit Frobenius norm, and
    seeded as depth 0; each subsequent layer brackets the previous
    layer's new basis elements against the original generators.  The
    loop stops when a layer adds nothing or the span reaches dim u(n).
    All-zero input yields the empty basis at depth 0.
    """
    gens = [skew_hermitian(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].shape[0]
    if any(g.shape != (n, n) for g in gens):
        raise ValueError("generators must share one ambient dimension")

    normalized = []
    for g in gens:
        norm = np.linalg.norm(g)
        if norm > tol:
            normalized.append(g / norm)
    if not normalized:
        return ClosureResult(empty_basis(n), 0, 0)

    full_dim = n * n
    basis = extend_basis(empty_basis(n), normalized, tol)
    new = list(basis.mats)
    depth = 0
    current_depth = 0
    while new and basis.dim < full_dim:
        current_depth += 1
        candidates = [commutator(x, g) for x in new for g in normalized]
        before = basis.dim
        basis = extend_basis(basis, candidates, tol)
        new = list(basis.mats[before:])
        if new:
            depth = current_depth

    basis = _closure_sweep(basis, tol)
    return ClosureResult(basis, depth, len(normalized))


def _closure_sweep(basis, tol):
    # Safety net: all-pairs brackets until nothing new appears, so the
    # result is a genuine subalgebra even if the layered schedule lost a
    # direction to a borderline rank decision.
    while True:
        m = basis.mats
        if basis.dim == 0:
            return basis
        prod = np.einsum("iab,jbc->ijac", m, m)
        brackets = (prod - prod.transpose(1, 0, 2, 3)).reshape(-1, basis.n, basis.n)
        before = basis.dim
        basis = extend_basis(basis, brackets, tol)
        if basis.dim == before:
            return basis


def is_controllable(result, trace_class="detected"):
    """Controllability verdict from a closure result.

    detected (default): controllable-U iff the algebra is all of u(n),
    controllable-SU iff it has dimension n^2 - 1 with every basis element
    traceless (|tr| <= 1e-9), uncontrollable otherwise.  Passing 'u' or
    'su' skips the branch the caller knows cannot apply.
    """
    if trace_class not in ("detected", "u", "su"):
        raise ValueError(f"unknown trace_class {trace_class!r}")
    basis = result.basis
    n = basis.n
    if trace_class in ("detected", "u") and basis.dim == n * n:
        return CONTROLLABLE_U
    if trace_class in ("detected", "su") and basis.dim == n * n - 1:
        traces = np.abs(np.trace(basis.mats, axis1=1, axis2=2))
        if basis.dim == 0 or traces.max() <= 1e-9:
            return CONTROLLABLE_SU
    return UNCONTROLLABLE
