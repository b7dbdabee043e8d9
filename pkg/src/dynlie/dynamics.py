"""End-to-end decomposition pipeline and decoupled propagation.

Once the dynamical Lie algebra is split into commuting pieces (simple
ideals plus one-dimensional radical lines), the generator of any control
value projects onto the pieces, and the full propagator factors into a
commuting product of per-piece propagators.  For piecewise-constant
schedules each factor is an exact product of matrix exponentials, so the
factorization error stays at numerical noise.
"""

from dataclasses import dataclass

import numpy as np

from .adjoint import adjoint_matrix
from .cartan import CartanResult, cartan_subalgebra
from .closure import ClosureResult, generate_closure, is_controllable
from .errors import LieAlgebraError, NotInSpanError, StageFailure
from .ideals import IdealSet, recognize_su2, simple_decompose
from .levi import LeviResult, levi_decompose
from .linalg import (
    LieBasis,
    TOL_EIG,
    TOL_RANK,
    _vec,
    expm_skew,
    member_coords,
)
from .models import generator
from .primary import PrimaryResult, primary_decompose

KIND_SIMPLE = "simple"
KIND_RADICAL = "radical-line"


@dataclass(frozen=True)
class ComponentDecomposition:
    """The algebra as an ordered orthogonal sum of commuting pieces.

    ``components`` holds (kind, basis) pairs, simple ideals first and
    radical lines last; ``adapted`` is the concatenated basis of the
    whole algebra in that order.
    """

    full: LieBasis
    components: tuple
    adapted: LieBasis


@dataclass(frozen=True)
class ControlSchedule:
    """Piecewise-constant control schedule: (duration, u) segments."""

    segments: tuple

    def __post_init__(self):
        cleaned = []
        for seg in self.segments:
            dur, u = seg
            dur = float(dur)
            if not dur > 0.0:
                raise ValueError(f"segment durations must be positive, got {dur}")
            cleaned.append((dur, np.asarray(u, dtype=float)))
        object.__setattr__(self, "segments", tuple(cleaned))

    @property
    def total_time(self):
        return sum(d for d, _ in self.segments)


@dataclass(frozen=True)
class SystemAnalysis:
    """Every intermediate of the decomposition pipeline, for reporting."""

    system: object
    closure: ClosureResult
    verdict: str
    levi: LeviResult
    cartan: CartanResult
    primary: PrimaryResult
    ideals: IdealSet
    decomposition: ComponentDecomposition


@dataclass(frozen=True)
class PropagationResult:
    """Total propagator, commuting per-component factors, and residuals."""

    total: np.ndarray
    factors: tuple
    times: float
    factorization_error: float
    commutation_residual: float


def _stage(name, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except StageFailure:
        raise
    except LieAlgebraError as err:
        raise StageFailure(name, err) from err


def analyze_system(system, tol=TOL_RANK, eig_tol=TOL_EIG, pivots=None,
                   splitting_coeffs=None):
    """Run the full pipeline: closure, Levi split, Cartan subalgebra,
    primary decomposition, simple ideals, component assembly.

    ``pivots`` and ``splitting_coeffs`` thread through to the Cartan and
    splitting searches so a specific construction can be reproduced.
    Numerical failures surface as StageFailure naming the stage.
    """
    gens = [1j * system.drift] + [1j * c for c in system.controls]
    closure = _stage("closure", generate_closure, gens, tol)
    verdict = is_controllable(closure)
    levi = _stage("levi", levi_decompose, closure.basis, tol)
    cartan = None
    primary = None
    ideal_set = None
    simple_bases = ()
    if levi.semisimple.dim > 0:
        cartan = _stage("cartan", cartan_subalgebra, levi.semisimple,
                        pivots=pivots, tol=tol)
        coeffs = None if splitting_coeffs is None else [splitting_coeffs]
        primary = _stage("primary", primary_decompose, levi.semisimple,
                         cartan.cartan, tol=tol, eig_tol=eig_tol, coeffs=coeffs)
        ideal_set = _stage("ideals", simple_decompose, levi.semisimple,
                           primary, tol)
        simple_bases = ideal_set.ideals
    components = tuple([(KIND_SIMPLE, b) for b in simple_bases]
                       + [(KIND_RADICAL, line) for line in levi.radical_lines])
    mats = [b.mats for _, b in components]
    adapted = (LieBasis(closure.basis.n, np.concatenate(mats)) if mats
               else LieBasis(closure.basis.n))
    if adapted.dim != closure.basis.dim:
        raise StageFailure("assembly", NotInSpanError(
            "adapted basis does not span the full algebra"))
    decomposition = ComponentDecomposition(full=closure.basis,
                                           components=components,
                                           adapted=adapted)
    return SystemAnalysis(system=system, closure=closure, verdict=verdict,
                          levi=levi, cartan=cartan, primary=primary,
                          ideals=ideal_set, decomposition=decomposition)


def decompose_system(system, tol=TOL_RANK, eig_tol=TOL_EIG, pivots=None,
                     splitting_coeffs=None):
    """Commuting-component decomposition of the system's dynamical algebra."""
    return analyze_system(system, tol, eig_tol, pivots,
                          splitting_coeffs).decomposition


def project_generator(decomp, system, u, tol=TOL_RANK):
    """Pieces of -i H(u) along each component, in component order.

    The sum of the pieces reconstructs the generator (that is exactly the
    orthogonal projection onto the adapted basis, which must contain it).
    """
    g = generator(system, u)
    coords = member_coords(decomp.adapted, g, tol)
    if coords is None:
        raise NotInSpanError(
            "generator leaves the dynamical algebra; controls inconsistent "
            "with the decomposition")
    pieces = []
    offset = 0
    for _, basis in decomp.components:
        block = coords[offset:offset + basis.dim]
        pieces.append(np.einsum("i,inm->nm", block, basis.mats))
        offset += basis.dim
    return pieces


def propagate(decomp, system, schedule, tol=TOL_RANK):
    """Propagate the system as a commuting product of component factors.

    Every segment contributes exact exponentials exp(dur * piece) per
    component (later segments multiply from the left) and the same for
    the unfactored generator.  Factors are reported in component order;
    the factorization error compares the total against the product taken
    radical lines first, then simple ideals.
    """
    n = system.dim
    k = len(decomp.components)
    factors = [np.eye(n, dtype=complex) for _ in range(k)]
    total = np.eye(n, dtype=complex)
    elapsed = 0.0
    for dur, u in schedule.segments:
        pieces = project_generator(decomp, system, u, tol)
        for c in range(k):
            factors[c] = expm_skew(pieces[c], dur) @ factors[c]
        total = expm_skew(generator(system, u), dur) @ total
        elapsed += dur
    ordered = [f for (kind, _), f in zip(decomp.components, factors)
               if kind == KIND_RADICAL]
    ordered += [f for (kind, _), f in zip(decomp.components, factors)
                if kind == KIND_SIMPLE]
    product = np.eye(n, dtype=complex)
    for f in ordered:
        product = product @ f
    fact_err = float(np.linalg.norm(total - product))
    worst_comm = 0.0
    for i in range(k):
        for j in range(i + 1, k):
            worst_comm = max(worst_comm, float(np.linalg.norm(
                factors[i] @ factors[j] - factors[j] @ factors[i])))
    return PropagationResult(total=total, factors=tuple(factors),
                             times=elapsed, factorization_error=fact_err,
                             commutation_residual=worst_comm)


def structure_residuals(analysis, tol=TOL_RANK):
    """Numerical residuals behind each structural claim, for reporting."""
    res = {}
    levi = analysis.levi
    basis = analysis.closure.basis
    res["radical_commutes_with_algebra"] = _worst_bracket(levi.radical, basis)
    res["radical_abelian"] = _worst_bracket(levi.radical, levi.radical)
    if analysis.cartan is not None:
        cart = analysis.cartan.cartan
        res["cartan_abelian"] = _worst_bracket(cart, cart)
    if analysis.primary is not None:
        worst = 0.0
        for a in analysis.primary.cartan.mats:
            for _, comp in analysis.primary.components:
                worst = max(worst, _invariance_residual(a, comp))
        res["component_invariance"] = worst
        res["splitting_real_parts"] = _splitting_real_part(
            analysis, tol)
    if analysis.ideals is not None:
        ideals = analysis.ideals.ideals
        worst = 0.0
        for i in range(len(ideals)):
            for j in range(i + 1, len(ideals)):
                worst = max(worst, _worst_bracket(ideals[i], ideals[j]))
        res["ideals_commute"] = worst
    recon = 0.0
    for x in basis.mats:
        coords = member_coords(analysis.decomposition.adapted, x, tol)
        if coords is None:
            recon = float("inf")
            break
        back = np.einsum("i,inm->nm", coords,
                         analysis.decomposition.adapted.mats)
        recon = max(recon, float(np.linalg.norm(back - x)))
    res["adapted_reconstruction"] = recon
    return res


def _worst_bracket(a, b):
    if a.dim == 0 or b.dim == 0:
        return 0.0
    worst = 0.0
    for x in a.mats:
        br = x @ b.mats - b.mats @ x
        worst = max(worst, float(np.linalg.norm(br, axis=(1, 2)).max()))
    return worst


def _invariance_residual(x, comp):
    br = x @ comp.mats - comp.mats @ x
    bv = _vec(br)
    resid = bv - (bv @ comp.vecs.T) @ comp.vecs
    return float(np.linalg.norm(resid, axis=1).max())


def _splitting_real_part(analysis, tol):
    ad = adjoint_matrix(analysis.levi.semisimple,
                        analysis.primary.splitting.element, tol)
    eigs = np.linalg.eigvals(ad)
    return float(np.abs(eigs.real).max()) if eigs.size else 0.0


def su2_flags(analysis, tol=TOL_RANK):
    """recognize_su2 verdict per simple component of the decomposition."""
    flags = []
    for kind, basis in analysis.decomposition.components:
        if kind != KIND_SIMPLE:
            flags.append(False)
            continue
        flags.append(recognize_su2(basis, tol) is not None)
    return flags
