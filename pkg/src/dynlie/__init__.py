"""Dynamical Lie algebras of bilinear quantum control systems.

Compute the Lie closure of a system's Hamiltonian terms, split the
resulting subalgebra of u(n) into its radical and simple ideals (via
Levi, Cartan, and primary decompositions), and propagate the system as
a commuting product of decoupled factors.
"""

from .adjoint import (
    adjoint_in_span,
    adjoint_matrix,
    is_semisimple,
    killing_gram,
    killing_orthonormalize,
    structure_tensor,
)
from .cartan import CartanResult, cartan_subalgebra, centralizer, normalizer
from .closure import (
    CONTROLLABLE_SU,
    CONTROLLABLE_U,
    UNCONTROLLABLE,
    ClosureResult,
    generate_closure,
    is_controllable,
)
from .dynamics import (
    ComponentDecomposition,
    ControlSchedule,
    PropagationResult,
    SystemAnalysis,
    analyze_system,
    decompose_system,
    project_generator,
    propagate,
)
from .errors import (
    DecompositionError,
    LieAlgebraError,
    NotClosedError,
    NotInSpanError,
    NotSemisimpleError,
    SplittingSearchError,
    StageFailure,
)
from .ideals import IdealSet, minimal_ideal, recognize_su2, simple_decompose
from .levi import LeviResult, center, derived_algebra, levi_decompose
from .linalg import (
    LieBasis,
    TOL_EIG,
    TOL_HERM,
    TOL_KILLING,
    TOL_RANK,
    commutator,
    empty_basis,
    expm_skew,
    extend_basis,
    frobenius,
    from_coords,
    hs_inner,
    member_coords,
    project_span,
    nullspace,
    skew_hermitian,
)
from .models import (
    ControlSystem,
    control_system,
    generator,
    hamiltonian,
    kron,
    pauli,
    two_spin_system,
)
from .primary import (
    PrimaryResult,
    SplittingElement,
    find_splitting_element,
    primary_decompose,
)

__version__ = "0.1.0"
