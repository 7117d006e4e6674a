"""constrq: constrained quantization at desk scale.

Strict quantization of the sphere by spin coherent states, linear symplectic
reduction, Rieffel induction of physical Hilbert spaces, lattice gauge
theory on a circle, theta-sectors, and projective-anomaly detection.
"""

from .errors import InvariantViolation, SpecFileError
from .linalg import (
    associator_defect,
    jb_inequality_defect,
    jordan,
    lie_bracket,
    operator_norm,
)
from .groups import (
    FiniteGroup,
    UnitaryRep,
    average_projector,
    characters_of_abelian,
    conjugacy_classes,
    quotient_group,
    tensor_rep,
)
from .sphere import (
    PolynomialObservable,
    SpherePoint,
    SpinLevel,
    classical_limit_check,
    coherent_state,
    quantize,
    strict_quantization_report,
    transition_probability,
)
from .reduction import (
    LatticeCircleConfig,
    LinearRealization,
    QuadraticObservable,
    SymplecticVectorSpace,
    fiber_product,
    gauge_orbit_invariant,
    holonomy,
    induce_classical,
    is_weak_observable,
    marsden_weinstein,
    reduce,
)
from .induction import (
    FiniteCStarAlgebra,
    HilbertModule,
    InductionResult,
    group_average_induction,
    induce,
    induction_in_stages,
    is_weak_observable_q,
    zero_form_gram,
)
from .gauge import LatticeGaugeModel, induced_observable, physical_space
from .theta import (
    ProjectiveRep,
    ThetaSectorProblem,
    anomalous_induction_probe,
    is_anomalous,
    multiplier_of,
    theta_sector,
)

__version__ = "0.1.0"

__all__ = [
    "InvariantViolation",
    "SpecFileError",
    "associator_defect",
    "jb_inequality_defect",
    "jordan",
    "lie_bracket",
    "operator_norm",
    "FiniteGroup",
    "UnitaryRep",
    "average_projector",
    "characters_of_abelian",
    "conjugacy_classes",
    "quotient_group",
    "tensor_rep",
    "PolynomialObservable",
    "SpherePoint",
    "SpinLevel",
    "classical_limit_check",
    "coherent_state",
    "quantize",
    "strict_quantization_report",
    "transition_probability",
    "LatticeCircleConfig",
    "LinearRealization",
    "QuadraticObservable",
    "SymplecticVectorSpace",
    "fiber_product",
    "gauge_orbit_invariant",
    "holonomy",
    "induce_classical",
    "is_weak_observable",
    "marsden_weinstein",
    "reduce",
    "FiniteCStarAlgebra",
    "HilbertModule",
    "InductionResult",
    "group_average_induction",
    "induce",
    "induction_in_stages",
    "is_weak_observable_q",
    "zero_form_gram",
    "LatticeGaugeModel",
    "induced_observable",
    "physical_space",
    "ProjectiveRep",
    "ThetaSectorProblem",
    "anomalous_induction_probe",
    "is_anomalous",
    "multiplier_of",
    "theta_sector",
]
