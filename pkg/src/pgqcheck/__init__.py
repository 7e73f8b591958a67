"""Exact verification of the non-existence of normalized torsion units
of mixed prime order p*q in integral group rings.

The package combines two independent obstructions: integrality and
non-negativity of eigenvalue multiplicities derived from character
values (the HeLP constraints), and a lattice criterion along a Brauer
tree line expressed through Littlewood-Richardson coefficients.  Case
files carry exact character data for concrete groups; the runner
reproduces the published exclusions for the three Conway groups.
"""

from .casefile import CaseError, CaseFile, TargetSpec, load_case
from .criterion import (
    DEFAULT_SIZE_CEILING,
    BrauerLineCase,
    ChainVerdict,
    CrossValidation,
    EigenvalueProfile,
    ModuleDecomposition,
    Theorem2Result,
    chain_feasibility,
    cross_validate,
    cross_validate_exhaustive,
    indecomposable_partition,
    theorem2_check,
)
from .forma import (
    FormABoundsReport,
    FormADecomposition,
    classify_form_A,
    verify_form_A_bounds,
)
from .helpenum import (
    DEFAULT_BOUND,
    CandidateSet,
    HelpQuery,
    candidate_flat_tuple,
    enumerate_order_pq,
    enumerate_prime_order,
    prime_flat_tuple,
)
from .multiplicities import (
    CharacterData,
    ClassInfo,
    Infeasible,
    MultiplicityPair,
    MultiplicityQuadruple,
    PartialAugmentationVector,
    UnitCandidate,
    chi_of_unit,
    forward_character_values,
    is_prime,
    multiplicities_order_pq,
    multiplicities_prime_order,
    prime_pair,
)
from .report import (
    parse_structured,
    render_figures,
    render_structured,
    render_text,
    to_structured,
)
from .runner import (
    CandidateReport,
    CaseReport,
    RunError,
    TargetReport,
    exit_status,
    run_case,
    run_target,
)
from .tableaux import (
    SkewShape,
    SkewTableau,
    check_partition,
    contains,
    content,
    enumerate_lr_tableaux,
    gamma,
    is_lattice_word,
    is_semistandard,
    lr_coefficient,
    lr_nonzero_contents,
    reading_word,
    satisfies_lattice_property,
)

__version__ = "0.1.0"

__all__ = [
    "BrauerLineCase",
    "CandidateReport",
    "CandidateSet",
    "CaseError",
    "CaseFile",
    "CaseReport",
    "ChainVerdict",
    "CharacterData",
    "ClassInfo",
    "CrossValidation",
    "DEFAULT_BOUND",
    "DEFAULT_SIZE_CEILING",
    "EigenvalueProfile",
    "FormABoundsReport",
    "FormADecomposition",
    "HelpQuery",
    "Infeasible",
    "ModuleDecomposition",
    "MultiplicityPair",
    "MultiplicityQuadruple",
    "PartialAugmentationVector",
    "RunError",
    "SkewShape",
    "SkewTableau",
    "TargetReport",
    "TargetSpec",
    "Theorem2Result",
    "UnitCandidate",
    "candidate_flat_tuple",
    "chain_feasibility",
    "check_partition",
    "chi_of_unit",
    "classify_form_A",
    "contains",
    "content",
    "cross_validate",
    "cross_validate_exhaustive",
    "enumerate_lr_tableaux",
    "enumerate_order_pq",
    "enumerate_prime_order",
    "exit_status",
    "forward_character_values",
    "gamma",
    "indecomposable_partition",
    "is_lattice_word",
    "is_prime",
    "is_semistandard",
    "load_case",
    "lr_coefficient",
    "lr_nonzero_contents",
    "multiplicities_order_pq",
    "multiplicities_prime_order",
    "parse_structured",
    "prime_flat_tuple",
    "prime_pair",
    "reading_word",
    "render_figures",
    "render_structured",
    "render_text",
    "run_case",
    "run_target",
    "satisfies_lattice_property",
    "theorem2_check",
    "to_structured",
    "verify_form_A_bounds",
    "__version__",
]
