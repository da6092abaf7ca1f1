"""Exact monomial-ideal algebra with closed-form verification for path independence ideals."""

__version__ = "0.1.0"

from .closedform import (
    ParityPrime,
    PredictedDecomposition,
    enumerate_parity_primes,
    predicted_ass,
    predicted_astab,
    predicted_decomposition_2t,
    predicted_ntf,
    predicted_stable_set,
    witness_monomial,
)
from .decomposition import (
    DecompositionCache,
    IrreducibleComponent,
    VarPrime,
    WitnessCheck,
    associated_primes,
    intersect_components,
    irredundant_filter,
    irreducible_decomposition,
    minimal_primes_squarefree,
    verify_witness,
)
from .ideal import ImproperIdeal, MonomialIdeal
from .monomial import DimensionMismatch, ExponentOverflow, Monomial
from .pathfamily import (
    ComplementChecks,
    PathCase,
    PathFamilyParams,
    ZeroIdealError,
    classify,
    complement_components,
    generator_2t,
    ind_ideal,
    independent_set_count,
    independent_sets,
    parity_complement_checks,
)
from .verify import (
    AstabResult,
    VerificationReport,
    WitnessOutcome,
    empirical_astab,
    grid_scan,
    persistence_scan,
    verify_cell,
)

__all__ = [
    "__version__",
    "Monomial",
    "MonomialIdeal",
    "DimensionMismatch",
    "ExponentOverflow",
    "ImproperIdeal",
    "VarPrime",
    "IrreducibleComponent",
    "DecompositionCache",
    "WitnessCheck",
    "irreducible_decomposition",
    "irredundant_filter",
    "intersect_components",
    "associated_primes",
    "verify_witness",
    "minimal_primes_squarefree",
    "PathCase",
    "PathFamilyParams",
    "ZeroIdealError",
    "classify",
    "independent_sets",
    "independent_set_count",
    "ind_ideal",
    "generator_2t",
    "complement_components",
    "parity_complement_checks",
    "ComplementChecks",
    "ParityPrime",
    "PredictedDecomposition",
    "enumerate_parity_primes",
    "predicted_ass",
    "predicted_astab",
    "predicted_stable_set",
    "predicted_ntf",
    "predicted_decomposition_2t",
    "witness_monomial",
    "VerificationReport",
    "WitnessOutcome",
    "AstabResult",
    "verify_cell",
    "persistence_scan",
    "empirical_astab",
    "grid_scan",
]
