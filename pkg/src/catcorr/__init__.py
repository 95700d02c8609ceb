"""Pairwise quantum correlations of multimode coherent-state superpositions.

The package maps balanced two-branch superpositions of n product
coherent states onto logical qubit pairs and computes their geometric
quantum discord and Wootters concurrence, in closed form and through
independent numerical routes, including the decay of both under local
phase damping.
"""

from .correlations import (
    Branch,
    CorrelationReport,
    DiscordWitness,
    MeasurementSide,
    branch_and_discord,
    concurrence_mixed,
    concurrence_pure,
    geometric_discord_numeric,
    geometric_discord_pure_closed,
    k_matrix,
    mixed_discord_closed,
    mixed_k_eigenvalues,
    werner_limit_discord,
    werner_limit_k_eigenvalues,
    zero_discord_witness,
)
from .dephasing import (
    DephasingParams,
    apply_dephasing,
    concurrence_trajectory,
    discord_trajectory,
    kraus_ops,
    sudden_death_time,
)
from .errors import (
    CatcorrError,
    DivergentNormalizationError,
    DomainError,
    InvalidDensityError,
    UnsupportedOverlapError,
)
from .kernels import WEYL_HEISENBERG, Family, FamilyParams, overlap, su2, su11
from .linalg import eig_herm, eig_sym, sqrtm_psd
from .oracle import (
    MeasurementBasis,
    discord_by_measurement_search,
    fibonacci_sphere,
    measurement_distance,
    pair_density_from_overlaps,
)
from .states import (
    BlochForm,
    Parity,
    PureSplit,
    SuperpositionSpec,
    bloch_compose,
    bloch_decompose,
    check_density,
    normalization,
    partial_trace,
    pure_split,
    qubit_map_coeffs,
    reduced_pair_density,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "BlochForm",
    "CatcorrError",
    "CorrelationReport",
    "DephasingParams",
    "DiscordWitness",
    "DivergentNormalizationError",
    "DomainError",
    "Family",
    "FamilyParams",
    "InvalidDensityError",
    "MeasurementBasis",
    "MeasurementSide",
    "Parity",
    "PureSplit",
    "SuperpositionSpec",
    "UnsupportedOverlapError",
    "WEYL_HEISENBERG",
    "apply_dephasing",
    "bloch_compose",
    "bloch_decompose",
    "branch_and_discord",
    "check_density",
    "concurrence_mixed",
    "concurrence_pure",
    "concurrence_trajectory",
    "discord_by_measurement_search",
    "discord_trajectory",
    "eig_herm",
    "eig_sym",
    "fibonacci_sphere",
    "geometric_discord_numeric",
    "geometric_discord_pure_closed",
    "k_matrix",
    "kraus_ops",
    "measurement_distance",
    "mixed_discord_closed",
    "mixed_k_eigenvalues",
    "normalization",
    "overlap",
    "pair_density_from_overlaps",
    "partial_trace",
    "pure_split",
    "qubit_map_coeffs",
    "reduced_pair_density",
    "sqrtm_psd",
    "su11",
    "su2",
    "sudden_death_time",
    "werner_limit_discord",
    "werner_limit_k_eigenvalues",
    "zero_discord_witness",
]
