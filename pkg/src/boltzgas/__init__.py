"""Exact occupation statistics of an isolated quantized ideal gas.

N distinguishable particles share M indivisible energy quanta over levels
0..M; every labeled assignment with total energy M is equally likely. The
library provides exact (rational-arithmetic) microstate counts, occupation
moments and distributions, their large-system limits, fluctuation measures,
a uniform Monte Carlo sampler, and executable checks of the algebraic
identities underlying the closed forms.
"""

from .combinatorics import (
    ExactRational,
    binomial,
    multinomial_weight,
    power_of_sum_coefficient,
    stirling_like_row,
    triangle_coefficient,
)
from .distributions import (
    DistributionTable,
    LimitValidityWarning,
    NormalApproximation,
    joint_pdf_exact,
    joint_pdf_multinomial_limit,
    macrostate_probability_exact,
    macrostate_probability_largeN,
    multinomial_trial_probabilities,
    occupation_pdf_binomial_limit,
    occupation_pdf_exact,
    occupation_pdf_normal_limit,
    occupation_pdf_window,
)
from .enumeration import (
    WeightedMacrostate,
    enumerate_macrostates,
    microstate_count,
    oracle_joint_pdf,
    oracle_moment,
    oracle_pdf,
)
from .figures import FigureData, figure_data
from .fluctuations import (
    CovarianceMatrix,
    covariance_matrix,
    mean_vector,
    pearson_correlation,
    total_fluctuation_ratio,
)
from .identities import (
    IdentityReport,
    TruncatedSeries,
    check_differential_identity,
    check_joint_normalization,
    check_power_of_sum,
    check_simplex_sum_ii,
    measure_sum_of_powers_residual,
    reports_to_json,
    run_standard_battery,
    sum_of_powers_residual_slope,
)
from .moments import (
    BOLTZMANN_CONSTANT,
    density_moment_factorized,
    density_moment_limit,
    exact_moment,
    max_variance_point,
    physical_temperature,
    std_over_mean,
    variance_exact,
    variance_limit,
)
from .montecarlo import (
    EmpiricalStats,
    SamplerConfig,
    ZScoreRow,
    empirical_stats,
    sample_microstate,
    z_score_report,
)
from .system import OccupationVector, SystemParams, as_occupation

__version__ = "0.1.0"

__all__ = [
    "BOLTZMANN_CONSTANT",
    "CovarianceMatrix",
    "DistributionTable",
    "EmpiricalStats",
    "ExactRational",
    "FigureData",
    "IdentityReport",
    "LimitValidityWarning",
    "NormalApproximation",
    "OccupationVector",
    "SamplerConfig",
    "SystemParams",
    "TruncatedSeries",
    "WeightedMacrostate",
    "ZScoreRow",
    "as_occupation",
    "binomial",
    "check_differential_identity",
    "check_joint_normalization",
    "check_power_of_sum",
    "check_simplex_sum_ii",
    "covariance_matrix",
    "density_moment_factorized",
    "density_moment_limit",
    "empirical_stats",
    "enumerate_macrostates",
    "exact_moment",
    "figure_data",
    "joint_pdf_exact",
    "joint_pdf_multinomial_limit",
    "macrostate_probability_exact",
    "macrostate_probability_largeN",
    "max_variance_point",
    "mean_vector",
    "measure_sum_of_powers_residual",
    "microstate_count",
    "multinomial_trial_probabilities",
    "multinomial_weight",
    "occupation_pdf_binomial_limit",
    "occupation_pdf_exact",
    "occupation_pdf_normal_limit",
    "occupation_pdf_window",
    "oracle_joint_pdf",
    "oracle_moment",
    "oracle_pdf",
    "pearson_correlation",
    "physical_temperature",
    "power_of_sum_coefficient",
    "reports_to_json",
    "run_standard_battery",
    "sample_microstate",
    "stirling_like_row",
    "std_over_mean",
    "sum_of_powers_residual_slope",
    "total_fluctuation_ratio",
    "triangle_coefficient",
    "variance_exact",
    "variance_limit",
    "z_score_report",
]
