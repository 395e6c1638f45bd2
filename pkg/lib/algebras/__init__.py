"""
代数モジュール
Racah / Heun-Racah / Bannai-Ito / Heun-Bannai-Ito の行列実現と検証
"""

from .errors import PreconditionError
from .racah import (
    ALPHA_TRUNC,
    BETA_DELTA_TRUNC,
    GAMMA_TRUNC,
    TRUNCATIONS,
    RacahParams,
    RacahConstants,
    RacahRealization,
    ReducedRacah,
    EquitableRacah,
    complete_racah_params,
    racah_constants,
    racah_realization,
    fit_racah_constants,
    verify_racah,
    casimir_racah,
    to_reduced,
    to_equitable,
    verify_racah_spectrum,
    run_racah_suite,
)
from .heun_racah import (
    FREE_NAMES,
    HeunRacahParams,
    TauParams,
    HRConstants,
    build_heun_racah,
    apply_racah_truncation,
    truncation_nullity,
    verify_degree_raising,
    specialize_to_racah,
    algebraic_heun_racah,
    tau_to_pi,
    recover_heun_racah_params,
    hr_constants_from_phi,
    verify_heun_racah_algebra,
    omega,
    run_heun_racah_suite,
)
from .bannai_ito import (
    BIParams,
    BIConstants,
    BIRealization,
    complete_bi_parameters,
    bi_constants,
    bi_realization,
    verify_bi,
    verify_bi_spectrum,
    quadratic_generators,
    racah_in_bi,
    even_case_combinations,
    enumerate_even_cases,
    run_bannai_ito_suite,
)
from .heun_bi import (
    P_NAMES,
    HBIParams,
    HBIConstants,
    build_hbi,
    apply_bi_truncation_constraints,
    bi_truncation_nullity,
    verify_hbi_degree_raising,
    algebraic_heun_bi,
    tau_to_p,
    recover_hbi_params,
    hbi_constants_from_psi,
    verify_hbi_algebra,
    lambda_element,
    fit_upsilon,
    run_heun_bi_suite,
    run_upsilon_suite,
)

__all__ = [
    'PreconditionError',
    'ALPHA_TRUNC',
    'BETA_DELTA_TRUNC',
    'GAMMA_TRUNC',
    'TRUNCATIONS',
    'RacahParams',
    'RacahConstants',
    'RacahRealization',
    'ReducedRacah',
    'EquitableRacah',
    'complete_racah_params',
    'racah_constants',
    'racah_realization',
    'fit_racah_constants',
    'verify_racah',
    'casimir_racah',
    'to_reduced',
    'to_equitable',
    'verify_racah_spectrum',
    'run_racah_suite',
    'FREE_NAMES',
    'HeunRacahParams',
    'TauParams',
    'HRConstants',
    'build_heun_racah',
    'apply_racah_truncation',
    'truncation_nullity',
    'verify_degree_raising',
    'specialize_to_racah',
    'algebraic_heun_racah',
    'tau_to_pi',
    'recover_heun_racah_params',
    'hr_constants_from_phi',
    'verify_heun_racah_algebra',
    'omega',
    'run_heun_racah_suite',
    'BIParams',
    'BIConstants',
    'BIRealization',
    'complete_bi_parameters',
    'bi_constants',
    'bi_realization',
    'verify_bi',
    'verify_bi_spectrum',
    'quadratic_generators',
    'racah_in_bi',
    'even_case_combinations',
    'enumerate_even_cases',
    'run_bannai_ito_suite',
    'P_NAMES',
    'HBIParams',
    'HBIConstants',
    'build_hbi',
    'apply_bi_truncation_constraints',
    'bi_truncation_nullity',
    'verify_hbi_degree_raising',
    'algebraic_heun_bi',
    'tau_to_p',
    'recover_hbi_params',
    'hbi_constants_from_psi',
    'verify_hbi_algebra',
    'lambda_element',
    'fit_upsilon',
    'run_heun_bi_suite',
    'run_upsilon_suite',
]
