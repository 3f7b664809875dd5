from subseqbounds.balanced import (
    BalancedCounter,
    b_closed,
    b_prime_closed,
    b_prime_recursive,
    b_recursive,
    p0_count,
    p_count,
    upper_bound_general,
)
from subseqbounds.bounds import (
    BoundsReport,
    binomial,
    bounds_report,
    d_cyclic,
    hr_lower,
    hr_upper,
    lev_lower,
    lev_upper,
    multiset_coeff,
    naive_upper,
)
from subseqbounds.exact import (
    OracleCapExceeded,
    count_all_t,
    count_subsequences,
    count_subsequences_by_first_run,
    count_subsequences_by_last_run,
    enumerate_subsequences,
    oracle_counts,
)
from subseqbounds.patterns import (
    balanced_pattern_upper,
    pattern_count,
    pattern_count_balanced,
    pattern_gap_constant,
    pattern_gap_factor,
    pattern_gap_report,
    pattern_sandwich_check,
    pattern_symmetry_check,
)
from subseqbounds.runstring import (
    RunString,
    make_balanced,
    make_balanced_prime,
    make_cyclic,
    make_unbalanced,
    parse_string,
)
from subseqbounds.suites import SUITES, SuiteResult, run_suite
from subseqbounds.sweep import SweepRow, check_sweep, sweep_rows, write_csv
from subseqbounds.transforms import (
    PreconditionError,
    TransformTrace,
    balance_step,
    balance_trace,
    flip_suffix,
    flip_trace,
    insert_symbol,
    unbalance_step,
    unbalance_trace,
    verify_monotone,
)
from subseqbounds.unbalanced import (
    lower_bound_general,
    lower_bound_unified,
    lower_gap_report,
    u_closed,
    u_recursive,
)
