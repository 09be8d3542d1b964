"""Digit strings inside prime numbers: exact avoidance counting, explicit
least-prime bounds, coverage experiments, and prime arithmetic progressions.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    asymptotic_prediction,
    bound_report,
    coupon_prediction,
    solve_log_n,
    theorem_bound_exact,
    theorem_bound_simple,
)
from .counting import (
    BaseRContext,
    PatternAutomaton,
    avoider_density_bound,
    base_r_digit_avoiders,
    build_automaton,
    count_avoiders,
    hw_upper_bound,
)
from .digits import DigitString, contains, decimal_digits, parse_digit_string, windows
from .errors import (
    CountOverflowError,
    DomainError,
    InvalidInputError,
    ResourceLimitError,
    StringPrimeError,
)
from .experiments import (
    APResult,
    CoverageResult,
    DensityReport,
    coverage_threshold,
    density_table,
    find_prime_ap,
    least_prime_containing,
    relative_density,
    verify_ap,
)
from .primes import PrimeStream, SieveSegment, is_prime, prime_count, prime_mask, primes_up_to, rosser_lower

__all__ = [
    "APResult",
    "BaseRContext",
    "BoundReport",
    "CountOverflowError",
    "CoverageResult",
    "DensityReport",
    "DigitString",
    "DomainError",
    "InvalidInputError",
    "PatternAutomaton",
    "PrimeStream",
    "ResourceLimitError",
    "SieveSegment",
    "StringPrimeError",
    "asymptotic_prediction",
    "avoider_density_bound",
    "base_r_digit_avoiders",
    "bound_report",
    "build_automaton",
    "contains",
    "count_avoiders",
    "coupon_prediction",
    "coverage_threshold",
    "decimal_digits",
    "density_table",
    "find_prime_ap",
    "hw_upper_bound",
    "is_prime",
    "least_prime_containing",
    "parse_digit_string",
    "prime_count",
    "prime_mask",
    "primes_up_to",
    "relative_density",
    "rosser_lower",
    "solve_log_n",
    "theorem_bound_exact",
    "theorem_bound_simple",
    "verify_ap",
    "windows",
]
