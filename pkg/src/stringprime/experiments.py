"""Runnable experiments: least containing prime, coverage thresholds,
prime arithmetic progressions, and relative densities.

All scans stream primes ascending from the segmented sieve, so results are
deterministic for a given limit.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass

from .digits import DigitString, as_digit_string, parse_digit_string
from .errors import DomainError
from .primes import is_prime, primes_up_to


@dataclass(frozen=True)
class CoverageResult:
    """Least prime bound m such that every length-l string with nonzero
    leading digit appears inside some prime <= m."""

    length: int
    universe_size: int
    m: int
    last_string: DigitString
    covered_at: dict[DigitString, int]

    def write_csv(self, path: str | os.PathLike) -> None:
        """Persist the coverage map as `string,first_containing_prime` rows."""
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["string", "first_containing_prime"])
            for s in sorted(self.covered_at, key=lambda d: d.digits):
                writer.writerow([s.text, self.covered_at[s]])


@dataclass(frozen=True)
class APResult:
    """An arithmetic progression of primes all containing one string."""

    first_term: int
    difference: int
    length: int
    terms: tuple[int, ...]


@dataclass(frozen=True)
class DensityReport:
    """Partition of the primes <= n by containment of one string."""

    pattern: DigitString
    n: int
    pi_n: int
    containing: int
    avoiding: int

    @property
    def density(self) -> float:
        return self.containing / self.pi_n if self.pi_n else 0.0


def least_prime_containing(
    pattern: DigitString | str,
    limit: int,
    cache_dir: str | os.PathLike | None = None,
) -> int | None:
    """Smallest prime <= limit containing the pattern, or None."""
    text = as_digit_string(pattern).text
    for p in primes_up_to(limit, cache_dir=cache_dir):
        if text in str(p):
            return p
    return None


def coverage_threshold(
    length: int,
    limit: int,
    cache_dir: str | os.PathLike | None = None,
    threads: int = 1,
) -> CoverageResult | None:
    """Scan primes ascending until every length-`length` string with a
    nonzero leading digit has appeared inside one; None if the limit is
    exhausted first.

    Windows inside a prime may start with 0, but only nonzero-led windows
    count toward the universe of 9 * 10^(length-1) strings.  Strings are
    marked in ascending-prime order, left to right within each prime, so the
    result (including which string completed coverage) is deterministic.
    """
    if not 1 <= length <= 6:
        raise DomainError("coverage is desk-scale only: 1 <= length <= 6")
    _check_threads(threads)
    lo = 10 ** (length - 1)
    universe = 9 * lo
    first_prime = [0] * (10 * lo)
    covered = 0
    for p in primes_up_to(limit, cache_dir=cache_dir):
        s = str(p)
        for i in range(len(s) - length + 1):
            if s[i] == "0":
                continue
            v = int(s[i : i + length])
            if first_prime[v] == 0:
                first_prime[v] = p
                covered += 1
                if covered == universe:
                    covered_at = {
                        parse_digit_string(str(u)): first_prime[u]
                        for u in range(lo, 10 * lo)
                    }
                    return CoverageResult(
                        length=length,
                        universe_size=universe,
                        m=p,
                        last_string=parse_digit_string(str(v)),
                        covered_at=covered_at,
                    )
    return None


def find_prime_ap(
    pattern: DigitString | str,
    k: int,
    limit: int,
    cache_dir: str | os.PathLike | None = None,
) -> APResult | None:
    """A k-term arithmetic progression of primes <= limit all containing the
    pattern, or None.

    Searches ascending first term, then ascending difference, over the
    filtered list of containing primes; the first hit is returned, with no
    minimality claim beyond that ordering.
    """
    if k < 3:
        raise DomainError("progression length k must be >= 3")
    if k > 6:
        raise DomainError("desk-scale search supports k <= 6")
    text = as_digit_string(pattern).text
    candidates = [p for p in primes_up_to(limit, cache_dir=cache_dir) if text in str(p)]
    member = set(candidates)
    for i, a in enumerate(candidates):
        max_d = (limit - a) // (k - 1)
        if max_d < 1:
            break
        for b in candidates[i + 1 :]:
            d = b - a
            if d > max_d:
                break
            if all(a + j * d in member for j in range(2, k)):
                terms = tuple(a + j * d for j in range(k))
                return APResult(first_term=a, difference=d, length=k, terms=terms)
    return None


def relative_density(
    pattern: DigitString | str,
    n: int,
    cache_dir: str | os.PathLike | None = None,
) -> DensityReport:
    """Exact split of the primes <= n into containing and avoiding."""
    return _density_scan(as_digit_string(pattern), [n], cache_dir)[0]


def density_table(
    pattern: DigitString | str,
    exponents: list[int],
    cache_dir: str | os.PathLike | None = None,
    threads: int = 1,
) -> list[DensityReport]:
    """One DensityReport per bound 10^e, all from a single sieve pass."""
    _check_threads(threads)
    if not exponents:
        return []
    if min(exponents) < 0:
        raise DomainError("exponents must be non-negative")
    bounds = [10**e for e in sorted(set(exponents))]
    return _density_scan(as_digit_string(pattern), bounds, cache_dir)


def _density_scan(pat: DigitString, bounds: list[int], cache_dir) -> list[DensityReport]:
    if min(bounds) < 1:
        raise DomainError("bounds must be >= 1")
    bounds = sorted(set(bounds))
    text = pat.text
    reports: list[DensityReport] = []
    pi_n = containing = 0
    idx = 0
    stream = primes_up_to(bounds[-1], cache_dir=cache_dir) if bounds[-1] >= 2 else []
    for p in stream:
        while idx < len(bounds) and p > bounds[idx]:
            reports.append(_density_report(pat, bounds[idx], pi_n, containing))
            idx += 1
        if idx == len(bounds):
            break
        pi_n += 1
        if text in str(p):
            containing += 1
    while idx < len(bounds):
        reports.append(_density_report(pat, bounds[idx], pi_n, containing))
        idx += 1
    return reports


def _density_report(pat: DigitString, n: int, pi_n: int, containing: int) -> DensityReport:
    return DensityReport(
        pattern=pat, n=n, pi_n=pi_n, containing=containing, avoiding=pi_n - containing
    )


def verify_ap(result: APResult, pattern: DigitString | str) -> bool:
    """Re-check an APResult term by term: primality, containment, spacing."""
    text = as_digit_string(pattern).text
    if result.difference <= 0 or len(result.terms) != result.length:
        return False
    for j, t in enumerate(result.terms):
        if t != result.first_term + j * result.difference:
            return False
        if not is_prime(t) or text not in str(t):
            return False
    return True


def _check_threads(threads: int) -> None:
    """`threads` caps worker parallelism; the scans run on one worker at
    desk scale, so any positive cap yields identical output."""
    if threads < 1:
        raise DomainError("threads must be >= 1")
