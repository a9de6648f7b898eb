"""Brute-force oracles that check the constructive modules against the sort.

The independent side of every check is :func:`sospart.sos.sos_permutation`
(a plain exact sort) plus exact arithmetic.  Failures are collected as data
rather than raised, so one report shows every violation.
"""

import json
import random
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

from .farey import farey_intervals, farey_sequence, totient_partial_sum
from .geometry import partition
from .sos import count_sos, enumerate_sos, gap_profile, sos_permutation, sos_recurrence

__all__ = [
    "Failure",
    "OracleReport",
    "inversion_set",
    "oracle_partition_check",
    "oracle_bijection_check",
    "oracle_three_gaps",
]

MAX_FAILURES = 50


@dataclass(frozen=True)
class Failure:
    check: str
    witness: str
    expected: str
    actual: str


@dataclass
class OracleReport:
    name: str
    n: int
    checks_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    skipped: int = 0
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, name: str, witness, expected, actual):
        self.checks_run += 1
        if not ok and len(self.failures) < MAX_FAILURES:
            self.failures.append(Failure(name, str(witness), str(expected), str(actual)))
        elif not ok:
            self.stats["failures_truncated"] = self.stats.get("failures_truncated", 0) + 1

    def to_dict(self) -> dict:
        return {
            "oracle": self.name,
            "n": self.n,
            "passed": self.passed,
            "checks_run": self.checks_run,
            "skipped": self.skipped,
            "stats": dict(sorted(self.stats.items())),
            "failures": [vars(f) for f in self.failures],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def inversion_set(p) -> set[tuple[int, int]]:
    entries = list(p)
    m = len(entries)
    return {(i, j) for i in range(m) for j in range(i + 1, m) if entries[i] > entries[j]}


def _on_diagonal(alpha_num: int, beta_num: int, den: int, n: int) -> bool:
    """Whether i*alpha + beta is an integer for some 1 <= i <= n, with
    alpha = alpha_num/den and beta = beta_num/den."""
    return any((i * alpha_num + beta_num) % den == 0 for i in range(1, n + 1))


def oracle_partition_check(n: int, grid: int, require_coverage: bool | None = None) -> OracleReport:
    """Sort at every half-step grid point and compare with the polygon hit.

    Grid points are ((2i+1)/2g, (2j+1)/2g).  A point lying exactly on a
    partition line is skipped and counted.  For each column the polygon
    extents on that vertical line are read off the vertex lists, so the
    geometric side never consults j_bot or j_top.
    """
    if grid < 2 * n * n:
        raise ValueError(f"grid must be at least 2n^2 = {2 * n * n}")
    if require_coverage is None:
        require_coverage = grid >= 4 * n ** 3
    report = OracleReport("partition", n)
    part = partition(n)
    strips = part.strips()
    lefts = [iv.lo for iv, _ in strips]
    hit = set()
    den = 2 * grid
    for i in range(grid):
        alpha = Fraction(2 * i + 1, den)
        if alpha.denominator <= n:
            report.skipped += grid
            continue
        iv, doms = strips[bisect_right(lefts, alpha) - 1]
        ranges = sorted(((dom.beta_range_at(alpha), dom) for dom in doms), key=lambda r: r[0])
        lows = [lo for (lo, _), _ in ranges]
        for j in range(grid):
            beta = Fraction(2 * j + 1, den)
            if _on_diagonal(2 * i + 1, 2 * j + 1, den, n):
                report.skipped += 1
                continue
            label = sos_permutation(alpha, beta, n)
            idx = bisect_right(lows, beta) - 1
            found = None
            if idx >= 0:
                (lo, hi), dom = ranges[idx]
                if lo < beta < hi:
                    found = dom
            actual = str(found.perm) if found else "no domain"
            report.check(found is not None and found.perm == label,
                         "label", (alpha, beta), label, actual)
            if found is not None:
                hit.add(found.perm)
    report.stats.update(grid=grid, points=grid * grid, domains=len(part), domains_hit=len(hit))
    if require_coverage:
        missing = [str(dom.perm) for dom in part if dom.perm not in hit]
        report.check(not missing, "coverage", f"grid={grid}", len(part), f"missing {missing[:10]}")
    return report


def _random_inside(lo: Fraction, hi: Fraction, rng: random.Random, scale: int = 10**6) -> Fraction:
    return lo + (hi - lo) * Fraction(rng.randint(1, scale - 1), scale)


def oracle_bijection_check(n: int, seed: int = 0) -> OracleReport:
    """Intervals of F^(n) against permutations with beta = 0, both directions."""
    rng = random.Random(seed)
    report = OracleReport("bijection", n)
    intervals = farey_intervals(n)
    perms = {}
    for iv in intervals:
        perm = sos_recurrence(iv, n)
        alpha = _random_inside(iv.lo, iv.hi, rng)
        report.check(sos_permutation(alpha, 0, n) == perm, "sample", (str(iv), alpha),
                     perm, sos_permutation(alpha, 0, n))
        report.check(perm not in perms, "injective", str(iv), "fresh permutation",
                     f"also from {perms.get(perm)}")
        perms[perm] = str(iv)
    report.check(len(intervals) == totient_partial_sum(n), "interval_count", n,
                 totient_partial_sum(n), len(intervals))
    everything = enumerate_sos(n)
    report.check(len(everything) == count_sos(n) == len(set(everything)), "enumeration", n,
                 count_sos(n), f"{len(everything)} listed, {len(set(everything))} distinct")
    report.stats.update(intervals=len(intervals), permutations=len(everything))
    return report


def _random_rational(rng: random.Random, max_den: int = 10**6) -> Fraction:
    q = rng.randint(1, max_den)
    return Fraction(rng.randrange(q), q)


def _bracket(alpha: Fraction, n: int) -> tuple[Fraction, Fraction]:
    """Nearest fractions with denominator <= n on each side, by brute force."""
    lo, hi = Fraction(0), Fraction(1)
    for q in range(1, n + 1):
        p = (alpha * q).__floor__()
        lo = max(lo, Fraction(p, q))
        hi = min(hi, Fraction(p + 1, q))
    return lo, hi


def _check_profile(report: OracleReport, alpha, beta, n: int):
    prof = gap_profile(alpha, beta, n)
    distinct = sorted(prof.distinct_gaps)
    witness = (alpha, beta)
    report.check(sum(prof.gaps) == 1, "gap_sum", witness, 1, sum(prof.gaps))
    report.check(len(distinct) <= 3, "at_most_three", witness, "<= 3", distinct)
    if len(distinct) == 3:
        report.check(distinct[2] == distinct[0] + distinct[1], "largest_is_sum", witness,
                     distinct[0] + distinct[1], distinct[2])
    return prof


def oracle_three_gaps(n: int, trials: int, seed: int) -> OracleReport:
    """Three-gap checks on seeded random rationals with denominators <= 10^6.

    Each trial checks a random (alpha, beta), the same alpha at beta = 0
    (where the first and wrap gaps must be b*alpha - a and c - d*alpha) and a
    random Farey fraction a/b of order n, whose gaps must lie in {0, 1/b}.
    """
    rng = random.Random(seed)
    report = OracleReport("three_gaps", n)
    small = farey_sequence(n)[:-1]
    for _ in range(trials):
        alpha, beta = _random_rational(rng), _random_rational(rng)
        _check_profile(report, alpha, beta, n)
        prof = _check_profile(report, alpha, Fraction(0), n)
        if alpha.denominator > n:
            lo, hi = _bracket(alpha, n)
            a, b, c, d = lo.numerator, lo.denominator, hi.numerator, hi.denominator
            report.check(prof.gaps[0] == b * alpha - a, "first_gap", alpha,
                         b * alpha - a, prof.gaps[0])
            report.check(prof.gaps[-1] == c - d * alpha, "wrap_gap", alpha,
                         c - d * alpha, prof.gaps[-1])
            allowed = {b * alpha - a, c - d * alpha, c - a + (b - d) * alpha}
            report.check(prof.distinct_gaps <= allowed, "gap_values", alpha,
                         sorted(allowed), sorted(prof.distinct_gaps))
        else:
            report.skipped += 1
        edge = rng.choice(small)
        prof = gap_profile(edge, 0, n)
        report.check(prof.distinct_gaps <= {Fraction(0), Fraction(1, edge.denominator)},
                     "farey_gaps", edge, f"subset of {{0, 1/{edge.denominator}}}",
                     sorted(prof.distinct_gaps))
    return report

