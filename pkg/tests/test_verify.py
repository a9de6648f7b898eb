import json
from fractions import Fraction as F

import pytest

from sospart.sos import SosPerm
from sospart.verify import (
    OracleReport,
    inversion_set,
    oracle_bijection_check,
    oracle_partition_check,
    oracle_three_gaps,
)


def merge_count(seq):
    """Inversion count by merge sort, independent of the pair scan."""
    if len(seq) <= 1:
        return list(seq), 0
    mid = len(seq) // 2
    left, a = merge_count(seq[:mid])
    right, b = merge_count(seq[mid:])
    merged, count, i, j = [], a + b, 0, 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            count += len(left) - i
            j += 1
    return merged + left[i:] + right[j:], count


def test_inversion_set_examples():
    assert inversion_set(SosPerm.parse("021")) == {(1, 2)}
    assert inversion_set(SosPerm.parse("01234")) == set()
    p = SosPerm.parse("42075316")
    assert len(inversion_set(p)) == 13 == merge_count(list(p))[1]


def test_inversion_set_determines_permutation():
    from itertools import permutations

    seen = {}
    for p in permutations(range(5)):
        key = frozenset(inversion_set(p))
        assert key not in seen
        seen[key] = p


@pytest.mark.parametrize("n, grid", [(2, 16), (3, 64)])
def test_partition_oracle_passes(n, grid):
    report = oracle_partition_check(n, grid, require_coverage=True)
    assert report.passed, report.failures
    assert report.checks_run + report.skipped == grid * grid + 1
    assert report.stats["domains_hit"] == report.stats["domains"]


def test_partition_oracle_counts_on_small_grid():
    report = oracle_partition_check(2, 16)
    assert report.passed
    # 256 grid points; those on a partition line are skipped, not checked
    assert report.checks_run + report.skipped == 256
    assert report.stats["points"] == 256


def test_partition_oracle_requires_grid():
    with pytest.raises(ValueError):
        oracle_partition_check(5, 10)


@pytest.mark.parametrize("n, intervals, perms", [(1, 1, 2), (7, 18, 144), (10, 32, 352)])
def test_bijection_oracle(n, intervals, perms):
    report = oracle_bijection_check(n)
    assert report.passed, report.failures
    assert report.stats == {"intervals": intervals, "permutations": perms}


@pytest.mark.parametrize("n, trials, seed", [(7, 300, 42), (1, 10, 0), (40, 100, 7)])
def test_three_gaps_oracle(n, trials, seed):
    report = oracle_three_gaps(n, trials, seed)
    assert report.passed, report.failures
    assert report.checks_run > trials


def test_reports_are_reproducible():
    a = oracle_three_gaps(9, 50, 123).to_json()
    b = oracle_three_gaps(9, 50, 123).to_json()
    assert a == b
    assert json.loads(a)["passed"] is True
    assert oracle_bijection_check(6, 5).to_json() == oracle_bijection_check(6, 5).to_json()


def test_report_records_failures():
    report = OracleReport("demo", 3)
    report.check(True, "fine", 1, 1, 1)
    report.check(False, "broken", (F(1, 2), F(0)), "x", "y")
    assert not report.passed
    data = report.to_dict()
    assert data["checks_run"] == 2
    assert data["failures"] == [
        {"check": "broken", "witness": "(Fraction(1, 2), Fraction(0, 1))", "expected": "x", "actual": "y"}
    ]
