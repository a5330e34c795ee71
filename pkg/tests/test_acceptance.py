"""The eight acceptance criteria at their full bounds and tolerances.

Each test prints ``criterion N: PASS|FAIL title``; the lines are repeated in the
terminal summary by ``conftest.py``.
"""
from __future__ import annotations

import pytest

from fuscat import acceptance

FULL_RUNS = [
    (1, 'combinatorics golden values', lambda: acceptance.golden_combinatorics()),
    (2, 'modularity suite', lambda: acceptance.modularity_sweep(8, tol=1e-9)),
    (3, 'even level-rank duality', lambda: acceptance.level_rank_even(8, tol=1e-9)),
    (4, 'eigenvalue triples', lambda: acceptance.eigenvalue_triples(8, tol=1e-12)),
    (5, 'odd level-rank duality', lambda: acceptance.level_rank_odd(6, tol=1e-9)),
    (6, 'shuffle weights', lambda: acceptance.shuffle_weights(10)),
    (7, 'branching invariants', lambda: acceptance.branching_invariants(8)),
    (8, 'etale dimensions', lambda: acceptance.etale_dimensions(8)),
]


@pytest.mark.parametrize('num,title,run', FULL_RUNS, ids=[f'criterion-{r[0]}' for r in FULL_RUNS])
def test_criterion(num, title, run, criterion_log):
    report = run()
    line = f'criterion {num}: {"PASS" if report.passed else "FAIL"} {title}'
    print(line)
    criterion_log.append(line)
    failed = [c.name for c in report.checks if not c.passed]
    assert report.passed, f'{line}; failing checks: {failed[:10]}'
