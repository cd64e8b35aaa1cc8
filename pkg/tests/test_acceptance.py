"""Acceptance suite: runs the full verification registry and asserts
every criterion row.

The same registry backs the CLI's ``verify-paper`` subcommand; a criterion
is listed here exactly once so the pass/fail report has one line per row
(`pytest -v` shows them individually).
"""

import pytest

from soclekit import verify

_RESULTS = {}


@pytest.fixture(scope="module")
def results():
    if not _RESULTS:
        for r in verify.run_all():
            _RESULTS[r.ident] = r
    return _RESULTS


@pytest.mark.parametrize("ident", [ident for ident, _ in verify.CHECKS])
def test_criterion(results, ident):
    r = results[ident]
    assert r.passed, (
        f"{r.ident} {r.name}\n  expected: {r.expected}\n  actual:   {r.actual}"
    )


def test_registry_is_complete():
    assert [ident for ident, _ in verify.CHECKS] == [f"C{k}" for k in range(1, 14)]
