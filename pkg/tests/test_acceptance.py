"""Acceptance gate: one pass/fail line per criterion.

Run with  pytest -s tests/test_acceptance.py  to see the lines as they
are produced; without -s they appear in the captured output of failing
tests only.
"""

import pytest

from cayley.acceptance import CRITERIA, DEFAULT_SEED


@pytest.mark.parametrize(
    "number,title,func",
    [(n, title, func) for n, (title, func) in enumerate(CRITERIA, start=1)],
    ids=[f"{n:02d}-{title.replace(' ', '-')}"
         for n, (title, _) in enumerate(CRITERIA, start=1)])
def test_criterion(number, title, func, ctx):
    ok, detail = func(ctx, DEFAULT_SEED)
    status = "PASS" if ok else "FAIL"
    print(f"{status} criterion {number:2d} ({title}): {detail}")
    assert ok, f"criterion {number} ({title}): {detail}"
