"""Acceptance suite: one check per catalog criterion.

Each test emits a single `criterion NN PASS/FAIL` line and fails when the
underlying verification check fails, so the suite output doubles as a
verification report.
"""

import pytest

from operadcalc import verify

IDS = ["criterion_%02d" % num for num, _, _ in verify.CHECKS]


@pytest.mark.parametrize("num,title,fn", verify.CHECKS, ids=IDS)
def test_criterion(num, title, fn):
    ok, detail = fn()
    print("criterion %02d %s: %s" % (num, "PASS" if ok else "FAIL", title))
    assert ok, "criterion %02d failed: %s [%s]" % (num, title, detail)
