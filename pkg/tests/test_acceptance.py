"""Acceptance battery: one test per release criterion.

Each test drives the corresponding check from qsuper.acceptance over its
full scope and reports the check's own detail string on failure.  The two
heavyweight checks also enforce their wall-clock budgets.
"""

import time

from qsuper import acceptance


def _run(check, budget=None):
    start = time.monotonic()
    ok, detail = check()
    elapsed = time.monotonic() - start
    assert ok, detail
    if budget is not None:
        assert elapsed < budget, "took %.1fs, budget %.0fs" % (elapsed, budget)
    return detail


def test_criterion_01_casimir_display():
    detail = _run(acceptance.check_casimir_display, budget=60.0)
    assert "matches the displayed element" in detail


def test_criterion_02_centrality():
    _run(acceptance.check_centrality, budget=300.0)


def test_criterion_03_supercharacter_images():
    _run(acceptance.check_sch_images)


def test_criterion_04_dual_module_casimirs():
    _run(acceptance.check_dual_casimir)


def test_criterion_05_rosso_invariance():
    detail = _run(acceptance.check_rosso_invariance)
    assert "900 invariance identities" in detail


def test_criterion_06_gram_blocks_and_radical():
    _run(acceptance.check_pairing_blocks)


def test_criterion_07_theta_recursions():
    _run(acceptance.check_theta_identities)


def test_criterion_08_character_formulas():
    _run(acceptance.check_characters)


def test_criterion_09_weyl_supersymmetry():
    _run(acceptance.check_hc_images)


def test_criterion_10_hopf_structure():
    _run(acceptance.check_hopf_axioms)


def test_suite_report_shape():
    report = acceptance.run_suite()
    assert report["scope"] == "all"
    assert report["ok"] is True
    assert [row["id"] for row in report["rows"]] == list(range(1, 11))
    assert all(row["ok"] for row in report["rows"])
    assert report == acceptance.run_suite()
