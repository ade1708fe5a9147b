"""Full-scale acceptance suites, one test per criterion.

Each test prints a single pass/fail summary line (bypassing capture) and
fails with the recorded counterexamples if the suite found any.
"""
import pytest

from cfconn.selftest import (
    suite_closed_forms,
    suite_noncomplete_2ec,
    suite_oracle_equivalence,
    suite_rc_scfc_diameter,
    suite_reductions,
    suite_scaling,
    suite_tree_inequalities,
    suite_vcfc_characterization,
)


def _run(capsys, suite, **kwargs):
    result = suite(scale="full", **kwargs)
    with capsys.disabled():
        print(f"\n{result.summary()}")
    assert result.ok, "\n".join(result.failures[:20])
    assert result.checks > 0


def test_criterion_1_closed_forms(capsys):
    _run(capsys, suite_closed_forms)


def test_criterion_2_noncomplete_2ec(capsys):
    _run(capsys, suite_noncomplete_2ec, seed=0)


def test_criterion_3_vcfc_characterization(capsys):
    _run(capsys, suite_vcfc_characterization)


def test_criterion_4_oracle_equivalence(capsys):
    _run(capsys, suite_oracle_equivalence, seed=0)


def test_criterion_5_tree_inequalities(capsys):
    _run(capsys, suite_tree_inequalities)


def test_criterion_6_rc_scfc_diameter(capsys):
    _run(capsys, suite_rc_scfc_diameter)


def test_criterion_7_reductions(capsys):
    _run(capsys, suite_reductions, seed=0)


def test_criterion_8_scaling(capsys):
    _run(capsys, suite_scaling, seed=0)
