"""Smoke tests for the Python package: gallery constructors, condition
verdicts, reports and their verification, all through the public wrapper."""

import pytest

import choquetlab as cl


def test_version_and_schema():
    assert cl.__version__
    assert cl.SCHEMA.startswith("choquet-lab/")


def test_band_condition_profile():
    space = cl.anchored_band("1/4", "1/2")
    statuses = cl.condition_statuses(space)
    assert statuses == {
        "unitActionInjective": "True",
        "simplicial": "True",
        "functionallySimplicial": "True",
        "trivialBoundaryAnnihilators": "False",
        "simplexoid": "True",
        "dualBallCrossPolytope": "False",
    }


def test_interval_boundary_members():
    space = cl.interval_space(1, 4)
    members = cl.boundary_members(space)
    assert members == ["1/4", "1/2", "3/4", "1"]


def test_dual_norm_exact_value():
    space = cl.anchored_band()
    value = cl.dual_norm_at(space, "(0,0)")
    assert value == {"exact": "3/4"}


def test_analyze_report_verifies():
    space = cl.porcupine(["0", "1", "2"], ["1"])
    report = cl.analyze(space)
    assert report["schema"] == cl.SCHEMA
    conditions = report["result"]["conditions"]
    assert conditions["simplicial"]["status"] == "True"
    cl.verify_report(report)  # must not raise


def test_verify_rejects_tampering():
    report = cl.analyze(cl.two_point())
    report["space"]["digest"] = "0" * 16
    with pytest.raises(ValueError):
        cl.verify_report(report)


def test_dirichlet_refuses_non_simplicial():
    with pytest.raises(ValueError):
        cl.dirichlet(cl.square_affine())


def test_random_space_deterministic():
    a = cl.random_space(5, 3, seed=11)
    b = cl.random_space(5, 3, seed=11)
    assert a == b
    assert cl.random_space(5, 3, seed=12) != a
