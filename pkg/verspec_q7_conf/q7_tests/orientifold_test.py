"""
Orientifold Euler characteristics and the informational double cover relation.
"""
import pytest

from verspec.q7 import VariantFlags, build_model, orientifold_report, double_cover_report, verify
from verspec.util.exception import VerspecException


def test_P3():
    report = orientifold_report(build_model("P3", 1))
    assert report["chi_orientifold"] == 4
    assert report["branes"]["D1"]["chi_o"] == 8
    assert report["branes"]["D2"]["chi_o"] == 8
    assert report["total"] == 24
    assert report["consistent"]


def test_P1():
    report = orientifold_report(build_model("P1", 1))
    assert [brane["chi_o"] for brane in report["branes"].values()] == [4, 4]
    assert report["total"] == report["rhs_chi"] == 12


def test_follows_the_run_variant():
    report = verify(build_model("P1", 1), VariantFlags("paper-printed"))
    assert report.orientifold["total"] == 12
    assert report.orientifold["rhs_chi"] == report.rhs_chi == 14
    assert not report.orientifold["consistent"]

    data = report.to_dict()
    assert data["orientifold"]["rhs_chi"] == data["rhs"]["chi"]

    printed = orientifold_report(build_model("P1", 1), VariantFlags("paper-printed"))
    assert (printed["rhs_chi"], printed["consistent"]) == (14, False)


@pytest.mark.parametrize("base, Ldegree", [("P1", 2), ("P2", 3), ("P3", 2)])
def test_tadpole(base, Ldegree):
    report = verify(build_model(base, Ldegree))
    assert report.orientifold["consistent"]
    assert report.orientifold["total"] == report.lhs_chi


def test_double_cover():
    holds = double_cover_report(build_model("P1", 1), 12)
    assert (holds["lhs"], holds["rhs"], holds["holds"]) == (24, 24, True)

    report = verify(build_model("P3", 1))
    cover = report.double_cover
    assert (cover["lhs"], cover["rhs"], cover["holds"]) == (48, 56, False)
    assert cover["informational"]
    assert cover["entries"]["D2"]["tangent"]
    assert report.passed


def test_formal_bases_have_no_orientifold_section():
    model = build_model("formal:2")
    report = verify(model)
    assert report.orientifold is None and report.double_cover is None
    assert "orientifold" not in report.to_dict()
    with pytest.raises(VerspecException):
        orientifold_report(model)
