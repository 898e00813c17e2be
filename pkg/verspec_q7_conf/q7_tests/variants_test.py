"""
Delta rule and fiber table variants.
"""
import pytest

from verspec.cfun import FibrationTable
from verspec.q7 import BaseSpec, VariantFlags, build_model, verify, rhs_constructible
from verspec.tests.utils.identity_tester import check_identity
from verspec.util.exception import VerspecException


def test_printed_delta_fails_over_P1():
    report = check_identity("P1", 1, "paper-printed")
    assert report.verdict == "fail"
    assert (report.lhs_chi, report.rhs_chi) == (12, 14)


@pytest.mark.parametrize("base", ["P1", "P2", "P3", "formal:1", "formal:3"])
def test_printed_delta_differs_by_the_double_cover(base):
    model = build_model(base, 1)
    sd = rhs_constructible(model, VariantFlags("sd"))
    printed = rhs_constructible(model, VariantFlags("printed"))
    assert printed - sd == {"B": 2, "O": -1}


def test_aliases():
    assert VariantFlags("sd") == VariantFlags("definition-sd")
    assert VariantFlags("printed").delta_rule == "paper-printed"
    with pytest.raises(VerspecException):
        VariantFlags("other")


def test_table_overrides():
    # calD1 with disjoint lines over S1 too: the identity breaks
    override = FibrationTable([("B", 2), ("D1", 4)])
    flags = VariantFlags(table_overrides={"calD1": override})
    assert flags.fiber_tables == "override"
    assert flags.to_dict()["overrides"] == {"calD1": [["B", 2], ["D1", 4]]}

    report = verify(build_model("P2", 1), flags)
    assert report.verdict == "fail"
    assert any("calD1" in note for note in report.notes)

    with pytest.raises(VerspecException):
        VariantFlags(table_overrides={"calD9": override}).tables(build_model("P1", 1).tables)


def test_same_tables_still_pass():
    model = build_model("P1", 2)
    flags = VariantFlags(table_overrides={"calD2": FibrationTable([("B", 2), ("D2", 3), ("S2", 2)])})
    assert verify(model, flags).passed


def test_bases():
    assert BaseSpec.parse("formal:4").dim == 4
    assert BaseSpec.parse({"kind": "Pn", "n": 0}).text == "P0"
    for bad in ("P5", "formal:0", "Q3", {"kind": "Pn", "n": -1}, 3):
        with pytest.raises(VerspecException):
            BaseSpec.parse(bad)
