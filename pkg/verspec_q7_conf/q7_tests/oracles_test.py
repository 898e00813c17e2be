"""
Engine oracle suite: Euler characteristics of classical spaces.

Uses the configured oracle spaces.
"""
from fractions import Fraction

import pytest

from verspec.cclass import euler_characteristic_of
from verspec.chow import projective_space
from verspec.tests.utils.oracle_tester import check_oracle, check_oracles
from verspec.util.exception import VerspecException
from verspec.util.log import setLevel, INFO


def test_oracles():
    check_oracles()


@pytest.mark.parametrize("n", range(5))
def test_projective_spaces(n):
    assert projective_space(n).euler_characteristic() == n + 1
    check_oracle(f"P{n}", n + 1)


def test_inline_descriptors():
    assert euler_characteristic_of({"kind": "ci", "n": 4, "degrees": [5]}) == Fraction(-200)
    assert euler_characteristic_of({"kind": "blowup", "n": 3, "center": [1, 1]}) == Fraction(6)


def test_bad_descriptors():
    with pytest.raises(VerspecException):
        euler_characteristic_of("no-such-space")
    with pytest.raises(VerspecException):
        euler_characteristic_of({"kind": "torus", "n": 2})
    with pytest.raises(VerspecException):
        euler_characteristic_of({"kind": "blowup", "n": 2, "center": [1, 1, 1]})


if __name__ == "__main__":

    setLevel(INFO)
    test_oracles()
