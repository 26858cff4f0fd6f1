from fractions import Fraction

import pytest

from toriclift import catalog


@pytest.fixture(scope="session")
def cp2():
    return catalog.cp2(3)


@pytest.fixture(scope="session")
def square():
    return catalog.unit_square()


@pytest.fixture(scope="session")
def hirzebruch():
    return catalog.hirzebruch()


@pytest.fixture(scope="session")
def bad_triangle():
    return catalog.non_delzant_triangle()


def frac_pt(*xs):
    return tuple(Fraction(x) for x in xs)
