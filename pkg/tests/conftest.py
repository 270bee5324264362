from fractions import Fraction

import pytest

from indeq.graphcore import FamilySpec

QUARTER = Fraction(-1, 4)


def fs(family, *params):
    return FamilySpec(family, tuple(params))


@pytest.fixture
def quarter():
    return QUARTER
