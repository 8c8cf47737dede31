import pytest

from semitorsion.semigroup import make_semigroup
from semitorsion.sideal import make_ideal


@pytest.fixture
def s456():
    return make_semigroup([4, 5, 6])


@pytest.fixture
def s23():
    return make_semigroup([2, 3])


@pytest.fixture
def example_pair(s456):
    return make_ideal(s456, [4, 5]), make_ideal(s456, [4, 6])
