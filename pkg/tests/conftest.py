import pytest

from pairalg.hyper import krasner_hyperfield
from pairalg.pairs import SemiringPair
from pairalg.semirings import (boolean_semiring, double, nmax_trunc,
                               supertropical_extension, supertropical_integers,
                               supertropical_naturals, trivial_monoid)


@pytest.fixture
def B():
    return boolean_semiring()


@pytest.fixture
def bool_pair(B):
    return SemiringPair(B, a0=[B.zero], tangibles=[B.one], name="boolean")


@pytest.fixture
def double_bool():
    return double(boolean_semiring())


@pytest.fixture
def st3():
    # three elements: 0, 1, 1v over the trivial value monoid
    return supertropical_extension(trivial_monoid())


@pytest.fixture
def st_nat():
    return supertropical_naturals()


@pytest.fixture
def st_int():
    return supertropical_integers()


@pytest.fixture
def krasner():
    return krasner_hyperfield()


@pytest.fixture
def nmax3():
    return nmax_trunc(3)
