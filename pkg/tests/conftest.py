import pytest

from spweil.fields import FieldSpec, make_field


@pytest.fixture(scope="session")
def gf7():
    return make_field(FieldSpec("auto-prime", 3))  # GF(7), theta = 2


@pytest.fixture(scope="session")
def gf11():
    return make_field(FieldSpec("auto-prime", 5))  # GF(11), theta = 4


@pytest.fixture(scope="session")
def gf4():
    return make_field(FieldSpec("auto-char2", 3))  # GF(4), theta = x


@pytest.fixture(scope="session")
def gf16():
    return make_field(FieldSpec("auto-char2", 5))


@pytest.fixture(scope="session")
def cyc3():
    return make_field(FieldSpec("cyclotomic", 3))


@pytest.fixture(scope="session")
def cyc5():
    return make_field(FieldSpec("cyclotomic", 5))


@pytest.fixture(scope="session")
def cyc7():
    return make_field(FieldSpec("cyclotomic", 7))
