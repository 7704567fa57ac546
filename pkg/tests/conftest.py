import pytest

from prigid.fields.fq import field_make
from prigid.rigidity.context import make_context


@pytest.fixture(scope="session")
def f7():
    return field_make(7, 1)


@pytest.fixture(scope="session")
def f343():
    return field_make(7, 3)


@pytest.fixture()
def ctx_laurent():
    return make_context("laurent(7)", 3)


@pytest.fixture()
def ctx_laurent64():
    return make_context("laurent(7,64)", 3)


@pytest.fixture()
def ctx_ratfunc():
    return make_context("ratfunc(7)", 3)
