import pytest

from salemsurf import lattice as lat
from salemsurf import mod2space as m2
from salemsurf import surface as sf
from salemsurf.gf2m import gf32


@pytest.fixture(scope="session")
def ctx():
    return gf32()


@pytest.fixture(scope="session")
def model():
    return sf.load_model()


@pytest.fixture(scope="session")
def sigma_inv(model):
    return sf.derive_sigma_inverse(model)


@pytest.fixture(scope="session")
def conj_scalar(model, sigma_inv):
    return sf.conjugation_scalar(model, sigma_inv)


@pytest.fixture(scope="session")
def e10_restriction():
    basis = lat.e10_basis()
    return basis, lat.restrict_to_basis(lat.coxeter_matrix(), basis)


@pytest.fixture(scope="session")
def census():
    return m2.enumerate_lagrangians(m2.standard_space())
