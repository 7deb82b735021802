import pytest

from ncham.models import (build_cuntz, build_matrix, build_poly_matrix,
                          build_torus)


@pytest.fixture(scope="session")
def torus1():
    return build_torus(1)


@pytest.fixture(scope="session")
def torus2():
    return build_torus(2)


@pytest.fixture(scope="session")
def torus3():
    return build_torus(3)


@pytest.fixture(scope="session")
def matrix2():
    return build_matrix(2)


@pytest.fixture(scope="session")
def matrix3():
    return build_matrix(3)


@pytest.fixture(scope="session")
def cuntz2():
    return build_cuntz(2)


@pytest.fixture(scope="session")
def cuntz3():
    return build_cuntz(3)


@pytest.fixture(scope="session")
def polymat():
    return build_poly_matrix(3)


@pytest.fixture(scope="session")
def all_models(torus1, torus2, torus3, matrix2, matrix3, cuntz2, cuntz3,
               polymat):
    return [torus1, torus2, torus3, matrix2, matrix3, cuntz2, cuntz3, polymat]
