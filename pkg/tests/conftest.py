import pytest

from harmonic_codes import build_code, certify, generate_e8_roots
from harmonic_codes.codes import gram_from_embedded


@pytest.fixture(scope="session")
def e8_roots():
    return generate_e8_roots()


@pytest.fixture(scope="session")
def e8_code(e8_roots):
    return build_code(e8_roots)


@pytest.fixture(scope="session")
def e8_gram(e8_code):
    return gram_from_embedded(e8_code)


@pytest.fixture(scope="session")
def e8_report(e8_code):
    return certify(e8_code)
