import numpy as np
import pytest

from taurank.fixtures import FIXTURE_FILES
from taurank.fixtures import fixture_source
from taurank.fixtures import load_fixture
from taurank.fixtures.modules import single_copy_cokernel
from taurank.linalg.field import Field


@pytest.fixture
def field():
    return Field()


@pytest.fixture
def alg_a():
    return load_fixture('ALG-A')


@pytest.fixture
def alg_b():
    return load_fixture('ALG-B')


@pytest.fixture
def alg_b0():
    return load_fixture('ALG-B0')


@pytest.fixture
def alg_c():
    return load_fixture('ALG-C')


@pytest.fixture
def alg_k():
    return load_fixture('ALG-K')


@pytest.fixture
def all_algebras():
    return [load_fixture(name) for name in FIXTURE_FILES]


@pytest.fixture
def cok_f(alg_a):
    return single_copy_cokernel(alg_a)


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


@pytest.fixture
def qa_file(tmpdir):
    """ Writes a bundled algebra to disk and returns its path. """
    def write(name):
        path = tmpdir.join(FIXTURE_FILES[name])
        path.write_text(fixture_source(name), encoding='utf-8')
        return str(path)
    return write
