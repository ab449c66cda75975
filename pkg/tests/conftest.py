import pytest

from krasner.dsl import chain, classical_zn, product, serialize_hyperring
from krasner.explorer import default_corpus, h3


@pytest.fixture(scope="session")
def z6():
    return classical_zn(6)


@pytest.fixture(scope="session")
def h3_table():
    return h3()


@pytest.fixture(scope="session")
def chain3():
    return chain(3)


@pytest.fixture(scope="session")
def z2xz3():
    return product(classical_zn(2), classical_zn(3))


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture(scope="session")
def khr_dir(tmp_path_factory, z6, h3_table, chain3):
    """Directory of .khr fixture files exercised by the CLI tests."""
    root = tmp_path_factory.mktemp("khr")
    (root / "z6.khr").write_text(serialize_hyperring(z6))
    (root / "h3.khr").write_text(serialize_hyperring(h3_table))
    (root / "chain3.khr").write_text(serialize_hyperring(chain3))
    (root / "broken.khr").write_text("hyperring X\nelements: 0 1\nzero: 0\nadd:\n  0 0 -> {0}\n")
    return root
