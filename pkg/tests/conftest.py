"""Shared fixtures: reference groups and the small-group corpus."""

from pathlib import Path

import pytest

from camina import (
    FamilySpec,
    Permutation,
    build_family,
    group_from_generators,
    parse_corpus,
    t_witness_spec,
)

FIXTURES = Path(__file__).parent / "fixtures"
FIXTURE_FILES = ["order8.grp", "order16.grp", "order27.grp", "order32.grp"]


@pytest.fixture(scope="session")
def q8():
    return build_family(FamilySpec("quaternion", (8,)))


@pytest.fixture(scope="session")
def d8():
    return build_family(FamilySpec("dihedral", (8,)))


@pytest.fixture(scope="session")
def s3():
    return group_from_generators(3, [Permutation((2, 3, 1)), Permutation((2, 1, 3))])


@pytest.fixture(scope="session")
def c4():
    return build_family(FamilySpec("cyclic", (4,)))


@pytest.fixture(scope="session")
def klein():
    return build_family(FamilySpec("elementary_abelian", (2, 2)))


@pytest.fixture(scope="session")
def heis27():
    return build_family(FamilySpec("heisenberg_sl3_sylow", (3, 1)))


@pytest.fixture(scope="session")
def mod27():
    return build_family(FamilySpec("extraspecial_exp_p2", (3, 1)))


@pytest.fixture(scope="session")
def t81():
    return build_family(t_witness_spec(3, 1))


@pytest.fixture(scope="session")
def corpus_entries():
    entries = []
    for name in FIXTURE_FILES:
        entries.extend(parse_corpus((FIXTURES / name).read_text(), validate=False))
    return entries


@pytest.fixture(scope="session")
def corpus_groups(corpus_entries):
    """{gid: FiniteGroup} for the whole fixture corpus."""
    return {e.gid: e.build() for e in corpus_entries}
