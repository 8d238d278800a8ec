"""Dixon character tables: structure constants, degrees, exact checks."""

import numpy as np
import pytest

from camina import (
    FamilySpec,
    build_family,
    center,
    class_mult_coefficients,
    direct_product,
    dixon_character_table,
    irr_over,
    verify_fully_ramified,
)
from camina.characters import (
    check_column_orthogonality,
    check_degree_column,
    check_row_orthogonality,
    least_dixon_prime,
)
from camina.groups import group_from_cayley_table, subgroup_generate


@pytest.fixture(scope="module")
def c3s3(s3):
    c3 = group_from_cayley_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    return direct_product(c3, s3)


def test_class_mult_identity_row(q8):
    a = class_mult_coefficients(q8)
    k = a.shape[0]
    assert np.array_equal(a[0], np.eye(k, dtype=np.int64))


def test_class_mult_abelian(klein):
    a = class_mult_coefficients(klein)
    assert a.min() == 0 and a.max() == 1
    assert (a.sum(axis=2) == 1).all()


def test_class_mult_q8_squares(q8):
    class_of, classes = q8.conjugacy_data()
    a = class_mult_coefficients(q8)
    i_cls = int(class_of[1])  # class of an order-4 element
    # oracle: count factorizations of the identity over cl(i) x cl(i)
    members = classes[i_cls]
    count = sum(
        1 for u in members for v in members if q8.mul[u, v] == 0
    )
    assert a[i_cls, i_cls, 0] == count == 2


def test_dixon_prime_rule():
    assert least_dixon_prime(2, 2) == 3
    assert least_dixon_prime(6, 6) == 7
    assert least_dixon_prime(8, 4) == 13
    assert least_dixon_prime(27, 3) == 13


def test_c2_table():
    c2 = group_from_cayley_table([[0, 1], [1, 0]])
    t = dixon_character_table(c2)
    assert t.degrees == [1, 1]
    vals = sorted(v.as_int() for v in (t.values[0][1], t.values[1][1]))
    assert vals == [-1, 1]
    assert t.modulus == least_dixon_prime(2, 2)


def test_s3_table(s3):
    t = dixon_character_table(s3)
    assert t.degrees == [1, 1, 2]
    assert t.modulus == 7
    assert check_row_orthogonality(t)
    assert check_degree_column(t)


def test_q8_table(q8):
    t = dixon_character_table(q8)
    assert t.degrees == [1, 1, 1, 1, 2]
    assert t.modulus == 13
    deg2 = t.degrees.index(2)
    Z = center(q8)
    for j, rep in enumerate(t.class_reps):
        if int(rep) not in Z:
            assert t.values[deg2][j].is_zero()


def test_heisenberg_table(heis27):
    t = dixon_character_table(heis27)
    assert t.degrees == [1] * 9 + [3, 3]
    assert sum(d * d for d in t.degrees) == 27
    assert check_row_orthogonality(t)


def test_irr_over(q8, heis27):
    t = dixon_character_table(q8)
    triv = subgroup_generate(q8, ())
    assert irr_over(q8, triv, t) == []
    over_z = irr_over(q8, center(q8), t)
    assert [t.degrees[i] for i in over_z] == [2]
    t27 = dixon_character_table(heis27)
    over_z27 = irr_over(heis27, center(heis27), t27)
    assert sorted(t27.degrees[i] for i in over_z27) == [3, 3]


def test_fully_ramified(q8, heis27, c3s3):
    assert verify_fully_ramified(q8, center(q8), dixon_character_table(q8)) == (
        True,
        None,
    )
    assert verify_fully_ramified(
        heis27, center(heis27), dixon_character_table(heis27)
    ) == (True, None)
    ok, witness = verify_fully_ramified(
        c3s3, center(c3s3), dixon_character_table(c3s3)
    )
    assert not ok and witness is not None


def test_tables_on_corpus_sample(corpus_groups):
    for gid in ("16:13", "32:1", "32:6", "32:49", "27:4"):
        G = corpus_groups[gid]
        t = dixon_character_table(G)
        assert sum(d * d for d in t.degrees) == G.order
        assert check_degree_column(t)
        assert check_row_orthogonality(t)
        assert check_column_orthogonality(t)


def test_prime_search_cap_is_defensive():
    from camina.errors import InternalPrimeSearchFailed

    with pytest.raises(InternalPrimeSearchFailed):
        least_dixon_prime(10**6, 999983)


def test_orthogonality_over_whole_fixture_corpus(corpus_groups):
    for gid, G in sorted(corpus_groups.items()):
        t = dixon_character_table(G)
        assert sum(d * d for d in t.degrees) == G.order
        assert check_row_orthogonality(t)
        assert check_column_orthogonality(t)


def test_table_of_cyclic_32():
    G = build_family(FamilySpec("cyclic", (32,)))
    t = dixon_character_table(G)
    assert t.degrees == [1] * 32
    assert t.exponent == 32
    assert check_row_orthogonality(t)


def test_d8_and_q8_share_a_character_table(q8, d8):
    """The classic pair of nonisomorphic groups with identical tables."""
    td, tq = dixon_character_table(d8), dixon_character_table(q8)
    assert td.degrees == tq.degrees == [1, 1, 1, 1, 2]
    rows_d = sorted(tuple(v.coeffs[0] for v in row) for row in td.values)
    rows_q = sorted(tuple(v.coeffs[0] for v in row) for row in tq.values)
    # all values are rational integers here; compare as sorted row multisets
    for row in td.values + tq.values:
        for v in row:
            assert v.as_int() is not None
    assert rows_d == rows_q


def test_dixon_table_is_deterministic():
    a = build_family(FamilySpec("heisenberg_sl3_sylow", (3, 1)))
    b = build_family(FamilySpec("heisenberg_sl3_sylow", (3, 1)))
    ta, tb = dixon_character_table(a), dixon_character_table(b)
    assert ta.degrees == tb.degrees
    assert ta.modulus == tb.modulus
    assert [[v.coeffs for v in row] for row in ta.values] == [
        [v.coeffs for v in row] for row in tb.values
    ]
