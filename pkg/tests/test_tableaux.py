import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_cylindric_fillings
from rigtrop.errors import InvalidCylindricShape
from rigtrop.tableaux import (
    Partition,
    SkewShape,
    build_cylindric_shape,
    conjugate,
    enumerate_cylindric_ssyt,
    enumerate_ssyt,
    is_semistandard,
    reverse_bump,
    row_insert,
    row_insert_word,
    row_word,
    shape,
    tableau_content,
)

words = st.lists(st.integers(1, 5), max_size=12)


def test_partition_normalizes_trailing_zeros():
    assert Partition((2, 1, 0, 0)) == (2, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_conjugate_example():
    assert conjugate((5, 2)) == (2, 2, 1, 1, 1)
    assert conjugate(()) == ()


@given(st.lists(st.integers(0, 6), max_size=6))
def test_conjugate_is_an_involution(parts):
    lam = Partition(sorted(parts, reverse=True))
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


def test_row_insert_bumps_first_strictly_larger():
    T = ((1, 2, 2), (3,))
    assert row_insert(T, 2) == ((1, 2, 2, 2), (3,))
    assert row_insert(T, 1) == ((1, 1, 2), (2,), (3,))


def test_insertion_golden():
    assert row_insert_word(((1, 1, 3), (2, 3, 4), (4, 5, 5)), (3, 4, 2, 2)) == (
        (1, 1, 2, 2, 4),
        (2, 3, 3, 3),
        (4, 4, 5),
        (5,),
    )


@given(words)
def test_insertion_gives_ssyt_with_same_content(w):
    T = row_insert_word((), w)
    assert is_semistandard(T)
    assert sorted(tableau_content(T).elements()) == sorted(w)


@given(words)
def test_row_word_reinserts_to_itself(w):
    T = row_insert_word((), w)
    assert row_insert_word((), row_word(T)) == T


@given(words, st.integers(1, 5))
def test_reverse_bump_undoes_insertion(w, x):
    T = row_insert_word((), w)
    U = row_insert(T, x)
    grown = [i for i in range(len(U)) if i >= len(T) or len(U[i]) > len(T[i])]
    assert len(grown) == 1
    back, y = reverse_bump(U, grown[0])
    assert (back, y) == (T, x)


def test_shape_and_semistandard_checks():
    assert shape(((1, 1, 2), (2, 3))) == (3, 2)
    assert not is_semistandard(((1, 2), (1, 3)))
    assert is_semistandard(((2,), (1, 3)), inner=(1,))


@pytest.mark.parametrize("outer,inner,m,count", [((2, 1), (), 3, 8), ((2, 2), (1,), 2, 2), ((1, 1, 1), (), 3, 1)])
def test_enumerate_ssyt_counts(outer, inner, m, count):
    tabs = enumerate_ssyt(SkewShape(outer, inner), m)
    assert len(tabs) == count
    assert len(set(tabs)) == count


def test_cylindric_shape_rejects_long_rows_and_bad_s():
    with pytest.raises(InvalidCylindricShape):
        build_cylindric_shape((3,), 3, 1)
    with pytest.raises(InvalidCylindricShape):
        build_cylindric_shape((1,), 3, 3)


def test_cylindric_shape_rejects_wrapping_boundary():
    with pytest.raises(InvalidCylindricShape):
        build_cylindric_shape(SkewShape((2, 2, 2, 1), (2, 2, 1, 1)), 3, 1)


def test_cylindric_wrap_adds_relation():
    # the (2,1) shape on the n=3, s=1 cylinder loses one of the 8 plain tableaux
    D = build_cylindric_shape((2, 1), 3, 1)
    assert len(enumerate_cylindric_ssyt(D, 3)) == 7
    assert len(enumerate_ssyt((2, 1), 3)) == 8


def test_short_rows_match_plain_skew_fillings():
    D = build_cylindric_shape((1, 1), 4, 2)
    assert enumerate_cylindric_ssyt(D, 3) == enumerate_ssyt((1, 1), 3)


@pytest.mark.parametrize(
    "base,n,s,m",
    [((2, 1), 3, 1, 3), ((2, 1, 1), 4, 2, 4), ((2, 2), 3, 1, 3), (SkewShape((2, 2, 1), (1,)), 3, 1, 3), ((1, 1, 1), 3, 2, 3)],
)
def test_cylindric_enumeration_matches_brute_force(base, n, s, m):
    D = build_cylindric_shape(base, n, s)
    fast = sorted(tuple(v for row in T for v in row) for T in enumerate_cylindric_ssyt(D, m))
    assert fast == brute_cylindric_fillings(D, m)
