import pytest
from hypothesis import given

from conftest import words
from sytkit.permutation import (
    ParseError,
    all_words,
    check_word,
    coxeter_length,
    descents_left,
    dual_knuth_move_word,
    dual_knuth_neighbors,
    evac_word,
    format_word,
    interleavings,
    inverse,
    inversions_left,
    knuth_neighbors,
    parse_word,
    restrict_standardize,
    shuffle,
    transpose_word,
    weak_covers,
    weak_leq,
)
from sytkit.tableau import insertion_tableau, rsk


# --- parsing / formatting ---------------------------------------------------

def test_parse_compact_and_commas():
    assert parse_word("52413") == (5, 2, 4, 1, 3)
    assert parse_word("5,2,4,1,3") == (5, 2, 4, 1, 3)
    assert parse_word("10,9,8,7,6,5,4,3,2,1") == (10, 9, 8, 7, 6, 5, 4, 3, 2, 1)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_word("12x3")
    assert err.value.position == 2
    with pytest.raises(ParseError) as err:
        parse_word("1,2,x,4")
    assert err.value.position == 4
    with pytest.raises(ParseError):
        parse_word("122")  # not a bijection


def test_format_roundtrip():
    assert format_word((5, 2, 4, 1, 3)) == "52413"
    long = tuple(range(10, 0, -1))
    assert parse_word(format_word(long)) == long


def test_check_word_guards():
    with pytest.raises(ValueError):
        check_word(())
    with pytest.raises(ValueError):
        check_word(range(1, 12))  # n > 10
    with pytest.raises(ValueError):
        check_word((1, 3))


# --- inversions and the weak order -------------------------------------------

def test_inversions_identity_and_231():
    assert inversions_left((1, 2, 3)) == frozenset()
    assert inversions_left((2, 3, 1)) == frozenset({(1, 2), (1, 3)})


def test_inversion_count_extremes():
    n = 5
    assert coxeter_length(tuple(range(1, n + 1))) == 0
    assert coxeter_length(tuple(range(n, 0, -1))) == n * (n - 1) // 2


def test_weak_leq_examples():
    assert weak_leq(parse_word("34125"), parse_word("34215"))
    assert not weak_leq((2, 1, 3), (3, 1, 2))
    assert not weak_leq((3, 1, 2), (2, 1, 3))
    with pytest.raises(ValueError):
        weak_leq((1, 2), (1, 2, 3))


@given(words())
def test_weak_leq_reflexive(u):
    assert weak_leq(u, u)


def test_weak_order_axioms_exhaustive_n6():
    perms = list(all_words(6))
    invs = [inversions_left(u) for u in perms]
    ups = []
    for a in range(len(perms)):
        mask = 0
        for b in range(len(perms)):
            if invs[a] <= invs[b]:
                mask |= 1 << b
        ups.append(mask)
    for a in range(len(perms)):
        assert ups[a] >> a & 1  # reflexive
        rest = ups[a] & ~(1 << a)
        while rest:
            low = rest & -rest
            b = low.bit_length() - 1
            rest ^= low
            assert not (ups[b] >> a & 1)  # antisymmetric
            assert ups[b] & ~ups[a] == 0  # transitive


def test_weak_covers_examples():
    assert set(weak_covers((1, 2, 3))) == {(2, 1, 3), (1, 3, 2)}
    assert weak_covers((3, 2, 1)) == []
    assert parse_word("34215") in weak_covers(parse_word("34125"))


@given(words())
def test_weak_covers_increase_length_by_one(u):
    for w in weak_covers(u):
        assert coxeter_length(w) == coxeter_length(u) + 1
        assert inversions_left(u) < inversions_left(w)


# --- descents, segments -------------------------------------------------------

def test_descents_examples():
    assert descents_left((1, 2, 3, 4)) == frozenset()
    assert descents_left((2, 1, 3)) == frozenset({1})


def test_restrict_standardize_examples():
    w = parse_word("52413")
    assert restrict_standardize(w, 2, 5) == (4, 1, 3, 2)
    assert restrict_standardize(w, 1, 5) == w
    assert restrict_standardize(w, 1, 2) == (2, 1)
    with pytest.raises(ValueError):
        restrict_standardize(w, 3, 3)


@given(words(min_n=2))
def test_restrict_standardize_full_segment(u):
    assert restrict_standardize(u, 1, len(u)) == u


def test_segment_restriction_is_weak_order_monotone_n5():
    perms = list(all_words(5))
    invs = {u: inversions_left(u) for u in perms}
    pairs = [(u, w) for u in perms for w in perms if invs[u] < invs[w]]
    for u, w in pairs[::7]:  # sampled for speed; dense enough
        for i in range(1, 5):
            for j in range(i + 1, 6):
                assert weak_leq(
                    restrict_standardize(u, i, j), restrict_standardize(w, i, j)
                )


# --- Knuth moves ---------------------------------------------------------------

def test_knuth_neighbors_examples():
    assert knuth_neighbors((2, 1, 3)) == [(2, 3, 1)]
    assert knuth_neighbors((1, 2, 3)) == []
    assert parse_word("34125") in knuth_neighbors(parse_word("31425"))


@given(words(min_n=3))
def test_knuth_neighbors_symmetric(u):
    for v in knuth_neighbors(u):
        assert u in knuth_neighbors(v)


@given(words(min_n=3, max_n=7))
def test_knuth_moves_fix_insertion_tableau(u):
    for v in knuth_neighbors(u):
        assert insertion_tableau(u) == insertion_tableau(v)


def test_knuth_and_dual_moves_exhaustive_n6():
    for u in all_words(6):
        for v in knuth_neighbors(u):
            assert insertion_tableau(u) == insertion_tableau(v)
        for v in dual_knuth_neighbors(u):
            assert rsk(u)[1] == rsk(v)[1]


def test_dual_knuth_neighbors_examples():
    assert dual_knuth_neighbors((2, 1, 3)) == [(3, 1, 2)]


@given(words(min_n=3))
def test_dual_knuth_is_knuth_on_inverses(u):
    got = dual_knuth_neighbors(u)
    assert got == [inverse(v) for v in knuth_neighbors(inverse(u))]


@given(words(min_n=3, max_n=6))
def test_dual_knuth_moves_fix_recording_tableau(u):
    for v in dual_knuth_neighbors(u):
        assert rsk(u)[1] == rsk(v)[1]


@given(words(min_n=3))
def test_dual_knuth_move_word_triple_route(u):
    des = descents_left(u)
    for i in range(1, len(u) - 1):
        if (i in des) != ((i + 1) in des):
            moved = dual_knuth_move_word(u, i)
            assert moved in dual_knuth_neighbors(u)
            assert dual_knuth_move_word(moved, i) == u
        else:
            with pytest.raises(ValueError):
                dual_knuth_move_word(u, i)


# --- reversal and complement ----------------------------------------------------

def test_transpose_and_evac_words():
    assert evac_word(parse_word("52413")) == parse_word("35241")
    assert transpose_word((1, 2, 3, 4)) == (4, 3, 2, 1)


@given(words())
def test_word_involutions(u):
    assert transpose_word(transpose_word(u)) == u
    assert evac_word(evac_word(u)) == u
    assert inverse(inverse(u)) == u


# --- shuffles --------------------------------------------------------------------

def test_shuffle_trivial():
    assert set(shuffle((1,), (1,))) == {(1, 2), (2, 1)}


def test_shuffle_example_preshifted():
    got = shuffle((3, 1, 2), (5, 4))
    assert len(got) == 10
    assert parse_word("31254") in got
    assert parse_word("53124") in got


def test_shuffle_rejects_bad_alphabet():
    with pytest.raises(ValueError):
        shuffle((3, 1, 2), (9, 8))


@given(words(max_n=4), words(max_n=4))
def test_shuffle_count_and_distinct(u, w):
    got = shuffle(u, w)
    from math import comb

    assert len(got) == comb(len(u) + len(w), len(u))
    assert len(set(got)) == len(got)


def test_interleavings_keep_orders():
    for word in interleavings((1, 3), (2, 4)):
        assert word.index(1) < word.index(3)
        assert word.index(2) < word.index(4)
