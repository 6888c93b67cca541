import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kpaths.errors import AdjacentRepeat, InvalidOrder, OracleTooLarge, OutOfValidatedRange, TooManyColors
from kpaths.seqcore import (
    ColorSequence,
    SequenceEnumerator,
    alternating,
    brute_force_enumerate,
    count_closed_form,
    enumerate_sequences,
    is_canonical,
    normalize,
    reverse_canonical,
)


def test_normalize_relabels_by_first_appearance():
    assert normalize([3, 1, 3, 2], 2).entries == (1, 2, 1, 3)
    assert normalize([5, 4], 4).entries == (1, 2)


def test_normalize_rejects_adjacent_repeat():
    with pytest.raises(AdjacentRepeat):
        normalize([1, 2, 2], 2)


def test_normalize_rejects_too_many_colors():
    with pytest.raises(TooManyColors):
        normalize([1, 2, 3, 4], 2)


def test_color_sequence_validates():
    with pytest.raises(ValueError):
        ColorSequence(2, (2, 1))
    with pytest.raises(ValueError):
        ColorSequence(2, (1, 3))
    with pytest.raises(InvalidOrder):
        ColorSequence(1, (1,))
    assert str(ColorSequence(3, (1, 2, 3))) == "1 2 3"
    assert ColorSequence(3, (1, 2, 3)).order == 7


def test_reverse_canonical():
    c = ColorSequence(2, (1, 2, 1, 3))
    assert reverse_canonical(c).entries == (1, 2, 3, 2)
    assert is_canonical(c)
    assert not is_canonical(ColorSequence(2, (1, 2, 3, 2)))


def test_alternating():
    assert alternating(5) == [1, 2, 1, 2, 1]
    assert alternating(0) == []


def test_k2_n7_listing_in_lexicographic_order():
    got = [s.entries for s in enumerate_sequences(2, 7)]
    assert got == [(1, 2, 1, 2), (1, 2, 1, 3), (1, 2, 3, 1)]


def test_complete_graph_case():
    assert [s.entries for s in enumerate_sequences(3, 4)] == [()]
    assert [s.entries for s in enumerate_sequences(3, 5)] == [(1,)]


def test_enumeration_is_strictly_increasing():
    seqs = [s.entries for s in enumerate_sequences(3, 12)]
    assert all(a < b for a, b in zip(seqs, seqs[1:]))


def test_clone_resumes_independently():
    it = SequenceEnumerator(2, 10)
    for _ in range(5):
        next(it)
    twin = it.clone()
    assert list(it) == list(twin)


def test_invalid_order():
    with pytest.raises(InvalidOrder):
        list(enumerate_sequences(2, 2))
    with pytest.raises(InvalidOrder):
        list(enumerate_sequences(1, 5))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_closed_form_matches_enumeration(k):
    start = {2: 6, 3: 8, 4: 10}[k]
    for n in range(start, start + 7):
        assert count_closed_form(k, n).count == sum(1 for _ in enumerate_sequences(k, n))


def test_closed_form_outside_validated_range():
    with pytest.raises(OutOfValidatedRange):
        count_closed_form(2, 5)
    with pytest.raises(OutOfValidatedRange):
        count_closed_form(5, 20)


def test_burnside_count_k2():
    # 2^(L-2) restricted words, of which 2^ceil((L-2)/2) equal their own reversal
    for n in range(6, 30):
        length = n - 3
        total = 2 ** (length - 2)
        symmetric = 2 ** ((length - 1) // 2)
        assert count_closed_form(2, n).count == (total + symmetric) // 2


def test_oracle_cap():
    with pytest.raises(OracleTooLarge):
        brute_force_enumerate(2, 20)


@pytest.mark.parametrize("k,n", [(2, 3), (2, 4), (2, 8), (3, 9), (4, 11), (5, 10)])
def test_brute_force_agrees_small(k, n):
    assert set(enumerate_sequences(k, n)) == brute_force_enumerate(k, n)


@st.composite
def restricted_words(draw, max_len=12):
    k = draw(st.integers(2, 5))
    length = draw(st.integers(1, max_len))
    word = [draw(st.integers(1, k + 1))]
    for _ in range(length - 1):
        word.append(draw(st.sampled_from([c for c in range(1, k + 2) if c != word[-1]])))
    return k, word


@given(restricted_words())
def test_normalize_is_idempotent(kw):
    k, word = kw
    c = normalize(word, k)
    assert normalize(c.entries, k) == c


@given(restricted_words())
def test_normalize_invariant_under_color_permutation(kw):
    k, word = kw
    perm = list(range(1, k + 2))
    perm = perm[1:] + perm[:1]
    assert normalize([perm[c - 1] for c in word], k) == normalize(word, k)


@given(restricted_words())
def test_reverse_canonical_is_an_involution(kw):
    k, word = kw
    c = normalize(word, k)
    assert reverse_canonical(reverse_canonical(c)) == c
    assert is_canonical(min(c, reverse_canonical(c)))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.integers(0, 7))
def test_every_canonical_word_is_enumerated(k, length):
    n = length + k + 1
    listed = set(enumerate_sequences(k, n))
    for word in itertools.product(range(1, k + 2), repeat=length):
        try:
            c = normalize(word, k)
        except ValueError:
            continue
        assert min(c, reverse_canonical(c)) in listed
