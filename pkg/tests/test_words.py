import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from bibifix.errors import InvalidInputError, ResourceLimitError
from bibifix.words import (
    Word,
    WordCode,
    bifix_lengths,
    build_s,
    count_bf,
    enumerate_bf,
    is_bifix_free,
    is_cross_bifix_free_pair,
    is_nonexpandable_word_set,
    select_k,
)

W = Word.parse


@pytest.mark.parametrize(
    "text, expected",
    [("111010100", True), ("100100100", False), ("0", True), ("00", False)],
)
def test_is_bifix_free_examples(text, expected):
    assert is_bifix_free(W(text)) is expected


def test_empty_word_rejected():
    with pytest.raises(InvalidInputError):
        is_bifix_free(Word((), 2))
    with pytest.raises(InvalidInputError):
        bifix_lengths(Word((), 2))


@pytest.mark.parametrize(
    "text, expected",
    [("100100100", {3, 6}), ("111010100", set()), ("00", {1})],
)
def test_bifix_lengths(text, expected):
    assert bifix_lengths(W(text)) == expected


def test_word_validation():
    with pytest.raises(InvalidInputError):
        Word((0, 2), 2)
    with pytest.raises(InvalidInputError):
        Word((0,), 11)
    with pytest.raises(InvalidInputError):
        W("10a")
    assert W("102").q == 3
    assert str(W("0120", 4)) == "0120"


@pytest.mark.parametrize("n, q", [(n, 2) for n in range(1, 13)] + [(n, 3) for n in range(1, 9)])
def test_half_depth_matches_full_depth(n, q):
    for s in oracles.all_strings(n, q):
        w = W(s, q)
        assert is_bifix_free(w) == (not bifix_lengths(w)) == oracles.bifix_free(s)


@pytest.mark.parametrize("n, q", [(n, 2) for n in range(1, 13)] + [(n, 3) for n in range(1, 9)])
def test_count_matches_enumeration(n, q):
    expected = sum(oracles.bifix_free(s) for s in oracles.all_strings(n, q))
    assert count_bf(n, q) == expected
    assert len(enumerate_bf(n, q)) == expected


def test_count_bf_examples():
    assert count_bf(1, 2) == 2
    assert count_bf(4, 2) == 6
    assert count_bf(9, 2) == 148
    assert count_bf(1, 7) == 7


@pytest.mark.parametrize("n, q", [(0, 2), (3, 1), (-1, 3)])
def test_count_bf_rejects(n, q):
    with pytest.raises(InvalidInputError):
        count_bf(n, q)


def test_count_bf_large_is_exact_integer():
    # 284, 568, 1116 are checked by brute force above
    assert count_bf(12, 2) == 1116
    assert count_bf(200, 2) > 2**190


def test_enumerate_bf_examples():
    assert enumerate_bf(2, 2).strings() == ["01", "10"]
    assert enumerate_bf(4, 2).strings() == ["0001", "0011", "0111", "1000", "1100", "1110"]
    assert enumerate_bf(1, 3).strings() == ["0", "1", "2"]


def test_enumerate_bf_budget():
    with pytest.raises(ResourceLimitError):
        enumerate_bf(10, 2, budget=1000)


@pytest.mark.parametrize(
    "a, b, expected",
    [("111010100", "110101010", True), ("111001100", "110011010", False), ("10", "01", False)],
)
def test_cross_pair_examples(a, b, expected):
    assert is_cross_bifix_free_pair(W(a), W(b)) is expected
    assert oracles.cross_free(a, b) is expected


def test_cross_pair_errors():
    with pytest.raises(InvalidInputError):
        is_cross_bifix_free_pair(W("101"), W("101"))
    with pytest.raises(InvalidInputError):
        is_cross_bifix_free_pair(W("101"), W("1011"))


words6 = st.lists(st.integers(0, 2), min_size=6, max_size=6).map(lambda s: Word(tuple(s), 3))


@given(words6, words6)
def test_cross_pair_symmetric(a, b):
    if a == b:
        return
    assert is_cross_bifix_free_pair(a, b) == is_cross_bifix_free_pair(b, a)
    assert is_cross_bifix_free_pair(a, b) == oracles.cross_free(str(a), str(b))


def test_build_s_examples():
    assert build_s(3, 3, 1).strings() == ["100", "102", "120", "122"]
    assert build_s(4, 2, 1).strings() == ["1000"]
    assert build_s(4, 2, 2).strings() == ["1100"]


@pytest.mark.parametrize("n, q", [(n, 2) for n in range(3, 11)] + [(n, 3) for n in range(3, 7)] + [(3, 4), (4, 4)])
def test_build_s_matches_definition_and_is_cross_free(n, q):
    bf = enumerate_bf(n, q)
    for k in range(1, n - 1):
        code = build_s(n, q, k)
        assert code.strings() == oracles.s_by_definition(n, q, k)
        for w in code:
            assert w in bf
        for a, b in itertools.combinations(code.strings(), 2):
            assert oracles.cross_free(a, b)


@pytest.mark.parametrize("k", [0, 3, -1])
def test_build_s_k_out_of_range(k):
    with pytest.raises(InvalidInputError):
        build_s(4, 2, k)


def test_select_k():
    assert select_k(3, 3) == 1
    assert select_k(4, 2) == 1
    # S(8,2,k) sizes by definition are 1, 8, 7, 4, 2, 1
    sizes = [len(oracles.s_by_definition(8, 2, k)) for k in range(1, 7)]
    assert select_k(8, 2) == 1 + sizes.index(max(sizes)) == 2
    # tie between k=1 and k=2 (32 words each) goes to k=1
    assert select_k(6, 3) == 1
    with pytest.raises(InvalidInputError):
        select_k(2, 2)


def test_nonexpandable_word_sets():
    assert is_nonexpandable_word_set(WordCode.parse(["1000"], 2)) == (True, None)
    assert is_nonexpandable_word_set(WordCode.parse(["1100"], 2)) == (True, None)
    ok, witness = is_nonexpandable_word_set(WordCode.of([], 4, 2))
    assert not ok and is_bifix_free(witness)


def test_nonexpandable_word_set_witness_is_valid():
    # over a ternary alphabet e.g. 2000 can join {1000}
    code = WordCode.parse(["1000"], 3)
    ok, witness = is_nonexpandable_word_set(code)
    assert not ok
    assert witness not in code
    assert oracles.bifix_free(str(witness))
    assert oracles.cross_free(str(witness), "1000")


@pytest.mark.parametrize("n, q", [(n, 2) for n in range(3, 10)] + [(n, 3) for n in range(3, 7)])
def test_best_s_sets_are_nonexpandable(n, q):
    code = build_s(n, q, select_k(n, q))
    assert is_nonexpandable_word_set(code) == (True, None)


def test_nonexpandable_rejects_non_cross_free_input():
    with pytest.raises(InvalidInputError):
        is_nonexpandable_word_set(WordCode.parse(["1000", "1100"], 2))


def test_wordcode_rejects_mixed_lengths():
    with pytest.raises(InvalidInputError):
        WordCode.of([W("10"), W("100")])
