import itertools
import random

import pytest

import oracles
from bibifix.codes import (
    RectMatrix,
    build_cbbf,
    build_cbbf_rect,
    diagonals_of_bbf_are_bifix_free,
    expands,
    is_cross_bibifix_free_rect_pair,
    verify_cross_set,
    verify_nonexpandable,
    verify_rect_cross_set,
)
from bibifix.errors import InvalidInputError, ResourceLimitError
from bibifix.generation import MatrixSet, generate_bbf
from bibifix.matrices import SquareMatrix, is_bibifix_free, main_diagonal
from bibifix.words import WordCode, build_s

M_ = SquareMatrix.parse
COUNTER_4X4 = M_("1000/0000/0011/0010")


def _g(m):
    return [list(r) for r in m.rows]


def _naive_cross_ok(items):
    grids = [_g(m) for m in items]
    return all(oracles.cross_free_grid(a, b) for a, b in itertools.combinations(grids, 2))


def _naive_expanders(members, n, q):
    grids = [_g(m) for m in members]
    member_set = set(members)
    out = []
    for M in generate_bbf(n, q):
        if M in member_set:
            continue
        g = _g(M)
        if all(oracles.cross_free_grid(g, c) for c in grids):
            out.append(M)
    return out


@pytest.mark.parametrize(
    "n, q, size, diagonals",
    [
        (3, 3, 2916, ["100", "102", "120", "122"]),
        (3, 2, 64, ["100"]),
        (4, 2, 4096, ["1000"]),
    ],
)
def test_build_cbbf_examples(n, q, size, diagonals):
    code = build_cbbf(n, q)
    assert len(code) == size == len(code.members)
    assert code.diagonal_code.strings() == diagonals
    assert size == q ** (n * n - n) * len(diagonals)
    for m in code.members:
        assert str(main_diagonal(m)) in diagonals
        assert m in code


@pytest.mark.parametrize("n, q", [(3, 2), (3, 3), (4, 2)])
def test_members_are_bibifix_free(n, q):
    code = build_cbbf(n, q)
    bbf = generate_bbf(n, q)
    assert all(m in bbf for m in code.members)
    assert all(oracles.bibifix_free_grid(_g(m)) for m in code.members)


def test_build_cbbf_options():
    assert build_cbbf(4, 2, k=2).diagonal_code.strings() == ["1100"]
    assert build_cbbf(5, 2).k == 2
    custom = WordCode.parse(["1100"], 2)
    assert build_cbbf(4, 2, diagonal_code=custom).k is None
    with pytest.raises(InvalidInputError):
        build_cbbf(2, 2)
    with pytest.raises(InvalidInputError):
        build_cbbf(4, 2, k=1, diagonal_code=custom)
    with pytest.raises(InvalidInputError):
        build_cbbf(3, 2, diagonal_code=custom)
    with pytest.raises(ResourceLimitError):
        build_cbbf(4, 3, budget=1000)


def test_member_stream_and_set_agree():
    code = build_cbbf(3, 3)
    streamed = list(code.iter_members())
    assert len(streamed) == len(set(streamed)) == 2916
    assert set(streamed) == code.members.as_set
    assert list(code) == sorted(streamed)


def test_verify_cross_set_true_cases():
    code = build_cbbf(3, 3)
    assert verify_cross_set(code) == (True, None)
    rng = random.Random(7)
    members = list(code.members)
    for _ in range(500):
        a, b = rng.sample(members, 2)
        assert oracles.cross_free_grid(_g(a), _g(b))
    assert verify_cross_set(MatrixSet.of([M_("10/00")], 2, 2)) == (True, None)
    assert verify_cross_set([]) == (True, None)


def test_verify_cross_set_detects_001_diagonal():
    members = list(build_cbbf(3, 2).members) + [M_("010/000/101")]
    ok, pair = verify_cross_set(MatrixSet.of(members, 3, 2))
    assert not ok
    a, b = pair
    assert a != b
    assert not oracles.cross_free_grid(_g(a), _g(b))


def test_verify_cross_set_agrees_with_naive_on_random_subsets():
    rng = random.Random(11)
    pool = list(generate_bbf(3, 2))
    outcomes = set()
    for _ in range(200):
        subset = rng.sample(pool, rng.randint(2, 6))
        ok, pair = verify_cross_set(subset)
        assert ok == _naive_cross_ok(subset)
        if pair:
            assert not oracles.cross_free_grid(_g(pair[0]), _g(pair[1]))
        outcomes.add(ok)
    assert outcomes == {True, False}


def test_verify_cross_set_rejects_repeats():
    with pytest.raises(InvalidInputError):
        verify_cross_set([M_("10/00"), M_("10/00")])


@pytest.mark.parametrize("n, q", [(3, 2), (3, 3), (4, 2)])
def test_nonexpandable(n, q):
    assert verify_nonexpandable(build_cbbf(n, q)) == (True, None)


def test_nonexpandable_matches_naive_at_3_2():
    code = build_cbbf(3, 2)
    assert _naive_expanders(list(code.members), 3, 2) == []


def test_1100_variant_is_expandable():
    code = build_cbbf(4, 2, diagonal_code=WordCode.parse(["1100"], 2))
    assert verify_cross_set(code)[0]
    ok, witness = verify_nonexpandable(code)
    assert not ok
    assert is_bibifix_free(witness) and witness not in code
    grids = [_g(c) for c in code.members]
    assert all(oracles.cross_free_grid(_g(witness), c) for c in grids)
    # the known 4x4 expanding matrix is a valid witness as well
    assert oracles.bibifix_free_grid(_g(COUNTER_4X4))
    assert all(oracles.cross_free_grid(_g(COUNTER_4X4), c) for c in grids)
    assert expands(code, COUNTER_4X4)
    assert not expands(build_cbbf(4, 2), COUNTER_4X4)


def test_expands_edge_cases():
    code = build_cbbf(3, 2)
    member = next(iter(code.members))
    assert not expands(code, member)
    assert not expands(code, M_("000/000/000"))
    with pytest.raises(InvalidInputError):
        expands(code, M_("10/00"))


def test_nonexpandable_on_expandable_set_matches_naive():
    # a singleton at (3,2): its first expander must match the naive scan
    members = [M_("100/000/000")]
    mset = MatrixSet.of(members, 3, 2)
    naive = _naive_expanders(members, 3, 2)
    ok, witness = verify_nonexpandable(mset)
    assert not ok
    assert witness == naive[0]


def test_n3_diagonals_have_no_bifix():
    assert diagonals_of_bbf_are_bifix_free(3, 2) == (True, None)
    assert diagonals_of_bbf_are_bifix_free(3, 3) == (True, None)
    # the claim is specific to n = 3: this 6x6 matrix is bibifix-free
    # with diagonal 110110
    big = M_("100000/010000/000000/000100/000110/000110")
    assert is_bibifix_free(big) and str(main_diagonal(big)) == "110110"


def test_build_cbbf_rect_3_6_2():
    items = build_cbbf_rect(3, 6, 2)
    assert len(items) == 4096 == len(set(items))
    for c in items:
        assert (c.rows[0][0], c.rows[1][1], c.rows[2][2]) == (1, 0, 0)
        assert (c.rows[0][3], c.rows[1][4], c.rows[2][5]) == (1, 0, 0)
    assert verify_rect_cross_set(items) == (True, None)
    rng = random.Random(3)
    for _ in range(300):
        a, b = rng.sample(items, 2)
        assert is_cross_bibifix_free_rect_pair(a, b)
        ga, gb = [list(r) for r in a.rows], [list(r) for r in b.rows]
        assert oracles.cross_free_grid(ga, gb)


def test_build_cbbf_rect_3_4_2_exhaustive_pairs():
    items = build_cbbf_rect(3, 4, 2)
    # 12 cells, 6 fixed by the two diagonals
    assert len(items) == 2**6
    for a, b in itertools.combinations(items, 2):
        assert oracles.cross_free_grid([list(r) for r in a.rows], [list(r) for r in b.rows])
    assert verify_rect_cross_set(items)[0]


def test_build_cbbf_rect_ternary_two_diagonals():
    items = build_cbbf_rect(3, 4, 3, diagonal_code=build_s(3, 3, 1))
    assert len(items) == 16 * 3**6
    assert verify_rect_cross_set(items)[0]


def test_rect_corner_collision_detected():
    items = list(build_cbbf_rect(3, 4, 2))
    # bottom-right entry 1 equals every member's top-left entry
    intruder = RectMatrix.parse("0000/0000/0001")
    ok, pair = verify_rect_cross_set(items + [intruder])
    assert not ok and intruder in pair
    assert not is_cross_bibifix_free_rect_pair(intruder, items[0])


def test_rect_flip_off_diagonal_cell():
    c = build_cbbf_rect(3, 6, 2)[0]
    rows = [list(r) for r in c.rows]
    rows[0][1] ^= 1
    flipped = RectMatrix(tuple(tuple(r) for r in rows), 2)
    assert is_cross_bibifix_free_rect_pair(c, flipped)


def test_rect_validation():
    with pytest.raises(InvalidInputError):
        RectMatrix.parse("00/00")
    with pytest.raises(InvalidInputError):
        build_cbbf_rect(3, 3, 2)
    with pytest.raises(InvalidInputError):
        is_cross_bibifix_free_rect_pair(RectMatrix.parse("000/000", 2), RectMatrix.parse("000/000", 2))
