"""Cross-bibifix-free matrix codes built from cross-bifix-free diagonals.

Every member of the code has a word of a cross-bifix-free set on its main
diagonal and arbitrary symbols elsewhere. With the S set of maximum size
the result cannot be enlarged by any other bibifix-free matrix; the
verifiers here check that claim exhaustively.

Pairwise checks over whole codes go through hash indexes of corner
blocks: a set is cross-bibifix-free iff no r x r biprefix of one member
occurs as the r x r bisuffix of another. This is an exact restatement of
the pairwise relation, so it agrees with ``is_cross_bibifix_free_pair``
on every pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Iterator, Sequence, TypeVar

from .errors import InvalidInputError, check_budget
from .generation import MatrixSet, generate_bbf
from .matrices import SquareMatrix, has_bibifix_half_depth, prefix_block, suffix_block
from .words import MAX_Q, Word, WordCode, best_s, build_s, is_bifix_free, select_k

T = TypeVar("T", bound=Hashable)


@dataclass(frozen=True)
class MatrixCode:
    n: int
    q: int
    k: int | None
    diagonal_code: WordCode

    def __len__(self) -> int:
        return self.q ** (self.n * self.n - self.n) * len(self.diagonal_code)

    def iter_members(self) -> Iterator[SquareMatrix]:
        """Stream members grouped by diagonal word (not globally sorted)."""
        n, q = self.n, self.q
        for d in self.diagonal_code:
            for free in itertools.product(range(q), repeat=n * n - n):
                yield _fill_diagonal(d.symbols, free, n, q)

    @cached_property
    def members(self) -> MatrixSet:
        return MatrixSet.of(self.iter_members(), self.n, self.q)

    def __iter__(self) -> Iterator[SquareMatrix]:
        return iter(self.members)

    def __contains__(self, m: object) -> bool:
        if not isinstance(m, SquareMatrix) or m.n != self.n or m.q != self.q:
            return False
        return Word(tuple(m.rows[i][i] for i in range(self.n)), self.q) in self.diagonal_code


def _fill_diagonal(diag: tuple[int, ...], free: tuple[int, ...], n: int, q: int) -> SquareMatrix:
    # off-diagonal cells are filled in row-major order
    it = iter(free)
    rows = tuple(
        tuple(diag[i] if i == j else next(it) for j in range(n))
        for i in range(n)
    )
    return SquareMatrix._trusted(rows, q)


def build_cbbf(
    n: int,
    q: int,
    *,
    k: int | None = None,
    diagonal_code: WordCode | None = None,
    budget: int | None = None,
) -> MatrixCode:
    """All n x n matrices whose main diagonal is a word of the S set.

    By default the S set uses the k of maximum size, except that the
    4 x 4 binary case is pinned to the diagonal set {1000}: the {1100}
    alternative is cross-bibifix-free but expandable. ``k`` picks a
    specific S set and ``diagonal_code`` replaces it with any word code.
    """
    if not isinstance(n, int) or n < 3:
        raise InvalidInputError(f"n must be >= 3, got {n!r}")
    if not isinstance(q, int) or not 2 <= q <= MAX_Q:
        raise InvalidInputError(f"q must be in 2..{MAX_Q}, got {q!r}")
    if diagonal_code is not None and k is not None:
        raise InvalidInputError("pass either k or diagonal_code, not both")
    if diagonal_code is not None:
        if diagonal_code.n != n or diagonal_code.q != q:
            raise InvalidInputError("diagonal code does not match n and q")
        chosen_k = None
    elif k is not None:
        chosen_k = k
        diagonal_code = build_s(n, q, k, budget)
    elif (n, q) == (4, 2):
        chosen_k = 1
        diagonal_code = WordCode.parse(["1000"], q)
    else:
        chosen_k = select_k(n, q, budget)
        diagonal_code = build_s(n, q, chosen_k, budget)
    check_budget(q ** (n * n - n) * len(diagonal_code), budget, f"CBBF({n},{q})")
    return MatrixCode(n, q, chosen_k, diagonal_code)


def _block_conflict(
    items: Sequence[T],
    radii: Iterable[int],
    prefix: Callable[[T, int], Hashable],
    suffix: Callable[[T, int], Hashable],
) -> tuple[T, T] | None:
    for r in radii:
        # each suffix block keeps at most two distinct owners, enough to
        # find an owner different from the querying item
        owners: dict[Hashable, list[T]] = {}
        for it in items:
            bucket = owners.setdefault(suffix(it, r), [])
            if len(bucket) < 2:
                bucket.append(it)
        for it in items:
            for other in owners.get(prefix(it, r), ()):
                if other != it:
                    return it, other
    return None


def _sq_prefix(m: SquareMatrix, r: int):
    return prefix_block(m.rows, r)


def _sq_suffix(m: SquareMatrix, r: int):
    return suffix_block(m.rows, r)


def verify_cross_set(code: MatrixCode | MatrixSet | Iterable[SquareMatrix]) -> tuple[bool, tuple[SquareMatrix, SquareMatrix] | None]:
    """Check that all distinct members are pairwise cross-bibifix-free.

    Returns ``(True, None)`` or ``(False, (T, T2))`` where a biprefix of
    ``T`` equals the same-size bisuffix of ``T2``.
    """
    items = list(code.members if isinstance(code, MatrixCode) else code)
    if len(set(items)) != len(items):
        raise InvalidInputError("set contains repeated matrices")
    if not items:
        return True, None
    n = items[0].n
    pair = _block_conflict(items, range(1, n), _sq_prefix, _sq_suffix)
    return pair is None, pair


@dataclass(frozen=True)
class _CornerIndex:
    prefixes: dict[int, frozenset]
    suffixes: dict[int, frozenset]

    @classmethod
    def build(cls, members: Iterable[SquareMatrix], n: int) -> _CornerIndex:
        members = list(members)
        return cls(
            {r: frozenset(prefix_block(m.rows, r) for m in members) for r in range(1, n)},
            {r: frozenset(suffix_block(m.rows, r) for m in members) for r in range(1, n)},
        )

    def collides(self, m: SquareMatrix) -> bool:
        rows = m.rows
        return any(
            prefix_block(rows, r) in self.suffixes[r] or suffix_block(rows, r) in self.prefixes[r]
            for r in self.prefixes
        )


def _code_parts(code: MatrixCode | MatrixSet) -> tuple[int, int, Callable[[SquareMatrix], bool], Iterable[SquareMatrix]]:
    if isinstance(code, MatrixCode):
        return code.n, code.q, code.__contains__, code.iter_members()
    return code.n, code.q, code.__contains__, code.members


def expands(code: MatrixCode | MatrixSet, M: SquareMatrix) -> bool:
    """True if ``M`` is a bibifix-free non-member that can join ``code``."""
    n, q, contains, members = _code_parts(code)
    if M.n != n or M.q != q:
        raise InvalidInputError("candidate does not match the code's n and q")
    if contains(M) or has_bibifix_half_depth(M.rows):
        return False
    return not _CornerIndex.build(members, n).collides(M)


def verify_nonexpandable(
    code: MatrixCode | MatrixSet,
    budget: int | None = None,
    candidates: Iterable[SquareMatrix] | None = None,
) -> tuple[bool, SquareMatrix | None]:
    """Search all bibifix-free matrices for one that could join ``code``.

    Returns ``(True, None)`` when none exists, otherwise ``(False, M)``
    with ``M`` the first expanding matrix in lexicographic order.
    """
    n, q, contains, members = _code_parts(code)
    index = _CornerIndex.build(members, n)
    if candidates is None:
        candidates = generate_bbf(n, q, budget)
    for M in candidates:
        if contains(M):
            continue
        if not index.collides(M):
            return False, M
    return True, None


def diagonals_of_bbf_are_bifix_free(n: int, q: int, budget: int | None = None) -> tuple[bool, SquareMatrix | None]:
    """Check that every bibifix-free n x n matrix has a bifix-free main diagonal."""
    for m in generate_bbf(n, q, budget):
        if not is_bifix_free(Word(tuple(m.rows[i][i] for i in range(n)), q)):
            return False, m
    return True, None


@dataclass(frozen=True, order=True)
class RectMatrix:
    rows: tuple[tuple[int, ...], ...]
    q: int = 2

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or not 2 <= self.q <= MAX_Q:
            raise InvalidInputError(f"alphabet size q must be in 2..{MAX_Q}, got {self.q!r}")
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise InvalidInputError("rows must be nonempty and of equal length")
        if len(rows) >= len(rows[0]):
            raise InvalidInputError("rectangular matrices need fewer rows than columns")
        for r in rows:
            for x in r:
                if not isinstance(x, int) or not 0 <= x < self.q:
                    raise InvalidInputError(f"entry {x!r} outside alphabet of size {self.q}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str, q: int | None = None) -> RectMatrix:
        parts = text.strip().split("/")
        if not all(p.isdigit() and p.isascii() for p in parts):
            raise InvalidInputError(f"not a digit matrix: {text!r}")
        grid = tuple(tuple(int(c) for c in p) for p in parts)
        if q is None:
            q = max(2, max(max(r) for r in grid) + 1)
        return cls(grid, q)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    def row_strings(self) -> list[str]:
        return ["".join(map(str, r)) for r in self.rows]

    def __str__(self) -> str:
        return "/".join(self.row_strings())


def _rect_prefix(c: RectMatrix, r: int):
    return tuple(row[:r] for row in c.rows[:r])


def _rect_suffix(c: RectMatrix, r: int):
    return tuple(row[c.m - r:] for row in c.rows[c.n - r:])


def is_cross_bibifix_free_rect_pair(C: RectMatrix, C2: RectMatrix) -> bool:
    """Compare square r x r corners for r = 1..n-1 in both directions."""
    if (C.n, C.m, C.q) != (C2.n, C2.m, C2.q):
        raise InvalidInputError("rectangular matrices differ in shape or alphabet")
    if C == C2:
        raise InvalidInputError("cross-bibifix-freeness is defined for distinct matrices")
    return all(
        _rect_prefix(C, r) != _rect_suffix(C2, r) and _rect_prefix(C2, r) != _rect_suffix(C, r)
        for r in range(1, C.n)
    )


def build_cbbf_rect(
    n: int,
    m: int,
    q: int,
    *,
    diagonal_code: WordCode | None = None,
    budget: int | None = None,
) -> tuple[RectMatrix, ...]:
    """n x m matrices with S words on the diagonals of both end n x n blocks.

    The left block carries a word on cells (k, k) and the right block an
    independently chosen word on cells (k, m-n+k); every other cell is
    free. Returned in lexicographic row-major order.
    """
    if not isinstance(n, int) or not isinstance(m, int) or not 3 <= n < m:
        raise InvalidInputError(f"need 3 <= n < m, got n={n!r}, m={m!r}")
    if diagonal_code is None:
        diagonal_code = best_s(n, q, budget)
    elif diagonal_code.n != n or diagonal_code.q != q:
        raise InvalidInputError("diagonal code does not match n and q")
    left = {(k, k) for k in range(n)}
    right = {(k, m - n + k) for k in range(n)}
    # the two diagonals never share a cell when m > n
    assert not left & right
    free_cells = [(i, j) for i in range(n) for j in range(m) if (i, j) not in left and (i, j) not in right]
    check_budget(len(diagonal_code) ** 2 * q ** len(free_cells), budget, f"CBBF({n},{m},{q})")
    out = []
    for wi in diagonal_code:
        for wj in diagonal_code:
            grid = [[0] * m for _ in range(n)]
            for k in range(n):
                grid[k][k] = wi[k]
                grid[k][m - n + k] = wj[k]
            for free in itertools.product(range(q), repeat=len(free_cells)):
                for (i, j), x in zip(free_cells, free):
                    grid[i][j] = x
                out.append(RectMatrix(tuple(tuple(r) for r in grid), q))
    out.sort()
    return tuple(out)


def verify_rect_cross_set(items: Iterable[RectMatrix]) -> tuple[bool, tuple[RectMatrix, RectMatrix] | None]:
    items = list(items)
    if len(set(items)) != len(items):
        raise InvalidInputError("set contains repeated matrices")
    if not items:
        return True, None
    pair = _block_conflict(items, range(1, items[0].n), _rect_prefix, _rect_suffix)
    return pair is None, pair
