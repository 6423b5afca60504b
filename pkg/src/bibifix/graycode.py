"""Gray-code listings: reflected q-ary words and the matrix code listing.

The matrix listing walks the diagonal words in a Hamming-distance-1
order and, for each diagonal, runs through every off-diagonal filling in
reflected Gray order, reversing direction on odd blocks so that the seam
between two blocks only changes one diagonal entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .codes import build_cbbf
from .errors import InvalidInputError, NoGrayOrderError, check_budget
from .matrices import SquareMatrix
from .words import MAX_Q, Word, WordCode

Item = Union[Word, SquareMatrix]


@dataclass(frozen=True)
class GrayListing:
    items: tuple
    n: int
    q: int

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator:
        return iter(self.items)

    def __getitem__(self, index):
        return self.items[index]


def _reflected(n: int, q: int, reverse: bool) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    digits = range(q - 1, -1, -1) if reverse else range(q)
    for i in digits:
        # block i is reversed when i is odd; reversing the whole list flips that
        for tail in _reflected(n - 1, q, (i % 2 == 1) != reverse):
            yield (i,) + tail


def iter_reflected_gray(n: int, q: int, *, reverse: bool = False) -> Iterator[tuple[int, ...]]:
    """Symbol tuples of the reflected q-ary Gray code, optionally backwards."""
    if not isinstance(n, int) or n < 0:
        raise InvalidInputError(f"n must be >= 0, got {n!r}")
    if not isinstance(q, int) or q < 2:
        raise InvalidInputError(f"q must be >= 2, got {q!r}")
    return _reflected(n, q, reverse)


def reflected_gray(n: int, q: int, budget: int | None = None) -> GrayListing:
    if not isinstance(q, int) or not 2 <= q <= MAX_Q:
        raise InvalidInputError(f"q must be in 2..{MAX_Q}, got {q!r}")
    check_budget(q**n, budget, f"reflected Gray code G({n},{q})")
    items = tuple(Word(s, q) for s in iter_reflected_gray(n, q))
    return GrayListing(items, n, q)


def f_index(i: int, j: int, n: int) -> int:
    """1-based position of off-diagonal cell (i, j) in the linear word.

    Lower-triangle cells come first, column by column from top to bottom,
    then upper-triangle cells column by column.
    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidInputError(f"cell ({i}, {j}) outside a {n}x{n} matrix")
    if i == j:
        raise InvalidInputError("diagonal cells have no off-diagonal index")
    if i > j:
        return n * (j - 1) + i - j * (j + 1) // 2
    return n * (n - 1) // 2 + j * (j - 1) // 2 + i - j + 1


def _offdiag_cells(n: int) -> list[tuple[int, int]]:
    """0-based cells ordered by their off-diagonal index."""
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    cells.sort(key=lambda c: f_index(c[0], c[1], n))
    return [(i - 1, j - 1) for i, j in cells]


def _decode(off: Sequence[int], diag: Sequence[int], cells: list[tuple[int, int]], q: int) -> SquareMatrix:
    n = len(diag)
    grid = [[0] * n for _ in range(n)]
    for k in range(n):
        grid[k][k] = diag[k]
    for (i, j), x in zip(cells, off):
        grid[i][j] = x
    return SquareMatrix._trusted(tuple(tuple(r) for r in grid), q)


def offdiag_decode(w: Word, diagonal: Word) -> SquareMatrix:
    n = len(diagonal)
    if n < 1 or len(w) != n * n - n:
        raise InvalidInputError(f"need a word of length {n * n - n} for a {n}x{n} matrix, got {len(w)}")
    if w.q != diagonal.q:
        raise InvalidInputError("off-diagonal word and diagonal use different alphabets")
    return _decode(w.symbols, diagonal.symbols, _offdiag_cells(n), w.q)


def offdiag_encode(T: SquareMatrix) -> Word:
    return Word(tuple(T.rows[i][j] for i, j in _offdiag_cells(T.n)), T.q)


def hamming(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x != y for x, y in zip(a, b))


def diagonal_gray(code: WordCode, budget: int | None = None) -> GrayListing:
    """Order the words of ``code`` so that neighbours differ in one position.

    Depth-first search for a Hamiltonian path in the distance-1 graph,
    starting from the smallest word and trying neighbours in
    lexicographic order. Later start words are tried only if no path
    begins at the smallest one. ``budget`` caps the number of search
    steps.
    """
    words = list(code)
    if not words:
        raise InvalidInputError("cannot order an empty code")
    count = len(words)
    adj = [[b for b in range(count) if hamming(words[a], words[b]) == 1] for a in range(count)]

    seen = {0}
    stack = [0]
    while stack:
        for b in adj[stack.pop()]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    if len(seen) != count:
        raise NoGrayOrderError(f"distance-1 graph of {count} words is disconnected")

    steps = 0
    for start in range(count):
        used = [False] * count
        used[start] = True
        path = [start]
        frontier = [iter(adj[start])]
        while frontier and len(path) < count:
            steps += 1
            if steps % 4096 == 0:
                check_budget(steps, budget, "Hamiltonian path search")
            nxt = next((b for b in frontier[-1] if not used[b]), None)
            if nxt is None:
                frontier.pop()
                used[path.pop()] = False
                continue
            used[nxt] = True
            path.append(nxt)
            frontier.append(iter(adj[nxt]))
        if len(path) == count:
            return GrayListing(tuple(words[i] for i in path), code.n, code.q)
    raise NoGrayOrderError(f"no Hamming-distance-1 ordering of {count} words exists")


def iter_cbbf_gray(diagonals: Iterable[Word], n: int, q: int) -> Iterator[SquareMatrix]:
    cells = _offdiag_cells(n)
    for block, d in enumerate(diagonals):
        for off in iter_reflected_gray(n * n - n, q, reverse=block % 2 == 1):
            yield _decode(off, d.symbols, cells, q)


def build_cbbf_gray(n: int, q: int, *, diagonal_code: WordCode | None = None, budget: int | None = None) -> GrayListing:
    code = build_cbbf(n, q, diagonal_code=diagonal_code, budget=budget)
    order = diagonal_gray(code.diagonal_code, budget)
    return GrayListing(tuple(iter_cbbf_gray(order, n, q)), n, q)


def _cells(item) -> tuple:
    if isinstance(item, SquareMatrix):
        return tuple(item.cells())
    if isinstance(item, Word):
        return item.symbols
    return tuple(item)


def verify_gray(listing: Iterable[Item]) -> tuple[bool, int | None]:
    """Check successive distance 1 and distinctness over a (possibly lazy) listing.

    Returns ``(True, None)`` or ``(False, i)`` where item ``i`` (0-based)
    repeats an earlier item or is not at distance 1 from item ``i - 1``.
    """
    seen: set = set()
    prev = None
    for idx, item in enumerate(listing):
        cur = _cells(item)
        if cur in seen:
            return False, idx
        if prev is not None and (len(prev) != len(cur) or hamming(prev, cur) != 1):
            return False, idx
        seen.add(cur)
        prev = cur
    return True, None
