"""Square matrices over {0, ..., q-1} and their corner blocks.

A biprefix of size r is the top-left r x r block, a bisuffix the
bottom-right one. Blocks are compared as tuples of row tuples, which is
what the hot loops in generation and verification use directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidInputError
from .words import MAX_Q, Word

Block = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class SquareMatrix:
    rows: Block
    q: int = 2

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or not 2 <= self.q <= MAX_Q:
            raise InvalidInputError(f"alphabet size q must be in 2..{MAX_Q}, got {self.q!r}")
        rows = tuple(tuple(r) for r in self.rows)
        n = len(rows)
        if n == 0:
            raise InvalidInputError("matrix must have at least one row")
        for r in rows:
            if len(r) != n:
                raise InvalidInputError(f"matrix is not square: row of length {len(r)} in {n} rows")
            for x in r:
                if not isinstance(x, int) or not 0 <= x < self.q:
                    raise InvalidInputError(f"entry {x!r} outside alphabet of size {self.q}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _trusted(cls, rows: Block, q: int) -> SquareMatrix:
        # skips validation; callers guarantee a square tuple-of-tuples in range
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "q", q)
        return m

    @classmethod
    def parse(cls, text: str, q: int | None = None) -> SquareMatrix:
        """Parse the compact form ``"10/00"`` (rows separated by ``/``)."""
        parts = text.strip().split("/")
        return cls.from_rows(parts, q)

    @classmethod
    def from_rows(cls, rows: list[str], q: int | None = None) -> SquareMatrix:
        for r in rows:
            if not r.isdigit() or not r.isascii():
                raise InvalidInputError(f"not a digit row: {r!r}")
        grid = tuple(tuple(int(c) for c in r) for r in rows)
        if q is None:
            q = max(2, max(max(r) for r in grid) + 1)
        return cls(grid, q)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def row_strings(self) -> list[str]:
        return ["".join(map(str, r)) for r in self.rows]

    def __str__(self) -> str:
        return "/".join(self.row_strings())

    def cells(self) -> Iterator[int]:
        for r in self.rows:
            yield from r


@dataclass(frozen=True)
class SubmatrixView:
    """An r x r block of a matrix whose top-left corner sits at 1-based ``position``."""

    position: tuple[int, int]
    size: int
    grid: Block

    def __str__(self) -> str:
        return "/".join("".join(map(str, r)) for r in self.grid)


def prefix_block(rows: Block, r: int) -> Block:
    return tuple(row[:r] for row in rows[:r])


def suffix_block(rows: Block, r: int) -> Block:
    n = len(rows)
    return tuple(row[n - r:] for row in rows[n - r:])


def _check_r(T: SquareMatrix, r: int) -> None:
    if not isinstance(r, int) or not 1 <= r <= T.n:
        raise InvalidInputError(f"block size must be in 1..{T.n}, got {r!r}")


def biprefix(T: SquareMatrix, r: int) -> SubmatrixView:
    _check_r(T, r)
    return SubmatrixView((1, 1), r, prefix_block(T.rows, r))


def bisuffix(T: SquareMatrix, r: int) -> SubmatrixView:
    _check_r(T, r)
    start = T.n - r + 1
    return SubmatrixView((start, start), r, suffix_block(T.rows, r))


def has_bibifix_half_depth(rows: Block) -> bool:
    n = len(rows)
    for r in range(1, n // 2 + 1):
        if all(rows[i][:r] == rows[n - r + i][n - r:] for i in range(r)):
            return True
    return False


def is_bibifix_free(T: SquareMatrix) -> bool:
    """True if no r x r biprefix equals the bisuffix, for r up to floor(n/2)."""
    return not has_bibifix_half_depth(T.rows)


def bibifix_dims(T: SquareMatrix) -> set[int]:
    """Every r in 1..n-1 where the r x r corner blocks coincide."""
    rows = T.rows
    return {r for r in range(1, T.n) if prefix_block(rows, r) == suffix_block(rows, r)}


def cross_bibifix_dims(T: SquareMatrix, T2: SquareMatrix) -> set[int]:
    """Sizes r in 1..n-1 where a biprefix of one matrix is a bisuffix of the other."""
    if T.n != T2.n or T.q != T2.q:
        raise InvalidInputError("matrices differ in dimension or alphabet")
    a, b = T.rows, T2.rows
    return {
        r
        for r in range(1, T.n)
        if prefix_block(a, r) == suffix_block(b, r) or prefix_block(b, r) == suffix_block(a, r)
    }


def is_cross_bibifix_free_pair(T: SquareMatrix, T2: SquareMatrix) -> bool:
    # Applies to arbitrary matrices; bibifix-freeness of T and T2 is a separate check.
    if T == T2:
        raise InvalidInputError("cross-bibifix-freeness is defined for distinct matrices")
    return not cross_bibifix_dims(T, T2)


def main_diagonal(T: SquareMatrix) -> Word:
    return Word(tuple(T.rows[i][i] for i in range(T.n)), T.q)


def hamming_distance(T: SquareMatrix, T2: SquareMatrix) -> int:
    if T.n != T2.n:
        raise InvalidInputError("matrices differ in dimension")
    return sum(x != y for x, y in zip(T.cells(), T2.cells()))
