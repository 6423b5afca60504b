"""Exhaustive generation of bibifix-free square matrices.

The recursive path grows n x n matrices into (n+1) x (n+1) ones by
inserting a free middle row and column (``apply_psi``). Starting from an
even size this already yields exactly the bibifix-free matrices. Starting
from an odd size n, the only failures are the matrices whose two
(n+1)/2 corner blocks coincide and are themselves bibifix-free, i.e. the
``apply_phi`` images of the smaller bibifix-free set; those are removed
by set difference.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .errors import InvalidInputError, ResourceLimitError, check_budget
from .matrices import Block, SquareMatrix
from .words import MAX_Q

# Sets beyond this many members are only materialized with stress=True.
STRESS_THRESHOLD = 2**22


@dataclass(frozen=True)
class MatrixSet:
    """Distinct n x n matrices kept in lexicographic row-major order."""

    members: tuple[SquareMatrix, ...]
    n: int
    q: int

    @classmethod
    def of(cls, matrices: Iterable[SquareMatrix], n: int, q: int, *, presorted: bool = False) -> MatrixSet:
        items = list(matrices)
        for m in items:
            if m.n != n or m.q != q:
                raise InvalidInputError(f"matrix {m} is not {n}x{n} over q={q}")
        if not presorted:
            unique = sorted(set(items))
            if len(unique) != len(items):
                raise InvalidInputError("MatrixSet members must be pairwise distinct")
            items = unique
        return cls(tuple(items), n, q)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SquareMatrix]:
        return iter(self.members)

    def __contains__(self, m: object) -> bool:
        return m in self.as_set

    @cached_property
    def as_set(self) -> frozenset[SquareMatrix]:
        return frozenset(self.members)


def _check_nq(n: int, q: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n!r}")
    if not isinstance(q, int) or not 2 <= q <= MAX_Q:
        raise InvalidInputError(f"q must be in 2..{MAX_Q}, got {q!r}")


def iter_phi(M: SquareMatrix) -> Iterator[SquareMatrix]:
    n, q = M.n, M.q
    for free in itertools.product(range(q), repeat=2 * n * n):
        upper = free[: n * n]
        lower = free[n * n:]
        rows = []
        for i in range(n):
            rows.append(M.rows[i] + upper[i * n:(i + 1) * n])
        for i in range(n):
            rows.append(lower[i * n:(i + 1) * n] + M.rows[i])
        yield SquareMatrix._trusted(tuple(rows), q)


def apply_phi(M: SquareMatrix, budget: int | None = None) -> MatrixSet:
    """All 2n x 2n matrices whose two diagonal n x n blocks equal ``M``."""
    n, q = M.n, M.q
    check_budget(q ** (2 * n * n), budget, "phi image")
    return MatrixSet.of(iter_phi(M), 2 * n, q)


def _psi_rows(rows: Block, free: tuple[int, ...]) -> Block:
    # free[:n] fills the new column (top to bottom, skipping the new row),
    # free[n:] is the new row.
    n = len(rows)
    h = n // 2
    col = free[:n]
    new_row = free[n:]
    out = []
    for i in range(h):
        r = rows[i]
        out.append(r[:h] + (col[i],) + r[h:])
    out.append(new_row)
    for i in range(h, n):
        r = rows[i]
        out.append(r[:h] + (col[i],) + r[h:])
    return tuple(out)


def iter_psi(M: SquareMatrix) -> Iterator[SquareMatrix]:
    n, q = M.n, M.q
    for free in itertools.product(range(q), repeat=2 * n + 1):
        yield SquareMatrix._trusted(_psi_rows(M.rows, free), q)


def apply_psi(M: SquareMatrix, budget: int | None = None) -> MatrixSet:
    """All (n+1) x (n+1) matrices obtained by inserting a free row and column.

    The new row and column sit at 0-based index ``n // 2``; the four
    corner blocks of ``M`` are kept. For n = 1 the top-left block is
    empty, so ``M`` lands in the bottom-right corner.
    """
    n, q = M.n, M.q
    check_budget(q ** (2 * n + 1), budget, "psi image")
    return MatrixSet.of(iter_psi(M), n + 1, q)


@lru_cache(maxsize=None)
def _count_bbf(n: int, q: int) -> int:
    if n == 1:
        return q
    step = q ** (2 * n - 1) * _count_bbf(n - 1, q)
    if n % 2:
        return step
    return step - q ** (n * n // 2) * _count_bbf(n // 2, q)


def count_bbf(n: int, q: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n!r}")
    if not isinstance(q, int) or q < 2:
        raise InvalidInputError(f"q must be >= 2, got {q!r}")
    for m in range(1, n):
        _count_bbf(m, q)
    return _count_bbf(n, q)


def _guard_size(n: int, q: int, stress: bool) -> None:
    if not stress and count_bbf(n, q) > STRESS_THRESHOLD:
        raise ResourceLimitError(
            f"BBF({n},{q}) has {count_bbf(n, q)} members; pass stress=True to materialize it"
        )


def all_matrices(n: int, q: int, budget: int | None = None) -> Iterator[SquareMatrix]:
    """Every n x n matrix over q symbols, in lexicographic row-major order."""
    _check_nq(n, q)
    check_budget(q ** (n * n), budget, f"all {n}x{n} matrices over q={q}")
    for cells in itertools.product(range(q), repeat=n * n):
        yield SquareMatrix._trusted(tuple(cells[i * n:(i + 1) * n] for i in range(n)), q)


def brute_bbf(n: int, q: int, budget: int | None = None, *, stress: bool = False) -> MatrixSet:
    """Filter every matrix through the full-depth corner comparison."""
    _check_nq(n, q)
    check_budget(q ** (n * n), budget, f"brute force BBF({n},{q})")
    _guard_size(n, q, stress)
    keep = []
    for m in all_matrices(n, q, budget):
        rows = m.rows
        if all(
            tuple(row[:r] for row in rows[:r]) != tuple(row[n - r:] for row in rows[n - r:])
            for r in range(1, n)
        ):
            keep.append(m)
    # product order is already lexicographic row-major
    return MatrixSet.of(keep, n, q, presorted=True)


def _generate(n: int, q: int) -> list[SquareMatrix]:
    if n == 1:
        return [SquareMatrix._trusted(((a,),), q) for a in range(q)]
    prev = _generate(n - 1, q)
    out: list[SquareMatrix] = []
    if (n - 1) % 2 == 0:
        for T in prev:
            out.extend(iter_psi(T))
        return out
    removed: set[SquareMatrix] = set()
    for D in _generate(n // 2, q):
        removed.update(iter_phi(D))
    for T in prev:
        out.extend(m for m in iter_psi(T) if m not in removed)
    return out


def generate_bbf(
    n: int,
    q: int,
    budget: int | None = None,
    *,
    method: str = "recursive",
    stress: bool = False,
) -> MatrixSet:
    """All bibifix-free n x n matrices over q symbols.

    ``method="recursive"`` builds the set from smaller sizes with
    ``apply_psi`` and ``apply_phi``; ``method="brute"`` filters every
    matrix and is meant for cross-validation.
    """
    _check_nq(n, q)
    if method == "brute":
        return brute_bbf(n, q, budget, stress=stress)
    if method != "recursive":
        raise InvalidInputError(f"unknown method {method!r}")
    work = q ** (2 * n - 1) * count_bbf(n - 1, q) if n > 1 else q
    check_budget(work, budget, f"recursive BBF({n},{q})")
    _guard_size(n, q, stress)
    return MatrixSet.of(_generate(n, q), n, q)
