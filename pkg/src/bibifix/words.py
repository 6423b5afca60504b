"""One-dimensional machinery: bifix detection and cross-bifix-free word sets.

Words are immutable values over the alphabet {0, ..., q-1}. Every
set-valued result is returned in lexicographic order so that output is
reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .errors import InvalidInputError, check_budget

MAX_Q = 10


def _check_q(q: int) -> None:
    if not isinstance(q, int) or not 2 <= q <= MAX_Q:
        raise InvalidInputError(f"alphabet size q must be in 2..{MAX_Q}, got {q!r}")


@dataclass(frozen=True, order=True)
class Word:
    symbols: tuple[int, ...]
    q: int = 2

    def __post_init__(self) -> None:
        _check_q(self.q)
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        for s in self.symbols:
            if not isinstance(s, int) or not 0 <= s < self.q:
                raise InvalidInputError(f"symbol {s!r} outside alphabet of size {self.q}")

    @classmethod
    def parse(cls, text: str, q: int | None = None) -> Word:
        """Build a word from a digit string such as ``"1000"``.

        When ``q`` is omitted it is inferred as the smallest alphabet
        (at least binary) containing every digit.
        """
        text = text.strip()
        if not text.isdigit() or not text.isascii():
            raise InvalidInputError(f"not a digit string: {text!r}")
        symbols = tuple(int(c) for c in text)
        if q is None:
            q = max(2, max(symbols) + 1)
        return cls(symbols, q)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __str__(self) -> str:
        return "".join(map(str, self.symbols))


@dataclass(frozen=True)
class WordCode:
    """A set of distinct words sharing length ``n`` and alphabet size ``q``."""

    words: tuple[Word, ...]
    n: int
    q: int

    @classmethod
    def of(cls, words: Iterable[Word], n: int | None = None, q: int | None = None) -> WordCode:
        words = list(words)
        if words:
            n = len(words[0]) if n is None else n
            q = words[0].q if q is None else q
        if n is None or q is None:
            raise InvalidInputError("an empty WordCode needs explicit n and q")
        _check_q(q)
        for w in words:
            if len(w) != n or w.q != q:
                raise InvalidInputError(f"word {w} does not have length {n} over q={q}")
        unique = sorted(set(words))
        if len(unique) != len(words):
            raise InvalidInputError("WordCode members must be pairwise distinct")
        return cls(tuple(unique), n, q)

    @classmethod
    def parse(cls, texts: Iterable[str], q: int) -> WordCode:
        words = [Word.parse(t, q) for t in texts]
        if not words:
            raise InvalidInputError("cannot infer n from an empty list of words")
        return cls.of(words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, w: object) -> bool:
        return w in self._lookup

    @cached_property
    def _lookup(self) -> frozenset[Word]:
        return frozenset(self.words)

    def strings(self) -> list[str]:
        return [str(w) for w in self.words]


def _require_nonempty(w: Word) -> None:
    if len(w) == 0:
        raise InvalidInputError("operation requires a nonempty word")


def is_bifix_free(w: Word) -> bool:
    """Check only prefix/suffix lengths up to floor(n/2)."""
    _require_nonempty(w)
    s = w.symbols
    n = len(s)
    return all(s[:i] != s[n - i:] for i in range(1, n // 2 + 1))


def bifix_lengths(w: Word) -> set[int]:
    """All lengths 1..n-1 at which the prefix equals the suffix."""
    _require_nonempty(w)
    s = w.symbols
    n = len(s)
    return {i for i in range(1, n) if s[:i] == s[n - i:]}


@lru_cache(maxsize=None)
def _count_bf(n: int, q: int) -> int:
    if n == 1:
        return q
    if n % 2:
        return q * _count_bf(n - 1, q)
    return q * _count_bf(n - 1, q) - _count_bf(n // 2, q)


def count_bf(n: int, q: int) -> int:
    """Number of bifix-free words of length ``n`` over ``q`` symbols."""
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n!r}")
    if not isinstance(q, int) or q < 2:
        raise InvalidInputError(f"q must be >= 2, got {q!r}")
    # iterative warm-up keeps recursion depth small for large n
    for m in range(1, n):
        _count_bf(m, q)
    return _count_bf(n, q)


def all_words(n: int, q: int, budget: int | None = None) -> Iterator[Word]:
    _check_q(q)
    check_budget(q**n, budget, f"words of length {n} over q={q}")
    for symbols in itertools.product(range(q), repeat=n):
        yield Word(symbols, q)


def enumerate_bf(n: int, q: int, budget: int | None = None) -> WordCode:
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    return WordCode.of((w for w in all_words(n, q, budget) if is_bifix_free(w)), n, q)


def _check_same_shape(w: Word, w2: Word) -> None:
    if len(w) != len(w2) or w.q != w2.q:
        raise InvalidInputError(f"words {w} and {w2} differ in length or alphabet")
    _require_nonempty(w)


def cross_bifix_lengths(w: Word, w2: Word) -> set[int]:
    """Lengths i in 1..n-1 where a prefix of one word is the suffix of the other."""
    _check_same_shape(w, w2)
    a, b = w.symbols, w2.symbols
    n = len(a)
    return {i for i in range(1, n) if a[:i] == b[n - i:] or b[:i] == a[n - i:]}


def is_cross_bifix_free_pair(w: Word, w2: Word) -> bool:
    _check_same_shape(w, w2)
    if w == w2:
        raise InvalidInputError("cross-bifix-freeness is defined for distinct words")
    return not cross_bifix_lengths(w, w2)


def find_cross_conflict(code: Iterable[Word]) -> tuple[Word, Word] | None:
    """First pair (in lexicographic order) of distinct members that are not cross-bifix-free."""
    members = sorted(code)
    for i, w in enumerate(members):
        for w2 in members[i + 1:]:
            if cross_bifix_lengths(w, w2):
                return w, w2
    return None


def _has_run(symbols: tuple[int, ...], symbol: int, k: int) -> bool:
    run = 0
    for s in symbols:
        run = run + 1 if s == symbol else 0
        if run >= k:
            return True
    return False


def build_s(n: int, q: int, k: int, budget: int | None = None) -> WordCode:
    """The cross-bifix-free set of words 1^k x ... y with x, y != 1.

    The middle section between position k+2 and n-1 must avoid k
    consecutive 1s.
    """
    _check_q(q)
    if not isinstance(n, int) or n < 3:
        raise InvalidInputError(f"n must be >= 3, got {n!r}")
    if not isinstance(k, int) or not 1 <= k <= n - 2:
        raise InvalidInputError(f"k must be in 1..{n - 2}, got {k!r}")
    not_one = [s for s in range(q) if s != 1]
    middle_len = n - k - 2
    check_budget(q**middle_len * len(not_one) ** 2, budget, f"S({n},{q},{k})")
    words = []
    for middle in itertools.product(range(q), repeat=middle_len):
        if _has_run(middle, 1, k):
            continue
        for head in not_one:
            for tail in not_one:
                words.append(Word((1,) * k + (head,) + middle + (tail,), q))
    return WordCode.of(words, n, q)


def select_k(n: int, q: int, budget: int | None = None) -> int:
    """The k giving the largest S set; ties go to the smallest k."""
    if not isinstance(n, int) or n < 3:
        raise InvalidInputError(f"n must be >= 3, got {n!r}")
    sizes = {k: len(build_s(n, q, k, budget)) for k in range(1, n - 1)}
    best = max(sizes.values())
    return min(k for k, size in sizes.items() if size == best)


def best_s(n: int, q: int, budget: int | None = None) -> WordCode:
    return build_s(n, q, select_k(n, q, budget), budget)


def is_nonexpandable_word_set(code: WordCode, budget: int | None = None) -> tuple[bool, Word | None]:
    """Return ``(True, None)`` if no bifix-free word can join ``code``.

    Otherwise return ``(False, witness)`` where ``witness`` is the
    lexicographically first bifix-free word that can be added while
    keeping the set cross-bifix-free.
    """
    for w in code:
        if not is_bifix_free(w):
            raise InvalidInputError(f"member {w} is not bifix-free")
    if find_cross_conflict(code) is not None:
        raise InvalidInputError("code is not cross-bifix-free")
    for candidate in enumerate_bf(code.n, code.q, budget):
        if candidate in code:
            continue
        if all(not cross_bifix_lengths(candidate, member) for member in code):
            return False, candidate
    return True, None
