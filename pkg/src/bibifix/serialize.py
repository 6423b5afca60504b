"""Text and JSON-lines encodings for words, matrices and listings.

Words are digit strings. A matrix is compact ``"10/00"`` text or, inside
JSON, an array of row strings. A JSONL stream starts with one header
object (``kind``, ``n``, ``q``, ``count`` and optional extras) followed by
one item per line, either bare or as ``{"seq": i, "item": ...}``.
"""

from __future__ import annotations

import json
from typing import IO, Any, Iterable, Iterator

from .codes import RectMatrix
from .errors import InvalidInputError
from .matrices import SquareMatrix
from .words import Word


def to_json_value(item) -> Any:
    if isinstance(item, Word):
        return str(item)
    if isinstance(item, (SquareMatrix, RectMatrix)):
        return item.row_strings()
    raise TypeError(f"cannot serialize {type(item).__name__}")


def to_text(item) -> str:
    return str(item)


def from_json_value(value: Any, q: int):
    if isinstance(value, str):
        return Word.parse(value, q)
    if isinstance(value, list) and value and all(isinstance(r, str) for r in value):
        if len(value) == len(value[0]):
            return SquareMatrix.from_rows(value, q)
        text = "/".join(value)
        return RectMatrix.parse(text, q)
    raise InvalidInputError(f"unrecognized item {value!r}")


def _dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def header(kind: str, n: int, q: int, count: int, **extra: Any) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": kind, "n": n, "q": q, "count": count}
    out.update(extra)
    return out


def write_jsonl(fp: IO[str], head: dict[str, Any], items: Iterable, *, seq: bool = False) -> int:
    fp.write(_dumps(head) + "\n")
    written = 0
    for i, item in enumerate(items):
        value = to_json_value(item)
        fp.write(_dumps({"seq": i, "item": value} if seq else value) + "\n")
        written += 1
    return written


def write_text(fp: IO[str], items: Iterable) -> int:
    written = 0
    for item in items:
        fp.write(to_text(item) + "\n")
        written += 1
    return written


def read_jsonl(lines: Iterable[str]) -> tuple[dict[str, Any], list]:
    """Parse a stream written by ``write_jsonl`` back into objects."""
    it: Iterator[str] = (ln for ln in lines if ln.strip())
    try:
        head = json.loads(next(it))
    except StopIteration:
        raise InvalidInputError("empty stream") from None
    if not isinstance(head, dict) or "q" not in head:
        raise InvalidInputError("first line must be a header object with q")
    q = head["q"]
    items = []
    for ln in it:
        value = json.loads(ln)
        if isinstance(value, dict) and "item" in value:
            if value.get("seq") != len(items):
                raise InvalidInputError(f"sequence number {value.get('seq')} out of order")
            value = value["item"]
        items.append(from_json_value(value, q))
    if "count" in head and head["count"] != len(items):
        raise InvalidInputError(f"header count {head['count']} but {len(items)} items")
    return head, items
