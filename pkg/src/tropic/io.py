"""Problem files and structured-text reports.

Problem file grammar (``#`` starts a comment; items are separated by ``;`` or
newlines outside brackets; inside a matrix, ``;`` or a newline ends a row)::

    semifield: max-plus-rational
    A: [0 2; 1 0]
    d: [3 2]

A bare kind name may stand in for the ``semifield:`` item, so the one-liner
``maxplus-rational; A: [0 2; 1 0]; d: [3 2]`` is valid too.  Scalar tokens are
decimals, rationals ``p/q`` and the zero literal of the kind (``-inf`` for
max-plus, ``+inf`` for min-plus, ``0`` for max-times).

Reports are ordered ``key: value`` lines.  Vectors print as ``[t1 t2 ...]``,
index sets as ``{1,3}`` (1-based), and a solution box as one bracket per
component: ``=v`` fixed, ``<=v`` bounded above, ``*`` unconstrained.
"""

from __future__ import annotations

import json
import os
import re
from pathlib import Path

from .errors import DimensionMismatch, ParseError
from .linalg import Matrix, Vector, matrix
from .semifield import MAX_PLUS_Q, Semifield, get_semifield
from .solver import UNBOUNDED, BoxSolution

_ITEM = re.compile(r"\s*(semifield|A|d)\s*:\s*(.*)\Z", re.S)


def _read(source) -> str:
    if hasattr(source, "read"):
        return source.read()
    if isinstance(source, (str, os.PathLike)) and Path(source).exists():
        return Path(source).read_text()
    raise FileNotFoundError(f"no such problem file: {source}")


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def _split_items(text: str):
    """Split on ``;``/newline outside brackets, tracking each item's start line."""
    items, buf, depth, line, start, opened = [], [], 0, 1, 1, 1
    for ch in text:
        if ch == "[":
            if depth == 0:
                opened = line
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ']'", line)
        if depth == 0 and ch in ";\n":
            if "".join(buf).strip():
                items.append((start, "".join(buf)))
            buf = []
            if ch == "\n":
                line += 1
            start = line
            continue
        if ch == "\n":
            line += 1
        buf.append(ch)
    if depth:
        raise ParseError("unclosed '['", opened)
    if "".join(buf).strip():
        items.append((start, "".join(buf)))
    return items


def _bracket_body(value: str, line: int) -> str:
    value = value.strip()
    if not (value.startswith("[") and value.endswith("]")):
        raise ParseError(f"expected a bracketed list, got {value!r}", line)
    return value[1:-1]


def _tokens(sf: Semifield, text: str, line: int):
    out = []
    for tok in text.split():
        try:
            out.append(sf.scalar(tok))
        except (ValueError, TypeError) as exc:
            raise ParseError(str(exc), line) from None
    return out


def parse_matrix_text(sf: Semifield, body: str, line: int = 1) -> Matrix:
    rows = [r for r in re.split(r"[;\n]", body) if r.strip()]
    parsed = [_tokens(sf, r, line) for r in rows]
    if not parsed:
        raise ParseError("empty matrix", line)
    if any(len(r) != len(parsed[0]) for r in parsed):
        raise ParseError("ragged matrix rows", line)
    return matrix(sf, parsed)


def parse_vector_text(sf: Semifield, body: str, line: int = 1) -> Vector:
    vals = _tokens(sf, body.replace(";", " "), line)
    if not vals:
        raise ParseError("empty vector", line)
    return Vector(sf, tuple(vals))


def parse_problem_text(text: str, semifield: Semifield | str | None = None):
    """Parse problem-file text into ``(A, d, sf)``; either of ``A``/``d`` may be None.

    ``semifield`` overrides the kind named in the file.
    """
    kind_name = None
    raw = {}
    for line, item in _split_items(_strip_comments(text)):
        m = _ITEM.match(item)
        if m is None:
            name = item.strip()
            if kind_name is None and "A" not in raw and " " not in name:
                kind_name = name
                continue
            raise ParseError(f"unexpected item {name!r}", line)
        key, value = m.group(1), m.group(2)
        if key in raw or (key == "semifield" and kind_name is not None):
            raise ParseError(f"duplicate {key!r} item", line)
        if key == "semifield":
            kind_name = value.strip()
        else:
            raw[key] = (line, value)
    if isinstance(semifield, Semifield):
        sf = semifield
    elif semifield is not None:
        sf = get_semifield(semifield)
    elif kind_name is not None:
        sf = get_semifield(kind_name)
    else:
        sf = MAX_PLUS_Q
    A = d = None
    if "A" in raw:
        line, value = raw["A"]
        A = parse_matrix_text(sf, _bracket_body(value, line), line)
    if "d" in raw:
        line, value = raw["d"]
        d = parse_vector_text(sf, _bracket_body(value, line), line)
    if A is not None and d is not None and len(A.rows) != len(d):
        raise DimensionMismatch(f"A has {len(A.rows)} rows but d has {len(d)} components")
    return A, d, sf


def parse_problem(source, semifield=None):
    """Read a problem file (path or stream) into ``(A, d, sf)``.

    >>> import io
    >>> A, d, sf = parse_problem(io.StringIO("maxplus-rational; A: [0 2; 1 0]; d: [3 2]"))
    >>> str(A), str(d), str(sf)
    ('[0 2; 1 0]', '[3 2]', 'max-plus-rational')
    """
    A, d, sf = parse_problem_text(_read(source), semifield)
    if A is None or d is None:
        raise ParseError("a problem file needs both 'A:' and 'd:' items")
    return A, d, sf


def read_matrix(source, sf: Semifield) -> Matrix:
    """Matrix file: either a problem file with an ``A:`` item or bare rows of tokens."""
    text = _read(source)
    if ":" in _strip_comments(text):
        A, _, _ = parse_problem_text(text, sf)
        return A
    return parse_matrix_text(sf, _strip_comments(text))


def read_vector(source, sf: Semifield) -> Vector:
    """Vector file: either a problem file with a ``d:`` item or bare tokens."""
    text = _read(source)
    if ":" in _strip_comments(text):
        _, d, _ = parse_problem_text(text, sf)
        return d
    body = _strip_comments(text).replace("[", " ").replace("]", " ")
    return parse_vector_text(sf, body)


def format_problem(A: Matrix, d: Vector) -> str:
    return f"semifield: {A.sf}\nA: {A}\nd: {d}\n"


# -- reports ------------------------------------------------------------------

def format_index_set(s) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(s)) + "}"


def parse_index_set(text: str) -> frozenset:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"expected an index set, got {text!r}")
    body = text[1:-1].strip()
    return frozenset(int(t) - 1 for t in body.split(",")) if body else frozenset()


class Report:
    """An ordered list of ``(key, value)`` pairs rendered as text or JSON.

    Values are strings, or lists of strings for repeated sections (boxes,
    trace steps).  Keys may repeat only through list values.
    """

    def __init__(self, items=None):
        self.items = list(items or [])

    def add(self, key, value):
        self.items.append((key, value))
        return self

    def get(self, key, default=None):
        for k, v in self.items:
            if k == key:
                return v
        return default

    def __getitem__(self, key):
        for k, v in self.items:
            if k == key:
                return v
        raise KeyError(key)

    def __eq__(self, other):
        return isinstance(other, Report) and self.items == other.items

    def __repr__(self):
        return f"Report({self.items!r})"

    def to_text(self) -> str:
        lines = []
        for key, value in self.items:
            if isinstance(value, list):
                lines.append(f"{key}:")
                lines.extend(f"  - {v}" for v in value)
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Report:
        items = []
        for n, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            if line.startswith("  - "):
                if not items or not isinstance(items[-1][1], list):
                    raise ParseError("list entry outside a list section", n)
                items[-1][1].append(line[4:])
                continue
            key, sep, value = line.partition(":")
            if not sep:
                raise ParseError(f"expected 'key: value', got {line!r}", n)
            if value == "":
                items.append((key, []))
            else:
                items.append((key, value[1:] if value.startswith(" ") else value))
        return cls(items)

    def to_dict(self) -> dict:
        return {k: v for k, v in self.items}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def format_vector(x: Vector | None) -> str:
    return "none" if x is None else str(x)


def format_box(box, sf: Semifield) -> str:
    parts = []
    for i in range(box.size):
        if i in box.fixed:
            parts.append("=" + sf.format(box.fixed[i]))
        else:
            b = box.upper_bounds[i]
            parts.append("*" if b is UNBOUNDED else "<=" + sf.format(b))
    return format_index_set(box.index_set) + " [" + " ".join(parts) + "]"


def parse_box(text: str, sf: Semifield):
    head, _, body = text.partition(" ")
    index_set = parse_index_set(head)
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError(f"expected a bracketed box, got {body!r}")
    fixed, bounds = {}, {}
    for i, tok in enumerate(body[1:-1].split()):
        if tok == "*":
            bounds[i] = UNBOUNDED
        elif tok.startswith("<="):
            bounds[i] = sf.parse(tok[2:])
        elif tok.startswith("="):
            fixed[i] = sf.parse(tok[1:])
        else:
            raise ParseError(f"bad box component {tok!r}")
    return BoxSolution(index_set, fixed, bounds)


__all__ = [
    "parse_problem", "parse_problem_text", "read_matrix", "read_vector", "format_problem",
    "Report", "format_box", "parse_box", "format_index_set", "parse_index_set",
    "format_vector",
]
