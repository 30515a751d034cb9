"""Line-oriented file formats for quartets, triplets and characters.

quartets:    ``a b | c d``
triplets:    ``a b | c``
characters:  ``a,b|c,e|d|f``

Blank lines are ignored and ``#`` starts a comment.
"""

from __future__ import annotations

from pathlib import Path
from typing import Callable, Iterable, TypeVar

from .trees import Character, PhyloError, Quartet, Triplet

T = TypeVar("T")


class FormatError(PhyloError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where = f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_lines(text: str, parse_one: Callable[[str], T], source: str | None) -> list[T]:
    out = []
    for lineno, line in _content_lines(text):
        try:
            out.append(parse_one(line))
        except PhyloError as exc:
            raise FormatError(str(exc), lineno, source) from None
    return out


def _sides(line: str, left: int, right: int) -> tuple[list[str], list[str]]:
    if line.count("|") != 1:
        raise PhyloError(f"expected exactly one '|' in {line!r}")
    lhs, rhs = (side.split() for side in line.split("|"))
    if len(lhs) != left or len(rhs) != right:
        raise PhyloError(f"expected {left} label(s) before '|' and {right} after, in {line!r}")
    return lhs, rhs


def parse_quartet(line: str) -> Quartet:
    (a, b), (c, d) = _sides(line, 2, 2)
    return Quartet.of(a, b, c, d)


def parse_triplet(line: str) -> Triplet:
    (a, b), (c,) = _sides(line, 2, 1)
    return Triplet.of(a, b, c)


def parse_character(line: str) -> Character:
    parts = []
    for part in line.split("|"):
        labels = [x.strip() for x in part.split(",")]
        if any(not x for x in labels):
            raise PhyloError(f"empty label or part in {line!r}")
        parts.append(labels)
    return Character(parts)


def parse_quartets(text: str, source: str | None = None) -> list[Quartet]:
    return _parse_lines(text, parse_quartet, source)


def parse_triplets(text: str, source: str | None = None) -> list[Triplet]:
    return _parse_lines(text, parse_triplet, source)


def parse_characters(text: str, source: str | None = None) -> list[Character]:
    return _parse_lines(text, parse_character, source)


def dumps(items: Iterable) -> str:
    """One item per line using each type's ``str`` form."""
    return "".join(f"{item}\n" for item in items)


def read(path: str | Path, kind: str) -> list:
    parsers = {"quartets": parse_quartets, "triplets": parse_triplets, "characters": parse_characters}
    if kind not in parsers:
        raise PhyloError(f"unknown file kind {kind!r}")
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    items = parsers[kind](text, str(path))
    if not items:
        raise FormatError(f"no {kind} found", source=str(path))
    return items
