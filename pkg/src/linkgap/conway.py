"""Parsing and printing of Conway symbols for rational and 3-pretzel words.

Only two shapes of input are accepted: whitespace-separated integer words
(rational tangles, e.g. "5 1 4") and comma-separated integer triples
(pretzel columns, e.g. "2,-3,2").  Anything from the wider Conway grammar
(basic polyhedra, ramified tangles, "6*2.3 1:3 0" and friends) is rejected
outright rather than half-parsed.
"""

from __future__ import annotations

import re

from .errors import EmptyInput, MalformedToken, UnsupportedNotation, WrongArity

RationalWord = tuple[int, ...]
PretzelWord = tuple[int, int, int]

_INT = re.compile(r"[+-]?[0-9]+\Z")
_POLYHEDRAL = set("*().:+[]")


def _to_int(token: str, position: int) -> int:
    if not _INT.match(token):
        raise MalformedToken(token, position)
    return int(token)


def parse_rational(text: str) -> RationalWord:
    """Parse a whitespace-separated Conway word such as "5 1 4"."""
    stripped = text.strip()
    if not stripped:
        raise EmptyInput("empty Conway word")
    found = sorted(set(stripped) & (_POLYHEDRAL | {","}))
    if found:
        raise UnsupportedNotation(
            "only integer rational words are supported; "
            f"found Conway punctuation {''.join(found)!r} in {text!r}"
        )
    return tuple(_to_int(tok, i + 1) for i, tok in enumerate(stripped.split()))


def parse_pretzel(text: str) -> PretzelWord:
    """Parse a comma-separated pretzel triple such as "2,-3,2"."""
    stripped = text.strip()
    if not stripped:
        raise EmptyInput("empty pretzel word")
    found = sorted(set(stripped) & _POLYHEDRAL)
    if found:
        raise UnsupportedNotation(
            "only integer pretzel triples are supported; "
            f"found Conway punctuation {''.join(found)!r} in {text!r}"
        )
    parts = stripped.split(",")
    if len(parts) != 3:
        raise WrongArity(f"expected 3 comma-separated columns, got {len(parts)}")
    a, b, c = (_to_int(p.strip(), i + 1) for i, p in enumerate(parts))
    return (a, b, c)


def format_rational(word: RationalWord) -> str:
    """Inverse of parse_rational: "5 1 4" style."""
    return " ".join(str(a) for a in word)


def format_pretzel(word: PretzelWord) -> str:
    """Inverse of parse_pretzel: "2,-3,2" style."""
    return ",".join(str(a) for a in word)
