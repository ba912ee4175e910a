"""Enumeration of rational link classes and the golden gap-table checks.

Classes at crossing number n are generated from all positive integer words
with entry sum n and both end entries >= 2 (plus the single-region word);
each such word is a reduced alternating diagram, so its entry sum is the
crossing number, and mapping through the canonical key removes the
reversal/mirror duplicates.  The embedded golden tables list every gapful
class with 9..16 crossings; matching happens at key level so the choice of
representative word in the source cannot cause false diffs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .bj import BJEngine, default_engine
from .conway import RationalWord, parse_rational
from .errors import BudgetExceeded
from .rational import CanonicalKey, canonical_word, word_key
from .search import diagram_unlink_number

MAX_CROSSINGS = 20


@dataclass(frozen=True)
class EnumRecord:
    key: CanonicalKey
    word: RationalWord
    crossings: int
    components: int
    u_m: int
    u_bj: int
    delta_bj: int


@dataclass(frozen=True)
class TableDiff:
    crossings: int
    expected: frozenset[CanonicalKey]
    computed: frozenset[CanonicalKey]
    missing: frozenset[CanonicalKey]
    extra: frozenset[CanonicalKey]
    expected_delta2: frozenset[CanonicalKey]
    computed_delta2: frozenset[CanonicalKey]
    expected_knots: int
    expected_links: int
    computed_knots: int
    computed_links: int

    @property
    def match(self) -> bool:
        return (
            not self.missing
            and not self.extra
            and self.expected_delta2 == self.computed_delta2
            and self.expected_knots == self.computed_knots
            and self.expected_links == self.computed_links
        )


def positive_words(n: int):
    """All words with entry sum n, every entry >= 1 and both ends >= 2."""
    if n < 1:
        return
    yield (n,)

    def middles(total):
        # compositions with parts >= 1, empty allowed
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in middles(total - first):
                yield (first,) + rest

    for first in range(2, n - 1):
        for last in range(2, n - first + 1):
            mid_total = n - first - last
            for mid in middles(mid_total):
                yield (first,) + mid + (last,)


@lru_cache(maxsize=8)
def classes_at(n: int) -> tuple[CanonicalKey, ...]:
    """Sorted canonical keys of all rational link classes with n crossings."""
    if not 3 <= n <= MAX_CROSSINGS:
        raise BudgetExceeded(f"crossing number {n} outside 3..{MAX_CROSSINGS}")
    return tuple(sorted({word_key(w) for w in positive_words(n)}))


def enumerate_rational(n: int, engine: BJEngine | None = None) -> list[EnumRecord]:
    """One record per class at crossing number n, with gap data."""
    engine = engine or default_engine()
    records = []
    for key in classes_at(n):
        word = canonical_word(key)
        u_bj = engine.u_bj(key)
        u_m, _ = diagram_unlink_number(word, engine.weight_ceiling, start_weight=u_bj)
        records.append(
            EnumRecord(
                key=key,
                word=word,
                crossings=n,
                components=key.component_count,
                u_m=u_m,
                u_bj=u_bj,
                delta_bj=u_m - u_bj,
            )
        )
    return records


def gap_ratio(n: int, engine: BJEngine | None = None) -> Fraction:
    """Fraction of classes at n crossings with a positive gap."""
    records = enumerate_rational(n, engine)
    gapful = sum(1 for r in records if r.delta_bj > 0)
    return Fraction(gapful, len(records))


@lru_cache(maxsize=1)
def golden_tables() -> dict[int, dict]:
    raw = json.loads(
        resources.files("linkgap").joinpath("data/gapful_golden.json").read_text()
    )
    return {int(n): tab for n, tab in raw["tables"].items()}


def verify_section3(
    n_values: tuple[int, ...] = (9, 10, 11, 12, 13, 14, 15, 16),
    engine: BJEngine | None = None,
) -> list[TableDiff]:
    """Diff the computed gapful sets against the embedded golden tables."""
    engine = engine or default_engine()
    diffs = []
    for n in n_values:
        tab = golden_tables()[n]
        knots = [word_key(parse_rational(w)) for w in tab["knots"]]
        links = [word_key(parse_rational(w)) for w in tab["links"]]
        expected = frozenset(knots) | frozenset(links)
        expected_d2 = frozenset(word_key(parse_rational(w)) for w in tab["delta2"])
        gapful = [r for r in enumerate_rational(n, engine) if r.delta_bj > 0]
        computed = frozenset(r.key for r in gapful)
        diffs.append(
            TableDiff(
                crossings=n,
                expected=expected,
                computed=computed,
                missing=expected - computed,
                extra=computed - expected,
                expected_delta2=expected_d2,
                computed_delta2=frozenset(r.key for r in gapful if r.delta_bj == 2),
                expected_knots=len(knots),
                expected_links=len(links),
                computed_knots=sum(1 for r in gapful if r.components == 1),
                computed_links=sum(1 for r in gapful if r.components == 2),
            )
        )
    return diffs
