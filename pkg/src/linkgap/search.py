"""Exact unlinking-number search on a fixed rational diagram.

All crossings inside one twist region are interchangeable, so a set of
simultaneous crossing changes is described by a change vector (k_1..k_q)
with 0 <= k_i <= |a_i|; region i becomes a_i - 2*k_i*sign(a_i).  The
diagram unlinking number is the least total weight whose changed word
evaluates to a trivial fraction.  The search deepens over exact weight and
is therefore exact; witnesses are the lexicographically least minimal
vectors.
"""

from __future__ import annotations

import logging

from .conway import RationalWord
from .errors import (
    CountExceedsRegion,
    InternalExhaustion,
    Misaligned,
    TrivialLink,
    WeightCeilingExceeded,
)
from .rational import CanonicalKey, canonical_word

log = logging.getLogger("linkgap")

ChangeVector = tuple[int, ...]

DEFAULT_WEIGHT_CEILING = 64


def weight(vector: ChangeVector) -> int:
    return sum(vector)


def apply_changes(word: RationalWord, vector: ChangeVector) -> RationalWord:
    """Change k_i crossings in region i: a_i -> a_i - 2*k_i*sign(a_i)."""
    if len(vector) != len(word):
        raise Misaligned(f"vector of length {len(vector)} against word of length {len(word)}")
    out = []
    for a, k in zip(word, vector):
        if k < 0 or k > abs(a):
            raise CountExceedsRegion(f"{k} changes in a region of {abs(a)} crossings")
        s = (a > 0) - (a < 0)
        out.append(a - 2 * k * s)
    return tuple(out)


def _search_exact_weight(word: RationalWord, caps: list[int], target: int) -> ChangeVector | None:
    # Depth-first over regions, keeping the running continued-fraction state;
    # k_i is tried in increasing order so the first hit is the lex-least
    # witness of this weight.
    n = len(word)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    signs = [(a > 0) - (a < 0) for a in word]
    chosen = [0] * n

    def rec(i: int, budget: int, p: int, q: int) -> bool:
        if i == n:
            return budget == 0 and -1 <= p <= 1
        lo = max(0, budget - suffix[i + 1])
        hi = min(caps[i], budget)
        for k in range(lo, hi + 1):
            e = word[i] - 2 * k * signs[i]
            chosen[i] = k
            if rec(i + 1, budget - k, e * p + q, p):
                return True
        return False

    # The fraction state starts as "empty word": p/q = 1/0, so that the
    # first region update e*p + q, p yields (e, 1).
    if rec(0, target, 1, 0):
        return tuple(chosen)
    return None


def diagram_unlink_number(
    word: RationalWord,
    weight_ceiling: int = DEFAULT_WEIGHT_CEILING,
    start_weight: int = 0,
) -> tuple[int, ChangeVector]:
    """Minimal simultaneous crossing changes trivialising the fixed diagram.

    start_weight may carry a known lower bound (e.g. the BJ number) to skip
    provably empty shallow iterations; correctness does not depend on it.
    """
    caps = [abs(a) for a in word]
    total = sum(caps)
    limit = min(total, weight_ceiling)
    for target in range(min(start_weight, limit), limit + 1):
        found = _search_exact_weight(word, caps, target)
        if found is not None:
            _monotone_sanity(word, target, total)
            return target, found
    if total > weight_ceiling:
        raise WeightCeilingExceeded(f"no unlinking vector of weight <= {weight_ceiling} for {word}")
    raise InternalExhaustion(f"no change vector trivialises {word}")


def _monotone_sanity(word: RationalWord, u_d: int, total: int) -> None:
    # For alternating (single-sign) words, changing half the crossings per
    # region always sufficed in tested ranges; a violation is worth a log line.
    alternating = all(a > 0 for a in word) or all(a < 0 for a in word)
    if alternating and 2 * u_d > total + 1:
        log.warning("u(D)=%d exceeds ceil(%d/2) on alternating word %s", u_d, total, word)


def u_min_diagram(key: CanonicalKey, weight_ceiling: int = DEFAULT_WEIGHT_CEILING) -> int:
    """u over the minimal diagram of the class (independent of which one)."""
    if key.p_abs <= 1:
        raise TrivialLink(f"{key} has no minimal diagram search")
    return diagram_unlink_number(canonical_word(key), weight_ceiling)[0]
