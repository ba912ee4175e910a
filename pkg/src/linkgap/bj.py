"""BJ-unlinking numbers by memoised recursion over canonical link classes.

One crossing change inside twist region i of the canonical alternating word
turns a_i into a_i - 2; re-canonicalising the changed word gives the child
class, and the BJ number is 1 + min over children, with 0 on trivial
classes.  Using a single canonical word per class is justified because all
minimal diagrams of a prime alternating link give the same value.

Termination normally rests on a strict descent of crossing numbers from
parent to child.  The engine checks this on every expansion; if it ever
failed, the computation falls back to a breadth-first layered search over
the child graph with identical semantics.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from .conway import RationalWord
from .errors import DescentViolation, InternalExhaustion, TrivialLink
from .rational import CanonicalKey, canonical_key, canonical_word, cf_eval, crossing_number
from .search import DEFAULT_WEIGHT_CEILING, ChangeVector, diagram_unlink_number

log = logging.getLogger("linkgap")


@dataclass(frozen=True)
class GapReport:
    """Everything the gap of one link class rests on, witnesses included."""

    key: CanonicalKey
    word: RationalWord
    u_m: int
    u_bj: int
    delta_bj: int
    bj_witness: tuple[RationalWord, ...]
    diagram_witness: ChangeVector


def trivial_word(key: CanonicalKey) -> RationalWord:
    """A one-entry word evaluating into a trivial class, for witness chains."""
    if key.p_abs == 1:
        return (1,)
    if key.p_abs == 0:
        return (0,)
    raise TrivialLink(f"{key} is not trivial")


def bj_children(key: CanonicalKey) -> tuple[CanonicalKey, ...]:
    """Distinct classes reachable by one crossing change on the minimal word."""
    if key.p_abs <= 1:
        raise TrivialLink(f"{key} has no children")
    word = canonical_word(key)
    kids = set()
    for i in range(len(word)):
        child = list(word)
        child[i] -= 2
        kids.add(canonical_key(cf_eval(tuple(child))))
    return tuple(sorted(kids))


class BJEngine:
    """Shared memo over CanonicalKeys; single-threaded use is deterministic."""

    def __init__(self, weight_ceiling: int = DEFAULT_WEIGHT_CEILING):
        self.weight_ceiling = weight_ceiling
        self._memo: dict[CanonicalKey, int] = {}

    # -- value ---------------------------------------------------------

    def u_bj(self, key: CanonicalKey) -> int:
        if key.p_abs <= 1:
            return 0
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        try:
            value = self._by_descent(key)
        except DescentViolation as exc:
            log.warning("descent violated (%s); falling back to layered search", exc)
            value = self._by_layers(key)
        self._memo[key] = value
        return value

    def _by_descent(self, key: CanonicalKey) -> int:
        n = crossing_number(key)
        best = None
        for child in bj_children(key):
            if not child.is_trivial and crossing_number(child) >= n:
                raise DescentViolation(f"{child} does not descend from {key}")
            v = self.u_bj(child)
            if best is None or v < best:
                best = v
        if best is None:
            raise InternalExhaustion(f"{key} has no children")
        return 1 + best

    def _by_layers(self, root: CanonicalKey) -> int:
        # Unit-cost breadth-first search; child crossing numbers never exceed
        # the parent's, so the reachable set is finite.
        dist = {root: 0}
        queue = deque([root])
        while queue:
            key = queue.popleft()
            if key.is_trivial:
                return dist[key]
            for child in bj_children(key):
                if child not in dist:
                    dist[child] = dist[key] + 1
                    queue.append(child)
        raise InternalExhaustion(f"no trivial class reachable from {root}")

    # -- witnesses -----------------------------------------------------

    def witness(self, key: CanonicalKey) -> tuple[RationalWord, ...]:
        """One minimal word per recursion step, ending on a trivial word.

        Deterministic: each step follows the lexicographically least child
        (by key) among those realising the minimum.
        """
        chain = []
        current = key
        while not current.is_trivial:
            chain.append(canonical_word(current))
            target = self.u_bj(current) - 1
            current = next(c for c in bj_children(current) if self.u_bj(c) == target)
        chain.append(trivial_word(current))
        return tuple(chain)

    def gap(self, key: CanonicalKey) -> GapReport:
        """Assemble u_M, u_BJ, their difference and both witnesses."""
        if key.p_abs <= 1:
            raise TrivialLink(f"gap undefined on {key}")
        word = canonical_word(key)
        value = self.u_bj(key)
        u_m, diagram_witness = diagram_unlink_number(
            word, self.weight_ceiling, start_weight=value
        )
        report = GapReport(
            key=key,
            word=word,
            u_m=u_m,
            u_bj=value,
            delta_bj=u_m - value,
            bj_witness=self.witness(key),
            diagram_witness=diagram_witness,
        )
        if report.delta_bj < 0:
            raise InternalExhaustion(f"u_M < u_BJ on {key}: {report}")
        return report

    # -- persistence -----------------------------------------------------

    def save_cache(self, path) -> int:
        """Write `p_abs q_star u_bj` lines; returns the number of records."""
        lines = [
            f"{k.p_abs} {k.q_star} {v}\n"
            for k, v in sorted(self._memo.items())
        ]
        with open(path, "w", encoding="ascii") as fh:
            fh.writelines(lines)
        return len(lines)

    def load_cache(self, path) -> int:
        """Load records written by save_cache; malformed lines are skipped."""
        loaded = 0
        with open(path, "r", encoding="ascii") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                key = _valid_cache_record(line)
                if key is None:
                    log.warning("%s:%d: discarding malformed cache line %r", path, lineno, line)
                    continue
                self._memo[key[0]] = key[1]
                loaded += 1
        return loaded

    def cache_size(self) -> int:
        return len(self._memo)


def _valid_cache_record(line: str) -> tuple[CanonicalKey, int] | None:
    # A record is `p q u` with p >= 2, q the orbit-minimal denominator
    # representative coprime to p, and u >= 1 (trivial classes are not cached).
    from math import gcd

    parts = line.split()
    if len(parts) != 3 or not all(p.isdigit() for p in parts):
        return None
    p, q, value = (int(x) for x in parts)
    if p < 2 or not 1 <= q < p or gcd(p, q) != 1 or value < 1:
        return None
    key = CanonicalKey(p, q)
    if canonical_key(key.fraction()) != key:
        return None
    return key, value


_default_engine = BJEngine()


def default_engine() -> BJEngine:
    """The process-wide engine used by the convenience wrappers and CLI."""
    return _default_engine


def u_bj(key: CanonicalKey) -> int:
    return _default_engine.u_bj(key)


def gap(key: CanonicalKey) -> GapReport:
    return _default_engine.gap(key)
