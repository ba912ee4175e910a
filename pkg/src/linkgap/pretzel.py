"""Restricted 3-column pretzel engine.

A column of 0 or +-1 half-twists lets the pretzel collapse into rational
territory: P(a,b,0) is the connected sum of the (2,a) and (2,b) torus
links, and P(e,b,c) with e = +-1 is the 2-bridge link with fraction
(e*b*c + b + c) / (e*b + 1).  Both rewrites are frozen here as data and
re-validated by the test suite against small cases with known answers.

For all-odd positive columns the BJ number is computed by the genuine
recursion (children are the three column decrements, with -1 columns
routed into the rational engine).  States whose columns all have absolute
size >= 2 sit outside the rational world; they are certified nontrivial by
the determinant |ab+bc+ca| != 1 and reported Indeterminate when that test
is silent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bj import BJEngine, default_engine
from .conway import PretzelWord
from .errors import (
    Indeterminate,
    InternalExhaustion,
    IrreducibleHere,
    NotOddPositive,
    UnsupportedNotation,
    WeightCeilingExceeded,
)
from .rational import LinkFraction, canonical_key
from .search import DEFAULT_WEIGHT_CEILING, ChangeVector


def pretzel_det(cols: PretzelWord) -> int:
    """|ab + bc + ca|, the determinant of the 3-pretzel."""
    a, b, c = cols
    return abs(a * b + b * c + c * a)


@dataclass(frozen=True)
class PretzelState:
    """Either a pretzel still, or a tuple of rational connected-sum factors."""

    pretzel: PretzelWord | None = None
    factors: tuple[LinkFraction, ...] | None = None

    @property
    def is_rational(self) -> bool:
        return self.factors is not None

    @property
    def is_trivial(self) -> bool:
        if self.factors is None:
            return False
        return all(abs(f.p) <= 1 for f in self.factors)


def reduce_to_fractions(cols: PretzelWord) -> tuple[LinkFraction, ...]:
    """Rational connected-sum factors of a pretzel with a 0 or +-1 column.

    Raises IrreducibleHere when every column has absolute size >= 2.
    """
    cols = tuple(sorted(cols, key=abs))
    if cols[0] == 0:
        _, b, c = cols
        return (LinkFraction.make(b, 1), LinkFraction.make(c, 1))
    if abs(cols[0]) == 1:
        e, b, c = cols
        return (LinkFraction.make(e * b * c + b + c, e * b + 1),)
    raise IrreducibleHere(f"all columns of {cols} have >= 2 crossings")


def pretzel_reduce(cols: PretzelWord) -> PretzelState:
    """Rewrite through a 0 or +-1 column when possible, else pass through."""
    try:
        return PretzelState(factors=reduce_to_fractions(cols))
    except IrreducibleHere:
        return PretzelState(pretzel=cols)


def _state_is_trivial(cols: PretzelWord) -> bool:
    """Triviality of a pretzel state reached by the diagram search."""
    try:
        return all(abs(f.p) <= 1 for f in reduce_to_fractions(cols))
    except IrreducibleHere:
        if pretzel_det(cols) == 1:
            raise Indeterminate(
                f"determinant 1 with all columns >= 2 on {cols}; cannot decide"
            )
        return False


def u_bj_odd_pretzel(cols: PretzelWord, engine: BJEngine | None = None) -> int:
    """BJ number of an all-odd positive pretzel by the column recursion."""
    if any(c <= 0 or c % 2 == 0 for c in cols):
        raise NotOddPositive(f"{cols} is not an all-odd positive pretzel")
    engine = engine or default_engine()
    memo: dict[PretzelWord, int] = {}

    def rec(state: PretzelWord) -> int:
        state = tuple(sorted(state))
        if state in memo:
            return memo[state]
        best = None
        for i in range(3):
            child = list(state)
            child[i] -= 2
            child = tuple(child)
            if child[i] == -1:
                (frac,) = reduce_to_fractions(child)
                v = engine.u_bj(canonical_key(frac))
            else:
                v = rec(child)
            if best is None or v < best:
                best = v
        memo[state] = 1 + best
        return memo[state]

    return rec(cols)


def pretzel_diagram_unlink(
    cols: PretzelWord, weight_ceiling: int = DEFAULT_WEIGHT_CEILING
) -> tuple[int, ChangeVector]:
    """Minimal simultaneous changes trivialising the standard pretzel diagram.

    Searches column change vectors (k1,k2,k3) with k_i <= |a_i| in weight
    order; raises Indeterminate if a weight level contains an undecidable
    state and no witness.
    """
    caps = [abs(a) for a in cols]
    signs = [(a > 0) - (a < 0) for a in cols]
    total = sum(caps)
    limit = min(total, weight_ceiling)
    for target in range(limit + 1):
        undecided = None
        for k1 in range(min(caps[0], target) + 1):
            for k2 in range(min(caps[1], target - k1) + 1):
                k3 = target - k1 - k2
                if k3 > caps[2]:
                    continue
                state = (
                    cols[0] - 2 * k1 * signs[0],
                    cols[1] - 2 * k2 * signs[1],
                    cols[2] - 2 * k3 * signs[2],
                )
                try:
                    if _state_is_trivial(state):
                        return target, (k1, k2, k3)
                except Indeterminate as exc:
                    undecided = undecided or exc
        if undecided is not None:
            raise undecided
    if total > weight_ceiling:
        raise WeightCeilingExceeded(f"no unlinking vector of weight <= {weight_ceiling}")
    raise InternalExhaustion(f"no column vector trivialises {cols}")


@dataclass(frozen=True)
class PretzelPrediction:
    u_bj: int
    u_m: int
    delta: int
    pattern: str


def pretzel_prediction(cols: PretzelWord) -> PretzelPrediction:
    """Closed-form (u_BJ, u_M, delta) for positive 3-pretzels by parity case.

    These are recorded prediction oracles; the all-odd case is known to
    disagree with the recursion (see the registry's suspect marking).
    """
    if any(c <= 0 for c in cols):
        raise UnsupportedNotation(f"predictions cover positive columns only, got {cols}")
    odds = sorted((c for c in cols if c % 2 == 1), reverse=True)
    evens = sorted((c for c in cols if c % 2 == 0), reverse=True)
    if len(odds) == 3:
        k, l, m = ((c - 1) // 2 for c in odds)
        if m < 1:
            raise UnsupportedNotation("all-odd case needs every column >= 3")
        return PretzelPrediction(l + m, l + m, 0, "odd-odd-odd")
    if len(evens) == 3:
        k, l, m = (c // 2 for c in evens)
        return PretzelPrediction(k + l + m, k + l + m, 0, "even-even-even")
    if len(odds) == 2:
        # P(2k+1, 2l, 2m+1) with k >= m >= 1
        k, m = ((c - 1) // 2 for c in odds)
        l = evens[0] // 2
        if m < 1:
            raise UnsupportedNotation("odd-even-odd case needs odd columns >= 3")
        if l == 1:
            return PretzelPrediction(m + k, m + k, 0, "odd-even-odd")
        if k >= l:
            return PretzelPrediction(m + k, m + k + 1, 1, "odd-even-odd")
        return PretzelPrediction(m + k + 1, m + k + 1, 0, "odd-even-odd")
    # P(2k, 2l+1, 2m) with k >= m >= 1
    k, m = (c // 2 for c in evens)
    l = (odds[0] - 1) // 2
    return PretzelPrediction(k + l, k + l + m - 1, m - 1, "even-odd-even")
