"""Exact continued fractions and Schubert canonical forms for rational links.

A Conway word a1 a2 ... an stands for the continued fraction

    an + 1/(a(n-1) + 1/(... + 1/a1))

evaluated here projectively (numerator/denominator pairs updated by 2x2
integer steps), so zero and negative entries never divide by zero.  An
unoriented rational link is the class of its fraction p/q under
q ~ q' (mod p) and q q' ~ 1 (mod p); folding in q -> p - q additionally
identifies mirror images, which is what CanonicalKey does.  Canonical
words are the all-positive continued-fraction expansions with both end
entries >= 2; their entry sum is the crossing number of the link.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .conway import RationalWord
from .errors import TrivialLink


@dataclass(frozen=True, order=True)
class LinkFraction:
    """A reduced projective fraction p/q; q = 0 (with p = 1) is allowed."""

    p: int
    q: int

    @staticmethod
    def make(p: int, q: int) -> "LinkFraction":
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a link fraction")
        g = gcd(abs(p), abs(q))
        p, q = p // g, q // g
        if q < 0:
            p, q = -p, -q
        elif q == 0:
            p = 1
        return LinkFraction(p, q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Schubert class of an unoriented rational link, mirrors identified.

    q_star is the least element of {q, q^-1, p-q, p-q^-1} mod p_abs; the
    trivial classes are (0, 0) for the 2-component unlink and (1, 0) for
    the unknot.
    """

    p_abs: int
    q_star: int

    @property
    def component_count(self) -> int:
        return 2 if self.p_abs % 2 == 0 else 1

    @property
    def is_trivial(self) -> bool:
        return self.p_abs <= 1

    def fraction(self) -> LinkFraction:
        if self.p_abs <= 1:
            return LinkFraction.make(self.p_abs, 1)
        return LinkFraction.make(self.p_abs, self.q_star)

    def __str__(self) -> str:
        return f"({self.p_abs},{self.q_star})"


def cf_eval(word: RationalWord) -> LinkFraction:
    """Evaluate a Conway word to its exact link fraction."""
    if not word:
        raise ValueError("empty word")
    p, q = word[0], 1
    for a in word[1:]:
        p, q = a * p + q, p
    return LinkFraction.make(p, q)


def component_count(f: LinkFraction) -> int:
    """2 for even |p| (including the unlink p = 0), else 1."""
    return 2 if f.p % 2 == 0 else 1


def is_trivial(f: LinkFraction) -> bool:
    """True for the unknot (|p| = 1) and the 2-component unlink (p = 0)."""
    return abs(f.p) <= 1


def canonical_key(f: LinkFraction) -> CanonicalKey:
    """Collapse a fraction to its unoriented, mirror-identified class."""
    p = abs(f.p)
    if p <= 1:
        return CanonicalKey(p, 0)
    q = (f.q if f.p > 0 else -f.q) % p
    qi = pow(q, -1, p)
    return CanonicalKey(p, min(q, qi, p - q, p - qi))


def equivalent(f1: LinkFraction, f2: LinkFraction, mirror_identified: bool = False) -> bool:
    """Schubert equivalence of two fractions.

    Strict mode (default) distinguishes mirror images; with
    mirror_identified=True the comparison happens at CanonicalKey level.
    """
    if mirror_identified:
        return canonical_key(f1) == canonical_key(f2)
    p = abs(f1.p)
    if abs(f2.p) != p:
        return False
    if p <= 1:
        return True
    q1 = (f1.q if f1.p > 0 else -f1.q) % p
    q2 = (f2.q if f2.p > 0 else -f2.q) % p
    return q1 == q2 or (q1 * q2) % p == 1


def _positive_word(p: int, q: int) -> RationalWord:
    # Plain continued-fraction quotients of p/q (outermost first); reversing
    # them gives the word in our innermost-first convention.  For q < p/2
    # every quotient is >= 1 and both end entries are >= 2.
    quotients = []
    while q:
        a, r = divmod(p, q)
        quotients.append(a)
        p, q = q, r
    return tuple(reversed(quotients))


@lru_cache(maxsize=None)
def canonical_word(key: CanonicalKey) -> RationalWord:
    """The canonical all-positive minimal word of a nontrivial class.

    Among the (at most two) positive words with both ends >= 2 whose
    fractions land in the key, returns the lexicographically smallest.
    """
    if key.p_abs <= 1:
        raise TrivialLink(f"no minimal positive word for {key}")
    p = key.p_abs
    q1 = key.q_star
    qi = pow(q1, -1, p)
    q2 = min(qi, p - qi)
    words = {_positive_word(p, q1), _positive_word(p, q2)}
    for w in words:
        if canonical_key(cf_eval(w)) != key:
            raise AssertionError(f"canonical word {w} does not map back to {key}")
    return min(words)


def crossing_number(key: CanonicalKey) -> int:
    """Minimal crossing number of the class: entry sum of its canonical word."""
    return sum(canonical_word(key))


def word_key(word: RationalWord) -> CanonicalKey:
    """Shorthand for canonical_key(cf_eval(word))."""
    return canonical_key(cf_eval(word))
