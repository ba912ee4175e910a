import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linkgap.errors import TrivialLink
from linkgap.rational import (
    CanonicalKey,
    LinkFraction,
    canonical_key,
    canonical_word,
    cf_eval,
    component_count,
    crossing_number,
    equivalent,
    is_trivial,
    word_key,
)


def cf_oracle_pair(word):
    """Independent evaluation with Fraction plus an explicit infinity (None)."""
    v = None
    first = True
    for a in word:
        if first:
            v = Fraction(a)
            first = False
        elif v is None:  # a + 1/infinity
            v = Fraction(a)
        elif v == 0:  # a + 1/0
            v = None
        else:
            v = a + 1 / v
    if v is None:
        return (1, 0)
    return (v.numerator, v.denominator)


def test_cf_eval_examples():
    assert cf_eval((5, 1, 4)) == LinkFraction.make(29, 6)
    assert cf_eval((3, 1, 1)) == LinkFraction.make(7, 4)
    assert cf_eval((0, 2, 1, 2)) == LinkFraction.make(3, 1)
    for a in range(-6, 7):
        assert cf_eval((a,)) == LinkFraction.make(a, 1)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=7))
def test_cf_eval_matches_fraction_oracle(entries):
    word = tuple(entries)
    f = cf_eval(word)
    p, q = cf_oracle_pair(word)
    if q == 0:
        assert f.q == 0 and abs(f.p) == 1
    else:
        assert Fraction(f.p, f.q) == Fraction(p, q)


def test_canonical_key_examples():
    assert canonical_key(LinkFraction.make(7, 2)) == canonical_key(LinkFraction.make(7, 4))
    assert canonical_key(LinkFraction.make(7, 2)) == CanonicalKey(7, 2)
    assert canonical_key(LinkFraction.make(1, 0)) == CanonicalKey(1, 0)
    assert canonical_key(LinkFraction.make(29, 6)) == canonical_key(LinkFraction.make(29, 5))
    assert CanonicalKey(1, 0).component_count == 1


def test_equivalent_examples():
    f = LinkFraction.make
    assert equivalent(f(7, 2), f(7, 4))
    assert not equivalent(f(7, 2), f(7, 3))
    assert equivalent(f(7, 2), f(7, 3), mirror_identified=True)
    assert equivalent(f(11, 3), f(11, 3 + 11))
    assert equivalent(f(11, 3), f(11, 3 - 22))
    assert equivalent(f(-7, 2), f(7, -2))
    assert equivalent(f(1, 5), f(1, 0))
    assert equivalent(f(0, 1), f(0, 1))


def test_component_count():
    assert component_count(cf_eval((4, 1, 4))) == 2
    assert component_count(cf_eval((5, 1, 4))) == 1
    assert component_count(LinkFraction.make(0, 1)) == 2


def test_is_trivial():
    assert is_trivial(LinkFraction.make(1, 0))
    assert is_trivial(LinkFraction.make(0, 1))
    assert is_trivial(LinkFraction.make(-1, 4))
    assert not is_trivial(cf_eval((5, 1, 4)))


def test_canonical_word_examples():
    assert canonical_word(word_key((5, 1, 4))) == (4, 1, 5)
    assert canonical_word(canonical_key(LinkFraction.make(5, 2))) == (2, 2)
    assert canonical_word(canonical_key(LinkFraction.make(3, 1))) == (3,)
    assert canonical_word(canonical_key(LinkFraction.make(2, 1))) == (2,)
    with pytest.raises(TrivialLink):
        canonical_word(CanonicalKey(1, 0))
    with pytest.raises(TrivialLink):
        canonical_word(CanonicalKey(0, 0))


def test_crossing_number_examples():
    assert crossing_number(word_key((5, 1, 4))) == 10
    assert crossing_number(word_key((4, 1, 4))) == 9
    assert crossing_number(CanonicalKey(3, 1)) == 3


def _random_fractions(count, max_p, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = rng.randint(2, max_p)
        q = rng.randint(1, p - 1)
        from math import gcd

        if gcd(p, q) == 1:
            out.append(LinkFraction.make(p, q))
    return out


def test_canonical_key_idempotent_bulk():
    for f in _random_fractions(2000, 5000, seed=7):
        key = canonical_key(f)
        assert canonical_key(key.fraction()) == key


def test_mirror_in_key():
    for f in _random_fractions(500, 2000, seed=8):
        mirror = LinkFraction.make(f.p, f.p - f.q)
        assert canonical_key(f) == canonical_key(mirror)
        inverse = LinkFraction.make(f.p, pow(f.q, -1, f.p))
        assert canonical_key(f) == canonical_key(inverse)


@given(
    st.lists(st.integers(1, 6), min_size=1, max_size=6).filter(
        lambda w: len(w) == 1 or (w[0] >= 2 and w[-1] >= 2)
    )
)
def test_reversal_same_key(entries):
    word = tuple(entries)
    assert word_key(word) == word_key(tuple(reversed(word)))


def test_canonical_roundtrip_through_word():
    for f in _random_fractions(800, 3000, seed=9):
        key = canonical_key(f)
        assert word_key(canonical_word(key)) == key


def brute_minimal_sum(key, limit):
    """Smallest entry sum over positive words with both ends >= 2 in the key."""
    best = None

    def rec(prefix, remaining):
        nonlocal best
        if remaining == 0:
            return
        # close the word with a final entry >= 2 (or the single-entry word)
        for last in range(2 if prefix else 2, remaining + 1):
            word = prefix + (last,) if prefix else (last,)
            if len(word) == 1 or word[0] >= 2:
                if word_key(word) == key:
                    total = sum(word)
                    if best is None or total < best:
                        best = total
        first = 2 if not prefix else 1
        for e in range(first, remaining):
            rec(prefix + (e,), remaining - e)

    rec((), limit)
    return best


def test_entry_sum_minimality_small():
    rng = random.Random(11)
    seen = 0
    while seen < 25:
        p = rng.randint(2, 200)
        q = rng.randint(1, p - 1)
        from math import gcd

        if gcd(p, q) != 1:
            continue
        key = canonical_key(LinkFraction.make(p, q))
        n = crossing_number(key)
        if n > 12:  # keep the exhaustive word enumeration tractable
            continue
        seen += 1
        assert brute_minimal_sum(key, n) == n
