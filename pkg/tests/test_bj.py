import pytest

from linkgap.bj import BJEngine, bj_children, trivial_word
from linkgap.errors import TrivialLink
from linkgap.rational import (
    CanonicalKey,
    canonical_key,
    canonical_word,
    cf_eval,
    crossing_number,
    word_key,
)


def test_children_examples():
    kids = bj_children(word_key((5, 1, 4)))
    for w in [(3, 1, 4), (5, 1, 2), (5, -1, 4)]:
        assert word_key(w) in kids
    assert bj_children(CanonicalKey(3, 1)) == (CanonicalKey(1, 0),)
    # children of R[2m,2n] are R[2m-2,2n] and R[2m,2n-2]
    kids = bj_children(word_key((4, 6)))
    assert set(kids) == {word_key((2, 6)), word_key((4, 4))}
    with pytest.raises(TrivialLink):
        bj_children(CanonicalKey(1, 0))


def test_children_descend_and_preserve_parity(engine):
    import random

    rng = random.Random(3)
    from math import gcd

    from linkgap.rational import LinkFraction

    checked = 0
    while checked < 200:
        p = rng.randint(2, 800)
        q = rng.randint(1, p - 1)
        if gcd(p, q) != 1:
            continue
        checked += 1
        key = canonical_key(LinkFraction.make(p, q))
        n = crossing_number(key)
        for child in bj_children(key):
            assert child.component_count == key.component_count
            if not child.is_trivial:
                assert crossing_number(child) < n


def test_u_bj_values(engine):
    assert engine.u_bj(word_key((5, 1, 4))) == 2
    assert engine.u_bj(word_key((5, 1, 7))) == 3
    assert engine.u_bj(CanonicalKey(0, 0)) == 0
    assert engine.u_bj(CanonicalKey(1, 0)) == 0
    assert engine.u_bj(word_key((6, 1, 6))) == 3
    # u_BJ(R[2p-1,1,2q-1]) = min(p,q)
    for p in range(1, 6):
        for q in range(1, 6):
            assert engine.u_bj(word_key((2 * p - 1, 1, 2 * q - 1))) == min(p, q)
    # u_BJ(R[2k,2l+1,2m]) = min(k+m, max(k,m)+l)
    for k in range(1, 5):
        for l in range(0, 4):
            for m in range(1, 5):
                want = min(k + m, max(k, m) + l)
                assert engine.u_bj(word_key((2 * k, 2 * l + 1, 2 * m))) == want


def test_triangle_step(engine):
    for word in [(5, 1, 4), (6, 1, 6), (4, 4, 1, 2), (3, 3, 3)]:
        key = word_key(word)
        value = engine.u_bj(key)
        kids = bj_children(key)
        assert all(value <= 1 + engine.u_bj(c) for c in kids)
        assert any(value == 1 + engine.u_bj(c) for c in kids)


def replay_witness(engine, key, chain):
    """Walk the witness chain re-deriving each step via a region change."""
    assert len(chain) == engine.u_bj(key) + 1
    current = key
    for step, word in enumerate(chain):
        if current.is_trivial:
            assert word == trivial_word(current)
            assert step == len(chain) - 1
            break
        assert word == canonical_word(current)
        nxt = None
        for i in range(len(word)):
            child = list(word)
            child[i] -= 2
            ck = canonical_key(cf_eval(tuple(child)))
            if step + 1 < len(chain):
                target = chain[step + 1]
                if (ck.is_trivial and target == trivial_word(ck)) or (
                    not ck.is_trivial and canonical_word(ck) == target
                ):
                    nxt = ck
                    break
        assert nxt is not None, f"no region change of {word} reaches {chain[step+1]}"
        assert engine.u_bj(nxt) == engine.u_bj(current) - 1
        current = nxt
    assert cf_eval(chain[-1]).p in (-1, 0, 1)


def test_witness_replay(engine):
    for word in [(5, 1, 4), (6, 1, 6), (4, 1, 4), (3,), (2, 2), (8, 1, 5, 2), (6, 1, 6, 3)]:
        key = word_key(word)
        replay_witness(engine, key, engine.witness(key))


def test_gap_reports(engine):
    r = engine.gap(word_key((5, 1, 4)))
    assert (r.u_m, r.u_bj, r.delta_bj) == (3, 2, 1)
    r = engine.gap(word_key((4, 1, 4)))
    assert (r.u_m, r.u_bj, r.delta_bj) == (3, 2, 1)
    r = engine.gap(word_key((6, 1, 6)))
    assert (r.u_m, r.u_bj, r.delta_bj) == (5, 3, 2)
    with pytest.raises(TrivialLink):
        engine.gap(CanonicalKey(1, 0))


def test_cache_round_trip(tmp_path, engine):
    engine.u_bj(word_key((6, 1, 6)))
    path = tmp_path / "memo.cache"
    written = engine.save_cache(path)
    assert written == engine.cache_size() > 0

    fresh = BJEngine()
    loaded = fresh.load_cache(path)
    assert loaded == written
    assert fresh.u_bj(word_key((6, 1, 6))) == 3


def test_cache_rejects_malformed(tmp_path, caplog):
    path = tmp_path / "memo.cache"
    path.write_text(
        "29 5 2\n"          # valid
        "bogus line\n"      # not numeric
        "6 4 1\n"           # gcd(6,4) != 1
        "7 5 1\n"           # 5 is not the orbit minimum for p=7
        "5 2 0\n"           # value 0 never cached
        "4 1 1\n"           # valid
    )
    engine = BJEngine()
    with caplog.at_level("WARNING", logger="linkgap"):
        loaded = engine.load_cache(path)
    assert loaded == 2
    assert engine.cache_size() == 2
    assert sum("discarding" in r.message for r in caplog.records) == 4
