from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkgap.errors import CountExceedsRegion, Misaligned, TrivialLink
from linkgap.rational import cf_eval, component_count, is_trivial, word_key
from linkgap.search import apply_changes, diagram_unlink_number, u_min_diagram, weight


def test_apply_changes_examples():
    assert apply_changes((5, 1, 4), (1, 0, 1)) == (3, 1, 2)
    assert apply_changes((5, 1, 4), (0, 1, 0)) == (5, -1, 4)
    changed = apply_changes((4, 4, 1, 2), (0, 0, 1, 0))
    assert changed == (4, 4, -1, 2)
    assert cf_eval(changed) == cf_eval((4, 2, 1, 0))


def test_apply_changes_errors():
    with pytest.raises(Misaligned):
        apply_changes((5, 1, 4), (1, 0))
    with pytest.raises(CountExceedsRegion):
        apply_changes((5, 1, 4), (0, 2, 0))
    with pytest.raises(CountExceedsRegion):
        apply_changes((5, 0, 4), (0, 1, 0))


def test_unlink_number_values():
    assert diagram_unlink_number((5, 1, 4))[0] == 3
    assert diagram_unlink_number((4, 4, 1, 2))[0] == 2
    assert diagram_unlink_number((4, 4, -1, 2))[0] == 1
    assert diagram_unlink_number((1,))[0] == 0
    assert diagram_unlink_number((4, 1, 4))[0] == 3


def test_witness_is_valid_and_minimal_weight():
    for word in [(5, 1, 4), (4, 4, 1, 2), (3, 2, 3), (2, -3, 2), (6, 1, 6)]:
        u_d, witness = diagram_unlink_number(word)
        assert weight(witness) == u_d
        assert is_trivial(cf_eval(apply_changes(word, witness)))


def brute_force_unlink(word):
    """Full enumeration over every change vector; independent oracle."""
    best = None
    best_vec = None
    for vec in product(*(range(abs(a) + 1) for a in word)):
        if is_trivial(cf_eval(apply_changes(word, vec))):
            w = sum(vec)
            if best is None or w < best or (w == best and vec < best_vec):
                best, best_vec = w, vec
    return best, best_vec


def all_words(total_max):
    for n in range(1, total_max + 1):
        def comps(total):
            if total == 0:
                yield ()
                return
            for first in range(1, total + 1):
                for rest in comps(total - first):
                    yield (first,) + rest
        yield from comps(n)


def test_matches_brute_force_small():
    # alternating words with entry sum <= 8 here; the acceptance suite goes to 10
    for word in all_words(8):
        got = diagram_unlink_number(word)
        want = brute_force_unlink(word)
        assert got == want, (word, got, want)


def test_brute_force_with_signs():
    words = [(2, -3, 2), (-5, 1, 4), (3, -1, 3), (0, 2, 1, 2), (2, 0, -2)]
    for word in words:
        assert diagram_unlink_number(word) == brute_force_unlink(word)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
def test_changes_preserve_components(entries):
    word = tuple(entries)
    base = component_count(cf_eval(word))
    for vec in product(*(range(abs(a) + 1) for a in word)):
        assert component_count(cf_eval(apply_changes(word, vec))) == base


def test_monotone_bound_alternating():
    # u(D) <= ceil(sum/2) for alternating words, entry sum <= 16 sample
    for word in [(5, 1, 4), (4, 1, 4), (6, 1, 6), (2, 2, 2, 2, 2), (7, 9), (16,),
                 (2, 1, 1, 1, 1, 1, 1, 1, 2), (3, 3, 3, 3)]:
        total = sum(word)
        assert 2 * diagram_unlink_number(word)[0] <= total + 1


def test_u_min_diagram(engine):
    assert u_min_diagram(word_key((5, 1, 4))) == 3
    # u_M(R[2m+1,2n]) = n and u_M(R[2m,2n]) = min(m,n)
    for m in range(1, 5):
        for n in range(1, 5):
            assert u_min_diagram(word_key((2 * m + 1, 2 * n))) == n
            assert u_min_diagram(word_key((2 * m, 2 * n))) == min(m, n)
    with pytest.raises(TrivialLink):
        u_min_diagram(word_key((1,)))
