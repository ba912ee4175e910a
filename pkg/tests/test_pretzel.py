import itertools

import pytest

from linkgap.diagram import build_pretzel_diagram, components
from linkgap.errors import Indeterminate, IrreducibleHere, NotOddPositive, UnsupportedNotation
from linkgap.pretzel import (
    PretzelState,
    pretzel_det,
    pretzel_diagram_unlink,
    pretzel_prediction,
    pretzel_reduce,
    reduce_to_fractions,
    u_bj_odd_pretzel,
)
from linkgap.rational import canonical_key, cf_eval, word_key


def test_det_examples():
    assert pretzel_det((1, 3, 3)) == 15
    assert pretzel_det((2, -3, 2)) == 8
    assert pretzel_det((1, 1, 1)) == 3
    assert pretzel_det((5, -2, 3)) == 1


def test_reduce_one_column():
    # P(-1,b,c) is the rational link R[b-2,1,c-2]
    for b in range(2, 7):
        for c in range(2, 7):
            (frac,) = reduce_to_fractions((-1, b, c))
            assert canonical_key(frac) == word_key((b - 2, 1, c - 2)), (b, c)
    # P(1,1,c) is a twist knot with unknotting number 1
    for c in range(1, 8):
        (frac,) = reduce_to_fractions((1, 1, c))
        assert canonical_key(frac) == word_key((c, 2)) or canonical_key(frac) == word_key((2, c))
    # P(a,1,c) agrees with the rational word [a,1,c]
    for a in range(2, 6):
        for c in range(2, 6):
            (frac,) = reduce_to_fractions((a, 1, c))
            assert canonical_key(frac) == word_key((a, 1, c)), (a, c)


def test_reduce_zero_column():
    fracs = reduce_to_fractions((4, 3, 0))
    assert sorted(abs(f.p) for f in fracs) == [3, 4]
    assert not PretzelState(factors=fracs).is_trivial
    assert PretzelState(factors=reduce_to_fractions((1, 1, 0))).is_trivial
    assert PretzelState(factors=reduce_to_fractions((0, 1, 0))).is_trivial
    assert not PretzelState(factors=reduce_to_fractions((0, 0, 4))).is_trivial


def test_reduce_pass_through():
    state = pretzel_reduce((2, -3, 2))
    assert state.pretzel == (2, -3, 2) and not state.is_rational
    with pytest.raises(IrreducibleHere):
        reduce_to_fractions((2, -3, 2))


def test_reduce_diagram_consistency():
    # the frozen rewrite agrees with the diagram engine's component counts
    for cols in [(1, 3, 3), (-1, 4, 5), (1, 2, 2), (1, 1, 6)]:
        (frac,) = reduce_to_fractions(cols)
        want = components(build_pretzel_diagram(cols))
        assert canonical_key(frac).component_count == want, cols


def test_odd_recursion_formula(engine):
    # u_BJ(P(a,b,c)) = (a+b)/2 for odd 1 <= a <= b <= c <= 13
    odds = range(1, 14, 2)
    for a in odds:
        for b in odds:
            for c in odds:
                if not a <= b <= c:
                    continue
                assert u_bj_odd_pretzel((a, b, c), engine) == (a + b) // 2, (a, b, c)


def test_odd_recursion_named_values(engine):
    assert u_bj_odd_pretzel((1, 3, 3), engine) == 2
    assert u_bj_odd_pretzel((3, 3, 3), engine) == 3
    assert u_bj_odd_pretzel((1, 1, 7), engine) == 1


def test_odd_recursion_rejects():
    with pytest.raises(NotOddPositive):
        u_bj_odd_pretzel((2, 3, 3))
    with pytest.raises(NotOddPositive):
        u_bj_odd_pretzel((-1, 3, 3))


def test_diagram_unlink_values():
    assert pretzel_diagram_unlink((4, 3, 4))[0] == 4  # k+l+m-1
    assert pretzel_diagram_unlink((1, 1, 1))[0] == 1
    for k in (1, 2, 3):
        assert pretzel_diagram_unlink((2 * k, -3, 2 * k))[0] == 2 * k - 1
    assert pretzel_diagram_unlink((2, 2, 2))[0] == 3


def test_diagram_unlink_witness_trivial():
    cols = (4, 3, 4)
    u_d, (k1, k2, k3) = pretzel_diagram_unlink(cols)
    assert k1 + k2 + k3 == u_d
    state = tuple(
        c - 2 * k * (1 if c > 0 else -1) for c, k in zip(cols, (k1, k2, k3))
    )
    assert PretzelState(factors=reduce_to_fractions(state)).is_trivial


def test_diagram_unlink_indeterminate():
    # P(9,8,9) reaches P(5,-2,3): determinant 1 with all columns >= 2
    with pytest.raises(Indeterminate):
        pretzel_diagram_unlink((9, 8, 9))


def test_column_permutation_invariance(engine):
    for cols in [(1, 3, 5), (2, 3, 4), (2, -3, 2), (3, 3, 1)]:
        results = set()
        for perm in itertools.permutations(cols):
            try:
                results.add(pretzel_diagram_unlink(perm)[0])
            except Indeterminate:
                results.add("indeterminate")
        assert len(results) == 1, cols
    for perm in itertools.permutations((3, 5, 7)):
        assert u_bj_odd_pretzel(perm, engine) == 4
        assert pretzel_det(perm) == pretzel_det((3, 5, 7))


def test_prediction_cases():
    p = pretzel_prediction((4, 3, 4))
    assert (p.u_bj, p.u_m, p.delta) == (3, 4, 1)
    p = pretzel_prediction((5, 2, 3))
    assert (p.u_bj, p.u_m, p.delta) == (3, 3, 0)
    p = pretzel_prediction((2, 2, 2))
    assert (p.u_bj, p.u_m, p.delta) == (3, 3, 0)
    p = pretzel_prediction((3, 3, 3))
    assert (p.u_bj, p.u_m) == (2, 2)  # recorded prediction; recursion says 3
    with pytest.raises(UnsupportedNotation):
        pretzel_prediction((1, 3, 3))  # all-odd case needs columns >= 3
    with pytest.raises(UnsupportedNotation):
        pretzel_prediction((2, -3, 2))


def test_prediction_vs_search_bounds(engine):
    # prediction u_BJ <= u(D); case 4 search equals predicted u_M
    for k in range(1, 5):
        for l in range(0, 4):
            for m in range(1, k + 1):
                cols = (2 * k, 2 * l + 1, 2 * m)
                pred = pretzel_prediction(cols)
                u_d = pretzel_diagram_unlink(cols)[0]
                assert pred.u_bj <= u_d
                assert u_d == pred.u_m == k + l + m - 1, cols
