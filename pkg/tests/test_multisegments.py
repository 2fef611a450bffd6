from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vogan_gln.errors import MultiCosetSupport, SupportMismatch
from vogan_gln.multisegments import (
    HalfInt,
    Multisegment,
    MultisegmentStats,
    Segment,
    elementary_successors,
    is_simple,
    leq_oracle,
    mw_dual,
    precedes,
    simple_dual_formula,
    stats,
)

M = Multisegment.of


def seg(b, e=None):
    return Segment(HalfInt.of(b), HalfInt.of(b if e is None else e))


# --- half-integers and segments -------------------------------------------


@pytest.mark.parametrize(
    "value, twice",
    [(0, 0), (3, 6), (-1, -2), ("3/2", 3), ("-1/2", -1), (Fraction(5, 2), 5), (HalfInt(7), 7)],
)
def test_halfint_of(value, twice):
    assert HalfInt.of(value).twice_value == twice


@pytest.mark.parametrize("bad", ["1/3", Fraction(1, 4), "0.25"])
def test_halfint_rejects_non_halves(bad):
    with pytest.raises(ValueError):
        HalfInt.of(bad)


def test_halfint_rendering_and_arithmetic():
    assert str(HalfInt(3)) == "3/2"
    assert str(HalfInt(-4)) == "-2"
    assert HalfInt(3) + 1 == HalfInt(5)
    assert HalfInt(3) - HalfInt(1) == HalfInt(2)
    assert -HalfInt(3) == HalfInt(-3)


def test_segment_invariants():
    assert seg(-1, 1).length == 3
    assert seg("-3/2", "3/2").length == 4
    with pytest.raises(ValueError):
        seg(1, 0)
    with pytest.raises(ValueError):
        seg(0, "1/2")


def test_multisegment_canonical_order_and_equality():
    a = M([(0, 1), (-1, 0), (0, 0)])
    b = M([(0, 0), (-1, 0), (0, 1)])
    assert a == b
    assert a.twice() == ((0, 2), (0, 0), (-2, 0))
    assert hash(a) == hash(b)


def test_multisegment_rejects_two_cosets():
    with pytest.raises(MultiCosetSupport):
        M([(0, 0), ("1/2", "1/2")])


def test_json_round_trip():
    a = M([("-3/2", "1/2"), ("1/2", "1/2")])
    assert a.to_json() == {"segments": [[1, 1], [-3, 1]]}
    assert Multisegment.from_json(a.to_json()) == a


# --- precedes ----------------------------------------------------------------


@pytest.mark.parametrize(
    "d1, d2, expected",
    [
        (seg(-1, 0), seg(0, 1), True),
        (seg(0), seg(0), False),
        (seg(0), seg(2, 3), False),
        (seg(0), seg(1), True),
        (seg(-1, 1), seg(0), False),
    ],
)
def test_precedes(d1, d2, expected):
    assert precedes(d1, d2) is expected


# --- stats -------------------------------------------------------------------


@pytest.mark.parametrize(
    "alpha, expected",
    [
        (M([(-1, 0), (0, 1)]), MultisegmentStats(2, 2, 1)),
        (M([(0, 0), (2, 3)]), MultisegmentStats(2, 2, 2)),
        (M([]), MultisegmentStats(0, 0, 0)),
        (M([(0, 0), (1, 1)]), MultisegmentStats(1, 2, 1)),
    ],
)
def test_stats(alpha, expected):
    assert stats(alpha) == expected


@given(st.integers(-4, 4), st.integers(0, 4), st.integers(1, 5))
def test_simple_multisegments_are_connected(b, span, n):
    alpha = Multisegment(tuple(seg(b + k, b + span + k) for k in range(n)))
    assert stats(alpha).c == 1


# --- elementary operations and the order oracle ---------------------------


def test_successors_of_gl4_simple():
    assert elementary_successors(M([(-1, 0), (0, 1)])) == {M([(-1, 1), (0, 0)])}


def test_successors_of_closed_point():
    assert elementary_successors(M([(1, 1), (0, 0), (0, 0), (-1, -1)])) == {
        M([(0, 1), (0, 0), (-1, -1)]),
        M([(1, 1), (0, 0), (-1, 0)]),
    }


def test_successors_single_segment_and_containment():
    assert elementary_successors(M([(0, 0)])) == set()
    # containment pairs and far-apart pairs do nothing
    assert elementary_successors(M([(-1, 1), (0, 0)])) == set()
    assert elementary_successors(M([(0, 0), (2, 3)])) == set()


def test_leq_oracle_examples():
    closed = M([(1, 1), (0, 0), (0, 0), (-1, -1)])
    assert leq_oracle(closed, M([(-1, 1), (0, 0)]))
    assert leq_oracle(closed, closed)
    a, b = M([(0, 1), (0, 0), (-1, -1)]), M([(1, 1), (0, 0), (-1, 0)])
    assert not leq_oracle(a, b)
    assert not leq_oracle(b, a)


def test_leq_oracle_support_mismatch():
    with pytest.raises(SupportMismatch):
        leq_oracle(M([(0, 0)]), M([(1, 1)]))


# --- Moeglin-Waldspurger -------------------------------------------------------


@pytest.mark.parametrize(
    "alpha, dual",
    [
        ([(-1, 1), (0, 0)], [(1, 1), (0, 0), (0, 0), (-1, -1)]),
        ([(-1, 0), (0, 1)], [(-1, 0), (0, 1)]),
        ([(1, 1), (0, 0), (-1, 0)], [(0, 1), (0, 0), (-1, -1)]),
        ([("-3/2", "3/2")], [("3/2", "3/2"), ("1/2", "1/2"), ("-1/2", "-1/2"), ("-3/2", "-3/2")]),
        ([], []),
    ],
)
def test_mw_dual_table(alpha, dual):
    assert mw_dual(M(alpha)) == M(dual)
    assert mw_dual(M(dual)) == M(alpha)


@given(st.integers(-5, 5), st.integers(0, 5))
def test_mw_dual_single_segment(b, span):
    assert mw_dual(M([(b, b + span)])) == M([(x, x) for x in range(b, b + span + 1)])


segments = st.tuples(st.integers(-3, 3), st.integers(0, 3)).map(lambda p: (p[0], p[0] + p[1]))
half_shift = st.booleans()


@settings(max_examples=300)
@given(st.lists(segments, max_size=6), half_shift)
def test_mw_dual_involutive_and_support_preserving(pairs, shift):
    off = Fraction(1, 2) if shift else 0
    alpha = M([(b + off, e + off) for b, e in pairs])
    dual = mw_dual(alpha)
    assert mw_dual(dual) == alpha
    assert dual.support() == alpha.support()
    assert sum(s.length for s in dual) == sum(s.length for s in alpha)


# --- simple multisegments ----------------------------------------------------------


@pytest.mark.parametrize(
    "alpha, expected",
    [
        (M([(-1, 0), (0, 1)]), True),
        (M([(-1, 1), (0, 0)]), False),
        (M([(0, 0)]), True),
        (M([]), False),
        (M([(0, 1), (0, 1)]), False),
        (M([(0, 1), (2, 3)]), False),
    ],
)
def test_is_simple(alpha, expected):
    assert is_simple(alpha) is expected


def test_simple_dual_formula_examples():
    assert simple_dual_formula(-1, 0, 2) == M([(-1, 0), (0, 1)])
    assert simple_dual_formula(3, 3, 1) == M([(3, 3)])
    assert simple_dual_formula(-1, 1, 1) == mw_dual(M([(-1, 1)])) == M([(1, 1), (0, 0), (-1, -1)])


@given(st.integers(-3, 3), st.integers(0, 4), st.integers(1, 5), half_shift)
def test_simple_dual_formula_matches_algorithm(b, span, n, shift):
    b = HalfInt.of(b) + HalfInt(1 if shift else 0)
    e = b + span
    alpha = Multisegment(tuple(Segment(b + k, e + k) for k in range(n)))
    dual = mw_dual(alpha)
    assert dual == simple_dual_formula(b, e, n)
    assert is_simple(dual)
    assert len(dual) == stats(alpha).L


def test_support_counter_is_doubled():
    assert M([("-1/2", "1/2")]).support() == Counter({-1: 1, 1: 1})
