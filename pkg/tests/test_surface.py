import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from planar_monoid.braid import equals, full_twist, linking_matrix, permutation
from planar_monoid.surface import (
    BoundaryWord,
    ConvexCurve,
    SurfaceSpec,
    TwistWord,
    equivalent,
    multiplicities,
    swing_word,
    to_braid,
)


@st.composite
def twist_words(draw, max_m=6, max_factors=6):
    m = draw(st.integers(2, max_m))
    factors = []
    for _ in range(draw(st.integers(0, max_factors))):
        if draw(st.booleans()) and draw(st.integers(0, 5)) == 0:
            factors.append(ConvexCurve.outer_parallel())
        else:
            k = draw(st.integers(1, m))
            support = draw(
                st.lists(st.integers(1, m), min_size=k, max_size=k, unique=True)
            )
            factors.append(ConvexCurve.over(support))
    return TwistWord(SurfaceSpec(m + 1), tuple(factors))


def test_surface_spec_labels():
    s = SurfaceSpec(5)
    assert list(s.interior_labels) == [1, 2, 3, 4]
    assert s.strands == 4
    with pytest.raises(ValueError):
        SurfaceSpec(1)


def test_curve_validation():
    with pytest.raises(ValueError):
        ConvexCurve(support=(1, 1))
    with pytest.raises(ValueError):
        ConvexCurve(support=(0, 2))
    with pytest.raises(ValueError):
        ConvexCurve(support=(1,), outer=True)
    with pytest.raises(ValueError):
        ConvexCurve()


def test_curve_support_sorted():
    assert ConvexCurve.over([3, 1, 2]).support == (1, 2, 3)


def test_boundary_parallel_cases():
    s = SurfaceSpec(5)
    assert ConvexCurve.over([2]).is_boundary_parallel(s)
    assert ConvexCurve.over([1, 2, 3, 4]).is_boundary_parallel(s)
    assert ConvexCurve.outer_parallel().is_boundary_parallel(s)
    assert not ConvexCurve.over([1, 2]).is_boundary_parallel(s)


def test_singleton_swing_is_empty():
    # capping turns an interior boundary twist into nothing
    assert swing_word(ConvexCurve.over([2]), SurfaceSpec(5)).letters == ()


def test_outer_swing_is_full_twist():
    assert swing_word(ConvexCurve.outer_parallel(), SurfaceSpec(5)) == full_twist(4)


def test_full_support_swing_equals_outer():
    s = SurfaceSpec(5)
    assert equals(swing_word(ConvexCurve.over([1, 2, 3, 4]), s), full_twist(4))


@given(twist_words())
@settings(max_examples=50, deadline=None)
def test_swings_are_pure(tw):
    assert permutation(to_braid(tw)).is_identity()


@given(twist_words())
@settings(max_examples=50, deadline=None)
def test_linking_counts_co_membership(tw):
    "Each strand pair links once, negatively, per factor containing both."
    m = tw.surface.strands
    L = linking_matrix(to_braid(tw))
    for x in range(1, m + 1):
        for y in range(x + 1, m + 1):
            co = sum(
                1
                for c in tw.factors
                if c.outer or (x in c.support and y in c.support)
            )
            assert L.entry(x, y) == -co


def test_boundary_word_is_the_full_twist():
    # interior exponents cap away; only the outer twist leaves a braid
    for exps in ((0, 0, 0, 0), (1, 2, 3, 4), (2, 2, 2, 2)):
        w = BoundaryWord(SurfaceSpec(5), exps, outer=1)
        assert equals(to_braid(w), full_twist(4))


def test_boundary_word_validation():
    with pytest.raises(ValueError):
        BoundaryWord(SurfaceSpec(5), (1, 1, 1))
    with pytest.raises(ValueError):
        BoundaryWord(SurfaceSpec(5), (1, 1, 1, -1))


def test_boundary_word_expand_counts():
    w = BoundaryWord(SurfaceSpec(4), (2, 0, 1), outer=2)
    assert w.twist_count() == 5
    expanded = w.expand()
    assert len(expanded) == 5
    assert sum(1 for c in expanded.factors if c.outer) == 2


def test_multiplicities_interior_and_outer():
    s = SurfaceSpec(5)
    tw = TwistWord(
        s,
        (
            ConvexCurve.over([1, 2]),
            ConvexCurve.over([1, 2, 3, 4]),  # isotopic to outer
            ConvexCurve.outer_parallel(),
        ),
    )
    mv = multiplicities(tw)
    assert mv.interior == (3, 3, 2, 2)
    assert mv.outer == 2


def test_support_beyond_labels_rejected():
    with pytest.raises(ValueError):
        TwistWord(SurfaceSpec(4), (ConvexCurve.over([1, 4]),))
    with pytest.raises(ValueError):
        swing_word(ConvexCurve.over([5]), SurfaceSpec(4))


def test_equivalent_accepts_known_relation():
    # four-holed sphere: boundary product = three pair twists
    s = SurfaceSpec(4)
    lhs = BoundaryWord(s, (1, 1, 1), outer=1)
    rhs = TwistWord(
        s, (ConvexCurve.over([1, 2]), ConvexCurve.over([2, 3]), ConvexCurve.over([1, 3]))
    )
    assert equivalent(lhs, rhs)


def test_equivalent_is_order_sensitive():
    # same three factors, lexicographic order: not the boundary product
    s = SurfaceSpec(4)
    lhs = BoundaryWord(s, (1, 1, 1), outer=1)
    rhs = TwistWord(
        s, (ConvexCurve.over([1, 2]), ConvexCurve.over([1, 3]), ConvexCurve.over([2, 3]))
    )
    assert not equivalent(lhs, rhs)


def test_equivalent_demands_same_surface():
    a = TwistWord(SurfaceSpec(4))
    b = TwistWord(SurfaceSpec(5))
    with pytest.raises(ValueError):
        equivalent(a, b)


def test_json_roundtrip():
    s = SurfaceSpec(5)
    tw = TwistWord(s, (ConvexCurve.over([1, 3]), ConvexCurve.outer_parallel()))
    assert TwistWord.from_json_obj(tw.to_json_obj()) == tw
    bw = BoundaryWord(s, (2, 0, 1, 3), outer=2)
    assert BoundaryWord.from_json_obj(bw.to_json_obj()) == bw
