"""Both smoothings, their bookkeeping, and the switch lemma."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vknot import (
    FlatDiagram,
    FlatLinkDiagram,
    GaussDiagram,
    UnknownChordError,
    VirtualLinkDiagram,
    lattice_diagram,
    parse_gauss_code,
    random_gauss_diagram,
    serialize,
    shadow,
    switch_crossing,
)
from vknot.smoothing import (
    smooth0,
    smooth0_flat,
    smooth1,
    smooth1_flat,
    smooth_result,
)
from conftest import TREFOIL_CODE, trefoil, vt


def test_frozen_smoothings_of_the_virtual_trefoil():
    d = vt()
    assert serialize(smooth0(d, 1)) == "O1-U1-"
    assert serialize(smooth0(d, 2)) == "U1-O1-"
    assert serialize(smooth1(d, 1)) == "O1+|U1+"
    assert serialize(smooth1(d, 2)) == "U1+|O1+"


def test_frozen_smoothings_of_the_trefoil():
    d = trefoil()
    assert serialize(smooth0(d, 2)) == "O1-U2-O2-U1-"
    assert serialize(smooth1(d, 2)) == "U1+O2+|O1+U2+"


def test_result_types():
    d = vt()
    assert isinstance(smooth0(d, 1), GaussDiagram)
    assert isinstance(smooth1(d, 1), VirtualLinkDiagram)
    f = lattice_diagram(2, 1)
    assert isinstance(smooth0_flat(f, 1), FlatDiagram)
    assert isinstance(smooth1_flat(f, 1), FlatLinkDiagram)
    assert not smooth1_flat(f, 1).ordered


def test_smoothed_knot_loses_its_orientation_flag():
    # reversing one arc leaves no preferred direction on the circle
    assert smooth0(vt(), 1).oriented is False
    assert smooth0_flat(lattice_diagram(1, 1), 1).oriented is True


def test_chord_is_consumed():
    d = trefoil()
    for c in d.chord_ids:
        assert c not in smooth0(d, c).chord_ids
        assert smooth0(d, c).n == d.n - 1
        assert smooth1(d, c).n == d.n - 1


def test_unknown_chord_rejected():
    with pytest.raises(UnknownChordError):
        smooth0(vt(), 7)
    with pytest.raises(UnknownChordError):
        smooth1_flat(lattice_diagram(1, 1), 9)


def test_links_cannot_be_smoothed():
    link = parse_gauss_code("O1+|U1+", "virtual-link")
    with pytest.raises(TypeError):
        smooth_result(link, 1, 0)
    with pytest.raises(ValueError):
        smooth_result(vt(), 1, 2)


def test_smooth_result_bookkeeping():
    r = smooth_result(trefoil(), 2, 0)
    assert r.chord == 2
    assert r.reversed_arc == "a"
    assert len(r.arc_a) + len(r.arc_b) == 2 * trefoil().n - 2
    r1 = smooth_result(trefoil(), 2, 1)
    assert r1.component_arcs == ("a", "b")
    assert r1.diagram.components == (r1.arc_a, r1.arc_b)


def test_spanning_chords_flip_sign_in_smooth0():
    d = vt()  # chord 2 spans both arcs of chord 1
    out = smooth0(d, 1)
    assert set(out.signs.values()) == {-1}


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2 ** 30))
def test_switch_commutes_with_smoothing_elsewhere(n, seed):
    """Switching a crossing never changes the flat class of a smoothing
    at another chord; this is what makes the chord indices blind to
    crossing changes."""
    rng = random.Random(seed)
    d = random_gauss_diagram(n, rng)
    c, x = rng.sample(d.chord_ids, 2)
    left = shadow(smooth0(switch_crossing(d, x), c))
    right = shadow(smooth0(d, c))
    assert FlatDiagram(left.slots, oriented=False) == FlatDiagram(
        right.slots, oriented=False)
    la = shadow(smooth1(switch_crossing(d, x), c))
    rb = shadow(smooth1(d, c))
    assert la == rb


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2 ** 30))
def test_arc_partition_is_exhaustive(n, seed):
    rng = random.Random(seed)
    d = random_gauss_diagram(n, rng)
    c = rng.choice(d.chord_ids)
    r = smooth_result(d, c, 1)
    kept = sorted(r.arc_a + r.arc_b)
    original = sorted(s for s in d.slots if s[0] != c)
    assert kept == original


def test_flat_zero_smoothing_follows_the_index_sign():
    # positive-index chords reverse arc a, negative ones arc b
    f = lattice_diagram(2, 1)
    assert smooth_result(f, 3, 0).reversed_arc == "a"
    assert smooth_result(f, 1, 0).reversed_arc == "b"
