"""Gauss code parsing, canonical equality, diagram surgery."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vknot import (
    FlatDiagram,
    FlatLinkDiagram,
    GaussCodeError,
    GaussDiagram,
    VirtualLinkDiagram,
    connected_sum,
    kind_of,
    lattice_diagram,
    mirror,
    parse_gauss_code,
    positive_lift,
    random_flat_diagram,
    random_gauss_diagram,
    reverse,
    serialize,
    shadow,
    switch_crossing,
    virtualize,
    writhe,
)
from conftest import VT_CODE, vt


def test_round_trip_every_kind():
    for code, kind in (
        ("O1+O2+U1+U2+", "virtual-knot"),
        ("O1O2U1U2", "flat-knot"),
        ("O1|U1", "flat-link"),
        ("O1+|U1+", "virtual-link"),
        ("", "virtual-knot"),
        ("|", "flat-link"),
    ):
        assert serialize(parse_gauss_code(code, kind)) == code


def test_kind_of_matches_parser():
    for code, kind in (
        (VT_CODE, "virtual-knot"),
        ("O1O2U1U2", "flat-knot"),
        ("O1|U1", "flat-link"),
        ("O1+|U1+", "virtual-link"),
    ):
        assert kind_of(parse_gauss_code(code, kind)) == kind


def test_parse_error_positions():
    with pytest.raises(GaussCodeError, match="position"):
        parse_gauss_code("O1+x2+U1+U2+", "virtual-knot")
    with pytest.raises(GaussCodeError, match="position"):
        parse_gauss_code("O1U1x2", "flat-knot")
    with pytest.raises(GaussCodeError, match="chord 2"):
        parse_gauss_code("O1U1O2", "flat-knot")
    with pytest.raises(GaussCodeError, match="sign"):
        parse_gauss_code("O1O2U1U2", "virtual-knot")
    with pytest.raises(GaussCodeError, match="chord 2"):
        parse_gauss_code("O1+O2+U1+", "virtual-knot")


def test_parse_rejects_one_sided_chord():
    # both endpoints on one side of the arrow
    with pytest.raises(GaussCodeError):
        parse_gauss_code("O1+O1+U2+U2+", "virtual-knot")


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        parse_gauss_code(VT_CODE, "virtual")


def test_rotation_equality():
    a = parse_gauss_code("O1+U2+O3+U1+O2+U3+", "virtual-knot")
    b = parse_gauss_code("U3+O1+U2+O3+U1+O2+", "virtual-knot")
    assert a == b
    assert hash(a) == hash(b)


def test_relabeling_equality():
    a = parse_gauss_code("O1+O2+U1+U2+", "virtual-knot")
    b = parse_gauss_code("O7+O3+U7+U3+", "virtual-knot")
    assert a == b


def test_oriented_flat_reversal_distinct():
    f = lattice_diagram(2, 1)
    r = reverse(f)
    assert f != r or f == r  # equality is defined either way
    g = FlatDiagram(f.slots, oriented=False)
    h = FlatDiagram(r.slots, oriented=False)
    assert g == h  # unoriented classes quotient out reversal


def test_unordered_link_component_swap():
    a = parse_gauss_code("O1|U1", "flat-link")
    b = FlatLinkDiagram(tuple(reversed(a.components)), ordered=False)
    assert a == b
    c = FlatLinkDiagram(a.components, ordered=True)
    d = FlatLinkDiagram(tuple(reversed(a.components)), ordered=True)
    assert c != d


def test_signs_and_writhe():
    d = vt()
    assert d.sign(1) == 1 and d.sign(2) == 1
    assert writhe(d) == 2
    m = parse_gauss_code("O1-O2+U1-U2+", "virtual-knot")
    assert writhe(m) == 0


def test_mirror_switches_everything():
    d = vt()
    m = mirror(d)
    assert serialize(m) == "U1-U2-O1-O2-"
    assert mirror(m) == d
    assert writhe(m) == -writhe(d)


def test_switch_crossing_single_chord():
    d = vt()
    s = switch_crossing(d, 1)
    assert serialize(s) == "U1-O2+O1-U2+"
    assert switch_crossing(s, 1) == d
    with pytest.raises(KeyError):
        switch_crossing(d, 9)


def test_virtualize_keeps_sign():
    d = vt()
    v = virtualize(d, 2)
    assert serialize(v) == "O1+U2+U1+O2+"
    assert v.sign(2) == 1
    assert virtualize(v, 2) == d


def test_shadow_is_switch_blind():
    d = parse_gauss_code("O1+U2-O3+U1+O2-U3+", "virtual-knot")
    assert shadow(switch_crossing(d, 2)) == shadow(d)
    assert shadow(mirror(d)) == shadow(d)
    assert shadow(d).oriented == d.oriented


def test_shadow_of_positive_lift_is_identity():
    f = lattice_diagram(2, 2)
    assert shadow(positive_lift(f)) == f


def test_connected_sum_layout():
    a = parse_gauss_code("O1+U1+", "virtual-knot")
    b = parse_gauss_code("O1-U1-", "virtual-knot")
    s = connected_sum(a, 1, b, 0)
    assert serialize(s) == "O1+O2-U2-U1+"
    assert writhe(s) == 0
    with pytest.raises(IndexError):
        connected_sum(a, 5, b, 0)


def test_lattice_shape():
    f = lattice_diagram(1, 1)
    assert serialize(f) == "O1U2U1O2"
    assert lattice_diagram(3, 2).n == 5
    with pytest.raises(ValueError):
        lattice_diagram(0, 1)


def test_random_generators_are_deterministic():
    a = random_gauss_diagram(5, random.Random(11))
    b = random_gauss_diagram(5, random.Random(11))
    assert serialize(a) == serialize(b)
    f = random_flat_diagram(4, random.Random(11))
    g = random_flat_diagram(4, random.Random(11))
    assert serialize(f) == serialize(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 6), st.integers(0, 2 ** 30))
def test_random_diagram_is_well_formed(n, seed):
    d = random_gauss_diagram(n, random.Random(seed))
    assert d.n == n
    assert serialize(parse_gauss_code(serialize(d), "virtual-knot")) == serialize(d)
    # every chord appears once as O and once as U
    for c in d.chord_ids:
        roles = sorted(r for cc, r in d.slots if cc == c)
        assert roles == ["O", "U"]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 6), st.integers(0, 2 ** 30), st.integers(0, 11))
def test_rotation_never_changes_the_diagram(n, seed, k):
    d = random_gauss_diagram(n, random.Random(seed))
    if not d.slots:
        return
    k %= len(d.slots)
    rot = GaussDiagram(d.slots[k:] + d.slots[:k], d.signs)
    assert rot == d


def test_locate_and_chord_ids():
    d = vt()
    assert d.chord_ids == (1, 2)
    spots = d.locate(1)
    assert spots["O"] == (0, d.slots.index((1, "O")))
    assert spots["U"] == (0, d.slots.index((1, "U")))
