"""Chord indices, projections, genus, flat linking number."""

import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vknot import (
    lattice_diagram,
    mirror,
    parse_gauss_code,
    positive_lift,
    random_flat_diagram,
    random_gauss_diagram,
    reverse,
    serialize,
    shadow,
)
from vknot.indices import (
    carter_genus,
    flat_linking_number,
    flat_sign,
    ind,
    ind0,
    ind_flat,
    index_report,
    project,
)
from conftest import fig8, trefoil, vt


def test_virtual_trefoil_indices():
    d = vt()
    assert ind(d, 1) == 1
    assert ind(d, 2) == -1


def test_classical_codes_have_zero_index():
    # planar diagrams satisfy the even parity count chord by chord
    for d in (trefoil(), fig8()):
        assert all(ind(d, c) == 0 for c in d.chord_ids)


@pytest.mark.parametrize("p,q", list(product((1, 2, 3), repeat=2)))
def test_lattice_index_table(p, q):
    f = lattice_diagram(p, q)
    for c in range(1, p + 1):
        assert ind_flat(f, c) == -q
    for c in range(p + 1, p + q + 1):
        assert ind_flat(f, c) == p


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2 ** 30))
def test_mirror_and_reverse_negate_indices(n, seed):
    d = random_gauss_diagram(n, random.Random(seed))
    for c in d.chord_ids:
        assert ind(mirror(d), c) == -ind(d, c)
        assert ind(reverse(d), c) == -ind(d, c)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2 ** 30))
def test_flat_indices_sum_to_zero(n, seed):
    f = random_flat_diagram(n, random.Random(seed))
    assert sum(ind_flat(f, c) for c in f.chord_ids) == 0


def test_flat_index_is_the_lift_index():
    f = random_flat_diagram(5, random.Random(3))
    lift = positive_lift(f)
    for c in f.chord_ids:
        assert ind_flat(f, c) == ind(lift, c)
        assert flat_sign(f, c) == (ind_flat(f, c) > 0) - (ind_flat(f, c) < 0)


def test_index_report_covers_all_chords():
    d = vt()
    rep = index_report(d)
    assert rep.values == {1: 1, 2: -1}
    assert rep.total == 0
    assert rep[1] == 1
    rep_flat = index_report(shadow(d))
    assert rep_flat.values == {1: 1, 2: -1}


def test_project_keeps_multiples_only():
    d = vt()
    assert serialize(project(d, 0)) == ""
    assert project(d, 1) == d
    w = parse_gauss_code("O1+O2+U1+O3+U2+O4+U3+U4+", "virtual-knot")
    assert {c: ind(w, c) for c in w.chord_ids} == {1: 1, 2: 0, 3: 0, 4: -1}
    assert serialize(project(w, 0)) == "O1+O2+U1+U2+"
    with pytest.raises(ValueError):
        project(d, -1)


def test_secondary_index_needs_a_zero_index_chord():
    w = parse_gauss_code("O1+O2+U1+O3+U2+O4+U3+U4+", "virtual-knot")
    assert ind0(w, 2) == 1
    assert ind0(w, 3) == -1
    with pytest.raises(ValueError):
        ind0(w, 1)


def test_carter_genus_values():
    assert carter_genus(parse_gauss_code("", "flat-knot")) == 0
    assert carter_genus(shadow(trefoil())) == 0
    assert carter_genus(shadow(fig8())) == 0
    assert carter_genus(lattice_diagram(1, 1)) == 1
    assert carter_genus(lattice_diagram(2, 1)) == 2
    assert carter_genus(shadow(vt())) == 1


def test_flat_linking_number():
    assert flat_linking_number(parse_gauss_code("O1|U1", "flat-link")) == 1
    assert flat_linking_number(parse_gauss_code("O1O2|U1U2", "flat-link")) == 2
    assert flat_linking_number(parse_gauss_code("O1U1|", "flat-link")) == 0
    assert flat_linking_number(parse_gauss_code("|", "flat-link")) == 0
