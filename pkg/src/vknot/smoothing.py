"""The two resolutions of a crossing, performed on Gauss diagrams.

Deleting a chord c splits the circle into two arcs: arc a runs from
c's over endpoint to its under endpoint (tail to head in the flat
case), arc b is the rest.  The 1-smoothing closes each arc into its
own circle, giving a 2-component link.  The 0-smoothing rejoins the
arcs into a single circle after turning one of them around; on the
diagram this reverses that arc's slot order in place.

Reversing an arc has side effects on the chords that touch it.  A
chord with exactly one endpoint on the reversed arc has one strand of
its crossing flipped, which negates the local writhe: signed chords
flip sign (over/under is untouched), flat chords flip their arrow.  A
chord with both endpoints inside is carried around rigidly and keeps
its data.

Conventions fixed here rather than derivable:

* 1-smoothing component order: component 0 is arc a, component 1 is
  arc b, regardless of the chord's sign.  This is the assignment under
  which the lattice family calibration holds (verticals get index +p,
  horizontals -q); making the order depend on the chord's own sign
  would negate the index at negative chords and break the pairwise
  cancellation the index-weighted invariants rely on.
* 0-smoothing of a signed diagram reverses arc a; the output is
  flagged unoriented, so the choice is invisible there.
* 0-smoothing of a flat diagram stays oriented: the arc to reverse is
  chosen by the sign of the chord's index, arc a when sgn(Ind) >= 0
  and arc b otherwise.  Reversing the whole output swaps the roles of
  the two arcs, which is what makes the orientation-reversal law for
  the flat module invariants come out exactly.
"""

from .diagrams import (
    FlatDiagram,
    FlatLinkDiagram,
    GaussDiagram,
    OVER,
    UNDER,
    UnknownChordError,
    VirtualLinkDiagram,
)

__all__ = [
    "SmoothingResult",
    "smooth0", "smooth1", "smooth0_flat", "smooth1_flat",
    "smooth_result",
]


class SmoothingResult:
    """A smoothed diagram together with its arc bookkeeping.

    arc_a and arc_b are the surviving slots in traversal order.  For a
    1-smoothing component_arcs names which arc became which component;
    for a 0-smoothing reversed_arc says which arc was turned around.
    """

    __slots__ = ("chord", "diagram", "arc_a", "arc_b",
                 "reversed_arc", "component_arcs")

    def __init__(self, chord, diagram, arc_a, arc_b,
                 reversed_arc=None, component_arcs=None):
        self.chord = chord
        self.diagram = diagram
        self.arc_a = arc_a
        self.arc_b = arc_b
        self.reversed_arc = reversed_arc
        self.component_arcs = component_arcs

    def __repr__(self):
        return "SmoothingResult(chord=%r, diagram=%r)" % (self.chord, self.diagram)


def _split_arcs(d, chord):
    """(arc_a, arc_b): slots strictly between the endpoints of chord,
    arc_a starting after the over/tail endpoint."""
    loc = d.locate(chord)
    if set(loc) != {OVER, UNDER}:
        raise UnknownChordError(chord)
    slots = d.circles[0]
    L = len(slots)
    start_a = loc[OVER][1]
    start_b = loc[UNDER][1]

    def walk(start, stop):
        out = []
        i = (start + 1) % L
        while i != stop:
            out.append(slots[i])
            i = (i + 1) % L
        return tuple(out)

    return walk(start_a, start_b), walk(start_b, start_a)


def _one_knot_circle(d):
    if len(d.circles) != 1:
        raise TypeError("smoothing is defined on one-circle diagrams")


def smooth1(d, chord):
    """Split a signed knot diagram at one chord into a 2-component link.

    Chord data is untouched; chords inside one arc become
    intra-component, chords spanning both become mixed.  Components come
    in arc order regardless of the chord's sign; anything sign-dependent
    here would break invariance under the second move.
    """
    return smooth_result(d, chord, 1).diagram


def smooth0(d, chord):
    """Resolve one chord of a signed knot diagram keeping one circle.

    Arc a is reversed in place: chords crossing into it flip sign,
    chords inside keep theirs, roles never change.  The result is
    flagged unoriented.
    """
    return smooth_result(d, chord, 0).diagram


def smooth0_flat(f, chord):
    """Flat 0-smoothing, oriented by the index-sign convention."""
    return smooth_result(f, chord, 0).diagram


def smooth1_flat(f, chord):
    """Flat 1-smoothing: an unordered oriented 2-component flat link."""
    return smooth_result(f, chord, 1).diagram


def smooth_result(d, chord, resolution):
    """Either smoothing with arc bookkeeping; resolution is 0 or 1."""
    if resolution not in (0, 1):
        raise ValueError("resolution must be 0 or 1")
    _one_knot_circle(d)
    if isinstance(d, GaussDiagram):
        return _smooth_signed(d, chord, resolution)
    if isinstance(d, FlatDiagram):
        return _smooth_flat(d, chord, resolution)
    raise TypeError("smoothing needs a knot diagram, not %r" % (d,))


def _smooth_signed(d, chord, resolution):
    arc_a, arc_b = _split_arcs(d, chord)
    signs = {c: s for c, s in d.signs.items() if c != chord}
    if resolution == 1:
        comps = (arc_a, arc_b)
        arcs = ("a", "b")
        link = VirtualLinkDiagram(comps, signs)
        return SmoothingResult(chord, link, arc_a, arc_b, component_arcs=arcs)
    for c in signs:
        count = sum(1 for x, _ in arc_a if x == c)
        if count == 1:
            signs[c] = -signs[c]
    circle = tuple(reversed(arc_a)) + arc_b
    out = GaussDiagram(circle, signs, oriented=False)
    return SmoothingResult(chord, out, arc_a, arc_b, reversed_arc="a")


def _smooth_flat(f, chord, resolution):
    arc_a, arc_b = _split_arcs(f, chord)
    if resolution == 1:
        link = FlatLinkDiagram((arc_a, arc_b), ordered=False)
        return SmoothingResult(chord, link, arc_a, arc_b,
                               component_arcs=("a", "b"))
    from .indices import flat_sign
    which = "a" if flat_sign(f, chord) >= 0 else "b"
    rev = arc_a if which == "a" else arc_b
    flipped = {c for c, _ in rev if sum(1 for x, _ in rev if x == c) == 1}

    def fix(slot):
        c, r = slot
        if c in flipped:
            return (c, UNDER if r == OVER else OVER)
        return slot

    if which == "a":
        circle = tuple(fix(s) for s in reversed(arc_a)) + tuple(fix(s) for s in arc_b)
    else:
        circle = tuple(fix(s) for s in arc_a) + tuple(fix(s) for s in reversed(arc_b))
    out = FlatDiagram(circle, oriented=True)
    return SmoothingResult(chord, out, arc_a, arc_b, reversed_arc=which)
