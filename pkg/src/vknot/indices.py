"""Integer chord indices, parity projections and the surface genus.

The index of a chord is read off its 1-smoothing: split the mixed
chords of the resulting 2-component link by which component carries
their over endpoint and take the signed difference.  Everything else
here is arithmetic over that single primitive.
"""

from .diagrams import (
    FlatDiagram,
    FlatLinkDiagram,
    GaussDiagram,
    HEAD,
    OVER,
    TAIL,
    UnknownChordError,
    _rebuild,
    positive_lift,
)
from .smoothing import smooth1

__all__ = [
    "IndexReport", "ind", "ind_flat", "flat_sign", "index_report",
    "project", "ind0", "carter_genus", "flat_linking_number",
]


def ind(d, chord):
    """Signed mixed-chord imbalance of the 1-smoothing at chord.

    Mixed chords whose over endpoint lies on component 0 count with
    their sign, the others against it.
    """
    if not isinstance(d, GaussDiagram):
        raise TypeError("ind needs a signed knot diagram")
    link = smooth1(d, chord)
    total = 0
    for c in link.chord_ids:
        if link.chord_kind(c) != "mixed":
            continue
        if link.locate(c)[OVER][0] == 0:
            total += link.signs[c]
        else:
            total -= link.signs[c]
    return total


def ind_flat(f, chord):
    """Index of a flat chord: the index of its all-positive lift."""
    if not isinstance(f, FlatDiagram):
        raise TypeError("ind_flat needs a flat knot diagram")
    return ind(positive_lift(f), chord)


def flat_sign(f, chord):
    """sgn of ind_flat: the writhe a flat crossing carries."""
    v = ind_flat(f, chord)
    return (v > 0) - (v < 0)


class IndexReport:
    """Per-chord index table with its total."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = dict(values)

    @property
    def total(self):
        return sum(self.values.values())

    def __getitem__(self, chord):
        try:
            return self.values[chord]
        except KeyError:
            raise UnknownChordError(chord) from None

    def __iter__(self):
        return iter(sorted(self.values))

    def __repr__(self):
        body = ", ".join("%r: %d" % (c, self.values[c]) for c in self)
        return "IndexReport({%s})" % body


def index_report(d):
    """Indices of every chord; flat diagrams are lifted first."""
    if isinstance(d, FlatDiagram):
        d = positive_lift(d)
    if not isinstance(d, GaussDiagram):
        raise TypeError("index_report needs a knot diagram")
    return IndexReport({c: ind(d, c) for c in d.chord_ids})


def project(d, n):
    """Keep only the chords whose index is a multiple of n.

    n = 0 keeps exactly the chords of index 0; n = 1 keeps everything.
    Indices are taken in the input diagram, not recomputed as chords
    drop out.
    """
    if not isinstance(d, GaussDiagram):
        raise TypeError("project needs a signed knot diagram")
    n = int(n)
    if n < 0:
        raise ValueError("n must be nonnegative")
    keep = set()
    for c in d.chord_ids:
        v = ind(d, c)
        if (v == 0) if n == 0 else (v % n == 0):
            keep.add(c)
    slots = tuple(s for s in d.slots if s[0] in keep)
    signs = {c: s for c, s in d.signs.items() if c in keep}
    return _rebuild(d, (slots,), signs)


def ind0(d, chord):
    """Secondary index of an index-zero chord, computed inside the
    projection that keeps only index-zero chords."""
    if ind(d, chord) != 0:
        raise ValueError("chord %r has nonzero index" % (chord,))
    return ind(project(d, 0), chord)


def carter_genus(f):
    """Genus of the closed oriented surface the shadow thickens to.

    The diagram's circle decomposes into edges between consecutive
    slots; each chord is a 4-valent vertex whose rotation interleaves
    the two strands.  Counting boundary circles m of the thickened
    graph gives g = (2 - m + n) / 2.
    """
    if not isinstance(f, FlatDiagram):
        raise TypeError("carter_genus needs a flat knot diagram")
    n = f.n
    if n == 0:
        return 0
    slots = f.slots
    L = len(slots)
    position = {}
    for i, (c, r) in enumerate(slots):
        position[(c, r)] = i

    sigma = {}
    for c in f.chord_ids:
        t = position[(c, TAIL)]
        h = position[(c, HEAD)]
        cyc = (("f", t), ("f", h), ("b", (t - 1) % L), ("b", (h - 1) % L))
        for k in range(4):
            sigma[cyc[k]] = cyc[(k + 1) % 4]

    def alpha(dart):
        kind, i = dart
        return ("b" if kind == "f" else "f", i)

    seen = set()
    faces = 0
    for dart in sigma:
        if dart in seen:
            continue
        faces += 1
        cur = dart
        while cur not in seen:
            seen.add(cur)
            cur = sigma[alpha(cur)]
    return (2 - faces + n) // 2


def flat_linking_number(link):
    """Absolute signed count of the chords joining the two components.

    A mixed chord counts +1 when its tail sits on component 0 and -1
    otherwise; the absolute value makes the component order and the
    sign convention irrelevant.
    """
    if not isinstance(link, FlatLinkDiagram):
        raise TypeError("flat_linking_number needs a 2-component flat link")
    total = 0
    for c in link.chord_ids:
        if link.chord_kind(c) != "mixed":
            continue
        total += 1 if link.locate(c)[TAIL][0] == 0 else -1
    return abs(total)
