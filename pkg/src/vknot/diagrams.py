"""Gauss diagrams for virtual and flat virtual knots and links.

A diagram is one or two cyclic sequences of endpoint slots, each slot a
pair ``(chord_id, role)``.  Signed (virtual) diagrams use roles ``"O"``
(over) and ``"U"`` (under) and carry one sign per chord.  Flat diagrams
reuse the same two letters for the two ends of a directed chord: ``"O"``
is the tail of the arrow, ``"U"`` the head; they carry no signs.

Slot 0 acts as the basepoint.  It is remembered so that serialization
is deterministic, but equality and hashing are basepoint independent:
two diagrams are equal when some rotation of the slot sequences (and,
for unordered links, possibly a component swap) matches.  A diagram
flagged unoriented is additionally compared up to reversal of the
traversal direction.  The empty diagram is the unknot.

Gauss code text format (one line, ASCII): a virtual knot is 2n tokens
``O<label><sign>`` / ``U<label><sign>`` with sign ``+`` or ``-``; a flat
knot drops the signs; a link is two such strings joined by ``|`` with
labels global across components.  Whitespace between tokens is ignored.
Normalized form: no whitespace, labels 1..n by first appearance.
"""

from types import MappingProxyType

__all__ = [
    "OVER", "UNDER", "TAIL", "HEAD",
    "DiagramError", "GaussCodeError", "UnknownChordError",
    "GaussDiagram", "FlatDiagram", "VirtualLinkDiagram", "FlatLinkDiagram",
    "parse_gauss_code", "serialize", "lattice_diagram",
    "reverse", "mirror", "switch_crossing", "virtualize", "connected_sum",
    "shadow", "positive_lift", "writhe",
    "random_gauss_diagram", "random_flat_diagram",
]

OVER = "O"
UNDER = "U"
TAIL = "O"   # flat diagrams reuse the letters: O = arrow tail
HEAD = "U"   # U = arrow head

_ROLES = (OVER, UNDER)


class DiagramError(ValueError):
    """A structurally invalid diagram."""


class GaussCodeError(DiagramError):
    """Unparseable Gauss code text.  Carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


class UnknownChordError(KeyError):
    """Referenced chord id does not occur in the diagram."""


def _check_circles(circles, signs):
    """Validate role pairing and, when signs is not None, the sign map."""
    seen = {}
    for circle in circles:
        for chord, role in circle:
            if role not in _ROLES:
                raise DiagramError("bad role %r for chord %r" % (role, chord))
            seen.setdefault(chord, []).append(role)
    for chord, roles in seen.items():
        if len(roles) != 2:
            raise DiagramError(
                "chord %r has %d endpoints, expected 2" % (chord, len(roles))
            )
        if roles[0] == roles[1]:
            raise DiagramError("chord %r has two %r endpoints" % (chord, roles[0]))
    if signs is not None:
        if set(signs) != set(seen):
            raise DiagramError("sign map does not match chord set")
        for chord, s in signs.items():
            if s not in (1, -1):
                raise DiagramError("sign of chord %r must be +1 or -1" % (chord,))
    return seen


def _rotations(seq):
    if not seq:
        return [()]
    return [seq[i:] + seq[:i] for i in range(len(seq))]


def _normal_code(circles, signs):
    """Normalized token string for concrete rotations of the circles.

    Labels are renumbered 1..n in order of first appearance, scanning the
    circles in the given order; components are joined by '|'.
    """
    relabel = {}
    parts = []
    for circle in circles:
        toks = []
        for chord, role in circle:
            if chord not in relabel:
                relabel[chord] = len(relabel) + 1
            if signs is None:
                toks.append("%s%d" % (role, relabel[chord]))
            else:
                toks.append(
                    "%s%d%s" % (role, relabel[chord], "+" if signs[chord] > 0 else "-")
                )
        parts.append("".join(toks))
    return "|".join(parts)


def _canonical_code(circles, signs, swappable):
    """Lexicographically least normalized code over rotations (and swaps)."""
    orders = [circles]
    if swappable and len(circles) == 2:
        orders.append((circles[1], circles[0]))
    best = None
    for order in orders:
        rot_lists = [_rotations(c) for c in order]
        if len(order) == 1:
            for r0 in rot_lists[0]:
                code = _normal_code((r0,), signs)
                if best is None or code < best:
                    best = code
        else:
            for r0 in rot_lists[0]:
                for r1 in rot_lists[1]:
                    code = _normal_code((r0, r1), signs)
                    if best is None or code < best:
                        best = code
    return best


class _Base:
    """Shared plumbing for the four diagram types."""

    __slots__ = ()

    @property
    def n(self):
        return sum(len(c) for c in self.circles) // 2

    @property
    def chord_ids(self):
        return tuple(sorted({c for circle in self.circles for c, _ in circle}))

    def locate(self, chord):
        """Return {role: (circle_index, slot_index)} for one chord."""
        out = {}
        for ci, circle in enumerate(self.circles):
            for si, (c, role) in enumerate(circle):
                if c == chord:
                    out[role] = (ci, si)
        if len(out) != 2:
            raise UnknownChordError(chord)
        return out

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "%s(%r)" % (type(self).__name__, serialize(self))


class GaussDiagram(_Base):
    """Signed chord diagram on one circle: a virtual knot diagram.

    ``oriented=False`` marks a diagram considered up to reversal of the
    traversal direction (the output of a 0-smoothing); it only affects
    equality and canonical codes.
    """

    __slots__ = ("slots", "signs", "oriented", "_ckey")

    def __init__(self, slots, signs, oriented=True):
        self.slots = tuple((c, r) for c, r in slots)
        signs = {c: int(s) for c, s in dict(signs).items()}
        _check_circles((self.slots,), signs)
        self.signs = MappingProxyType(signs)
        self.oriented = bool(oriented)
        self._ckey = None

    @property
    def circles(self):
        return (self.slots,)

    def sign(self, chord):
        try:
            return self.signs[chord]
        except KeyError:
            raise UnknownChordError(chord) from None

    def _key(self):
        if self._ckey is None:
            code = _canonical_code((self.slots,), self.signs, False)
            if not self.oriented:
                rev = tuple(reversed(self.slots))
                code = min(code, _canonical_code((rev,), self.signs, False))
            self._ckey = ("virtual-knot", self.oriented, code)
        return self._ckey


class FlatDiagram(_Base):
    """Directed unsigned chord diagram on one circle: a flat virtual knot."""

    __slots__ = ("slots", "oriented", "_ckey")

    def __init__(self, slots, oriented=True):
        self.slots = tuple((c, r) for c, r in slots)
        _check_circles((self.slots,), None)
        self.oriented = bool(oriented)
        self._ckey = None

    @property
    def circles(self):
        return (self.slots,)

    def _key(self):
        if self._ckey is None:
            code = _canonical_code((self.slots,), None, False)
            if not self.oriented:
                rev = tuple(reversed(self.slots))
                code = min(code, _canonical_code((rev,), None, False))
            self._ckey = ("flat-knot", self.oriented, code)
        return self._ckey


def _chord_kind(components, chord):
    where = [ci for ci, circle in enumerate(components)
             for c, _ in circle if c == chord]
    if where == [0, 0]:
        return "intra-1"
    if where == [1, 1]:
        return "intra-2"
    return "mixed"


class VirtualLinkDiagram(_Base):
    """Signed chord diagram on two ordered circles: a 2-component virtual link."""

    __slots__ = ("components", "signs", "_ckey")

    def __init__(self, components, signs):
        components = tuple(tuple((c, r) for c, r in circle) for circle in components)
        if len(components) != 2:
            raise DiagramError("expected exactly 2 components")
        signs = {c: int(s) for c, s in dict(signs).items()}
        _check_circles(components, signs)
        self.components = components
        self.signs = MappingProxyType(signs)
        self._ckey = None

    @property
    def circles(self):
        return self.components

    def sign(self, chord):
        try:
            return self.signs[chord]
        except KeyError:
            raise UnknownChordError(chord) from None

    def chord_kind(self, chord):
        if chord not in self.signs:
            raise UnknownChordError(chord)
        return _chord_kind(self.components, chord)

    def _key(self):
        if self._ckey is None:
            code = _canonical_code(self.components, self.signs, False)
            self._ckey = ("virtual-link", code)
        return self._ckey


class FlatLinkDiagram(_Base):
    """Directed unsigned chord diagram on two circles: a 2-component flat link.

    ``ordered=False`` (the default) makes equality insensitive to
    swapping the two components.
    """

    __slots__ = ("components", "ordered", "_ckey")

    def __init__(self, components, ordered=False):
        components = tuple(tuple((c, r) for c, r in circle) for circle in components)
        if len(components) != 2:
            raise DiagramError("expected exactly 2 components")
        _check_circles(components, None)
        self.components = components
        self.ordered = bool(ordered)
        self._ckey = None

    @property
    def circles(self):
        return self.components

    def chord_kind(self, chord):
        if chord not in {c for circle in self.components for c, _ in circle}:
            raise UnknownChordError(chord)
        return _chord_kind(self.components, chord)

    def _key(self):
        if self._ckey is None:
            code = _canonical_code(self.components, None, not self.ordered)
            self._ckey = ("flat-link", self.ordered, code)
        return self._ckey


# -- text format -------------------------------------------------------

def _tokenize(text, signed, base):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch not in _ROLES:
            raise GaussCodeError("expected 'O' or 'U', got %r" % ch, base + i)
        j = i + 1
        while j < len(text) and text[j].isdigit():
            j += 1
        if j == i + 1:
            raise GaussCodeError("missing chord label", base + i + 1)
        label = int(text[i + 1:j])
        if label == 0:
            raise GaussCodeError("labels are positive integers", base + i + 1)
        sign = 0
        if signed:
            if j >= len(text) or text[j] not in "+-":
                raise GaussCodeError("missing sign for chord %d" % label, base + j)
            sign = 1 if text[j] == "+" else -1
            j += 1
        elif j < len(text) and text[j] in "+-":
            raise GaussCodeError("sign not allowed in flat codes", base + j)
        tokens.append((label, ch, sign))
        i = j
    return tokens


_KINDS = ("virtual-knot", "flat-knot", "flat-link", "virtual-link")


def parse_gauss_code(text, kind):
    """Parse Gauss code text into a diagram of the requested kind.

    ``kind`` is one of ``virtual-knot``, ``flat-knot``, ``flat-link`` or
    ``virtual-link``.  The empty string is the unknot; link codes must
    contain exactly one ``|``.
    """
    if kind not in _KINDS:
        raise ValueError("unknown kind %r, expected one of %s" % (kind, ", ".join(_KINDS)))
    signed = kind.startswith("virtual")
    linkish = kind.endswith("link")
    parts = text.split("|")
    if linkish and len(parts) != 2:
        raise GaussCodeError(
            "a link code needs exactly 2 components, got %d" % len(parts),
            text.find("|") if len(parts) > 2 else None,
        )
    if not linkish and len(parts) != 1:
        raise GaussCodeError("'|' is not allowed in a knot code", text.find("|"))

    circles = []
    signs = {}
    base = 0
    for part in parts:
        circle = []
        for label, role, sign in _tokenize(part, signed, base):
            circle.append((label, role))
            if signed:
                if label in signs and signs[label] != sign:
                    raise GaussCodeError("conflicting signs for chord %d" % label)
                signs[label] = sign
        circles.append(tuple(circle))
        base += len(part) + 1

    counts = {}
    for circle in circles:
        for label, role in circle:
            counts.setdefault(label, []).append(role)
    for label, roles in counts.items():
        if len(roles) != 2:
            raise GaussCodeError(
                "chord %d appears %d times, expected 2" % (label, len(roles))
            )
        if roles[0] == roles[1]:
            raise GaussCodeError("chord %d has two %r endpoints" % (label, roles[0]))

    if kind == "virtual-knot":
        return GaussDiagram(circles[0], signs)
    if kind == "flat-knot":
        return FlatDiagram(circles[0])
    if kind == "flat-link":
        return FlatLinkDiagram(circles)
    return VirtualLinkDiagram(circles, signs)


def serialize(d):
    """Normalized code for a diagram, keeping its stored basepoints."""
    signs = d.signs if isinstance(d, (GaussDiagram, VirtualLinkDiagram)) else None
    return _normal_code(d.circles, signs)


def kind_of(d):
    """The parse_gauss_code kind string for a diagram instance."""
    return {
        GaussDiagram: "virtual-knot",
        FlatDiagram: "flat-knot",
        FlatLinkDiagram: "flat-link",
        VirtualLinkDiagram: "virtual-link",
    }[type(d)]


# -- generators --------------------------------------------------------

def lattice_diagram(p, q):
    """The flat diagram with p horizontal and q vertical chords where the
    two families cross pairwise exactly once and nothing else crosses.

    Cyclic slot order: tails of the horizontals, heads of the verticals,
    heads of the horizontals in reverse, tails of the verticals in
    reverse.  Horizontals get ids 1..p, verticals p+1..p+q.
    """
    p = int(p)
    q = int(q)
    if p < 1 or q < 1:
        raise ValueError("lattice parameters must be >= 1")
    slots = (
        [(i, TAIL) for i in range(1, p + 1)]
        + [(p + j, HEAD) for j in range(1, q + 1)]
        + [(i, HEAD) for i in range(p, 0, -1)]
        + [(p + j, TAIL) for j in range(q, 0, -1)]
    )
    return FlatDiagram(slots)


def random_gauss_diagram(n, rng):
    """Uniform random signed diagram with n chords drawn from rng."""
    pairs = _random_matching(n, rng)
    slots = [None] * (2 * n)
    signs = {}
    for k, (a, b) in enumerate(pairs, start=1):
        if rng.random() < 0.5:
            a, b = b, a
        slots[a] = (k, OVER)
        slots[b] = (k, UNDER)
        signs[k] = rng.choice((1, -1))
    return GaussDiagram(slots, signs)


def random_flat_diagram(n, rng):
    """Uniform random flat diagram with n chords drawn from rng."""
    pairs = _random_matching(n, rng)
    slots = [None] * (2 * n)
    for k, (a, b) in enumerate(pairs, start=1):
        if rng.random() < 0.5:
            a, b = b, a
        slots[a] = (k, TAIL)
        slots[b] = (k, HEAD)
    return FlatDiagram(slots)


def _random_matching(n, rng):
    free = list(range(2 * n))
    pairs = []
    while free:
        a = free.pop(0)
        b = free.pop(rng.randrange(len(free)))
        pairs.append((a, b))
    return pairs


# -- elementary transforms ----------------------------------------------

def _rebuild(d, circles, signs=None):
    """Same diagram type with new slot data, preserving flags."""
    if isinstance(d, GaussDiagram):
        return GaussDiagram(circles[0], signs, oriented=d.oriented)
    if isinstance(d, FlatDiagram):
        return FlatDiagram(circles[0], oriented=d.oriented)
    if isinstance(d, VirtualLinkDiagram):
        return VirtualLinkDiagram(circles, signs)
    if isinstance(d, FlatLinkDiagram):
        return FlatLinkDiagram(circles, ordered=d.ordered)
    raise TypeError("not a diagram: %r" % (d,))


def reverse(d):
    """Reverse the traversal direction of every circle.

    Roles and signs are untouched, so chord arrows keep pointing between
    the same endpoints.
    """
    circles = tuple(tuple(reversed(c)) for c in d.circles)
    signs = getattr(d, "signs", None)
    return _rebuild(d, circles, dict(signs) if signs is not None else None)


def _flip_role(role):
    return UNDER if role == OVER else OVER


def mirror(d):
    """Switch every crossing: swap over/under and flip every sign."""
    if not isinstance(d, (GaussDiagram, VirtualLinkDiagram)):
        raise TypeError("mirror needs a signed diagram")
    circles = tuple(
        tuple((c, _flip_role(r)) for c, r in circle) for circle in d.circles
    )
    signs = {c: -s for c, s in d.signs.items()}
    return _rebuild(d, circles, signs)


def switch_crossing(d, chord):
    """Switch one crossing: swap its roles and flip its sign."""
    if not isinstance(d, (GaussDiagram, VirtualLinkDiagram)):
        raise TypeError("switch_crossing needs a signed diagram")
    d.locate(chord)
    circles = tuple(
        tuple((c, _flip_role(r) if c == chord else r) for c, r in circle)
        for circle in d.circles
    )
    signs = dict(d.signs)
    signs[chord] = -signs[chord]
    return _rebuild(d, circles, signs)


def virtualize(d, chord):
    """Reverse one chord's arrow (swap its roles) keeping its sign."""
    if not isinstance(d, (GaussDiagram, VirtualLinkDiagram)):
        raise TypeError("virtualize needs a signed diagram")
    d.locate(chord)
    circles = tuple(
        tuple((c, _flip_role(r) if c == chord else r) for c, r in circle)
        for circle in d.circles
    )
    return _rebuild(d, circles, dict(d.signs))


def connected_sum(d1, b1, d2, b2):
    """Splice d2 into gap b1 of d1, starting d2's circle at its gap b2.

    Gap i is the position before slot i; the empty diagram has the
    single gap 0.  Chord ids of d2 are shifted past those of d1.
    """
    if not isinstance(d1, GaussDiagram) or not isinstance(d2, GaussDiagram):
        raise TypeError("connected_sum needs two one-circle signed diagrams")
    n1, n2 = len(d1.slots), len(d2.slots)
    if not 0 <= b1 < max(n1, 1):
        raise IndexError("gap %d out of range for a %d-slot diagram" % (b1, n1))
    if not 0 <= b2 < max(n2, 1):
        raise IndexError("gap %d out of range for a %d-slot diagram" % (b2, n2))
    offset = max(d1.signs, default=0)
    spliced = [(c + offset, r) for c, r in d2.slots[b2:] + d2.slots[:b2]]
    slots = d1.slots[:b1] + tuple(spliced) + d1.slots[b1:]
    signs = dict(d1.signs)
    signs.update({c + offset: s for c, s in d2.signs.items()})
    return GaussDiagram(slots, signs, oriented=d1.oriented)


def shadow(d):
    """Forget over/under data, keeping each crossing's strand geometry.

    The flat arrow points along the strand that crosses the other one
    from the right.  At a positive crossing that is the over strand, so
    its chord keeps its letters; at a negative crossing the arrow flips.
    This makes the shadow blind to crossing switches: shadow(mirror(d))
    equals shadow(d) slot for slot.
    """
    if isinstance(d, GaussDiagram):
        slots = [
            (c, r if d.signs[c] > 0 else _flip_role(r)) for c, r in d.slots
        ]
        return FlatDiagram(slots, oriented=d.oriented)
    if isinstance(d, VirtualLinkDiagram):
        comps = tuple(
            tuple((c, r if d.signs[c] > 0 else _flip_role(r)) for c, r in circle)
            for circle in d.components
        )
        return FlatLinkDiagram(comps, ordered=False)
    raise TypeError("shadow needs a signed diagram")


def positive_lift(f):
    """Replace every flat crossing by a positive one: tails become over
    endpoints, heads become under endpoints, all signs +1."""
    if isinstance(f, FlatDiagram):
        signs = {c: 1 for c, _ in f.slots}
        return GaussDiagram(f.slots, signs)
    if isinstance(f, FlatLinkDiagram):
        signs = {c: 1 for circle in f.components for c, _ in circle}
        return VirtualLinkDiagram(f.components, signs)
    raise TypeError("positive_lift needs a flat diagram")


def writhe(d):
    """Sum of the crossing signs."""
    if not isinstance(d, (GaussDiagram, VirtualLinkDiagram)):
        raise TypeError("writhe needs a signed diagram")
    return sum(d.signs.values())
