"""Frozen tables of legal local move patterns, with their generators.

A move site is a set of strand segments, each segment the two slots a
strand contributes to the local picture, read in traversal order.  A
pattern string encodes one site up to renaming chords and reordering
segments: segments are joined by ``/``, each slot is ``<chord><role>``
plus the chord's sign for signed patterns, and the canonical form is
the least string over all segment orderings with chords renumbered
0,1,2 by first appearance.

The signed tables are produced by brute force over planar pictures
drawn with integer coordinates: a kink for R1, a two-line bigon for R2
and a triangle of three lines for R3, swept over all strand height
orders and all orientation choices.  A crossing's sign is the sign of
det(over direction, under direction).  The flat tables are exactly the
shadows of the signed ones (drop signs; a negative chord's letters
swap), so membership in a flat table is the same thing as having some
sign assignment that lifts the site to a legal signed one.

Sliding a strand across the opposite crossing reverses each segment of
an R3 site in place; ``_reverse_segments`` of a table pattern therefore
lands in the table again, which the regeneration test asserts.  Two of
the four flat R3 patterns have no all-positive lift, so a flat third
move need not lift to a signed third move on positive lifts.
"""

from itertools import permutations, product

__all__ = [
    "R1_SIGNED", "R1_FLAT", "R2_SIGNED", "R2_FLAT", "R3_SIGNED", "R3_FLAT",
    "canonical_site", "parse_pattern", "shadow_pattern",
    "generate_r1_signed", "generate_r2_signed", "generate_r3_signed",
]

OVER = "O"
UNDER = "U"


def canonical_site(segments, signed=True):
    """Least pattern string for a site, over segment order and naming."""
    best = None
    for perm in permutations(segments):
        relabel = {}
        parts = []
        for seg in perm:
            toks = []
            for chord, role, sign in seg:
                if chord not in relabel:
                    relabel[chord] = len(relabel)
                if signed:
                    toks.append("%d%s%s" % (relabel[chord], role, "+" if sign > 0 else "-"))
                else:
                    toks.append("%d%s" % (relabel[chord], role))
            parts.append("".join(toks))
        code = "/".join(parts)
        if best is None or code < best:
            best = code
    return best


def parse_pattern(code, signed=True):
    """Inverse of canonical_site on its own output."""
    step = 3 if signed else 2
    segments = []
    for part in code.split("/"):
        seg = []
        for k in range(0, len(part), step):
            chord = int(part[k])
            role = part[k + 1]
            sign = 0
            if signed:
                sign = 1 if part[k + 2] == "+" else -1
            seg.append((chord, role, sign))
        segments.append(tuple(seg))
    return segments


def shadow_pattern(code):
    """Flat pattern of a signed one: negative chords swap their letters."""
    segments = []
    for seg in parse_pattern(code, signed=True):
        out = []
        for chord, role, sign in seg:
            if sign < 0:
                role = UNDER if role == OVER else OVER
            out.append((chord, role, 0))
        segments.append(tuple(out))
    return canonical_site(segments, signed=False)


def _reverse_segments(code, signed=True):
    segments = [tuple(reversed(seg)) for seg in parse_pattern(code, signed)]
    return canonical_site(segments, signed=signed)


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def generate_r1_signed():
    """Kink pictures: a strand through the origin along +x that loops
    back through the origin heading straight down (counterclockwise
    loop) or straight up (clockwise), with either passage on top."""
    pats = set()
    for loop_dir in ((0, -1), (0, 1)):
        passes = ((1, 0), loop_dir)
        for over_first in (True, False):
            over, under = (0, 1) if over_first else (1, 0)
            sign = 1 if _det(passes[over], passes[under]) > 0 else -1
            roles = (OVER, UNDER) if over_first else (UNDER, OVER)
            seg = tuple((0, role, sign) for role in roles)
            pats.add(canonical_site((seg,)))
    return frozenset(pats)


def generate_r2_signed():
    """Bigon pictures: strand a along +x crossing at x=0 and x=1,
    strand b dipping across with direction (1,1) then (1,-1), swept
    over both orientations of each strand and both height orders."""
    pats = set()
    for sa, sb, b_over in product((1, -1), (1, -1), (True, False)):
        da = (sa, 0)
        db = {0: (sb, sb), 1: (sb, -sb)}
        sign = {}
        for x in (0, 1):
            do, du = (db[x], da) if b_over else (da, db[x])
            sign[x] = 1 if _det(do, du) > 0 else -1
        role_a = UNDER if b_over else OVER
        role_b = OVER if b_over else UNDER
        a_order = (0, 1) if sa == 1 else (1, 0)
        b_order = (0, 1) if sb == 1 else (1, 0)
        seg_a = tuple((x, role_a, sign[x]) for x in a_order)
        seg_b = tuple((x, role_b, sign[x]) for x in b_order)
        pats.add(canonical_site((seg_a, seg_b)))
    return frozenset(pats)


def generate_r3_signed():
    """Triangle pictures: lines y=0, x=0 and x+y=1 with base directions
    (1,0), (0,1), (1,-1), swept over the 6 height orders and the 8
    orientation sign vectors.  48 pictures fold to 16 patterns under
    the triangle's threefold symmetry."""
    dirs = {0: (1, 0), 1: (0, 1), 2: (1, -1)}
    meets = {0: (1, 2), 1: (0, 2), 2: (1, 0)}   # partner order along base dir
    pats = set()
    for heights in permutations(range(3)):
        for sigma in product((1, -1), repeat=3):
            sign = {}
            for i in range(3):
                for j in range(i + 1, 3):
                    over, under = (i, j) if heights[i] > heights[j] else (j, i)
                    do = (sigma[over] * dirs[over][0], sigma[over] * dirs[over][1])
                    du = (sigma[under] * dirs[under][0], sigma[under] * dirs[under][1])
                    sign[frozenset((i, j))] = 1 if _det(do, du) > 0 else -1
            segments = []
            for i in range(3):
                order = meets[i] if sigma[i] == 1 else tuple(reversed(meets[i]))
                seg = []
                for j in order:
                    key = frozenset((i, j))
                    role = OVER if heights[i] > heights[j] else UNDER
                    seg.append((key, role, sign[key]))
                segments.append(tuple(seg))
            pats.add(canonical_site(segments))
    return frozenset(pats)


R1_SIGNED = frozenset([
    "0O+0U+",
    "0O-0U-",
    "0U+0O+",
    "0U-0O-",
])

R1_FLAT = frozenset([
    "0O0U",
    "0U0O",
])

R2_SIGNED = frozenset([
    "0O+1O-/0U+1U-",
    "0O+1O-/1U-0U+",
    "0O-1O+/0U-1U+",
    "0O-1O+/1U+0U-",
])

R2_FLAT = frozenset([
    "0O1U/0U1O",
    "0O1U/1O0U",
    "0U1O/1U0O",
])

R3_SIGNED = frozenset([
    "0O+1O+/0U+2O+/1U+2U+",
    "0O+1O+/0U+2U-/1U+2O-",
    "0O+1O+/2O+1U+/2U+0U+",
    "0O+1O+/2O-0U+/2U-1U+",
    "0O+1O-/0U+2O-/2U-1U-",
    "0O+1O-/0U+2U+/2O+1U-",
    "0O+1O-/1U-2O-/2U-0U+",
    "0O+1O-/1U-2U+/2O+0U+",
    "0O+1U-/0U+2U-/1O-2O-",
    "0O-1O+/0U-2O+/2U+1U+",
    "0O-1O+/0U-2U-/2O-1U+",
    "0O-1O+/1U+2O+/2U+0U-",
    "0O-1O+/1U+2U-/2O-0U-",
    "0O-1O-/0U-2O-/1U-2U-",
    "0O-1O-/0U-2U+/1U-2O+",
    "0O-1O-/2O-1U-/2U-0U-",
])

R3_FLAT = frozenset([
    "0O1O/0U2O/1U2U",
    "0O1O/2O1U/2U0U",
    "0O1U/1O2U/2O0U",
    "0U1O/1U2O/2U0O",
])
