"""Randomized audits tying indices and invariants to the move engine.

Each audit draws diagrams and moves from the engine's own enumeration,
so a bug in either side surfaces as a counted violation rather than a
silent drift.  All audits are deterministic for a fixed seed.

Class-valued index comparisons run in two stages: object equality on
the smoothed shadows first (which already quotients rotation, reversal
and component order), then fingerprints at a zero-search budget, then
one recheck at a small search budget.  A mismatch that survives the
recheck is counted as a violation.
"""

import itertools
import random
import time

from . import _tables
from .diagrams import (
    OVER,
    UNDER,
    FlatDiagram,
    FlatLinkDiagram,
    GaussDiagram,
    random_flat_diagram,
    random_gauss_diagram,
    serialize,
    shadow,
    switch_crossing,
    virtualize,
)
from .indices import ind, ind0
from .invariants import (
    F_invariant,
    L_invariant,
    dwrithe,
    flat_module_invariant,
    flat_writhe,
    lkn_polynomial,
    wp0_polynomial,
    writhe_polynomial,
)
from .moves import (
    Budget,
    Verdict,
    apply_move,
    enumerate_moves,
    equivalent,
    fingerprint,
)
from .smoothing import smooth0, smooth1

__all__ = [
    "AuditSummary",
    "random_move",
    "move_invariance_suite",
    "axiom_audit",
    "AXIOM_CLAUSES",
    "splice_r3_site",
    "r3_move_at",
    "r3_relation_audit",
    "projection_jump_scan",
]

# zero-search budget for the fast path, then two recheck rungs; rung
# results ride the fingerprint cache, so recurring stuck forms across a
# long audit are reduced once, not per trial
_QUICK = Budget(0, 0)
_LADDER = (Budget(400, 1), Budget(2000, 2))

_SABOTAGE_MODES = (None, "sign-flip", "arrow-flip")


class AuditSummary:
    """Counters accumulated by one audit run."""

    __slots__ = ("name", "trials", "counters", "violations", "failures",
                 "elapsed")

    def __init__(self, name):
        self.name = name
        self.trials = 0
        self.counters = {}
        self.violations = 0
        self.failures = []
        self.elapsed = 0.0

    def count(self, clause):
        self.counters[clause] = self.counters.get(clause, 0) + 1

    def fail(self, clause, detail):
        self.violations += 1
        if len(self.failures) < 20:
            self.failures.append((clause, detail))

    def ok(self):
        return self.violations == 0

    def lines(self):
        out = ["%s: %d trials, %d violations, %ds"
               % (self.name, self.trials, self.violations, round(self.elapsed))]
        for clause in sorted(self.counters):
            out.append("  %-26s %d" % (clause, self.counters[clause]))
        for clause, detail in self.failures:
            out.append("  FAIL %s: %s" % (clause, detail))
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _check_sabotage(sabotage):
    if sabotage not in _SABOTAGE_MODES:
        raise ValueError("unknown sabotage mode %r" % (sabotage,))


def _sabotaged(d, rng, sabotage):
    """Deliberate single-chord bug injection for harness self-tests.

    sign-flip switches one crossing, which perturbs every sign-weighted
    invariant but, by design, no flat class.  arrow-flip virtualizes
    one chord instead, which does change flat classes and so trips the
    axiom audit as well.
    """
    if sabotage and d.chord_ids:
        c = rng.choice(d.chord_ids)
        if sabotage == "sign-flip":
            return switch_crossing(d, c)
        return virtualize(d, c)
    return d


def random_move(d, rng, grow=True):
    """One legal move on d, kind chosen uniformly before the instance.

    Without the two-stage choice, insertions (which scale with the
    square of the gap count) would drown out every other kind.
    """
    moves = enumerate_moves(d)
    if not grow:
        shrunk = [m for m in moves if not m.kind.endswith("insert")]
        moves = shrunk or moves
    kinds = sorted({m.kind for m in moves})
    kind = rng.choice(kinds)
    return rng.choice([m for m in moves if m.kind == kind])


# -- class-valued index plumbing -----------------------------------------

def _knot_index(d, c):
    """Unoriented flat knot attached to chord c by the 0-smoothing."""
    s = shadow(smooth0(d, c))
    return FlatDiagram(s.slots, oriented=False)


def _link_index(d, c):
    """Unordered oriented flat link attached to chord c by the 1-smoothing."""
    s = shadow(smooth1(d, c))
    return FlatLinkDiagram(s.components, ordered=False)


def _same_class(x, y, mode):
    if x == y:
        return True
    if fingerprint(x, mode, _QUICK) == fingerprint(y, mode, _QUICK):
        return True
    for budget in _LADDER:
        if fingerprint(x, mode, budget) == fingerprint(y, mode, budget):
            return True
    return equivalent(x, y, mode, _LADDER[-1]).status == Verdict.EQUAL


def _same_indices(a, ca, b, cb):
    """Both flat-class indices of chord ca in a and cb in b agree."""
    if not _same_class(_knot_index(a, ca), _knot_index(b, cb), "unoriented"):
        return "knot-class"
    if not _same_class(_link_index(a, ca), _link_index(b, cb), "oriented"):
        return "link-class"
    return None


def _same_element(make, a, b):
    ea = make(a, _QUICK)
    eb = make(b, _QUICK)
    if ea == eb:
        return True
    return _provably_zero(ea - eb)


def _provably_zero(delta):
    """True when every key of delta cancels against a proven-equal key.

    The zero-search budget can park one class at two different reduced
    codes, leaving a nonzero formal difference.  Within each group of
    keys sharing the sound invariant data, coefficients of opposite
    sign are cancelled whenever the move search produces an actual
    equivalence witness for their representatives, so a True answer
    certifies the difference as zero rather than guessing it.
    """
    groups = {}
    for fp, coeff in delta.items():
        key = (fp.kind, fp.mode, fp.invariant_tuple)
        groups.setdefault(key, []).append([fp, coeff])
    for entries in groups.values():
        if sum(c for _, c in entries) != 0:
            return False
        pos = [e for e in entries if e[1] > 0]
        neg = [e for e in entries if e[1] < 0]
        for p in pos:
            for q in neg:
                if p[1] == 0:
                    break
                if q[1] == 0:
                    continue
                if _same_class(delta.representative(p[0]),
                               delta.representative(q[0]), p[0].mode):
                    step = min(p[1], -q[1])
                    p[1] -= step
                    q[1] += step
        if any(c for _, c in entries):
            return False
    return True


def _move_chords(d, m):
    """Chord ids named by a deletion or r3 move's sites."""
    out = set()
    for ci, p in m.sites:
        circle = d.circles[ci]
        out.add(circle[p][0])
        out.add(circle[(p + 1) % len(circle)][0])
    return out


# -- move-invariance suite -------------------------------------------------

def move_invariance_suite(trials=10000, seed=2026, max_chords=6,
                          sabotage=None):
    """Random (diagram, legal move) trials checking every invariant.

    Three of four trials draw a signed diagram and check the polynomial
    invariants plus the module keys of the 0- and 1-smoothing counts;
    the fourth draws a flat diagram and checks the flat writhe and the
    flat module keys.
    """
    _check_sabotage(sabotage)
    rng = random.Random(seed)
    out = AuditSummary("move-invariance")
    start = time.monotonic()
    for t in range(trials):
        flat = t % 4 == 3
        n = rng.randint(0, max_chords)
        d = random_flat_diagram(n, rng) if flat else random_gauss_diagram(n, rng)
        m = random_move(d, rng)
        e = apply_move(d, m)
        if not flat:
            e = _sabotaged(e, rng, sabotage)
        where = lambda: "%s | %s" % (serialize(d), m.record())
        if flat:
            out.count("flat_writhe")
            if flat_writhe(d) != flat_writhe(e):
                out.fail("flat_writhe", where())
            out.count("flat_module_keys")
            if not _same_element(
                    lambda x, b: flat_module_invariant(x, "sign", "knot", b),
                    d, e):
                out.fail("flat_module_keys", where())
        else:
            for name, fn in (
                ("writhe_polynomial", writhe_polynomial),
                ("dwrithe_1", lambda x: dwrithe(x, 1)),
                ("dwrithe_2", lambda x: dwrithe(x, 2)),
                ("dwrithe_3", lambda x: dwrithe(x, 3)),
                ("lkn_1", lambda x: lkn_polynomial(x, 1)),
                ("lkn_2", lambda x: lkn_polynomial(x, 2)),
                ("wp0", wp0_polynomial),
            ):
                out.count(name)
                if fn(d) != fn(e):
                    out.fail(name, where())
            out.count("F_keys")
            if not _same_element(F_invariant, d, e):
                out.fail("F_keys", where())
            out.count("L_keys")
            if not _same_element(L_invariant, d, e):
                out.fail("L_keys", where())
        out.trials += 1
    out.elapsed = time.monotonic() - start
    return out


# -- chord index axiom audit -----------------------------------------------

def _clause_r1_fixed(d, rng, sabotage):
    inserts = [m for m in enumerate_moves(d) if m.kind == "r1-insert"]
    m = rng.choice(inserts)
    e = _sabotaged(apply_move(d, m), rng, sabotage)
    (c,) = set(e.chord_ids) - set(d.chord_ids)
    base = shadow(d)
    ref_knot = FlatDiagram(base.slots, oriented=False)
    ref_link = FlatLinkDiagram((base.slots, ()), ordered=False)
    if not _same_class(_knot_index(e, c), ref_knot, "unoriented"):
        return "knot index of a kink chord is not the base class"
    if not _same_class(_link_index(e, c), ref_link, "oriented"):
        return "link index of a kink chord is not base + unknot"
    return None


def _clause_r2_pair(d, rng, sabotage):
    inserts = [m for m in enumerate_moves(d) if m.kind == "r2-insert"]
    if not inserts:
        # the empty diagram has a single gap, which cannot host the
        # two runs of an r2 pair; grow it by one move first
        d = apply_move(d, random_move(d, rng))
        inserts = [m for m in enumerate_moves(d) if m.kind == "r2-insert"]
    m = rng.choice(inserts)
    e = _sabotaged(apply_move(d, m), rng, sabotage)
    c1, c2 = sorted(set(e.chord_ids) - set(d.chord_ids))
    bad = _same_indices(e, c1, e, c2)
    if bad:
        return "%s indices of an r2 pair differ" % bad
    return None


def _clause_r3_preserved(d, rng, sabotage):
    d2, fresh = splice_r3_site(d, rng)
    m = r3_move_at(d2, fresh)
    if m is None:
        return "no r3 move found at spliced site %s" % serialize(d2)
    e = _sabotaged(apply_move(d2, m), rng, sabotage)
    for c in fresh:
        bad = _same_indices(d2, c, e, c)
        if bad:
            return "%s index of chord %d moved across r3" % (bad, c)
    return None


def _clause_detour_stable(d, rng, sabotage):
    # virtual moves leave the chord data untouched; what can change is
    # the basepoint of the reading, so stability under rotation is the
    # computable content of the clause
    if not d.slots:
        return None
    k = rng.randrange(len(d.slots))
    rot = GaussDiagram(d.slots[k:] + d.slots[:k], d.signs)
    rot = _sabotaged(rot, rng, sabotage)
    for c in d.chord_ids:
        bad = _same_indices(d, c, rot, c)
        if bad:
            return "%s index of chord %d depends on the basepoint" % (bad, c)
    return None


def _clause_uninvolved(d, rng, sabotage):
    m = random_move(d, rng)
    e0 = apply_move(d, m)
    e = _sabotaged(e0, rng, sabotage)
    if m.kind.endswith("insert"):
        involved = set(e0.chord_ids) - set(d.chord_ids)
    else:
        involved = _move_chords(d, m)
    for c in sorted((set(d.chord_ids) & set(e0.chord_ids)) - involved):
        bad = _same_indices(d, c, e, c)
        if bad:
            return "%s index of untouched chord %d moved under %s" % (
                bad, c, m.kind)
    return None


AXIOM_CLAUSES = (
    ("r1-fixed-value", _clause_r1_fixed),
    ("r2-pair-equal", _clause_r2_pair),
    ("r3-preserved", _clause_r3_preserved),
    ("detour-stable", _clause_detour_stable),
    ("uninvolved-preserved", _clause_uninvolved),
)


def axiom_audit(trials=10000, seed=2026, max_chords=6, sabotage=None):
    """Randomized audit of the five index axioms for both flat classes.

    Trials cycle through the clauses so the per-clause counters sum to
    the trial count.
    """
    _check_sabotage(sabotage)
    rng = random.Random(seed)
    out = AuditSummary("chord-index-axioms")
    start = time.monotonic()
    for t in range(trials):
        name, check = AXIOM_CLAUSES[t % len(AXIOM_CLAUSES)]
        d = random_gauss_diagram(rng.randint(0, max_chords), rng)
        out.count(name)
        detail = check(d, rng, sabotage)
        if detail:
            out.fail(name, "%s (%s)" % (detail, serialize(d)))
        out.trials += 1
    out.elapsed = time.monotonic() - start
    return out


# -- r3 site generation ----------------------------------------------------

def splice_r3_site(d, rng):
    """Insert a fresh r3 triangle into d at random gaps.

    Returns (diagram, fresh chord ids).  Each of the triangle's three
    two-endpoint runs is inserted contiguously, and the runs keep their
    pattern order around the circle, so the site survives verbatim.
    """
    pattern = rng.choice(sorted(_tables.R3_SIGNED))
    segments = _tables.parse_pattern(pattern, signed=True)
    base = max(d.chord_ids, default=0)
    slots = list(d.slots)
    signs = dict(d.signs)
    gaps = sorted(rng.randrange(len(slots) + 1) for _ in range(3))
    for segment, gap in zip(reversed(segments), reversed(gaps)):
        piece = []
        for cid, role, sign in segment:
            piece.append((base + 1 + cid, role))
            signs[base + 1 + cid] = sign
        slots[gap:gap] = piece
    fresh = (base + 1, base + 2, base + 3)
    return GaussDiagram(tuple(slots), signs), fresh


def r3_move_at(d, chords):
    """The r3 move on d whose site is exactly the given chord triple."""
    want = set(chords)
    for m in enumerate_moves(d, insertion_gaps="none"):
        if m.kind == "r3" and _move_chords(d, m) == want:
            return m
    return None


def r3_relation_audit(trials=1000, seed=2026, max_chords=5):
    """Check the triangle relation: one index is the sum of the other two."""
    rng = random.Random(seed)
    out = AuditSummary("r3-index-relation")
    start = time.monotonic()
    for _ in range(trials):
        d = random_gauss_diagram(rng.randint(0, max_chords), rng)
        d2, fresh = splice_r3_site(d, rng)
        out.count("site-generated")
        if r3_move_at(d2, fresh) is None:
            out.fail("site-generated", serialize(d2))
            out.trials += 1
            continue
        vals = [ind(d2, c) for c in fresh]
        out.count("sum-relation")
        if not any(vals[i] == vals[j] + vals[k]
                   for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1))):
            out.fail("sum-relation", "%s inds=%r" % (serialize(d2), vals))
        out.trials += 1
    out.elapsed = time.monotonic() - start
    return out


# -- projection jump scan ---------------------------------------------------

def _matchings(points):
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points)):
        rest = points[1:k] + points[k + 1:]
        for tail in _matchings(rest):
            yield ((first, points[k]),) + tail


def projection_jump_scan(max_chords=5):
    """First diagram where virtualizing a zero-index chord moves its
    index inside the zero-index projection.

    Scan order is fixed: chord count ascending, then endpoint pairings
    in first-free-point order, then arrow directions, then signs.  The
    virtualization keeps the chord's own flat-class indices on the nose
    (the 0-smoothing reverses, the 1-smoothing swaps components), so a
    hit shows the projected index genuinely depends on the other
    chords.  Returns (diagram, chord, index before, index after) or
    None.
    """
    for n in range(2, max_chords + 1):
        for pairing in _matchings(tuple(range(2 * n))):
            templates = []
            for arrows in itertools.product((0, 1), repeat=n):
                slots = [None] * (2 * n)
                for cid0, ((a, b), bit) in enumerate(zip(pairing, arrows)):
                    over, under = (a, b) if bit == 0 else (b, a)
                    slots[over] = (cid0 + 1, OVER)
                    slots[under] = (cid0 + 1, UNDER)
                templates.append(tuple(slots))
            for slots in templates:
                for signs in itertools.product((1, -1), repeat=n):
                    d = GaussDiagram(slots,
                                     {i + 1: s for i, s in enumerate(signs)})
                    for c in d.chord_ids:
                        if ind(d, c) != 0:
                            continue
                        v = virtualize(d, c)
                        if ind(v, c) != 0:
                            continue
                        before = ind0(d, c)
                        after = ind0(v, c)
                        if before != after:
                            return d, c, before, after
    return None
