"""Exhaustive small-diagram census with JSONL persistence.

Diagrams are enumerated chord count by chord count, deduplicated by
canonical code (so each record is one diagram up to rotation, not one
knot class), and written one JSON object per line.  Records contain
only exact integers and strings, and the enumeration order is fixed,
so a census file is reproducible byte for byte.
"""

import itertools
import json

from . import __version__
from .diagrams import OVER, UNDER, GaussDiagram, parse_gauss_code, shadow, writhe
from .indices import carter_genus
from .invariants import (
    F_invariant,
    L_invariant,
    dwrithe,
    writhe_polynomial,
    wp0_polynomial,
)
from .moves import DEFAULT_BUDGET, canonical_code

__all__ = [
    "CENSUS_CAP",
    "enumerate_gauss_diagrams",
    "census_record",
    "write_census",
    "read_census",
]

# (2n-1)!! pairings x 2^n arrows x 2^n signs grows fast; five chords is
# just under a million raw diagrams, which is the desk-scale ceiling
CENSUS_CAP = 5


def _matchings(points):
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points)):
        rest = points[1:k] + points[k + 1:]
        for tail in _matchings(rest):
            yield ((first, points[k]),) + tail


def enumerate_gauss_diagrams(max_chords):
    """All virtual knot diagrams with at most max_chords chords.

    Yields (code, diagram) pairs sorted by chord count then code, one
    per rotation class.
    """
    if max_chords > CENSUS_CAP:
        raise ValueError(
            "census is capped at %d chords, got %d" % (CENSUS_CAP, max_chords))
    for n in range(max_chords + 1):
        seen = set()
        for pairing in _matchings(tuple(range(2 * n))):
            for arrows in itertools.product((0, 1), repeat=n):
                slots = [None] * (2 * n)
                for cid0, ((a, b), bit) in enumerate(zip(pairing, arrows)):
                    over, under = (a, b) if bit == 0 else (b, a)
                    slots[over] = (cid0 + 1, OVER)
                    slots[under] = (cid0 + 1, UNDER)
                for signs in itertools.product((1, -1), repeat=n):
                    d = GaussDiagram(tuple(slots),
                                     {i + 1: s for i, s in enumerate(signs)})
                    code = canonical_code(d, "oriented")
                    if code not in seen:
                        seen.add(code)
        for code in sorted(seen):
            yield code, parse_gauss_code(code, "virtual-knot")


def _module_summary(elem):
    coeffs = [c for _, c in elem.items()]
    return {"keys": len(elem), "coeffs": coeffs}


def census_record(d, budget=None, seed=None):
    """One JSON-ready dict of every census invariant of d."""
    if budget is None:
        budget = DEFAULT_BUDGET
    return {
        "code": canonical_code(d, "oriented"),
        "chords": d.n,
        "writhe": writhe(d),
        "W": str(writhe_polynomial(d)),
        "dwrithe": [dwrithe(d, n) for n in (1, 2, 3)],
        "wp0": str(wp0_polynomial(d)),
        "shadow_genus": carter_genus(shadow(d)),
        "F": _module_summary(F_invariant(d, budget)),
        "L": _module_summary(L_invariant(d, budget)),
        "meta": {
            "seed": seed,
            "budget": [budget.max_nodes, budget.max_extra],
            "version": __version__,
        },
    }


def write_census(max_chords, out_path, budget=None, seed=None):
    """Write one census record per line; returns the record count."""
    count = 0
    with open(out_path, "w") as fh:
        for _, d in enumerate_gauss_diagrams(max_chords):
            record = census_record(d, budget, seed)
            fh.write(json.dumps(record, sort_keys=True) + "\n")
            count += 1
    return count


def read_census(path):
    with open(path) as fh:
        return [json.loads(line) for line in fh if line.strip()]
