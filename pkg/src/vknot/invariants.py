"""Polynomial and module-valued invariants built from chord smoothings.

Every invariant here weights the chords of a diagram and collects the
results, either as a Laurent polynomial in the integer indices or as a
formal integer combination of the flat classes produced by smoothing.

Conventions
-----------
* Module elements live in one of three free Z-modules, named by their
  generators: unoriented flat knots (0-smoothings of virtual knots),
  oriented flat knots (0-smoothings of flat knots), and oriented
  2-component flat links with unordered components (1-smoothings).
* Class keys are budget-relative fingerprints, so two elements only
  compare or combine when they were built with the same budget.  A key
  retains one concrete representative diagram, which is what operators
  act on when applied a second time.
* Virtual-knot invariants carry a base term -w(K) at the class of the
  diagram's own shadow (with a disjoint unknot in the link-valued
  case), which is what makes them vanish on classical diagrams.  The
  flat-knot invariants have no base term.
"""

import itertools

from .diagrams import (
    FlatDiagram,
    FlatLinkDiagram,
    GaussDiagram,
    reverse,
    shadow,
    switch_crossing,
    writhe,
)
from .indices import flat_linking_number, flat_sign, ind, ind_flat, project
from .laurent import LaurentPoly
from .moves import DEFAULT_BUDGET, fingerprint
from .smoothing import smooth0, smooth0_flat, smooth1, smooth1_flat

__all__ = [
    "UNORIENTED_FLAT_KNOTS",
    "FLAT_KNOTS",
    "FLAT_LINKS",
    "ModuleElement",
    "writhe_polynomial",
    "dwrithe",
    "lkn_polynomial",
    "wp0_polynomial",
    "flat_writhe",
    "flat_linking_number",
    "F_invariant",
    "L_invariant",
    "flat_module_invariant",
    "apply_flat_operator",
    "finite_type_defect",
    "add",
    "negate",
    "scalar",
    "coefficient_sum",
    "reverse_classes",
    "zero_element",
]

# module tags: which free Z-module an element lives in
UNORIENTED_FLAT_KNOTS = "unoriented-flat-knots"
FLAT_KNOTS = "oriented-flat-knots"
FLAT_LINKS = "flat-links"


class ModuleElement:
    """Formal integer combination of flat knot or link classes.

    Keys are fingerprints: distinct keys whose invariant data agree may
    still secretly be one class the search could not connect, in which
    case the element is an upper-bound form.  No zero coefficients are
    stored.  Arithmetic and equality are only defined between elements
    of the same module built at the same budget.
    """

    __slots__ = ("module", "budget", "_terms", "_reps")

    def __init__(self, module, budget, terms, reps):
        if module not in (UNORIENTED_FLAT_KNOTS, FLAT_KNOTS, FLAT_LINKS):
            raise ValueError("unknown module tag %r" % (module,))
        terms = dict(terms)
        for fp, coeff in terms.items():
            if not coeff:
                raise ValueError("zero coefficient stored at %r" % (fp,))
            if fp not in reps:
                raise ValueError("key %r has no representative" % (fp,))
        self.module = module
        self.budget = budget
        self._terms = terms
        self._reps = {fp: reps[fp] for fp in terms}

    def items(self):
        """(fingerprint, coefficient) pairs sorted by reduced code."""
        return sorted(self._terms.items(),
                      key=lambda kv: (kv[0].reduced_code, kv[0].mode))

    def keys(self):
        return [fp for fp, _ in self.items()]

    def coefficient(self, fp):
        return self._terms.get(fp, 0)

    def representative(self, fp):
        return self._reps[fp]

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _compat(self, other):
        if self.module != other.module:
            raise ValueError(
                "module mismatch: %r vs %r" % (self.module, other.module))
        if self.budget != other.budget:
            raise ValueError("cannot combine elements built at different budgets")

    def __add__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        self._compat(other)
        pairs = [(fp, self._reps[fp], c) for fp, c in self._terms.items()]
        pairs += [(fp, other._reps[fp], c) for fp, c in other._terms.items()]
        return _element(self.module, self.budget, pairs)

    def __sub__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return _element(self.module, self.budget,
                        [(fp, self._reps[fp], -c) for fp, c in self._terms.items()])

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return _element(self.module, self.budget,
                        [(fp, self._reps[fp], k * c) for fp, c in self._terms.items()])

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        self._compat(other)
        return self._terms == other._terms

    def __hash__(self):
        return hash((self.module, self.budget,
                     frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for fp, coeff in self.items():
            body = "[%s]" % fp.reduced_code
            if abs(coeff) != 1:
                body = "%d*%s" % (abs(coeff), body)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "ModuleElement(%s: %s)" % (self.module, self)


def _element(module, budget, pairs):
    """Collect (fingerprint, representative, coeff) triples, dropping zeros."""
    terms = {}
    reps = {}
    for fp, rep, coeff in pairs:
        terms[fp] = terms.get(fp, 0) + coeff
        reps.setdefault(fp, rep)
    terms = {fp: c for fp, c in terms.items() if c}
    return ModuleElement(module, budget, terms, reps)


def zero_element(module, budget=None):
    if budget is None:
        budget = DEFAULT_BUDGET
    return ModuleElement(module, budget, {}, {})


# -- module arithmetic as free functions ---------------------------------

def add(a, b):
    return a + b


def negate(a):
    return -a


def scalar(k, a):
    return k * a


def coefficient_sum(a):
    return sum(a._terms.values())


def reverse_classes(a):
    """Reverse the orientation of every class of a, keeping coefficients.

    Each key's representative is reversed and re-fingerprinted under
    the key's own orientation mode; on unoriented classes this is the
    identity.
    """
    pairs = []
    for fp, coeff in a._terms.items():
        rep = reverse(a._reps[fp])
        pairs.append((fingerprint(rep, fp.mode, a.budget), rep, coeff))
    return _element(a.module, a.budget, pairs)


# -- polynomial invariants ------------------------------------------------

def writhe_polynomial(d):
    """W(t): signs collected by chord index, minus the writhe at t^0.

    Vanishes at t=1 on every diagram and vanishes identically on
    classical diagrams, where every index is 0.
    """
    if not isinstance(d, GaussDiagram):
        raise TypeError("writhe_polynomial needs a virtual knot diagram")
    pairs = [(ind(d, c), d.signs[c]) for c in d.chord_ids]
    pairs.append((0, -writhe(d)))
    return LaurentPoly(("t",), pairs)


def dwrithe(d, n):
    """n-th dwrithe: coefficient of t^n minus coefficient of t^-n in W.

    Changes sign under reversal, so its absolute value does not depend
    on how an unoriented diagram is traversed.  n=0 would always give
    0, so it is rejected.
    """
    if n == 0:
        raise ValueError("dwrithe is identically zero at n=0; pick n != 0")
    w = writhe_polynomial(d)
    return w.coefficient(n) - w.coefficient(-n)


def lkn_polynomial(d, n):
    """Two-variable refinement of W: chord c contributes at t^Ind(c) l^e.

    The l-exponent e is |n-th dwrithe| of the 0-smoothing at c, which
    is orientation-free, so the arbitrary traversal direction of the
    smoothing does not matter.  Setting l=1 recovers W.
    """
    if not isinstance(d, GaussDiagram):
        raise TypeError("lkn_polynomial needs a virtual knot diagram")
    pairs = []
    for c in d.chord_ids:
        e = abs(dwrithe(smooth0(d, c), n))
        pairs.append(((ind(d, c), e), d.signs[c]))
    pairs.append(((0, abs(dwrithe(d, n))), -writhe(d)))
    return LaurentPoly(("t", "l"), pairs)


def wp0_polynomial(d):
    """Writhe polynomial of the zero-index projection of d."""
    return writhe_polynomial(project(d, 0))


def flat_writhe(f):
    """Sum of the signs sgn(Ind(c)) over the chords of a flat knot."""
    if not isinstance(f, FlatDiagram):
        raise TypeError("flat_writhe needs a flat knot diagram")
    return sum(flat_sign(f, c) for c in f.chord_ids)


# -- module-valued invariants ---------------------------------------------

def F_invariant(d, budget=None):
    """Signed count of the 0-smoothing classes of d, as unoriented flat knots.

    Chord c contributes sign(c) at the class of the shadow of the
    0-smoothing at c; the base term -w(d) sits at the class of the
    shadow of d itself.  All keys are unoriented: a 0-smoothing has no
    preferred traversal direction.  The coefficients always sum to 0,
    and the whole element vanishes on classical diagrams.
    """
    if not isinstance(d, GaussDiagram):
        raise TypeError("F_invariant needs a virtual knot diagram")
    if budget is None:
        budget = DEFAULT_BUDGET
    pairs = []
    for c in d.chord_ids:
        rep = shadow(smooth0(d, c))
        pairs.append((fingerprint(rep, "unoriented", budget), rep, d.signs[c]))
    base = shadow(d)
    pairs.append((fingerprint(base, "unoriented", budget), base, -writhe(d)))
    return _element(UNORIENTED_FLAT_KNOTS, budget, pairs)


def L_invariant(d, budget=None):
    """Signed count of the 1-smoothing classes of d, as 2-component flat links.

    Chord c contributes sign(c) at the class of the shadow of the
    1-smoothing at c; the base term -w(d) sits at the class of the
    shadow of d with a disjoint unknot component.  Component order is
    forgotten, orientations are kept.
    """
    if not isinstance(d, GaussDiagram):
        raise TypeError("L_invariant needs a virtual knot diagram")
    if budget is None:
        budget = DEFAULT_BUDGET
    pairs = []
    for c in d.chord_ids:
        rep = shadow(smooth1(d, c))
        pairs.append((fingerprint(rep, "oriented", budget), rep, d.signs[c]))
    base = FlatLinkDiagram((shadow(d).slots, ()), ordered=False)
    pairs.append((fingerprint(base, "oriented", budget), base, -writhe(d)))
    return _element(FLAT_LINKS, budget, pairs)


def flat_module_invariant(f, weight="sign", mode="knot", budget=None):
    """Weighted count of the smoothing classes of a flat knot diagram.

    weight picks the coefficient of chord c: "sign" uses sgn(Ind(c)),
    "index" uses Ind(c) itself.  mode picks the smoothing: "knot" uses
    0-smoothings (oriented flat knots), "link" uses 1-smoothings
    (2-component flat links).  Chords of index 0 contribute nothing
    either way, and there is no base term.
    """
    if not isinstance(f, FlatDiagram):
        raise TypeError("flat_module_invariant needs a flat knot diagram")
    if weight not in ("sign", "index"):
        raise ValueError("weight must be 'sign' or 'index', got %r" % (weight,))
    if mode not in ("knot", "link"):
        raise ValueError("mode must be 'knot' or 'link', got %r" % (mode,))
    if budget is None:
        budget = DEFAULT_BUDGET
    pairs = []
    for c in f.chord_ids:
        w = flat_sign(f, c) if weight == "sign" else ind_flat(f, c)
        if not w:
            continue
        rep = smooth0_flat(f, c) if mode == "knot" else smooth1_flat(f, c)
        pairs.append((fingerprint(rep, "oriented", budget), rep, w))
    tag = FLAT_KNOTS if mode == "knot" else FLAT_LINKS
    return _element(tag, budget, pairs)


def apply_flat_operator(elem, weight="sign", mode="knot", budget=None):
    """Extend flat_module_invariant linearly over an element's classes.

    Only elements generated by oriented flat knots can be fed back in.
    Applying the smoothing operator through stored representatives is
    well defined because the operator is itself a flat invariant.
    """
    if elem.module != FLAT_KNOTS:
        raise ValueError("operator input must live in the flat-knot module")
    if budget is None:
        budget = elem.budget
    tag = FLAT_KNOTS if mode == "knot" else FLAT_LINKS
    total = zero_element(tag, budget)
    for fp, coeff in elem.items():
        part = flat_module_invariant(elem.representative(fp), weight, mode, budget)
        total = total + coeff * part
    return total


def finite_type_defect(d, chords, inv="F", budget=None):
    """Alternating switch sum detecting finite-type behaviour.

    One chord c gives inv(d) - inv(switch(d, c)).  Two chords give the
    alternating sum over the four sign states of the pair, positive
    states counted +, mixed states -.  The two-chord defect is
    identically zero for both invariants; the one-chord defect is not.
    """
    chords = list(chords)
    if len(chords) not in (1, 2):
        raise ValueError("defect takes one or two chords, got %d" % len(chords))
    if len(set(chords)) != len(chords):
        raise ValueError("duplicate chord ids: %r" % (chords,))
    make = {"F": F_invariant, "L": L_invariant}.get(inv)
    if make is None:
        raise ValueError("inv must be 'F' or 'L', got %r" % (inv,))

    if len(chords) == 1:
        return make(d, budget) - make(switch_crossing(d, chords[0]), budget)

    def forced(signs):
        cur = d
        for c, s in zip(chords, signs):
            if cur.signs[c] != s:
                cur = switch_crossing(cur, c)
        return cur

    total = None
    for s1, s2 in itertools.product((1, -1), repeat=2):
        term = make(forced((s1, s2)), budget)
        if s1 != s2:
            term = -term
        total = term if total is None else total + term
    return total
