"""Randomized audits at unit scale; the full runs live in the
acceptance module."""

import random

from vknot import apply_move, parse_gauss_code, random_gauss_diagram, serialize
from vknot.harness import (
    AXIOM_CLAUSES,
    AuditSummary,
    axiom_audit,
    move_invariance_suite,
    projection_jump_scan,
    r3_move_at,
    r3_relation_audit,
    random_move,
    splice_r3_site,
)
from vknot.indices import ind
from vknot.invariants import writhe_polynomial


def test_summary_bookkeeping():
    s = AuditSummary("demo")
    for _ in range(3):
        s.count("a")
    s.count("b")
    s.fail("b", "boom")
    assert s.counters == {"a": 3, "b": 1}
    assert s.violations == 1
    assert not s.ok()
    assert any("demo" in line for line in s.lines())
    assert any("FAIL" in line for line in s.lines())


def test_failure_list_is_capped():
    s = AuditSummary("demo")
    for i in range(50):
        s.fail("x", "case %d" % i)
    assert s.violations == 50
    assert len(s.failures) == 20


def test_random_move_is_applicable():
    rng = random.Random(3)
    for _ in range(60):
        d = random_gauss_diagram(rng.randint(0, 5), rng)
        m = random_move(d, rng)
        apply_move(d, m)  # must not raise


def test_move_invariance_small_run_is_clean():
    s = move_invariance_suite(trials=300, seed=17, max_chords=5)
    assert s.violations == 0
    assert s.trials == 300
    assert s.counters["writhe_polynomial"] > 0
    assert s.counters["flat_writhe"] > 0


def test_move_invariance_catches_a_crossing_switch():
    s = move_invariance_suite(trials=80, seed=17, max_chords=5,
                              sabotage="sign-flip")
    assert s.violations > 0


def test_axiom_audit_small_run_is_clean():
    s = axiom_audit(trials=250, seed=17, max_chords=5)
    assert s.violations == 0
    assert s.trials == 250
    assert sum(s.counters.values()) == s.trials
    assert set(s.counters) == {name for name, _ in AXIOM_CLAUSES}


def test_axiom_audit_is_blind_to_crossing_switches():
    # both smoothing indices factor through the shadow, so flipping a
    # sign can never violate the axioms; only an arrow flip can
    s = axiom_audit(trials=80, seed=17, max_chords=5, sabotage="sign-flip")
    assert s.violations == 0
    s = axiom_audit(trials=80, seed=17, max_chords=5, sabotage="arrow-flip")
    assert s.violations > 0


def test_splice_r3_site_yields_a_live_site():
    rng = random.Random(23)
    for _ in range(40):
        d = random_gauss_diagram(rng.randint(0, 4), rng)
        d2, fresh = splice_r3_site(d, rng)
        assert d2.n == d.n + 3
        m = r3_move_at(d2, fresh)
        assert m is not None
        out = apply_move(d2, m)
        assert writhe_polynomial(out) == writhe_polynomial(d2)


def test_r3_relation_small_run():
    s = r3_relation_audit(trials=60, seed=5, max_chords=4)
    assert s.violations == 0
    assert s.counters["sum-relation"] == 60


def test_projection_jump_scan_recovers_the_witness():
    d, chord, before, after = projection_jump_scan(4)
    assert serialize(d) == "O1+O2+U1+O3+U2+O4+U3+U4+"
    assert chord == 2
    assert (before, after) == (1, 0)
    assert ind(d, chord) == 0
