"""Smoothing-based chord indices and invariants of virtual knots.

Gauss-diagram data types, the generalized Reidemeister move engine,
chord smoothings, integer and flat-class chord indices, and the
polynomial and module-valued invariants built from them, with a
randomized audit harness and a small-diagram census.
"""

__version__ = "0.1.0"

from .diagrams import (
    DiagramError,
    FlatDiagram,
    FlatLinkDiagram,
    GaussCodeError,
    GaussDiagram,
    UnknownChordError,
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
from .indices import (
    carter_genus,
    flat_linking_number,
    flat_sign,
    ind,
    ind0,
    ind_flat,
    index_report,
    project,
)
from .invariants import (
    F_invariant,
    L_invariant,
    ModuleElement,
    apply_flat_operator,
    coefficient_sum,
    dwrithe,
    finite_type_defect,
    flat_module_invariant,
    flat_writhe,
    lkn_polynomial,
    reverse_classes,
    wp0_polynomial,
    writhe_polynomial,
)
from .laurent import LaurentPoly
from .moves import (
    Budget,
    DEFAULT_BUDGET,
    Fingerprint,
    MoveApplication,
    MoveError,
    Verdict,
    apply_move,
    canonical_code,
    enumerate_moves,
    equivalent,
    fingerprint,
    invert_move,
    replay_witness,
    simplify,
)
from .smoothing import smooth0, smooth0_flat, smooth1, smooth1_flat

__all__ = [
    "__version__",
    "DiagramError", "GaussCodeError", "UnknownChordError", "MoveError",
    "GaussDiagram", "FlatDiagram", "VirtualLinkDiagram", "FlatLinkDiagram",
    "parse_gauss_code", "serialize", "lattice_diagram",
    "kind_of", "random_gauss_diagram", "random_flat_diagram",
    "reverse", "mirror", "switch_crossing", "virtualize", "connected_sum",
    "shadow", "positive_lift", "writhe",
    "smooth0", "smooth1", "smooth0_flat", "smooth1_flat",
    "ind", "ind_flat", "flat_sign", "ind0", "project", "index_report",
    "carter_genus", "flat_linking_number",
    "LaurentPoly",
    "writhe_polynomial", "dwrithe", "lkn_polynomial", "wp0_polynomial",
    "flat_writhe", "F_invariant", "L_invariant", "flat_module_invariant",
    "apply_flat_operator", "finite_type_defect", "ModuleElement",
    "coefficient_sum", "reverse_classes",
    "Budget", "DEFAULT_BUDGET", "Fingerprint", "MoveApplication", "Verdict",
    "enumerate_moves", "apply_move", "invert_move", "canonical_code",
    "fingerprint", "equivalent", "simplify", "replay_witness",
]
