"""legcalc: exact combinatorics of Legendrian fronts and satellite operators.

Capabilities
------------
* front diagrams as Morse event words: validation, tb, rot, stabilization
* annular pattern fronts: winding number, invariants, generator families
* the Legendrian satellite construction, operator composition and iteration
* smoothing to oriented planar diagrams, Alexander polynomials via Fox
  calculus, Seifert genus upper bounds, crossing switches
* slice-Bennequin bound chains, genus certification, invariant ledgers and
  distinctness certificates
* a small text DSL and the ``legcalc`` command line tool
"""

from .errors import *  # noqa: F401,F403
from .events import L, R, X, MorseEvent, word, word_str  # noqa: F401
from .front import (  # noqa: F401
    FrontDiagram,
    reverse,
    rotation,
    stabilize,
    thurston_bennequin,
    validate_front,
)
from .pattern import (  # noqa: F401
    PatternFront,
    clasp_switch_target,
    gen_identity,
    gen_P,
    gen_Q,
    gen_R,
    pattern_invariants,
    pattern_reverse,
    pattern_stabilize,
    winding_number,
)
from .satellite import SatelliteResult, compose, iterate, n_copy, satellite  # noqa: F401
from .laurent import LaurentPoly  # noqa: F401
from .pd import PDCode, closure, crossing_switch, seifert_genus_upper, smooth  # noqa: F401
from .alexander import alexander, satellite_alexander  # noqa: F401
from .bounds import (  # noqa: F401
    Certificate,
    CertifiedGenus,
    SBBounds,
    certificate,
    certify_genus,
    ledger,
    lspace_obstruction,
    operator_hypothesis,
    sb_bounds,
)
from .dsl import DslDocument, parse, serialize  # noqa: F401

TREFOIL_WORD = word("L1 L3 X2 X2 X2 R3 R1")
UNKNOT_WORD = word("L1 R1")
