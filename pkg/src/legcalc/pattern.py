"""Annular fronts: knots in the solid torus, and the operator families.

A pattern front lives in a square with ``n`` marked strand heights on both
vertical edges; the edges are identified, so the word starts and ends with
``n`` strands.  ``seam_orient[i]`` is +1 when the curve crosses the seam
rightward at height i+1.  The winding number is the sum of those signs.

Generator families (all winding number one, all with unknotted closure):

* :func:`gen_identity` -- the core of the solid torus.
* :func:`gen_P` -- the basic clasp gadget on three seam strands, variant
  ``a`` with (tb, rot) = (2, 0), variant ``b`` its double positive
  stabilization with (0, 2).
* :func:`gen_Q` -- a chain of ``j`` clasp gadgets; (tb, rot) = (2j, 0) and
  ``gen_Q(1)`` is exactly ``gen_P("a")``.
* :func:`gen_R` -- a chain of ``j`` mirror-variant gadgets on 2j+1 seam
  strands with 2j tagged clasp crossings; ``gen_R(0)`` is the identity.

The exact words are reconstructions: what is pinned (and covered by tests)
is the invariant tuple, seam strand counts, the designated clasp crossings
and their switch behaviour, and the trivial Alexander polynomial of every
closure.  A one-seam-strand realization of gen_P, as one might first hope
for, cannot exist: a pattern meeting the meridian disk once acts as
connected sum with its closure, so an unknotted closure would force the
identity operator, contradicting tb = 2 through the slice-Bennequin bound.
"""

from __future__ import annotations

import re

from .errors import (
    BadLocation,
    BadParameter,
    InconsistentOrientation,
    InvalidFront,
    MultiComponent,
    NoTaggedClasp,
    OpenFront,
)
from .events import L, R, X, MorseEvent
from .front import Trace, _Invariants, _insert_zigzag


class PatternFront:
    """A validated annular front (a knot in the solid torus)."""

    def __init__(self, seam_strands, seam_orient, events):
        n = int(seam_strands)
        if n < 1:
            raise BadParameter(f"seam strand count must be >= 1, got {n}")
        seam_orient = tuple(int(s) for s in seam_orient)
        if len(seam_orient) != n or any(s not in (1, -1) for s in seam_orient):
            raise BadParameter(f"seam_orient must be {n} signs")
        self.seam_strands = n
        self.seam_orient = seam_orient
        self.events = tuple(events)

        self._trace = Trace(self.events, n0=n)
        if len(self._trace.end_edges) != n:
            raise InvalidFront([OpenFront(len(self._trace.end_edges))])
        self._trace.close_seam()
        try:
            dirs = self._trace.orient(self._trace.start_edges[0], seam_orient[0])
        except MultiComponent as mc:
            raise InvalidFront([mc]) from None
        for i in range(n):
            if dirs[self._trace.start_edges[i]] != seam_orient[i]:
                raise InconsistentOrientation(
                    f"seam strand {i + 1} is traversed against its declared sign")
        self._inv = _Invariants(self._trace, dirs)

    @property
    def writhe(self):
        return self._inv.writhe

    @property
    def n_right_cusps(self):
        return sum(1 for c in self._trace.cusps if c[0] == "R")

    @property
    def n_cusps(self):
        return len(self._trace.cusps)

    @property
    def tb(self):
        return self.writhe - self.n_right_cusps

    @property
    def rot(self):
        return self._inv.rot

    @property
    def winding(self):
        return sum(self.seam_orient)

    @property
    def n_crossings(self):
        return len(self._trace.crossings)

    @property
    def crossing_tags(self):
        return tuple(c[5] for c in self._trace.crossings)

    @property
    def n_edges(self):
        return self._trace.n_edges

    def edge_birth(self, eid):
        return self._trace.birth[eid]

    def edge_direction(self, eid):
        return self._inv.dirs[eid]

    def __eq__(self, other):
        return (isinstance(other, PatternFront)
                and self.seam_strands == other.seam_strands
                and self.seam_orient == other.seam_orient
                and self.events == other.events)

    def __hash__(self):
        return hash((self.seam_strands, self.seam_orient, self.events))

    def __repr__(self):
        return (f"PatternFront(n={self.seam_strands}, w={self.winding}, "
                f"tb={self.tb}, rot={self.rot})")


def winding_number(p: PatternFront) -> int:
    """Signed count of seam crossings; negates if every seam sign flips."""
    return p.winding


def pattern_invariants(p: PatternFront) -> tuple[int, int]:
    """(tb, rot) of the annular front; the seam contributes nothing."""
    return (p.tb, p.rot)


def pattern_reverse(p: PatternFront) -> PatternFront:
    """Reverse the traversal: all seam signs flip, w and rot negate."""
    return PatternFront(p.seam_strands,
                        tuple(-s for s in p.seam_orient),
                        p.events)


def pattern_stabilize(p: PatternFront, sign: int,
                      location: int | None = None) -> PatternFront:
    """Zigzag insertion on a pattern edge; tb -= 1, rot += sign."""
    if sign not in (+1, -1):
        raise BadParameter(f"stabilization sign must be +1 or -1, got {sign}")
    if location is None:
        location = 0
    if not 0 <= location < p.n_edges:
        raise BadLocation(f"no edge {location}")
    events = _insert_zigzag(p.events, p.edge_birth(location),
                            p.edge_direction(location), sign)
    out = PatternFront(p.seam_strands, p.seam_orient, events)
    assert out.tb == p.tb - 1 and out.rot == p.rot + sign
    return out


def stabilized_to_tb_zero(p: PatternFront) -> PatternFront:
    """Positively stabilize until tb = 0 (requires tb >= 0)."""
    if p.tb < 0:
        raise BadParameter("pattern has tb < 0; cannot reach 0 by stabilizing")
    out = p
    for _ in range(p.tb):
        out = pattern_stabilize(out, +1)
    return out


# -- generators ------------------------------------------------------------


def gen_identity() -> PatternFront:
    """The core of the solid torus: one seam strand, no events."""
    return PatternFront(1, (+1,), ())


def _gadget_q(offset, k):
    """Clasp gadget for P and the Q family, on strands o+1..o+3."""
    o = offset
    return [L(3 + o),
            X(1 + o, tag=f"clasp.{k}.a"),
            X(2 + o, tag=f"clasp.{k}.b"),
            X(4 + o),
            R(3 + o)]


def _gadget_r(offset, k):
    """Mirror-variant clasp gadget for the R family."""
    o = offset
    return [L(3 + o),
            X(2 + o, tag=f"clasp.{k}.a"),
            X(4 + o, tag=f"clasp.{k}.b"),
            R(3 + o),
            X(1 + o)]


def _chain(gadget, j):
    """Stack j gadgets on 2j+1 seam strands, alternating orientation."""
    events = []
    orient = []
    for k in range(1, j + 1):
        events.extend(gadget(2 * (k - 1), k))
        block = [1, 1, -1] if k % 2 == 1 else [-1, -1, 1]
        orient.extend(block if k == 1 else block[1:])
    return PatternFront(2 * j + 1, tuple(orient), events)


# two positive zigzags on the incoming bottom seam strand
_P_B_PREFIX = (L(1), R(2), L(1), R(2))


def gen_P(variant: str = "a") -> PatternFront:
    """The clasp pattern: variant a has (tb, rot) = (2, 0), b has (0, 2)."""
    if variant == "a":
        return _chain(_gadget_q, 1)
    if variant == "b":
        base = _chain(_gadget_q, 1)
        return PatternFront(3, base.seam_orient,
                            _P_B_PREFIX + tuple(base.events))
    raise BadParameter(f"gen_P variant must be 'a' or 'b', got {variant!r}")


def gen_Q(j: int) -> PatternFront:
    """Chain of j clasp gadgets: tb = 2j, rot = 0, w = 1."""
    if j < 1:
        raise BadParameter(f"gen_Q needs j >= 1, got {j}")
    return _chain(_gadget_q, j)


def gen_R(j: int) -> PatternFront:
    """Chain of j mirror gadgets on 2j+1 seam strands: tb = 2j, rot = 0.

    Carries 2j tagged clasp crossings; switching the topmost steps the
    family down by one.  gen_R(0) is the identity pattern.
    """
    if j < 0:
        raise BadParameter(f"gen_R needs j >= 0, got {j}")
    if j == 0:
        return gen_identity()
    return _chain(_gadget_r, j)


_CLASP_TAG = re.compile(r"^clasp\.(\d+)\.a$")


def clasp_switch_target(p: PatternFront) -> str:
    """Label of the designated clasp crossing (the topmost clasp).

    Switching that crossing from positive to negative steps the family
    down by one: it detaches the clasp, so the closure loses a genus step.
    Only bare labels count; labels inherited from an inner companion are
    prefixed by the splicing and are not designated.
    """
    best = None
    for tag in p.crossing_tags:
        if tag is None:
            continue
        m = _CLASP_TAG.match(tag)
        if m and (best is None or int(m.group(1)) > best[0]):
            best = (int(m.group(1)), tag)
    if best is None:
        raise NoTaggedClasp("pattern has no designated clasp crossing")
    return best[1]
