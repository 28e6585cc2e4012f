"""Closed Legendrian fronts and their classical invariants.

The model: a front is a word of Morse events (see :mod:`legcalc.events`)
acting on a stack of horizontal strands.  Between events, strands are edges
of the diagram; cusps join two adjacent edge ends, crossings let the two
strands pass through transversally.  All derived data (orientation of every
edge, cusp classes, crossing signs) comes from a single traversal walk.

Conventions, pinned by the right-trefoil calibration word
``L1 L3 X2 X2 X2 R3 R1`` (writhe +3, tb +1, rot 0):

* at a crossing the locally descending strand is the over-strand;
* a crossing is positive exactly when its two strands are traversed in the
  same horizontal direction;
* rot is half the number of down cusps minus up cusps along the traversal,
  which by default starts at the first left cusp's upper strand heading
  rightward.

Internal encodings: an edge end is the int ``edge * 2 + side`` (side 1 is
the right end); crossing passages have role 0 for the ascending (under)
strand and 1 for the descending (over) strand.
"""

from __future__ import annotations

from .errors import (
    BadLocation,
    BadParameter,
    HeightOutOfRange,
    InvalidFront,
    MultiComponent,
    OpenFront,
)
from .events import CROSS, LEFT, RIGHT, L, R, MorseEvent

# record layouts
# cusp: (kind, time, lower_edge, upper_edge)
# crossing: (time, in_lower, in_upper, out_lower, out_upper, tag)
ASC, DESC = 0, 1


class Trace:
    """Simulation + traversal of an event word over ``n0`` initial strands."""

    __slots__ = ("events", "n0", "birth", "cusps", "crossings", "_conn",
                 "start_edges", "end_edges", "n_edges", "dirs", "steps",
                 "passages")

    def __init__(self, events, n0=0):
        self.events = tuple(events)
        self.n0 = n0
        birth = [(-1, i + 1) for i in range(n0)]
        cusps = []
        crossings = []
        conn = {}
        live = list(range(n0))
        ne = n0
        for t, ev in enumerate(self.events):
            s = len(live)
            h = ev.height
            k = ev.kind
            if k == CROSS:
                if not 1 <= h <= s - 1:
                    raise InvalidFront([HeightOutOfRange(t, ev, s)])
                a = live[h - 1]
                b = live[h]
                ol, ou = ne, ne + 1
                ne += 2
                birth.append((t, h))
                birth.append((t, h + 1))
                live[h - 1] = ol
                live[h] = ou
                idx = len(crossings)
                crossings.append((t, a, b, ol, ou, ev.tag))
                conn[a * 2 + 1] = (ou * 2, 1, idx, ASC)
                conn[ou * 2] = (a * 2 + 1, 1, idx, ASC)
                conn[b * 2 + 1] = (ol * 2, 1, idx, DESC)
                conn[ol * 2] = (b * 2 + 1, 1, idx, DESC)
            elif k == LEFT:
                if not 1 <= h <= s + 1:
                    raise InvalidFront([HeightOutOfRange(t, ev, s)])
                lo, up = ne, ne + 1
                ne += 2
                birth.append((t, h))
                birth.append((t, h + 1))
                live[h - 1:h - 1] = [lo, up]
                cusps.append((LEFT, t, lo, up))
                conn[lo * 2] = (up * 2, 0, 0, 0)
                conn[up * 2] = (lo * 2, 0, 0, 0)
            elif k == RIGHT:
                if not 1 <= h <= s - 1:
                    raise InvalidFront([HeightOutOfRange(t, ev, s)])
                a = live[h - 1]
                b = live[h]
                del live[h - 1:h + 1]
                cusps.append((RIGHT, t, a, b))
                conn[a * 2 + 1] = (b * 2 + 1, 0, 0, 0)
                conn[b * 2 + 1] = (a * 2 + 1, 0, 0, 0)
            else:
                raise ValueError(f"unknown event kind {k!r}")
        self.birth = birth
        self.cusps = cusps
        self.crossings = crossings
        self._conn = conn
        self.start_edges = list(range(n0))
        self.end_edges = live
        self.n_edges = ne

    def close_seam(self):
        """Identify end strand i with start strand i (annular diagrams)."""
        for e_end, e_start in zip(self.end_edges, self.start_edges):
            self._conn[e_end * 2 + 1] = (e_start * 2, 2, 0, 0)
            self._conn[e_start * 2] = (e_end * 2 + 1, 2, 0, 0)

    # -- traversal --------------------------------------------------------

    def walk(self, start_edge, start_dir):
        """Follow the curve; returns (steps, passages).

        steps: [(edge, dir)] with dir +1 rightward;
        passages: [(step_index, crossing_index, role)] in traversal order.
        """
        conn = self._conn
        steps = []
        passages = []
        cur, d = start_edge, start_dir
        while True:
            steps.append((cur, d))
            hop = conn.get(cur * 2 + (1 if d > 0 else 0))
            if hop is None:
                raise InvalidFront([OpenFront(len(self.end_edges))])
            tgt, kind, idx, role = hop
            if kind == 1:
                passages.append((len(steps) - 1, idx, role))
            cur = tgt >> 1
            d = 1 if (tgt & 1) == 0 else -1
            if cur == start_edge and d == start_dir:
                break
        return steps, passages

    def component_count(self, start_edge, start_dir):
        seen = set()
        steps, _ = self.walk(start_edge, start_dir)
        seen.update(e for e, _ in steps)
        count = 1
        for e in range(self.n_edges):
            if e not in seen:
                more, _ = self.walk(e, 1)
                seen.update(x for x, _ in more)
                count += 1
        return count

    def orient(self, start_edge, start_dir):
        """Assign a direction to every edge from one traversal cycle."""
        steps, passages = self.walk(start_edge, start_dir)
        dirs = [0] * self.n_edges
        for e, d in steps:
            dirs[e] = d
        if len(steps) != self.n_edges:
            raise MultiComponent(self.component_count(start_edge, start_dir))
        self.dirs = dirs
        self.steps = steps
        self.passages = passages
        return dirs


class _Invariants:
    """Classical invariant computations over an oriented trace."""

    __slots__ = ("trace", "dirs")

    def __init__(self, trace, dirs):
        self.trace = trace
        self.dirs = dirs

    def crossing_sign(self, rec):
        # the ascending strand keeps its direction through the crossing
        return self.dirs[rec[1]] * self.dirs[rec[2]]

    @property
    def writhe(self):
        dirs = self.dirs
        return sum(dirs[a] * dirs[b] for _, a, b, _, _, _ in self.trace.crossings)

    def cusp_is_up(self, cusp):
        kind, _, lo, up = cusp
        d_lo = self.dirs[lo]
        assert d_lo * self.dirs[up] == -1, "cusp legs must be traversed oppositely"
        if kind == LEFT:
            return d_lo == -1
        return d_lo == +1

    @property
    def rot(self):
        up = sum(1 for c in self.trace.cusps if self.cusp_is_up(c))
        down = len(self.trace.cusps) - up
        return (down - up) // 2


class FrontDiagram:
    """A validated closed Legendrian front (a knot in S^3).

    Immutable; all derived data is computed at construction time.
    """

    def __init__(self, events, reverse_orientation=False):
        events = tuple(events)
        if not events:
            raise InvalidFront([OpenFront(0)])
        self.events = events
        self.reversed = reverse_orientation
        self._trace = Trace(events, n0=0)
        if self._trace.end_edges:
            raise InvalidFront([OpenFront(len(self._trace.end_edges))])
        first = self._trace.cusps[0]
        start, d = first[3], 1
        if reverse_orientation:
            d = -1
        try:
            dirs = self._trace.orient(start, d)
        except MultiComponent as mc:
            raise InvalidFront([mc]) from None
        self._inv = _Invariants(self._trace, dirs)

    # -- invariants -------------------------------------------------------

    @property
    def writhe(self):
        return self._inv.writhe

    @property
    def n_right_cusps(self):
        return sum(1 for c in self._trace.cusps if c[0] == RIGHT)

    @property
    def n_left_cusps(self):
        return sum(1 for c in self._trace.cusps if c[0] == LEFT)

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
    def n_crossings(self):
        return len(self._trace.crossings)

    @property
    def crossing_tags(self):
        return tuple(c[5] for c in self._trace.crossings)

    def edge_direction(self, eid):
        return self._inv.dirs[eid]

    @property
    def n_edges(self):
        return self._trace.n_edges

    def edge_birth(self, eid):
        """(event index, height) where edge ``eid`` was created."""
        return self._trace.birth[eid]

    def __eq__(self, other):
        return (isinstance(other, FrontDiagram)
                and self.events == other.events
                and self.reversed == other.reversed)

    def __hash__(self):
        return hash((self.events, self.reversed))

    def __repr__(self):
        return (f"FrontDiagram({len(self.events)} events, tb={self.tb}, "
                f"rot={self.rot})")


# -- module-level operations (the public surface) -------------------------


def validate_front(events) -> FrontDiagram:
    """Check an event word and return the front with derived data.

    Raises :class:`InvalidFront` listing the violation: a bad event height,
    a word that does not return to zero strands, or a multi-component
    diagram.
    """
    return FrontDiagram(events)


def thurston_bennequin(f: FrontDiagram) -> int:
    """tb = writhe minus number of right cusps; orientation independent."""
    return f.tb


def rotation(f: FrontDiagram) -> int:
    """rot = (down cusps - up cusps) / 2 along the chosen traversal."""
    return f.rot


def reverse(f: FrontDiagram) -> FrontDiagram:
    """Same front, opposite traversal orientation.  Negates rot, keeps tb."""
    return FrontDiagram(f.events, reverse_orientation=not f.reversed)


def zigzag_events(height, kind):
    """The two events of a stabilization zigzag inserted at ``height``.

    ``kind`` "down" dips the strand below itself, "up" bumps it above.
    """
    if kind == "down":
        return [L(height), R(height + 1)]
    return [L(height + 1), R(height)]


def _insert_zigzag(events, birth, direction, sign):
    t, h = birth
    kind = "down" if sign * direction > 0 else "up"
    new = list(events)
    new[t + 1:t + 1] = zigzag_events(h, kind)
    return tuple(new)


def stabilize(f: FrontDiagram, sign: int, location: int | None = None) -> FrontDiagram:
    """Insert a zigzag on an edge: tb drops by 1, rot changes by ``sign``.

    ``location`` is an edge id (creation order); default is edge 0, the
    lower strand of the first left cusp.
    """
    if sign not in (+1, -1):
        raise BadParameter(f"stabilization sign must be +1 or -1, got {sign}")
    if location is None:
        location = 0
    if not 0 <= location < f.n_edges:
        raise BadLocation(f"no edge {location}")
    events = _insert_zigzag(f.events, f.edge_birth(location),
                            f.edge_direction(location), sign)
    out = FrontDiagram(events, reverse_orientation=f.reversed)
    assert out.tb == f.tb - 1 and out.rot == f.rot + sign
    return out
