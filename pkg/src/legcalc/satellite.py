"""The Legendrian satellite construction, composition, and iteration.

To form a satellite the companion front is replaced by ``n`` vertically
shifted parallel copies (``n`` the pattern's seam strand count) and the
pattern word is spliced into the bundle at a marked cut.  Locally:

* a companion crossing becomes an n x n block of crossings;
* a companion cusp becomes n staggered cusps plus the C(n,2) crossings the
  vertical shift forces while the bundle folds;
* the cut sits on the first edge of the companion traversal (the upper
  strand of its first left cusp), so the pattern is traversed forward.

Correctness is bound to the invariant formulas

    tb(P(K)) = w(P)^2 tb(K) + tb(P)      rot(P(K)) = w(P) rot(K) + rot(P)
    tb(P.Q)  = w(P)^2 tb(Q) + tb(P)      rot(P.Q)  = w(P) rot(Q) + rot(P)

which are asserted on every constructed diagram, plus the single-component
check; the randomized corpus in the test suite exercises both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameter, InconsistentOrientation, TwistedInputRejected
from .events import CROSS, LEFT, RIGHT, L, R, X, MorseEvent
from .front import FrontDiagram
from .pattern import PatternFront, gen_identity


@dataclass(frozen=True)
class NCopyBundle:
    """An n-copy of a companion word with a marked cut for insertion."""

    events: tuple
    n: int
    cut_index: int   # insertion position in the event list
    cut_base: int    # spliced height of the pattern's bottom seam strand

    @property
    def n_crossings(self):
        return sum(1 for e in self.events if e.kind == CROSS)


@dataclass(frozen=True)
class SatelliteResult:
    diagram: object          # FrontDiagram or PatternFront
    twist: int               # companion tb recorded at construction
    provenance: dict         # crossing tag -> origin description


def _tag(base, orig):
    return base if orig is None else f"{base}/{orig}"


def _tile_left(h, n, cusp_idx, prov):
    g = (h - 1) * n + 1
    ev = [L(g + 2 * i) for i in range(n)]
    for i in range(2, n + 1):
        pos, target = g + 2 * (i - 1), g + i - 1
        for cnt, p in enumerate(range(pos - 1, target - 1, -1)):
            t = f"cmp.c{cusp_idx}.{i}.{i - 1 - cnt}"
            prov[t] = ("cusp-shift", cusp_idx, i, i - 1 - cnt)
            ev.append(X(p, tag=t))
    return ev


def _tile_right(h, n, cusp_idx, prov):
    g = (h - 1) * n + 1
    ev = []
    for i in range(1, n + 1):
        pos, target = g + n + i - 1, g + 2 * i - 1
        for cnt, p in enumerate(range(pos - 1, target - 1, -1)):
            t = f"cmp.c{cusp_idx}.{n - cnt}.{i}"
            prov[t] = ("cusp-shift", cusp_idx, n - cnt, i)
            ev.append(X(p, tag=t))
    ev.extend(R(g) for _ in range(n))
    return ev


def _tile_cross(h, n, cross_idx, orig_tag, prov):
    g = (h - 1) * n + 1
    ev = []
    for i in range(n):
        for k in range(n):
            t = _tag(f"cmp.x{cross_idx}.{n - k}.{i + 1}", orig_tag)
            prov[t] = ("companion-crossing", cross_idx, n - k, i + 1, orig_tag)
            ev.append(X(g + n - 1 + i - k, tag=t))
    return ev


def _tile_word(events, n, prov):
    """Tile every companion event; returns a list of per-event tiles."""
    tiles = []
    cusps = crossings = 0
    for ev in events:
        if ev.kind == LEFT:
            tiles.append(_tile_left(ev.height, n, cusps, prov))
            cusps += 1
        elif ev.kind == RIGHT:
            tiles.append(_tile_right(ev.height, n, cusps, prov))
            cusps += 1
        else:
            tiles.append(_tile_cross(ev.height, n, crossings, ev.tag, prov))
            crossings += 1
    return tiles


def _offset_pattern(p: PatternFront, base, prov):
    out = []
    for ev in p.events:
        tag = ev.tag
        if tag is not None:
            prov[tag] = ("pattern", tag)
        out.append(MorseEvent(ev.kind, ev.height + base - 1, tag))
    return out


def n_copy(f: FrontDiagram, n: int) -> NCopyBundle:
    """``n`` vertical parallels of a closed front, cut marked for insertion.

    The raw word alone closes up into n parallel circles; it becomes a knot
    only once a pattern word is spliced in at the cut.
    """
    if n < 1:
        raise BadParameter(f"n_copy needs n >= 1, got {n}")
    prov = {}
    tiles = _tile_word(f.events, n, prov)
    first = f.events[0]
    assert first.kind == LEFT
    events = tuple(e for tile in tiles for e in tile)
    return NCopyBundle(
        events=events,
        n=n,
        cut_index=len(tiles[0]),
        cut_base=first.height * n + 1,
    )


def satellite(p: PatternFront, k: FrontDiagram,
              allow_twist: bool = False) -> SatelliteResult:
    """Splice pattern ``p`` into companion ``k``.

    The result is the tb(k)-twisted satellite; when tb(k) = 0 it is a
    Legendrian representative of the classical untwisted satellite.  A
    nonzero-tb companion is rejected unless ``allow_twist`` is set.
    """
    if k.reversed:
        k = FrontDiagram(k.events)
    if k.tb != 0 and not allow_twist:
        raise TwistedInputRejected(k.tb)
    prov = {}
    n = p.seam_strands
    tiles = _tile_word(k.events, n, prov)
    first = k.events[0]
    pat = _offset_pattern(p, first.height * n + 1, prov)
    events = list(tiles[0]) + pat
    for tile in tiles[1:]:
        events.extend(tile)
    diagram = FrontDiagram(events)
    w = p.winding
    assert diagram.tb == w * w * k.tb + p.tb, "tb formula violated: splice bug"
    assert diagram.rot == w * k.rot + p.rot, "rot formula violated: splice bug"
    return SatelliteResult(diagram=diagram, twist=k.tb, provenance=prov)


def compose(p: PatternFront, q: PatternFront) -> SatelliteResult:
    """The tb(q)-twisted p-satellite of q, as an annular front.

    With tb(q) = 0 this represents the classical operator composition.
    """
    if q.seam_orient[0] != +1:
        raise InconsistentOrientation(
            "compose requires the inner pattern's first seam strand rightward")
    prov = {}
    n = p.seam_strands
    tiles = _tile_word(q.events, n, prov)
    events = _offset_pattern(p, 1, prov)
    for tile in tiles:
        events.extend(tile)
    orient = tuple(qo * po for qo in q.seam_orient for po in p.seam_orient)
    diagram = PatternFront(n * q.seam_strands, orient, events)
    w, wq = p.winding, q.winding
    assert diagram.tb == w * w * q.tb + p.tb, "tb formula violated: splice bug"
    assert diagram.rot == w * q.rot + p.rot, "rot formula violated: splice bug"
    assert diagram.winding == w * wq
    return SatelliteResult(diagram=diagram, twist=q.tb, provenance=prov)


def iterate(p: PatternFront, i: int) -> SatelliteResult:
    """Left fold of :func:`compose`; ``iterate(p, 0)`` is the identity."""
    if i < 0:
        raise BadParameter(f"iterate needs i >= 0, got {i}")
    if i == 0:
        return SatelliteResult(diagram=gen_identity(), twist=0, provenance={})
    result = SatelliteResult(diagram=p, twist=0, provenance={})
    for _ in range(i - 1):
        result = compose(p, result.diagram)
    return result
