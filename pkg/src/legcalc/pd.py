"""Forgetting the Legendrian structure: oriented planar diagrams.

A PDCode records the knot as the cyclic sequence of its crossing visits
(each crossing is visited once on the over strand and once on the under
strand), plus a sign and optional provenance tag per crossing.  Arcs in the
Wirtinger sense (segments between consecutive underpasses) are derived.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import AlreadyNegative, UnknownLabel
from .front import FrontDiagram
from .pattern import PatternFront


@dataclass(frozen=True)
class PDCrossing:
    over: int        # arc running over
    under_in: int    # arc ending underneath
    under_out: int   # arc starting underneath
    sign: int
    tag: str | None


class PDCode:
    """Oriented planar diagram of a knot."""

    def __init__(self, passages, signs, tags):
        # passages: cyclic tuple of (crossing_id, is_over)
        self.passages = tuple(passages)
        self.signs = tuple(signs)
        self.tags = tuple(tags)
        assert len(self.passages) == 2 * len(self.signs)

    @property
    def n_crossings(self):
        return len(self.signs)

    @property
    def writhe(self):
        return sum(self.signs)

    @property
    def n_arcs(self):
        return max(1, self.n_crossings)

    def _arc_layout(self):
        """Assign arcs: arc i starts right after the i-th underpass."""
        unders = [p for p, (_, over) in enumerate(self.passages) if not over]
        arc_at = {}
        if not unders:
            return {}, []
        m = len(unders)
        for i in range(m):
            start = unders[i]
            stop = unders[(i + 1) % m]
            p = (start + 1) % len(self.passages)
            while True:
                arc_at[p] = i
                if p == stop:
                    break
                p = (p + 1) % len(self.passages)
        return arc_at, unders

    @property
    def crossings(self):
        """Arc-level crossing records (PDCrossing per crossing)."""
        arc_at, unders = self._arc_layout()
        m = len(unders)
        under_pos = {}
        over_pos = {}
        for p, (c, is_over) in enumerate(self.passages):
            (over_pos if is_over else under_pos)[c] = p
        out = []
        for c in range(self.n_crossings):
            pu = under_pos[c]
            i = unders.index(pu)
            out.append(PDCrossing(
                over=arc_at[over_pos[c]],
                under_in=(i - 1) % m,
                under_out=i,
                sign=self.signs[c],
                tag=self.tags[c],
            ))
        return out

    def seifert_circle_count(self):
        """Circles of the oriented resolution at every crossing."""
        m = len(self.passages)
        if m == 0:
            return 1
        parent = list(range(m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            parent[find(a)] = find(b)

        pos = {}
        for p, (c, is_over) in enumerate(self.passages):
            pos.setdefault(c, []).append(p)
        for c, (p1, p2) in pos.items():
            union((p1 - 1) % m, p2)
            union((p2 - 1) % m, p1)
        return len({find(i) for i in range(m)})

    def to_json_obj(self):
        crossings = []
        for rec in self.crossings:
            crossings.append({
                "arcs": [rec.over, rec.under_in, rec.over, rec.under_out],
                "over": 0 if rec.sign > 0 else 2,
                "sign": rec.sign,
                "tag": rec.tag,
            })
        return {
            "crossings": crossings,
            "orientation": list(range(self.n_arcs)) if self.n_crossings else [0],
        }

    def __repr__(self):
        return f"PDCode({self.n_crossings} crossings, writhe={self.writhe})"


def _smooth_traced(trace, dirs) -> PDCode:
    """Build the PDCode from an oriented traversal."""
    passages = [(c_idx, role == 1) for _, c_idx, role in trace.passages]
    signs = []
    tags = []
    for _, a, b, _, _, tag in trace.crossings:
        signs.append(dirs[a] * dirs[b])
        tags.append(tag)
    return PDCode(passages, signs, tags)


def smooth(f: FrontDiagram) -> PDCode:
    """Smooth the cusps of a closed front; writhe is preserved."""
    pd = _smooth_traced(f._trace, f._inv.dirs)
    assert pd.writhe == f.writhe
    return pd


def closure(p: PatternFront) -> PDCode:
    """The knot obtained by closing the pattern with n parallel seam arcs.

    The closure arcs add no crossings and no twist: the identity pattern
    closes to the round unknot.
    """
    return _smooth_traced(p._trace, p._inv.dirs)


def crossing_switch(d: PDCode, label: str) -> PDCode:
    """Flip over/under at the tagged crossing; writhe changes by -2 sign."""
    try:
        c = d.tags.index(label)
    except ValueError:
        raise UnknownLabel(f"no crossing tagged {label!r}") from None
    if d.signs[c] < 0:
        warnings.warn(f"crossing {label!r} is already negative", AlreadyNegative)
    passages = [(ci, (not over) if ci == c else over)
                for ci, over in d.passages]
    signs = list(d.signs)
    signs[c] = -signs[c]
    return PDCode(passages, signs, d.tags)


def seifert_genus_upper(d: PDCode) -> int:
    """(c - s + 1) / 2 for s Seifert circles: the genus of this diagram's
    Seifert surface, an upper bound for the knot genus."""
    c = d.n_crossings
    s = d.seifert_circle_count()
    assert (c - s + 1) % 2 == 0, "parity violated: not a knot diagram"
    return (c - s + 1) // 2
