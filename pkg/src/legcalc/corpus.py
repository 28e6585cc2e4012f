"""Randomized diagram corpus for property tests and the selftest command.

Generation is rejection-based: random valid event walks are closed up and
kept only if they validate (single component, consistent orientation).
Everything is driven by an explicit ``random.Random`` so runs reproduce.
"""

from __future__ import annotations

import random

from .errors import LegcalcError, MultiComponent
from .events import L, R, X
from .front import FrontDiagram, Trace
from .pattern import PatternFront


def _random_word(rng, n0, max_events, max_strands):
    """A random event word from n0 strands back to n0 strands, or None."""
    s = n0
    evs = []
    target = rng.randint(min(4, max_events), max_events)
    guard = 0
    while guard < 4 * max_events:
        guard += 1
        need = (s - n0) // 2 if s > n0 else (n0 - s) // 2
        room = target - len(evs)
        if len(evs) >= target and s == n0:
            break
        if room <= need + 1:
            # steer home
            if s > n0:
                evs.append(R(rng.randint(1, s - 1)))
                s -= 2
            elif s < n0:
                evs.append(L(rng.randint(1, s + 1)))
                s += 2
            elif len(evs) >= target:
                break
            elif s >= 2:
                evs.append(X(rng.randint(1, s - 1)))
            else:
                break
            continue
        kinds = []
        if s + 2 <= max_strands:
            kinds.extend("LL")
        if s >= 2:
            kinds.extend("XXXXX")
            if s - 2 >= 0:
                kinds.extend("RR")
        if not kinds:
            return None
        k = rng.choice(kinds)
        if k == "L":
            evs.append(L(rng.randint(1, s + 1)))
            s += 2
        elif k == "R":
            evs.append(R(rng.randint(1, s - 1)))
            s -= 2
        else:
            evs.append(X(rng.randint(1, s - 1)))
    if s != n0 or not evs or len(evs) > max_events + max_strands:
        return None
    return tuple(evs)


def random_front(rng: random.Random, max_events=15, max_strands=6) -> FrontDiagram:
    """A random valid knot front with at most ``max_events`` events."""
    while True:
        evs = _random_word(rng, 0, max_events, max_strands)
        if not evs:
            continue
        try:
            return FrontDiagram(evs)
        except LegcalcError:
            continue


def random_pattern(rng: random.Random, max_seam=3, max_events=15,
                   max_strands=7) -> PatternFront:
    """A random valid pattern; orientation is derived from the traversal."""
    while True:
        n = rng.randint(1, max_seam)
        evs = _random_word(rng, n, max_events, max_strands)
        if evs is None:
            continue
        try:
            trace = Trace(evs, n0=n)
        except LegcalcError:
            continue
        if len(trace.end_edges) != n:
            continue
        trace.close_seam()
        try:
            dirs = trace.orient(trace.start_edges[0], +1)
        except (MultiComponent, LegcalcError):
            continue
        orient = tuple(dirs[e] for e in trace.start_edges)
        try:
            return PatternFront(n, orient, evs)
        except LegcalcError:
            continue


def splice_oracle_run(seed: int, pairs: int, max_events=15, max_seam=3):
    """Check the satellite invariant formulas on random (pattern, front)
    pairs; returns (pairs_checked, failures) where failures is a list of
    human-readable mismatch descriptions.  The construction itself asserts
    the formulas, so failures also surface as exceptions."""
    from .satellite import satellite

    rng = random.Random(seed)
    failures = []
    for k in range(pairs):
        p = random_pattern(rng, max_seam=max_seam, max_events=max_events)
        f = random_front(rng, max_events=max_events)
        try:
            res = satellite(p, f, allow_twist=True)
        except AssertionError as exc:
            failures.append(f"pair {k}: {exc}")
            continue
        d = res.diagram
        w = p.winding
        if d.tb != w * w * f.tb + p.tb or d.rot != w * f.rot + p.rot:
            failures.append(
                f"pair {k}: got ({d.tb}, {d.rot}), expected "
                f"({w * w * f.tb + p.tb}, {w * f.rot + p.rot})")
    return pairs, failures
