"""Morse events: the alphabet of front diagram words.

A front is read left to right as a sequence of events acting on a stack of
horizontal strands numbered bottom-up from 1:

* ``L(h)`` -- left cusp: inserts two new adjacent strands at heights h, h+1,
  shifting everything at height >= h upward.  Valid for 1 <= h <= s+1.
* ``R(h)`` -- right cusp: merges the strands at heights h, h+1.
  Valid for 1 <= h <= s-1.
* ``X(h)`` -- crossing: the strands at heights h, h+1 cross transversally.
  Valid for 1 <= h <= s-1.

Crossings may carry a provenance tag, used to locate designated crossings
(clasps) after satellite splicing.
"""

from __future__ import annotations

import re
from typing import NamedTuple

LEFT = "L"
RIGHT = "R"
CROSS = "X"


class MorseEvent(NamedTuple):
    kind: str
    height: int
    tag: str | None = None

    def __str__(self):
        return f"{self.kind}{self.height}"


def L(h: int) -> MorseEvent:
    return MorseEvent(LEFT, h)


def R(h: int) -> MorseEvent:
    return MorseEvent(RIGHT, h)


def X(h: int, tag: str | None = None) -> MorseEvent:
    return MorseEvent(CROSS, h, tag)


_TOKEN = re.compile(r"([LRX])(\d+)$")


def word(text: str) -> tuple[MorseEvent, ...]:
    """Parse a whitespace-separated event word like ``"L1 L3 X2 R3 R1"``."""
    out = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad event token {tok!r}")
        out.append(MorseEvent(m.group(1), int(m.group(2))))
    return tuple(out)


def word_str(events) -> str:
    """Inverse of :func:`word` (tags are not rendered)."""
    return " ".join(str(e) for e in events)
