"""Text format for diagram definitions.

Grammar (comments run from ``#`` to end of line)::

    file    := def+
    def     := ("knot" | "pattern") IDENT "{" fields "}"
    knot    fields := "events:" event* ";"
    pattern fields := "strands:" INT ";" "orient:" ("+"|"-")+ ";"
                      "events:" event* ";"
    event   := ("L" | "R" | "X") INT

``events`` may be empty so that the identity pattern has a written form.
Serialization is canonical: parse(serialize(doc)) == doc, and serializing a
parsed canonical text reproduces it byte for byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import DslSyntaxError, LegcalcError
from .events import MorseEvent
from .front import FrontDiagram
from .pattern import PatternFront

_EVENT = re.compile(r"^([LRX])([0-9]+)$")
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass
class DslDocument:
    """Named knot and pattern definitions, in file order."""

    definitions: dict = field(default_factory=dict)

    def __getitem__(self, name):
        return self.definitions[name]

    def __len__(self):
        return len(self.definitions)

    def single(self):
        if len(self.definitions) != 1:
            raise LegcalcError(
                f"expected exactly one definition, found {len(self.definitions)}")
        return next(iter(self.definitions.values()))

    def __eq__(self, other):
        return (isinstance(other, DslDocument)
                and list(self.definitions.items()) == list(other.definitions.items()))


def _tokenize(text):
    tokens = []  # (value, line, col)
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        if ch in "{};:+-":
            tokens.append((ch, line, col))
            col += 1
            i += 1
            continue
        m = re.match(r"[A-Za-z_0-9]+", text[i:])
        if not m:
            raise DslSyntaxError(line, col, f"token (got {ch!r})")
        word = m.group(0)
        tokens.append((word, line, col))
        col += len(word)
        i += len(word)
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def _fail(self, expected):
        if self.pos < len(self.tokens):
            _, line, col = self.tokens[self.pos]
        elif self.tokens:
            _, line, col = self.tokens[-1]
        else:
            line, col = 1, 1
        raise DslSyntaxError(line, col, expected)

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        if self.pos >= len(self.tokens):
            self._fail(expected or "more input")
        tok = self.tokens[self.pos]
        if expected is not None and tok[0] != expected:
            self._fail(f"{expected!r}")
        self.pos += 1
        return tok[0]

    def parse_file(self):
        doc = DslDocument()
        if self.peek() is None:
            self._fail("'knot' or 'pattern'")
        while self.peek() is not None:
            kind = self.take()
            if kind not in ("knot", "pattern"):
                self.pos -= 1
                self._fail("'knot' or 'pattern'")
            name = self.take()
            if not _IDENT.match(name):
                self.pos -= 1
                self._fail("identifier")
            if name in doc.definitions:
                self.pos -= 1
                self._fail(f"unique name (duplicate {name!r})")
            self.take("{")
            if kind == "knot":
                events = self._fields_knot()
                doc.definitions[name] = FrontDiagram(events)
            else:
                strands, orient, events = self._fields_pattern()
                doc.definitions[name] = PatternFront(strands, orient, events)
            self.take("}")
        return doc

    def _label(self, label):
        tok = self.take()
        if tok != label:
            self.pos -= 1
            self._fail(f"'{label}:'")
        self.take(":")

    def _events(self):
        self._label("events")
        out = []
        while self.peek() not in (";", None):
            tok = self.take()
            m = _EVENT.match(tok)
            if not m:
                self.pos -= 1
                self._fail("event like L1, X2, R3")
            out.append(MorseEvent(m.group(1), int(m.group(2))))
        self.take(";")
        return tuple(out)

    def _fields_knot(self):
        return self._events()

    def _fields_pattern(self):
        self._label("strands")
        tok = self.take()
        if not tok.isdigit():
            self.pos -= 1
            self._fail("integer strand count")
        strands = int(tok)
        self.take(";")
        self._label("orient")
        orient = []
        while self.peek() in ("+", "-"):
            orient.append(+1 if self.take() == "+" else -1)
        if not orient:
            self._fail("'+' or '-'")
        self.take(";")
        events = self._events()
        return strands, tuple(orient), events


def parse(text: str) -> DslDocument:
    """Parse DSL text; definitions are validated as they are built."""
    return _Parser(_tokenize(text)).parse_file()


def serialize(doc: DslDocument) -> str:
    """Canonical text for a document (fixed layout, no tags)."""
    chunks = []
    for name, obj in doc.definitions.items():
        ev = " ".join(str(e) for e in obj.events)
        ev = f" {ev}" if ev else ""
        if isinstance(obj, FrontDiagram):
            chunks.append(f"knot {name} {{\n  events:{ev};\n}}\n")
        else:
            orient = " ".join("+" if s > 0 else "-" for s in obj.seam_orient)
            chunks.append(
                f"pattern {name} {{\n  strands: {obj.seam_strands};\n"
                f"  orient: {orient};\n  events:{ev};\n}}\n")
    return "".join(chunks)


def document_for(name: str, obj) -> DslDocument:
    doc = DslDocument()
    doc.definitions[name] = obj
    return doc
