import pytest

from legcalc.dsl import DslDocument, document_for, parse, serialize
from legcalc.errors import DslSyntaxError, InvalidFront
from legcalc.front import FrontDiagram
from legcalc.pattern import PatternFront, gen_identity, gen_Q, gen_R

TREFOIL_TEXT = "knot t {\n  events: L1 L3 X2 X2 X2 R3 R1;\n}\n"


class TestParse:
    def test_knot(self):
        doc = parse("knot u { events: L1 R1; }")
        assert isinstance(doc["u"], FrontDiagram)
        assert doc["u"].tb == -1

    def test_trefoil(self):
        doc = parse(TREFOIL_TEXT)
        assert doc["t"].tb == 1

    def test_pattern(self):
        doc = parse("pattern p { strands: 1; orient: +; events: ; }")
        assert doc["p"] == gen_identity()

    def test_comments_and_whitespace(self):
        doc = parse("# a comment\nknot u {  events:\n  L1 R1; # trailing\n}")
        assert doc["u"].tb == -1

    def test_validation_delegated(self):
        with pytest.raises(InvalidFront):
            parse("knot bad { events: L1 R3; }")

    def test_syntax_error_position(self):
        with pytest.raises(DslSyntaxError) as exc:
            parse("knot u { events L1 R1; }")
        assert exc.value.line == 1
        assert exc.value.col > 1

    def test_bad_event_token(self):
        with pytest.raises(DslSyntaxError):
            parse("knot u { events: Z1; }")

    def test_duplicate_names(self):
        with pytest.raises(DslSyntaxError):
            parse("knot u { events: L1 R1; } knot u { events: L1 R1; }")

    def test_empty_file(self):
        with pytest.raises(DslSyntaxError):
            parse("   # nothing\n")


class TestSerialize:
    def test_canonical_text_round_trip(self):
        text = serialize(parse(TREFOIL_TEXT))
        assert text == TREFOIL_TEXT
        assert serialize(parse(text)) == text

    def test_whitespace_normalized(self):
        messy = "knot   t{events:L1 L3 X2 X2 X2 R3 R1;}"
        assert serialize(parse(messy)) == TREFOIL_TEXT

    def test_generator_round_trip(self):
        for obj, name in [(gen_Q(3), "q3"), (gen_R(2), "r2"),
                          (gen_identity(), "id")]:
            text = serialize(document_for(name, obj))
            doc = parse(text)
            assert serialize(doc) == text
            got = doc[name]
            assert got.seam_strands == obj.seam_strands
            assert got.seam_orient == obj.seam_orient
            # tags are not part of the text form
            assert [(e.kind, e.height) for e in got.events] == \
                [(e.kind, e.height) for e in obj.events]

    def test_document_object_round_trip(self):
        doc = parse(TREFOIL_TEXT + "pattern p { strands: 1; orient: +; events: ; }")
        assert parse(serialize(doc)) == doc
