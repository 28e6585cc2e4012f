import random

import pytest

from legcalc.errors import BadLocation, HeightOutOfRange, InvalidFront
from legcalc.events import word, word_str
from legcalc.corpus import random_front
from legcalc.front import (
    FrontDiagram,
    reverse,
    rotation,
    stabilize,
    thurston_bennequin,
    validate_front,
)

UNKNOT = word("L1 R1")
TREFOIL = word("L1 L3 X2 X2 X2 R3 R1")


class TestValidation:
    def test_minimal_unknot(self):
        f = validate_front(UNKNOT)
        assert f.n_cusps == 2
        assert f.n_crossings == 0

    def test_trefoil_single_component(self):
        f = validate_front(TREFOIL)
        assert f.n_crossings == 3
        assert f.n_left_cusps == f.n_right_cusps == 2

    def test_height_out_of_range(self):
        with pytest.raises(InvalidFront) as exc:
            validate_front(word("L1 R2"))
        assert isinstance(exc.value.violations[0], HeightOutOfRange)

    def test_empty_word_rejected(self):
        with pytest.raises(InvalidFront):
            validate_front(())

    def test_open_front_rejected(self):
        with pytest.raises(InvalidFront):
            validate_front(word("L1 L1"))

    def test_multi_component_rejected(self):
        # two nested circles
        with pytest.raises(InvalidFront):
            validate_front(word("L1 L2 R2 R1"))

    def test_nested_cusp_word_is_two_components(self):
        # the naive transcription of the standard trefoil picture with a
        # nested second cusp falls apart into two circles
        with pytest.raises(InvalidFront):
            validate_front(word("L1 L2 X2 X2 X2 R2 R1"))


class TestInvariants:
    def test_unknot_values(self):
        f = validate_front(UNKNOT)
        assert (thurston_bennequin(f), rotation(f)) == (-1, 0)

    def test_trefoil_calibration(self):
        f = validate_front(TREFOIL)
        assert f.writhe == 3
        assert thurston_bennequin(f) == 1
        assert rotation(f) == 0

    def test_tb_orientation_independent(self):
        for w in (UNKNOT, TREFOIL):
            f = validate_front(w)
            assert reverse(f).tb == f.tb

    def test_reverse_negates_rot(self):
        f = stabilize(validate_front(TREFOIL), +1)
        assert f.rot == 1
        assert reverse(f).rot == -1
        assert reverse(reverse(f)) == f


class TestStabilize:
    def test_unknot_stabilize(self):
        f = stabilize(validate_front(UNKNOT), +1)
        assert (f.tb, f.rot) == (-2, 1)

    def test_trefoil_stabilize_to_paper_form(self):
        f = stabilize(validate_front(TREFOIL), +1)
        assert (f.tb, f.rot) == (0, 1)

    def test_opposite_signs_cancel_in_rot(self):
        f = validate_front(TREFOIL)
        g = stabilize(stabilize(f, +1), -1)
        assert (g.tb, g.rot) == (f.tb - 2, f.rot)

    def test_bad_location(self):
        with pytest.raises(BadLocation):
            stabilize(validate_front(UNKNOT), +1, location=99)

    def test_all_edges_all_signs(self):
        f = validate_front(TREFOIL)
        for eid in range(f.n_edges):
            for sign in (+1, -1):
                g = stabilize(f, sign, location=eid)
                assert (g.tb, g.rot) == (f.tb - 1, f.rot + sign)


class TestRandomProperties:
    def test_parity_and_cusp_balance(self):
        rng = random.Random(20240817)
        for _ in range(300):
            f = random_front(rng)
            assert f.n_left_cusps == f.n_right_cusps
            assert (f.tb + f.rot) % 2 == 1
            assert reverse(f).rot == -f.rot

    def test_word_round_trip(self):
        rng = random.Random(7)
        for _ in range(50):
            f = random_front(rng)
            assert word(word_str(f.events)) == tuple(
                e._replace(tag=None) for e in f.events)
