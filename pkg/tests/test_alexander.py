import random

import pytest

from legcalc.alexander import (
    alexander,
    alexander_raw,
    normalize_alexander,
    satellite_alexander,
)
from legcalc.corpus import random_front, random_pattern
from legcalc.errors import BadWinding
from legcalc.events import word
from legcalc.front import FrontDiagram, stabilize
from legcalc.laurent import LaurentPoly
from legcalc.pattern import gen_P, gen_Q, gen_R
from legcalc.pd import closure, seifert_genus_upper, smooth
from legcalc.satellite import satellite

ONE = LaurentPoly.one()
TREF = LaurentPoly.parse("t^-1 - 1 + t")
TREFOIL = FrontDiagram(word("L1 L3 X2 X2 X2 R3 R1"))


class TestBasics:
    def test_unknot(self):
        assert alexander(smooth(FrontDiagram(word("L1 R1")))) == ONE

    def test_trefoil(self):
        assert alexander(smooth(TREFOIL)) == TREF

    def test_stabilization_invariance(self):
        f = TREFOIL
        for sign in (+1, -1):
            assert alexander(smooth(stabilize(f, sign))) == TREF

    def test_figure_eightish_normalization(self):
        rng = random.Random(2)
        for _ in range(30):
            d = alexander(smooth(random_front(rng)))
            assert d(1) == 1
            assert d.is_palindromic()


class TestMinorInvariance:
    def test_dropping_any_arc_agrees_up_to_units(self):
        pd = smooth(TREFOIL)
        base = normalize_alexander(alexander_raw(pd))
        for arc in range(pd.n_arcs):
            assert normalize_alexander(alexander_raw(pd, drop_arc=arc)) == base

    def test_random_diagram_minor_invariance(self):
        rng = random.Random(9)
        for _ in range(10):
            f = random_front(rng, max_events=12)
            pd = smooth(f)
            if pd.n_crossings < 2:
                continue
            base = normalize_alexander(alexander_raw(pd))
            for arc in range(pd.n_arcs):
                got = normalize_alexander(alexander_raw(pd, drop_arc=arc))
                assert got == base


class TestDegreeBound:
    def test_degree_at_most_seifert_genus(self):
        rng = random.Random(31)
        for _ in range(40):
            f = random_front(rng)
            pd = smooth(f)
            d = alexander(pd)
            deg = 0 if d.is_zero() else d.max_exp
            assert deg <= seifert_genus_upper(pd)


class TestSatelliteFormula:
    def test_unknot_pattern_factor(self):
        assert satellite_alexander(ONE, TREF, 1) == TREF

    def test_unknot_companion_factor(self):
        assert satellite_alexander(TREF, ONE, 1) == TREF

    def test_w_zero_rejected(self):
        with pytest.raises(BadWinding):
            satellite_alexander(ONE, TREF, 0)

    def test_two_route_equality_families(self):
        k = stabilize(TREFOIL, +1)
        for p in (gen_P("b"), ):
            direct = alexander(smooth(satellite(p, k).diagram))
            dp = alexander(closure(p))
            dk = alexander(smooth(k))
            assert direct == satellite_alexander(dp, dk, p.winding)

    def test_two_route_equality_random_w_one(self):
        # winding +1 and -1 patterns against tb = 0 companions
        rng = random.Random(77)
        t25 = FrontDiagram(word("L1 L3 X2 X2 X2 X2 X2 R3 R1"))
        companions = [stabilize(TREFOIL, +1)]
        k = t25
        while k.tb > 0:
            k = stabilize(k, +1)
        companions.append(k)
        checked = 0
        attempts = 0
        while checked < 6 and attempts < 500:
            attempts += 1
            p = random_pattern(rng, max_events=8)
            if abs(p.winding) != 1:
                continue
            k = companions[checked % len(companions)]
            direct = alexander(smooth(satellite(p, k).diagram))
            dp = alexander(closure(p))
            dk = alexander(smooth(k))
            assert direct == satellite_alexander(dp, dk, p.winding)
            checked += 1
        assert checked >= 4
