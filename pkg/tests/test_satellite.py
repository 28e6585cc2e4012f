import random

import pytest

from legcalc.corpus import random_front, random_pattern
from legcalc.errors import BadParameter, TwistedInputRejected
from legcalc.events import word
from legcalc.front import FrontDiagram, stabilize
from legcalc.pattern import gen_identity, gen_P, gen_Q, stabilized_to_tb_zero
from legcalc.satellite import compose, iterate, n_copy, satellite

TREFOIL = FrontDiagram(word("L1 L3 X2 X2 X2 R3 R1"))


class TestNCopy:
    def test_one_copy_is_identity(self):
        b = n_copy(FrontDiagram(word("L1 R1")), 1)
        assert b.events == FrontDiagram(word("L1 R1")).events

    def test_two_copy_crossing_blocks(self):
        b = n_copy(TREFOIL, 2)
        # each original crossing becomes a 2x2 block
        block = [e for e in b.events
                 if e.tag and e.tag.startswith("cmp.x")]
        assert len(block) == 3 * 4
        # each cusp forces C(2,2) = 1 shift crossing
        folds = [e for e in b.events if e.tag and e.tag.startswith("cmp.c")]
        assert len(folds) == 4

    def test_rejects_zero(self):
        with pytest.raises(BadParameter):
            n_copy(TREFOIL, 0)


class TestSatellite:
    def test_identity_operator(self):
        res = satellite(gen_identity(), TREFOIL, allow_twist=True)
        assert res.diagram.tb == TREFOIL.tb
        assert res.diagram.rot == TREFOIL.rot
        assert res.twist == 1

    def test_twist_rejected_by_default(self):
        with pytest.raises(TwistedInputRejected):
            satellite(gen_P("b"), TREFOIL)

    def test_pb_on_stabilized_trefoil(self):
        k = stabilize(TREFOIL, +1)
        res = satellite(gen_P("b"), k)
        assert (res.diagram.tb, res.diagram.rot) == (0, 3)
        assert res.twist == 0

    def test_formulas_on_random_corpus(self):
        rng = random.Random(11)
        for _ in range(120):
            p = random_pattern(rng, max_events=12)
            k = random_front(rng, max_events=12)
            res = satellite(p, k, allow_twist=True)
            w = p.winding
            assert res.diagram.tb == w * w * k.tb + p.tb
            assert res.diagram.rot == w * k.rot + p.rot

    def test_provenance_injective(self):
        k = stabilize(TREFOIL, +1)
        p = gen_P("b")
        res = satellite(p, k)
        tags = [t for t in res.diagram.crossing_tags if t is not None]
        assert len(tags) == len(set(tags))
        for t in p.crossing_tags:
            if t is not None:
                assert t in tags


class TestCompose:
    def test_identity_left_and_right(self):
        q = gen_P("b")
        assert compose(gen_identity(), q).diagram == q
        assert compose(q, gen_identity()).diagram == q

    def test_pb_squared(self):
        res = compose(gen_P("b"), gen_P("b"))
        assert (res.diagram.tb, res.diagram.rot) == (0, 4)
        assert res.diagram.winding == 1
        assert res.twist == 0

    def test_twist_recorded(self):
        res = compose(gen_P("a"), gen_Q(2))
        assert res.twist == 4

    def test_formulas_on_random_pairs(self):
        rng = random.Random(5)
        for _ in range(60):
            p = random_pattern(rng, max_events=10)
            q = random_pattern(rng, max_events=10)
            res = compose(p, q)
            w = p.winding
            assert res.diagram.tb == w * w * q.tb + p.tb
            assert res.diagram.rot == w * q.rot + p.rot
            assert res.diagram.winding == w * q.winding

    def test_invariant_level_associativity(self):
        rng = random.Random(23)
        pats = [stabilized_to_tb_zero(gen_P("a")),
                stabilized_to_tb_zero(gen_Q(2))]
        for _ in range(6):
            p = random_pattern(rng, max_events=8)
            if p.tb >= 0:
                pats.append(stabilized_to_tb_zero(p))
        for p in pats[:3]:
            for q in pats[:3]:
                for s in pats[:3]:
                    left = compose(compose(p, q).diagram, s).diagram
                    right = compose(p, compose(q, s).diagram).diagram
                    assert (left.tb, left.rot, left.winding) == \
                        (right.tb, right.rot, right.winding)


class TestIterate:
    def test_zero_is_identity(self):
        assert iterate(gen_P("b"), 0).diagram == gen_identity()

    def test_lemma_values(self):
        for i in range(1, 5):
            res = iterate(gen_P("b"), i)
            assert (res.diagram.tb, res.diagram.rot) == (0, 2 * i)

    def test_twisted_iterate_flags(self):
        res = iterate(gen_Q(2), 2)
        assert res.twist == 4
        w = 1
        assert res.diagram.tb == w * gen_Q(2).tb + gen_Q(2).tb  # 4 + 4
        assert res.diagram.rot == 0

    def test_iterate_matches_repeated_application(self):
        k = stabilize(TREFOIL, +1)
        p = gen_P("b")
        via_op = satellite(iterate(p, 3).diagram, k).diagram
        step = k
        for _ in range(3):
            step = satellite(p, step).diagram
        assert (via_op.tb, via_op.rot) == (step.tb, step.rot)

    def test_negative_rejected(self):
        with pytest.raises(BadParameter):
            iterate(gen_P("b"), -1)
