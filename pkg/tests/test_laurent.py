import pytest

from legcalc.laurent import LaurentPoly

T = LaurentPoly.term(1, 1)
TINV = LaurentPoly.term(1, -1)
ONE = LaurentPoly.one()


class TestArithmetic:
    def test_normalization_strips_zeros(self):
        p = LaurentPoly((0, 1, 2, 0), offset=-1)
        assert p.min_exp == 0 and p.max_exp == 1
        assert p.to_dict() == {0: 1, 1: 2}

    def test_add_sub(self):
        p = TINV - ONE + T
        assert p.to_dict() == {-1: 1, 0: -1, 1: 1}
        assert (p - p).is_zero()

    def test_mul(self):
        p = (ONE - T) * (ONE - TINV)
        assert p.to_dict() == {-1: -1, 0: 2, 1: -1}

    def test_int_coercion(self):
        assert (T + 1) - 1 == T
        assert 2 * T == LaurentPoly.term(2, 1)

    def test_exact_div(self):
        a = (ONE - T) * (ONE + T + T * T)
        assert a.exact_div(ONE - T) == ONE + T + T * T

    def test_exact_div_failure(self):
        with pytest.raises(ValueError):
            (ONE + T).exact_div(LaurentPoly.term(2))

    def test_exact_div_laurent_units(self):
        a = (TINV - ONE) * LaurentPoly.term(-1, 3)
        assert a.exact_div(LaurentPoly.term(-1, 3)) == TINV - ONE

    def test_substitute_power(self):
        p = TINV - ONE + T
        assert p.substitute_power(2).to_dict() == {-2: 1, 0: -1, 2: 1}
        assert p.substitute_power(-1) == p
        with pytest.raises(ValueError):
            p.substitute_power(0)

    def test_evaluate(self):
        p = TINV - ONE + T
        assert p(1) == 1
        assert p(-1) == -3

    def test_mirror_palindromic(self):
        p = TINV - ONE + T
        assert p.is_palindromic()
        assert not (T + ONE + ONE).is_palindromic()


class TestText:
    CASES = [
        (LaurentPoly.zero(), "0"),
        (ONE, "1"),
        (-ONE, "-1"),
        (TINV - ONE + T, "t^-1 - 1 + t"),
        (LaurentPoly.from_dict({-2: 3, 0: -1, 2: 1}), "3*t^-2 - 1 + t^2"),
        (LaurentPoly.from_dict({1: -2}), "-2*t"),
    ]

    def test_str(self):
        for poly, text in self.CASES:
            assert str(poly) == text

    def test_parse_round_trip(self):
        for poly, text in self.CASES:
            assert LaurentPoly.parse(text) == poly
            assert str(LaurentPoly.parse(str(poly))) == str(poly)
