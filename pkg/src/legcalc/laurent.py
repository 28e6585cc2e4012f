"""Exact integer-coefficient Laurent polynomials in one variable.

Just enough arithmetic for Alexander polynomial work: ring operations,
exact division of ordinary polynomials (for fraction-free elimination),
power substitution t -> t^w, and the symmetrized normalization.
"""

from __future__ import annotations


class LaurentPoly:
    """Immutable Laurent polynomial with int coefficients.

    Stored as (offset, coeffs): the polynomial is
    sum(coeffs[i] * t**(offset + i)) with nonzero end coefficients.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs=(), offset=0):
        coeffs = list(coeffs)
        lo = 0
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        object.__setattr__(self, "coeffs", tuple(coeffs[lo:]))
        object.__setattr__(self, "offset", offset + lo if coeffs[lo:] else 0)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def term(cls, coeff, exp=0):
        return cls((coeff,), exp)

    @classmethod
    def from_dict(cls, d):
        if not d:
            return cls()
        lo = min(d)
        hi = max(d)
        return cls([d.get(e, 0) for e in range(lo, hi + 1)], lo)

    def to_dict(self):
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    @property
    def min_exp(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no exponents")
        return self.offset

    @property
    def max_exp(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no exponents")
        return self.offset + len(self.coeffs) - 1

    @property
    def degree(self):
        """Top exponent; for a symmetrized polynomial this is the span/2."""
        return self.max_exp

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        return (isinstance(other, LaurentPoly)
                and self.offset == other.offset
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.offset, self.coeffs))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.term(other)
        if isinstance(other, LaurentPoly):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.offset + i - lo] += c
        for i, c in enumerate(other.coeffs):
            out[other.offset + i - lo] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.offset)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return LaurentPoly(out, self.offset + other.offset)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by t**k."""
        return LaurentPoly(self.coeffs, self.offset + k)

    def exact_div(self, other):
        """Exact division (raises if the remainder is nonzero)."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        num = list(self.coeffs)
        den = other.coeffs
        if len(num) < len(den):
            raise ValueError("not divisible")
        q = [0] * (len(num) - len(den) + 1)
        for k in range(len(q) - 1, -1, -1):
            c = num[k + len(den) - 1]
            if c % den[-1] != 0:
                raise ValueError("not divisible")
            q[k] = c // den[-1]
            if q[k]:
                for j, d in enumerate(den):
                    num[k + j] -= q[k] * d
        if any(num[:len(den) - 1]):
            raise ValueError("not divisible")
        return LaurentPoly(q, self.offset - other.offset)

    def substitute_power(self, w):
        """t -> t**w; w may be negative but not zero."""
        if w == 0:
            raise ValueError("substitution power must be nonzero")
        return LaurentPoly.from_dict(
            {e * w: c for e, c in self.to_dict().items()})

    def __call__(self, value):
        """Evaluate at an integer (or Fraction) value; value != 0."""
        return sum(c * value ** (self.offset + i)
                   for i, c in enumerate(self.coeffs))

    def mirror(self):
        """t -> t**-1."""
        return LaurentPoly(tuple(reversed(self.coeffs)), -self.max_exp)

    def is_palindromic(self):
        return self == self.mirror()

    # -- text form -----------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.offset + i
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                t = "t" if e == 1 else f"t^{e}"
                body = t if mag == 1 else f"{mag}*{t}"
            parts.append((c < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    __repr__ = __str__

    @classmethod
    def parse(cls, text):
        """Inverse of str(); accepts forms like ``"t^-1 - 1 + t"``."""
        text = text.strip()
        if text == "0":
            return cls()
        d = {}
        text = text.replace("- ", "-").replace("+ ", "")
        for tok in text.split():
            sign = 1
            if tok.startswith("-"):
                sign, tok = -1, tok[1:]
            if "*" in tok:
                mag, tpart = tok.split("*")
                coeff = sign * int(mag)
            elif tok.startswith("t"):
                coeff, tpart = sign, tok
            else:
                coeff, tpart = sign * int(tok), None
            if tpart is None:
                exp = 0
            elif tpart == "t":
                exp = 1
            else:
                exp = int(tpart[2:])
            d[exp] = d.get(exp, 0) + coeff
        return cls.from_dict(d)
