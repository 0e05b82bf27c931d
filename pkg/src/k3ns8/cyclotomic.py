"""Exact arithmetic in the degree-4 cyclotomic field generated by a
primitive 8th root of unity.

An element is stored as c0 + c1*z + c2*z^2 + c3*z^3 where z satisfies
z^4 = -1 (so z^8 = 1). Coefficients are `fractions.Fraction` values and
are therefore always reduced, which makes the representation canonical:
two elements are equal iff their four coordinates are equal. The field
contains i = z^2 and -1 = z^4, hence every root of unity of order
dividing 8.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[int, str, Fraction]


def _frac(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Zeta8Element:
    """An element of Q(zeta_8) with exact rational coordinates.

    Instances are immutable by convention; all arithmetic returns new
    objects. Mixed arithmetic with int / Fraction operands coerces the
    rational into the field.
    """

    __slots__ = ("c0", "c1", "c2", "c3")

    def __init__(self, c0: Rational = 0, c1: Rational = 0,
                 c2: Rational = 0, c3: Rational = 0) -> None:
        self.c0 = _frac(c0)
        self.c1 = _frac(c1)
        self.c2 = _frac(c2)
        self.c3 = _frac(c3)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Zeta8Element":
        return cls()

    @classmethod
    def one(cls) -> "Zeta8Element":
        return cls(1)

    @classmethod
    def rational(cls, value: Rational) -> "Zeta8Element":
        return cls(value)

    @classmethod
    def zeta(cls, power: int = 1) -> "Zeta8Element":
        """The root of unity z^power, reduced via z^4 = -1."""
        k = power % 8
        sign = 1 if k < 4 else -1
        coords = [0, 0, 0, 0]
        coords[k % 4] = sign
        return cls(*coords)

    @classmethod
    def from_strings(cls, items) -> "Zeta8Element":
        items = list(items)
        if len(items) != 4:
            raise ValueError("expected a 4-element coordinate array")
        return cls(*items)

    # -- views ---------------------------------------------------------

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coefficients()]

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients())

    @property
    def is_rational(self) -> bool:
        return self.c1 == 0 and self.c2 == 0 and self.c3 == 0

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.c0

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other) -> "Zeta8Element":
        if isinstance(other, Zeta8Element):
            return other
        if isinstance(other, (int, Fraction)):
            return Zeta8Element(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "Zeta8Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Zeta8Element(self.c0 + other.c0, self.c1 + other.c1,
                            self.c2 + other.c2, self.c3 + other.c3)

    __radd__ = __add__

    def __neg__(self) -> "Zeta8Element":
        return Zeta8Element(-self.c0, -self.c1, -self.c2, -self.c3)

    def __sub__(self, other) -> "Zeta8Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Zeta8Element":
        return (-self) + other

    def __mul__(self, other) -> "Zeta8Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a0, a1, a2, a3 = self.coefficients()
        b0, b1, b2, b3 = other.coefficients()
        # convolution folded by z^4 = -1
        return Zeta8Element(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
        )

    __rmul__ = __mul__

    def galois(self, k: int) -> "Zeta8Element":
        """Image under the field automorphism z -> z^k, k odd mod 8."""
        if k % 2 == 0:
            raise ValueError("z -> z^k is a field map only for odd k")
        out = Zeta8Element.zero()
        for idx, c in enumerate(self.coefficients()):
            if c != 0:
                out = out + Zeta8Element.zeta(idx * k) * c
        return out

    def norm(self) -> Fraction:
        """Product of the four Galois conjugates; a rational number."""
        prod = self * self.galois(3) * self.galois(5) * self.galois(7)
        return prod.rational_value()

    def inverse(self) -> "Zeta8Element":
        """Multiplicative inverse, computed by the norm trick."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of 0 in Q(zeta_8)")
        cofactor = self.galois(3) * self.galois(5) * self.galois(7)
        return cofactor * (1 / self.norm())

    def __truediv__(self, other) -> "Zeta8Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Zeta8Element":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Zeta8Element":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Zeta8Element.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def unit_order(self):
        """Least n >= 1 with self^n = 1, or None if not a root of unity.

        Roots of unity in Q(zeta_8) have order dividing 8, so checking
        n up to 8 is exhaustive.
        """
        one = Zeta8Element.one()
        power = self
        for n in range(1, 9):
            if power == one:
                return n
            power = power * self
        return None

    # -- comparisons / hashing -----------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coefficients() == other.coefficients()

    def __hash__(self) -> int:
        return hash(self.coefficients())

    def __repr__(self) -> str:
        return f"Zeta8Element({self.c0!r}, {self.c1!r}, {self.c2!r}, {self.c3!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for idx, c in enumerate(self.coefficients()):
            if c == 0:
                continue
            if idx == 0:
                parts.append(str(c))
            else:
                unit = "zeta8" if idx == 1 else f"zeta8^{idx}"
                if c == 1:
                    term = unit
                elif c == -1:
                    term = f"-{unit}"
                else:
                    term = f"{c}*{unit}"
                parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out
