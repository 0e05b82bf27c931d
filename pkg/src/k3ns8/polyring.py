"""Dense univariate polynomial arithmetic over the rationals.

Polynomials are stored as tuples of `fractions.Fraction` coefficients in
ascending degree, with trailing zeros trimmed. On top of the ring
operations this module supplies the pieces needed to read off local data
at places of the projective line: monic gcd, Yun square-free
decomposition, vanishing orders (including at infinity, relative to a
declared homogeneous degree), and refinement of a family of square-free
polynomials into a pairwise coprime cluster basis.

A *place* is either a monic square-free non-constant cluster polynomial,
standing for the set of its roots at once, or the point at infinity.
Clusters deliberately stop short of irreducible factorization: any
analysis that is constant on the roots of a cluster (as the fiber-type
analysis is, once clusters are refined against all inputs) never needs
the individual roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

Rational = Union[int, str, Fraction]


def _frac(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class RationalPolynomial:
    """Immutable dense polynomial over Q in one variable (printed as t)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Rational] = ()) -> None:
        coeffs = [_frac(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "RationalPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "RationalPolynomial":
        """The coordinate t."""
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coefficient: Rational = 1) -> "RationalPolynomial":
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "RationalPolynomial":
        return cls(items)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self._coeffs]

    # -- views ---------------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self._coeffs):
            return self._coeffs[degree]
        return Fraction(0)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial((other,))
        return NotImplemented

    def __add__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return RationalPolynomial(
            self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self._coeffs)

    def __sub__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RationalPolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative int")
        result = RationalPolynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other) -> tuple["RationalPolynomial", "RationalPolynomial"]:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quotient = [Fraction(0)] * max(len(self._coeffs) - len(other._coeffs) + 1, 0)
        rem = list(self._coeffs)
        d = other.degree
        lead = other.leading_coefficient
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            quotient[shift] = factor
            for i, b in enumerate(other._coeffs):
                rem[shift + i] -= factor * b
        return RationalPolynomial(quotient), RationalPolynomial(rem)

    def __floordiv__(self, other) -> "RationalPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "RationalPolynomial":
        return divmod(self, other)[1]

    def __call__(self, value: Rational) -> Fraction:
        value = _frac(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(
            i * c for i, c in enumerate(self._coeffs) if i >= 1)

    def monic(self) -> "RationalPolynomial":
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        lead = self.leading_coefficient
        if lead == 1:
            return self
        return RationalPolynomial(c / lead for c in self._coeffs)

    def is_squarefree(self) -> bool:
        if self.is_zero:
            return False
        if self.degree == 0:
            return True
        return gcd(self, self.derivative()).degree == 0

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def sort_key(self) -> tuple:
        return (self.degree, self._coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficient(i)
            if c == 0:
                continue
            if i == 0:
                var = ""
            elif i == 1:
                var = "t"
            else:
                var = f"t^{i}"
            if not var:
                body = str(abs(c))
            elif abs(c) == 1:
                body = var
            else:
                body = f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


@dataclass(frozen=True)
class Place:
    """A place of the projective line: a finite cluster or infinity.

    The finite variant carries a monic, square-free, non-constant
    polynomial; its roots are the geometric points the place stands for,
    so a configuration weights the place by the cluster degree.
    """

    cluster: Optional[RationalPolynomial]

    @classmethod
    def finite(cls, cluster: RationalPolynomial) -> "Place":
        if cluster.is_zero or cluster.degree < 1:
            raise ValueError("finite place needs a non-constant polynomial")
        if cluster.leading_coefficient != 1:
            raise ValueError("finite place cluster must be monic")
        if not cluster.is_squarefree():
            raise ValueError("finite place cluster must be square-free")
        return cls(cluster)

    @classmethod
    def infinity(cls) -> "Place":
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.cluster is None

    @property
    def degree(self) -> int:
        """Number of geometric points: cluster degree, or 1 at infinity."""
        return 1 if self.cluster is None else self.cluster.degree

    def sort_key(self) -> tuple:
        # finite places by (degree, coefficients); infinity last
        if self.cluster is None:
            return (1, ())
        return (0, self.cluster.sort_key())

    def __str__(self) -> str:
        return "infinity" if self.cluster is None else str(self.cluster)


def _integer_coefficients(p: RationalPolynomial) -> list[int]:
    denominator = math.lcm(*(c.denominator for c in p.coefficients))
    return [int(c * denominator) for c in p.coefficients]


def _primitive(coeffs: list[int]) -> list[int]:
    content = math.gcd(*(abs(c) for c in coeffs))
    return [c // content for c in coeffs]


def _pseudo_remainder(a: list[int], b: list[int]) -> list[int]:
    degree_b = len(b) - 1
    lead_b = b[-1]
    a = list(a)
    while a and len(a) - 1 >= degree_b:
        top = a[-1]
        a = [lead_b * c for c in a]
        shift = len(a) - 1 - degree_b
        for i, c in enumerate(b):
            a[shift + i] -= top * c
        while a and a[-1] == 0:
            a.pop()
    return a


def gcd(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Monic greatest common divisor. Errors if both inputs are zero.

    Computed by a primitive pseudo-remainder sequence over the integers,
    which keeps coefficient growth polynomial where the monic Euclidean
    sequence over Q would blow up.
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    a = _primitive(_integer_coefficients(p))
    b = _primitive(_integer_coefficients(q))
    if len(a) < len(b):
        a, b = b, a
    while b:
        remainder = _pseudo_remainder(a, b)
        a, b = b, _primitive(remainder) if remainder else []
    return RationalPolynomial(a).monic()


def squarefree_decompose(
    p: RationalPolynomial,
) -> tuple[Fraction, list[tuple[RationalPolynomial, int]]]:
    """Yun decomposition p = content * prod f_i^{m_i}.

    The f_i are monic, square-free, pairwise coprime and non-constant,
    with distinct multiplicities m_i; the content is the leading
    coefficient of p. Errors on the zero polynomial.
    """
    if p.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    content = p.leading_coefficient
    w = p.monic()
    if w.degree == 0:
        return content, []
    parts: list[tuple[RationalPolynomial, int]] = []
    g = gcd(w, w.derivative())
    b = w // g
    c = w.derivative() // g
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        f = gcd(b, d) if not d.is_zero else b.monic()
        if f.degree > 0:
            parts.append((f, i))
        b = b // f
        c = d // f
        i += 1
    return content, parts


def vanishing_order(p: RationalPolynomial, place: Place,
                    total_degree: Optional[int] = None):
    """Order of vanishing of p at a place; math.inf for p = 0.

    At infinity the order is measured against a declared homogeneous
    degree, which must dominate deg p. At a finite cluster it is the
    largest power of the cluster dividing p.
    """
    if p.is_zero:
        return math.inf
    if place.is_infinity:
        if total_degree is None:
            raise ValueError("order at infinity needs a total degree")
        if total_degree < p.degree:
            raise ValueError(
                f"total degree {total_degree} below polynomial degree {p.degree}")
        return total_degree - p.degree
    order = 0
    cluster = place.cluster
    while True:
        quotient, rem = divmod(p, cluster)
        if not rem.is_zero:
            return order
        order += 1
        p = quotient


def coprime_refinement(
    parts: Iterable[RationalPolynomial],
) -> list[RationalPolynomial]:
    """Gcd-free basis of a family of monic square-free polynomials.

    Returns pairwise coprime monic square-free polynomials such that
    every input is the product of the basis elements dividing it.
    """
    basis: list[RationalPolynomial] = []
    for part in parts:
        if part.is_zero:
            raise ValueError("zero polynomial is not a valid cluster part")
        p = part.monic()
        if p.degree < 1:
            continue
        refined: list[RationalPolynomial] = []
        for q in basis:
            g = gcd(p, q)
            if g.degree == 0:
                refined.append(q)
                continue
            q_rest = q // g
            if q_rest.degree >= 1:
                refined.append(q_rest.monic())
            refined.append(g)
            p = p // g
        if p.degree >= 1:
            refined.append(p.monic())
        basis = refined
    return sorted(set(basis), key=lambda f: f.sort_key())
