"""Singular-fiber analysis of jacobian elliptic K3 fibrations.

A fibration is given in Weierstrass form y^2 = x^3 + A(t)x + B(t) with
deg A <= 8 and deg B <= 12, homogeneous degrees (8, 12) over the
projective line. Fiber types at the zeros of the discriminant
Delta = 4A^3 + 27B^2 are read off from the vanishing orders of A, B and
Delta via the residue-characteristic-zero reduction table; places where
(v(A), v(B)) >= (4, 6) are rescaled away before typing. The Euler
numbers of the typed fibers must add up to 24 on a K3, which is enforced
as a final budget check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .polyring import (
    Place,
    RationalPolynomial,
    coprime_refinement,
    squarefree_decompose,
    vanishing_order,
)

DEGREE_A = 8
DEGREE_B = 12
K3_EULER_NUMBER = 24


class ZeroDiscriminantError(ValueError):
    """Raised when 4A^3 + 27B^2 vanishes identically."""


class InconsistentOrdersError(ValueError):
    """Raised when a vanishing-order triple matches no reduction type."""


class K3BudgetError(ValueError):
    """Raised when the fiber Euler numbers do not add up to 24."""

    def __init__(self, entries, euler_sum):
        super().__init__(
            f"fiber Euler numbers add up to {euler_sum}, expected {K3_EULER_NUMBER}")
        self.entries = tuple(entries)
        self.euler_sum = euler_sum


class _Marker:
    __slots__ = ("name",)

    def __init__(self, name: str) -> None:
        self.name = name

    def __repr__(self) -> str:
        return self.name


#: fiber is smooth at the place (discriminant does not vanish)
SMOOTH = _Marker("SMOOTH")
#: model can be rescaled down at the place; not a fiber type
NON_MINIMAL = _Marker("NON_MINIMAL")

_FIXED_KINDS = {
    # kind: (euler, component_count, multiplicities, dynkin)
    "II": (2, 1, (1,), None),
    "III": (3, 2, (1, 1), "A1"),
    "IV": (4, 3, (1, 1, 1), "A2"),
    "IV*": (8, 7, (1, 1, 1, 2, 2, 2, 3), "E6"),
    "III*": (9, 8, (1, 1, 2, 2, 2, 3, 3, 4), "E7"),
    "II*": (10, 9, (1, 2, 2, 3, 3, 4, 4, 5, 6), "E8"),
}


@dataclass(frozen=True)
class FiberType:
    """Kodaira type of a degenerate fiber.

    kind is one of I, I*, II, III, IV, IV*, III*, II*; n is the
    subscript for the two infinite series (n >= 1 for I_n, n >= 0 for
    I_n*) and 0 otherwise.
    """

    kind: str
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind == "I":
            if self.n < 1:
                raise ValueError("I_n requires n >= 1")
        elif self.kind == "I*":
            if self.n < 0:
                raise ValueError("I_n* requires n >= 0")
        elif self.kind in _FIXED_KINDS:
            if self.n != 0:
                raise ValueError(f"{self.kind} carries no index")
        else:
            raise ValueError(f"unknown fiber kind {self.kind!r}")

    @classmethod
    def I(cls, n: int) -> "FiberType":
        return cls("I", n)

    @classmethod
    def I_star(cls, n: int) -> "FiberType":
        return cls("I*", n)

    @classmethod
    def parse(cls, label: str) -> "FiberType":
        label = label.strip()
        if label in _FIXED_KINDS:
            return cls(label)
        star = label.endswith("*")
        body = label[:-1] if star else label
        if body.startswith("I") and body[1:].isdigit():
            return cls("I*" if star else "I", int(body[1:]))
        raise ValueError(f"cannot parse fiber label {label!r}")

    @property
    def label(self) -> str:
        if self.kind == "I":
            return f"I{self.n}"
        if self.kind == "I*":
            return f"I{self.n}*"
        return self.kind

    @property
    def euler_number(self) -> int:
        if self.kind == "I":
            return self.n
        if self.kind == "I*":
            return self.n + 6
        return _FIXED_KINDS[self.kind][0]

    @property
    def component_count(self) -> int:
        if self.kind == "I":
            return self.n
        if self.kind == "I*":
            return self.n + 5
        return _FIXED_KINDS[self.kind][1]

    @property
    def component_multiplicities(self) -> tuple[int, ...]:
        if self.kind == "I":
            return (1,) * self.n
        if self.kind == "I*":
            return (1, 1, 1, 1) + (2,) * (self.n + 1)
        return _FIXED_KINDS[self.kind][2]

    @property
    def dynkin_label(self) -> Optional[str]:
        if self.kind == "I":
            return f"A{self.n - 1}" if self.n >= 2 else None
        if self.kind == "I*":
            return f"D{self.n + 4}"
        return _FIXED_KINDS[self.kind][3]

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class WeierstrassModel:
    """y^2 = x^3 + A(t)x + B(t) with deg A <= 8, deg B <= 12.

    The discriminant is required not to vanish identically for the model
    to define an elliptic fibration; that is checked where the
    discriminant is actually formed, so degenerate pairs can still be
    constructed and reported on.
    """

    A: RationalPolynomial
    B: RationalPolynomial

    def __post_init__(self) -> None:
        if self.A.degree > DEGREE_A:
            raise ValueError(f"deg A = {self.A.degree} exceeds {DEGREE_A}")
        if self.B.degree > DEGREE_B:
            raise ValueError(f"deg B = {self.B.degree} exceeds {DEGREE_B}")

    @classmethod
    def from_json(cls, data: dict) -> "WeierstrassModel":
        return cls(A=RationalPolynomial.from_strings(data.get("A", [])),
                   B=RationalPolynomial.from_strings(data.get("B", [])))

    def to_json(self) -> dict:
        return {"A": self.A.to_strings(), "B": self.B.to_strings()}


@dataclass(frozen=True)
class FiberEntry:
    place: Place
    fiber: FiberType
    orbit_size: int

    def to_json(self) -> dict:
        if self.place.is_infinity:
            place: dict = {"kind": "infinity"}
        else:
            place = {"kind": "finite",
                     "cluster": self.place.cluster.to_strings()}
        return {
            "place": place,
            "type": self.fiber.label,
            "orbit_size": self.orbit_size,
            "euler": self.fiber.euler_number,
            "components": self.fiber.component_count,
        }


@dataclass(frozen=True)
class FiberConfiguration:
    """Typed singular fibers: pairwise coprime places, Euler sum 24."""

    entries: tuple[FiberEntry, ...]

    def euler_sum(self) -> int:
        return sum(e.orbit_size * e.fiber.euler_number for e in self.entries)

    def fiber_count(self) -> int:
        return sum(e.orbit_size for e in self.entries)

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def discriminant(model: WeierstrassModel) -> RationalPolynomial:
    """Exact discriminant 4A^3 + 27B^2; errors if identically zero."""
    delta = 4 * model.A ** 3 + 27 * model.B ** 2
    if delta.is_zero:
        raise ZeroDiscriminantError("discriminant vanishes identically")
    return delta


def fiber_type(v_a, v_b, v_d: int):
    """Fiber type from the vanishing orders of A, B and Delta at a place.

    v_a and v_b may be math.inf (vanishing orders of a zero polynomial);
    v_d must be the order of 4A^3 + 27B^2 at the same place. Returns
    SMOOTH for v_d = 0 and NON_MINIMAL where the model can be rescaled.
    """
    if v_d < 0:
        raise InconsistentOrdersError("negative discriminant order")
    if v_d == 0:
        return SMOOTH
    if v_a == 0 and v_b == 0:
        return FiberType.I(v_d)
    if v_a >= 1 and v_b == 1:
        return FiberType("II")
    if v_a == 1 and v_b >= 2:
        return FiberType("III")
    if v_a >= 2 and v_b == 2:
        return FiberType("IV")
    if v_a >= 2 and v_b >= 3 and v_d == 6:
        return FiberType.I_star(0)
    if v_a == 2 and v_b == 3 and v_d > 6:
        return FiberType.I_star(v_d - 6)
    if v_a >= 3 and v_b == 4:
        return FiberType("IV*")
    if v_a == 3 and v_b >= 5:
        return FiberType("III*")
    if v_a >= 4 and v_b == 5:
        return FiberType("II*")
    if v_a >= 4 and v_b >= 6:
        return NON_MINIMAL
    raise InconsistentOrdersError(
        f"orders (v_A, v_B, v_Delta) = ({v_a}, {v_b}, {v_d}) match no reduction type")


def _order(p: RationalPolynomial, cluster: RationalPolynomial):
    return vanishing_order(p, Place.finite(cluster))


def _cluster_basis(*polys: RationalPolynomial) -> list[RationalPolynomial]:
    # refine against every multiplicity layer so each cluster has one
    # well-defined vanishing-order vector
    parts: list[RationalPolynomial] = []
    for p in polys:
        if not p.is_zero:
            _, layers = squarefree_decompose(p)
            parts.extend(f for f, _ in layers)
    return coprime_refinement(parts)


def configuration(model: WeierstrassModel) -> FiberConfiguration:
    """Full singular-fiber configuration of the model.

    Clusters are the coprime refinement of the square-free layers of A,
    B and Delta. Non-minimal places (finite or at infinity) are rescaled
    away first; every rescaling lowers the homogeneous degrees by
    (4, 6, 12) per cluster degree, so a model that needed one cannot
    meet the K3 Euler budget and is reported via K3BudgetError, with the
    typed entries attached.
    """
    a, b = model.A, model.B
    discriminant(model)  # reject identically-zero discriminant up front
    total_a, total_b = DEGREE_A, DEGREE_B

    # rescale non-minimal finite places: A /= c^4, B /= c^6
    changed = True
    while changed:
        changed = False
        delta = 4 * a ** 3 + 27 * b ** 2
        for cluster in _cluster_basis(a, b, delta):
            v_a = math.inf if a.is_zero else _order(a, cluster)
            v_b = math.inf if b.is_zero else _order(b, cluster)
            if v_a >= 4 and v_b >= 6:
                a = a // cluster ** 4
                b = b // cluster ** 6
                total_a -= 4 * cluster.degree
                total_b -= 6 * cluster.degree
                changed = True
                break

    # rescale non-minimality at infinity by lowering the declared degrees
    while True:
        v_a_inf = math.inf if a.is_zero else total_a - a.degree
        v_b_inf = math.inf if b.is_zero else total_b - b.degree
        if v_a_inf >= 4 and v_b_inf >= 6:
            total_a -= 4
            total_b -= 6
        else:
            break

    delta = 4 * a ** 3 + 27 * b ** 2
    total_d = 3 * total_a
    assert total_d == 2 * total_b, "homogeneous degrees out of step"

    entries = []
    for cluster in _cluster_basis(a, b, delta):
        v_d = _order(delta, cluster)
        if v_d == 0:
            continue
        v_a = math.inf if a.is_zero else _order(a, cluster)
        v_b = math.inf if b.is_zero else _order(b, cluster)
        fiber = fiber_type(v_a, v_b, v_d)
        assert fiber is not NON_MINIMAL, "non-minimal place survived rescaling"
        entries.append(FiberEntry(Place.finite(cluster), fiber, cluster.degree))

    v_d_inf = total_d - delta.degree
    if v_d_inf > 0:
        v_a_inf = math.inf if a.is_zero else total_a - a.degree
        v_b_inf = math.inf if b.is_zero else total_b - b.degree
        fiber = fiber_type(v_a_inf, v_b_inf, v_d_inf)
        if fiber is not SMOOTH:
            entries.append(FiberEntry(Place.infinity(), fiber, 1))

    entries.sort(key=lambda e: e.place.sort_key())
    config = FiberConfiguration(tuple(entries))
    if config.euler_sum() != K3_EULER_NUMBER:
        raise K3BudgetError(entries, config.euler_sum())
    return config


def shioda_tate_contribution(config: FiberConfiguration) -> int:
    """2 (zero section and general fiber) plus the non-identity
    components of every singular fiber."""
    return 2 + sum(e.orbit_size * (e.fiber.component_count - 1)
                   for e in config.entries)
