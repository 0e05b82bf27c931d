"""Monomial automorphisms of Weierstrass models.

An automorphism here is a diagonal scaling (x, y, t) -> (lx*x, ly*y,
lt*t) with each scaling a root of unity in Q(zeta_8). The module checks
whether a scaling preserves a given model, computes its multiplier on
the holomorphic 2-form dt^dx/2y, tracks the induced permutation of the
singular fibers on the base, classifies local fixed-point types by
their eigenvalue exponents, and verifies the translation by a 2-torsion
section by sampling over a prime finite field.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Optional

from .cyclotomic import Zeta8Element
from .kodaira import FiberConfiguration, WeierstrassModel
from .polyring import Place, RationalPolynomial


@dataclass(frozen=True)
class MonomialAutomorphism:
    """Diagonal scalings (lambda_x, lambda_y, lambda_t), all roots of unity."""

    lambda_x: Zeta8Element
    lambda_y: Zeta8Element
    lambda_t: Zeta8Element

    def __post_init__(self) -> None:
        for name in ("lambda_x", "lambda_y", "lambda_t"):
            if getattr(self, name).unit_order() is None:
                raise ValueError(f"{name} must be a root of unity")

    def compose(self, other: "MonomialAutomorphism") -> "MonomialAutomorphism":
        return MonomialAutomorphism(self.lambda_x * other.lambda_x,
                                    self.lambda_y * other.lambda_y,
                                    self.lambda_t * other.lambda_t)

    def power(self, n: int) -> "MonomialAutomorphism":
        return MonomialAutomorphism(self.lambda_x ** n,
                                    self.lambda_y ** n,
                                    self.lambda_t ** n)

    @classmethod
    def from_json(cls, data: dict) -> "MonomialAutomorphism":
        return cls(Zeta8Element.from_strings(data["lambda_x"]),
                   Zeta8Element.from_strings(data["lambda_y"]),
                   Zeta8Element.from_strings(data["lambda_t"]))

    def to_json(self) -> dict:
        return {"lambda_x": self.lambda_x.to_strings(),
                "lambda_y": self.lambda_y.to_strings(),
                "lambda_t": self.lambda_t.to_strings()}


COND_SCALING = "lambda_x^3 = lambda_y^2"
COND_A = "A(lambda_t*t) = (lambda_y^2/lambda_x)*A(t)"
COND_B = "B(lambda_t*t) = lambda_y^2*B(t)"


@dataclass(frozen=True)
class PreservationCertificate:
    preserved: bool
    conditions: dict

    @property
    def failed_conditions(self) -> list[str]:
        return [name for name, ok in self.conditions.items() if not ok]

    def to_json(self) -> dict:
        return {"preserved": self.preserved, "conditions": dict(self.conditions)}


def _twist_matches(p: RationalPolynomial, lam_t: Zeta8Element,
                   multiplier: Zeta8Element) -> bool:
    # p(lam_t * t) == multiplier * p(t) coefficient-wise: for every
    # nonzero coefficient index i, lam_t^i must equal the multiplier
    power = Zeta8Element.one()
    for i, c in enumerate(p.coefficients):
        if c != 0 and power != multiplier:
            return False
        power = power * lam_t
    return True


def check_preserves(model: WeierstrassModel,
                    auto: MonomialAutomorphism) -> PreservationCertificate:
    """Exact test that the scaling maps the model to itself.

    The three conditions are checked as identities in Q(zeta_8); the
    certificate names which ones fail.
    """
    ly2 = auto.lambda_y ** 2
    conditions = {
        COND_SCALING: auto.lambda_x ** 3 == ly2,
        COND_A: _twist_matches(model.A, auto.lambda_t, ly2 / auto.lambda_x),
        COND_B: _twist_matches(model.B, auto.lambda_t, ly2),
    }
    return PreservationCertificate(all(conditions.values()), conditions)


def form_multiplier(auto: MonomialAutomorphism) -> Zeta8Element:
    """Scalar by which the automorphism multiplies dt^dx/2y."""
    return auto.lambda_t * auto.lambda_x / auto.lambda_y


class PointType(enum.Enum):
    """Local type of a fixed point, from the diagonalized eigenvalue
    exponents (a, b) with a + b = 1 mod 8."""

    ON_FIXED_CURVE = (1, 0)
    ISOLATED_27 = (2, 7)
    ISOLATED_36 = (3, 6)
    ISOLATED_45 = (4, 5)

    @property
    def is_isolated(self) -> bool:
        return self is not PointType.ON_FIXED_CURVE

    def __str__(self) -> str:
        if self is PointType.ON_FIXED_CURVE:
            return "on-fixed-curve"
        a, b = self.value
        return f"isolated({a},{b})"


def local_point_type(a: int, b: int) -> PointType:
    """Classify a fixed point from its eigenvalue exponent pair.

    The exponents must satisfy a + b = 1 mod 8 (the two eigenvalues
    multiply to the multiplier of the 2-form at a fixed point of a
    purely non-symplectic order-8 action).
    """
    if (a + b) % 8 != 1:
        raise ValueError(
            f"exponents ({a}, {b}) do not multiply to the 2-form multiplier")
    pair = frozenset((a % 8, b % 8))
    for point_type in PointType:
        if frozenset(point_type.value) == pair:
            return point_type
    raise ValueError(f"exponent pair ({a}, {b}) is not a fixed-point type")


def partner_type(point_type: PointType) -> PointType:
    """Type forced at the second fixed point on the same invariant
    rational curve: (2,7) and (3,6) pair up, (4,5) is self-paired."""
    if point_type is PointType.ON_FIXED_CURVE:
        raise ValueError("partner types are defined for isolated points only")
    return {
        PointType.ISOLATED_27: PointType.ISOLATED_36,
        PointType.ISOLATED_36: PointType.ISOLATED_27,
        PointType.ISOLATED_45: PointType.ISOLATED_45,
    }[point_type]


# -- induced action on the base ------------------------------------------

STATUS_FIXED = "fixed"
STATUS_PERMUTED = "permuted"
STATUS_MIXED = "mixed"
STATUS_PAIRED = "paired"


@dataclass(frozen=True)
class PlaceAction:
    place: Place
    status: str
    partner: Optional[Place] = None

    def to_json(self) -> dict:
        out = {"place": str(self.place), "status": self.status}
        if self.partner is not None:
            out["partner"] = str(self.partner)
        return out


@dataclass(frozen=True)
class BaseActionReport:
    """How t -> lambda_t * t moves the places of a fiber configuration.

    Statuses: "fixed" (place pointwise fixed), "permuted" (cluster
    stable as a set, roots moved), "mixed" (cluster stable, root t = 0
    fixed, the rest moved), "paired" (sent to a different place of the
    configuration, named as partner).
    """

    lambda_t: Zeta8Element
    fixed_base_points: tuple[str, ...]
    actions: tuple[PlaceAction, ...]

    def fixed_places(self) -> list[Place]:
        return [a.place for a in self.actions if a.status == STATUS_FIXED]

    def permuted_places(self) -> list[Place]:
        return [a.place for a in self.actions if a.status == STATUS_PERMUTED]

    def to_json(self) -> dict:
        return {"lambda_t": self.lambda_t.to_strings(),
                "fixed_base_points": list(self.fixed_base_points),
                "places": [a.to_json() for a in self.actions]}


def _transport_cluster(cluster: RationalPolynomial,
                       lam_t: Zeta8Element) -> Optional[RationalPolynomial]:
    """Normalized image of the root set of the cluster under t -> lam_t*t.

    The image cluster is p(lam_t^-1 * t) made monic; its coefficients
    live in Q(zeta_8) and the result is returned only if they are all
    rational (otherwise it cannot be a place of a rational
    configuration, and None is returned).
    """
    inv = lam_t.inverse()
    coeffs = [Zeta8Element.rational(c) * inv ** i
              for i, c in enumerate(cluster.coefficients)]
    lead_inv = coeffs[-1].inverse()
    normalized = [c * lead_inv for c in coeffs]
    if not all(c.is_rational for c in normalized):
        return None
    return RationalPolynomial(c.rational_value() for c in normalized)


def base_action(auto: MonomialAutomorphism,
                config: FiberConfiguration) -> BaseActionReport:
    """Action of the automorphism on the places of the configuration.

    Assumes check_preserves holds for the underlying model. When
    lambda_t != 1 the base map fixes exactly the points 0 and infinity;
    a finite cluster p(t) is transported to the normalized cluster of
    p(lambda_t^-1 t), which must again be a place of the configuration.
    """
    lam_t = auto.lambda_t
    identity = lam_t == Zeta8Element.one()
    fixed_base_points = ("all",) if identity else ("0", "infinity")

    places = [entry.place for entry in config.entries]
    t_poly = RationalPolynomial.x()
    actions = []
    for entry in config.entries:
        place = entry.place
        if identity or place.is_infinity:
            actions.append(PlaceAction(place, STATUS_FIXED))
            continue
        image = _transport_cluster(place.cluster, lam_t)
        if image == place.cluster:
            if place.cluster == t_poly:
                status = STATUS_FIXED
            elif (place.cluster % t_poly).is_zero:
                status = STATUS_MIXED
            else:
                status = STATUS_PERMUTED
            actions.append(PlaceAction(place, status))
            continue
        partner = None
        if image is not None:
            for other in places:
                if not other.is_infinity and other.cluster == image:
                    partner = other
                    break
        if partner is None:
            raise ValueError(
                f"image of place {place} is not among the configuration places")
        actions.append(PlaceAction(place, STATUS_PAIRED, partner))
    return BaseActionReport(lam_t, fixed_base_points, tuple(actions))


# -- translation by the 2-torsion section (0, 0) ---------------------------


@dataclass(frozen=True)
class TwoTorsionReport:
    """Sampled finite-field verification of (x, y) -> (A/x, -A*y/x^2)."""

    map_x: str
    map_y: str
    modulus: int
    seed: int
    samples: int
    on_curve_failures: int
    involution_failures: int
    group_law_failures: int
    section_swap_ok: bool
    requested_samples: int = field(default=100, compare=False)

    @property
    def passed(self) -> bool:
        return (self.samples >= self.requested_samples
                and self.on_curve_failures == 0
                and self.involution_failures == 0
                and self.group_law_failures == 0
                and self.section_swap_ok)

    def to_json(self) -> dict:
        return {
            "map": {"x": self.map_x, "y": self.map_y},
            "modulus": self.modulus,
            "seed": self.seed,
            "samples": self.samples,
            "on_curve_ok": self.on_curve_failures == 0,
            "involution_ok": self.involution_failures == 0,
            "group_law_ok": self.group_law_failures == 0,
            "section_swap_ok": self.section_swap_ok,
            "passed": self.passed,
        }


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _sqrt_mod(z: int, p: int) -> Optional[int]:
    """Square root mod an odd prime p, or None if z is a non-residue."""
    z %= p
    if z == 0:
        return 0
    if pow(z, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(z, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    n = 2
    while pow(n, (p - 1) // 2, p) != p - 1:
        n += 1
    m, c, t, r = s, pow(n, q, p), pow(z, q, p), pow(z, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _ec_add(point1, point2, a: int, p: int):
    """Chord-tangent addition on y^2 = x^3 + a*x over F_p; None = infinity."""
    if point1 is None:
        return point2
    if point2 is None:
        return point1
    x1, y1 = point1
    x2, y2 = point2
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if point1 == point2:
        lam = (3 * x1 * x1 + a) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    y3 = (lam * (x1 - x3) - y1) % p
    return x3, y3


def _poly_mod(p: RationalPolynomial, modulus: int) -> list[int]:
    out = []
    for c in p.coefficients:
        if c.denominator % modulus == 0:
            raise ValueError(
                f"modulus {modulus} divides a coefficient denominator; "
                "retry with another prime")
        out.append(c.numerator * pow(c.denominator, -1, modulus) % modulus)
    return out


def two_torsion_translate(model: WeierstrassModel, *, seed: int,
                          modulus: int = 10007,
                          samples: int = 100) -> TwoTorsionReport:
    """Translation by the 2-torsion section t -> (0, 0) of y^2 = x(x^2 + A).

    Requires B = 0, so (0, 0) lies on every fiber. Returns the rational
    map (x, y) -> (A/x, -A*y/x^2) together with a verification report:
    on fibers over F_modulus, sampled affine points with x != 0 are
    mapped and checked to (i) land on the curve, (ii) return to
    themselves under a second application, and (iii) agree with
    chord-tangent addition of (0, 0), which also exchanges the zero
    section and the 2-torsion section. Deterministic for a fixed seed.
    """
    if not model.B.is_zero:
        raise ValueError("2-torsion translation by (0, 0) requires B = 0")
    if modulus in (2, 3) or not _is_prime(modulus):
        raise ValueError("modulus must be a prime different from 2 and 3")
    coeffs = _poly_mod(model.A, modulus)

    def a_at(t: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * t + c) % modulus
        return acc

    rng = random.Random(seed)
    p = modulus
    points = []
    attempts = 0
    max_attempts = 200 * samples
    while len(points) < samples and attempts < max_attempts:
        attempts += 1
        t = rng.randrange(p)
        a = a_at(t)
        if a == 0:
            continue  # fiber of the sampled t is singular
        x = rng.randrange(1, p)
        y = _sqrt_mod((x * x * x + a * x) % p, p)
        if y is None:
            continue
        points.append((a, x, y))
    if len(points) < samples:
        raise ValueError(
            f"could not sample {samples} points over F_{p}; retry with another prime")

    on_curve_failures = 0
    involution_failures = 0
    group_law_failures = 0
    torsion = (0, 0)
    for a, x, y in points:
        x1 = a * pow(x, -1, p) % p
        y1 = -a * y * pow(x * x, -1, p) % p
        if (y1 * y1 - x1 ** 3 - a * x1) % p != 0:
            on_curve_failures += 1
            continue
        x2 = a * pow(x1, -1, p) % p
        y2 = -a * y1 * pow(x1 * x1, -1, p) % p
        if (x2, y2) != (x, y):
            involution_failures += 1
        if _ec_add((x, y), torsion, a, p) != (x1, y1):
            group_law_failures += 1

    # the degenerate points swap: O + T = T and T + T = O
    a0 = next(a for a, _, _ in points)
    section_swap_ok = (_ec_add(None, torsion, a0, p) == torsion
                       and _ec_add(torsion, torsion, a0, p) is None)

    return TwoTorsionReport(
        map_x="A(t)/x",
        map_y="-A(t)*y/x^2",
        modulus=p,
        seed=seed,
        samples=len(points),
        on_curve_failures=on_curve_failures,
        involution_failures=involution_failures,
        group_law_failures=group_law_failures,
        section_swap_ok=section_swap_ok,
        requested_samples=samples,
    )


def riemann_hurwitz_genus(ramification_indices: list[int]) -> int:
    """Genus of a double cover of the projective line from its simple
    ramification points: 2g - 2 = 2*(-2) + sum(e_p - 1)."""
    count = len(ramification_indices)
    if any(e != 2 for e in ramification_indices):
        raise ValueError("double cover branch points have index 2")
    if count == 0 or count % 2 != 0:
        raise ValueError(
            f"a double cover of the line has a positive even number of "
            f"branch points, got {count}")
    return count // 2 - 1
