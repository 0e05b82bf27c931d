import pytest

from k3ns8 import MonomialAutomorphism, RationalPolynomial, WeierstrassModel, Zeta8Element


def poly(*coeffs) -> RationalPolynomial:
    return RationalPolynomial(coeffs)


@pytest.fixture
def t() -> RationalPolynomial:
    return RationalPolynomial.x()


@pytest.fixture
def specialized_model(t) -> WeierstrassModel:
    # y^2 = x(x^2 + t(t^2-1)^2): A = t^3 (t^2 - 1)^2, B = 0
    return WeierstrassModel(A=t ** 3 * (t ** 2 - 1) ** 2,
                            B=RationalPolynomial.zero())


@pytest.fixture
def generic_model(t) -> WeierstrassModel:
    # y^2 = x(x^2 + t(t^2-1)(t^2-2)(t^2-3))
    return WeierstrassModel(A=t * (t ** 2 - 1) * (t ** 2 - 2) * (t ** 2 - 3),
                            B=RationalPolynomial.zero())


@pytest.fixture
def order8_auto() -> MonomialAutomorphism:
    # (x, y, t) -> (-i x, zeta8 y, -t)
    return MonomialAutomorphism(lambda_x=-Zeta8Element.zeta(2),
                                lambda_y=Zeta8Element.zeta(1),
                                lambda_t=Zeta8Element.rational(-1))
