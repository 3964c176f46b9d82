"""Independent closed-form oracle for the one-dimensional ground state.

For radial dimension n = 1 the equation h'' - h + h^q = 0 has the explicit
solution

    h(t) = A sech(x)^(2/(q-1)),   x = (q-1) t / 2,
    A = ((q+1)/2)^(1/(q-1)),

whose norms are evaluated here by direct 1-d quadrature of the formulas.
Nothing below touches the solver or the package quadrature, so these
values can referee both.
"""

import math

import numpy as np
from scipy.integrate import quad


def exponents_m1(m: int) -> tuple[float, float]:
    """(q, p) for the pair (m, 1), computed from scratch."""
    k = m + 1
    return (k + 2.0) / (k - 2.0), 2.0 * k / (k - 2.0)


def sech_amplitude(q: float) -> float:
    return ((q + 1.0) / 2.0) ** (1.0 / (q - 1.0))


def sech_h(t, q: float):
    x = 0.5 * (q - 1.0) * np.asarray(t)
    return sech_amplitude(q) * np.cosh(x) ** (-2.0 / (q - 1.0))


def sech_dh(t, q: float):
    x = 0.5 * (q - 1.0) * np.asarray(t)
    return -sech_h(t, q) * np.tanh(x)


def ode_residual(t, q: float, step: float = 1e-4):
    """|h'' - h + h^q| with h'' by central differences of the formula.

    The step balances truncation against the eps/step^2 rounding floor,
    leaving residuals near 1e-8 when the formula is exact."""
    h = sech_h(t, q)
    hpp = (sech_h(t + step, q) - 2.0 * h + sech_h(t - step, q)) / step ** 2
    return np.abs(hpp - h + h ** q)


def sech_integrals(m: int, t_hi: float = 60.0) -> tuple[float, float, float]:
    """(I_grad, I_sq, I_p) of the closed form on R^1, surface factor 2."""
    q, p = exponents_m1(m)

    def h(t):
        return float(sech_h(t, q))

    def dh(t):
        return float(sech_dh(t, q))

    i_grad = 2.0 * quad(lambda t: dh(t) ** 2, 0.0, t_hi, limit=200)[0]
    i_sq = 2.0 * quad(lambda t: h(t) ** 2, 0.0, t_hi, limit=200)[0]
    i_p = 2.0 * quad(lambda t: h(t) ** p, 0.0, t_hi, limit=200)[0]
    return i_grad, i_sq, i_p


def sech_sigma_inv(m: int) -> float:
    """L_{m,1} of the closed-form ground state, assembled from scratch."""
    q, p = exponents_m1(m)
    k = m + 1
    i_grad, i_sq, i_p = sech_integrals(m)
    return (i_grad ** (1.0 / k) * i_sq ** (m / k)) / i_p ** (2.0 / p)


def triangle_integrals_n2() -> tuple[float, float, float]:
    """Closed-form integrals of h(t) = max(0, 1-t) on R^2 with p = 4."""
    i_grad = math.pi          # 2 pi int_0^1 t dt
    i_sq = math.pi / 6.0      # 2 pi int_0^1 (1-t)^2 t dt
    i_p = math.pi / 15.0      # 2 pi int_0^1 (1-t)^4 t dt
    return i_grad, i_sq, i_p
