"""Bessel functions of the first and second kind for real order in (0, 1/2].

Small arguments use the ascending power series (Abramowitz & Stegun 9.1.10)
accumulated in 80-bit extended precision: near the branch switch the
alternating terms grow to ~1e7, so double accumulation would lose ~9 digits
to cancellation. Large arguments use Hankel's asymptotic expansion
(A&S 9.2.5-9.2.10) truncated adaptively at its smallest term. The second
kind comes from the connection formula (A&S 9.1.2)

    Y_a(z) = (J_a(z) cos(a pi) - J_{-a}(z)) / sin(a pi),

which is well conditioned away from integer order.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NonPositiveArgument, OrderOutOfRange

SERIES_ASYMPTOTIC_SWITCH = 20.0
SERIES_RTOL = 1e-15
MIN_Y_ORDER = 1e-6

_MAX_SERIES_TERMS = 300
_LD = np.longdouble
_TINY = np.longdouble(1e-300)


def _series_j(order: float, z: np.ndarray) -> np.ndarray:
    """Ascending series for J of any order > -1, in extended precision.

    Only for z below SERIES_ASYMPTOTIC_SWITCH (and somewhat beyond, for the
    switch-consistency tests); each grid point accumulates independently.
    """
    half = z.astype(_LD) / _LD(2)
    q = half * half
    term = half ** _LD(order) / _LD(math.gamma(order + 1.0))
    total = term.copy()
    for k in range(1, _MAX_SERIES_TERMS + 1):
        term = -term * q / (_LD(k) * _LD(k + order))
        total = total + term
        if np.all(np.abs(term) < SERIES_RTOL * np.abs(total) + _TINY):
            return total
    raise ArithmeticError(f"Bessel series did not converge for order {order!r}")


def _y_from_connection(ja: np.ndarray, jneg: np.ndarray, order: float) -> np.ndarray:
    cos_t = _LD(math.cos(order * math.pi))
    sin_t = _LD(math.sin(order * math.pi))
    return (ja * cos_t - jneg) / sin_t


def _asymptotic_jy(order: float, z: float) -> tuple[float, float]:
    """Hankel's large-argument expansion, truncated at the smallest term."""
    mu = 4.0 * order * order
    omega = z - order * (math.pi / 2.0) - math.pi / 4.0
    p, q = 1.0, 0.0
    term = 1.0
    prev = math.inf
    for k in range(1, 60):
        term = term * (mu - (2 * k - 1) ** 2) / (k * 8.0 * z)
        if abs(term) >= prev:
            break  # past the smallest term; the tail diverges
        prev = abs(term)
        signed = -term if (k // 2) % 2 else term
        if k % 2:
            q += signed
        else:
            p += signed
        if abs(term) < 1e-17 * (abs(p) + abs(q)):
            break
    amp = math.sqrt(2.0 / (math.pi * z))
    return (
        amp * (p * math.cos(omega) - q * math.sin(omega)),
        amp * (p * math.sin(omega) + q * math.cos(omega)),
    )


def jy_values(order: float, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized (J, Y) for strictly positive arguments; float64 output.

    Internal workhorse: performs no order validation, so curve construction
    can use any order in (0, 1/2] regardless of the public Y restrictions.
    """
    z = np.asarray(z, dtype=float)
    j = np.empty_like(z)
    y = np.empty_like(z)
    small = z <= SERIES_ASYMPTOTIC_SWITCH
    if np.any(small):
        zs = z[small]
        ja = _series_j(order, zs)
        jneg = _series_j(-order, zs)
        j[small] = ja.astype(float)
        y[small] = _y_from_connection(ja, jneg, order).astype(float)
    if not np.all(small):
        for i in np.nonzero(~small)[0]:
            j[i], y[i] = _asymptotic_jy(order, float(z[i]))
    return j, y


def _check_argument(z: float) -> None:
    if not z > 0.0:
        raise NonPositiveArgument(f"argument must be > 0, got {z!r}")


def bessel_j(alpha: float, z: float) -> float:
    """First-kind J_alpha(z) for order in (0, 1/2]."""
    if not 0.0 < alpha <= 0.5:
        raise OrderOutOfRange(f"first-kind order must be in (0, 0.5], got {alpha!r}")
    _check_argument(z)
    if z > SERIES_ASYMPTOTIC_SWITCH:
        return _asymptotic_jy(alpha, z)[0]
    return float(_series_j(alpha, np.asarray([z], dtype=float))[0])


def bessel_y(alpha: float, z: float) -> float:
    """Second-kind Y_alpha(z) for order 0.5 or in [1e-6, 0.5 - 1e-9].

    Orders below 1e-6 are rejected: sin(alpha pi) in the connection formula
    approaches zero and the construction degenerates.
    """
    if alpha != 0.5 and not MIN_Y_ORDER <= alpha <= 0.5 - 1e-9:
        raise OrderOutOfRange(
            f"second-kind order must be 0.5 or within [{MIN_Y_ORDER}, 0.5 - 1e-9], got {alpha!r}"
        )
    _check_argument(z)
    if z > SERIES_ASYMPTOTIC_SWITCH:
        return _asymptotic_jy(alpha, z)[1]
    zs = np.asarray([z], dtype=float)
    ja = _series_j(alpha, zs)
    jneg = _series_j(-alpha, zs)
    return float(_y_from_connection(ja, jneg, alpha)[0])
