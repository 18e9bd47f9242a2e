"""Range-dependent confidence curves for radar sensor reports.

A radar's usable range is bounded by its sensitivity through the classic
range equation (Skolnik, Radar Handbook, ch. 1). Inside that range, report
confidence is modeled by the squared amplitude of a wave problem on
(0, x_r] with an inverse-square potential well and hard walls; its
solutions are fractional-order Bessel functions of the scaled distance
z = sqrt(L)/c * x. The squared amplitude, max-normalized to [0, 1], is the
confidence coefficient curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import jy_values
from .errors import (
    ComplexOrderRegime,
    DegenerateCurve,
    NonPositiveDistance,
    OrderOutOfRange,
)

FOUR_PI = 4.0 * math.pi
DEFAULT_GRID_SIZE = 10_000
MIN_GRID_SIZE = 100
MIN_ORDER = 1e-6

_DEGENERATE_FLOOR = 1e-300


@dataclass(frozen=True)
class RadarParams:
    """Link-budget parameters of one radar."""

    p_t: float  # emitter transmit power, W
    g_t: float  # emitter antenna gain
    g_r: float  # radar antenna gain
    sigma: float  # radar cross-section, m^2
    lambda_: float  # wavelength, m
    p_rmin: float  # receiver sensitivity, W

    def __post_init__(self) -> None:
        for name in ("p_t", "g_t", "g_r", "sigma", "lambda_", "p_rmin"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")


def received_power(params: RadarParams, x: float) -> float:
    """Signal power received from an emitter at distance x."""
    if not x > 0.0:
        raise NonPositiveDistance(f"distance must be > 0, got {x!r}")
    budget = params.p_t * params.g_t * params.g_r * params.sigma * params.lambda_**2
    return budget / (FOUR_PI * x) ** 2


def max_range(params: RadarParams) -> float:
    """Largest distance at which the received power still reaches sensitivity."""
    budget = params.p_t * params.g_t * params.g_r * params.sigma * params.lambda_**2
    return math.sqrt(budget / (FOUR_PI**2 * params.p_rmin))


def gamma_from_radar(params: RadarParams, kappa: float) -> float:
    """Potential strength proportional to the link budget, scaled by kappa."""
    if kappa < 0.0:
        raise ValueError("kappa must be nonnegative")
    budget = params.p_t * params.g_t * params.g_r * params.sigma * params.lambda_**2
    return kappa * budget / FOUR_PI**2


def bessel_order(c: float, gamma: float) -> float:
    """Order of the Bessel solutions for scale factor c and well strength gamma."""
    if not c > 0.0:
        raise ValueError("scale factor c must be strictly positive")
    if gamma < 0.0:
        raise ValueError("gamma must be nonnegative")
    if gamma >= c * c / 4.0:
        raise ComplexOrderRegime(
            f"gamma={gamma!r} >= c^2/4={c * c / 4.0!r}: the order would be complex"
        )
    return 0.5 * math.sqrt((c * c - 4.0 * gamma) / (c * c))


@dataclass(frozen=True)
class CurveParams:
    """Parameters of one confidence curve.

    c: scale factor of the wave operator; big_l: sensitivity level L;
    gamma: strength of the inverse-square well; x_r: maximal
    reconnaissance distance (hard wall).
    """

    c: float
    big_l: float
    gamma: float
    x_r: float

    def __post_init__(self) -> None:
        if not self.big_l > 0.0:
            raise ValueError("big_l must be strictly positive")
        if not self.x_r > 0.0:
            raise ValueError("x_r must be strictly positive")
        alpha = bessel_order(self.c, self.gamma)  # validates c, gamma
        if alpha < MIN_ORDER:
            raise OrderOutOfRange(
                f"gamma={self.gamma!r} too close to c^2/4: order {alpha!r} < {MIN_ORDER}"
            )

    @property
    def alpha(self) -> float:
        """Bessel order implied by c and gamma; in [1e-6, 1/2]."""
        return bessel_order(self.c, self.gamma)

    @property
    def wavenumber(self) -> float:
        """Factor converting distance to Bessel argument: sqrt(L)/c."""
        return math.sqrt(self.big_l) / self.c


@dataclass(frozen=True, eq=False)
class ConfidenceCurve:
    """Max-normalized confidence samples on a uniform grid over (0, x_r]."""

    params: CurveParams
    xs: np.ndarray
    mus: np.ndarray
    x0: float  # grid argmax of the sampled density
    norm: float  # maximal sampled density, the normalization constant
    dirichlet: bool = False

    def __post_init__(self) -> None:
        self.xs.setflags(write=False)
        self.mus.setflags(write=False)


def _boundary_coefficient(params: CurveParams) -> float:
    """Second-kind weight that zeroes the amplitude at x_r (dirichlet mode)."""
    z_r = params.wavenumber * params.x_r
    j, y = jy_values(params.alpha, np.asarray([z_r]))
    beta = -j[0] / y[0] if abs(y[0]) > _DEGENERATE_FLOOR else math.inf
    if not math.isfinite(beta):
        raise DegenerateCurve("second-kind term vanishes at x_r; cannot fit the wall")
    return float(beta)


def _amplitude_raw(params: CurveParams, xs: np.ndarray, dirichlet: bool) -> np.ndarray:
    """Amplitude on strictly positive distances within (0, x_r]; no wall clipping."""
    beta = _boundary_coefficient(params) if dirichlet else 1.0
    j, y = jy_values(params.alpha, params.wavenumber * xs)
    return np.sqrt(xs) * (j + beta * y)


def amplitude(params: CurveParams, x: float, dirichlet: bool = False) -> float:
    """Wave amplitude at distance x; identically 0 beyond the wall at x_r."""
    if not x > 0.0:
        raise NonPositiveDistance(f"distance must be > 0, got {x!r}")
    if x > params.x_r:
        return 0.0
    return float(_amplitude_raw(params, np.asarray([x], dtype=float), dirichlet)[0])


def prob_density(params: CurveParams, x: float, dirichlet: bool = False) -> float:
    """Squared amplitude at distance x; 0 beyond x_r."""
    a = amplitude(params, x, dirichlet)
    return a * a


def confidence_curve(
    params: CurveParams,
    grid_size: int = DEFAULT_GRID_SIZE,
    dirichlet: bool = False,
) -> ConfidenceCurve:
    """Sample the squared amplitude on (0, x_r] and normalize its maximum to 1.

    The grid is uniform with grid_size points, excluding x=0 (where the
    second-kind term diverges) and including x_r.
    """
    if grid_size < MIN_GRID_SIZE:
        raise ValueError(f"grid_size must be at least {MIN_GRID_SIZE}")
    xs = params.x_r * np.arange(1, grid_size + 1, dtype=float) / grid_size
    amp = _amplitude_raw(params, xs, dirichlet)
    ps = amp * amp
    norm = float(ps.max())
    if not math.isfinite(norm) or norm <= _DEGENERATE_FLOOR:
        raise DegenerateCurve(f"maximal sampled density {norm!r} cannot be normalized")
    mus = ps / norm
    x0 = float(xs[int(np.argmax(ps))])
    return ConfidenceCurve(params=params, xs=xs, mus=mus, x0=x0, norm=norm, dirichlet=dirichlet)


def reliability_at(curve: ConfidenceCurve, x: float) -> float:
    """Confidence at distance x by linear interpolation of the curve samples.

    Exactly 0 beyond x_r; distances below the first grid point take the
    first sample's value; the result is clamped to [0, 1].
    """
    if not x > 0.0:
        raise NonPositiveDistance(f"distance must be > 0, got {x!r}")
    if x > curve.params.x_r:
        return 0.0
    return float(min(1.0, max(0.0, np.interp(x, curve.xs, curve.mus))))
