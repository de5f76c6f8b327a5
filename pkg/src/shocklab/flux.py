"""Scalar flux models and their standing-shock endpoint states.

A flux model bundles f, f', f'' with the asymptotic states (u_minus, u_plus)
of a standing viscous shock.  Admissibility means equal endpoint fluxes
(Rankine-Hugoniot for a zero-speed shock) together with the Lax condition
f'(u_plus) < 0 < f'(u_minus).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .errors import ConfigError, FluxMismatch, NonLaxFlux

FLUX_TOL = 1e-10


@dataclass(frozen=True)
class FluxModel:
    """Scalar flux with first and second derivatives and endpoint states."""

    f: Callable[[float], float]
    df: Callable[[float], float]
    d2f: Callable[[float], float]
    u_minus: float
    u_plus: float
    name: str = "custom"

    @property
    def a_minus(self) -> float:
        return float(self.df(self.u_minus))

    @property
    def a_plus(self) -> float:
        return float(self.df(self.u_plus))

    @property
    def amplitude(self) -> float:
        """Half shock strength |u_minus - u_plus| / 2."""
        return 0.5 * abs(self.u_minus - self.u_plus)

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.u_minus + self.u_plus)

    def validate(self) -> None:
        """Raise unless the model admits a standing Lax shock."""
        scale = max(1.0, abs(self.f(self.u_minus)), abs(self.f(self.u_plus)))
        if self.u_minus == self.u_plus:
            raise NonLaxFlux("u_minus == u_plus: constant state, no shock")
        if abs(self.f(self.u_minus) - self.f(self.u_plus)) > FLUX_TOL * scale:
            raise FluxMismatch(
                f"f(u_minus)={self.f(self.u_minus)!r} != f(u_plus)={self.f(self.u_plus)!r}"
            )
        if not (self.a_plus < 0.0 < self.a_minus):
            raise NonLaxFlux(
                f"need f'(u_plus) < 0 < f'(u_minus), got {self.a_plus!r}, {self.a_minus!r}"
            )
        lo = min(self.u_minus, self.u_plus) - 1.0
        hi = max(self.u_minus, self.u_plus) + 1.0
        probe = np.linspace(lo, hi, 64)
        vals = np.concatenate([[self.df(u) for u in probe], [self.d2f(u) for u in probe]])
        if not np.all(np.isfinite(vals)):
            raise NonLaxFlux("df or d2f not finite on the state interval")


@dataclass(frozen=True)
class PolynomialFlux:
    """Polynomial flux f(u) = sum_k coeffs[k] u^k (ascending order).

    A plain class with named coefficients keeps models picklable, which the
    CLI relies on for parallel experiment dispatch.
    """

    coeffs: tuple[float, ...]

    def __call__(self, u):
        return np.polynomial.polynomial.polyval(u, self.coeffs)

    def deriv(self, order: int = 1) -> "PolynomialFlux":
        c = np.polynomial.polynomial.polyder(self.coeffs, m=order)
        return PolynomialFlux(tuple(float(x) for x in c))


def polynomial_model(coeffs, u_minus: float, u_plus: float, name: str = "custom-polynomial") -> FluxModel:
    p = PolynomialFlux(tuple(float(c) for c in coeffs))
    model = FluxModel(f=p, df=p.deriv(1), d2f=p.deriv(2),
                      u_minus=float(u_minus), u_plus=float(u_plus), name=name)
    model.validate()
    return model


def burgers_model(epsilon: float = 1.0) -> FluxModel:
    """f(u) = u^2/2 with u_pm = -+ epsilon; profile -eps*tanh(eps*x/2)."""
    if epsilon <= 0:
        raise NonLaxFlux("epsilon must be positive")
    return polynomial_model([0.0, 0.0, 0.5], u_minus=epsilon, u_plus=-epsilon, name="burgers")


def equal_flux_states(coeffs, epsilon: float, u0: float = 0.0) -> tuple[float, float]:
    """States u_pm = m -+ epsilon with f(m+eps) = f(m-eps), midpoint m near u0.

    epsilon is the half strength (amplitude); brentq solves for the midpoint.
    """
    p = PolynomialFlux(tuple(float(c) for c in coeffs))

    def gap(m):
        return p(m + epsilon) - p(m - epsilon)

    width = 0.25
    lo, hi = u0 - width, u0 + width
    for _ in range(40):
        if gap(lo) * gap(hi) < 0:
            break
        width *= 1.6
        lo, hi = u0 - width, u0 + width
    else:
        raise NonLaxFlux(f"no equal-flux pair of half-strength {epsilon} near u0={u0}")
    m = brentq(gap, lo, hi, xtol=1e-15, rtol=8.9e-16)
    return m + epsilon, m - epsilon


def cubic_model(epsilon: float = 1.0, c3: float = 0.1, u0: float = 0.0) -> FluxModel:
    """f(u) = u^2/2 + c3*u^3 with equal-flux states of half-strength epsilon."""
    coeffs = [0.0, 0.0, 0.5, c3]
    u_minus, u_plus = equal_flux_states(coeffs, epsilon, u0=u0)
    return polynomial_model(coeffs, u_minus, u_plus, name="cubic")


def model_from_spec(flux: str, epsilon: float = 1.0, coefficients=None,
                    u_minus=None, u_plus=None, c3: float = 0.1) -> FluxModel:
    """Build a model from config-file fields (flux name + parameter list)."""
    if flux == "burgers":
        return burgers_model(epsilon)
    if flux == "cubic":
        return cubic_model(epsilon, c3=c3)
    if flux == "custom-polynomial":
        if coefficients is None:
            raise NonLaxFlux("custom-polynomial requires a coefficient array")
        if u_minus is None or u_plus is None:
            u_minus, u_plus = equal_flux_states(coefficients, epsilon)
        return polynomial_model(coefficients, u_minus, u_plus)
    raise NonLaxFlux(f"unknown flux model {flux!r}")
