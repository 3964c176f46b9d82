"""Bisection on the initial value to locate the ground state.

Above the critical initial value every shot crosses zero once; below it
every shot stays positive and turns back up. Uniqueness of the positive
decaying solution makes the classification boundary a single point
alpha0(m, n), which plain bisection brackets to arbitrary resolution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Dims
from .ode import (DEFAULT_CONTROLS, Candidate, CrossedZero, IntegrationControls,
                  RadialProfile, TurnedUp, integrate_shot, shoot_profile)

__all__ = ["GroundState", "ShootingError", "bracket_alpha", "find_ground_state"]

_BRACKET_CEILING = 2.0 ** 20


class ShootingError(RuntimeError):
    """Bracketing or bisection could not complete."""


@dataclass(frozen=True)
class GroundState:
    """Located ground state: critical initial value and its profile.

    The bracket keeps TurnedUp on the low side and CrossedZero on the high
    side. Its width is at most the bisection tolerance unless the search
    ended early on a Candidate midpoint; in that case alpha0 is certified
    by the candidate trajectory itself (it tracked the decaying tail below
    the threshold), which pins it more tightly than the bracket does.
    """

    d: Dims
    alpha0: float
    bracket: tuple[float, float]
    profile: RadialProfile


def bracket_alpha(d: Dims,
                  ctrl: IntegrationControls = DEFAULT_CONTROLS,
                  ) -> tuple[float, float]:
    """Initial bracket (alpha_lo, alpha_hi) around the critical value.

    alpha_lo = 1 always classifies TurnedUp; alpha_hi is found by doubling
    from 2 until a shot crosses zero. Mathematically a crossing must occur
    for large alpha, so running past 2^20 signals broken controls.
    """
    hi = 2.0
    while True:
        outcome = integrate_shot(hi, d, ctrl)
        if isinstance(outcome, CrossedZero):
            return 1.0, hi
        if isinstance(outcome, Candidate):
            raise ShootingError(
                f"bracketing shot at alpha={hi} landed on a ground-state "
                "candidate; widen the doubling sequence")
        hi *= 2.0
        if hi > _BRACKET_CEILING:
            raise ShootingError(
                f"no zero crossing up to alpha={_BRACKET_CEILING:g} for "
                f"(m, n) = ({d.m}, {d.n}); integration controls look wrong")


def find_ground_state(d: Dims, tol_alpha: float = 1e-12,
                      ctrl: IntegrationControls = DEFAULT_CONTROLS,
                      ) -> GroundState:
    """Bisect to the ground-state initial value and integrate its profile.

    The bracket keeps a TurnedUp shot on the low side and a CrossedZero
    shot on the high side at every step. A midpoint that classifies as a
    Candidate ends the search early and its profile is accepted directly;
    otherwise the profile comes from one final shot at the bracket
    midpoint, truncated where the near-critical trajectory stops being
    trustworthy (h below the decay threshold or h' >= 0).
    """
    if tol_alpha < 1e-14:
        raise ValueError("tol_alpha below double-precision resolution")
    lo, hi = bracket_alpha(d, ctrl)
    while hi - lo > tol_alpha:
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):  # interval no longer splittable
            break
        outcome = integrate_shot(mid, d, ctrl)
        if isinstance(outcome, CrossedZero):
            hi = mid
        elif isinstance(outcome, TurnedUp):
            lo = mid
        else:
            return GroundState(d=d, alpha0=mid, bracket=(lo, hi),
                               profile=outcome.profile)
    alpha0 = 0.5 * (lo + hi)
    _, profile = shoot_profile(alpha0, d, ctrl)
    return GroundState(d=d, alpha0=alpha0, bracket=(lo, hi), profile=profile)
