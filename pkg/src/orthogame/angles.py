"""Angle bookkeeping on the half-turn circle.

A direction vector (cos t, sin t) and its negation describe the same ray,
so every strategy angle in this package lives on a circle of period 180
degrees.  All helpers work in degrees.
"""

from __future__ import annotations

HALF_TURN = 180.0


def wrap_half_turn(angle_deg: float) -> float:
    """Reduce an angle to the canonical interval [0, 180)."""
    wrapped = angle_deg % HALF_TURN
    # x % 180.0 can round up to exactly 180.0 for tiny negative x
    if wrapped >= HALF_TURN:
        wrapped -= HALF_TURN
    return wrapped


def signed_delta(a_deg: float, b_deg: float) -> float:
    """Signed difference a - b wrapped to [-90, 90)."""
    wrapped = (a_deg - b_deg + 90.0) % HALF_TURN
    if wrapped >= HALF_TURN:
        wrapped -= HALF_TURN
    return wrapped - 90.0


def wrapped_distance(a_deg: float, b_deg: float) -> float:
    """Shortest separation of two angles on the half-turn circle."""
    return abs(signed_delta(a_deg, b_deg))
