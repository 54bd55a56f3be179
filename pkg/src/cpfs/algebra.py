"""Algebraic operations on circular values.

Generator-driven forms (the general case, via a :class:`~cpfs.generators.GeneratorPair`):

    add(a, b)            -> < h_inv(h(mu_a)+h(mu_b)), g_inv(g(nu_a)+g(nu_b)); q_inv(q(r_a)+q(r_b)) >
    multiply(a, b)       -> < g_inv(g(mu_a)+g(mu_b)), h_inv(h(nu_a)+h(nu_b)); q_inv(q(r_a)+q(r_b)) >
    scalar_multiple(l,a) -> < h_inv(l*h(mu_a)), g_inv(l*g(nu_a)); q_inv(l*q(r_a)) >
    power(a, l)          -> < g_inv(l*g(mu_a)), h_inv(l*h(nu_a)); q_inv(l*q(r_a)) >

With the product family these collapse to the usual closed forms, e.g.
``add`` gives ``sqrt(mu_a**2 + mu_b**2 - mu_a**2 mu_b**2)`` on the membership
side and plain products elsewhere.

``add_minmax`` / ``multiply_minmax`` use the product-family center formulas
directly and take the min or max of the radii instead of combining them
through a generator.  ``add_general`` / ``multiply_general`` accept an
arbitrary t-norm (the dual t-conorm is derived internally) plus any binary
radius combiner on [0, 1].

Closure holds by construction: membership/non-membership outputs satisfy the
quadratic constraint because ``T(mu_a, mu_b)**2 + S(nu_a, nu_b)**2 <= 1``
whenever the inputs are valid, so result construction goes straight through
the validating constructors.
"""

from __future__ import annotations

import math

from .errors import NonPositiveScalar
from .generators import BinaryOp, GeneratorPair, dual_tconorm
from .values import CPFV, RadiusMode

__all__ = [
    "add",
    "multiply",
    "scalar_multiple",
    "power",
    "add_minmax",
    "multiply_minmax",
    "add_general",
    "multiply_general",
]


def _require_positive(lam: float, name: str = "lambda") -> float:
    if not isinstance(lam, (int, float)) or isinstance(lam, bool):
        raise NonPositiveScalar(f"{name} must be a positive real number, got {lam!r}")
    x = float(lam)
    if not math.isfinite(x) or x <= 0.0:
        raise NonPositiveScalar(f"{name} must be strictly positive and finite, got {x!r}")
    return x


def add(a: CPFV, b: CPFV, gens: GeneratorPair) -> CPFV:
    """Generator-based sum of two circular values."""
    return CPFV.of(
        gens.h.combine(a.mu, b.mu),
        gens.g.combine(a.nu, b.nu),
        gens.q.combine(a.r, b.r),
    )


def multiply(a: CPFV, b: CPFV, gens: GeneratorPair) -> CPFV:
    """Generator-based product of two circular values."""
    return CPFV.of(
        gens.g.combine(a.mu, b.mu),
        gens.h.combine(a.nu, b.nu),
        gens.q.combine(a.r, b.r),
    )


def scalar_multiple(lam: float, a: CPFV, gens: GeneratorPair) -> CPFV:
    """Scale a value by a strictly positive scalar (repeated addition)."""
    lam = _require_positive(lam)
    return CPFV.of(
        gens.h.scale(lam, a.mu),
        gens.g.scale(lam, a.nu),
        gens.q.scale(lam, a.r),
    )


def power(a: CPFV, lam: float, gens: GeneratorPair) -> CPFV:
    """Raise a value to a strictly positive scalar (repeated multiplication)."""
    lam = _require_positive(lam)
    return CPFV.of(
        gens.g.scale(lam, a.mu),
        gens.h.scale(lam, a.nu),
        gens.q.scale(lam, a.r),
    )


def _prod_sum(x: float, y: float) -> float:
    # sqrt(x**2 + y**2 - x**2 y**2), the product-family dual sum
    xx, yy = x * x, y * y
    return math.sqrt(max(0.0, xx + yy - xx * yy))


def add_minmax(a: CPFV, b: CPFV, radius_mode: RadiusMode = "min") -> CPFV:
    """Product-family center sum with min/max radius."""
    if radius_mode not in ("min", "max"):
        raise ValueError(f"radius_mode must be 'min' or 'max', got {radius_mode!r}")
    r = min(a.r, b.r) if radius_mode == "min" else max(a.r, b.r)
    return CPFV.of(_prod_sum(a.mu, b.mu), a.nu * b.nu, r)


def multiply_minmax(a: CPFV, b: CPFV, radius_mode: RadiusMode = "min") -> CPFV:
    """Product-family center product with min/max radius."""
    if radius_mode not in ("min", "max"):
        raise ValueError(f"radius_mode must be 'min' or 'max', got {radius_mode!r}")
    r = min(a.r, b.r) if radius_mode == "min" else max(a.r, b.r)
    return CPFV.of(a.mu * b.mu, _prod_sum(a.nu, b.nu), r)


def add_general(a: CPFV, b: CPFV, tnorm: BinaryOp, radius_op: BinaryOp) -> CPFV:
    """Sum under an arbitrary t-norm ``T``: < S(mu), T(nu); radius_op(r) >.

    ``S`` is the dual t-conorm of ``tnorm`` under the quadratic complement.
    ``radius_op`` may be any t-norm or t-conorm on [0, 1] (e.g. ``min`` or
    ``max``).
    """
    tconorm = dual_tconorm(tnorm)
    return CPFV.of(
        tconorm(a.mu, b.mu),
        tnorm(a.nu, b.nu),
        radius_op(a.r, b.r),
    )


def multiply_general(a: CPFV, b: CPFV, tnorm: BinaryOp, radius_op: BinaryOp) -> CPFV:
    """Product under an arbitrary t-norm ``T``: < T(mu), S(nu); radius_op(r) >."""
    tconorm = dual_tconorm(tnorm)
    return CPFV.of(
        tnorm(a.mu, b.mu),
        tconorm(a.nu, b.nu),
        radius_op(a.r, b.r),
    )
