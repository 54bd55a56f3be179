"""Half-up decimal rounding, shared by the pipeline and the table writers."""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal

__all__ = ["round_half_up", "format_fixed"]


def _quantized(x: float, digits: int) -> Decimal:
    exp = Decimal(1).scaleb(-digits)
    return Decimal(repr(float(x))).quantize(exp, rounding=ROUND_HALF_UP)


def round_half_up(x: float, digits: int = 2) -> float:
    """Round to ``digits`` decimals with ties away from zero (half-up)."""
    return float(_quantized(x, digits))


def format_fixed(x: float, digits: int = 2) -> str:
    """Fixed-point half-up string, e.g. ``format_fixed(0.645, 2) == '0.65'``."""
    return str(_quantized(x, digits))
