"""Weighted aggregation of circular values.

Two operators, each parameterised by a :class:`~cpfs.generators.GeneratorPair`:

    cpwa(values, w)  -> < h_inv(sum w_i h(mu_i)), g_inv(sum w_i g(nu_i)); q_inv(sum w_i q(r_i)) >
    cpwg(values, w)  -> < g_inv(sum w_i g(mu_i)), h_inv(sum w_i h(nu_i)); q_inv(sum w_i q(r_i)) >

``cpwa`` is the weighted arithmetic (addition-folding) operator, ``cpwg`` the
weighted geometric (multiplication-folding) one; either equals the left fold
of the corresponding pairwise operation over scalar multiples / powers.

With the product family these reduce to

    cpwa: < sqrt(1 - prod (1-mu_i**2)**w_i), prod nu_i**w_i; ... >
    cpwg: < prod mu_i**w_i, sqrt(1 - prod (1-nu_i**2)**w_i); ... >

and the radius component follows the ``q`` generator: product-like for the
decreasing kind ("algebraic_q"), dual-sum-like for the increasing kind
("algebraic_p").

Weight handling:

- Weights must lie in [0, 1] and sum to one within ``WEIGHT_SUM_TOL``.
  Nothing is renormalised silently; bad weights are rejected.
- A component with weight exactly zero is skipped, matching the w -> 0+
  limit.  (Otherwise ``0 * inf`` would be indeterminate when the component
  value sits on an annihilating boundary, e.g. a zero radius under the
  decreasing radius generator.)
- A zero radius with positive weight forces a zero output radius under the
  decreasing radius generator; this falls out of the extended-value
  conventions, no special case.

The four named operator variants are exposed through :data:`OPERATOR_NAMES`
and :func:`make_operator` / :func:`aggregate`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import EmptyInput, InvalidWeights, LengthMismatch, UnknownOperator
from .generators import Generator, GeneratorPair, algebraic_pair
from .values import CPFV

__all__ = [
    "WEIGHT_SUM_TOL",
    "WeightVector",
    "cpwa",
    "cpwg",
    "OPERATOR_NAMES",
    "AggregationOperator",
    "make_operator",
    "aggregate",
]

#: Tolerance on the sum-to-one invariant of weight vectors.
WEIGHT_SUM_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class WeightVector:
    """A vector of weights in [0, 1] summing to one within tolerance."""

    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        ws = tuple(float(w) for w in self.weights)
        if not ws:
            raise InvalidWeights("weight vector must be non-empty")
        for i, w in enumerate(ws):
            if not math.isfinite(w) or w < 0.0 or w > 1.0:
                raise InvalidWeights(f"weights[{i}] must lie in [0, 1], got {w!r}")
        total = math.fsum(ws)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise InvalidWeights(f"weights must sum to 1 within {WEIGHT_SUM_TOL}, got {total!r}")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def of(cls, *weights: float) -> "WeightVector":
        return cls(tuple(weights))

    @classmethod
    def uniform(cls, n: int) -> "WeightVector":
        if n <= 0:
            raise InvalidWeights(f"cannot build a uniform weight vector of length {n}")
        return cls(tuple(1.0 / n for _ in range(n)))

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[float]:
        return iter(self.weights)


def _checked(values: Sequence[CPFV], w: WeightVector) -> tuple[Sequence[CPFV], tuple[float, ...]]:
    if len(values) == 0:
        raise EmptyInput("aggregation needs at least one value")
    if not isinstance(w, WeightVector):
        w = WeightVector(tuple(w))
    if len(values) != len(w):
        raise LengthMismatch(f"got {len(values)} values but {len(w)} weights")
    return values, w.weights


def _weighted(gen: Generator, xs: Sequence[float], ws: Sequence[float]) -> float:
    # weight-zero components are skipped: lim_{w->0+} w * gen(x) = 0 even when gen(x) = inf
    total = 0.0
    for x, w in zip(xs, ws):
        if w == 0.0:
            continue
        total += w * gen.forward(x)
    return gen.inverse(total)


def cpwa(values: Sequence[CPFV], w: WeightVector, gens: GeneratorPair | None = None) -> CPFV:
    """Weighted arithmetic aggregation of circular values."""
    values, ws = _checked(values, w)
    gens = gens if gens is not None else algebraic_pair()
    return CPFV.of(
        _weighted(gens.h, [v.mu for v in values], ws),
        _weighted(gens.g, [v.nu for v in values], ws),
        _weighted(gens.q, [v.r for v in values], ws),
    )


def cpwg(values: Sequence[CPFV], w: WeightVector, gens: GeneratorPair | None = None) -> CPFV:
    """Weighted geometric aggregation of circular values."""
    values, ws = _checked(values, w)
    gens = gens if gens is not None else algebraic_pair()
    return CPFV.of(
        _weighted(gens.g, [v.mu for v in values], ws),
        _weighted(gens.h, [v.nu for v in values], ws),
        _weighted(gens.q, [v.r for v in values], ws),
    )


#: Identifiers of the four built-in operator variants.
OPERATOR_NAMES = ("cpwa_q", "cpwa_p", "cpwg_q", "cpwg_p")

AggregationOperator = Callable[[Sequence[CPFV], WeightVector], CPFV]


def make_operator(name: str, gens: GeneratorPair | None = None) -> AggregationOperator:
    """Build an aggregation callable from one of the registered identifiers.

    The suffix picks the radius generator ("_q" decreasing, "_p" increasing);
    an explicit ``gens`` overrides it entirely.
    """
    if name not in OPERATOR_NAMES:
        raise UnknownOperator(f"unknown operator {name!r}; expected one of {OPERATOR_NAMES}")
    if gens is None:
        gens = algebraic_pair("algebraic_q" if name.endswith("_q") else "algebraic_p")
    fn = cpwa if name.startswith("cpwa") else cpwg

    def operator(values: Sequence[CPFV], w: WeightVector, _fn=fn, _gens=gens) -> CPFV:
        return _fn(values, w, _gens)

    return operator


def aggregate(
    name: str,
    values: Sequence[CPFV],
    w: WeightVector,
    gens: GeneratorPair | None = None,
) -> CPFV:
    """One-shot aggregation by operator identifier."""
    return make_operator(name, gens)(values, w)
