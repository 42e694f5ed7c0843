"""Weighted sequence space and its step-function model.

The ambient space is the set of real sequences a = (a_n) with
sum |a_n|^2 w(n) finite, default weight w(n) = 1/(n(n+1)). The key players:

  * the constant sequence (1, 1, 1, ...),
  * the fractional-part sequences with terms frac(n/l) for integer l >= 1,
  * step functions on (0, 1] that are constant on each (1/(n+1), 1/n].

The interval (1/(n+1), 1/n] has length exactly 1/(n(n+1)), so reading a step
function at the points 1/n is a unitary map onto the sequence space. Inner
products of fractional-part sequences are available through two independent
routes: compensated truncated summation, and a closed form that groups terms
by residue class modulo the lcm of the denominators and telescopes each
class into a difference of digamma values:

    sum_{k>=0} 1/((kP+r)(kP+r+1)) = (psi((r+1)/P) - psi(r/P)) / P.

Fractional parts are always computed in integer arithmetic, (n mod l)/l,
never by flooring a floating-point quotient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Union

import numpy as np

from .arith import lcm
from .errors import DomainError, UnsupportedWeightError
from .specfun import digamma_array
from .summation import compensated_sum


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class WeightScheme:
    """A summation weight w(n) with two-sided quadratic comparison bounds.

    Admissible weights satisfy c1/n^2 <= w(n) <= c2/n^2; the defaults
    c1 = 1/2 and c2 = 1 bracket the standard weight 1/(n(n+1)). The bracket
    is spot-checked on a sample at construction via `validated`.

    weight_id 0 is reserved for the default scheme and is the only id the
    closed-form inner product and the on-disk Gram cache accept.
    """

    name: str
    fn: Callable[[np.ndarray], np.ndarray]
    c1: float = 0.5
    c2: float = 1.0
    weight_id: int = 1

    @property
    def is_default(self) -> bool:
        return self.weight_id == 0

    def values(self, n: np.ndarray) -> np.ndarray:
        return self.fn(np.asarray(n, dtype=np.float64))

    def tail_bound(self, n_trunc: int) -> float:
        """Upper bound on sum_{n > n_trunc} w(n).

        Exact (telescoping) for the default weight; c2 * sum 1/n^2 bound
        otherwise.
        """
        if self.is_default:
            return 1.0 / (n_trunc + 1)
        return self.c2 / n_trunc

    def validated(self, sample_limit: int = 1024) -> "WeightScheme":
        n = np.arange(1, sample_limit + 1, dtype=np.float64)
        w = self.values(n)
        lo = self.c1 / n**2
        hi = self.c2 / n**2
        if not ((lo <= w + 1e-18).all() and (w <= hi + 1e-18).all()):
            raise DomainError(f"weight {self.name!r} violates the c1/n^2..c2/n^2 bracket")
        return self


DEFAULT_WEIGHT = WeightScheme(
    name="1/(n(n+1))",
    fn=lambda n: 1.0 / (n * (n + 1.0)),
    c1=0.5,
    c2=1.0,
    weight_id=0,
).validated()


@lru_cache(maxsize=4)
def _default_weight_values(n_trunc: int) -> np.ndarray:
    n = np.arange(1, n_trunc + 1, dtype=np.float64)
    w = 1.0 / (n * (n + 1.0))
    w.flags.writeable = False
    return w


@lru_cache(maxsize=8)
def _residue_class_weights(period: int) -> np.ndarray:
    """Total weight of each residue class r mod period, r = 1..period.

    sum_{k>=0} 1/((k*period+r)(k*period+r+1)) telescopes against the digamma
    recurrence to (psi((r+1)/period) - psi(r/period)) / period. Cached because
    Gram assembly revisits the same period for many denominator pairs.
    """
    r = np.arange(1, period + 2, dtype=np.float64)
    psi = digamma_array(r / period)
    w = (psi[1:] - psi[:-1]) / period
    w.flags.writeable = False
    return w


# ---------------------------------------------------------------------------
# sequences


@dataclass(frozen=True)
class FractionalSequence:
    """The constant sequence, or the sequence n -> frac(n / denominator).

    denominator None marks the constant sequence (1, 1, ...). denominator 1
    is the zero sequence, since frac(n) = 0 for every integer n.
    """

    denominator: Optional[int] = None

    def __post_init__(self):
        if self.denominator is not None and self.denominator < 1:
            raise DomainError(f"denominator must be >= 1, got {self.denominator}")

    @classmethod
    def constant(cls) -> "FractionalSequence":
        return cls(None)

    @classmethod
    def of(cls, denominator: int) -> "FractionalSequence":
        return cls(denominator)

    @property
    def is_constant(self) -> bool:
        return self.denominator is None

    @property
    def bound(self) -> float:
        """Supremum of |terms|."""
        return 1.0

    def term(self, n: int) -> float:
        if n < 1:
            raise DomainError(f"term index must be >= 1, got {n}")
        if self.denominator is None:
            return 1.0
        return (n % self.denominator) / self.denominator

    def values_upto(self, n_trunc: int) -> np.ndarray:
        if self.denominator is None:
            return np.ones(n_trunc)
        n = np.arange(1, n_trunc + 1, dtype=np.int64)
        return (n % self.denominator) / float(self.denominator)

    def residue_values(self, period: int) -> np.ndarray:
        """Terms at n = 1..period (one full period must divide `period`)."""
        return self.values_upto(period)


SequenceLike = Union[FractionalSequence, "StepSequence"]


# ---------------------------------------------------------------------------
# inner products


@dataclass(frozen=True)
class InnerProductResult:
    """Value of an inner product plus how it was obtained.

    method is "closed" (residue-class digamma formula, error_bound 0 up to
    evaluator accuracy) or "truncated" (compensated partial sum; error_bound
    is the certified weight tail times the term bounds).
    """

    value: float
    method: str
    error_bound: float


def inner_product_truncated(
    a: SequenceLike,
    b: SequenceLike,
    n_trunc: int,
    weight: WeightScheme = DEFAULT_WEIGHT,
) -> InnerProductResult:
    """Partial sum of sum_n a_n b_n w(n) over n <= n_trunc, compensated.

    The error bound is sup|a| * sup|b| * (tail weight mass), which for the
    default weight is exactly 1/(n_trunc + 1) on unit-bounded sequences.
    """
    if n_trunc < 1:
        raise DomainError(f"n_trunc must be >= 1, got {n_trunc}")
    va = a.values_upto(n_trunc)
    vb = b.values_upto(n_trunc)
    if weight.is_default:
        w = _default_weight_values(n_trunc)
    else:
        w = weight.values(np.arange(1, n_trunc + 1, dtype=np.float64))
    value = compensated_sum(va * vb * w)
    bound = a.bound * b.bound * weight.tail_bound(n_trunc)
    return InnerProductResult(value=value, method="truncated", error_bound=bound)


def inner_product_closed(
    a: FractionalSequence,
    b: FractionalSequence,
    weight: WeightScheme = DEFAULT_WEIGHT,
) -> InnerProductResult:
    """Closed-form inner product of two fractional-part sequences.

    Groups the series by residue class modulo P = lcm of the denominators;
    each class telescopes to a digamma difference, leaving a finite sum of
    P terms. Cost is O(P). Only the default weight admits this form.
    """
    if not weight.is_default:
        raise UnsupportedWeightError(
            f"closed-form inner product requires the default weight, got {weight.name!r}"
        )
    if not isinstance(a, FractionalSequence) or not isinstance(b, FractionalSequence):
        raise DomainError("closed-form inner product is defined for fractional sequences")
    if a.denominator == 1 or b.denominator == 1:
        # frac(n/1) is identically zero.
        return InnerProductResult(value=0.0, method="closed", error_bound=0.0)
    if a.is_constant and b.is_constant:
        # sum_n w(n) telescopes to exactly 1.
        return InnerProductResult(value=1.0, method="closed", error_bound=0.0)
    if a.is_constant:
        period = b.denominator
    elif b.is_constant:
        period = a.denominator
    else:
        period = lcm(a.denominator, b.denominator)
    omega = _residue_class_weights(period)
    value = compensated_sum(a.residue_values(period) * b.residue_values(period) * omega)
    return InnerProductResult(value=value, method="closed", error_bound=0.0)


# ---------------------------------------------------------------------------
# step functions on (0, 1]


@dataclass(frozen=True)
class PiecewiseConstant:
    """A function on (0, 1] constant on each dyadic-harmonic piece.

    Piece n is the interval (1/(n+1), 1/n]. The first len(head) pieces carry
    the explicit values in `head`; beyond them the values repeat the `tail`
    pattern cyclically. tail None means the behaviour beyond the head is
    unspecified, which blocks norm computation but still allows pointwise
    reads inside the head.
    """

    head: tuple[float, ...]
    tail: Optional[tuple[float, ...]] = (0.0,)

    @classmethod
    def constant_one(cls) -> "PiecewiseConstant":
        """The constant function 1 on (0, 1]."""
        return cls(head=(), tail=(1.0,))

    @classmethod
    def indicator(cls, n: int) -> "PiecewiseConstant":
        """Indicator of (0, 1/n]: zero on the first n-1 pieces, then one."""
        if n < 1:
            raise DomainError(f"indicator index must be >= 1, got {n}")
        return cls(head=(0.0,) * (n - 1), tail=(1.0,))

    @classmethod
    def fractional_parts(cls, l: int) -> "PiecewiseConstant":
        """The step model of frac(n/l): piece n carries (n mod l)/l."""
        if l < 1:
            raise DomainError(f"denominator must be >= 1, got {l}")
        return cls(head=(), tail=tuple(((j + 1) % l) / l for j in range(l)))

    def value_at_piece(self, n: int) -> float:
        if n < 1:
            raise DomainError(f"piece index must be >= 1, got {n}")
        if n <= len(self.head):
            return self.head[n - 1]
        if self.tail is None:
            raise DomainError("value requested beyond head with no tail descriptor")
        return self.tail[(n - len(self.head) - 1) % len(self.tail)]

    def values_upto(self, n_trunc: int) -> np.ndarray:
        h = len(self.head)
        out = np.empty(n_trunc)
        take = min(h, n_trunc)
        out[:take] = self.head[:take]
        if n_trunc > h:
            if self.tail is None:
                raise DomainError("values requested beyond head with no tail descriptor")
            reps = -(-(n_trunc - h) // len(self.tail))
            out[h:] = np.tile(np.asarray(self.tail), reps)[: n_trunc - h]
        return out

    def max_abs(self) -> float:
        """Supremum of |f| (exact: the function takes finitely many values)."""
        vals = [abs(v) for v in self.head]
        if self.tail is not None:
            vals.extend(abs(v) for v in self.tail)
        return max(vals, default=0.0)

    def tail_sup(self, n_trunc: int) -> float:
        """Supremum of |f| over pieces beyond n_trunc."""
        if self.tail is None:
            raise DomainError("tail bound requested with no tail descriptor")
        vals = [abs(v) for v in self.head[n_trunc:]]
        vals.extend(abs(v) for v in self.tail)
        return max(vals, default=0.0)


@dataclass(frozen=True)
class StepSequence:
    """The sequence of piece values of a step function (its unitary image)."""

    source: PiecewiseConstant

    @property
    def bound(self) -> float:
        return self.source.max_abs()

    def term(self, n: int) -> float:
        return self.source.value_at_piece(n)

    def values_upto(self, n_trunc: int) -> np.ndarray:
        return self.source.values_upto(n_trunc)


def sequence_of(f: PiecewiseConstant) -> StepSequence:
    """Read a step function at the points 1/n (the unitary map to sequences)."""
    return StepSequence(source=f)


@dataclass(frozen=True)
class NormResult:
    """Partial squared norm plus a certified bound on the omitted tail."""

    value: float
    tail_bound: float


def norm_m(
    f: PiecewiseConstant,
    n_trunc: int,
    weight: WeightScheme = DEFAULT_WEIGHT,
) -> NormResult:
    """Squared norm of a step function: integral of f^2 over (1/(n_trunc+1), 1].

    The integral over piece n is exactly f_n^2 / (n(n+1)); the remaining mass
    is bounded through the tail descriptor. Functions without a descriptor
    are rejected, since their tail cannot be certified.
    """
    if n_trunc < 1:
        raise DomainError(f"n_trunc must be >= 1, got {n_trunc}")
    if f.tail is None:
        raise DomainError("norm requires a tail descriptor")
    vals = f.values_upto(n_trunc)
    if weight.is_default:
        w = _default_weight_values(n_trunc)
    else:
        w = weight.values(np.arange(1, n_trunc + 1, dtype=np.float64))
    value = compensated_sum(vals * vals * w)
    bound = f.tail_sup(n_trunc) ** 2 * weight.tail_bound(n_trunc)
    return NormResult(value=value, tail_bound=bound)


def dilate(m: int, f: PiecewiseConstant) -> PiecewiseConstant:
    """Compress a step function into (0, 1/m] and rescale: x -> sqrt(m) f(mx).

    The result is again a step function on the standard pieces: piece n of
    the output reads piece floor(n/m) of the input (zero for n < m), scaled
    by sqrt(m). Norms are preserved exactly. A periodic input tail of period
    p becomes a periodic output tail of period m*p.
    """
    if m < 1:
        raise DomainError(f"dilation factor must be >= 1, got {m}")
    if m == 1:
        return f
    root = math.sqrt(m)
    h = len(f.head)
    new_head = tuple(
        0.0 if n < m else root * f.value_at_piece(n // m)
        for n in range(1, m * (h + 1))
    )
    if f.tail is None:
        new_tail = None
    else:
        p = len(f.tail)
        start = m * (h + 1)
        new_tail = tuple(
            root * f.value_at_piece(n // m) for n in range(start, start + m * p)
        )
    return PiecewiseConstant(head=new_head, tail=new_tail)
