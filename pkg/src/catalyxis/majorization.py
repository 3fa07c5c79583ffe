"""Exact majorization over probability (Schmidt) vectors.

All scalars are :class:`fractions.Fraction`; nothing here ever rounds.
Vectors of different length are compared after padding the shorter one
with zeros.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from itertools import accumulate
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .errors import NegativeEntry, SumNotOne

Rational = Fraction


def to_rational(x) -> Fraction:
    """Convert ``x`` to an exact Fraction.

    Strings may be decimals (``"0.45"``) or ratios (``"9/20"``). Floats are
    read through their shortest repr, so ``0.45`` becomes ``9/20`` rather
    than the nearest binary double.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not probabilities")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (_RationalABC, Decimal)):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite entry {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational")


@dataclass(frozen=True)
class ProbVec:
    """Probability vector sorted non-increasing, summing to exactly one."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        e = self.entries
        if not e:
            raise ValueError("probability vector must be nonempty")
        if any(e[i] < e[i + 1] for i in range(len(e) - 1)):
            raise ValueError("entries must be sorted non-increasing; use make_probvec")
        if e[-1] < 0:
            raise NegativeEntry(len(e) - 1, e[-1])
        total = sum(e, Fraction(0))
        if total != 1:
            raise SumNotOne(total - 1)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def padded(self, length: int) -> tuple[Fraction, ...]:
        return self.entries + (Fraction(0),) * (length - len(self.entries))

    def stripped(self) -> "ProbVec":
        """The same vector with trailing zeros removed."""
        e = self.entries
        n = len(e)
        while n > 1 and e[n - 1] == 0:
            n -= 1
        return self if n == len(e) else ProbVec(e[:n])

    def to_floats(self) -> list[float]:
        return [float(x) for x in self.entries]

    def __repr__(self) -> str:
        return "ProbVec(" + ", ".join(str(x) for x in self.entries) + ")"


def make_probvec(raw: Iterable) -> ProbVec:
    """Validate ``raw`` and return it as a sorted :class:`ProbVec`.

    >>> make_probvec(["0.35", "0.45", "0.08", "0.12"])
    ProbVec(9/20, 7/20, 3/25, 2/25)
    """
    if isinstance(raw, ProbVec):
        return raw
    vals = [to_rational(x) for x in raw]
    if not vals:
        raise ValueError("probability vector must be nonempty")
    for i, v in enumerate(vals):
        if v < 0:
            raise NegativeEntry(i, v)
    total = sum(vals, Fraction(0))
    if total != 1:
        raise SumNotOne(total - 1)
    return ProbVec(tuple(sorted(vals, reverse=True)))


def uniform(k: int) -> ProbVec:
    return ProbVec((Fraction(1, k),) * k)


def qubit(t) -> ProbVec:
    """The two-level vector ``(1 - t, t)`` for ``0 <= t <= 1/2``."""
    t = to_rational(t)
    return make_probvec((1 - t, t))


def tensor(p: ProbVec, r: ProbVec) -> ProbVec:
    return ProbVec(tuple(sorted((a * b for a in p for b in r), reverse=True)))


def prefix_sums(p: ProbVec | Sequence[Fraction]) -> list[Fraction]:
    return list(accumulate(p))


class MajorizationOrder(enum.Enum):
    FirstMajorizedBySecond = "FirstMajorizedBySecond"
    SecondMajorizedByFirst = "SecondMajorizedByFirst"
    Equal = "Equal"
    Incomparable = "Incomparable"


def _padded_pair(p: ProbVec, q: ProbVec):
    n = max(len(p), len(q))
    return p.padded(n), q.padded(n)


def partial_sum_gaps(p: ProbVec, q: ProbVec) -> list[Fraction]:
    """``sum_{i<=l} (p_i - q_i)`` for ``l = 1..n`` over the zero-padded pair."""
    a, b = _padded_pair(p, q)
    return list(accumulate(x - y for x, y in zip(a, b)))


def compare(p: ProbVec, q: ProbVec) -> MajorizationOrder:
    gaps = partial_sum_gaps(p, q)
    above = any(g > 0 for g in gaps)
    below = any(g < 0 for g in gaps)
    if above and below:
        return MajorizationOrder.Incomparable
    if above:
        return MajorizationOrder.SecondMajorizedByFirst
    if below:
        return MajorizationOrder.FirstMajorizedBySecond
    return MajorizationOrder.Equal


def majorizes(q: ProbVec, p: ProbVec) -> bool:
    """True when ``p`` is majorized by ``q`` (``p`` can reach ``q`` by LOCC)."""
    return all(g <= 0 for g in partial_sum_gaps(p, q))


@dataclass(frozen=True)
class ViolationSet:
    """Indices ``l`` (1-based) where the partial sum of p exceeds that of q."""

    indices: tuple[int, ...]

    @property
    def m(self) -> int | None:
        return self.indices[0] if self.indices else None

    @property
    def n(self) -> int | None:
        return self.indices[-1] if self.indices else None

    def __bool__(self) -> bool:
        return bool(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


def violation_set(p: ProbVec, q: ProbVec) -> ViolationSet:
    gaps = partial_sum_gaps(p, q)
    return ViolationSet(tuple(l for l, g in enumerate(gaps, start=1) if g > 0))


def majorization_distance(p: ProbVec, q: ProbVec) -> Fraction:
    # last gap is 0, so the max is never negative
    return 2 * max(partial_sum_gaps(p, q))


def pmax(p: ProbVec, q: ProbVec) -> Fraction:
    """Maximum probability of converting p into q by LOCC.

    Minimum over ``l`` of the tail ratio ``E_l(p) / E_l(q)`` with
    ``E_l(x) = 1 - sum_{i<l} x_i``. A zero tail in q against a nonzero
    tail in p counts as +inf; where both tails vanish the index is skipped.
    """
    a, b = _padded_pair(p, q)
    best = Fraction(1)  # l = 1: both tails equal one
    head_p = head_q = Fraction(0)
    for x, y in zip(a[:-1], b[:-1]):
        head_p += x
        head_q += y
        tail_p = 1 - head_p
        tail_q = 1 - head_q
        if tail_q == 0:
            continue
        ratio = tail_p / tail_q
        if ratio < best:
            best = ratio
    return best
