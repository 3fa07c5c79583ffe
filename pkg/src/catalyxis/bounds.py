"""Closed-form necessary conditions on entanglement catalysts.

Everything here is a *necessary* condition: passing every check does not
mean a catalyst exists, only that it was not ruled out.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IndexOutOfRange, NotIncomparable, ZeroDenominator
from .majorization import (
    MajorizationOrder,
    ProbVec,
    compare,
    majorizes,
    violation_set,
)

INF = math.inf


def _ratio(num: Fraction, den: Fraction):
    """num/den with a zero denominator read as +inf."""
    return INF if den == 0 else num / den


class PrefilterVerdict(enum.Enum):
    CatalysisImpossible = "CatalysisImpossible"
    NotExcluded = "NotExcluded"


@dataclass(frozen=True)
class PrefilterReport:
    p1_le_q1: bool
    pd_ge_qd: bool
    headsum_ok: bool
    dimension_ok: bool
    note: str = ""

    @property
    def verdict(self) -> PrefilterVerdict:
        if self.p1_le_q1 and self.pd_ge_qd and self.headsum_ok and self.dimension_ok:
            return PrefilterVerdict.NotExcluded
        return PrefilterVerdict.CatalysisImpossible


def prefilter(p: ProbVec, q: ProbVec) -> PrefilterReport:
    """Cheap conditions any catalysable pair must meet.

    The largest entry of p may not exceed that of q, the smallest may not
    fall below it, the first ``d - 1`` entries of p must not outweigh those
    of q, and incomparable pairs need ``d >= 4``. A pair with ``p`` already
    majorized by ``q`` needs no catalyst, so the dimension flag is waived
    for it.
    """
    d = max(len(p), len(q))
    a, b = p.padded(d), q.padded(d)
    order = compare(p, q)
    reachable = order in (MajorizationOrder.FirstMajorizedBySecond, MajorizationOrder.Equal)
    note = ""
    if reachable:
        note = "p is already majorized by q; no catalyst is needed"
    elif order is MajorizationOrder.SecondMajorizedByFirst:
        note = "q is strictly majorized by p; the pair is comparable"
    return PrefilterReport(
        p1_le_q1=a[0] <= b[0],
        pd_ge_qd=a[-1] >= b[-1],
        headsum_ok=sum(a[:-1], Fraction(0)) <= sum(b[:-1], Fraction(0)),
        dimension_ok=reachable or d >= 4,
        note=note,
    )


@dataclass(frozen=True)
class Theorem1Bounds:
    """Entanglement window for catalysts of ``p -> q``.

    ``a = min(a_head, a_tail)`` with ``a_head = q_1 / q_m`` and
    ``a_tail = q_{n+1} / q_d``; ``b = max_{l in L} q_l / q_{l+1}``.
    Every catalyst ``r`` (zeros stripped, length k) satisfies
    ``r_1 / r_k > b``, ``r_1 / r_2 < a_head`` and ``r_{k-1} / r_k < a_tail``.
    For qubit catalysts the last two read ``r_1 / r_2 < a``. Interior
    ratios ``r_v / r_{v+1}`` with ``1 < v < k - 1`` are not capped by ``a``:
    catalysts with an interior ratio above ``a`` exist (see
    ``INTERIOR_RATIO_WITNESS``). Ratios with a zero denominator are
    ``math.inf``; an infinite ``b`` means no catalyst exists.
    """

    a: Fraction | float
    b: Fraction | float
    m: int
    n: int
    indices: tuple[int, ...] = field(default=())
    a_head: Fraction | float = INF
    a_tail: Fraction | float = INF


# p, q, r with r catalysing p -> q although r_2 / r_3 = 7 exceeds a = 28/5
INTERIOR_RATIO_WITNESS = (
    ("0.49", "0.30", "0.13", "0.06", "0.02"),
    ("0.56", "0.25", "0.10", "0.08", "0.01"),
    ("0.8", "0.175", "0.025"),
)


def _require_violations(p: ProbVec, q: ProbVec):
    L = violation_set(p, q)
    if not L:
        raise NotIncomparable("p is majorized by q; the violation set is empty")
    return L


def theorem1_bounds(p: ProbVec, q: ProbVec) -> Theorem1Bounds:
    L = _require_violations(p, q)
    d = max(len(p), len(q))
    qq = q.padded(d)
    m, n = L.m, L.n
    # q is 1-indexed in the formulas; q_m > 0 always holds for m in L
    a_head = _ratio(qq[0], qq[m - 1])
    a_tail = _ratio(qq[n], qq[d - 1])
    b = max(_ratio(qq[l - 1], qq[l]) for l in L)
    return Theorem1Bounds(
        a=min(a_head, a_tail), b=b, m=m, n=n, indices=L.indices, a_head=a_head, a_tail=a_tail
    )


def corollary_excludes(p: ProbVec, q: ProbVec) -> bool:
    L = _require_violations(p, q)
    d = max(len(p), len(q))
    qq = q.padded(d)
    return qq[0] == qq[L.m - 1] or qq[L.n] == qq[d - 1]


@dataclass(frozen=True)
class QubitWindow:
    t_lo: Fraction
    t_hi: Fraction

    @property
    def empty(self) -> bool:
        return self.t_lo >= self.t_hi

    def contains(self, t) -> bool:
        return self.t_lo < t < self.t_hi


def _one_over_one_plus(x) -> Fraction:
    return Fraction(0) if x == INF else 1 / (x + 1)


def qubit_window(p: ProbVec, q: ProbVec) -> QubitWindow:
    """Open interval of t in which a qubit catalyst ``(1 - t, t)`` can lie."""
    tb = theorem1_bounds(p, q)
    return QubitWindow(_one_over_one_plus(tb.a), _one_over_one_plus(tb.b))


@dataclass(frozen=True)
class DimensionBound:
    """Lower bound on catalyst dimension.

    ``k_min`` is None when no catalyst can exist at all. ``value`` is the
    real-valued threshold that k must strictly exceed (None when undefined).
    """

    k_min: int | None
    value: float | None

    @property
    def no_catalyst(self) -> bool:
        return self.k_min is None


def dimension_lower_bound(p: ProbVec, q: ProbVec) -> DimensionBound:
    tb = theorem1_bounds(p, q)
    a, b = tb.a, tb.b
    if a <= 1 or b == INF:
        return DimensionBound(k_min=None, value=None)
    value = math.log(b) / math.log(a) + 1
    # least k with a^(k-1) > b, decided exactly; a is finite because q_m > 0
    k, power = 1, Fraction(1)
    while power <= b:
        power *= a
        k += 1
    return DimensionBound(k_min=max(k, 2), value=value)


def elementary_symmetric(p, j: int) -> Fraction:
    """Exact elementary symmetric polynomial ``e_j`` of the entries of ``p``."""
    vals = list(p)
    if not 0 <= j <= len(vals):
        raise IndexOutOfRange(f"j={j} outside 0..{len(vals)}")
    return elementary_symmetric_all(vals)[j]


def elementary_symmetric_all(vals) -> list[Fraction]:
    e = [Fraction(1)] + [Fraction(0)] * len(vals)
    for i, x in enumerate(vals, start=1):
        for j in range(i, 0, -1):
            e[j] += x * e[j - 1]
    return e


def sanders_R(r: ProbVec) -> Fraction:
    e = elementary_symmetric_all(list(r)) + [Fraction(0)] * 3
    e2, e3 = e[2], e[3]
    return (e2 - 2 * e3) / (1 - 2 * e2 + 3 * e3)


@dataclass(frozen=True)
class SandersBounds:
    """Earlier symmetric-polynomial bounds, kept for comparison.

    ``dim_bound`` / ``R_bound`` are None when inapplicable (a vanishing
    denominator or a zero product of entries); such bounds count as trivial.
    """

    dim_bound: float | None
    dim_trivial: bool
    R_bound: Fraction | None
    R_trivial: bool
    R_of_r: Fraction | None = None
    r_satisfies_R: bool | None = None
    notes: tuple[str, ...] = ()


def sanders_bounds(
    p: ProbVec, q: ProbVec, r: ProbVec | None = None, strict: bool = False
) -> SandersBounds:
    """Symmetric-polynomial dimension bound and R bound for ``p -> q``.

    With ``strict=True`` an inapplicable bound raises ZeroDenominator
    instead of being recorded in ``notes``.
    """
    _require_violations(p, q)
    d = max(len(p), len(q))
    ep = elementary_symmetric_all(p.padded(d))
    eq = elementary_symmetric_all(q.padded(d))
    notes = []

    dim_bound = None
    dim_trivial = True
    if ep[d] == eq[d]:
        notes.append("dimension bound inapplicable: e_d(p) = e_d(q)")
    elif 0 in (ep[d], eq[d], ep[d - 1], eq[d - 1]):
        notes.append("dimension bound inapplicable: a vector has zero entries")
    else:
        num = eq[d - 1] / ep[d - 1]
        den = ep[d] / eq[d]
        dim_bound = math.log2(num) / math.log2(den) + 1
        # bound < 2  <=>  log(num)/log(den) < 1, decided on the rationals
        dim_trivial = num < den if den > 1 else num > den

    R_bound = None
    R_trivial = True
    zeros = [Fraction(0)] * 4
    e2p, e3p = (ep + zeros)[2:4]
    e2q, e3q = (eq + zeros)[2:4]
    if e2p == e2q:
        notes.append("R bound inapplicable: e_2(p) = e_2(q)")
    else:
        R_bound = -(e3p - e3q) / (e2p - e2q)
        R_trivial = R_bound <= 0

    if strict and notes:
        raise ZeroDenominator("; ".join(notes))
    R_of_r = ok = None
    if r is not None:
        R_of_r = sanders_R(r)
        ok = None if R_bound is None else R_of_r >= R_bound
    return SandersBounds(dim_bound, dim_trivial, R_bound, R_trivial, R_of_r, ok, tuple(notes))


class CandidateVerdict(enum.Enum):
    """Outcome of screening a candidate catalyst against the closed-form bounds."""

    ExcludedByPrefilter = "ExcludedByPrefilter"
    ExcludedByRatioCap = "ExcludedByRatioCap"
    ExcludedBySpread = "ExcludedBySpread"
    NotExcluded = "NotExcluded"


def consecutive_ratios(r: ProbVec) -> list[Fraction]:
    """``r_v / r_{v+1}`` over the nonzero part of ``r``."""
    e = r.stripped().entries
    return [e[v] / e[v + 1] for v in range(len(e) - 1)]


def check_candidate(p: ProbVec, q: ProbVec, r: ProbVec) -> CandidateVerdict:
    """Screen ``r`` as a catalyst for ``p -> q``.

    The ratio caps on the two outer ratios reject catalysts too close to a
    product state; the spread test rejects those too close to maximally
    entangled. Trailing zeros of ``r`` are ignored. Only conditions that
    hold for every catalyst are applied, so a true catalyst always comes
    back NotExcluded.
    """
    if majorizes(q, p):
        return CandidateVerdict.NotExcluded
    if prefilter(p, q).verdict is PrefilterVerdict.CatalysisImpossible:
        return CandidateVerdict.ExcludedByPrefilter
    tb = theorem1_bounds(p, q)
    ratios = consecutive_ratios(r)
    if ratios and (ratios[0] >= tb.a_head or ratios[-1] >= tb.a_tail):
        return CandidateVerdict.ExcludedByRatioCap
    rs = r.stripped()
    if tb.b == INF or rs[0] / rs[-1] <= tb.b:
        return CandidateVerdict.ExcludedBySpread
    return CandidateVerdict.NotExcluded


def reverse_summary(p: ProbVec, q: ProbVec) -> dict:
    """Violation set of the reverse direction ``q -> p``."""
    L = violation_set(q, p)
    return {"indices": list(L.indices), "m": L.m, "n": L.n}


def strict_gap_relations(p: ProbVec, q: ProbVec) -> dict:
    """Entry-level consequences of an incomparable pair at the extreme indices.

    Returns the booleans ``p_m > q_m`` and ``p_{n+1} < q_{n+1}``.
    """
    L = _require_violations(p, q)
    d = max(len(p), len(q))
    a, b = p.padded(d), q.padded(d)
    return {"pm_gt_qm": a[L.m - 1] > b[L.m - 1], "pn1_lt_qn1": a[L.n] < b[L.n]}


__all__ = [
    "CandidateVerdict",
    "DimensionBound",
    "PrefilterReport",
    "PrefilterVerdict",
    "QubitWindow",
    "SandersBounds",
    "Theorem1Bounds",
    "check_candidate",
    "consecutive_ratios",
    "corollary_excludes",
    "dimension_lower_bound",
    "elementary_symmetric",
    "prefilter",
    "qubit_window",
    "reverse_summary",
    "sanders_R",
    "sanders_bounds",
    "theorem1_bounds",
]
