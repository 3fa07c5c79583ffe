"""Transformation quality with a catalyst attached."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .majorization import (
    ProbVec,
    majorization_distance,
    majorizes,
    pmax,
    qubit,
    tensor,
)


def pmax_catalyzed(p: ProbVec, q: ProbVec, r: ProbVec) -> Fraction:
    return pmax(tensor(p, r), tensor(q, r))


def delta_catalyzed(p: ProbVec, q: ProbVec, r: ProbVec) -> Fraction:
    return majorization_distance(tensor(p, r), tensor(q, r))


def is_catalyst(p: ProbVec, q: ProbVec, r: ProbVec) -> bool:
    """Exact test of ``p (x) r`` majorized by ``q (x) r``."""
    return majorizes(tensor(q, r), tensor(p, r))


@dataclass(frozen=True)
class CurveSample:
    t: Fraction
    pmax: Fraction
    delta: Fraction

    @property
    def is_catalytic(self) -> bool:
        return self.delta == 0


@dataclass(frozen=True)
class TransformCurve:
    p: ProbVec
    q: ProbVec
    samples: tuple[CurveSample, ...]


DEFAULT_SAMPLES = 1001


def curve(p: ProbVec, q: ProbVec, samples: int = DEFAULT_SAMPLES) -> TransformCurve:
    """Sample P_max and the majorization distance along ``r = (1 - t, t)``.

    ``t`` runs over ``j / (2 (samples - 1))`` for ``j = 0 .. samples - 1``,
    covering ``[0, 1/2]`` with exact rational steps.
    """
    if samples < 2:
        raise ValueError("samples must be at least 2")
    step = 2 * (samples - 1)
    out = []
    for j in range(samples):
        t = Fraction(j, step)
        pr, qr = tensor(p, qubit(t)), tensor(q, qubit(t))
        out.append(CurveSample(t, pmax(pr, qr), majorization_distance(pr, qr)))
    return TransformCurve(p, q, tuple(out))
