"""Brute-force catalyst discovery.

``scan_qubit_regions`` walks the qubit family ``(1 - t, t)`` and sharpens
each region edge by bisection on the exact predicate. ``grid_search``
enumerates every sorted k-dimensional catalyst with entries ``n_i / N``.
Both use the int64 kernels when the scaled values fit, and exact
Fractions otherwise.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import ResourceLimit
from .majorization import ProbVec, qubit
from .metrics import is_catalyst

DEFAULT_RESOLUTION = 1000
DEFAULT_PRECISION = Fraction(1, 10**9)
DEFAULT_LIMIT = 10**8
LIMIT_ENV = "CATALYXIS_LIMIT"


def default_limit() -> int:
    raw = os.environ.get(LIMIT_ENV)
    return int(raw) if raw else DEFAULT_LIMIT


@dataclass(frozen=True)
class Region:
    """Closed t-interval whose grid points are all catalytic.

    ``lo``/``hi`` are catalytic. When refined, ``lo_outer``/``hi_outer``
    are the non-catalytic ends of the final bisection bracket.
    """

    lo: Fraction
    hi: Fraction
    lo_refined: bool
    hi_refined: bool
    lo_outer: Fraction | None = None
    hi_outer: Fraction | None = None

    def __contains__(self, t) -> bool:
        return self.lo <= t <= self.hi


@dataclass(frozen=True)
class RegionReport:
    regions: tuple[Region, ...]
    scan_resolution: int
    refine_precision: Fraction


def qubit_grid_mask(p: ProbVec, q: ProbVec, resolution: int) -> np.ndarray:
    """Catalysis flags at ``t = j / (2 resolution)``, ``j = 0 .. resolution``."""
    total = 2 * resolution
    j = np.arange(resolution + 1, dtype=np.int64)
    P, Q, den = _kernels.scale_pair(p, q)
    if _kernels.fits_int64(den, total):
        R = np.stack([total - j, j], axis=1)
        return _kernels.catalytic_rows(P, Q, R)
    return np.array(
        [is_catalyst(p, q, qubit(Fraction(int(i), total))) for i in j], dtype=np.bool_
    )


def _refine(p, q, inside: Fraction, outside: Fraction, precision: Fraction):
    """Shrink a bracket with one catalytic and one non-catalytic end."""
    while abs(inside - outside) >= precision:
        mid = (inside + outside) / 2
        if is_catalyst(p, q, qubit(mid)):
            inside = mid
        else:
            outside = mid
    return inside, outside


def scan_qubit_regions(
    p: ProbVec,
    q: ProbVec,
    resolution: int = DEFAULT_RESOLUTION,
    refine_precision=DEFAULT_PRECISION,
) -> RegionReport:
    """Find the disjoint t-ranges where ``(1 - t, t)`` catalyses ``p -> q``.

    Detection is sample based: a region narrower than the grid spacing can
    be missed, and no claim is made about behaviour between grid points
    beyond the refined edges.
    """
    if resolution < 10:
        raise ValueError("resolution must be at least 10")
    precision = Fraction(refine_precision)
    if precision <= 0:
        raise ValueError("refine_precision must be positive")
    mask = qubit_grid_mask(p, q, resolution)
    step = 2 * resolution
    regions = []
    j = 0
    while j <= resolution:
        if not mask[j]:
            j += 1
            continue
        start = j
        while j + 1 <= resolution and mask[j + 1]:
            j += 1
        end = j
        lo, lo_out = Fraction(start, step), None
        if start > 0:
            lo, lo_out = _refine(p, q, lo, Fraction(start - 1, step), precision)
        hi, hi_out = Fraction(end, step), None
        if end < resolution:
            hi, hi_out = _refine(p, q, hi, Fraction(end + 1, step), precision)
        regions.append(Region(lo, hi, start > 0, end < resolution, lo_out, hi_out))
        j += 1
    return RegionReport(tuple(regions), resolution, precision)


@dataclass(frozen=True)
class GridSearchResult:
    k: int
    resolution: int
    catalysts_found: tuple[ProbVec, ...]
    exhausted: bool
    candidates_checked: int


def grid_search(
    p: ProbVec,
    q: ProbVec,
    k: int,
    resolution: int,
    limit: int | None = None,
    stop_at_first: bool = False,
) -> GridSearchResult:
    """Every sorted ``r = (n_1/N, ..., n_k/N)`` with ``N = resolution`` that catalyses.

    Raises :class:`ResourceLimit` before enumerating anything if the number
    of candidates exceeds ``limit`` (default: ``$CATALYXIS_LIMIT`` or 1e8).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if resolution < k:
        raise ValueError("resolution must be at least k")
    limit = default_limit() if limit is None else limit
    count = _kernels.count_compositions(resolution, k)
    if count > limit:
        raise ResourceLimit(count, limit)

    P, Q, den = _kernels.scale_pair(p, q)
    use_ints = _kernels.fits_int64(den, resolution)
    found = []
    checked = 0
    for block in _kernels.composition_chunks(resolution, k):
        if use_ints:
            hits = block[_kernels.catalytic_rows(P, Q, block)]
        else:
            hits = [row for row in block if is_catalyst(p, q, _as_probvec(row, resolution))]
        if stop_at_first and len(hits):
            found.append(_as_probvec(hits[0], resolution))
            # index of the first hit within this block
            idx = int(np.flatnonzero((block == hits[0]).all(axis=1))[0])
            checked += idx + 1
            return GridSearchResult(k, resolution, tuple(found), checked == count, checked)
        found.extend(_as_probvec(row, resolution) for row in hits)
        checked += len(block)
    return GridSearchResult(k, resolution, tuple(found), True, checked)


def _as_probvec(row, total: int) -> ProbVec:
    return ProbVec(tuple(Fraction(int(n), total) for n in row))


def empirical_min_dimension(
    p: ProbVec, q: ProbVec, k_max: int, resolution: int, limit: int | None = None
) -> int | None:
    """Smallest grid dimension ``k <= k_max`` holding a catalyst, else None."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    for k in range(1, min(k_max, resolution) + 1):
        if grid_search(p, q, k, resolution, limit=limit, stop_at_first=True).catalysts_found:
            return k
    return None
