"""Integer-exact batch kernels for catalysis checks.

Rational vectors are rescaled to a shared integer denominator, so tensor
products and their partial sums stay exact in int64 provided the scaled
total stays below ``INT64_SAFE`` (callers check with :func:`fits_int64`).

Two interchangeable backends: numba-compiled loops, and vectorised numpy.
``CATALYXIS_BACKEND=numpy`` forces the numpy path; it is also used when
numba is not importable.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

ENV_VAR = "CATALYXIS_BACKEND"
BACKENDS = ("numba", "numpy")
INT64_SAFE = 2**62


def _backend_from_env() -> str:
    name = os.environ.get(ENV_VAR, "").strip().lower() or "numba"
    if name not in BACKENDS:
        raise ValueError(f"{ENV_VAR} must be one of {BACKENDS}, got {name!r}")
    if name == "numba" and numba is None:
        return "numpy"
    return name


_backend = _backend_from_env()


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> str:
    """Switch backend at runtime; returns the previous one."""
    global _backend
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and numba is None:
        raise RuntimeError("numba is not installed")
    prev, _backend = _backend, name
    return prev


def scale_pair(p, q) -> tuple[list[int], list[int], int]:
    """Integer numerators of p and q over their least common denominator.

    Returned as Python ints; convert to int64 only after :func:`fits_int64`.
    """
    n = max(len(p), len(q))
    pp = list(p) + [Fraction(0)] * (n - len(p))
    qq = list(q) + [Fraction(0)] * (n - len(q))
    den = math.lcm(*(x.denominator for x in pp + qq))
    P = [x.numerator * (den // x.denominator) for x in pp]
    Q = [x.numerator * (den // x.denominator) for x in qq]
    return P, Q, den


def fits_int64(den: int, total: int) -> bool:
    return den * total < INT64_SAFE


# --- pure-python sources, compiled by numba when available -----------------

def _catalytic_rows_loop(P, Q, R, out):
    d = P.shape[0]
    m, k = R.shape
    size = d * k
    bp = np.empty(size, dtype=np.int64)
    bq = np.empty(size, dtype=np.int64)
    for row in range(m):
        idx = 0
        for x in range(k):
            rx = R[row, x]
            for i in range(d):
                bp[idx] = P[i] * rx
                bq[idx] = Q[i] * rx
                idx += 1
        bp.sort()
        bq.sort()
        sp = 0
        sq = 0
        ok = True
        # ascending order, so walk from the end for descending partial sums
        for j in range(size - 1, -1, -1):
            sp += bp[j]
            sq += bq[j]
            if sp > sq:
                ok = False
                break
        out[row] = ok


def _fill_compositions(a, out):
    """Write successive non-increasing tuples into ``out``, starting at ``a``.

    ``a`` is advanced in place to the next unwritten tuple. Order is
    reverse-lexicographic. Returns ``(count_written, exhausted)``.
    """
    k = a.shape[0]
    cap = out.shape[0]
    count = 0
    while count < cap:
        for j in range(k):
            out[count, j] = a[j]
        count += 1
        i = k - 2
        tail = a[k - 1]
        found = False
        while i >= 0:
            c = a[i] - 1
            s = tail + 1
            if c >= 0 and s <= (k - 1 - i) * c:
                a[i] = c
                for j in range(i + 1, k):
                    v = c if c < s else s
                    a[j] = v
                    s -= v
                found = True
                break
            tail += a[i]
            i -= 1
        if not found:
            return count, True
    return count, False


if numba is not None:
    _catalytic_rows_jit = numba.njit(cache=True)(_catalytic_rows_loop)
    _fill_compositions_jit = numba.njit(cache=True)(_fill_compositions)


def _catalytic_rows_numpy(P, Q, R):
    m = R.shape[0]
    bp = (R[:, :, None] * P[None, None, :]).reshape(m, -1)
    bq = (R[:, :, None] * Q[None, None, :]).reshape(m, -1)
    cp = np.cumsum(np.sort(bp, axis=1)[:, ::-1], axis=1)
    cq = np.cumsum(np.sort(bq, axis=1)[:, ::-1], axis=1)
    return np.all(cp <= cq, axis=1)


def catalytic_rows(P: np.ndarray, Q: np.ndarray, R: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Boolean mask: row ``r`` of ``R`` satisfies ``P (x) r`` majorized by ``Q (x) r``.

    ``P``, ``Q`` are integer numerators over a common denominator, rows of
    ``R`` integer weights over another common denominator.
    """
    backend = backend or _backend
    P = np.ascontiguousarray(P, dtype=np.int64)
    Q = np.ascontiguousarray(Q, dtype=np.int64)
    R = np.ascontiguousarray(R, dtype=np.int64)
    if R.shape[0] == 0:
        return np.zeros(0, dtype=np.bool_)
    if backend == "numba":
        out = np.empty(R.shape[0], dtype=np.bool_)
        _catalytic_rows_jit(P, Q, R, out)
        return out
    return _catalytic_rows_numpy(P, Q, R)


def composition_chunks(total: int, k: int, chunk: int = 65536, backend: str | None = None):
    """Yield int64 arrays holding every non-increasing k-tuple summing to ``total``."""
    backend = backend or _backend
    fill = _fill_compositions_jit if backend == "numba" else _fill_compositions
    a = np.zeros(k, dtype=np.int64)
    a[0] = total
    done = False
    while not done:
        out = np.empty((chunk, k), dtype=np.int64)
        count, done = fill(a, out)
        yield out[:count]


def count_compositions(total: int, k: int) -> int:
    """Number of partitions of ``total`` into at most ``k`` parts."""
    # ways[n] over parts of size <= j equals partitions of n into at most j parts
    ways = [1] + [0] * total
    for part in range(1, k + 1):
        for n in range(part, total + 1):
            ways[n] += ways[n - part]
    return ways[total]
