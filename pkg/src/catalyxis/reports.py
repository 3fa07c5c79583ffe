"""Problem-file parsing and JSON/CSV report serialization.

Rationals go out as ``{"exact": "3/11", "decimal": "0.272727272727"}``;
the exact string is authoritative when reading back.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from pathlib import Path

from . import bounds as _bounds
from .majorization import (
    ProbVec,
    compare,
    majorization_distance,
    make_probvec,
    pmax,
    to_rational,
    violation_set,
)
from .metrics import TransformCurve
from .search import GridSearchResult, RegionReport

SCHEMA_VERSION = 1
SIG_DIGITS = 12
_CTX = Context(prec=SIG_DIGITS, rounding=ROUND_HALF_EVEN)


def decimal_str(x, digits: int = SIG_DIGITS) -> str:
    """Exact rational rendered with ``digits`` significant digits, half-even."""
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        x = Fraction(x)
    x = Fraction(x)
    ctx = _CTX if digits == SIG_DIGITS else Context(prec=digits, rounding=ROUND_HALF_EVEN)
    d = ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    s = format(d, "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def encode_rational(x) -> dict | str | None:
    if x is None:
        return None
    if isinstance(x, float) and math.isinf(x):
        return {"exact": "inf", "decimal": "inf"}
    x = Fraction(x)
    return {"exact": str(x), "decimal": decimal_str(x)}


def decode_rational(obj):
    if obj is None:
        return None
    exact = obj["exact"] if isinstance(obj, dict) else obj
    return math.inf if exact == "inf" else Fraction(exact)


# --- problem files ------------------------------------------------------------

@dataclass(frozen=True)
class ProblemFile:
    """Input pair (and optional catalyst) as exact decimal strings."""

    p: tuple[str, ...]
    q: tuple[str, ...]
    r: tuple[str, ...] | None = None

    def __post_init__(self):
        for name in ("p", "q", "r"):
            vals = getattr(self, name)
            if vals is None:
                continue
            for i, s in enumerate(vals):
                try:
                    to_rational(s)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ValueError(f"{name}[{i}] = {s!r} is not a rational number") from exc

    def vectors(self) -> tuple[ProbVec, ProbVec, ProbVec | None]:
        return (
            _named_probvec("p", self.p),
            _named_probvec("q", self.q),
            None if self.r is None else _named_probvec("r", self.r),
        )

    def to_dict(self) -> dict:
        d = {"p": list(self.p), "q": list(self.q)}
        if self.r is not None:
            d["r"] = list(self.r)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "ProblemFile":
        missing = [k for k in ("p", "q") if k not in d]
        if missing:
            raise ValueError(f"problem is missing {', '.join(missing)}")
        r = d.get("r")
        return cls(
            tuple(_as_text(x) for x in d["p"]),
            tuple(_as_text(x) for x in d["q"]),
            None if r is None else tuple(_as_text(x) for x in r),
        )

    @classmethod
    def from_json(cls, text: str) -> "ProblemFile":
        # parse_float=str keeps "0.45" as written instead of a binary double
        return cls.from_dict(json.loads(text, parse_float=str, parse_int=str))

    @classmethod
    def from_csv(cls, text: str) -> "ProblemFile":
        """Rows ``p,0.45,...`` and ``q,...`` (labels optional, p first)."""
        rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
        labelled = {}
        unlabelled = []
        for row in rows:
            head = row[0].strip().lower()
            cells = [c.strip() for c in row if c.strip()]
            if head in ("p", "q", "r"):
                labelled[head] = tuple(cells[1:])
            else:
                unlabelled.append(tuple(cells))
        for name, vals in zip(("p", "q", "r"), unlabelled):
            labelled.setdefault(name, vals)
        return cls.from_dict(labelled)

    @classmethod
    def load(cls, path) -> "ProblemFile":
        path = Path(path)
        text = path.read_text()
        if path.suffix.lower() == ".csv" or not text.lstrip().startswith("{"):
            return cls.from_csv(text)
        return cls.from_json(text)


def _as_text(x) -> str:
    if isinstance(x, str):
        return x.strip()
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise ValueError(f"entry {x!r} must be a decimal string")
    return str(x)


def _named_probvec(name: str, vals) -> ProbVec:
    try:
        return make_probvec(vals)
    except ValueError as exc:
        raise ValueError(f"{name}: {exc}") from exc


def vector_strings(v: ProbVec) -> list[str]:
    return [str(x) for x in v]


# --- report documents ---------------------------------------------------------

def check_document(p: ProbVec, q: ProbVec) -> dict:
    L = violation_set(p, q)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "check",
        "p": vector_strings(p),
        "q": vector_strings(q),
        "order": compare(p, q).value,
        "violation_set": {"indices": list(L.indices), "m": L.m, "n": L.n},
        "reverse_violation_set": _bounds.reverse_summary(p, q),
        "delta": encode_rational(majorization_distance(p, q)),
        "pmax": encode_rational(pmax(p, q)),
    }


@dataclass(frozen=True)
class CatalystBoundsReport:
    p: ProbVec
    q: ProbVec
    prefilter: _bounds.PrefilterReport
    theorem1: _bounds.Theorem1Bounds
    corollary_excludes: bool
    window: _bounds.QubitWindow
    dimension: _bounds.DimensionBound
    sanders: _bounds.SandersBounds
    reverse: dict

    def to_dict(self) -> dict:
        pf, t1, s = self.prefilter, self.theorem1, self.sanders
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "bounds",
            "p": vector_strings(self.p),
            "q": vector_strings(self.q),
            "prefilter": {
                "p1_le_q1": pf.p1_le_q1,
                "pd_ge_qd": pf.pd_ge_qd,
                "headsum_ok": pf.headsum_ok,
                "dimension_ok": pf.dimension_ok,
                "verdict": pf.verdict.value,
                "note": pf.note,
            },
            "theorem1": {
                "a": encode_rational(t1.a),
                "b": encode_rational(t1.b),
                "m": t1.m,
                "n": t1.n,
                "indices": list(t1.indices),
                "a_head": encode_rational(t1.a_head),
                "a_tail": encode_rational(t1.a_tail),
            },
            "corollary_excludes": self.corollary_excludes,
            "qubit_window": {
                "t_lo": encode_rational(self.window.t_lo),
                "t_hi": encode_rational(self.window.t_hi),
                "empty": self.window.empty,
            },
            "dimension_bound": {
                "no_catalyst": self.dimension.no_catalyst,
                "k_min": self.dimension.k_min,
                "value": self.dimension.value,
            },
            "sanders": {
                "dim_bound": s.dim_bound,
                "dim_trivial": s.dim_trivial,
                "R_bound": encode_rational(s.R_bound),
                "R_trivial": s.R_trivial,
                "R_of_r": encode_rational(s.R_of_r),
                "r_satisfies_R": s.r_satisfies_R,
                "notes": list(s.notes),
            },
            "reverse_violation_set": dict(self.reverse),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CatalystBoundsReport":
        pf, t1, w, dim, s = (
            d["prefilter"], d["theorem1"], d["qubit_window"], d["dimension_bound"], d["sanders"]
        )
        return cls(
            p=make_probvec(d["p"]),
            q=make_probvec(d["q"]),
            prefilter=_bounds.PrefilterReport(
                pf["p1_le_q1"], pf["pd_ge_qd"], pf["headsum_ok"], pf["dimension_ok"], pf["note"]
            ),
            theorem1=_bounds.Theorem1Bounds(
                decode_rational(t1["a"]), decode_rational(t1["b"]), t1["m"], t1["n"], tuple(t1["indices"]),
                decode_rational(t1["a_head"]), decode_rational(t1["a_tail"]),
            ),
            corollary_excludes=d["corollary_excludes"],
            window=_bounds.QubitWindow(decode_rational(w["t_lo"]), decode_rational(w["t_hi"])),
            dimension=_bounds.DimensionBound(dim["k_min"], dim["value"]),
            sanders=_bounds.SandersBounds(
                s["dim_bound"], s["dim_trivial"], decode_rational(s["R_bound"]), s["R_trivial"],
                decode_rational(s["R_of_r"]), s["r_satisfies_R"], tuple(s["notes"]),
            ),
            reverse=dict(d["reverse_violation_set"]),
        )


def bounds_report(p: ProbVec, q: ProbVec, r: ProbVec | None = None) -> CatalystBoundsReport:
    """Every closed-form bound for ``p -> q``; raises NotIncomparable if p is majorized by q."""
    return CatalystBoundsReport(
        p=p,
        q=q,
        prefilter=_bounds.prefilter(p, q),
        theorem1=_bounds.theorem1_bounds(p, q),
        corollary_excludes=_bounds.corollary_excludes(p, q),
        window=_bounds.qubit_window(p, q),
        dimension=_bounds.dimension_lower_bound(p, q),
        sanders=_bounds.sanders_bounds(p, q, r),
        reverse=_bounds.reverse_summary(p, q),
    )


def region_document(report: RegionReport, p: ProbVec, q: ProbVec) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "scan",
        "p": vector_strings(p),
        "q": vector_strings(q),
        "scan_resolution": report.scan_resolution,
        "refine_precision": encode_rational(report.refine_precision),
        "region_count": len(report.regions),
        "regions": [
            {
                "lo": encode_rational(g.lo),
                "hi": encode_rational(g.hi),
                "lo_refined": g.lo_refined,
                "hi_refined": g.hi_refined,
                "lo_outer": encode_rational(g.lo_outer),
                "hi_outer": encode_rational(g.hi_outer),
            }
            for g in report.regions
        ],
    }


def search_document(result: GridSearchResult, p: ProbVec, q: ProbVec, limit: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "search",
        "p": vector_strings(p),
        "q": vector_strings(q),
        "k": result.k,
        "resolution": result.resolution,
        "limit": limit,
        "exhausted": result.exhausted,
        "candidates_checked": result.candidates_checked,
        "count": len(result.catalysts_found),
        "catalysts": [vector_strings(r) for r in result.catalysts_found],
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


CURVE_HEADER = ("t", "pmax", "delta", "catalytic")


def curve_csv(c: TransformCurve) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CURVE_HEADER)
    for s in c.samples:
        w.writerow((decimal_str(s.t), decimal_str(s.pmax), decimal_str(s.delta), int(s.is_catalytic)))
    return buf.getvalue()
