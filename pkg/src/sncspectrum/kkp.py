"""Landau–Ginzburg Hodge numbers and the limiting-filtration view of a report.

Irregular Hodge numbers ``h^{p+a}`` with ``0 <= a < 1`` are the graded
dimensions ``gr_F^p`` of the limiting Hodge filtration on the
``exp(-2 pi i a)``-eigenspace of the relative cohomology
``H^n(U, f^{-1}(t))``.  With a reduced pole divisor only ``a = 0`` occurs.

The weight-graded numbers ``h_LG^{p,q} = dim gr^W_{2p} H^{p+q}`` need the
monodromy weight filtration, which this package does not compute; they are
supplied by the user as a :class:`WeightGradedInput`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import ShapeMismatch, SpecParseError
from .spectrum import SpectrumReport

__all__ = [
    "LimitingHodgeTable",
    "WeightGradedInput",
    "KKPVerdict",
    "to_limiting_table",
    "from_limiting_table",
    "f_lg_numbers",
    "kkp_equality_check",
    "weights_from_json",
    "load_weights",
]


@dataclass(frozen=True)
class LimitingHodgeTable:
    i: int
    entries: Mapping[tuple[Fraction, int], int]

    def __post_init__(self):
        if any(v < 0 for v in self.entries.values()):
            raise ValueError("limiting Hodge dimensions must be nonnegative")
        for alpha, _ in self.entries:
            if not 0 <= alpha < 1:
                raise ValueError(f"eigenvalue exponent {alpha} not in [0, 1)")
        object.__setattr__(self, "entries", dict(sorted(self.entries.items())))

    def alphas(self) -> list[Fraction]:
        return sorted({a for a, _ in self.entries})

    def row(self, alpha) -> dict[int, int]:
        alpha = Fraction(alpha)
        return {p: d for (a, p), d in self.entries.items() if a == alpha}

    def total(self) -> int:
        return sum(self.entries.values())


def to_limiting_table(report: SpectrumReport) -> LimitingHodgeTable:
    entries = {}
    for gamma, dim in report.irregular.items():
        if dim == 0:
            continue
        p = math.floor(gamma)
        entries[(gamma - p, p)] = dim
    return LimitingHodgeTable(report.n, entries)


def from_limiting_table(table: LimitingHodgeTable) -> dict[Fraction, int]:
    return {a + p: d for (a, p), d in table.entries.items()}


def f_lg_numbers(report: SpectrumReport) -> dict[tuple[int, Fraction], int]:
    """``f^{p,q}_LG = h^q_irr(U, f, p + q)``, nonzero only for ``p + q = n``.

    ``q`` may be fractional for non-reduced data; then ``p = n - ceil(q)``.
    """
    n = report.n
    out = {}
    for gamma, dim in sorted(report.irregular.items()):
        if dim:
            out[(n - math.ceil(gamma), gamma)] = dim
    return out


@dataclass(frozen=True)
class WeightGradedInput:
    """``w[(p, q)] = dim gr^W_{2p} H^{p+q}(U, f^{-1}(t))``."""

    w: Mapping[tuple[int, int], int]
    i: int | None = None

    def __post_init__(self):
        clean = {}
        for (p, q), d in self.w.items():
            if d < 0:
                raise ValueError(f"weight-graded dimension at ({p},{q}) is negative")
            if self.i is not None and p + q != self.i:
                raise ShapeMismatch(f"entry ({p},{q}) is not in degree {self.i}")
            if d:
                clean[(int(p), int(q))] = int(d)
        object.__setattr__(self, "w", dict(sorted(clean.items())))

    def degree_totals(self) -> dict[int, int]:
        totals: dict[int, int] = {}
        for (p, q), d in self.w.items():
            totals[p + q] = totals.get(p + q, 0) + d
        return totals


@dataclass(frozen=True)
class KKPVerdict:
    holds: bool
    hodge_tate: bool
    witness: tuple[int, int] | None
    f_lg: dict
    h_lg: dict

    def to_dict(self) -> dict:
        def table(t):
            return {f"{p},{q}": d for (p, q), d in sorted(t.items())}

        return {
            "holds": self.holds,
            "hodge_tate": self.hodge_tate,
            "witness": list(self.witness) if self.witness else None,
            "f_lg": table(self.f_lg),
            "h_lg": table(self.h_lg),
        }


def kkp_equality_check(report: SpectrumReport, w: WeightGradedInput) -> KKPVerdict:
    """Compare ``f_LG`` from the report with user-supplied ``h_LG``.

    ``holds`` is the equality ``f^{p,q}_LG = h^{p,q}_LG`` for all ``(p, q)``;
    ``hodge_tate`` says whether the numbers are consistent with a limit of
    Hodge–Tate type (even weights exhaust each degree and ``gr^W_{2q}`` has
    the dimension of ``gr_F^q``).
    """
    f = f_lg_numbers(report)
    if any(Fraction(q).denominator != 1 for _, q in f):
        raise ShapeMismatch("fractional irregular numbers: the comparison needs a reduced pole divisor")
    f = {(p, int(q)): d for (p, q), d in f.items()}
    f_totals: dict[int, int] = {}
    for (p, q), d in f.items():
        f_totals[p + q] = f_totals.get(p + q, 0) + d
    w_totals = w.degree_totals()
    for deg, total in w_totals.items():
        if total > f_totals.get(deg, 0):
            raise ShapeMismatch(
                f"degree {deg}: weight-graded dimensions sum to {total} but the "
                f"cohomology has dimension {f_totals.get(deg, 0)}"
            )

    keys = sorted(set(f) | set(w.w))
    witness = next((pq for pq in keys if f.get(pq, 0) != w.w.get(pq, 0)), None)
    hodge_tate = all(w_totals.get(d, 0) == t for d, t in f_totals.items()) and all(
        w.w.get((q, p), 0) == f.get((p, q), 0) for p, q in keys
    )
    return KKPVerdict(witness is None, hodge_tate, witness, f, dict(w.w))


def weights_from_json(doc, where: str = "$") -> WeightGradedInput:
    if not isinstance(doc, dict):
        raise SpecParseError("weight file must be an object mapping 'p,q' to integers", where)
    w = {}
    for key, value in doc.items():
        if key == "schema_version":
            continue
        try:
            p, q = (int(x) for x in key.split(","))
        except ValueError:
            raise SpecParseError(f"bad key {key!r}, expected 'p,q'", where) from None
        if isinstance(value, bool) or not isinstance(value, int):
            raise SpecParseError(f"value for {key!r} must be an integer", where)
        w[(p, q)] = value
    try:
        return WeightGradedInput(w)
    except ValueError as exc:
        raise SpecParseError(str(exc), where) from None


def load_weights(path) -> WeightGradedInput:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from None
    return weights_from_json(doc, str(path))
