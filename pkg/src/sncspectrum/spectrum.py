"""Spectrum polynomials of strongly non-degenerate functions on SNC pairs.

For a function ``f = s0 / s_inf`` on ``U = X - D`` with ``D = D_1 + ... + D_r``
reduced, the compactly supported spectrum of ``f`` is assembled from the
spectra of the closed strata ``D_I`` and ``D_I ∩ Z``::

    Sp_f = Sp_X + sum_k (-1)^k (1 + ... + t^k) sum_{|I|=k} Sp_{D_I}
                - sum_k (-1)^k (t + ... + t^k) sum_{|I|=k} Sp_{D_I ∩ Z}

The same polynomial is also obtained as ``Sp_U - t * Sp_psi`` where
``Sp_psi`` is the spectrum of the unipotent nearby cycles at infinity.  The
nearby-cycle spectrum has an "open" form (sum over open strata weighted by
``(1 - t)^(|I|-1)``) and a "closed" form; both are implemented and compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .errors import (
    FormMismatch,
    InternalIdentityFailure,
    InvalidSpec,
    NegativeIrregularNumber,
    NonReducedDivisor,
)
from .fracpoly import ONE, T, ZERO, FracPoly, geometric_block, shifted_geometric_block
from .hodge import HodgeData
from .snc import SNCPairSpec, StratumKey, missing_strata, nonempty_subsets, supersets, validate

__all__ = [
    "SpectrumReport",
    "spectrum_of_variety",
    "spectrum_of_torus_stratum",
    "open_stratum_spectrum",
    "closed_stratum_spectrum",
    "nearby_cycle_spectrum",
    "open_complement_spectrum",
    "direct_formula",
    "irregular_spectrum",
    "extract_irregular_numbers",
    "euler_cross_check",
]

CheckLevel = Literal["none", "forms", "full"]
Which = Literal["divisor", "z"]


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    sp_f: FracPoly
    sp_psi: FracPoly
    sp_u: FracPoly
    irregular: dict[Fraction, int]
    euler_value: Fraction
    palindrome_about_n: bool
    check_level: str = "full"
    warnings: tuple[str, ...] = field(default=())

    @property
    def middle_degree(self) -> int:
        return self.n

    @property
    def total_dimension(self) -> int:
        return sum(self.irregular.values())

    def to_dict(self) -> dict:
        return {
            "sp_f": str(self.sp_f),
            "sp_psi": str(self.sp_psi),
            "sp_u": str(self.sp_u),
            "irregular": [
                {"gamma": str(g), "degree": self.n, "dim": d}
                for g, d in sorted(self.irregular.items())
            ],
            "diagnostics": {
                "euler_value": str(self.euler_value),
                "palindrome_about_n": self.palindrome_about_n,
                "middle_degree": self.n,
                "check_level": self.check_level,
                "warnings": list(self.warnings),
            },
        }


def spectrum_of_variety(h: HodgeData) -> FracPoly:
    """``sum_{p,q} (-1)^(p+q) h^{p,q} t^p`` for a smooth projective variety."""
    if h.is_empty:
        return ZERO
    coeffs = [0] * (h.dim + 1)
    for p in range(h.dim + 1):
        for q in range(h.dim + 1):
            coeffs[p] += (-1) ** (p + q) * h.h[p][q]
    return FracPoly.from_coefficients(coeffs)


def spectrum_of_torus_stratum(d: int) -> FracPoly:
    if d < 0:
        raise ValueError(f"torus dimension must be >= 0, got {d}")
    return (T - ONE) ** d


def _table(spec: SNCPairSpec, which: Which):
    if which == "divisor":
        return spec.stratum
    if which == "z":
        return spec.z_stratum
    raise ValueError(f"which must be 'divisor' or 'z', got {which!r}")


def closed_stratum_spectrum(spec: SNCPairSpec, key: StratumKey, which: Which = "divisor") -> FracPoly:
    return spectrum_of_variety(_table(spec, which)(tuple(key)))


def open_stratum_spectrum(spec: SNCPairSpec, key: StratumKey, which: Which = "divisor") -> FracPoly:
    """Spectrum of ``D_I°`` (or ``D_I° ∩ Z``) by inclusion-exclusion over ``J ⊇ I``."""
    lookup = _table(spec, which)
    key = tuple(sorted(key))
    if not key:
        raise ValueError("stratum key must be nonempty")
    # strata with |J| > n are empty by dimension
    total = ZERO
    for sup in supersets(key, spec.r, max(spec.n, len(key))):
        sign = -1 if (len(sup) - len(key)) % 2 else 1
        total += sign * spectrum_of_variety(lookup(sup))
    return total


def _require_valid(spec: SNCPairSpec) -> None:
    violations = validate(spec)
    if violations:
        raise InvalidSpec(violations)


def _require_reduced(spec: SNCPairSpec) -> None:
    if not spec.reduced:
        mults = [c.multiplicity for c in spec.components]
        raise NonReducedDivisor(
            f"the closed stratum formula needs a reduced pole divisor; multiplicities are {mults}"
        )


def _size_classes(spec: SNCPairSpec) -> dict[int, tuple[FracPoly, FracPoly]]:
    """``k -> (sum_{|I|=k} Sp(D_I), sum_{|I|=k} Sp(D_I ∩ Z))`` for ``1 <= k <= min(r, n)``."""
    out: dict[int, tuple[FracPoly, FracPoly]] = {}
    for key in nonempty_subsets(spec.r, spec.n):
        d_sum, z_sum = out.get(len(key), (ZERO, ZERO))
        out[len(key)] = (
            d_sum + spectrum_of_variety(spec.stratum(key)),
            z_sum + spectrum_of_variety(spec.z_stratum(key)),
        )
    return out


def _nearby_open(spec: SNCPairSpec) -> FracPoly:
    total = ZERO
    one_minus_t = ONE - T
    for key in nonempty_subsets(spec.r, spec.n):
        diff = open_stratum_spectrum(spec, key, "divisor") - open_stratum_spectrum(spec, key, "z")
        if diff:
            total += one_minus_t ** (len(key) - 1) * diff
    return total


def _nearby_closed(spec: SNCPairSpec) -> FracPoly:
    total = ZERO
    for k, (d_sum, z_sum) in sorted(_size_classes(spec).items()):
        sign = 1 if k % 2 else -1
        total += sign * geometric_block(k - 1) * (d_sum - z_sum)
    return total


def nearby_cycle_spectrum(
    spec: SNCPairSpec,
    form: Literal["open", "closed"] = "closed",
    check: bool = True,
) -> FracPoly:
    """Spectrum of the unipotent nearby cycles of ``1/f`` along ``D``.

    With ``check`` the other form is computed too and any disagreement raises
    :class:`FormMismatch`.
    """
    _require_valid(spec)
    _require_reduced(spec)
    if form not in ("open", "closed"):
        raise ValueError(f"form must be 'open' or 'closed', got {form!r}")
    value = _nearby_open(spec) if form == "open" else _nearby_closed(spec)
    if check:
        other = _nearby_closed(spec) if form == "open" else _nearby_open(spec)
        if other != value:
            raise FormMismatch("open and closed nearby-cycle forms disagree", value, other)
    return value


def open_complement_spectrum(spec: SNCPairSpec) -> FracPoly:
    """``Sp_U = Sp_X - sum_{I != ∅} (-1)^(|I|-1) Sp_{D_I}``."""
    total = spectrum_of_variety(spec.ambient)
    for k, (d_sum, _) in _size_classes(spec).items():
        total += (-1) ** k * d_sum
    return total


def direct_formula(spec: SNCPairSpec) -> FracPoly:
    total = spectrum_of_variety(spec.ambient)
    for k, (d_sum, z_sum) in sorted(_size_classes(spec).items()):
        sign = -1 if k % 2 else 1
        total += sign * (geometric_block(k) * d_sum - shifted_geometric_block(k) * z_sum)
    return total


def irregular_spectrum(spec: SNCPairSpec, check: CheckLevel = "full") -> SpectrumReport:
    """Full report for a valid spec with reduced pole divisor.

    ``check="forms"`` compares the two nearby-cycle forms, ``"full"`` also
    compares the direct formula with ``Sp_U - t * Sp_psi``.
    """
    if check not in ("none", "forms", "full"):
        raise ValueError(f"unknown check level {check!r}")
    _require_valid(spec)
    _require_reduced(spec)
    n = spec.n
    sp_f = direct_formula(spec)
    sp_psi = nearby_cycle_spectrum(spec, "closed", check=check != "none")
    sp_u = open_complement_spectrum(spec)
    if check == "full":
        via_psi = sp_u - T * sp_psi
        if via_psi != sp_f:
            raise InternalIdentityFailure("direct formula and Sp_U - t*Sp_psi disagree", sp_f, via_psi)

    sign = -1 if n % 2 else 1
    irregular = {g: sign * c for g, c in sp_f.items()}
    warnings = missing_strata(spec)
    negative = {g: d for g, d in irregular.items() if d < 0}
    if negative:
        warnings.append(
            "NEGATIVE irregular Hodge numbers "
            + ", ".join(f"h^{g} = {d}" for g, d in sorted(negative.items()))
            + ": strata data is inconsistent with a non-degenerate function"
        )
    if not spec.strongly_nondegenerate:
        warnings.append(
            "strong non-degeneracy not attested: cohomology outside degree "
            f"{n} may be nonzero and the table below covers degree {n} only"
        )
    return SpectrumReport(
        n=n,
        sp_f=sp_f,
        sp_psi=sp_psi,
        sp_u=sp_u,
        irregular=irregular,
        euler_value=sp_f.evaluate(1),
        palindrome_about_n=sp_f.is_palindrome(n),
        check_level=check,
        warnings=tuple(warnings),
    )


def extract_irregular_numbers(report: SpectrumReport) -> dict[Fraction, int]:
    """``gamma -> h^gamma_irr(U, f, n)``; only degree ``n`` can be nonzero."""
    bad = {g: d for g, d in report.irregular.items() if d < 0}
    if bad:
        raise NegativeIrregularNumber(f"negative irregular Hodge numbers {bad}")
    return dict(sorted(report.irregular.items()))


def euler_cross_check(report: SpectrumReport, chi_u: int, chi_fiber: int) -> bool:
    """``Sp_f(1) == chi(U) - chi(generic fibre)``."""
    return report.sp_f.evaluate(1) == chi_u - chi_fiber
