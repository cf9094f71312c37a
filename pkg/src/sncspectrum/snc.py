"""Simple-normal-crossing pairs ``(X, D)`` with the strata data of a function.

The model stores Hodge data for the ambient variety ``X``, for every stratum
``D_I`` (intersection of the components indexed by ``I``) and for
``D_I ∩ Z`` where ``Z`` is the zero locus of the numerator section.  Nothing
here checks smoothness or transversality; those are attested by the caller
through ``flags``.

Stratum keys are sorted tuples of 0-based component indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType
from typing import Iterator, Mapping

from .errors import InvalidSpec, SpecParseError
from .hodge import EMPTY, HodgeData, from_catalog

__all__ = [
    "Component",
    "SNCPairSpec",
    "StratumKey",
    "Violation",
    "stratum_key",
    "validate",
    "missing_strata",
    "enumerate_strata",
    "nonempty_subsets",
    "supersets",
    "parse_spec",
    "load_spec",
    "spec_to_dict",
    "dump_spec",
    "hodge_from_json",
]

SCHEMA_VERSION = 1

StratumKey = tuple[int, ...]


def stratum_key(indices, r: int | None = None) -> StratumKey:
    key = tuple(sorted(int(i) for i in indices))
    if not key:
        raise ValueError("stratum key must be nonempty")
    if len(set(key)) != len(key):
        raise ValueError(f"repeated index in stratum key {list(indices)}")
    if key[0] < 0 or (r is not None and key[-1] >= r):
        raise ValueError(f"stratum key {list(key)} out of range for r = {r}")
    return key


@dataclass(frozen=True)
class Component:
    label: str
    multiplicity: int = 1


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    subset: StratumKey | None = None

    def __str__(self) -> str:
        where = f" at {list(self.subset)}" if self.subset is not None else ""
        return f"{self.kind}{where}: {self.message}"


@dataclass(frozen=True)
class SNCPairSpec:
    ambient: HodgeData
    components: tuple[Component, ...] = ()
    strata: Mapping[StratumKey, HodgeData] = field(default_factory=dict)
    z_strata: Mapping[StratumKey, HodgeData] = field(default_factory=dict)
    strongly_nondegenerate: bool = True
    # None means "derive from multiplicities"; an explicit value is validated
    declared_reduced: bool | None = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        for attr in ("strata", "z_strata"):
            table = {stratum_key(k): v for k, v in dict(getattr(self, attr)).items()}
            object.__setattr__(self, attr, MappingProxyType(dict(sorted(table.items()))))

    @property
    def n(self) -> int:
        return self.ambient.dim

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def reduced(self) -> bool:
        return all(c.multiplicity == 1 for c in self.components)

    def stratum(self, key) -> HodgeData:
        return self.strata.get(tuple(key), EMPTY)

    def z_stratum(self, key) -> HodgeData:
        return self.z_strata.get(tuple(key), EMPTY)


def nonempty_subsets(r: int, max_size: int | None = None) -> Iterator[StratumKey]:
    """Nonempty subsets of ``range(r)`` by size, lexicographic within a size."""
    top = r if max_size is None else min(r, max_size)
    for k in range(1, top + 1):
        yield from combinations(range(r), k)


def supersets(key: StratumKey, r: int, max_size: int | None = None) -> Iterator[StratumKey]:
    """All ``J ⊇ key`` inside ``range(r)``, including ``key`` itself."""
    rest = [i for i in range(r) if i not in key]
    top = len(rest) if max_size is None else max(0, min(len(rest), max_size - len(key)))
    for k in range(top + 1):
        for extra in combinations(rest, k):
            yield tuple(sorted(key + extra))


def validate(spec: SNCPairSpec) -> list[Violation]:
    """Structural checks; returns violations, never raises."""
    out: list[Violation] = []
    n, r = spec.n, spec.r
    if n < 0:
        out.append(Violation("DimensionViolation", "ambient variety must be nonempty"))
        return out
    if spec.ambient.components != 1:
        out.append(Violation("AmbientViolation", "ambient variety must be connected"))
    for i, comp in enumerate(spec.components):
        if comp.multiplicity < 1:
            out.append(Violation("MultiplicityViolation", f"component {i} ({comp.label}) has multiplicity {comp.multiplicity}"))
    if spec.declared_reduced is not None and spec.declared_reduced != spec.reduced:
        out.append(Violation(
            "ReducedFlagViolation",
            f"flag reduced={spec.declared_reduced} but multiplicities are "
            f"{[c.multiplicity for c in spec.components]}",
        ))
    for table, label in ((spec.strata, "strata"), (spec.z_strata, "z_strata")):
        for key in table:
            if key[-1] >= r:
                out.append(Violation("SubsetViolation", f"{label} entry refers to a component index >= r = {r}", key))
    for key, h in spec.strata.items():
        if h.is_empty:
            continue
        if len(key) > n:
            out.append(Violation("DimensionViolation", f"|I| = {len(key)} > n = {n} but stratum is nonempty", key))
        elif h.dim != n - len(key):
            out.append(Violation("DimensionViolation", f"stratum has dim {h.dim}, expected {n - len(key)}", key))
    for key, h in spec.z_strata.items():
        if h.is_empty:
            continue
        if h.dim != n - len(key) - 1:
            out.append(Violation("DimensionViolation", f"zero-locus stratum has dim {h.dim}, expected {n - len(key) - 1}", key))
        if spec.stratum(key).is_empty:
            out.append(Violation("ZStratumViolation", "zero-locus stratum is nonempty inside an empty divisor stratum", key))
    for key in nonempty_subsets(r, n + 1):
        if not spec.stratum(key).is_empty:
            continue
        for sup in supersets(key, r):
            if sup == key:
                continue
            if not spec.stratum(sup).is_empty or not spec.z_stratum(sup).is_empty:
                out.append(Violation("MonotonicityViolation", f"stratum is empty but superset {list(sup)} is not", key))
                break
    return out


def missing_strata(spec: SNCPairSpec) -> list[str]:
    """Warnings for subsets with no explicit entry; those default to empty."""
    warnings = []
    for key in nonempty_subsets(spec.r, spec.n + 1 if spec.n >= 0 else 0):
        if key not in spec.strata:
            warnings.append(f"no strata entry for {list(key)}; assuming the empty variety")
    return warnings


def enumerate_strata(spec: SNCPairSpec) -> list[tuple[StratumKey, HodgeData, HodgeData]]:
    violations = validate(spec)
    if violations:
        raise InvalidSpec(violations)
    out = []
    for key in nonempty_subsets(spec.r, spec.n):
        d, z = spec.stratum(key), spec.z_stratum(key)
        if not (d.is_empty and z.is_empty):
            out.append((key, d, z))
    return out


# -- JSON --------------------------------------------------------------------


def hodge_from_json(obj, where: str = "") -> HodgeData:
    if not isinstance(obj, dict):
        raise SpecParseError("Hodge data must be an object", where)
    try:
        if "catalog" in obj:
            params = {k: v for k, v in obj.items() if k != "catalog"}
            return from_catalog(obj["catalog"], **params)
        if "dim" not in obj:
            raise SpecParseError("Hodge data needs 'dim' and 'rows' (or 'catalog')", where)
        return HodgeData.from_dict(obj)
    except SpecParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecParseError(str(exc), where) from None


def _strata_from_json(items, where: str) -> dict[StratumKey, HodgeData]:
    if not isinstance(items, list):
        raise SpecParseError("expected an array of {subset, hodge}", where)
    out: dict[StratumKey, HodgeData] = {}
    for i, item in enumerate(items):
        loc = f"{where}[{i}]"
        if not isinstance(item, dict) or "subset" not in item or "hodge" not in item:
            raise SpecParseError("entry needs 'subset' and 'hodge'", loc)
        try:
            key = stratum_key(item["subset"])
        except (TypeError, ValueError) as exc:
            raise SpecParseError(str(exc), f"{loc}.subset") from None
        if key in out:
            raise SpecParseError(f"duplicate subset {list(key)}", f"{loc}.subset")
        out[key] = hodge_from_json(item["hodge"], f"{loc}.hodge")
    return out


def parse_spec(doc: dict, name: str = "") -> SNCPairSpec:
    if not isinstance(doc, dict):
        raise SpecParseError("spec must be a JSON object", "$")
    if "ambient" not in doc:
        raise SpecParseError("missing 'ambient'", "$")
    ambient = hodge_from_json(doc["ambient"], "$.ambient")
    comps_raw = doc.get("components", [])
    if not isinstance(comps_raw, list):
        raise SpecParseError("expected an array", "$.components")
    comps = []
    for i, c in enumerate(comps_raw):
        if not isinstance(c, dict):
            raise SpecParseError("component must be an object", f"$.components[{i}]")
        mult = c.get("multiplicity", 1)
        if isinstance(mult, bool) or not isinstance(mult, int):
            raise SpecParseError("multiplicity must be an integer", f"$.components[{i}].multiplicity")
        comps.append(Component(str(c.get("label", f"D{i}")), mult))
    flags = doc.get("flags", {})
    if not isinstance(flags, dict):
        raise SpecParseError("expected an object", "$.flags")
    return SNCPairSpec(
        ambient=ambient,
        components=tuple(comps),
        strata=_strata_from_json(doc.get("strata", []), "$.strata"),
        z_strata=_strata_from_json(doc.get("z_strata", []), "$.z_strata"),
        strongly_nondegenerate=bool(flags.get("strongly_nondegenerate", False)),
        declared_reduced=flags.get("reduced"),
        name=str(doc.get("name", name)),
    )


def load_spec(path) -> SNCPairSpec:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from None
    return parse_spec(doc, name=str(path))


def spec_to_dict(spec: SNCPairSpec) -> dict:
    def rows(table):
        return [{"subset": list(k), "hodge": h.to_dict()} for k, h in sorted(table.items())]

    flags = {"strongly_nondegenerate": spec.strongly_nondegenerate, "reduced": spec.reduced}
    if spec.declared_reduced is not None:
        flags["reduced"] = spec.declared_reduced
    out = {
        "schema_version": SCHEMA_VERSION,
        "ambient": spec.ambient.to_dict(),
        "components": [{"label": c.label, "multiplicity": c.multiplicity} for c in spec.components],
        "strata": rows(spec.strata),
        "z_strata": rows(spec.z_strata),
        "flags": flags,
    }
    if spec.name:
        out["name"] = spec.name
    return out


def dump_spec(spec: SNCPairSpec) -> str:
    """Canonical serialization: sorted keys, sorted subsets, fixed layout."""
    return json.dumps(spec_to_dict(spec), sort_keys=True, indent=2) + "\n"
