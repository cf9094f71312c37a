"""Hodge numbers of smooth projective varieties and a small catalog of them.

:class:`HodgeData` stores the diamond ``h[p][q] = h^{p,q}`` of a (possibly
empty, possibly disconnected) smooth projective variety.  The empty variety is
``dim == -1`` with an empty table; it is a legitimate value because deep
intersections of divisor components are usually empty.

Generators::

    >>> hypersurface_in_projective_space(4, 5).h[2][1]
    101
    >>> product(projective_space(1), projective_space(1)) == toric_from_cone_counts([1, 4, 4], 2)
    True
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from .errors import DimensionMismatch, InvalidHodgeData, NegativeHodgeNumber

__all__ = [
    "HodgeData",
    "EMPTY",
    "empty",
    "projective_space",
    "points",
    "curve",
    "toric_from_cone_counts",
    "hypersurface_in_projective_space",
    "composition_counts",
    "product",
    "disjoint_union",
    "CATALOG",
    "from_catalog",
]


@dataclass(frozen=True)
class HodgeData:
    dim: int
    h: tuple[tuple[int, ...], ...]
    components: int = field(default=-1)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.h)
        object.__setattr__(self, "h", rows)
        if self.components == -1:
            object.__setattr__(self, "components", rows[0][0] if rows else 0)
        for problem in self.problems():
            raise InvalidHodgeData(problem)

    def problems(self) -> list[str]:
        n, h = self.dim, self.h
        if n < -1:
            return [f"dimension must be >= -1, got {n}"]
        if n == -1:
            if h or self.components != 0:
                return ["the empty variety has no Hodge numbers and no components"]
            return []
        if len(h) != n + 1 or any(len(row) != n + 1 for row in h):
            return [f"table must be {n + 1}x{n + 1} for dim {n}"]
        out = []
        for p in range(n + 1):
            for q in range(n + 1):
                if h[p][q] < 0:
                    out.append(f"h^{{{p},{q}}} = {h[p][q]} is negative")
                if h[p][q] != h[q][p]:
                    out.append(f"Hodge symmetry fails at ({p},{q})")
                if h[p][q] != h[n - p][n - q]:
                    out.append(f"Serre duality fails at ({p},{q})")
        if self.components < 1:
            out.append("a nonempty variety has at least one component")
        elif h[0][0] != self.components:
            out.append(f"h^{{0,0}} = {h[0][0]} but components = {self.components}")
        return out

    @property
    def is_empty(self) -> bool:
        return self.dim == -1

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        if 0 <= p <= self.dim and 0 <= q <= self.dim:
            return self.h[p][q]
        return 0

    def betti(self) -> list[int]:
        return [
            sum(self[p, k - p] for p in range(k + 1)) for k in range(2 * self.dim + 1)
        ]

    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti()))

    def to_dict(self) -> dict:
        return {"dim": self.dim, "rows": [list(r) for r in self.h], "components": self.components}

    @classmethod
    def from_dict(cls, d: dict) -> HodgeData:
        return cls(int(d["dim"]), tuple(tuple(r) for r in d.get("rows", ())), int(d.get("components", -1)))

    def diamond(self) -> str:
        """Render the usual tilted-square picture, top row h^{n,n}."""
        n = self.dim
        if n < 0:
            return "(empty)"
        width = max(len(str(x)) for row in self.h for x in row) + 2
        lines = []
        for k in range(2 * n, -1, -1):
            entries = [self[p, k - p] for p in range(n, -1, -1) if 0 <= k - p <= n]
            pad = abs(n - k) * width // 2
            lines.append(" " * pad + "".join(str(x).center(width) for x in entries))
        return "\n".join(line.rstrip() for line in lines)


EMPTY = HodgeData(-1, ())


def empty() -> HodgeData:
    return EMPTY


def _diagonal(diag: Sequence[int], components: int | None = None) -> HodgeData:
    n = len(diag) - 1
    rows = tuple(tuple(diag[p] if p == q else 0 for q in range(n + 1)) for p in range(n + 1))
    return HodgeData(n, rows, diag[0] if components is None else components)


def projective_space(n: int) -> HodgeData:
    if n < 0:
        raise ValueError(f"projective_space needs n >= 0, got {n}")
    return _diagonal([1] * (n + 1))


def points(k: int) -> HodgeData:
    if k < 0:
        raise ValueError(f"points needs k >= 0, got {k}")
    return EMPTY if k == 0 else HodgeData(0, ((k,),), k)


def curve(genus: int) -> HodgeData:
    if genus < 0:
        raise ValueError(f"curve needs genus >= 0, got {genus}")
    return HodgeData(1, ((1, genus), (genus, 1)), 1)


def toric_from_cone_counts(f: Sequence[int], n: int) -> HodgeData:
    """Hodge diamond of a smooth complete toric variety from its cone counts.

    ``f[k]`` is the number of ``k``-dimensional cones; the orbit of a
    ``k``-cone is a torus of dimension ``n - k`` with E-polynomial
    ``(uv - 1)^(n - k)``.  Fan validity is not checked.
    """
    f = list(f)
    if not f or f[0] != 1:
        raise ValueError("cone counts must start with f_0 = 1")
    if len(f) > n + 1 or any(x < 0 for x in f):
        raise ValueError(f"need at most n+1 = {n + 1} nonnegative cone counts")
    coeffs = [0] * (n + 1)
    for k, fk in enumerate(f):
        d = n - k
        for j in range(d + 1):
            coeffs[j] += fk * comb(d, j) * (-1) ** (d - j)
    if any(c < 0 for c in coeffs):
        raise NegativeHodgeNumber(
            f"cone counts {f} give negative h^{{p,p}} {coeffs}; fan is not smooth and complete"
        )
    return _diagonal(coeffs, components=1)


def composition_counts(parts: int, low: int, high: int) -> list[int]:
    """``counts[s]`` = number of tuples in ``[low, high]^parts`` with sum ``s``."""
    counts = [1]
    for _ in range(parts):
        nxt = [0] * (len(counts) + high)
        for s, c in enumerate(counts):
            if c:
                for a in range(low, high + 1):
                    nxt[s + a] += c
        counts = nxt
    return counts


def hypersurface_in_projective_space(n: int, d: int) -> HodgeData:
    """Smooth degree-``d`` hypersurface in ``P^n``.

    Off the middle degree the diamond is that of ``P^(n-1)``.  The primitive
    middle part ``h^{m-q,q}`` counts tuples in ``[1, d-1]^(n+1)`` summing to
    ``(q+1)d`` (Griffiths residues).
    """
    if n < 1 or d < 1:
        raise ValueError(f"hypersurface needs n >= 1 and d >= 1, got n={n}, d={d}")
    m = n - 1
    counts = composition_counts(n + 1, 1, d - 1) if d > 1 else [1]

    def prim(q: int) -> int:
        s = (q + 1) * d
        return counts[s] if d > 1 and s < len(counts) else 0

    rows = []
    for p in range(m + 1):
        row = []
        for q in range(m + 1):
            if p + q != m:
                row.append(1 if p == q else 0)
            else:
                row.append(prim(q) + (1 if p == q else 0))
        rows.append(tuple(row))
    return HodgeData(m, tuple(rows), rows[0][0] if m == 0 else 1)


def product(a: HodgeData, b: HodgeData) -> HodgeData:
    if a.is_empty or b.is_empty:
        return EMPTY
    n = a.dim + b.dim
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for p1 in range(a.dim + 1):
        for q1 in range(a.dim + 1):
            x = a.h[p1][q1]
            if not x:
                continue
            for p2 in range(b.dim + 1):
                for q2 in range(b.dim + 1):
                    rows[p1 + p2][q1 + q2] += x * b.h[p2][q2]
    return HodgeData(n, tuple(map(tuple, rows)), a.components * b.components)


def disjoint_union(a: HodgeData, b: HodgeData) -> HodgeData:
    if a.is_empty:
        return b
    if b.is_empty:
        return a
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot take disjoint union of dim {a.dim} and dim {b.dim}")
    rows = tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.h, b.h)
    )
    return HodgeData(a.dim, rows, a.components + b.components)


def _named_projective(n: int) -> Callable[[], HodgeData]:
    return lambda: projective_space(n)


# name -> (constructor, parameter names)
CATALOG: dict[str, tuple[Callable[..., HodgeData], tuple[str, ...]]] = {
    "empty": (empty, ()),
    "point": (lambda: points(1), ()),
    "points": (points, ("k",)),
    "projective_space": (projective_space, ("n",)),
    "P": (projective_space, ("n",)),
    "curve": (curve, ("genus",)),
    "elliptic": (lambda: curve(1), ()),
    "toric": (toric_from_cone_counts, ("f", "n")),
    "hypersurface": (hypersurface_in_projective_space, ("n", "d")),
    **{f"P{k}": (_named_projective(k), ()) for k in range(10)},
}


def from_catalog(name: str, **params) -> HodgeData:
    """Look up a generator by name, e.g. ``from_catalog("hypersurface", n=4, d=5)``."""
    try:
        ctor, names = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(sorted(CATALOG))}") from None
    missing = [p for p in names if p not in params]
    extra = [p for p in params if p not in names]
    if missing or extra:
        raise ValueError(f"catalog {name!r} takes parameters {list(names)}; got {sorted(params)}")
    return ctor(**params)
