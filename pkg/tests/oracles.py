"""Independent reference computations used only by the tests.

Nothing here imports the polynomial or stratum code under test: sums over
subsets are done on bitmasks with sympy polynomials, lattice counts by brute
force, and the P^1 cases through line-bundle cohomology of the Kontsevich
sheaves.
"""

from __future__ import annotations

from itertools import product as iproduct

import sympy

t = sympy.Symbol("t")


# -- hypersurfaces ----------------------------------------------------------


def brute_force_tuple_count(parts: int, low: int, high: int, total: int) -> int:
    return sum(1 for a in iproduct(range(low, high + 1), repeat=parts) if sum(a) == total)


def hypersurface_middle_row(n: int, d: int) -> list[int]:
    """``[h^{m,0}, h^{m-1,1}, ..., h^{0,m}]`` for a degree-d hypersurface in P^n."""
    m = n - 1
    row = []
    for q in range(m + 1):
        prim = brute_force_tuple_count(n + 1, 1, d - 1, (q + 1) * d) if d > 1 else 0
        row.append(prim + (1 if 2 * q == m else 0))
    return row


def hypersurface_euler(n: int, d: int) -> int:
    """Topological Euler characteristic from the Chern class formula."""
    # c(X) = (1+h)^(n+1) / (1+d h), integrate c_{n-1} against d h^{n-1}
    h = sympy.Symbol("h")
    series = sympy.series((1 + h) ** (n + 1) / (1 + d * h), h, 0, n).removeO()
    return int(sympy.Poly(series, h).coeff_monomial(h ** (n - 1)) * d)


def plane_curve_euler(d: int) -> int:
    return -d * (d - 3)


# -- spectrum formulas on raw tables ---------------------------------------


def sp_of_table(rows) -> sympy.Expr:
    """rows = list of lists h[p][q]; empty list = empty variety."""
    return sympy.expand(
        sum((-1) ** (p + q) * rows[p][q] * t**p for p in range(len(rows)) for q in range(len(rows)))
    )


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def raw_strata(spec_doc: dict):
    """Turn a spec JSON document into (n, r, sp_X, {mask: sp_D}, {mask: sp_Z})."""
    n = spec_doc["ambient"]["dim"]
    r = len(spec_doc["components"])
    sp_x = sp_of_table(spec_doc["ambient"]["rows"])
    d, z = {}, {}
    for entry in spec_doc["strata"]:
        d[sum(1 << i for i in entry["subset"])] = sp_of_table(entry["hodge"]["rows"])
    for entry in spec_doc["z_strata"]:
        z[sum(1 << i for i in entry["subset"])] = sp_of_table(entry["hodge"]["rows"])
    return n, r, sp_x, d, z


def sympy_direct_formula(spec_doc: dict) -> sympy.Expr:
    n, r, sp_x, d, z = raw_strata(spec_doc)
    total = sp_x
    for mask in range(1, 1 << r):
        k = _popcount(mask)
        block = sum(t**i for i in range(k + 1))
        shifted = block - 1
        total += (-1) ** k * (block * d.get(mask, 0) - shifted * z.get(mask, 0))
    return sympy.expand(total)


def sympy_nearby_double_sum(spec_doc: dict) -> sympy.Expr:
    """Sum over I, J ⊇ I of (-1)^{|J|-|I|} (1-t)^{|I|-1} (Sp D_J - Sp Z_J)."""
    n, r, sp_x, d, z = raw_strata(spec_doc)
    total = 0
    full = (1 << r) - 1
    for i_mask in range(1, full + 1):
        for j_mask in range(i_mask, full + 1):
            if j_mask & i_mask != i_mask:
                continue
            diff = d.get(j_mask, 0) - z.get(j_mask, 0)
            sign = (-1) ** (_popcount(j_mask) - _popcount(i_mask))
            total += sign * (1 - t) ** (_popcount(i_mask) - 1) * diff
    return sympy.expand(total)


def sympy_open_complement(spec_doc: dict) -> sympy.Expr:
    n, r, sp_x, d, z = raw_strata(spec_doc)
    total = sp_x
    for mask in range(1, 1 << r):
        total -= (-1) ** (_popcount(mask) - 1) * d.get(mask, 0)
    return sympy.expand(total)


def sympy_coefficients(expr) -> dict[int, int]:
    poly = sympy.Poly(sympy.expand(expr), t)
    return {m[0]: int(c) for m, c in zip(poly.monoms(), poly.coeffs()) if c != 0}


# -- Kontsevich complex on P^1 -----------------------------------------------


def h0_p1(deg: int) -> int:
    return max(deg + 1, 0)


def h1_p1(deg: int) -> int:
    return max(-deg - 1, 0)


def kontsevich_p1(poles: int) -> dict[int, dict[int, int]]:
    """Irregular Hodge numbers for f on P^1 with ``poles`` simple poles, zeros off D.

    Omega^0(log D, f) = O(-D) and Omega^1(log D, f) = Omega^1(log D) = O(poles - 2);
    f^{p,q} = h^p(Omega^q) sits in degree p + q with irregular weight q.
    """
    sheaves = {0: -poles, 1: poles - 2}
    out: dict[int, dict[int, int]] = {}
    for q, deg in sheaves.items():
        for p, dim in ((0, h0_p1(deg)), (1, h1_p1(deg))):
            if dim:
                out.setdefault(p + q, {})[q] = dim
    return out


# -- Newton polytope spectrum at infinity ------------------------------------


def ehrhart_h_star(facets: list[tuple[tuple[int, ...], int]], box: int) -> dict[int, int]:
    """h*-polynomial of ``{x : a.x <= b for (a, b) in facets}`` by point counting.

    Coincides with the spectrum at infinity of a convenient non-degenerate
    Laurent polynomial whose Newton polytope has all facets at lattice distance 1.
    """
    dim = len(facets[0][0])
    counts = []
    for k in range(dim + 1):
        pts = 0
        for x in iproduct(range(-box * max(k, 1), box * max(k, 1) + 1), repeat=dim):
            if all(sum(ai * xi for ai, xi in zip(a, x)) <= b * k for a, b in facets):
                pts += 1
        counts.append(pts)
    series = sum(c * t**k for k, c in enumerate(counts))
    h_star = sympy.expand(series * (1 - t) ** (dim + 1))
    return {e: c for e, c in sympy_coefficients(h_star).items() if e <= dim}


# facets of the Newton triangle of F/(x0 x1 x2), F a general cubic
CUBIC_OVER_COORDINATE_LINES = [((-1, 0), 1), ((0, -1), 1), ((1, 1), 1)]
# x + 1/x
SEGMENT = [((1,), 1), ((-1,), 1)]
