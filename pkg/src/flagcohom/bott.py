"""Bott's algorithm on G/P: singularity test, regularity index, dimensions.

For a weight lambda the test runs over all positive roots: lambda + delta
is singular iff some pairing (lambda + delta, alpha) vanishes; otherwise
the cohomology of the associated irreducible summand sits in the single
degree p = #{alpha > 0 : (lambda + delta, alpha) < 0} and has dimension

    prod |(lambda + delta, alpha)| / prod (delta, alpha),

the absolute-value product being invariant under the dot action.  The
twisted forms Omega^q(k) decompose with multiplicity one into summands of
highest weight w delta - delta + k lambda_j for w in W1(q), so a table
cell is a sum of classified summands.  Cell sums run in an integer kernel
(compiled when available); classify_weight is an independent exact-rational
path over ambient coordinates, used for single weights and as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels, _kernels_py
from .parabolic import ParabolicData
from .root_system import RootSystem, Vec
from .weyl import DEFAULT_CAP, coset_atlas

# beyond this the compiled kernel could overflow int64 pairings; use pure Python
_CHK_SAFE = 1 << 56


@dataclass(frozen=True)
class WeightVerdict:
    """Outcome of Bott's test for one weight lambda."""

    weight: Vec
    status: str  # "singular" or "regular"
    index: int | None
    dimension: int

    @property
    def is_singular(self) -> bool:
        return self.status == "singular"


@dataclass(frozen=True)
class CohomologyVector:
    """h^0..h^n for one sheaf; entries outside 0..n read as 0."""

    h: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.h):
            return self.h[i]
        return 0

    def __len__(self) -> int:
        return len(self.h)

    def __iter__(self):
        return iter(self.h)


@dataclass
class CohomologyTable:
    parabolic: ParabolicData
    entries: dict[tuple[int, int], CohomologyVector]


def classify_weight(lam: Vec, rs: RootSystem) -> WeightVerdict:
    """Exact-rational Bott test for a single weight."""
    pairs = [
        rs.inner(lam, alpha) + hgt
        for alpha, hgt in zip(rs.positive_roots, rs.pos_heights)
    ]
    if any(x == 0 for x in pairs):
        return WeightVerdict(tuple(lam), "singular", None, 0)
    p = sum(1 for x in pairs if x < 0)
    num = Fraction(1)
    for x in pairs:
        num *= abs(x)
    dim = num / rs.delta_pairing_product
    if dim.denominator != 1:
        raise RuntimeError("Weyl dimension is not an integer")
    return WeightVerdict(tuple(lam), "regular", p, int(dim))


def _zero_vector(n: int) -> CohomologyVector:
    return CohomologyVector((0,) * (n + 1))


def line_bundle_cohomology(pd: ParabolicData, k: int) -> CohomologyVector:
    """Cohomology of O(k), the k-th power of the ample generator of Pic."""
    rs = pd.rs
    lam = tuple(k * x for x in rs.fundamental_weights[pd.node - 1])
    verdict = classify_weight(lam, rs)
    h = [0] * (pd.dim_x + 1)
    if verdict.status == "regular":
        if verdict.index > pd.dim_x:
            raise RuntimeError("line bundle index exceeds dim X")
        h[verdict.index] = verdict.dimension
    return CohomologyVector(tuple(h))


def twisted_forms_cohomology(
    pd: ParabolicData, q: int, k: int, cap: int = DEFAULT_CAP
) -> CohomologyVector:
    """Cohomology of Omega^q(k); zero vector for q outside 0..dim X."""
    rs = pd.rs
    n = pd.dim_x
    if q < 0 or q > n:
        return _zero_vector(n)
    atlas = coset_atlas(rs, pd.node, cap)
    if atlas.dim != n:
        raise RuntimeError("top coset grade disagrees with dim X")
    chk = pd.c * k
    impl = _kernels.grade_cohomology
    if _kernels.BACKEND == "c" and abs(chk) > _CHK_SAFE:
        impl = _kernels_py.grade_cohomology
    h = impl(
        atlas.vflat,
        atlas.offsets[q],
        atlas.offsets[q + 1],
        rs.lie_type.rank,
        rs.pos_coords_flat,
        len(rs.positive_roots),
        rs.halfnorms,
        pd.node - 1,
        chk,
        rs.delta_pairing_product,
        n,
    )
    return CohomologyVector(tuple(h))


def vanishing_shortcut(pd: ParabolicData, q: int, k: int) -> bool:
    """True when k > mu or k > q, which forces h^i = 0 for all i > 0."""
    return k > pd.mu or k > q


def hodge_diamond(pd: ParabolicData, cap: int = DEFAULT_CAP) -> list[int]:
    """h^q(Omega^q) = |W1(q)| for q = 0..dim X (all other Hodge numbers vanish)."""
    atlas = coset_atlas(pd.rs, pd.node, cap)
    return atlas.sizes()


def cohomology_table(
    pd: ParabolicData, q_values, k_values, cap: int = DEFAULT_CAP
) -> CohomologyTable:
    entries: dict[tuple[int, int], CohomologyVector] = {}
    for q in sorted(set(q_values)):
        if not 0 <= q <= pd.dim_x:
            continue  # zero by convention, never stored
        for k in sorted(set(k_values)):
            entries[(q, k)] = twisted_forms_cohomology(pd, q, k, cap)
    return CohomologyTable(parabolic=pd, entries=entries)


def table_json_dict(table: CohomologyTable) -> dict:
    pd = table.parabolic
    return {
        "group": str(pd.rs.lie_type),
        "node": pd.node,
        "dim": pd.dim_x,
        "cells": [
            {"q": q, "k": k, "h": [str(x) for x in vec]}
            for (q, k), vec in table.entries.items()
        ],
    }


def table_csv_rows(table: CohomologyTable) -> list[str]:
    """One row per nonzero h^i, columns q,k,i,h."""
    rows = ["q,k,i,h"]
    for (q, k), vec in table.entries.items():
        for i, x in enumerate(vec):
            if x:
                rows.append(f"{q},{k},{i},{x}")
    return rows
