"""Maximal parabolic data: the compact root split and derived constants.

For the parabolic generated by the single simple root alpha_j the compact
positive roots are those whose alpha_j coefficient vanishes; the remainder
spans the tangent space of X = G/P, so n = dim X counts them.  The
constants:

  c  = (alpha_j, alpha_j) / 2, in {1, 2, 3};
  d0 = the positive integer with sum of non-compact roots = d0 * lambda_j
       (the anticanonical degree: omega_X = O(-d0));
  mu = max over positive alpha of (alpha, delta) / c.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange, NotProportional
from .root_system import RootSystem, Vec, coord_json


@dataclass(frozen=True)
class ParabolicData:
    rs: RootSystem
    node: int
    compact_roots: tuple[Vec, ...]
    noncompact_roots: tuple[Vec, ...]
    dim_x: int
    c: int
    d0: int
    mu: Fraction


def build_parabolic(rs: RootSystem, node: int) -> ParabolicData:
    l = rs.lie_type.rank
    if not 1 <= node <= l:
        raise IndexOutOfRange(f"node {node} outside 1..{l}")
    j = node - 1
    compact = []
    noncompact = []
    for coeffs, alpha in zip(rs.pos_coords, rs.positive_roots):
        (compact if coeffs[j] == 0 else noncompact).append(alpha)

    c = rs.halfnorms[j]
    lam = rs.fundamental_weights[j]
    total = [Fraction(0)] * rs.ambient_dim
    for alpha in noncompact:
        for k in range(rs.ambient_dim):
            total[k] += alpha[k]
    # 2(s, alpha_j)/(alpha_j, alpha_j); must reproduce s exactly as d0*lambda_j
    d0f = rs.inner(tuple(total), rs.simple_roots[j]) / c
    if d0f.denominator != 1 or any(x != d0f * y for x, y in zip(total, lam)):
        raise NotProportional(
            f"sum of non-compact roots of ({rs.lie_type}, node {node}) "
            f"is not an integer multiple of lambda_{node}"
        )
    d0 = int(d0f)
    if d0 <= 0:
        raise NotProportional("anticanonical degree must be positive")

    mu = Fraction(max(rs.pos_heights), c)
    return ParabolicData(
        rs=rs,
        node=node,
        compact_roots=tuple(compact),
        noncompact_roots=tuple(noncompact),
        dim_x=len(noncompact),
        c=c,
        d0=d0,
        mu=mu,
    )


def torelli_constants(pd: ParabolicData) -> dict:
    """The cached constants used by the covering bounds; pure accessor."""
    return {"n": pd.dim_x, "c": pd.c, "d0": pd.d0, "mu": pd.mu}


def parabolic_json(pd: ParabolicData) -> dict:
    return {
        "group": str(pd.rs.lie_type),
        "node": pd.node,
        "dim": pd.dim_x,
        "c": pd.c,
        "d0": pd.d0,
        "mu": f"{pd.mu.numerator}/{pd.mu.denominator}",
    }


def compact_root_coords(pd: ParabolicData) -> list[tuple[int, ...]]:
    """Simple-basis coordinates of the compact positive roots (debug aid)."""
    return [tuple(int(x) for x in pd.rs.decompose(a)) for a in pd.compact_roots]


__all__ = [
    "ParabolicData",
    "build_parabolic",
    "torelli_constants",
    "parabolic_json",
    "compact_root_coords",
    "coord_json",
]
