"""Cyclic-cover arithmetic: the effective Torelli bound, Kuranishi dimension,
and basic cover invariants.

Z is a degree-N simple cover of X = G/P branched along a section of
O(N)^L^N with L = O(d).  Everything here is arithmetic on top of the line
bundle cohomology of X:

  * Torelli bound: d(N-1) - d0 > mu  or  d(N-1) - d0 > n-1 establishes
    infinitesimal Torelli for Z (a sufficient condition only; assumes the
    Kuranishi space is smooth).
  * h^0(Z, N_Z) = sum_{j=0}^{N} h^0(X, O(jd)) - 1, and this equals
    h^1(Z, tau_Z) once d(N-1) > d0 kills the ambient tangent sections.
  * omega_Z = f^*(O(d(N-1) - d0)), so the geometric genus is a sum of
    h^0(X, O(d(N-1-i) - d0)) over the N summands of f_* O_Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bott import line_bundle_cohomology
from .errors import DimensionTooSmall, InvalidCover
from .parabolic import ParabolicData

SMOOTHNESS_NOTE = "assumes the Kuranishi space of the cover is smooth"


@dataclass(frozen=True)
class CoverSpec:
    """A degree-N simple cover of G/P with respect to L = O(d)."""

    pd: ParabolicData
    d: int
    N: int


@dataclass(frozen=True)
class TorelliReport:
    bound: int  # d(N-1) - d0
    mu: Fraction
    n_minus_1: int
    holds: bool
    reason: str  # "exceeds_mu", "exceeds_dim" or "not_established"


@dataclass(frozen=True)
class KuranishiReport:
    h0_normal: int
    tau_vanishes: bool
    h1_tangent: int | None  # None means unknown (only a surjection is available)


@dataclass(frozen=True)
class CoverInvariants:
    omega_degree: int
    geometric_genus: int


def _validate(spec: CoverSpec) -> None:
    if spec.d < 1 or spec.N < 2:
        raise InvalidCover(f"need d >= 1 and N >= 2, got d={spec.d}, N={spec.N}")
    if spec.pd.dim_x < 2:
        raise DimensionTooSmall(
            f"dim X = {spec.pd.dim_x} < 2 for ({spec.pd.rs.lie_type}, node {spec.pd.node})"
        )


def check_torelli(spec: CoverSpec) -> TorelliReport:
    """Evaluate the sufficient Torelli condition.

    holds=False means the condition is not established by the bound; it is
    never a disproof.
    """
    _validate(spec)
    pd = spec.pd
    bound = spec.d * (spec.N - 1) - pd.d0
    n_minus_1 = pd.dim_x - 1
    if bound > pd.mu:
        return TorelliReport(bound, pd.mu, n_minus_1, True, "exceeds_mu")
    if bound > n_minus_1:
        return TorelliReport(bound, pd.mu, n_minus_1, True, "exceeds_dim")
    return TorelliReport(bound, pd.mu, n_minus_1, False, "not_established")


def _h0(pd: ParabolicData, m: int) -> int:
    return line_bundle_cohomology(pd, m)[0]


def kuranishi(spec: CoverSpec, sum_limit: str = "N") -> KuranishiReport:
    """First-order deformation count of the cover.

    sum_limit selects the upper limit of the normal-bundle sum: the default
    "N" gives sum_{j=0}^{N} h^0(O(jd)) - 1; "N-1" is the variant with one
    term fewer, exposed for sensitivity checks.
    """
    _validate(spec)
    if sum_limit not in ("N", "N-1"):
        raise ValueError(f"sum_limit must be 'N' or 'N-1', got {sum_limit!r}")
    top = spec.N if sum_limit == "N" else spec.N - 1
    h0_normal = sum(_h0(spec.pd, j * spec.d) for j in range(top + 1)) - 1
    tau_vanishes = spec.d * (spec.N - 1) > spec.pd.d0
    h1 = h0_normal if tau_vanishes else None
    return KuranishiReport(h0_normal=h0_normal, tau_vanishes=tau_vanishes, h1_tangent=h1)


def cover_invariants(spec: CoverSpec) -> CoverInvariants:
    """Degree of omega_Z over Pic(X) and the geometric genus h^0(Z, omega_Z)."""
    _validate(spec)
    pd, d, N = spec.pd, spec.d, spec.N
    omega_degree = d * (N - 1) - pd.d0
    genus = sum(_h0(pd, d * (N - 1 - i) - pd.d0) for i in range(N))
    return CoverInvariants(omega_degree=omega_degree, geometric_genus=genus)


def torelli_verdict_text(report: TorelliReport) -> str:
    if not report.holds:
        return "not established by the theorem"
    return "holds"


def torelli_json_dict(spec: CoverSpec, report: TorelliReport, kur: KuranishiReport) -> dict:
    pd = spec.pd
    return {
        "group": str(pd.rs.lie_type),
        "node": pd.node,
        "d": spec.d,
        "N": spec.N,
        "bound": report.bound,
        "mu": f"{report.mu.numerator}/{report.mu.denominator}",
        "n": pd.dim_x,
        "torelli": torelli_verdict_text(report),
        "reason": report.reason,
        "h0_normal": str(kur.h0_normal),
        "h1_tangent": "unknown" if kur.h1_tangent is None else str(kur.h1_tangent),
        "note": SMOOTHNESS_NOTE,
    }
