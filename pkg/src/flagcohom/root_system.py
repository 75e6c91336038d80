"""Root systems of the simple types in exact rational coordinates.

Coordinate realizations follow the standard Bourbaki tables: A_l lives in
l+1 coordinates, B_l/C_l/D_l in l, F4 in 4, G2 in 3, and E6/E7/E8 in the
common 8-coordinate realization.  The bilinear form is the Euclidean dot
product scaled per type so that short roots have squared length 2; it
differs from the Killing form only by a global scalar for each type, and
every quantity computed downstream is invariant under that scalar.

All arithmetic is exact (int and fractions.Fraction); there is no floating
point anywhere in the core.
"""

from __future__ import annotations

import threading
from array import array
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, InvalidRank, NotARoot, NotInSpan

Vec = tuple[Fraction, ...]

# admissible ranks per family: (min, max); None means unbounded above
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class LieType:
    """A simple type: family letter A..G plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        rng = _RANK_RANGE.get(self.family)
        if rng is None:
            raise InvalidRank(f"unknown family {self.family!r}")
        lo, hi = rng
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidRank(f"{self.family}{self.rank} is not a simple type")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip().upper()
        if len(text) < 2 or not text[0].isalpha() or not text[1:].isdigit():
            raise InvalidRank(f"cannot parse Lie type {text!r}")
        return cls(text[0], int(text[1:]))


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _reflect(v: Vec, a: Vec) -> Vec:
    c = 2 * _dot(v, a) / _dot(a, a)
    return tuple(vi - c * ai for vi, ai in zip(v, a))


def _chain(dim: int, count: int) -> list[Vec]:
    # e_i - e_{i+1} for i = 1..count
    out = []
    for i in range(count):
        v = [Fraction(0)] * dim
        v[i] = Fraction(1)
        v[i + 1] = Fraction(-1)
        out.append(tuple(v))
    return out


def _unit(dim: int, i: int, value=1) -> Vec:
    v = [Fraction(0)] * dim
    v[i] = Fraction(value)
    return tuple(v)


def _simple_root_table(lt: LieType) -> tuple[list[Vec], int, int]:
    """Bourbaki simple roots, ambient dimension, and the form scale."""
    fam, l = lt.family, lt.rank
    if fam == "A":
        return _chain(l + 1, l), l + 1, 1
    if fam == "B":
        return _chain(l, l - 1) + [_unit(l, l - 1)], l, 2
    if fam == "C":
        return _chain(l, l - 1) + [_unit(l, l - 1, 2)], l, 1
    if fam == "D":
        tail = [Fraction(0)] * l
        tail[l - 2] = Fraction(1)
        tail[l - 1] = Fraction(1)
        return _chain(l, l - 1) + [tuple(tail)], l, 1
    if fam == "E":
        h = Fraction(1, 2)
        alpha1 = (h, -h, -h, -h, -h, -h, -h, h)
        alpha2 = tuple(Fraction(x) for x in (1, 1, 0, 0, 0, 0, 0, 0))
        rest = []
        for k in range(3, 9):  # alpha_k = e_{k-2} - e_{k-3}
            v = [Fraction(0)] * 8
            v[k - 3] = Fraction(-1)
            v[k - 2] = Fraction(1)
            rest.append(tuple(v))
        return ([alpha1, alpha2] + rest)[:l], 8, 1
    if fam == "F":
        h = Fraction(1, 2)
        return [
            tuple(Fraction(x) for x in (0, 1, -1, 0)),
            tuple(Fraction(x) for x in (0, 0, 1, -1)),
            tuple(Fraction(x) for x in (0, 0, 0, 1)),
            (h, -h, -h, -h),
        ], 4, 2
    # G2
    return [
        tuple(Fraction(x) for x in (1, -1, 0)),
        tuple(Fraction(x) for x in (-2, 1, 1)),
    ], 3, 1


def _positive_count(lt: LieType) -> int:
    fam, l = lt.family, lt.rank
    if fam == "A":
        return l * (l + 1) // 2
    if fam in ("B", "C"):
        return l * l
    if fam == "D":
        return l * (l - 1)
    if fam == "G":
        return 6
    if fam == "F":
        return 24
    return {6: 36, 7: 63, 8: 120}[l]


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for i in range(n):
        if aug[i][i] == 0:
            for k in range(i + 1, n):
                if aug[k][i] != 0:
                    aug[i], aug[k] = aug[k], aug[i]
                    break
        piv = aug[i][i]
        if piv == 0:
            raise ValueError("singular matrix")
        aug[i] = [x / piv for x in aug[i]]
        for k in range(n):
            if k != i and aug[k][i] != 0:
                f = aug[k][i]
                aug[k] = [x - f * y for x, y in zip(aug[k], aug[i])]
    return [row[n:] for row in aug]


class RootSystem:
    """Roots, weights, Cartan matrix and the invariant form for one simple type.

    Immutable after construction; all methods are pure, so instances are
    safe to share between threads.
    """

    __slots__ = (
        "lie_type",
        "ambient_dim",
        "form_scale",
        "simple_roots",
        "positive_roots",
        "fundamental_weights",
        "delta",
        "cartan_matrix",
        "halfnorms",
        "pos_coords",
        "pos_coords_flat",
        "pos_heights",
        "delta_pairing_product",
        "reflection_root_mats",
        "_root_set",
        "_basis_root_coords",
        "_basis_perp",
    )

    def __init__(self, lie_type: LieType):
        simple, dim, scale = _simple_root_table(lie_type)
        l = lie_type.rank
        self.lie_type = lie_type
        self.ambient_dim = dim
        self.form_scale = scale
        self.simple_roots = tuple(simple)

        def form(u, v):
            return scale * _dot(u, v)

        halfnorms = []
        for a in simple:
            hn = form(a, a) / 2
            if hn.denominator != 1 or hn not in (1, 2, 3):
                raise ValueError(f"bad normalization for {lie_type}: {hn}")
            halfnorms.append(int(hn))
        self.halfnorms = tuple(halfnorms)

        cartan = []
        for i in range(l):
            row = []
            for j in range(l):
                c = form(simple[i], simple[j]) / halfnorms[j]
                if c.denominator != 1:
                    raise ValueError("non-integral Cartan entry")
                row.append(int(c))
            cartan.append(tuple(row))
        self.cartan_matrix = tuple(cartan)

        # fundamental weights: solve (C^T) x = e_j, lambda_j = sum x_m alpha_m
        ct = [[Fraction(cartan[m][i]) for m in range(l)] for i in range(l)]
        inv = _invert(ct)
        weights = []
        for j in range(l):
            coords = [inv[m][j] for m in range(l)]
            lam = tuple(
                sum((coords[m] * simple[m][c] for m in range(l)), Fraction(0))
                for c in range(dim)
            )
            weights.append(lam)
        self.fundamental_weights = tuple(weights)
        self.delta = tuple(
            sum((w[c] for w in weights), Fraction(0)) for c in range(dim)
        )

        # all roots: orbit of the simple roots under the simple reflections
        roots = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            beta = frontier.pop()
            for a in simple:
                img = _reflect(beta, a)
                if img not in roots:
                    roots.add(img)
                    frontier.append(img)
        self._root_set = frozenset(roots)

        positives = []
        for beta in roots:
            coeffs = self._coords_in_simple_basis(beta)
            ints = []
            for c in coeffs:
                if c.denominator != 1:
                    raise ValueError("non-integral root coefficient")
                ints.append(int(c))
            if all(c >= 0 for c in ints):
                positives.append((ints, beta))
            elif not all(c <= 0 for c in ints):
                raise ValueError("root with mixed-sign coefficients")
        positives.sort(key=lambda item: (sum(item[0]), item[0]))
        if len(positives) != _positive_count(lie_type):
            raise ValueError(f"positive root count mismatch for {lie_type}")
        self.positive_roots = tuple(beta for _, beta in positives)
        self.pos_coords = tuple(tuple(c) for c, _ in positives)
        flat = array("q")
        for c, _ in positives:
            flat.extend(c)
        self.pos_coords_flat = flat
        heights = tuple(
            sum(c * h for c, h in zip(coeffs, halfnorms)) for coeffs, _ in positives
        )
        self.pos_heights = heights
        prod = 1
        for hgt in heights:
            prod *= hgt
        self.delta_pairing_product = prod

        # simple reflections acting on simple-root coordinates (integer, flat)
        mats = []
        for j in range(l):
            m = [[1 if r == c else 0 for c in range(l)] for r in range(l)]
            for c in range(l):
                m[j][c] -= cartan[c][j]
            mats.append(tuple(x for row in m for x in row))
        self.reflection_root_mats = tuple(mats)

        # split of the ambient basis vectors into root-span part and complement
        basis_coords = []
        basis_perp = []
        for c in range(dim):
            e = _unit(dim, c)
            a = tuple(form(e, weights[i]) / halfnorms[i] for i in range(l))
            span = [Fraction(0)] * dim
            for i in range(l):
                if a[i]:
                    for k in range(dim):
                        span[k] += a[i] * simple[i][k]
            basis_coords.append(a)
            basis_perp.append(tuple(e[k] - span[k] for k in range(dim)))
        self._basis_root_coords = tuple(basis_coords)
        self._basis_perp = tuple(basis_perp)

    # ------------------------------------------------------------------

    def inner(self, u: Vec, v: Vec) -> Fraction:
        """Invariant bilinear form, normalized so short roots have (a, a) = 2."""
        if len(u) != len(v):
            raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)} differ")
        if len(u) != self.ambient_dim:
            raise DimensionMismatch(
                f"expected ambient dimension {self.ambient_dim}, got {len(u)}"
            )
        return self.form_scale * _dot(u, v)

    def height(self, beta: Vec) -> int:
        """(beta, delta) for a root beta; an exact integer in this normalization."""
        if tuple(beta) not in self._root_set:
            raise NotARoot(f"{beta} is not a root of {self.lie_type}")
        val = self.inner(beta, self.delta)
        return int(val)

    def decompose(self, alpha: Vec):
        """Coefficients of alpha in the simple-root basis.

        Integral coefficients come back as plain ints (always the case for
        roots); other vectors in the root span give exact Fractions.
        """
        coeffs = self._coords_in_simple_basis(alpha)
        recon = [Fraction(0)] * self.ambient_dim
        for c, a in zip(coeffs, self.simple_roots):
            if c:
                for k in range(self.ambient_dim):
                    recon[k] += c * a[k]
        if tuple(recon) != tuple(alpha):
            raise NotInSpan(f"{alpha} is not in the root span of {self.lie_type}")
        return tuple(int(c) if c.denominator == 1 else c for c in coeffs)

    def _coords_in_simple_basis(self, v: Vec) -> list[Fraction]:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(
                f"expected ambient dimension {self.ambient_dim}, got {len(v)}"
            )
        return [
            self.inner(v, self.fundamental_weights[i]) / self.halfnorms[i]
            for i in range(self.lie_type.rank)
        ]

    def is_positive_root(self, beta: Vec) -> bool:
        if tuple(beta) not in self._root_set:
            return False
        return all(c >= 0 for c in self.decompose(beta))

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.lie_type == self.lie_type

    def __hash__(self):
        return hash(self.lie_type)

    def __repr__(self):
        return f"RootSystem({self.lie_type})"


_BUILD_CACHE: dict[LieType, RootSystem] = {}
_BUILD_LOCK = threading.Lock()


def build_root_system(lie_type: LieType) -> RootSystem:
    """Construct (and cache) the root system of a simple type."""
    with _BUILD_LOCK:
        rs = _BUILD_CACHE.get(lie_type)
        if rs is None:
            rs = RootSystem(lie_type)
            _BUILD_CACHE[lie_type] = rs
    return rs


def coord_json(x) -> object:
    """Serialize one exact coordinate: plain int, or "p/q" for proper fractions."""
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def root_system_json(rs: RootSystem) -> dict:
    """Debug dump of a root system."""
    return {
        "type": str(rs.lie_type),
        "positive_roots": [[coord_json(x) for x in a] for a in rs.positive_roots],
        "delta": [coord_json(x) for x in rs.delta],
    }
