"""Weyl group elements, lengths, and graded minimal coset representatives.

Elements are stored as integer matrices in simple-root coordinates (the
matrix of w^{-1}; it determines the element exactly, and equality is
matrix equality).  The ambient rational matrix required by the public
contract is derived lazily and cached.  Coset representatives for a
maximal parabolic are produced by a breadth-first search in one of the two
kernel backends and shared through a write-once cache keyed by
(type, node).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import _kernels
from .errors import CapExceeded, IndexOutOfRange
from .root_system import LieType, RootSystem, Vec

DEFAULT_CAP = 10**6

_E_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}


def weyl_order(lie_type: LieType) -> int:
    """Order of the Weyl group by the classical product formulas."""
    fam, l = lie_type.family, lie_type.rank
    if fam == "A":
        return factorial(l + 1)
    if fam in ("B", "C"):
        return 2**l * factorial(l)
    if fam == "D":
        return 2 ** (l - 1) * factorial(l)
    if fam == "G":
        return 12
    if fam == "F":
        return 1152
    return _E_ORDERS[l]


# ----------------------------------------------------------------------
# elements


def _mul_flat(a, b, l):
    return tuple(
        sum(a[r * l + m] * b[m * l + c] for m in range(l))
        for r in range(l)
        for c in range(l)
    )


def _identity_flat(l):
    return tuple(1 if r == c else 0 for r in range(l) for c in range(l))


def _inversions(rs: RootSystem, vflat) -> int:
    """|{alpha > 0 : (matrix) alpha < 0}|; a root is negative iff all coords <= 0."""
    l = rs.lie_type.rank
    count = 0
    for coeffs in rs.pos_coords:
        neg = True
        for r in range(l):
            img = sum(vflat[r * l + c] * coeffs[c] for c in range(l))
            if img > 0:
                neg = False
                break
        if neg:
            count += 1
    return count


def _descent_word(rs: RootSystem, uflat) -> tuple[int, ...]:
    """Canonical reduced word of w from its action matrix, via descents."""
    l = rs.lie_type.rank
    ident = _identity_flat(l)
    picked = []
    u = uflat
    while u != ident:
        for i in range(l):
            if all(u[r * l + i] <= 0 for r in range(l)):  # w(alpha_i) < 0
                break
        else:
            raise RuntimeError("matrix is not a Weyl group element")
        u = _mul_flat(u, rs.reflection_root_mats[i], l)
        picked.append(i + 1)
    return tuple(reversed(picked))


class WeylElement:
    """An orthogonal transformation of the ambient space with cached length.

    word is one reduced expression (1-based simple-reflection indices);
    length equals both the word length and the inversion count.
    """

    __slots__ = ("rs", "word", "length", "_vflat", "_uflat", "_matrix")

    def __init__(self, rs: RootSystem, vflat, word, length, uflat=None):
        self.rs = rs
        self.word = tuple(word)
        self.length = length
        self._vflat = tuple(vflat)
        self._uflat = tuple(uflat) if uflat is not None else None
        self._matrix = None

    def _u(self):
        if self._uflat is None:
            l = self.rs.lie_type.rank
            u = _identity_flat(l)
            for i in self.word:
                u = _mul_flat(u, self.rs.reflection_root_mats[i - 1], l)
            self._uflat = u
        return self._uflat

    @property
    def matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        """Exact rational matrix acting on ambient coordinates."""
        if self._matrix is None:
            rs = self.rs
            l = rs.lie_type.rank
            dim = rs.ambient_dim
            u = self._u()
            # images of the simple roots in ambient coordinates
            img = [
                tuple(
                    sum(
                        (u[m * l + i] * rs.simple_roots[m][c] for m in range(l)),
                        Fraction(0),
                    )
                    for c in range(dim)
                )
                for i in range(l)
            ]
            cols = []
            for cidx in range(dim):
                a = rs._basis_root_coords[cidx]
                col = list(rs._basis_perp[cidx])
                for i in range(l):
                    if a[i]:
                        for k in range(dim):
                            col[k] += a[i] * img[i][k]
                cols.append(col)
            self._matrix = tuple(
                tuple(cols[c][r] for c in range(dim)) for r in range(dim)
            )
        return self._matrix

    def apply(self, v: Vec) -> Vec:
        m = self.matrix
        return tuple(
            sum((row[c] * v[c] for c in range(len(v))), Fraction(0)) for row in m
        )

    def inverse(self) -> "WeylElement":
        return WeylElement(
            self.rs,
            self._u(),
            tuple(reversed(self.word)),
            self.length,
            uflat=self._vflat,
        )

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.rs.lie_type != self.rs.lie_type:
            raise ValueError("cannot compose elements of different Weyl groups")
        l = self.rs.lie_type.rank
        u = _mul_flat(self._u(), other._u(), l)
        v = _mul_flat(other._vflat, self._vflat, l)
        word = _descent_word(self.rs, u)
        return WeylElement(self.rs, v, word, len(word), uflat=u)

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and other.rs.lie_type == self.rs.lie_type
            and other._vflat == self._vflat
        )

    def __hash__(self):
        return hash((self.rs.lie_type, self._vflat))

    def __repr__(self):
        return f"WeylElement(word={self.word}, length={self.length})"


def identity(rs: RootSystem) -> WeylElement:
    l = rs.lie_type.rank
    e = _identity_flat(l)
    return WeylElement(rs, e, (), 0, uflat=e)


def simple_reflection(i: int, rs: RootSystem) -> WeylElement:
    """Reflection s_i(v) = v - 2(v, alpha_i)/(alpha_i, alpha_i) alpha_i."""
    if not 1 <= i <= rs.lie_type.rank:
        raise IndexOutOfRange(f"node {i} outside 1..{rs.lie_type.rank}")
    s = rs.reflection_root_mats[i - 1]
    return WeylElement(rs, s, (i,), 1, uflat=s)


def from_word(rs: RootSystem, word) -> WeylElement:
    """Product of simple reflections; the stored word is re-reduced."""
    l = rs.lie_type.rank
    for i in word:
        if not 1 <= i <= l:
            raise IndexOutOfRange(f"node {i} outside 1..{l}")
    u = _identity_flat(l)
    for i in word:
        u = _mul_flat(u, rs.reflection_root_mats[i - 1], l)
    v = _identity_flat(l)
    for i in reversed(tuple(word)):
        v = _mul_flat(v, rs.reflection_root_mats[i - 1], l)
    reduced = _descent_word(rs, u)
    return WeylElement(rs, v, reduced, len(reduced), uflat=u)


def length(w: WeylElement, rs: RootSystem | None = None) -> int:
    """Inversion count over the positive roots (recomputed, not cached)."""
    rs = rs if rs is not None else w.rs
    return _inversions(rs, w._vflat)


# ----------------------------------------------------------------------
# Levi subsystems


def levi_components(rs: RootSystem, node: int) -> list[LieType]:
    """Connected components of the Dynkin diagram with `node` removed."""
    l = rs.lie_type.rank
    if not 1 <= node <= l:
        raise IndexOutOfRange(f"node {node} outside 1..{l}")
    keep = [i for i in range(l) if i != node - 1]
    c = rs.cartan_matrix
    seen: set[int] = set()
    comps = []
    for start in keep:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for m in keep:
                if m not in seen and m != i and c[i][m] != 0:
                    seen.add(m)
                    stack.append(m)
        comps.append(sorted(comp))
    return [_classify_component(comp, rs) for comp in comps]


def _classify_component(nodes: list[int], rs: RootSystem) -> LieType:
    c = rs.cartan_matrix
    h = rs.halfnorms
    m = len(nodes)
    if m == 1:
        return LieType("A", 1)
    edge_mult = 1
    for a in nodes:
        for b in nodes:
            if a < b and c[a][b] != 0:
                edge_mult = max(edge_mult, c[a][b] * c[b][a])
    if edge_mult == 3:
        return LieType("G", 2)
    if edge_mult == 2:
        shorts = sum(1 for i in nodes if h[i] == 1)
        if m == 2:
            # B2 and C2 coincide; label by the convention that B ends short
            return LieType("B" if h[max(nodes)] == 1 else "C", 2)
        if m == 4 and shorts == 2:
            return LieType("F", 4)
        return LieType("B" if shorts == 1 else "C", m)
    deg = {i: sum(1 for j in nodes if j != i and c[i][j] != 0) for i in nodes}
    branch = [i for i in nodes if deg[i] == 3]
    if not branch:
        return LieType("A", m)
    b = branch[0]
    arms = []
    for first in (j for j in nodes if j != b and c[b][j] != 0):
        n = 1
        prev, cur = b, first
        while True:
            nxt = [j for j in nodes if j not in (prev, cur) and c[cur][j] != 0]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            n += 1
        arms.append(n)
    arms.sort()
    if arms[1] == 1:
        return LieType("D", m)
    return LieType("E", m)


def levi_weyl_order(rs: RootSystem, node: int) -> int:
    order = 1
    for comp in levi_components(rs, node):
        order *= weyl_order(comp)
    return order


def coset_count(rs: RootSystem, node: int) -> int:
    """|W| / |W_Levi| without enumerating anything."""
    total = weyl_order(rs.lie_type)
    sub = levi_weyl_order(rs, node)
    if total % sub:
        raise RuntimeError("Levi order does not divide the Weyl order")
    return total // sub


# ----------------------------------------------------------------------
# graded coset representatives


class CosetAtlas:
    """Raw BFS output for one (type, node) pair, in compact arrays.

    Elements are indexed 0..total-1 in length order; grade q occupies the
    contiguous slice offsets[q]:offsets[q+1].  vflat holds the flat integer
    matrix of w^{-1} for each element.
    """

    __slots__ = ("rank", "lengths", "parents", "letters", "vflat", "offsets", "total", "dim", "_words")

    def __init__(self, rank, lengths, parents, letters, vflat):
        self.rank = rank
        self.lengths = lengths
        self.parents = parents
        self.letters = letters
        self.vflat = vflat
        self.total = len(lengths)
        self.dim = lengths[-1] if self.total else 0
        offsets = [0] * (self.dim + 2)
        for q in lengths:
            offsets[q + 1] += 1
        for q in range(1, len(offsets)):
            offsets[q] += offsets[q - 1]
        self.offsets = tuple(offsets)
        self._words = None

    def sizes(self) -> list[int]:
        return [self.offsets[q + 1] - self.offsets[q] for q in range(self.dim + 1)]

    def words(self) -> list[tuple[int, ...]]:
        """Discovery words (1-based letters), reduced by construction."""
        if self._words is None:
            words: list[tuple[int, ...]] = [()] * self.total
            for t in range(1, self.total):
                words[t] = words[self.parents[t]] + (self.letters[t] + 1,)
            self._words = words
        return self._words

    def vmat(self, t: int) -> tuple[int, ...]:
        l = self.rank
        return tuple(self.vflat[t * l * l : (t + 1) * l * l])


_ATLAS: dict[tuple[LieType, int], CosetAtlas] = {}
_ATLAS_LOCK = threading.Lock()


def coset_atlas(rs: RootSystem, node: int, cap: int = DEFAULT_CAP) -> CosetAtlas:
    expected = coset_count(rs, node)
    if expected > cap:
        raise CapExceeded(expected, cap)
    key = (rs.lie_type, node)
    with _ATLAS_LOCK:
        atlas = _ATLAS.get(key)
    if atlas is None:
        levi = tuple(m for m in range(rs.lie_type.rank) if m != node - 1)
        lengths, parents, letters, vflat = _kernels.coset_bfs(
            rs.reflection_root_mats, rs.lie_type.rank, levi, cap
        )
        atlas = CosetAtlas(rs.lie_type.rank, lengths, parents, letters, vflat)
        if atlas.total != expected:
            raise RuntimeError(
                f"coset enumeration found {atlas.total} elements, expected {expected}"
            )
        with _ATLAS_LOCK:
            atlas = _ATLAS.setdefault(key, atlas)
    return atlas


@dataclass(frozen=True)
class GradedCosetReps:
    """Minimal coset representatives of W_Levi \\ W, graded by length."""

    by_length: dict[int, tuple[WeylElement, ...]]
    total: int

    def sizes(self) -> list[int]:
        top = max(self.by_length)
        return [len(self.by_length.get(q, ())) for q in range(top + 1)]


def enumerate_coset_reps(pd, cap: int = DEFAULT_CAP) -> GradedCosetReps:
    """All w with w^{-1} alpha > 0 for every compact positive root alpha.

    Membership is tested on the Levi simple roots alpha_i, i != node, which
    is equivalent.  Lengths equal BFS depth; grades come back in canonical
    order.  Raises CapExceeded when |W|/|W_Levi| is larger than `cap`.
    """
    rs, node = pd.rs, pd.node
    atlas = coset_atlas(rs, node, cap)
    words = atlas.words()
    by_length: dict[int, tuple[WeylElement, ...]] = {}
    for q in range(atlas.dim + 1):
        start, stop = atlas.offsets[q], atlas.offsets[q + 1]
        by_length[q] = tuple(
            WeylElement(rs, atlas.vmat(t), words[t], atlas.lengths[t])
            for t in range(start, stop)
        )
    return GradedCosetReps(by_length=by_length, total=atlas.total)


def coset_sizes_json(reps: GradedCosetReps) -> dict:
    return {"sizes": reps.sizes()}
