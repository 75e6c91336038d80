"""Backend equivalence: the compiled kernels must reproduce the pure-Python
kernels bit for bit, and both must agree with the exact-rational route."""

import pytest

from flagcohom import _kernels, _kernels_py
from flagcohom.errors import CapExceeded
from flagcohom.parabolic import build_parabolic
from flagcohom.root_system import LieType, build_root_system

try:
    from flagcohom import _corekernels
except ImportError:
    _corekernels = None

needs_compiled = pytest.mark.skipif(
    _corekernels is None, reason="compiled kernels not built"
)

CASES = [
    ("A", 3, 2),
    ("B", 3, 1),
    ("C", 3, 3),
    ("D", 4, 2),
    ("G", 2, 2),
    ("F", 4, 4),
    ("A", 1, 1),
]


def test_backend_is_selected():
    assert _kernels.BACKEND in ("py", "c")
    assert callable(_kernels.coset_bfs)
    assert callable(_kernels.grade_cohomology)


def bfs_args(family, rank, node):
    rs = build_root_system(LieType(family, rank))
    levi = tuple(m for m in range(rank) if m != node - 1)
    return rs, (rs.reflection_root_mats, rank, levi, 10**6)


@needs_compiled
@pytest.mark.parametrize("family,rank,node", CASES)
def test_coset_bfs_parity(family, rank, node):
    _, args = bfs_args(family, rank, node)
    py = _kernels_py.coset_bfs(*args)
    cc = _corekernels.coset_bfs(*args)
    for a, b in zip(py, cc):
        assert list(a) == list(b)


@needs_compiled
@pytest.mark.parametrize("family,rank,node", CASES)
def test_grade_cohomology_parity(family, rank, node):
    rs, args = bfs_args(family, rank, node)
    lengths, _, _, vflat = _kernels_py.coset_bfs(*args)
    pd = build_parabolic(rs, node)
    dim = lengths[-1]
    offsets = [0] * (dim + 2)
    for q in lengths:
        offsets[q + 1] += 1
    for q in range(1, len(offsets)):
        offsets[q] += offsets[q - 1]
    for q in range(dim + 1):
        for k in range(-5, 6):
            common = (
                vflat,
                offsets[q],
                offsets[q + 1],
                rank,
                rs.pos_coords_flat,
                len(rs.positive_roots),
                rs.halfnorms,
                node - 1,
                pd.c * k,
                rs.delta_pairing_product,
                pd.dim_x,
            )
            assert _kernels_py.grade_cohomology(*common) == _corekernels.grade_cohomology(*common)


@needs_compiled
def test_cap_parity():
    _, args = bfs_args("A", 3, 2)
    refl, rank, levi, _ = args
    with pytest.raises(CapExceeded):
        _kernels_py.coset_bfs(refl, rank, levi, 3)
    with pytest.raises(CapExceeded):
        _corekernels.coset_bfs(refl, rank, levi, 3)


def test_identity_only_quotient():
    # rank-1 full Levi is impossible; use the trivial-Levi full group of A1
    rs = build_root_system(LieType("A", 1))
    lengths, parents, letters, vflat = _kernels.coset_bfs(
        rs.reflection_root_mats, 1, (), 100
    )
    assert list(lengths) == [0, 1]
    assert list(vflat) == [1, -1]
