from fractions import Fraction

import pytest

from flagcohom.errors import IndexOutOfRange
from flagcohom.parabolic import build_parabolic, parabolic_json, torelli_constants
from flagcohom.root_system import LieType, build_root_system
from flagcohom.weyl import enumerate_coset_reps


def pd_of(family, rank, node):
    return build_parabolic(build_root_system(LieType(family, rank)), node)


def test_projective_space_anticanonical_degree():
    for n in range(1, 9):
        assert pd_of("A", n, 1).d0 == n + 1


def test_constants_examples():
    assert torelli_constants(pd_of("A", 2, 1)) == {
        "n": 2,
        "c": 1,
        "d0": 3,
        "mu": Fraction(2),
    }
    assert torelli_constants(pd_of("A", 1, 1)) == {
        "n": 1,
        "c": 1,
        "d0": 2,
        "mu": Fraction(1),
    }
    pd = pd_of("A", 3, 2)
    assert pd.dim_x == 4
    assert pd.c == 1
    assert pd.d0 == 4
    assert pd.mu == 3


def test_c_constant_by_node_length():
    # long-root nodes of B and C give c = 2; short ones give c = 1
    assert pd_of("B", 3, 1).c == 2
    assert pd_of("B", 3, 2).c == 2
    assert pd_of("B", 3, 3).c == 1
    assert pd_of("C", 3, 1).c == 1
    assert pd_of("C", 3, 3).c == 2
    assert pd_of("G", 2, 1).c == 1
    assert pd_of("G", 2, 2).c == 3


def test_mu_values():
    assert pd_of("B", 2, 1).mu == 2  # max height 4, c = 2
    assert pd_of("B", 2, 2).mu == 4
    assert pd_of("G", 2, 1).mu == 9
    assert pd_of("G", 2, 2).mu == 3


def test_compact_split():
    pd = pd_of("B", 3, 2)
    rs = pd.rs
    assert len(pd.compact_roots) + len(pd.noncompact_roots) == len(rs.positive_roots)
    assert pd.dim_x == len(pd.noncompact_roots)
    j = pd.node - 1
    for alpha in pd.compact_roots:
        assert rs.decompose(alpha)[j] == 0
    for alpha in pd.noncompact_roots:
        assert rs.decompose(alpha)[j] > 0


@pytest.mark.parametrize(
    "family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)]
)
def test_fundamental_weight_pairings(family, rank):
    # (lambda_j, alpha) = 0 on compact roots, = c * coeff_j(alpha) otherwise
    rs = build_root_system(LieType(family, rank))
    for node in range(1, rank + 1):
        pd = build_parabolic(rs, node)
        lam = rs.fundamental_weights[node - 1]
        j = node - 1
        for alpha in pd.compact_roots:
            assert rs.inner(lam, alpha) == 0
        for alpha in pd.noncompact_roots:
            coeff = rs.decompose(alpha)[j]
            assert rs.inner(lam, alpha) == pd.c * coeff > 0


@pytest.mark.parametrize(
    "family,rank,node",
    [("A", 4, 2), ("B", 3, 2), ("C", 3, 1), ("D", 4, 2), ("G", 2, 1)],
)
def test_dim_x_equals_top_grade(family, rank, node):
    pd = pd_of(family, rank, node)
    reps = enumerate_coset_reps(pd)
    assert max(reps.by_length) == pd.dim_x


def test_sum_of_noncompact_roots_is_d0_lambda():
    for family, rank in [("A", 4), ("B", 4), ("C", 4), ("D", 4), ("F", 4), ("G", 2)]:
        rs = build_root_system(LieType(family, rank))
        for node in range(1, rank + 1):
            pd = build_parabolic(rs, node)
            lam = rs.fundamental_weights[node - 1]
            total = [Fraction(0)] * rs.ambient_dim
            for alpha in pd.noncompact_roots:
                for k in range(rs.ambient_dim):
                    total[k] += alpha[k]
            assert tuple(total) == tuple(pd.d0 * x for x in lam)
            assert pd.d0 >= 1


def test_node_validation():
    rs = build_root_system(LieType("A", 2))
    with pytest.raises(IndexOutOfRange):
        build_parabolic(rs, 0)
    with pytest.raises(IndexOutOfRange):
        build_parabolic(rs, 3)


def test_json():
    pd = pd_of("A", 3, 2)
    assert parabolic_json(pd) == {
        "group": "A3",
        "node": 2,
        "dim": 4,
        "c": 1,
        "d0": 4,
        "mu": "3/1",
    }
