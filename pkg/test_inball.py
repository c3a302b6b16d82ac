#!/usr/bin/env python3
"""
测试内切球：存在性、Type 1 闭式半径、Type 2 枚举与堆积密度
"""

import math

import numpy as np
import pytest

from hypack.geometry import TilingParams, admissible_params, build_matrices, build_orthoscheme
from hypack.geometry.orthoscheme import SchlafliMatrices
from hypack.packing import (
    InballType,
    ball_volume,
    enumerate_incenter_candidates,
    existence_margin_chain,
    face_distances,
    grid_search_min_face_distance,
    incenter_type2,
    inball_density,
    inball_exists,
    inball_sum_closed_form,
    inradius_type1,
    search_incenter,
    truncation_preserves_inradius,
    truncation_ratio,
)
from hypack.utils.errors import DomainError, InconsistentInputError

# 内切球参考值 (半径, 球体积, 密度)；Type 2 的三行取全等的对偶参数的值
TABLE1 = {
    (3, 3): (0.2116177, 0.0400529, 0.2623649),
    (3, 4): (0.2236802, 0.0473496, 0.1886735),
    (3, 5): (0.2335727, 0.0539625, 0.1623776),
    (3, 6): (0.2407179, 0.0591079, 0.1397706),
    (4, 3): (0.2236802, 0.0473496, 0.1886735),
    (4, 4): (0.2888593, 0.1026579, 0.2241524),
    (5, 3): (0.2335727, 0.0539625, 0.1623776),
    (6, 3): (0.2407179, 0.0591079, 0.1397706),
}

TYPE2_PARAMS = [(4, 3), (5, 3), (6, 3)]


def test_inball_exists_for_every_tuple(any_params):
    assert inball_exists(build_matrices(any_params))


def test_closed_form_sum_matches_matrix_sum(any_params):
    m = build_matrices(any_params)
    assert inball_sum_closed_form(any_params) == pytest.approx(m.det_b * np.sum(m.h), abs=1e-12)


def test_closed_form_sum_33(params33):
    assert inball_sum_closed_form(params33) == pytest.approx(5.5, abs=1e-12)


def test_existence_margin_chain_is_positive(any_params):
    lhs, rhs = existence_margin_chain(any_params)
    assert lhs >= rhs > 0


@pytest.mark.parametrize("q, r, expected", [
    (3, 3, True),
    (3, 4, True),
    (3, 6, True),
    (4, 4, True),
    (4, 3, False),
    (5, 3, False),
    (6, 3, False),
])
def test_truncation_preserves_inradius(q, r, expected):
    assert truncation_preserves_inradius(TilingParams(q=q, r=r)) is expected


def test_truncation_ratio(any_params):
    ratio = truncation_ratio(build_matrices(any_params))
    assert ratio == pytest.approx(2 * any_params.cos_r / any_params.cos_q - 1, abs=1e-12)
    assert (ratio >= 1 - 1e-12) == truncation_preserves_inradius(any_params)


@pytest.mark.parametrize("q, r", [(3, 3), (3, 6), (4, 4)])
def test_inradius_type1(q, r):
    radius = inradius_type1(build_matrices(TilingParams(q=q, r=r)))
    assert radius == pytest.approx(TABLE1[(q, r)][0], abs=2e-7)


def test_inradius_type1_rejects_non_negative_sum(params33):
    fake = SchlafliMatrices(params=params33, b=np.eye(4), B=np.eye(5), h=np.eye(4), det_b=1.0, c4=-1.0)
    with pytest.raises(InconsistentInputError):
        inradius_type1(fake)


def test_ball_volume():
    assert ball_volume(0.0) == 0.0
    assert ball_volume(0.2116177) == pytest.approx(0.0400529, abs=2e-7)
    r = 1e-3
    assert ball_volume(r) == pytest.approx(4.0 / 3.0 * math.pi * r ** 3, rel=1e-5)
    with pytest.raises(DomainError):
        ball_volume(-0.1)


def test_ball_volume_is_increasing():
    radii = np.linspace(0.0, 2.0, 21)
    volumes = [ball_volume(r) for r in radii]
    assert all(b > a for a, b in zip(volumes, volumes[1:]))


@pytest.mark.parametrize("q, r", TYPE2_PARAMS)
def test_type2_inball_matches_congruent_dual(q, r):
    params = TilingParams(q=q, r=r)
    res = incenter_type2(build_orthoscheme(params))
    dual = inradius_type1(build_matrices(params.dual()))
    assert res.type_tag is InballType.TYPE2
    assert res.radius == pytest.approx(dual, abs=1e-9)
    assert set(res.tangent_faces) == {1, 2, 3, 4}


def test_inball_table(any_params):
    radius, volume, density = TABLE1[(any_params.q, any_params.r)]
    res = inball_density(any_params)
    assert res.radius == pytest.approx(radius, abs=2e-7)
    assert res.ball_volume == pytest.approx(volume, abs=2e-7)
    assert res.density == pytest.approx(density, abs=2e-6)


def test_inball_type_tags(any_params):
    res = inball_density(any_params)
    expected = InballType.TYPE1 if truncation_preserves_inradius(any_params) else InballType.TYPE2
    assert res.type_tag is expected


def test_tangency_certificate(any_params):
    """球心到切面的距离等于半径，到其余面不小于半径"""
    res = inball_density(any_params)
    o = build_orthoscheme(any_params)
    distances = face_distances(o, res.center)
    assert len(res.tangent_faces) >= 4
    for i, d in distances.items():
        assert d >= res.radius - 1e-9
        if i in res.tangent_faces:
            assert d == pytest.approx(res.radius, abs=1e-9)


def test_equality_case_touches_truncating_face(params33):
    """q = r 时 Type 1 内切球同时与 u4 相切"""
    assert 4 in inball_density(params33).tangent_faces
    assert 4 not in inball_density(TilingParams(q=3, r=4)).tangent_faces


def test_full_search_agrees_with_selected_inball(any_params):
    o = build_orthoscheme(any_params)
    best, candidates = search_incenter(o)
    assert len(candidates) == 5
    assert best.radius == pytest.approx(inball_density(any_params).radius, abs=1e-9)


def test_candidates_report_infeasibility(params33):
    candidates = enumerate_incenter_candidates(build_orthoscheme(params33))
    assert any(c.feasible for c in candidates)
    for c in candidates:
        data = c.to_dict()
        assert data["feasible"] == c.feasible
        if not c.feasible:
            assert c.reason


@pytest.mark.parametrize("q, r", [(3, 3), (4, 4), *TYPE2_PARAMS])
def test_grid_search_does_not_beat_inball(q, r):
    """网格上最优点的最小面距离不超过内切球半径，且与之相差不超过一个网格单元"""
    params = TilingParams(q=q, r=r)
    res = inball_density(params)
    grid = grid_search_min_face_distance(build_orthoscheme(params))
    assert grid.interior_points >= 100_000
    assert grid.value <= res.radius + 1e-9
    # 最近的网格点在半个单元对角线内，球心附近 Klein 度量的伸缩小于 4
    assert grid.value >= res.radius - 2 * grid.spacing
    assert grid.point.x0 == 1.0


def test_grid_search_with_fixed_resolution(params33):
    grid = grid_search_min_face_distance(build_orthoscheme(params33), n_per_axis=20)
    assert grid.n_per_axis == 20
    assert 0 < grid.interior_points < 20 ** 3
    assert grid.to_dict()["value"] == grid.value


def test_densest_ball_packing_is_33():
    best = max(admissible_params(), key=lambda p: inball_density(p).density)
    assert best.label == "(3,3)"


def test_inball_result_to_dict(params33):
    data = inball_density(params33).to_dict()
    assert data["params"] == "(3,3)"
    assert data["type"] == "Type1"
    assert "u0" in data["tangent_faces"]
    assert data["density"] == pytest.approx(0.2623649, abs=2e-6)
