#!/usr/bin/env python3
"""
内切球模块
截断正交单形的最大内切球：截断不影响内切球时（Type 1）用闭式公式，
内切球穿过截断面时（Type 2）枚举四面相切的候选球心。
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_unified_config
from ..geometry.lorentz import LorentzVector, plane_distance
from ..geometry.orthoscheme import (
    TRUNCATED_VERTEX,
    TRUNCATING_FACE,
    SchlafliMatrices,
    TilingParams,
    TruncatedOrthoscheme,
    build_matrices,
    build_orthoscheme,
    orthoscheme_volume,
)
from ..utils.errors import (
    DomainError,
    GeometricDegeneracyError,
    InconsistentInputError,
)

logger = logging.getLogger(__name__)

# 候选四面组的 Gram 矩阵条件数上限
_MAX_CONDITION = 1e12


class InballType(Enum):
    """内切球类型"""
    TYPE1 = "Type1"
    TYPE2 = "Type2"


@dataclass(frozen=True, eq=False)
class InballCandidate:
    """与四个面等距的候选球心"""
    faces: Tuple[int, ...]
    center: Optional[LorentzVector]
    radius: Optional[float]
    feasible: bool
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "faces": list(self.faces),
            "center": self.center.to_dict() if self.center is not None else None,
            "radius": self.radius,
            "feasible": self.feasible,
            "reason": self.reason,
        }


@dataclass(frozen=True, eq=False)
class InballResult:
    """最优内切球及其堆积密度"""
    params: TilingParams
    center: LorentzVector
    radius: float
    type_tag: InballType
    tangent_faces: Tuple[int, ...]
    ball_volume: float
    orthoscheme_volume: float
    density: float
    candidates: Tuple[InballCandidate, ...] = field(default_factory=tuple)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            "params": self.params.label,
            "center": self.center.to_dict(),
            "radius": self.radius,
            "type": self.type_tag.value,
            "tangent_faces": [f"u{i}" for i in self.tangent_faces],
            "ball_volume": self.ball_volume,
            "orthoscheme_volume": self.orthoscheme_volume,
            "density": self.density,
        }


def inball_exists(m: SchlafliMatrices) -> bool:
    """Σ det(b)·h_ij > 0 时完全正交单形有有限半径的内切球"""
    return bool(m.det_b * float(np.sum(m.h)) > 0)


def inball_sum_closed_form(params: TilingParams) -> float:
    """Σ det(b)·h_ij 的闭式: 4 sin²(π/r) + 4cos(π/q)(1 + cos(π/r)) - 2cos²(π/q)"""
    cq, cr = params.cos_q, params.cos_r
    return 4 * (1 - cr ** 2) + 4 * cq * (1 + cr) - 2 * cq ** 2


def existence_margin_chain(params: TilingParams) -> Tuple[float, float]:
    """
    存在性不等式链的两项

    Returns:
        (4 + 2cos²(π/q) + 4cos(π/q)cos(π/r) - 4cos²(π/r), 4 - 4cos²(π/r))
    """
    cq, cr = params.cos_q, params.cos_r
    return 4 + 2 * cq ** 2 + 4 * cq * cr - 4 * cr ** 2, 4 - 4 * cr ** 2


def truncation_ratio(m: SchlafliMatrices) -> float:
    """
    完全正交单形内心到截断面的比值 -Σ_j h_3j / sqrt(h_33)

    化简为 2cos(π/r)/cos(π/q) - 1，不小于 1 时截断不影响内切球。
    """
    k = TRUNCATED_VERTEX
    return float(-np.sum(m.h[k]) / np.sqrt(m.h[k, k]))


def truncation_preserves_inradius(params: TilingParams) -> bool:
    """cos(π/r) >= cos(π/q) 时内切球不穿过截断面（Type 1）"""
    return params.cos_r >= params.cos_q - 1e-12


def inradius_type1(m: SchlafliMatrices) -> float:
    """
    Type 1 内切球半径 r = arcsinh(sqrt(-1 / Σ h_ij))

    Args:
        m: Schläfli 矩阵

    Returns:
        float: 内切球半径
    """
    total = float(np.sum(m.h))
    if total >= 0:
        raise InconsistentInputError("Σ h_ij 必须为负", {"sum": total, "params": m.params.label})
    return float(np.arcsinh(np.sqrt(-1.0 / total)))


def ball_volume(r: float) -> float:
    """半径为 r 的双曲球体积 π(sinh 2r - 2r)"""
    if r < 0:
        raise DomainError("半径不能为负", {"radius": r})
    return float(np.pi * (np.sinh(2 * r) - 2 * r))


def face_distances(o: TruncatedOrthoscheme, center: LorentzVector) -> Dict[int, float]:
    """真点到五个面的有向距离"""
    return {i: plane_distance(center, u) for i, u in o.faces.items()}


def _solve_candidate(o: TruncatedOrthoscheme, subset: Tuple[int, ...], tol: float) -> InballCandidate:
    gram = o.face_gram()[np.ix_(subset, subset)]
    if np.linalg.cond(gram) > _MAX_CONDITION:
        return InballCandidate(subset, None, None, False, "singular")

    weights = np.linalg.solve(gram, np.ones(len(subset)))
    total = float(weights.sum())
    if total >= 0:
        return InballCandidate(subset, None, None, False, "no proper center")

    coords = sum(w * o.faces[i].coords for w, i in zip(weights, subset))
    if coords[0] <= 0:
        return InballCandidate(subset, None, None, False, "center outside the model cone")

    center = LorentzVector(coords).normalized()
    radius = float(np.arcsinh(1.0 / np.sqrt(-total)))
    others = {i: d for i, d in face_distances(o, center).items() if i not in subset}
    violated = [i for i, d in others.items() if d < radius - tol]
    if violated:
        return InballCandidate(subset, center, radius, False, f"crosses u{violated[0]}")
    return InballCandidate(subset, center, radius, True)


def enumerate_incenter_candidates(o: TruncatedOrthoscheme,
                                  subsets: Optional[Iterable[Sequence[int]]] = None,
                                  tol: Optional[float] = None) -> List[InballCandidate]:
    """
    对每个四面组求与四个面等距的点

    球心 c = Σ x_k u_k，其中 G x = 1（G 为四个单位面形式的 Gram 矩阵），
    此时 <c, u_k> 相等，半径 sinh r = 1 / sqrt(-Σ x_k)。
    """
    if tol is None:
        tol = get_unified_config().tangency_tol
    if subsets is None:
        subsets = itertools.combinations(sorted(o.faces), 4)
    return [_solve_candidate(o, tuple(sorted(s)), tol) for s in subsets]


def search_incenter(o: TruncatedOrthoscheme,
                    subsets: Optional[Iterable[Sequence[int]]] = None,
                    tol: Optional[float] = None) -> Tuple[InballCandidate, List[InballCandidate]]:
    """
    在候选中选出半径最大的可行球心

    半径相差不超过 1e-10 时取面下标集合字典序最小者。

    Returns:
        (最优候选, 全部候选)
    """
    candidates = enumerate_incenter_candidates(o, subsets, tol)
    best: Optional[InballCandidate] = None
    for cand in candidates:
        if not cand.feasible:
            continue
        if best is None or cand.radius > best.radius + 1e-10:
            best = cand
    if best is None:
        raise GeometricDegeneracyError(
            f"{o.params.label}: 没有可行的内切球候选",
            {"candidates": [c.to_dict() for c in candidates]})
    return best, candidates


def _tangent_faces(o: TruncatedOrthoscheme, center: LorentzVector, radius: float,
                   tol: float) -> Tuple[int, ...]:
    return tuple(i for i, d in face_distances(o, center).items() if abs(d - radius) <= tol)


def _result(o: TruncatedOrthoscheme, center: LorentzVector, radius: float,
            type_tag: InballType, candidates: Sequence[InballCandidate]) -> InballResult:
    cfg = get_unified_config()
    volume = orthoscheme_volume(o.params)
    bv = ball_volume(radius)
    return InballResult(
        params=o.params,
        center=center,
        radius=radius,
        type_tag=type_tag,
        tangent_faces=_tangent_faces(o, center, radius, cfg.tangency_tol),
        ball_volume=bv,
        orthoscheme_volume=volume,
        density=bv / volume,
        candidates=tuple(candidates),
    )


def incenter_type2(o: TruncatedOrthoscheme) -> InballResult:
    """
    与截断面 u4 相切的最优内切球

    枚举 u4 与 {u0,u1,u2,u3} 中任意三个面组成的四面组。

    Args:
        o: 截断正交单形

    Returns:
        InballResult: Type 2 内切球
    """
    if truncation_preserves_inradius(o.params):
        logger.debug(f"{o.params.label}: 截断不影响内切球，仍按 Type 2 枚举")
    subsets = [s for s in itertools.combinations(sorted(o.faces), 4) if TRUNCATING_FACE in s]
    best, candidates = search_incenter(o, subsets)
    logger.info(f"{o.params.label}: Type 2 内切球与 {best.faces} 相切, r={best.radius:.7f}")
    return _result(o, best.center, best.radius, InballType.TYPE2, candidates)


def inball_density(params: TilingParams) -> InballResult:
    """
    最优内切球堆积密度 Vol(B) / Vol(Ŝ)

    Args:
        params: 镶嵌参数

    Returns:
        InballResult: 球心、半径、类型、体积与密度
    """
    o = build_orthoscheme(params)
    m = build_matrices(params)
    if not inball_exists(m):
        raise GeometricDegeneracyError(f"{params.label}: 完全正交单形没有内切球")

    if not truncation_preserves_inradius(params):
        return incenter_type2(o)

    radius = inradius_type1(m)
    best, candidates = search_incenter(o, [tuple(range(4))])
    return _result(o, best.center, radius, InballType.TYPE1, candidates)


@dataclass(frozen=True, eq=False)
class GridSearchResult:
    """网格暴力搜索的结果"""
    value: float
    point: LorentzVector
    interior_points: int
    n_per_axis: int
    spacing: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "point": self.point.to_dict(),
            "interior_points": self.interior_points,
            "n_per_axis": self.n_per_axis,
            "spacing": self.spacing,
        }


def _klein_grid(o: TruncatedOrthoscheme, n: int):
    corners = np.array([o.vertices[v].klein() for v in o.polytope_vertices])
    axes = [np.linspace(lo, hi, n) for lo, hi in zip(corners.min(axis=0), corners.max(axis=0))]
    # 网格单元的对角线长度
    spacing = float(np.sqrt(sum((axis[1] - axis[0]) ** 2 for axis in axes)))
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)
    points = np.hstack([np.ones((grid.shape[0], 1)), grid])

    norms = -points[:, 0] ** 2 + np.sum(points[:, 1:] ** 2, axis=1)
    forms = np.array([o.faces[i].coords for i in sorted(o.faces)])
    inner = (points * np.array([-1.0, 1.0, 1.0, 1.0])) @ forms.T
    inside = (norms < 0) & np.all(inner >= 0, axis=1)
    return points[inside], norms[inside], inner[inside], spacing


def grid_search_min_face_distance(o: TruncatedOrthoscheme, min_points: int = 100_000,
                                  n_per_axis: Optional[int] = None) -> GridSearchResult:
    """
    暴力搜索：Klein 坐标网格上到各面最小距离的最大值

    网格覆盖多面体顶点的包围盒，只保留多面体内部的真点。
    未指定 n_per_axis 时逐步加密，直到内部点数不少于 min_points。

    Returns:
        GridSearchResult: 最大的最小面距离、达到该值的网格点、内部点数与网格间距
    """
    n = n_per_axis or 48
    while True:
        points, norms, inner, spacing = _klein_grid(o, n)
        count = points.shape[0]
        if n_per_axis is not None or count >= min_points:
            break
        if count == 0:
            raise GeometricDegeneracyError("网格中没有内部点", {"n_per_axis": n})
        n = int(np.ceil(n * (min_points / count) ** (1.0 / 3.0))) + 1
    if count == 0:
        raise GeometricDegeneracyError("网格中没有内部点", {"n_per_axis": n})

    # 单位面形式: sinh d = <x,u> / sqrt(-<x,x>)
    sinh_d = inner / np.sqrt(-norms)[:, None]
    worst = np.arcsinh(sinh_d.min(axis=1))
    k = int(np.argmax(worst))
    logger.debug(f"{o.params.label}: 网格 n={n}, {count} 个内部点, 最优 {worst[k]:.7f}")
    return GridSearchResult(
        value=float(worst[k]),
        point=LorentzVector(points[k]),
        interior_points=count,
        n_per_axis=n,
        spacing=spacing,
    )
