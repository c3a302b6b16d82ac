#!/usr/bin/env python3
"""
极球堆积模块
极球面的构造、极球面上的度量（弧长、多边形面积、扇形体积），
以及单一类型与两种类型的最优极球堆积密度。

在中心被移到 (1,0,0,1) 的标准坐标系中，参数为 s 的极球面满足
(s-1)<y,y> - (1+s)(y0-y3)^2 = 0，即 Klein 坐标下的椭球
2(x²+y²)/(1-s) + 4(z-(s+1)/2)²/(1-s)² = 1。
水平函数 φ(y) = (y0-y3)² / (-<y,y>)，极球为 {φ <= κ}，κ = (1-s)/(1+s)。
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from scipy import optimize

from ..config import config_cached, get_unified_config
from ..geometry.lorentz import (
    CANONICAL_IDEAL,
    LorentzIsometry,
    LorentzVector,
    PointClass,
    bilinear_form,
    classify,
    ideal_to_canonical,
    perpendicular_foot,
    point_distance,
)
from ..geometry.orthoscheme import (
    TilingParams,
    TruncatedOrthoscheme,
    build_orthoscheme,
    orthoscheme_volume,
)
from ..utils.errors import (
    ConstraintViolationError,
    DomainError,
    GeometricInconsistencyError,
    HoroballTooLargeError,
    InvalidInputError,
    InvalidMetricError,
    NoValidPackingError,
)

logger = logging.getLogger(__name__)

_CANONICAL = np.array(CANONICAL_IDEAL)
# 求可行区间时离开端点的距离
_T_MARGIN = 1e-6

Frame = Union[TruncatedOrthoscheme, Sequence[LorentzVector], None]


def _frame_vectors(frame: Frame) -> Optional[List[LorentzVector]]:
    if isinstance(frame, TruncatedOrthoscheme):
        return frame.reference_frame()
    return list(frame) if frame is not None else None


def _canonical_level(y: np.ndarray) -> float:
    norm = bilinear_form(y, y)
    if norm >= 0:
        raise DomainError("水平函数只对真点有定义", {"coords": y.tolist()})
    return float((y[0] - y[3]) ** 2 / (-norm))


@dataclass(frozen=True, eq=False)
class Horosphere:
    """以理想点为中心的极球面"""
    center: LorentzVector
    s: float
    to_canonical: LorentzIsometry
    tangent_faces: Tuple[int, ...] = ()

    def __post_init__(self):
        if classify(self.center) is not PointClass.IDEAL:
            raise DomainError("极球面的中心必须是理想点")
        if not -1.0 < self.s < 1.0:
            raise GeometricInconsistencyError("参数 s 必须在 (-1, 1) 内", {"s": self.s})

    @property
    def kappa(self) -> float:
        """与坐标无关的水平值 (1-s)/(1+s)"""
        return (1.0 - self.s) / (1.0 + self.s)

    @property
    def apex(self) -> LorentzVector:
        """标准坐标中极球面与 x3 轴的交点 (1,0,0,s)"""
        return LorentzVector([1.0, 0.0, 0.0, self.s])

    def canonical(self, x: LorentzVector) -> np.ndarray:
        return self.to_canonical.matrix @ x.coords

    def level(self, x: LorentzVector) -> float:
        """点 x 的水平值 φ(x)"""
        return _canonical_level(self.canonical(x))

    def contains(self, x: LorentzVector, tol: float = 1e-12) -> bool:
        """x 是否在闭极球内"""
        return self.level(x) <= self.kappa * (1 + tol)

    def equation_residual(self, x: LorentzVector) -> float:
        """标准坐标下椭球方程的残差"""
        y = self.canonical(x)
        kx, ky, kz = y[1:] / y[0]
        s = self.s
        return float(2 * (kx ** 2 + ky ** 2) / (1 - s) + 4 * (kz - (s + 1) / 2) ** 2 / (1 - s) ** 2 - 1)

    def clearance(self, plane: LorentzVector) -> float:
        """
        极球与平面之间的有向间隙 ½ log(κ_plane / κ)

        正值表示极球在平面内侧且不相交，0 表示相切；过中心的平面返回 -inf。
        """
        w = self.canonical(plane)
        norm = bilinear_form(w, w)
        gap = (w[3] - w[0]) ** 2
        if gap <= 1e-24 * max(1.0, float(w @ w)):
            return float("-inf")
        return 0.5 * math.log(gap / norm / self.kappa)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "center": self.center.to_dict(),
            "s": self.s,
            "kappa": self.kappa,
            "tangent_faces": [f"u{i}" for i in self.tangent_faces],
        }


@dataclass(frozen=True, eq=False)
class HoroballSector:
    """极球与以其中心为顶点的锥的交"""
    horosphere: Horosphere
    vertex: int
    labels: Tuple[int, ...]
    polygon: Tuple[LorentzVector, ...]
    hyperbolic_lengths: np.ndarray
    horospheric_lengths: np.ndarray
    area: float
    volume: float

    def edge_table(self) -> List[Dict[str, Any]]:
        """
        扇形剖分中的全部边（按三角形顺序去重）

        四边形 H0H1H4H5 的顺序为 H0H1, H1H4, H0H4, H4H5, H0H5。
        """
        rows, seen = [], set()
        n = len(self.labels)
        for k in range(1, n - 1):
            for i, j in ((0, k), (k, k + 1), (0, k + 1)):
                if (i, j) in seen:
                    continue
                seen.add((i, j))
                rows.append({
                    "edge": f"H{self.labels[i]}H{self.labels[j]}",
                    "hyperbolic": float(self.hyperbolic_lengths[i, j]),
                    "horospheric": float(self.horospheric_lengths[i, j]),
                })
        return rows

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertex": self.vertex,
            "horosphere": self.horosphere.to_dict(),
            "polygon": [f"H{label}" for label in self.labels],
            "edges": self.edge_table(),
            "area": self.area,
            "volume": self.volume,
        }


@dataclass(frozen=True, eq=False)
class TwoHoroballConfig:
    """两个在 P(t) 处相切的极球 B0、B2"""
    params: TilingParams
    t: float
    tangency_point: LorentzVector
    b0: Horosphere
    b2: Horosphere

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params.label,
            "t": self.t,
            "tangency_point": self.tangency_point.to_dict(),
            "b0": self.b0.to_dict(),
            "b2": self.b2.to_dict(),
        }


@dataclass
class PackingResult:
    """极球堆积的结果"""
    params: TilingParams
    kind: str
    vertices: Tuple[int, ...]
    s_values: Dict[int, float]
    sector_volumes: Dict[int, float]
    orthoscheme_volume: float
    density: float
    t: Optional[float] = None
    active_constraints: Tuple[str, ...] = ()
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    @property
    def total_sector_volume(self) -> float:
        return float(sum(self.sector_volumes.values()))

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            "params": self.params.label,
            "kind": self.kind,
            "vertices": list(self.vertices),
            "t": self.t,
            "s_values": {f"A{k}": v for k, v in self.s_values.items()},
            "sector_volumes": {f"A{k}": v for k, v in self.sector_volumes.items()},
            "total_sector_volume": self.total_sector_volume,
            "orthoscheme_volume": self.orthoscheme_volume,
            "density": self.density,
            "active_constraints": list(self.active_constraints),
            "diagnostics": self.diagnostics,
        }


# ---- 极球面的构造 ----

def horosphere_through_point(center: LorentzVector, pt: LorentzVector,
                             frame: Frame = None) -> Horosphere:
    """
    以 center 为中心、经过真点 pt 的极球面

    把两点移到标准坐标后代入极球面方程。去分母后方程关于 s 是线性的：
    s = (<y,y> + (y0-y3)²) / (<y,y> - (y0-y3)²)。

    Args:
        center: 理想中心
        pt: 真点
        frame: 截断正交单形或参考标架，决定标准坐标

    Returns:
        Horosphere: 极球面
    """
    if classify(pt) is not PointClass.PROPER:
        raise DomainError("极球面必须经过真点", {"point": pt.coords.tolist()})
    M = ideal_to_canonical(center, _frame_vectors(frame))
    y = M.matrix @ pt.coords
    norm = bilinear_form(y, y)
    gap = (y[0] - y[3]) ** 2
    s = float((norm + gap) / (norm - gap))
    if not -1.0 < s < 1.0:
        raise GeometricInconsistencyError("方程在 (-1, 1) 内无解", {"s": s})
    return Horosphere(center=center, s=s, to_canonical=M)


def constraining_faces(o: TruncatedOrthoscheme, vertex: int) -> Tuple[int, ...]:
    """不经过该顶点的面，极球不能越过它们"""
    incident = o.lattice.vertex_faces[vertex]
    return tuple(i for i in sorted(o.faces) if i not in incident)


def _require_ideal(o: TruncatedOrthoscheme, vertex: int) -> LorentzVector:
    if vertex not in o.ideal_vertices:
        raise DomainError(f"A{vertex} 不是 {o.params.label} 的理想顶点",
                          {"vertex": vertex, "ideal_vertices": list(o.ideal_vertices)})
    return o.vertex(vertex)


def tangency_point(o: TruncatedOrthoscheme, vertex: int, face: int) -> LorentzVector:
    """理想顶点在面上的垂足，即最大极球与该面的切点"""
    return perpendicular_foot(_require_ideal(o, vertex), o.face(face))


def max_horoball(o: TruncatedOrthoscheme, vertex: int) -> Horosphere:
    """
    理想顶点处的最大极球：与约束面相切

    对每个约束面取过垂足的极球，保留其中最小者；
    多个约束面同时相切时全部记入 tangent_faces。

    Args:
        o: 截断正交单形
        vertex: 理想顶点编号

    Returns:
        Horosphere: 最大极球
    """
    tol = get_unified_config().tangency_tol
    center = _require_ideal(o, vertex)
    candidates = {
        i: horosphere_through_point(center, tangency_point(o, vertex, i), o)
        for i in constraining_faces(o, vertex)
    }
    s_max = max(h.s for h in candidates.values())
    tangent = tuple(i for i, h in candidates.items() if h.s >= s_max - tol)
    best = candidates[tangent[0]]
    logger.debug(f"{o.params.label}: A{vertex} 的最大极球 s={s_max:.10f} 与 {tangent} 相切")
    return Horosphere(center=best.center, s=best.s, to_canonical=best.to_canonical,
                      tangent_faces=tangent)


# ---- 度量 ----

def edge_intersections(h: Horosphere, o: TruncatedOrthoscheme) -> List[Tuple[int, LorentzVector]]:
    """
    极球面与以其中心为端点的各条棱的交点

    棱参数化为 λ·c + x'（标准坐标，c = (1,0,0,1)），代入方程后关于 λ 是线性的
    （另一个根是中心本身）。按顶点图的循环顺序返回 (另一端点编号, 交点)。
    """
    vertex = o.vertex_label(h.center)
    if vertex is None or vertex not in o.ideal_vertices:
        raise InvalidInputError("极球面的中心不是该多面体的理想顶点")

    M = h.to_canonical.matrix
    inverse = h.to_canonical.inverse().matrix
    s = h.s
    tol = get_unified_config().tangency_tol
    polygon = []
    for other in o.lattice.vertex_figure(vertex):
        x = M @ o.vertex(other).coords
        if x[0] < 0:
            x = -x
        gap = (x[0] - x[3]) ** 2
        lam = ((1 + s) * gap / (s - 1) - bilinear_form(x, x)) / (2 * bilinear_form(_CANONICAL, x))
        # 最大极球恰好经过顶点时 λ = 0，舍入误差可能给出极小的负数
        if lam < -tol * max(1.0, float(np.max(np.abs(x)))):
            raise HoroballTooLargeError(
                f"极球包含了顶点 A{other}",
                {"vertex": vertex, "other": other, "lambda": float(lam)})
        lam = max(lam, 0.0)
        point = LorentzVector(inverse @ (lam * _CANONICAL + x)).normalized()
        polygon.append((other, point))
    return polygon


def horospheric_arc_length(l: float) -> float:
    """弦长为 l 的两点在极球面上的内蕴距离 2 sinh(l/2)"""
    if l < 0:
        raise DomainError("长度不能为负", {"length": l})
    return float(2.0 * np.sinh(l / 2.0))


def cayley_menger_triangle_area(a: float, b: float, c: float) -> float:
    """
    Cayley-Menger 行列式求三角形面积

    Args:
        a, b, c: 边长 |P0P1|, |P0P2|, |P1P2|
    """
    cm = np.array([
        [0.0, 1.0, 1.0, 1.0],
        [1.0, 0.0, a ** 2, b ** 2],
        [1.0, a ** 2, 0.0, c ** 2],
        [1.0, b ** 2, c ** 2, 0.0],
    ])
    area_sq = -float(np.linalg.det(cm)) / 16.0
    scale = max(a, b, c, 1.0) ** 4
    if area_sq < -1e-12 * scale:
        raise InvalidMetricError("边长不满足三角不等式", {"sides": [a, b, c]})
    return float(np.sqrt(max(area_sq, 0.0)))


def heron_area(a: float, b: float, c: float) -> float:
    p = (a + b + c) / 2
    return float(np.sqrt(max(p * (p - a) * (p - b) * (p - c), 0.0)))


def horospheric_polygon_area(lengths: np.ndarray) -> float:
    """
    凸多边形面积：以顶点 0 为公共顶点做扇形三角剖分

    Args:
        lengths: 按循环顺序排列的顶点两两之间的极球面距离矩阵

    Returns:
        float: 面积
    """
    L = np.asarray(lengths, dtype=float)
    n = L.shape[0]
    if L.shape != (n, n) or n < 3:
        raise InvalidInputError("需要至少 3 个顶点的对称距离矩阵", {"shape": list(L.shape)})
    return float(sum(cayley_menger_triangle_area(L[0, k], L[0, k + 1], L[k, k + 1])
                     for k in range(1, n - 1)))


def sector_volume(area: float) -> float:
    """极球扇形体积 = 面积 / 2"""
    return 0.5 * area


def horoball_sector(h: Horosphere, o: TruncatedOrthoscheme) -> HoroballSector:
    """
    极球在多面体中的扇形：交点多边形、边长、面积与体积
    """
    vertex = o.vertex_label(h.center)
    polygon = edge_intersections(h, o)
    labels = tuple(label for label, _ in polygon)
    points = [p for _, p in polygon]
    n = len(points)
    hyper = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            hyper[i, j] = hyper[j, i] = point_distance(points[i], points[j])
    horo = 2.0 * np.sinh(hyper / 2.0)
    area = horospheric_polygon_area(horo)
    return HoroballSector(
        horosphere=h,
        vertex=vertex,
        labels=labels,
        polygon=tuple(points),
        hyperbolic_lengths=hyper,
        horospheric_lengths=horo,
        area=area,
        volume=sector_volume(area),
    )


def sector_width_area(h: Horosphere, o: TruncatedOrthoscheme) -> float:
    """
    A2 处矩形扇形面积的闭式：两组平行面 (u0,u1)、(u3,u4) 在极球面上的宽度之积

    一对平行面 w + w' = γ·c 时，它们在水平 κ 的极球面上相距 |γ|·sqrt(κ)。
    """
    vertex = o.vertex_label(h.center)
    figure = o.lattice.vertex_faces.get(vertex, frozenset())
    if vertex != 2 or figure != frozenset({0, 1, 3, 4}):
        raise InvalidInputError("闭式面积只适用于 A2 处的矩形顶点图")
    M = h.to_canonical.matrix
    widths = []
    for i, j in ((0, 1), (3, 4)):
        gamma = (M @ (o.face(i).coords + o.face(j).coords))[0]
        widths.append(abs(gamma) * math.sqrt(h.kappa))
    return float(widths[0] * widths[1])


# ---- 单一类型极球堆积 ----

def one_horoball_density(params: TilingParams, vertex: int) -> PackingResult:
    """
    理想顶点处最大极球的堆积密度

    Args:
        params: 镶嵌参数
        vertex: 理想顶点编号

    Returns:
        PackingResult: 扇形体积 / Vol(Ŝ)
    """
    o = build_orthoscheme(params)
    h = max_horoball(o, vertex)
    sector = horoball_sector(h, o)
    volume = orthoscheme_volume(params)
    return PackingResult(
        params=params,
        kind="one-horoball",
        vertices=(vertex,),
        s_values={vertex: h.s},
        sector_volumes={vertex: sector.volume},
        orthoscheme_volume=volume,
        density=sector.volume / volume,
        active_constraints=tuple(f"B{vertex}:u{i}" for i in h.tangent_faces),
        diagnostics={"area": sector.area},
    )


# ---- 两种类型极球堆积 ----

def _require_two_ideal(params: TilingParams) -> TruncatedOrthoscheme:
    if not params.has_two_ideal_vertices:
        raise DomainError(f"{params.label} 只有一个理想顶点", {"params": params.label})
    return build_orthoscheme(params)


def edge_point(o: TruncatedOrthoscheme, t: float) -> LorentzVector:
    """棱 A2A0 上的点 P(t) = (1-t)·a2 + t·a0（标准坐标中 x0 = 1 的代表元）"""
    return LorentzVector((1 - t) * o.vertex(2).coords + t * o.vertex(0).coords).normalized()


def tangent_pair(params: TilingParams, t: float) -> TwoHoroballConfig:
    """在 P(t) 处相切的两个极球"""
    o = _require_two_ideal(params)
    if not 0.0 < t < 1.0:
        raise DomainError("t 必须在 (0, 1) 内", {"t": t})
    p = edge_point(o, t)
    return TwoHoroballConfig(
        params=params,
        t=t,
        tangency_point=p,
        b0=horosphere_through_point(o.vertex(0), p, o),
        b2=horosphere_through_point(o.vertex(2), p, o),
    )


def _min_clearance(h: Horosphere, o: TruncatedOrthoscheme, vertex: int) -> Tuple[float, int]:
    values = [(h.clearance(o.face(i)), i) for i in constraining_faces(o, vertex)]
    return min(values)


def _clearances(params: TilingParams, t: float) -> Tuple[float, float]:
    o = build_orthoscheme(params)
    pair = tangent_pair(params, t)
    return _min_clearance(pair.b0, o, 0)[0], _min_clearance(pair.b2, o, 2)[0]


@config_cached
def feasible_t_interval(params: TilingParams) -> Tuple[float, float]:
    """
    切点参数 t 的可行区间 [t1, t2]

    t1: B0 不越过其约束面的最小 t；t2: B2 不越过其约束面的最大 t。
    区间可以退化为一点。

    Returns:
        (t1, t2)
    """
    _require_two_ideal(params)
    lo, hi = _T_MARGIN, 1.0 - _T_MARGIN
    t1 = optimize.brentq(lambda t: _clearances(params, t)[0], lo, hi, xtol=1e-15, maxiter=200)
    t2 = optimize.brentq(lambda t: _clearances(params, t)[1], lo, hi, xtol=1e-15, maxiter=200)
    if t1 > t2 + 1e-12:
        raise NoValidPackingError(f"{params.label}: 可行区间为空", {"t1": t1, "t2": t2})
    if t1 > t2:
        t1 = t2 = 0.5 * (t1 + t2)
    logger.debug(f"{params.label}: 可行区间 [{t1:.12f}, {t2:.12f}]")
    return float(t1), float(t2)


def _active(h: Horosphere, o: TruncatedOrthoscheme, vertex: int, tol: float) -> List[str]:
    return [f"B{vertex}:u{i}" for i in constraining_faces(o, vertex)
            if abs(h.clearance(o.face(i))) <= tol]


def two_horoball_density(params: TilingParams, t: float,
                         interval: Optional[Tuple[float, float]] = None) -> PackingResult:
    """
    两个在 P(t) 处相切的极球的堆积密度

    Args:
        params: 两个理想顶点的镶嵌参数
        t: 切点参数
        interval: 已知的可行区间，缺省时重新计算

    Returns:
        PackingResult: (Vol(B0∩Ŝ) + Vol(B2∩Ŝ)) / Vol(Ŝ)
    """
    cfg = get_unified_config()
    o = _require_two_ideal(params)
    t1, t2 = interval if interval is not None else feasible_t_interval(params)
    if t < t1 - 1e-12 or t > t2 + 1e-12:
        pair = tangent_pair(params, t) if 0.0 < t < 1.0 else None
        face = None
        if pair is not None:
            gap0, face0 = _min_clearance(pair.b0, o, 0)
            gap2, face2 = _min_clearance(pair.b2, o, 2)
            face = f"B0:u{face0}" if gap0 < gap2 else f"B2:u{face2}"
        raise ConstraintViolationError(
            f"{params.label}: t={t} 不在可行区间 [{t1:.7f}, {t2:.7f}] 内",
            face=face, details={"t": t, "t1": t1, "t2": t2})

    pair = tangent_pair(params, t)
    sectors = {0: horoball_sector(pair.b0, o), 2: horoball_sector(pair.b2, o)}
    volume = orthoscheme_volume(params)
    total = sum(sec.volume for sec in sectors.values())
    active = _active(pair.b0, o, 0, cfg.tangency_tol) + _active(pair.b2, o, 2, cfg.tangency_tol)
    return PackingResult(
        params=params,
        kind="two-horoball",
        vertices=(0, 2),
        s_values={0: pair.b0.s, 2: pair.b2.s},
        sector_volumes={k: sec.volume for k, sec in sectors.items()},
        orthoscheme_volume=volume,
        density=total / volume,
        t=float(t),
        active_constraints=tuple(active),
        diagnostics={"t1": t1, "t2": t2},
    )


_INV_PHI = (math.sqrt(5) - 1) / 2
_INV_PHI2 = (3 - math.sqrt(5)) / 2


def golden_section_search(f, a: float, b: float, tol: float = 1e-10,
                          max_iter: int = 200) -> Tuple[float, int]:
    """
    黄金分割法求单峰函数 f 在 [a, b] 上的极大值点

    Returns:
        (极大值点, 函数求值次数)
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    c, d = a + _INV_PHI2 * h, a + _INV_PHI * h
    fc, fd = f(c), f(d)
    evaluations = 2
    for _ in range(max_iter):
        if h <= tol:
            break
        if fc > fd:
            b, d, fd = d, c, fc
            h = _INV_PHI * h
            c = a + _INV_PHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = _INV_PHI * h
            d = a + _INV_PHI * h
            fd = f(d)
        evaluations += 1
    return (a + b) / 2, evaluations


def optimize_two_horoball(params: TilingParams) -> PackingResult:
    """
    在可行区间上最大化两极球密度

    先计算两个端点，再用黄金分割搜索内部；
    密度相差不超过 1e-12 时取较大的 t。

    Args:
        params: 两个理想顶点的镶嵌参数

    Returns:
        PackingResult: 最优堆积，diagnostics 中记录各候选
    """
    cfg = get_unified_config()
    interval = feasible_t_interval(params)
    t1, t2 = interval

    def density(t: float) -> float:
        return two_horoball_density(params, t, interval).density

    if t2 - t1 <= 1e-12:
        logger.info(f"{params.label}: 可行区间退化为一点 t={t1:.10f}")
        best = two_horoball_density(params, t1, interval)
        best.diagnostics.update({"evaluations": 1, "candidates": [[t1, best.density]]})
        return best

    candidates = [(t1, density(t1)), (t2, density(t2))]
    t_golden, evaluations = golden_section_search(density, t1, t2, tol=cfg.golden_tol)
    candidates.append((t_golden, density(t_golden)))

    best_t, best_density = candidates[0]
    for t, value in candidates[1:]:
        if value > best_density + 1e-12 or (abs(value - best_density) <= 1e-12 and t > best_t):
            best_t, best_density = t, value

    result = two_horoball_density(params, best_t, interval)
    result.diagnostics.update({
        "evaluations": evaluations + 3,
        "candidates": [[t, d] for t, d in candidates],
    })
    logger.info(f"{params.label}: 最优 t={best_t:.10f}, 密度 {result.density:.7f}")
    return result


@config_cached
def equal_volume_t(params: TilingParams) -> float:
    """两扇形体积相等时的 t（在可行区间内）"""
    interval = feasible_t_interval(params)
    t1, t2 = interval

    def difference(t: float) -> float:
        vols = two_horoball_density(params, t, interval).sector_volumes
        return vols[0] - vols[2]

    if t2 - t1 <= 1e-12:
        return t1
    lo, hi = difference(t1), difference(t2)
    if lo * hi > 0:
        raise NoValidPackingError(f"{params.label}: 可行区间内没有等体积点",
                                  {"t1": t1, "t2": t2})
    return float(optimize.brentq(difference, t1, t2, xtol=1e-15, maxiter=200))


def signed_displacement(params: TilingParams, t: float, t_equal: Optional[float] = None) -> float:
    """切点 P(t) 相对等体积位置的有向双曲位移（t 增大方向为正）"""
    o = _require_two_ideal(params)
    if t_equal is None:
        t_equal = equal_volume_t(params)
    d = point_distance(edge_point(o, t), edge_point(o, t_equal))
    return d if t >= t_equal else -d


def volume_law(params: TilingParams, x: float) -> float:
    """等体积位置处的总体积乘 cosh(2x)"""
    t_equal = equal_volume_t(params)
    base = two_horoball_density(params, t_equal).total_sector_volume
    return float(base * np.cosh(2 * x))


def density_curve(params: TilingParams, samples: Optional[int] = None) -> pd.DataFrame:
    """
    可行区间上均匀采样的密度曲线

    Args:
        params: 两个理想顶点的镶嵌参数
        samples: 采样数，缺省取配置值

    Returns:
        pd.DataFrame: 列 t, density, vol_b0, vol_b2, active_constraint
    """
    cfg = get_unified_config()
    if samples is None:
        samples = cfg.curve_samples
    if samples < 1:
        raise DomainError("采样数至少为 1", {"samples": samples})
    interval = feasible_t_interval(params)
    t1, t2 = interval
    if t2 - t1 <= 1e-12:
        logger.warning(f"⚠️ {params.label}: 可行区间退化为一点 t={t1:.7f}，曲线只有一行")
        ts = np.array([t1])
    else:
        ts = np.linspace(t1, t2, samples)

    rows = []
    for t in ts:
        result = two_horoball_density(params, float(t), interval)
        rows.append({
            "t": float(t),
            "density": result.density,
            "vol_b0": result.sector_volumes[0],
            "vol_b2": result.sector_volumes[2],
            "active_constraint": ";".join(result.active_constraints) or "none",
        })
    return pd.DataFrame(rows, columns=["t", "density", "vol_b0", "vol_b2", "active_constraint"])
