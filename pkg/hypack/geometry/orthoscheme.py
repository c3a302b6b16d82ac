#!/usr/bin/env python3
"""
截断正交单形模块
构造 {∞,q,r,∞} 镶嵌的 Coxeter-Schläfli 矩阵、顶点与面的 Lorentz 嵌入、
截断后的多面体及其面格，并用 Lobachevsky 函数计算体积。
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from scipy import integrate, special

from ..config import config_cached, get_unified_config
from ..utils.errors import (
    GeometricInconsistencyError,
    InadmissibleParameterError,
    ParameterValidationError,
)
from .lorentz import (
    LorentzIsometry,
    LorentzVector,
    PointClass,
    VectorKind,
    bilinear_form,
    classify,
    ideal_to_canonical,
    lorentz_gram,
)

logger = logging.getLogger(__name__)

# 表格顺序的全部可行参数
ADMISSIBLE_PARAMS: Tuple[Tuple[int, int], ...] = (
    (3, 3), (3, 4), (3, 5), (3, 6), (4, 3), (4, 4), (5, 3), (6, 3),
)

# 截断顶点（超理想）与截断面的下标
TRUNCATED_VERTEX = 3
TRUNCATING_FACE = 4


class TilingParams(BaseModel):
    """镶嵌参数 (q, r)，p 固定为 ∞"""

    model_config = ConfigDict(frozen=True)

    q: int = Field(..., ge=3, description="u1 与 u2 之间的二面角为 π/q")
    r: int = Field(..., ge=3, description="u2 与 u3 之间的二面角为 π/r")

    @model_validator(mode="after")
    def _check_admissible(self) -> "TilingParams":
        # 1/q + 1/r >= 1/2
        if 2 * (self.q + self.r) < self.q * self.r:
            raise ValueError(f"(q,r)=({self.q},{self.r}) 不满足 1/q + 1/r >= 1/2")
        if (self.q, self.r) not in ADMISSIBLE_PARAMS:
            raise ValueError(f"(q,r)=({self.q},{self.r}) 不在可行参数集合中")
        return self

    @classmethod
    def create(cls, q: int, r: int) -> "TilingParams":
        """构造参数，校验失败时抛出 ParameterValidationError"""
        try:
            return cls(q=q, r=r)
        except ValidationError as e:
            raise ParameterValidationError(
                f"无效的镶嵌参数 (q,r)=({q},{r})",
                {"q": q, "r": r, "errors": [err["msg"] for err in e.errors()]}
            ) from e

    @property
    def cos_q(self) -> float:
        return float(np.cos(np.pi / self.q))

    @property
    def cos_r(self) -> float:
        return float(np.cos(np.pi / self.r))

    @property
    def has_two_ideal_vertices(self) -> bool:
        """1/q + 1/r = 1/2 时 A0 也在绝对形上"""
        return 2 * (self.q + self.r) == self.q * self.r

    @property
    def ideal_vertices(self) -> Tuple[int, ...]:
        return (0, 2) if self.has_two_ideal_vertices else (2,)

    @property
    def label(self) -> str:
        return f"({self.q},{self.r})"

    @property
    def schlafli_symbol(self) -> str:
        return f"(inf,{self.q},{self.r},inf)"

    def dual(self) -> "TilingParams":
        """面的编号反转 u_i ↔ u_{4-i} 得到的全等多面体的参数"""
        return TilingParams(q=self.r, r=self.q)


def admissible_params() -> List[TilingParams]:
    """按表格顺序返回全部 8 组参数"""
    return [TilingParams(q=q, r=r) for q, r in ADMISSIBLE_PARAMS]


@dataclass(frozen=True, eq=False)
class SchlafliMatrices:
    """Coxeter-Schläfli 矩阵及其逆"""
    params: TilingParams
    b: np.ndarray       # 面 u0..u3 的 4x4 矩阵
    B: np.ndarray       # 面 u0..u4 的 5x5 矩阵
    h: np.ndarray       # b 的逆，<a_i, a_j>
    det_b: float
    c4: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params.label,
            "b": self.b.tolist(),
            "B": self.B.tolist(),
            "h": self.h.tolist(),
            "det_b": self.det_b,
            "c4": self.c4,
        }


def general_c4(cos_p: float, cos_q: float, cos_r: float) -> float:
    """
    截断面 u4 与 u3 之间的 -cos(二面角)

    Args:
        cos_p, cos_q, cos_r: cos(π/p), cos(π/q), cos(π/r)

    Returns:
        float: c4
    """
    numerator = 1 + cos_p ** 2 * cos_r ** 2 - cos_p ** 2 - cos_q ** 2 - cos_r ** 2
    denominator = 1 - cos_p ** 2 - cos_q ** 2
    if denominator == 0:
        raise InadmissibleParameterError("c4 的分母为零", {"cos_p": cos_p, "cos_q": cos_q})
    radicand = numerator / denominator
    if radicand < 0:
        raise InadmissibleParameterError("c4 的根式为负", {"radicand": radicand})
    return -float(np.sqrt(radicand))


def _inverse_closed_form(cp: float, cq: float, cr: float) -> np.ndarray:
    """b 的逆矩阵的闭式表达"""
    sp2, sq2, sr2 = 1 - cp ** 2, 1 - cq ** 2, 1 - cr ** 2
    det = 1 - cp ** 2 - cq ** 2 - cr ** 2 + cp ** 2 * cr ** 2
    h = np.array([
        [sq2 - cr ** 2, cp * sr2, cp * cq, cp * cq * cr],
        [cp * sr2, sr2, cq, cq * cr],
        [cp * cq, cq, sp2, cr * sp2],
        [cp * cq * cr, cq * cr, cr * sp2, sp2 - cq ** 2],
    ])
    return h / det


@lru_cache(maxsize=None)
def build_matrices(params: TilingParams) -> SchlafliMatrices:
    """
    构造 {∞,q,r,∞} 的 Coxeter-Schläfli 矩阵

    Args:
        params: 镶嵌参数

    Returns:
        SchlafliMatrices: b、B、h = b^-1、det(b)、c4
    """
    cp, cq, cr = 1.0, params.cos_q, params.cos_r
    b = np.array([
        [1.0, -cp, 0.0, 0.0],
        [-cp, 1.0, -cq, 0.0],
        [0.0, -cq, 1.0, -cr],
        [0.0, 0.0, -cr, 1.0],
    ])
    c4 = general_c4(cp, cq, cr)

    B = np.zeros((5, 5))
    B[:4, :4] = b
    B[3, 4] = B[4, 3] = c4
    B[4, 4] = 1.0

    h = _inverse_closed_form(cp, cq, cr)
    det_b = float(np.linalg.det(b))

    for arr in (b, B, h):
        arr.setflags(write=False)
    logger.debug(f"{params.label}: det(b)={det_b:.12f}, c4={c4:.12f}")
    return SchlafliMatrices(params=params, b=b, B=B, h=h, det_b=det_b, c4=c4)


@dataclass(frozen=True)
class FaceLattice:
    """截断多面体的面格：顶点-面关联、棱、面上的顶点"""
    vertex_faces: Dict[int, FrozenSet[int]]
    edges: Tuple[Tuple[int, int], ...]
    face_vertices: Dict[int, Tuple[int, ...]]

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertex_faces) - len(self.edges) + len(self.face_vertices)

    def neighbors(self, vertex: int) -> List[int]:
        """与 vertex 相邻的顶点（升序）"""
        return sorted(w for e in self.edges if vertex in e for w in e if w != vertex)

    def edge_faces(self, v: int, w: int) -> FrozenSet[int]:
        return self.vertex_faces[v] & self.vertex_faces[w]

    def vertex_figure(self, vertex: int) -> List[int]:
        """
        顶点图的循环顺序

        两个相邻顶点在顶点图中相邻，当且仅当对应的两条棱位于同一个面上。
        从最小编号出发，每步走向未访问邻居中编号最小的一个。
        """
        around = self.neighbors(vertex)
        if not around:
            return []
        cycle = [around[0]]
        remaining = set(around[1:])
        while remaining:
            current = cycle[-1]
            linked = sorted(w for w in remaining
                            if self.edge_faces(vertex, current) & self.edge_faces(vertex, w))
            if not linked:
                raise GeometricInconsistencyError(
                    "顶点图不是一个环", {"vertex": vertex, "partial": cycle})
            cycle.append(linked[0])
            remaining.remove(linked[0])
        return cycle


@dataclass(frozen=True, eq=False)
class TruncatedOrthoscheme:
    """
    截断正交单形 Ŝ(q,r)

    坐标取标准位置：A2 = (1,0,0,1)，A1 位于模型中心 (1,0,0,0)。
    faces[i] 是单位平面形式 (<u,u> = 1)，内部为 {<x,u_i> >= 0}。
    """
    params: TilingParams
    matrices: SchlafliMatrices
    faces: Dict[int, LorentzVector]
    vertices: Dict[int, LorentzVector]
    polytope_vertices: Tuple[int, ...]
    lattice: FaceLattice
    embedding: LorentzIsometry

    @property
    def ideal_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v in self.polytope_vertices
                     if classify(self.vertices[v]) is PointClass.IDEAL)

    @property
    def truncation_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v in self.polytope_vertices if v > TRUNCATED_VERTEX)

    def face(self, index: int) -> LorentzVector:
        return self.faces[index]

    def vertex(self, index: int) -> LorentzVector:
        return self.vertices[index]

    def face_gram(self) -> np.ndarray:
        """<u_i, u_j>，i, j = 0..4"""
        return lorentz_gram([self.faces[i] for i in sorted(self.faces)])

    def reference_frame(self) -> List[LorentzVector]:
        """供 ideal_to_canonical 使用的参考标架，以真点 A1 开头"""
        frame = [self.vertices[i] for i in (1, 0, 2, TRUNCATED_VERTEX)]
        frame.extend(self.faces[i] for i in sorted(self.faces))
        return frame

    def vertex_label(self, point: LorentzVector, tol: float = 1e-9) -> Optional[int]:
        """给定点对应的多面体顶点编号，不是顶点时返回 None"""
        for label in self.polytope_vertices:
            if self.vertices[label].projectively_equal(point, tol):
                return label
        return None

    def contains(self, x: LorentzVector, tol: float = 1e-12) -> bool:
        """点是否位于截断多面体中（含边界）"""
        coords = x.coords if x.coords[0] >= 0 else -x.coords
        scale = float(np.linalg.norm(coords))
        return all(bilinear_form(coords, u) >= -tol * scale for u in self.faces.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params.label,
            "faces": {i: u.to_dict() for i, u in self.faces.items()},
            "vertices": {i: v.to_dict() for i, v in self.vertices.items()},
            "ideal_vertices": list(self.ideal_vertices),
            "edges": [list(e) for e in self.lattice.edges],
        }


def _lorentz_factor(b: np.ndarray) -> np.ndarray:
    """返回行向量 u_i 组成的矩阵 U，使 U J U^T = b"""
    eigenvalues, eigenvectors = np.linalg.eigh(b)
    if np.count_nonzero(eigenvalues < 0) != 1 or np.any(np.abs(eigenvalues) < 1e-14):
        raise GeometricInconsistencyError(
            "Schläfli 矩阵的符号不是 (1,3)", {"eigenvalues": eigenvalues.tolist()})
    return eigenvectors * np.sqrt(np.abs(eigenvalues))


def _incident(point: np.ndarray, plane: np.ndarray, tol: float) -> bool:
    scale = float(np.linalg.norm(point) * np.linalg.norm(plane))
    return abs(bilinear_form(point, plane)) <= tol * scale


def _build_lattice(vertices: Dict[int, LorentzVector], faces: Dict[int, LorentzVector],
                   labels: Tuple[int, ...], tol: float) -> FaceLattice:
    vertex_faces = {
        v: frozenset(i for i, u in faces.items() if _incident(vertices[v].coords, u.coords, tol))
        for v in labels
    }
    edges = tuple(
        (v, w) for k, v in enumerate(labels) for w in labels[k + 1:]
        if len(vertex_faces[v] & vertex_faces[w]) >= 2
    )
    face_vertices = {i: tuple(v for v in labels if i in vertex_faces[v]) for i in sorted(faces)}

    for i, members in face_vertices.items():
        if len(members) < 3:
            raise GeometricInconsistencyError(f"面 u{i} 上只有 {len(members)} 个顶点",
                                              {"face": i, "vertices": list(members)})
    lattice = FaceLattice(vertex_faces=vertex_faces, edges=edges, face_vertices=face_vertices)
    if lattice.euler_characteristic != 2:
        raise GeometricInconsistencyError(
            "面格的 Euler 示性数不等于 2",
            {"V": len(labels), "E": len(edges), "F": len(face_vertices)})
    return lattice


@config_cached
def build_orthoscheme(params: TilingParams) -> TruncatedOrthoscheme:
    """
    构造截断正交单形的嵌入

    面形式由 b 的 Lorentz 分解给出，顶点 a_i = Σ_j h_ij u_j 是对偶基，
    u4 为 A3 的极平面。最后用 ideal_to_canonical 把 A2 移到 (1,0,0,1)。

    Args:
        params: 镶嵌参数

    Returns:
        TruncatedOrthoscheme: 截断多面体
    """
    cfg = get_unified_config()
    m = build_matrices(params)

    forms = _lorentz_factor(m.b)
    points = m.h @ forms
    if points[1, 0] < 0:
        forms, points = -forms, -points

    # u4 为 A3 的极平面，定向指向 A0、A1 一侧
    truncating = -points[TRUNCATED_VERTEX] / np.sqrt(m.h[TRUNCATED_VERTEX, TRUNCATED_VERTEX])
    all_forms = np.vstack([forms, truncating])

    embedding = ideal_to_canonical(
        points[2],
        frame=[points[1], points[0], points[TRUNCATED_VERTEX], *forms],
    )
    mat = embedding.matrix
    faces = {i: LorentzVector(mat @ all_forms[i], VectorKind.PLANE) for i in range(5)}
    vertices: Dict[int, LorentzVector] = {
        i: LorentzVector(mat @ points[i]).normalized() for i in range(4)
    }

    # A3 的各条棱与 u4 的交点；与已有顶点重合的（A2）不再编号
    a3 = mat @ points[TRUNCATED_VERTEX]
    u4 = faces[TRUNCATING_FACE].coords
    next_label = 4
    for source in (2, 1, 0):
        x = mat @ points[source]
        cut = LorentzVector(x - (bilinear_form(x, u4) / bilinear_form(a3, u4)) * a3).normalized()
        if any(cut.projectively_equal(v) for v in vertices.values()):
            continue
        vertices[next_label] = cut
        next_label += 1

    labels = tuple(sorted(k for k in vertices if k != TRUNCATED_VERTEX))
    lattice = _build_lattice(vertices, faces, labels, cfg.incidence_tol)

    o = TruncatedOrthoscheme(
        params=params,
        matrices=m,
        faces=faces,
        vertices=vertices,
        polytope_vertices=labels,
        lattice=lattice,
        embedding=embedding,
    )
    logger.info(f"✅ {params.label}: 截断正交单形构造完成，顶点 {labels}，理想顶点 {o.ideal_vertices}")
    return o


def dihedral_angles(o: TruncatedOrthoscheme) -> np.ndarray:
    """由面 Gram 矩阵恢复的二面角矩阵 arccos(-<u_i,u_j>)，平行面对应 0"""
    gram = o.face_gram()
    return np.arccos(np.clip(-gram, -1.0, 1.0))


# ---- Lobachevsky 函数 ----

_SERIES_TERMS = 40
_BERNOULLI = special.bernoulli(2 * _SERIES_TERMS)
# c_k = |B_2k| / (2k (2k+1) (2k)!)
_SERIES_COEFFS = np.array([
    abs(_BERNOULLI[2 * k]) / (2 * k * (2 * k + 1) * special.factorial(2 * k, exact=False))
    for k in range(1, _SERIES_TERMS + 1)
])
_SERIES_POWERS = np.arange(1, _SERIES_TERMS + 1) * 2 + 1


def lobachevsky(x: float) -> float:
    """
    Lobachevsky 函数 Л(x) = -∫_0^x log|2 sin t| dt

    先利用奇性与 π 周期性约化到 [0, π/2]，再用级数
    Л(x) = x - x log(2x) + 1/2 Σ |B_2k| (2x)^(2k+1) / (2k (2k+1) (2k)!)
    """
    y = float(x) - np.pi * np.round(float(x) / np.pi)
    if y == 0.0:
        return 0.0
    sign = 1.0 if y > 0 else -1.0
    y = abs(y)
    series = 0.5 * float(np.sum(_SERIES_COEFFS * (2 * y) ** _SERIES_POWERS))
    return sign * (y - y * np.log(2 * y) + series)


def lobachevsky_quad(x: float) -> float:
    """
    自适应求积计算 Л(x)，作为级数的独立校验

    约化到 (-π/2, π/2] 后只在 t = 0 处有对数奇点。
    """
    y = float(x) - np.pi * np.round(float(x) / np.pi)
    if y == 0.0:
        return 0.0
    sign = 1.0 if y > 0 else -1.0
    value, _ = integrate.quad(lambda t: np.log(2 * np.sin(t)), 0.0, abs(y),
                              epsabs=1e-12, epsrel=1e-12, limit=200)
    return -sign * value


def lobachevsky_dilog(x: float) -> float:
    """由 Clausen 函数计算：Л(x) = Cl2(2x)/2，Cl2(θ) = Im Li2(e^{iθ})"""
    z = np.exp(2j * float(x))
    return 0.5 * float(np.imag(special.spence(1 - z)))


def orthoscheme_volume(params: TilingParams) -> float:
    """
    截断正交单形的体积（Kellerhals 公式）

    本质角 α01 = 0（平行面）、α12 = π/q、α23 = π/r。

    Args:
        params: 镶嵌参数

    Returns:
        float: Vol(Ŝ(q,r))
    """
    a01, a12, a23 = 0.0, np.pi / params.q, np.pi / params.r
    radicand = np.cos(a12) ** 2 - np.sin(a01) ** 2 * np.sin(a23) ** 2
    if radicand < 0:
        raise InadmissibleParameterError("θ 公式中的根式为负", {"params": params.label})
    theta = float(np.arctan(np.sqrt(radicand) / (np.cos(a01) * np.cos(a23))))

    L = lobachevsky
    volume = 0.25 * (
        L(a01 + theta) - L(a01 - theta)
        + L(np.pi / 2 + a12 - theta) + L(np.pi / 2 - a12 - theta)
        + L(a23 + theta) - L(a23 - theta)
        + 2 * L(np.pi / 2 - theta)
    )
    logger.debug(f"{params.label}: θ={theta:.12f}, Vol={volume:.12f}")
    return float(volume)
