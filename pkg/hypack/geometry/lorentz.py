#!/usr/bin/env python3
"""
Lorentz 线性代数模块
符号为 (1,3) 的双线性型 <x,y> = -x0*y0 + x1*y1 + x2*y2 + x3*y3 上的
点分类、距离、极平面、垂足，以及把理想点移到标准位置 (1,0,0,1) 的等距变换。

点和平面都以 4 维射影坐标表示；点的规范代表元满足 x0 = 1。
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

from ..config import get_unified_config
from ..utils.errors import (
    DegeneratePlaneError,
    DomainError,
    InvalidInputError,
    NumericalDomainError,
    RankError,
)

logger = logging.getLogger(__name__)

# 双线性型的 Gram 矩阵 diag(-1, 1, 1, 1)
LORENTZ_FORM = np.diag([-1.0, 1.0, 1.0, 1.0])
LORENTZ_FORM.setflags(write=False)

# 标准理想点与模型中心
CANONICAL_IDEAL = (1.0, 0.0, 0.0, 1.0)
MODEL_CENTER = (1.0, 0.0, 0.0, 0.0)


class VectorKind(Enum):
    """坐标向量的解释方式"""
    POINT = "point"
    PLANE = "plane"


class PointClass(Enum):
    """点相对于绝对二次曲面的位置"""
    PROPER = "proper"
    IDEAL = "ideal"
    ULTRA_IDEAL = "ultra_ideal"


@dataclass(frozen=True, eq=False)
class LorentzVector:
    """4 维射影坐标向量，可作为点（反变）或平面形式（协变）"""
    coords: np.ndarray
    kind: VectorKind = VectorKind.POINT

    def __post_init__(self):
        arr = np.array(self.coords, dtype=float).reshape(-1)
        if arr.shape != (4,):
            raise InvalidInputError(f"需要 4 个坐标，实际为 {arr.size}", {"shape": list(arr.shape)})
        if not np.all(np.isfinite(arr)):
            raise InvalidInputError("坐标包含非有限值", {"coords": arr.tolist()})
        if not np.any(arr):
            raise InvalidInputError("零向量不代表任何点或平面")
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)

    @property
    def x0(self) -> float:
        return float(self.coords[0])

    @property
    def x1(self) -> float:
        return float(self.coords[1])

    @property
    def x2(self) -> float:
        return float(self.coords[2])

    @property
    def x3(self) -> float:
        return float(self.coords[3])

    @property
    def is_plane(self) -> bool:
        return self.kind is VectorKind.PLANE

    def scaled(self, factor: float) -> "LorentzVector":
        """返回同一射影元素的另一个代表元"""
        if factor == 0:
            raise InvalidInputError("缩放因子不能为零")
        return LorentzVector(self.coords * factor, self.kind)

    def normalized(self) -> "LorentzVector":
        """
        点的规范代表元 (x0 = 1)

        x0 为零（无穷远平面上的方向）或向量为平面形式时原样返回。
        """
        if self.is_plane or abs(self.coords[0]) <= 1e-15 * np.linalg.norm(self.coords):
            return self
        return LorentzVector(self.coords / self.coords[0], self.kind)

    def klein(self) -> np.ndarray:
        """Beltrami-Cayley-Klein 仿射坐标 (x, y, z)"""
        if self.is_plane:
            raise InvalidInputError("平面形式没有仿射坐标")
        if self.coords[0] == 0:
            raise DomainError("x0 = 0 的点没有仿射坐标")
        return self.coords[1:] / self.coords[0]

    def projectively_equal(self, other: "LorentzVector", tol: float = 1e-9) -> bool:
        """判断两个代表元是否表示同一射影元素"""
        a = self.coords / np.linalg.norm(self.coords)
        b = _coords(other) / np.linalg.norm(_coords(other))
        return bool(min(np.linalg.norm(a - b), np.linalg.norm(a + b)) <= tol)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {"kind": self.kind.value, "coords": [float(c) for c in self.coords]}

    def __repr__(self) -> str:
        body = ", ".join(f"{c:.7f}" for c in self.coords)
        return f"LorentzVector({self.kind.value}: {body})"


VectorLike = Union[LorentzVector, Sequence[float], np.ndarray]


def _coords(x: VectorLike) -> np.ndarray:
    if isinstance(x, LorentzVector):
        return x.coords
    arr = np.asarray(x, dtype=float).reshape(-1)
    if arr.shape != (4,):
        raise InvalidInputError(f"需要 4 个坐标，实际为 {arr.size}")
    return arr


def as_vector(x: VectorLike, kind: VectorKind = VectorKind.POINT) -> LorentzVector:
    """把数组或序列包装成 LorentzVector，已是 LorentzVector 时原样返回"""
    if isinstance(x, LorentzVector):
        return x
    return LorentzVector(np.asarray(x, dtype=float), kind)


def bilinear_form(x: VectorLike, y: VectorLike) -> float:
    """<x,y> = -x0*y0 + x1*y1 + x2*y2 + x3*y3"""
    a, b = _coords(x), _coords(y)
    return float(-a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3])


def lorentz_gram(vectors: Sequence[VectorLike]) -> np.ndarray:
    """两两双线性型组成的矩阵"""
    stacked = np.array([_coords(v) for v in vectors])
    return stacked @ LORENTZ_FORM @ stacked.T


def classify(x: VectorLike, tol: Optional[float] = None) -> PointClass:
    """
    按 <x,x> 的符号分类

    Args:
        x: 非零向量
        tol: 相对容差，|<x,x>| <= tol * |x|^2 视为理想点

    Returns:
        PointClass: 分类结果
    """
    arr = _coords(x)
    if not np.any(arr):
        raise InvalidInputError("零向量无法分类")
    if tol is None:
        tol = get_unified_config().ideal_tol
    value = bilinear_form(arr, arr)
    if abs(value) <= tol * float(arr @ arr):
        return PointClass.IDEAL
    return PointClass.PROPER if value < 0 else PointClass.ULTRA_IDEAL


def _unit_timelike(x: VectorLike) -> np.ndarray:
    """把真点归一化到上半双曲面 <X,X> = -1, X0 > 0"""
    arr = _coords(x)
    if classify(arr) is not PointClass.PROPER:
        raise DomainError("需要真点（<x,x> < 0）", {"coords": arr.tolist()})
    unit = arr / np.sqrt(-bilinear_form(arr, arr))
    return unit if unit[0] > 0 else -unit


def point_distance(x: VectorLike, y: VectorLike) -> float:
    """
    两个真点的双曲距离 (k = 1)

    等价于 arccosh(-<x,y> / sqrt(<x,x><y,y>))，这里用
    d = 2 asinh(|X - Y|_L / 2) 计算以保证小距离时的精度。

    Args:
        x: 真点
        y: 真点

    Returns:
        float: 双曲距离
    """
    ux, uy = _unit_timelike(x), _unit_timelike(y)
    diff = ux - uy
    chord_sq = bilinear_form(diff, diff)
    if chord_sq < -1e-12 * max(1.0, float(diff @ diff)):
        raise NumericalDomainError("arccosh 参数小于 1", {"chord_sq": chord_sq})
    return float(2.0 * np.arcsinh(0.5 * np.sqrt(max(chord_sq, 0.0))))


def plane_distance(c: VectorLike, u: VectorLike) -> float:
    """
    真点到平面的有向距离 arcsinh(<c,u> / sqrt(-<c,c><u,u>))

    点取未来锥中的代表元，因此符号只取决于平面形式的定向。
    """
    uc = _unit_timelike(c)
    arr = _coords(u)
    norm = bilinear_form(arr, arr)
    if norm <= 0:
        raise DegeneratePlaneError("平面形式必须满足 <u,u> > 0", {"norm": norm})
    return float(np.arcsinh(bilinear_form(uc, arr) / np.sqrt(norm)))


def polar_plane(x: VectorLike) -> LorentzVector:
    """点的极平面：满足 <x,y> = 0 的点 y 的集合"""
    return LorentzVector(_coords(x), VectorKind.PLANE)


def perpendicular_foot(a: VectorLike, u: VectorLike) -> LorentzVector:
    """
    点 a 在平面 u 上的垂足 a - (<a,u>/<u,u>) u

    Args:
        a: 点
        u: 平面形式

    Returns:
        LorentzVector: 垂足（x0 = 1 的规范代表元）
    """
    pa, pu = _coords(a), _coords(u)
    norm = bilinear_form(pu, pu)
    if abs(norm) <= 1e-14 * float(pu @ pu):
        raise DegeneratePlaneError("<u,u> = 0，平面与绝对形相切", {"plane": pu.tolist()})
    foot = pa - (bilinear_form(pa, pu) / norm) * pu
    return LorentzVector(foot).normalized()


def busemann_ratio(x: VectorLike, v: VectorLike) -> float:
    """<x,v>^2 / (-<x,x>)：以理想点 v 为中心的极球面水平函数（与 x 的缩放无关）"""
    px = _coords(x)
    norm = bilinear_form(px, px)
    if norm >= 0:
        raise DomainError("水平函数只对真点有定义")
    return bilinear_form(px, v) ** 2 / (-norm)


@dataclass(frozen=True, eq=False)
class LorentzIsometry:
    """保持双线性型的 4x4 线性映射（作用于点坐标）"""
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=float)
        if mat.shape != (4, 4) or not np.all(np.isfinite(mat)):
            raise InvalidInputError("等距变换需要有限的 4x4 矩阵")
        scale = max(1.0, float(np.abs(mat).max()) ** 2)
        if np.abs(mat.T @ LORENTZ_FORM @ mat - LORENTZ_FORM).max() > 1e-9 * scale:
            raise InvalidInputError("矩阵不保持 Lorentz 双线性型")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def identity(cls) -> "LorentzIsometry":
        return cls(np.eye(4))

    def apply(self, v: VectorLike) -> LorentzVector:
        """
        作用于点或平面形式

        M 保持型，因此平面形式与点坐标的变换规则相同：<Mx, Mu> = <x, u>。
        """
        kind = v.kind if isinstance(v, LorentzVector) else VectorKind.POINT
        return LorentzVector(self.matrix @ _coords(v), kind)

    def compose(self, other: "LorentzIsometry") -> "LorentzIsometry":
        """self ∘ other"""
        return LorentzIsometry(self.matrix @ other.matrix)

    def inverse(self) -> "LorentzIsometry":
        """M^-1 = J M^T J"""
        return LorentzIsometry(LORENTZ_FORM @ self.matrix.T @ LORENTZ_FORM)

    def is_form_preserving(self, tol: float = 1e-12) -> bool:
        """在标准基上检查 <Mx,My> = <x,y>"""
        return bool(np.abs(self.matrix.T @ LORENTZ_FORM @ self.matrix - LORENTZ_FORM).max() <= tol)

    def to_dict(self) -> Dict[str, Any]:
        return {"matrix": self.matrix.tolist()}


def _standard_frame() -> List[LorentzVector]:
    return [LorentzVector(row) for row in np.eye(4)]


def ideal_to_canonical(v: VectorLike, frame: Optional[Sequence[VectorLike]] = None,
                       tol: float = 1e-10) -> LorentzIsometry:
    """
    构造把理想点 v 移到 (1,0,0,1) 的等距变换

    标架中第一个真点（归一化后）成为模型中心 (1,0,0,0)；其余标架向量依次做
    Lorentz Gram-Schmidt 正交化，前两个非退化方向成为 x1、x2 轴。
    相同输入得到相同结果，且构造与等距变换可交换。

    Args:
        v: 理想点
        frame: 参考标架，缺省为标准基
        tol: 判定标架向量退化的相对容差

    Returns:
        LorentzIsometry: 等距变换 M，M·v 与 (1,0,0,1) 射影等价
    """
    center = _coords(v)
    if classify(center) is not PointClass.IDEAL:
        raise DomainError("ideal_to_canonical 需要理想点", {"coords": center.tolist()})

    vectors = [_coords(f) for f in (frame if frame is not None else _standard_frame())]

    anchor = next((f for f in vectors
                   if np.any(f) and classify(f) is PointClass.PROPER), None)
    if anchor is None:
        raise RankError("参考标架中没有真点")

    e0 = anchor / np.sqrt(-bilinear_form(anchor, anchor))
    if bilinear_form(e0, center) > 0:
        e0 = -e0
    w = center / (-bilinear_form(center, e0))
    e3 = w - e0

    spatial: List[np.ndarray] = []
    for f in vectors:
        g = f + bilinear_form(f, e0) * e0 - bilinear_form(f, e3) * e3
        for e in spatial:
            g = g - bilinear_form(f, e) * e
        norm = bilinear_form(g, g)
        if norm <= tol * max(1.0, float(f @ f)):
            continue
        spatial.append(g / np.sqrt(norm))
        if len(spatial) == 2:
            break

    if len(spatial) < 2:
        raise RankError("参考标架不能张成与中心正交的空间方向", {"found": len(spatial)})

    basis = np.column_stack([e0, spatial[0], spatial[1], e3])
    logger.debug("ideal_to_canonical: 标架构造完成")
    return LorentzIsometry(LORENTZ_FORM @ basis.T @ LORENTZ_FORM)
