#!/usr/bin/env python3
"""
错误类型定义 - hypack 统一的异常层次

每个异常携带 message / code / details，并可通过 to_dict() 转换为
CLI 错误处理器使用的标准化结构。
"""

from typing import Any, Dict, Optional


class HypackError(Exception):
    """hypack 所有异常的基类"""

    code = "INTERNAL_ERROR"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = dict(details or {})

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        result = {"message": self.message, "code": self.code}
        if self.details:
            result["details"] = self.details
        return result


# ---- 输入与参数 ----

class InvalidInputError(HypackError):
    """输入向量或参数格式无效（零向量、维度错误、非有限值）"""
    code = "INVALID_INPUT"


class ParameterValidationError(HypackError):
    """(q, r) 不满足约束"""
    code = "VALIDATION_ERROR"


class InadmissibleParameterError(HypackError):
    """闭式公式中的根式为负"""
    code = "INADMISSIBLE_PARAMETER"


class InconsistentInputError(HypackError):
    """输入矩阵与预期的符号或结构不一致"""
    code = "INCONSISTENT_INPUT"


# ---- 几何 ----

class DomainError(HypackError):
    """参数超出运算的定义域（例如对理想点求距离）"""
    code = "DOMAIN_ERROR"


class NumericalDomainError(DomainError):
    """数值误差导致 arccosh/arcsinh 参数越界"""
    code = "NUMERICAL_DOMAIN"


class DegeneratePlaneError(HypackError):
    """平面向量的 Lorentz 范数为零"""
    code = "DEGENERATE_PLANE"


class RankError(HypackError):
    """参考标架无法张成所需的子空间"""
    code = "RANK_ERROR"


class GeometricDegeneracyError(HypackError):
    """几何构造退化（例如不存在内切球）"""
    code = "GEOMETRIC_DEGENERACY"


class GeometricInconsistencyError(HypackError):
    """几何构造自检失败（Euler 示性数、签名、关联关系）"""
    code = "GEOMETRIC_INCONSISTENCY"


class InvalidMetricError(HypackError):
    """边长不满足三角不等式"""
    code = "INVALID_METRIC"


# ---- 堆积 ----

class HoroballTooLargeError(HypackError):
    """极球包含了与其中心相邻的顶点"""
    code = "HOROBALL_TOO_LARGE"


class NoValidPackingError(HypackError):
    """两极球的可行参数区间为空"""
    code = "NO_VALID_PACKING"


class ConstraintViolationError(HypackError):
    """切点参数 t 超出可行区间，details 中记录越界的面"""
    code = "CONSTRAINT_VIOLATION"

    def __init__(self, message: str, face: Optional[str] = None,
                 details: Optional[Dict[str, Any]] = None):
        merged = dict(details or {})
        if face is not None:
            merged["face"] = face
        super().__init__(message, merged)
        self.face = face


# ---- 配置与 CLI ----

class ConfigurationError(HypackError):
    """环境变量或 .env 中的配置值无效"""
    code = "CONFIGURATION_ERROR"


class UsageError(HypackError):
    """命令行参数组合无效"""
    code = "USAGE_ERROR"
