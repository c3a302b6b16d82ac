"""
工具模块
包含异常层次等通用工具
"""

from .errors import (
    HypackError,
    InvalidInputError,
    ParameterValidationError,
    InadmissibleParameterError,
    InconsistentInputError,
    DomainError,
    NumericalDomainError,
    DegeneratePlaneError,
    RankError,
    GeometricDegeneracyError,
    GeometricInconsistencyError,
    InvalidMetricError,
    HoroballTooLargeError,
    NoValidPackingError,
    ConstraintViolationError,
    ConfigurationError,
    UsageError,
)

__all__ = [
    'HypackError',
    'InvalidInputError',
    'ParameterValidationError',
    'InadmissibleParameterError',
    'InconsistentInputError',
    'DomainError',
    'NumericalDomainError',
    'DegeneratePlaneError',
    'RankError',
    'GeometricDegeneracyError',
    'GeometricInconsistencyError',
    'InvalidMetricError',
    'HoroballTooLargeError',
    'NoValidPackingError',
    'ConstraintViolationError',
    'ConfigurationError',
    'UsageError',
]
