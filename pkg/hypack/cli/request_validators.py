#!/usr/bin/env python3
"""
请求验证器 - 命令行参数的统一验证逻辑
"""

import os
from typing import Any, Dict, Optional

from ..geometry.orthoscheme import ADMISSIBLE_PARAMS

VERIFY_FORMATS = ("text", "json")


def validate_curve_request(q: int, r: int, samples: int, out: Optional[str]) -> Dict[str, Any]:
    """
    验证 curve 命令的参数

    Args:
        q, r: 镶嵌参数
        samples: 采样数
        out: 输出路径

    Returns:
        Dict[str, Any]: 验证结果
    """
    if (q, r) not in ADMISSIBLE_PARAMS:
        return {
            'valid': False,
            'error': f'(q,r)=({q},{r}) 不是可行参数',
            'field': 'q,r'
        }

    if 2 * (q + r) != q * r:
        return {
            'valid': False,
            'error': f'(q,r)=({q},{r}) 只有一个理想顶点，没有两极球堆积',
            'field': 'q,r'
        }

    if samples < 2:
        return {
            'valid': False,
            'error': 'samples 至少为 2',
            'field': 'samples'
        }

    if not out or not str(out).strip():
        return {
            'valid': False,
            'error': '缺少输出路径',
            'field': 'out'
        }

    if os.path.isdir(out):
        return {
            'valid': False,
            'error': f'输出路径是一个目录: {out}',
            'field': 'out'
        }

    return {'valid': True}


def validate_verify_request(tol: float, output_format: str) -> Dict[str, Any]:
    """
    验证 verify 命令的参数

    Returns:
        Dict[str, Any]: 验证结果
    """
    if not tol > 0:
        return {
            'valid': False,
            'error': '容差必须为正数',
            'field': 'tol'
        }

    if output_format not in VERIFY_FORMATS:
        return {
            'valid': False,
            'error': f'不支持的输出格式: {output_format}',
            'field': 'format'
        }

    return {'valid': True}
