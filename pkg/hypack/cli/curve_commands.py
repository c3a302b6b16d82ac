#!/usr/bin/env python3
"""
curve 命令 - 导出两极球密度曲线为 CSV
"""

import logging

import pandas as pd

from ..geometry.orthoscheme import TilingParams
from ..packing.horoball import density_curve

logger = logging.getLogger(__name__)


def cmd_curve(q: int, r: int, samples: int, out: str) -> pd.DataFrame:
    """
    计算密度曲线并写入 CSV

    Args:
        q, r: 镶嵌参数（需有两个理想顶点）
        samples: 采样数
        out: 输出路径

    Returns:
        pd.DataFrame: 写入的数据
    """
    params = TilingParams.create(q, r)
    df = density_curve(params, samples)
    df.to_csv(out, index=False, float_format="%.10f", encoding="utf-8", lineterminator="\n")
    logger.info(f"💾 已写入 {len(df)} 行到 {out}")
    return df
