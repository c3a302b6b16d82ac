#!/usr/bin/env python3
"""
table 命令 - 重新生成各结果表
"""

import logging
from typing import Callable, Dict, List, Tuple

import pandas as pd

from ..geometry.orthoscheme import TilingParams, admissible_params, build_orthoscheme
from ..packing.horoball import (
    horoball_sector,
    max_horoball,
    one_horoball_density,
    optimize_two_horoball,
)
from ..packing.inball import inball_density
from ..utils.errors import UsageError

logger = logging.getLogger(__name__)

TABLE_NAMES = ("inball", "distances", "horoball-one", "horoball-two", "summary")


def format_frame(df: pd.DataFrame) -> str:
    """固定 7 位小数的文本表格"""
    return df.to_string(index=False, float_format=lambda v: f"{v:.7f}")


def one_horoball_rows() -> List[Tuple[TilingParams, int]]:
    """按表格顺序的 (参数, 理想顶点)，每组先 i=2 后 i=0"""
    return [(p, v) for p in admissible_params() for v in sorted(p.ideal_vertices, reverse=True)]


def two_horoball_params() -> List[TilingParams]:
    return [p for p in admissible_params() if p.has_two_ideal_vertices]


def inball_table() -> pd.DataFrame:
    rows = []
    for p in admissible_params():
        res = inball_density(p)
        rows.append({
            "(q,r)": p.label,
            "Inradius": res.radius,
            "Vol(B)": res.ball_volume,
            "Vol(S)": res.orthoscheme_volume,
            "density": res.density,
        })
    return pd.DataFrame(rows)


def distances_table() -> pd.DataFrame:
    p = TilingParams(q=3, r=3)
    o = build_orthoscheme(p)
    sector = horoball_sector(max_horoball(o, 2), o)
    rows = [{
        "Edge": row["edge"],
        "Hyperbolic distance": row["hyperbolic"],
        "Horospherical distance": row["horospheric"],
    } for row in sector.edge_table()]
    return pd.DataFrame(rows)


def horoball_one_table() -> pd.DataFrame:
    rows = []
    for p, vertex in one_horoball_rows():
        res = one_horoball_density(p, vertex)
        rows.append({
            "Coxeter tiling": f"{p.schlafli_symbol}, i={vertex}",
            "Vol(B_i cap S)": res.sector_volumes[vertex],
            "Vol(S)": res.orthoscheme_volume,
            "density": res.density,
        })
    return pd.DataFrame(rows)


def horoball_two_table() -> pd.DataFrame:
    rows = []
    for p in two_horoball_params():
        res = optimize_two_horoball(p)
        rows.append({
            "Coxeter tiling": p.schlafli_symbol,
            "Vol(B_0 cap S) + Vol(B_2 cap S)": res.total_sector_volume,
            "Vol(S)": res.orthoscheme_volume,
            "density": res.density,
            "t": res.t,
        })
    return pd.DataFrame(rows)


def summary_table() -> pd.DataFrame:
    """三类堆积各自的最优镶嵌"""
    inball = [(inball_density(p).density, p.label) for p in admissible_params()]
    one = [(one_horoball_density(p, v).density, f"{p.label} i={v}") for p, v in one_horoball_rows()]
    two = [(optimize_two_horoball(p).density, p.label) for p in two_horoball_params()]

    rows = []
    for packing, values in (("ball", inball), ("one horoball", one), ("two horoballs", two)):
        best = max(d for d, _ in values)
        winners = [label for d, label in values if d >= best - 1e-9]
        rows.append({"packing": packing, "optimal tilings": " ".join(winners), "density": best})
    return pd.DataFrame(rows)


TABLE_BUILDERS: Dict[str, Callable[[], pd.DataFrame]] = {
    "inball": inball_table,
    "distances": distances_table,
    "horoball-one": horoball_one_table,
    "horoball-two": horoball_two_table,
    "summary": summary_table,
}


def cmd_table(name: str) -> str:
    """
    生成指定的表格文本

    Args:
        name: 表名

    Returns:
        str: 格式化后的表格
    """
    if name not in TABLE_BUILDERS:
        raise UsageError(f"未知的表名: {name}", {"field": "name", "choices": list(TABLE_NAMES)})
    logger.info(f"📊 生成表格: {name}")
    return format_frame(TABLE_BUILDERS[name]())
