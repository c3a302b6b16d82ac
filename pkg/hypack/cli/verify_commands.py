#!/usr/bin/env python3
"""
verify 命令 - 用内嵌参考数据校验全部计算结果
"""

import json
import logging
from typing import Dict, List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from ..config import get_unified_config
from ..geometry.orthoscheme import TilingParams, admissible_params, build_orthoscheme
from ..packing.horoball import (
    feasible_t_interval,
    horoball_sector,
    max_horoball,
    one_horoball_density,
    optimize_two_horoball,
)
from ..packing.inball import inball_density
from ..reference import ReferenceRecord, load_reference_records
from .table_commands import one_horoball_rows, two_horoball_params

logger = logging.getLogger(__name__)

QuantityKey = Tuple[int, str, str]


class ReportRow(BaseModel):
    """单条校验结果"""
    model_config = ConfigDict(populate_by_name=True)

    table: int
    key: str
    quantity: str
    reference: float
    printed: float
    computed: float
    abs_error: float
    tolerance: float
    passed: bool = Field(..., alias="pass")
    note: Optional[str] = None


class Report(BaseModel):
    """校验报告"""
    rows: List[ReportRow]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def pass_count(self) -> int:
        return sum(row.passed for row in self.rows)


def compute_quantities() -> Dict[QuantityKey, float]:
    """计算参考数据中出现的全部量"""
    values: Dict[QuantityKey, float] = {}

    for p in admissible_params():
        res = inball_density(p)
        values[(1, p.label, "inradius")] = res.radius
        values[(1, p.label, "ball_volume")] = res.ball_volume
        values[(1, p.label, "orthoscheme_volume")] = res.orthoscheme_volume
        values[(1, p.label, "density")] = res.density

    o = build_orthoscheme(TilingParams(q=3, r=3))
    sector = horoball_sector(max_horoball(o, 2), o)
    for row in sector.edge_table():
        values[(2, row["edge"], "hyperbolic_distance")] = row["hyperbolic"]
        values[(2, row["edge"], "horospheric_distance")] = row["horospheric"]
    polygon = "".join(f"H{label}" for label in sector.labels)
    values[(2, polygon, "area")] = sector.area
    values[(2, polygon, "sector_volume")] = sector.volume

    for p, vertex in one_horoball_rows():
        res = one_horoball_density(p, vertex)
        key = f"{p.label} i={vertex}"
        values[(3, key, "sector_volume")] = res.sector_volumes[vertex]
        values[(3, key, "orthoscheme_volume")] = res.orthoscheme_volume
        values[(3, key, "density")] = res.density

    for p in two_horoball_params():
        res = optimize_two_horoball(p)
        t1, t2 = feasible_t_interval(p)
        values[(4, p.label, "sector_volume_sum")] = res.total_sector_volume
        values[(4, p.label, "orthoscheme_volume")] = res.orthoscheme_volume
        values[(4, p.label, "density")] = res.density
        values[(4, p.label, "t")] = res.t
        values[(4, p.label, "t1")] = t1
        values[(4, p.label, "t2")] = t2
    return values


def build_report(tol: Optional[float] = None,
                 records: Optional[List[ReferenceRecord]] = None) -> Report:
    """
    逐条比较计算值与参考值

    Args:
        tol: 默认档容差，缺省取配置值；endpoint 档固定取 endpoint_tol 与 tol 的较大者
        records: 参考数据，缺省为内嵌数据

    Returns:
        Report: 校验报告
    """
    cfg = get_unified_config()
    tol = cfg.verify_tol if tol is None else tol
    records = records if records is not None else load_reference_records()
    computed = compute_quantities()

    rows = []
    for rec in records:
        key = (rec.table, rec.key, rec.quantity)
        if key not in computed:
            logger.warning(f"⚠️ 没有对应的计算值: {key}")
            value = float("nan")
        else:
            value = float(computed[key])
        limit = max(tol, cfg.endpoint_tol) if rec.tier == "endpoint" else tol
        error = abs(value - rec.reference)
        rows.append(ReportRow(
            table=rec.table,
            key=rec.key,
            quantity=rec.quantity,
            reference=rec.reference,
            printed=rec.printed,
            computed=value,
            abs_error=error,
            tolerance=limit,
            passed=bool(error <= limit),
            note=rec.note,
        ))
    return Report(rows=rows)


def render_report(report: Report, output_format: str = "text") -> str:
    """把报告渲染为文本或 JSON"""
    if output_format == "json":
        return json.dumps([row.model_dump(by_alias=True) for row in report.rows], indent=2)

    df = pd.DataFrame([{
        "table": row.table,
        "key": row.key,
        "quantity": row.quantity,
        "reference": f"{row.reference:.7f}",
        "printed": f"{row.printed:.7f}",
        "computed": f"{row.computed:.7f}",
        "abs_error": f"{row.abs_error:.2e}",
        "tolerance": f"{row.tolerance:.1e}",
        "pass": "PASS" if row.passed else "FAIL",
        "note": f"adopted {row.reference:.7f}" if row.note else "",
    } for row in report.rows])
    status = "PASS" if report.passed else "FAIL"
    summary = f"overall: {status} ({report.pass_count}/{len(report.rows)} records)"
    return df.to_string(index=False) + "\n" + summary


def cmd_verify(tol: Optional[float] = None, output_format: str = "text") -> Tuple[str, bool]:
    """
    运行校验

    Returns:
        (渲染后的报告, 是否全部通过)
    """
    report = build_report(tol)
    logger.info(f"🔍 校验完成: {report.pass_count}/{len(report.rows)} 通过")
    return render_report(report, output_format), report.passed
