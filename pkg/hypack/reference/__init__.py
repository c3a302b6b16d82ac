"""
参考数据模块
内嵌的表格数值（印刷值，以及需要更正时的采用值）
"""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

DATA_FILE = Path(__file__).with_name("reference_tables.json")


class ReferenceRecord(BaseModel):
    """单条参考数值"""
    table: Literal[1, 2, 3, 4] = Field(..., description="来源表格")
    key: str = Field(..., description="(q,r)、顶点或棱的标识")
    quantity: str = Field(..., description="量的名称")
    printed: float = Field(..., description="表中印刷的数值")
    adopted: Optional[float] = Field(None, description="印刷值无法复现时采用的数值")
    note: Optional[str] = Field(None, description="采用值的说明")
    tier: Literal["default", "endpoint"] = Field("default", description="比较时使用的容差档")

    @property
    def reference(self) -> float:
        """比较时使用的数值"""
        return self.adopted if self.adopted is not None else self.printed


@lru_cache(maxsize=None)
def _load(path: str) -> tuple:
    with open(path, "r", encoding="utf-8") as f:
        payload = json.load(f)
    records = tuple(ReferenceRecord(**item) for item in payload["records"])
    logger.debug(f"加载参考数据 {len(records)} 条")
    return records


def load_reference_records(path: Optional[Path] = None) -> List[ReferenceRecord]:
    """读取参考数据"""
    return list(_load(str(path or DATA_FILE)))


__all__ = [
    'DATA_FILE',
    'ReferenceRecord',
    'load_reference_records',
]
