#!/usr/bin/env python3
"""
统一配置管理模块
数值容差与 CLI 默认值的唯一来源，支持通过环境变量或 .env 覆盖

环境变量命名: HYPACK_<字段名大写>，例如 HYPACK_VERIFY_TOL=1e-5
"""

import logging
import os
from dataclasses import asdict, dataclass, fields
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional

from dotenv import find_dotenv, load_dotenv

from ..utils.errors import ConfigurationError

logger = logging.getLogger(__name__)

ENV_PREFIX = "HYPACK_"
VALID_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class HypackConfig:
    """数值容差与默认值"""
    ideal_tol: float = 1e-9        # 判定 <x,x> = 0 的相对容差
    incidence_tol: float = 1e-9    # 顶点-面关联判定
    tangency_tol: float = 1e-9     # 相切判定
    verify_tol: float = 2e-5       # 与参考表比较的默认容差
    endpoint_tol: float = 5e-4     # 参考表中仅给出 4 位小数的区间端点
    golden_tol: float = 1e-10      # 黄金分割搜索的区间宽度
    curve_samples: int = 100       # density_curve 默认采样数
    log_level: str = "WARNING"

    def __post_init__(self):
        for name in ("ideal_tol", "incidence_tol", "tangency_tol",
                     "verify_tol", "endpoint_tol", "golden_tol"):
            if not getattr(self, name) > 0:
                raise ConfigurationError(f"{name} 必须为正数", {"field": name, "value": getattr(self, name)})
        if self.curve_samples < 2:
            raise ConfigurationError("curve_samples 至少为 2", {"field": "curve_samples"})
        self.log_level = str(self.log_level).upper()
        if self.log_level not in VALID_LOG_LEVELS:
            raise ConfigurationError(f"未知的日志级别: {self.log_level}", {"field": "log_level"})

    @classmethod
    def from_env(cls, env_file: Optional[str] = None) -> "HypackConfig":
        """
        从环境变量构建配置

        Args:
            env_file: 可选的 .env 路径，缺省时从当前目录向上查找

        Returns:
            HypackConfig: 配置实例
        """
        load_dotenv(env_file or find_dotenv(usecwd=True), override=False)

        values: Dict[str, Any] = {}
        for f in fields(cls):
            raw = os.getenv(ENV_PREFIX + f.name.upper())
            if raw is None or raw.strip() == "":
                continue
            caster = type(f.default)
            try:
                values[f.name] = caster(raw.strip())
            except ValueError as e:
                raise ConfigurationError(
                    f"环境变量 {ENV_PREFIX + f.name.upper()} 无法解析: {raw!r}",
                    {"field": f.name, "value": raw}
                ) from e

        if values:
            logger.debug(f"从环境变量加载配置覆盖: {sorted(values)}")
        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return asdict(self)


# 全局统一配置实例
_global_unified_config: Optional[HypackConfig] = None

# 结果依赖容差的缓存，配置变化时一并清空
_config_caches: List[Callable] = []


def config_cached(func: Callable) -> Callable:
    """
    lru_cache 的变体，缓存随 reload_unified_config / reset_unified_config 清空
    """
    cached = lru_cache(maxsize=None)(func)
    _config_caches.append(cached)
    return cached


def _clear_config_caches() -> None:
    for cached in _config_caches:
        cached.cache_clear()


def get_unified_config() -> HypackConfig:
    """获取全局统一配置实例"""
    global _global_unified_config
    if _global_unified_config is None:
        _global_unified_config = HypackConfig.from_env()
    return _global_unified_config


def reload_unified_config(env_file: Optional[str] = None) -> HypackConfig:
    """重新加载全局统一配置"""
    global _global_unified_config
    _clear_config_caches()
    _global_unified_config = HypackConfig.from_env(env_file)
    logger.debug("全局统一配置重新加载完成")
    return _global_unified_config


def reset_unified_config() -> None:
    """清除全局配置实例，下次访问时重新读取环境"""
    global _global_unified_config
    _global_unified_config = None
    _clear_config_caches()
