"""
配置管理模块
"""

from .unified_config import (
    HypackConfig,
    config_cached,
    get_unified_config,
    reload_unified_config,
    reset_unified_config,
)

__all__ = [
    'HypackConfig',
    'config_cached',
    'get_unified_config',
    'reload_unified_config',
    'reset_unified_config',
]
