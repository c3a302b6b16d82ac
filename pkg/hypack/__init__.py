"""
hypack - {∞,q,r,∞} 双曲 Coxeter 镶嵌的最优球与极球堆积

主要模块:
- geometry: Lorentz 模型与截断正交单形
- packing: 内切球与极球堆积密度
- reference: 内嵌的参考表格
- cli: 命令行入口
"""

__version__ = "1.0.0"

from .geometry import TilingParams, admissible_params, build_orthoscheme, orthoscheme_volume
from .packing import (
    inball_density,
    one_horoball_density,
    optimize_two_horoball,
    two_horoball_density,
)

__all__ = [
    'TilingParams',
    'admissible_params',
    'build_orthoscheme',
    'orthoscheme_volume',
    'inball_density',
    'one_horoball_density',
    'optimize_two_horoball',
    'two_horoball_density',
]
