#!/usr/bin/env python3
"""
测试公共夹具
"""

import pytest

from hypack.config import reset_unified_config
from hypack.config.unified_config import ENV_PREFIX, HypackConfig
from hypack.geometry import TilingParams, admissible_params, build_orthoscheme


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    """每个测试使用默认配置，不受外部 HYPACK_* 环境变量影响"""
    for name in HypackConfig.__dataclass_fields__:
        monkeypatch.delenv(ENV_PREFIX + name.upper(), raising=False)
    reset_unified_config()
    yield
    reset_unified_config()


@pytest.fixture
def params33():
    return TilingParams(q=3, r=3)


@pytest.fixture
def ortho33(params33):
    return build_orthoscheme(params33)


@pytest.fixture(params=[p.label for p in admissible_params()])
def any_params(request):
    """8 组可行参数逐一运行"""
    q, r = (int(v) for v in request.param.strip("()").split(","))
    return TilingParams(q=q, r=r)
