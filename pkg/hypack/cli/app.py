#!/usr/bin/env python3
"""
hypack 命令行入口

    hypack table <inball|distances|horoball-one|horoball-two|summary>
    hypack curve --q Q --r R [--samples N] --out PATH
    hypack verify [--tol X] [--format text|json]

退出码: 0 成功，1 校验失败或计算/读写错误，2 参数错误。
"""

import argparse
import logging
import sys
from typing import List, Optional

from ..config import get_unified_config
from ..config.unified_config import VALID_LOG_LEVELS
from ..utils.errors import HypackError
from .curve_commands import cmd_curve
from .error_handlers import EXIT_FAILURE, EXIT_OK, CLIErrorHandler
from .request_validators import VERIFY_FORMATS, validate_curve_request, validate_verify_request
from .table_commands import TABLE_NAMES, cmd_table
from .verify_commands import cmd_verify

logger = logging.getLogger(__name__)


def configure_logging(level: str) -> None:
    """日志只写到标准错误，标准输出只保留命令结果"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    cfg = get_unified_config()
    parser = argparse.ArgumentParser(
        prog="hypack",
        description="{inf,q,r,inf} 镶嵌的最优球与极球堆积密度",
    )
    parser.add_argument("--log-level", default=cfg.log_level, type=str.upper,
                        choices=VALID_LOG_LEVELS, help="日志级别（输出到标准错误）")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="重新生成结果表")
    table.add_argument("name", choices=TABLE_NAMES)

    curve = sub.add_parser("curve", help="导出两极球密度曲线 (CSV)")
    curve.add_argument("--q", type=int, required=True)
    curve.add_argument("--r", type=int, required=True)
    curve.add_argument("--samples", type=int, default=cfg.curve_samples)
    curve.add_argument("--out", required=True, help="CSV 输出路径")

    verify = sub.add_parser("verify", help="与内嵌参考数据比较")
    verify.add_argument("--tol", type=float, default=cfg.verify_tol)
    verify.add_argument("--format", dest="output_format", default="text", choices=VERIFY_FORMATS)
    return parser


def _fail(response_and_code) -> int:
    response, code = response_and_code
    CLIErrorHandler.emit(response)
    return code


def run(args: argparse.Namespace) -> int:
    """执行已解析的命令"""
    if args.command == "table":
        print(cmd_table(args.name))
        return EXIT_OK

    if args.command == "curve":
        validation = validate_curve_request(args.q, args.r, args.samples, args.out)
        if not validation['valid']:
            return _fail(CLIErrorHandler.handle_validation_error(validation['error'], validation.get('field')))
        cmd_curve(args.q, args.r, args.samples, args.out)
        return EXIT_OK

    validation = validate_verify_request(args.tol, args.output_format)
    if not validation['valid']:
        return _fail(CLIErrorHandler.handle_validation_error(validation['error'], validation.get('field')))
    text, passed = cmd_verify(args.tol, args.output_format)
    print(text)
    return EXIT_OK if passed else EXIT_FAILURE


def main(argv: Optional[List[str]] = None) -> int:
    """
    命令行主函数

    Args:
        argv: 参数列表，缺省取 sys.argv[1:]

    Returns:
        int: 退出码
    """
    try:
        parser = build_parser()
    except HypackError as e:
        return _fail(CLIErrorHandler.handle_hypack_error(e))

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_FAILURE

    configure_logging(args.log_level)
    try:
        return run(args)
    except HypackError as e:
        return _fail(CLIErrorHandler.handle_hypack_error(e))
    except OSError as e:
        return _fail(CLIErrorHandler.handle_io_error(e))
    except Exception as e:
        return _fail(CLIErrorHandler.handle_unexpected_error(e))


if __name__ == "__main__":
    sys.exit(main())
