#!/usr/bin/env python3
"""
CLI错误处理器 - 统一的错误输出格式与退出码
"""

import logging
import sys
import traceback
from typing import Any, Dict, Optional, TextIO, Tuple

from ..utils.errors import HypackError, ParameterValidationError, UsageError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class CLIErrorHandler:
    """CLI错误处理器"""

    @staticmethod
    def create_error_response(
        error_message: str,
        error_code: str = "INTERNAL_ERROR",
        exit_code: int = EXIT_FAILURE,
        details: Optional[Dict[str, Any]] = None
    ) -> Tuple[Dict[str, Any], int]:
        """
        创建标准化错误响应

        Args:
            error_message: 错误消息
            error_code: 错误代码
            exit_code: 进程退出码
            details: 额外的错误详情

        Returns:
            tuple: (response, exit_code)
        """
        response = {
            "success": False,
            "error": {
                "message": error_message,
                "code": error_code,
            }
        }

        if details:
            response["error"]["details"] = details

        return response, exit_code

    @staticmethod
    def emit(response: Dict[str, Any], stream: Optional[TextIO] = None) -> None:
        """把错误响应写到标准错误"""
        stream = stream or sys.stderr
        error = response.get("error", {})
        line = f"error [{error.get('code', 'INTERNAL_ERROR')}]: {error.get('message', '')}"
        field = error.get("details", {}).get("field") if error.get("details") else None
        if field:
            line += f" (field: {field})"
        print(line, file=stream)

    @staticmethod
    def handle_validation_error(error_message: str, field: str = None) -> Tuple[Dict[str, Any], int]:
        """处理参数验证错误"""
        details = {"field": field} if field else None
        return CLIErrorHandler.create_error_response(
            error_message,
            "VALIDATION_ERROR",
            EXIT_USAGE,
            details
        )

    @staticmethod
    def handle_hypack_error(error: HypackError) -> Tuple[Dict[str, Any], int]:
        """处理库内部抛出的错误"""
        exit_code = EXIT_USAGE if isinstance(error, (UsageError, ParameterValidationError)) else EXIT_FAILURE
        payload = error.to_dict()
        return CLIErrorHandler.create_error_response(
            payload["message"],
            payload["code"],
            exit_code,
            payload.get("details")
        )

    @staticmethod
    def handle_io_error(error: OSError) -> Tuple[Dict[str, Any], int]:
        """处理文件读写错误"""
        return CLIErrorHandler.create_error_response(
            f"文件读写失败: {error}",
            "IO_ERROR",
            EXIT_FAILURE,
            {"error_type": type(error).__name__}
        )

    @staticmethod
    def handle_unexpected_error(error: Exception) -> Tuple[Dict[str, Any], int]:
        """处理未预期的错误"""
        logger.error(f"未预期的错误: {error}")
        logger.debug(f"错误堆栈: {traceback.format_exc()}")

        return CLIErrorHandler.create_error_response(
            "内部错误",
            "INTERNAL_ERROR",
            EXIT_FAILURE,
            {"error_type": type(error).__name__}
        )
