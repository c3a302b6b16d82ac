"""
命令行模块
"""

from .app import build_parser, main, run
from .error_handlers import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, CLIErrorHandler

__all__ = [
    'build_parser',
    'main',
    'run',
    'CLIErrorHandler',
    'EXIT_OK',
    'EXIT_FAILURE',
    'EXIT_USAGE',
]
