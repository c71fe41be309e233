"""
ユーティリティモジュール

ログ機能を提供します。
"""

from .logger import Logger

__all__ = [
    "Logger"
]
