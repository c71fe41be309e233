"""
設定管理モジュール

このモジュールは検証ハーネスの設定管理と出力データのモデルを提供します。
"""

from .config import Config, ConfigValidator
from .validators import CensusRecord, Report, ValueSummary

__all__ = [
    "Config",
    "ConfigValidator",
    "CensusRecord",
    "Report",
    "ValueSummary"
]
