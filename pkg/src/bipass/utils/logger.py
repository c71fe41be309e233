"""
ログ管理モジュール

アプリケーション全体のログ機能を提供します。
標準出力はコマンドの決定的な出力に使うため、コンソールログは標準エラーへ出します。
"""

import logging
import sys
from typing import Optional

from bipass.config.validators import Report

_BRIEF = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
_DETAILED = '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'

DEBUG_LOG_FILE = "bipass_debug.log"


def _file_handler(path: str, level: int) -> logging.Handler:
    handler = logging.FileHandler(path, encoding="utf-8")
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(_DETAILED))
    return handler


class Logger:
    """bipass ロガー（コンソール・ログファイル・デバッグログ）"""

    def __init__(
        self, level: str = "INFO", enable_debug: bool = False, log_file: Optional[str] = None
    ):
        """
        Args:
            level: コンソールとログファイルのログレベル
            enable_debug: DEBUG 以上を bipass_debug.log にも書く
            log_file: ログファイルパス（Noneの場合はコンソールのみ）
        """
        threshold = getattr(logging, level.upper())
        self.logger = logging.getLogger("bipass")
        self.logger.setLevel(logging.DEBUG if enable_debug else threshold)

        # 既存のハンドラーを閉じてクリア
        for handler in self.logger.handlers[:]:
            self.logger.removeHandler(handler)
            handler.close()

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(threshold)
        console_handler.setFormatter(logging.Formatter(_BRIEF))
        self.logger.addHandler(console_handler)

        if log_file:
            self.logger.addHandler(_file_handler(log_file, threshold))
        if enable_debug:
            self.logger.addHandler(_file_handler(DEBUG_LOG_FILE, logging.DEBUG))

        # ログの重複を防ぐ
        self.logger.propagate = False

    def info(self, message: str) -> None:
        self.logger.info(message)

    def warning(self, message: str) -> None:
        self.logger.warning(message)

    def error(self, message: str) -> None:
        self.logger.error(message)

    def debug(self, message: str) -> None:
        self.logger.debug(message)

    def log_performance(self, func_name: str, duration: float) -> None:
        self.debug(f"Performance: {func_name} took {duration:.4f} seconds")

    def log_report(self, report: Report) -> None:
        """スイートの結果を記録（反例があれば最初の1件を添えて警告）"""
        if report.passed:
            self.info(
                f"Suite {report.name} passed: checked {report.checked} "
                f"in {report.elapsed:.2f}s"
            )
            return
        self.warning(
            f"Suite {report.name} failed ({len(report.failures)} failures): "
            f"checked {report.checked} in {report.elapsed:.2f}s, first: {report.failures[0]}"
        )
