"""
BIPASS ゲーム値エンジンと定理検証ハーネス Pythonモジュール

このパッケージは、全小 (all-small) ゲーム BIPASS の石列と局面について、
正準形・勝敗クラス・原子量を計算し、各定理を有限の範囲で機械的に検証します。

主要なモジュール:
- config: 設定管理とデータモデル
- core: ゲームのアリーナ、BIPASS 規則、原子量、Ferrers 図形
- verify: 局面列挙、局面探索、定理検証、全数調査、分割実行
- utils: ログ機能
- cli: コマンドラインインターフェース
"""

__version__ = "0.1.0"
__author__ = "bipass contributors"

from bipass.config.config import Config
from bipass.config.validators import CensusRecord, Report, ValueSummary
from bipass.core.atomic_weight import AtomicWeightCalculator
from bipass.core.game import Arena
from bipass.core.strip import GameConverter, Position, Strip
from bipass.verify.theorems import TheoremVerifier

__all__ = [
    "Config",
    "CensusRecord",
    "Report",
    "ValueSummary",
    "AtomicWeightCalculator",
    "Arena",
    "GameConverter",
    "Position",
    "Strip",
    "TheoremVerifier"
]
