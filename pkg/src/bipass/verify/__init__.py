"""
検証モジュール

局面列挙、局面探索、定理検証、全数調査、分割実行を提供します。
"""

from .census import census, census_summary
from .enumeration import enumerate_positions, enumerate_strips
from .search import PositionSearcher, misere_outcome
from .sharding import run_sharded
from .theorems import SUITES, TheoremVerifier

__all__ = [
    "census",
    "census_summary",
    "enumerate_positions",
    "enumerate_strips",
    "PositionSearcher",
    "misere_outcome",
    "run_sharded",
    "SUITES",
    "TheoremVerifier"
]
