"""
コアモジュール

正準形ゲームのアリーナ、BIPASS 規則、原子量計算、Ferrers 図形エンコードを提供します。
"""

from .atomic_weight import AtomicWeightCalculator, FarStarProbeError, NotAllSmallError
from .ferrers import Partition, from_ferrers, to_ferrers
from .game import Arena, GameNode, GameRef
from .notation import ValueParser, ValueSyntaxError
from .outcome import ComparisonResult, FarStarOrder, Outcome, Player
from .strip import GameConverter, Larva, Position, Stone, Strip, StripSyntaxError

__all__ = [
    "AtomicWeightCalculator",
    "FarStarProbeError",
    "NotAllSmallError",
    "Partition",
    "from_ferrers",
    "to_ferrers",
    "Arena",
    "GameNode",
    "GameRef",
    "ValueParser",
    "ValueSyntaxError",
    "ComparisonResult",
    "FarStarOrder",
    "Outcome",
    "Player",
    "GameConverter",
    "Larva",
    "Position",
    "Stone",
    "Strip",
    "StripSyntaxError"
]
