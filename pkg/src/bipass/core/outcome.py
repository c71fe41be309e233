"""
勝敗クラス・比較結果モジュール

正規形ゲームの勝敗クラス (L/R/N/P)、比較結果、遠星比較結果、手番プレイヤーを定義します。
"""

from enum import Enum


class Player(Enum):
    """手番プレイヤー（Left は黒石、Right は白石を動かす）"""
    LEFT = "Left"
    RIGHT = "Right"

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT


class Outcome(Enum):
    """
    勝敗クラス

    L > P > R, L > N > R の半順序を持ち、N と P は比較不能。
    """
    L = "L"
    R = "R"
    N = "N"
    P = "P"

    @classmethod
    def from_first_player_wins(cls, left_wins_first: bool, right_wins_first: bool) -> "Outcome":
        """
        先手勝ちの有無から勝敗クラスを決定

        Args:
            left_wins_first: Left が先手で勝てるか
            right_wins_first: Right が先手で勝てるか

        Returns:
            勝敗クラス
        """
        if left_wins_first and right_wins_first:
            return cls.N
        if left_wins_first:
            return cls.L
        if right_wins_first:
            return cls.R
        return cls.P

    @property
    def left_wins_moving_first(self) -> bool:
        return self in (Outcome.L, Outcome.N)

    @property
    def right_wins_moving_first(self) -> bool:
        return self in (Outcome.R, Outcome.N)

    def __ge__(self, other: object) -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return self is other or self is Outcome.L or other is Outcome.R

    def __le__(self, other: object) -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return other >= self

    def __gt__(self, other: object) -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return self >= other and self is not other

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return other > self


class ComparisonResult(Enum):
    """2つのゲームの比較結果"""
    GREATER = "Greater"
    LESS = "Less"
    EQUIVALENT = "Equivalent"
    FUZZY = "Fuzzy"

    @classmethod
    def from_outcome(cls, outcome: Outcome) -> "ComparisonResult":
        """差 g - h の勝敗クラスから比較結果へ変換"""
        return {
            Outcome.L: cls.GREATER,
            Outcome.R: cls.LESS,
            Outcome.P: cls.EQUIVALENT,
            Outcome.N: cls.FUZZY,
        }[outcome]


class FarStarOrder(Enum):
    """遠星 (far star) との比較結果。遠星は短いゲームではないため等価は存在しない"""
    GREATER = "Greater"
    LESS = "Less"
    FUZZY = "Fuzzy"
