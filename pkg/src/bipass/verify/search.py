"""
局面探索モジュール

値の理論を使わず、石列の局面そのものを探索して勝敗クラスを求めます。
正規形と逆形 (misère) は同じ探索を共有し、着手できない手番の勝敗のみが異なります。
"""

from typing import Dict, Optional, Tuple

from bipass.core.outcome import Outcome, Player
from bipass.core.strip import Position


class PositionSearcher:
    """局面の勝敗探索（局面と手番でメモ化）"""

    def __init__(self, misere: bool = False):
        """
        Args:
            misere: True の場合、着手できない手番が勝つ
        """
        self.misere = misere
        self._wins: Dict[Tuple[Position, Player], bool] = {}

    def wins_moving_first(self, position: Position, player: Player) -> bool:
        """player が先手で勝てるか"""
        key = (position, player)
        cached = self._wins.get(key)
        if cached is not None:
            return cached
        options = position.options(player)
        if not options:
            result = self.misere
        else:
            result = any(not self.wins_moving_first(o, player.opponent) for o in options)
        self._wins[key] = result
        return result

    def outcome(self, position: Position) -> Outcome:
        """局面の勝敗クラス"""
        return Outcome.from_first_player_wins(
            self.wins_moving_first(position, Player.LEFT),
            self.wins_moving_first(position, Player.RIGHT),
        )

    def get_statistics(self) -> dict:
        return {
            'misere': self.misere,
            'states': len(self._wins),
        }


def misere_outcome(position: Position, searcher: Optional[PositionSearcher] = None) -> Outcome:
    """
    逆形の勝敗クラス

    Args:
        position: 局面
        searcher: メモを共有する逆形探索器（省略時は新規作成）

    Returns:
        勝敗クラス（空局面は N）
    """
    if searcher is None:
        searcher = PositionSearcher(misere=True)
    elif not searcher.misere:
        raise ValueError("misere_outcome requires a misere searcher")
    return searcher.outcome(position)
