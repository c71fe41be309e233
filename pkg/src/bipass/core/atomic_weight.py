"""
原子量 (atomic weight) モジュール

遠星との比較、遠星同値、G·↑ 積、構成的な原子量計算を提供します。
"""

from typing import Dict, Iterable

from bipass.core.game import Arena, GameRef
from bipass.core.outcome import FarStarOrder, Outcome


class NotAllSmallError(ValueError):
    """all-small でないゲームが渡された"""


class FarStarProbeError(RuntimeError):
    """遠星プローブ *N と *(N+1) の結果が食い違った、または P となった"""


class AtomicWeightCalculator:
    """原子量計算器（1つのアリーナに束縛され、正準形 GameRef でメモ化）"""

    def __init__(self, arena: Arena, probe_margin: int = 2):
        """
        原子量計算器を初期化

        Args:
            arena: ゲームのアリーナ
            probe_margin: 遠星プローブのヒープサイズ N = 誕生日 + probe_margin
        """
        if probe_margin < 2:
            raise ValueError("probe_margin must be >= 2")
        self.arena = arena
        self.probe_margin = probe_margin
        self._weights: Dict[GameRef, GameRef] = {}
        self._far_star: Dict[GameRef, FarStarOrder] = {}
        self._products: Dict[GameRef, GameRef] = {}
        self.double_up_star = arena.add(arena.add(arena.up, arena.up), arena.star)
        self.double_down_star = arena.negate(self.double_up_star)

    def _require_all_small(self, g: GameRef) -> None:
        if not self.arena.is_all_small(g):
            raise NotAllSmallError(f"game {self.arena.format_value(g)} is not all-small")

    def far_star_compare(self, g: GameRef) -> FarStarOrder:
        """
        遠星 ※ との比較

        g + *N を N = 誕生日 + margin と N+1 の2通りで解き、結果が一致することを確認します。
        """
        self._require_all_small(g)
        cached = self._far_star.get(g)
        if cached is not None:
            return cached

        first = self._probe(g)
        if first is Outcome.P:
            raise FarStarProbeError(
                f"far star probe is a P-position for {self.arena.format_value(g)}"
            )

        result = {
            Outcome.L: FarStarOrder.GREATER,
            Outcome.R: FarStarOrder.LESS,
            Outcome.N: FarStarOrder.FUZZY,
        }[first]
        self._far_star[g] = result
        return result

    def _probe(self, g: GameRef) -> Outcome:
        """g + *N の勝敗クラス（N と N+1 で一致しなければ FarStarProbeError）"""
        n = self.arena.birthday(g) + self.probe_margin
        first = self.arena.sum_outcome((g, self.arena.nimber(n)))
        second = self.arena.sum_outcome((g, self.arena.nimber(n + 1)))
        if first is not second:
            raise FarStarProbeError(
                f"far star probes disagree for {self.arena.format_value(g)}: "
                f"*{n} gives {first.value}, *{n + 1} gives {second.value}"
            )
        return first

    def far_star_equiv(self, g: GameRef, h: GameRef) -> bool:
        """
        遠星同値の判定

        差に遠星を加えた g - h + ※ が ↓* と ↑* の間に厳密に入るとき真。
        """
        arena = self.arena
        difference = arena.add(g, arena.negate(h))
        above_downstar = self._probe(arena.add(difference, arena.upstar))
        below_upstar = self._probe(arena.add(arena.upstar, arena.negate(difference)))
        return above_downstar is Outcome.L and below_upstar is Outcome.L

    def product_up(self, g: GameRef) -> GameRef:
        """
        G·↑

        整数 n は ↑ の n 回和、それ以外は {G^L·↑ + ⇑* | G^R·↑ + ⇓*}。
        """
        cached = self._products.get(g)
        if cached is not None:
            return cached
        arena = self.arena
        n = arena.as_integer(g)
        if n is not None:
            result = arena.zero
            for _ in range(abs(n)):
                result = arena.add(result, arena.up)
            if n < 0:
                result = arena.negate(result)
        else:
            result = arena.construct(
                [arena.add(self.product_up(x), self.double_up_star) for x in arena.left_options(g)],
                [arena.add(self.product_up(x), self.double_down_star) for x in arena.right_options(g)],
            )
        self._products[g] = result
        return result

    def atomic_weight(self, g: GameRef) -> GameRef:
        """
        構成的な原子量

        G = {aw(g^L) - 2 | aw(g^R) + 2} が整数でなければ G、整数なら遠星との比較で決定します。

        Args:
            g: all-small なゲーム

        Returns:
            原子量（正準形 GameRef）
        """
        self._require_all_small(g)
        cached = self._weights.get(g)
        if cached is not None:
            return cached

        arena = self.arena
        if not arena.left_options(g) and not arena.right_options(g):
            result = arena.zero
        else:
            minus_two = arena.integer(-2)
            plus_two = arena.integer(2)
            left_weights = {arena.add(self.atomic_weight(x), minus_two) for x in arena.left_options(g)}
            right_weights = {
                arena.add(self.atomic_weight(x), plus_two) for x in arena.right_options(g)
            }
            constructed = arena.construct(left_weights, right_weights)
            if arena.as_integer(constructed) is None:
                result = constructed
            else:
                result = self._eccentric(g, left_weights, right_weights)

        self._weights[g] = result
        return result

    def _eccentric(
        self, g: GameRef, left_weights: Iterable[GameRef], right_weights: Iterable[GameRef]
    ) -> GameRef:
        """G が整数となる場合の遠星比較による分岐（調整済み重みの集合に対する min/max）"""
        arena = self.arena
        order = self.far_star_compare(g)
        if order is FarStarOrder.FUZZY:
            return arena.zero

        left_weights = list(left_weights)
        right_weights = list(right_weights)
        bound = 1 + max(arena.birthday(x) for x in left_weights + right_weights)

        if order is FarStarOrder.LESS:
            # n ⧐ G^L は「n ≤ G^L でない」。n について上方閉なので下から探索
            for n in range(-bound, bound + 1):
                candidate = arena.integer(n)
                if not any(arena.leq(candidate, x) for x in left_weights):
                    return candidate
        else:
            for n in range(bound, -bound - 1, -1):
                candidate = arena.integer(n)
                if not any(arena.leq(x, candidate) for x in right_weights):
                    return candidate
        raise FarStarProbeError(f"no integer bound found for {arena.format_value(g)}")
