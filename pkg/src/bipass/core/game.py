"""
短い党派的ゲームのアリーナモジュール

正準形ノードをハッシュコンシングで一意化したアリーナを提供します。
同じアリーナ内の GameRef は、ゲームが等価であるときに限り等しくなります。
"""

import sys
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from bipass.core.outcome import ComparisonResult, Outcome

GameRef = int

_RECURSION_LIMIT = 20000


@dataclass(frozen=True)
class GameNode:
    """正準形ノード（Left/Right の選択肢はソート済み・重複なし）"""
    left: Tuple[GameRef, ...]
    right: Tuple[GameRef, ...]


class Arena:
    """
    正準形ゲームのアリーナ

    構築・否定・和・比較・勝敗判定と、名前付きの値 (nimber, 整数, k⇑** 族) を提供します。
    全ての演算はアリーナのキャッシュを更新するため、1つのアリーナは1スレッドからのみ使用します。
    """

    def __init__(self):
        """アリーナを初期化（0, *, ↑, ↓, ↑*, ↓* を登録）"""
        if sys.getrecursionlimit() < _RECURSION_LIMIT:
            sys.setrecursionlimit(_RECURSION_LIMIT)

        # ノード表（インデックスが GameRef）
        self._left: List[Tuple[GameRef, ...]] = []
        self._right: List[Tuple[GameRef, ...]] = []
        self._birthday: List[int] = []
        self._text: List[str] = []
        self._nim_value: List[Optional[int]] = []
        self._int_value: List[Optional[int]] = []
        self._all_small: List[bool] = []
        self._index: Dict[Tuple[Tuple[GameRef, ...], Tuple[GameRef, ...]], GameRef] = {}

        # 演算キャッシュ
        self._construct_cache: Dict[Tuple[frozenset, frozenset], GameRef] = {}
        self._le_cache: Dict[Tuple[GameRef, GameRef], bool] = {}
        self._add_cache: Dict[Tuple[GameRef, GameRef], GameRef] = {}
        self._neg_cache: Dict[GameRef, GameRef] = {}
        self._left_first_cache: Dict[GameRef, bool] = {}
        self._right_first_cache: Dict[GameRef, bool] = {}
        self._sum_left_cache: Dict[Tuple[GameRef, ...], bool] = {}
        self._sum_right_cache: Dict[Tuple[GameRef, ...], bool] = {}
        self._integers: Dict[int, GameRef] = {}
        self._kupstar: Dict[Tuple[int, bool], GameRef] = {}
        self._aliases: Dict[GameRef, str] = {}
        self._alias_k = 0

        self.zero = self._intern((), ())
        self.star = self._intern((self.zero,), (self.zero,))
        self._nimbers: List[GameRef] = [self.zero, self.star]
        self._integers[0] = self.zero
        self.up = self.construct([self.zero], [self.star])
        self.down = self.negate(self.up)
        self.upstar = self.add(self.up, self.star)
        self.downstar = self.negate(self.upstar)

    def __len__(self) -> int:
        return len(self._left)

    # ------------------------------------------------------------------
    # ノード管理
    # ------------------------------------------------------------------

    def _sort_key(self, g: GameRef) -> Tuple[int, str]:
        return (self._birthday[g], self._text[g])

    def _intern(self, left: Iterable[GameRef], right: Iterable[GameRef]) -> GameRef:
        """正準形であることが分かっている選択肢集合をノード表に登録"""
        left_t = tuple(sorted(set(left), key=self._sort_key))
        right_t = tuple(sorted(set(right), key=self._sort_key))
        key = (left_t, right_t)
        existing = self._index.get(key)
        if existing is not None:
            return existing

        g = len(self._left)
        options = left_t + right_t
        birthday = 1 + max(self._birthday[x] for x in options) if options else 0

        nim: Optional[int] = None
        if left_t == right_t and all(self._nim_value[x] == i for i, x in enumerate(left_t)):
            nim = len(left_t)

        integer: Optional[int] = None
        if not options:
            integer = 0
        elif not right_t and len(left_t) == 1:
            previous = self._int_value[left_t[0]]
            if previous is not None and previous >= 0:
                integer = previous + 1
        elif not left_t and len(right_t) == 1:
            previous = self._int_value[right_t[0]]
            if previous is not None and previous <= 0:
                integer = previous - 1

        if nim is not None:
            text = "0" if nim == 0 else "*" if nim == 1 else f"*{nim}"
        else:
            text = (
                "{" + ",".join(self._text[x] for x in left_t)
                + "|" + ",".join(self._text[x] for x in right_t) + "}"
            )

        all_small = bool(left_t) == bool(right_t) and all(self._all_small[x] for x in options)

        self._left.append(left_t)
        self._right.append(right_t)
        self._birthday.append(birthday)
        self._text.append(text)
        self._nim_value.append(nim)
        self._int_value.append(integer)
        self._all_small.append(all_small)
        self._index[key] = g
        return g

    def node(self, g: GameRef) -> GameNode:
        return GameNode(self._left[g], self._right[g])

    def left_options(self, g: GameRef) -> Tuple[GameRef, ...]:
        return self._left[g]

    def right_options(self, g: GameRef) -> Tuple[GameRef, ...]:
        return self._right[g]

    def birthday(self, g: GameRef) -> int:
        return self._birthday[g]

    # ------------------------------------------------------------------
    # 順序
    # ------------------------------------------------------------------

    def leq(self, g: GameRef, h: GameRef) -> bool:
        """
        g ≤ h を判定

        g の Left 選択肢に h 以上のものがなく、h の Right 選択肢に g 以下のものがないとき真。
        """
        if g == h:
            return True
        key = (g, h)
        cached = self._le_cache.get(key)
        if cached is not None:
            return cached
        result = (
            not any(self.leq(h, gl) for gl in self._left[g])
            and not any(self.leq(hr, g) for hr in self._right[h])
        )
        self._le_cache[key] = result
        return result

    # ------------------------------------------------------------------
    # 構築
    # ------------------------------------------------------------------

    def construct(self, left_options: Iterable[GameRef], right_options: Iterable[GameRef]) -> GameRef:
        """
        {L | R} の正準形を構築

        支配された選択肢を除去し、可逆な選択肢をバイパスした上でハッシュコンシングします。

        Args:
            left_options: Left の選択肢（同じアリーナの GameRef）
            right_options: Right の選択肢

        Returns:
            正準形の GameRef
        """
        raw_left = frozenset(left_options)
        raw_right = frozenset(right_options)
        cache_key = (raw_left, raw_right)
        cached = self._construct_cache.get(cache_key)
        if cached is not None:
            return cached

        left, right = self._simplify(raw_left, raw_right)
        result = self._intern(left, right)
        self._construct_cache[cache_key] = result
        return result

    def _simplify(self, raw_left: frozenset, raw_right: frozenset) -> Tuple[set, set]:
        """支配・可逆選択肢の除去（比較は常に未簡約の G に対して行う）"""
        # G ≤ x / x ≤ G の判定は x の部分ゲームを再帰するため、構築ごとにメモ化
        below: Dict[GameRef, bool] = {}
        above: Dict[GameRef, bool] = {}

        def g_leq(x: GameRef) -> bool:
            cached = below.get(x)
            if cached is None:
                cached = (
                    not any(self.leq(x, gl) for gl in raw_left)
                    and not any(leq_g(xr) for xr in self._right[x])
                )
                below[x] = cached
            return cached

        def leq_g(x: GameRef) -> bool:
            cached = above.get(x)
            if cached is None:
                cached = (
                    not any(g_leq(xl) for xl in self._left[x])
                    and not any(self.leq(gr, x) for gr in raw_right)
                )
                above[x] = cached
            return cached

        left = self._undominated(set(raw_left), maximal=True)
        right = self._undominated(set(raw_right), maximal=False)

        changed = True
        while changed:
            changed = False
            for gl in sorted(left):
                reverse = next((r for r in self._right[gl] if leq_g(r)), None)
                if reverse is not None:
                    left.discard(gl)
                    left.update(self._left[reverse])
                    changed = True
                    break
            for gr in sorted(right):
                reverse = next((l for l in self._left[gr] if g_leq(l)), None)
                if reverse is not None:
                    right.discard(gr)
                    right.update(self._right[reverse])
                    changed = True
                    break

        return (
            self._undominated(left, maximal=True),
            self._undominated(right, maximal=False),
        )

    def _undominated(self, options: set, maximal: bool) -> set:
        """Left は最大元のみ、Right は最小元のみを残す"""
        kept = set()
        for x in options:
            if maximal:
                dominated = any(y != x and self.leq(x, y) for y in options)
            else:
                dominated = any(y != x and self.leq(y, x) for y in options)
            if not dominated:
                kept.add(x)
        return kept

    # ------------------------------------------------------------------
    # 代数演算
    # ------------------------------------------------------------------

    def negate(self, g: GameRef) -> GameRef:
        """-g（正準形の否定は正準形のまま）"""
        cached = self._neg_cache.get(g)
        if cached is not None:
            return cached
        result = self._intern(
            (self.negate(gr) for gr in self._right[g]),
            (self.negate(gl) for gl in self._left[g]),
        )
        self._neg_cache[g] = result
        self._neg_cache[result] = g
        return result

    def add(self, g: GameRef, h: GameRef) -> GameRef:
        """選言和 g + h の正準形"""
        if g == self.zero:
            return h
        if h == self.zero:
            return g
        key = (g, h) if g <= h else (h, g)
        cached = self._add_cache.get(key)
        if cached is not None:
            return cached
        left = [self.add(gl, h) for gl in self._left[g]] + [self.add(g, hl) for hl in self._left[h]]
        right = [self.add(gr, h) for gr in self._right[g]] + [self.add(g, hr) for hr in self._right[h]]
        result = self.construct(left, right)
        self._add_cache[key] = result
        return result

    def add_all(self, games: Iterable[GameRef]) -> GameRef:
        total = self.zero
        for g in games:
            total = self.add(total, g)
        return total

    # ------------------------------------------------------------------
    # 勝敗
    # ------------------------------------------------------------------

    def _left_wins_first(self, g: GameRef) -> bool:
        cached = self._left_first_cache.get(g)
        if cached is None:
            cached = any(not self._right_wins_first(gl) for gl in self._left[g])
            self._left_first_cache[g] = cached
        return cached

    def _right_wins_first(self, g: GameRef) -> bool:
        cached = self._right_first_cache.get(g)
        if cached is None:
            cached = any(not self._left_wins_first(gr) for gr in self._right[g])
            self._right_first_cache[g] = cached
        return cached

    def outcome(self, g: GameRef) -> Outcome:
        """正規形（動けない手番が負け）での勝敗クラス"""
        return Outcome.from_first_player_wins(self._left_wins_first(g), self._right_wins_first(g))

    def compare(self, g: GameRef, h: GameRef) -> ComparisonResult:
        """g - h の勝敗クラスによる比較"""
        return ComparisonResult.from_outcome(self.outcome(self.add(g, self.negate(h))))

    def sum_outcome(self, components: Iterable[GameRef]) -> Outcome:
        """
        成分を正準化せずに選言和の勝敗クラスを探索

        Args:
            components: 和の成分

        Returns:
            勝敗クラス
        """
        state = tuple(sorted(c for c in components if c != self.zero))
        return Outcome.from_first_player_wins(
            self._sum_wins_first(state, left=True),
            self._sum_wins_first(state, left=False),
        )

    def _sum_wins_first(self, state: Tuple[GameRef, ...], left: bool) -> bool:
        cache = self._sum_left_cache if left else self._sum_right_cache
        cached = cache.get(state)
        if cached is not None:
            return cached
        options_of = self._left if left else self._right
        result = False
        for i, component in enumerate(state):
            for option in options_of[component]:
                rest = state[:i] + state[i + 1:]
                child = tuple(sorted(rest + ((option,) if option != self.zero else ())))
                if not self._sum_wins_first(child, left=not left):
                    result = True
                    break
            if result:
                break
        cache[state] = result
        return result

    # ------------------------------------------------------------------
    # 名前付きの値
    # ------------------------------------------------------------------

    def nimber(self, n: int) -> GameRef:
        """*n = {0,*,...,*(n-1) | 同}"""
        if n < 0:
            raise ValueError("nimber index must be non-negative")
        while len(self._nimbers) <= n:
            options = list(self._nimbers)
            self._nimbers.append(self._intern(options, options))
        return self._nimbers[n]

    def integer(self, n: int) -> GameRef:
        """整数 n の正準形: n={n-1|} (n>0), n={|n+1} (n<0)"""
        cached = self._integers.get(n)
        if cached is not None:
            return cached
        if n > 0:
            result = self._intern([self.integer(n - 1)], [])
        else:
            result = self._intern([], [self.integer(n + 1)])
        self._integers[n] = result
        return result

    def as_integer(self, g: GameRef) -> Optional[int]:
        """正準形が整数の形であればその値、そうでなければ None"""
        return self._int_value[g]

    def nim_value(self, g: GameRef) -> Optional[int]:
        """正準形が *n の形であれば n、そうでなければ None"""
        return self._nim_value[g]

    def kupstar(self, k: int, plus_star: bool = False) -> GameRef:
        """k·(↑*) (+ * ) の正準形"""
        if k < 0:
            raise ValueError("k must be non-negative")
        key = (k, plus_star)
        cached = self._kupstar.get(key)
        if cached is not None:
            return cached
        if plus_star:
            result = self.add(self.kupstar(k, False), self.star)
        elif k == 0:
            result = self.zero
        else:
            result = self.add(self.kupstar(k - 1, False), self.upstar)
        self._kupstar[key] = result
        return result

    def is_all_small(self, g: GameRef) -> bool:
        """全ての部分局面で Left と Right の選択肢の有無が一致するか"""
        return self._all_small[g]

    # ------------------------------------------------------------------
    # 表記
    # ------------------------------------------------------------------

    def format_value(self, g: GameRef, pretty: bool = False) -> str:
        """
        値の文字列表記

        Args:
            g: ゲーム
            pretty: True の場合 ^, v, k.^* などの別名に置換

        Returns:
            値の文字列（空白なし）
        """
        if not pretty:
            return self._text[g]
        self._ensure_aliases(self._birthday[g])
        return self._pretty(g)

    def _pretty(self, g: GameRef) -> str:
        if self._nim_value[g] is not None:
            return self._text[g]
        alias = self._aliases.get(g)
        if alias is not None:
            return alias
        return (
            "{" + ",".join(self._pretty(x) for x in self._left[g])
            + "|" + ",".join(self._pretty(x) for x in self._right[g]) + "}"
        )

    def _ensure_aliases(self, k_max: int) -> None:
        """k⇑** / k⇓** 族の別名表を k_max まで拡張"""
        for k in range(self._alias_k + 1, k_max + 1):
            for plus_star in (False, True):
                g = self.kupstar(k, plus_star)
                if k == 1:
                    up_text, down_text = ("^", "v") if plus_star else ("^*", "v*")
                else:
                    suffix = "+*" if plus_star else ""
                    up_text, down_text = f"{k}.^*{suffix}", f"{k}.v*{suffix}"
                self._aliases.setdefault(g, up_text)
                self._aliases.setdefault(self.negate(g), down_text)
        self._alias_k = max(self._alias_k, k_max)

    def parse_value(self, text: str) -> GameRef:
        """値の文字列表記を解析して正準形を返す"""
        from bipass.core.notation import ValueParser

        return ValueParser(self).parse(text)

    def get_statistics(self) -> dict:
        """アリーナとキャッシュの規模を取得"""
        return {
            'nodes': len(self._left),
            'construct_cache': len(self._construct_cache),
            'order_cache': len(self._le_cache),
            'add_cache': len(self._add_cache),
            'sum_search_states': len(self._sum_left_cache) + len(self._sum_right_cache),
        }
