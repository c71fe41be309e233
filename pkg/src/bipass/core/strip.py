"""
BIPASS ルールモジュール

石列 (strip) と局面 (position) の表現、生存正規化、着手生成、Δ 超過、
構造分類、正準形ゲームへの変換を提供します。
"""

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Optional, Tuple, Union

from bipass.core.game import Arena, GameRef
from bipass.core.outcome import Outcome, Player

_FAMILY_PATTERN = re.compile(r"^b(w*)(b*)w$")


class Stone(str, Enum):
    """石の色"""
    BLACK = "b"
    WHITE = "w"


class Larva(Enum):
    """幼虫 (larvae) の分類"""
    BLACK_HEADED = "BlackHeaded"
    WHITE_HEADED = "WhiteHeaded"
    BOTH = "Both"
    NEITHER = "Neither"


class StripSyntaxError(ValueError):
    """石列表記の構文エラー"""

    def __init__(self, text: str, position: int, reason: Optional[str] = None):
        reason = reason or f"invalid stone {text[position]!r}"
        super().__init__(f"{reason} at position {position} in {text!r}")
        self.position = position


@dataclass(frozen=True, order=True)
class Strip:
    """
    生存形の石列

    空、または先頭が黒石かつ末尾が白石（全ての黒石の右に白石があり、全ての白石の左に黒石がある）。
    """
    text: str = ""

    def __post_init__(self):
        """生存形の検証"""
        if self.text.strip("bw"):
            raise ValueError(f"strip may only contain 'b' and 'w': {self.text!r}")
        if self.text and (self.text[0] != "b" or self.text[-1] != "w"):
            raise ValueError(f"strip is not in alive form: {self.text!r}")

    @classmethod
    def parse(cls, text: str) -> "Strip":
        """文字列 [bwBW]* を解析し、生存正規化した石列を返す"""
        lowered = text.lower()
        for i, char in enumerate(lowered):
            if char not in "bw":
                raise StripSyntaxError(text, i)
        return normalize(lowered)

    @property
    def stones(self) -> Tuple[Stone, ...]:
        return tuple(Stone(c) for c in self.text)

    @property
    def blacks(self) -> int:
        return self.text.count("b")

    @property
    def whites(self) -> int:
        return self.text.count("w")

    def __len__(self) -> int:
        return len(self.text)

    def __bool__(self) -> bool:
        return bool(self.text)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Position:
    """空でない石列の多重集合（選言和）。石列は (長さ, 文字列) 順に保持"""
    strips: Tuple[Strip, ...] = ()

    def __post_init__(self):
        """多重集合の正規順序と非空性の検証"""
        if any(not s for s in self.strips):
            raise ValueError("position strips must be nonempty")
        if list(self.strips) != sorted(self.strips, key=_strip_order):
            raise ValueError("position strips must be stored in sorted order")

    @classmethod
    def of(cls, strips: Iterable[Union[Strip, str]]) -> "Position":
        """石列の並びから局面を生成（空の石列は除外）"""
        items = [s if isinstance(s, Strip) else Strip.parse(s) for s in strips]
        return cls(tuple(sorted((s for s in items if s), key=_strip_order)))

    @classmethod
    def parse(cls, text: str) -> "Position":
        """'+' 区切りの局面表記を解析（空局面は "0"）"""
        if text.strip() in ("", "0"):
            return cls()
        strips = []
        start = 0
        for part in text.split("+"):
            stripped = part.strip()
            offset = start + len(part) - len(part.lstrip())
            if not stripped:
                raise StripSyntaxError(text, offset, "empty strip")
            try:
                strips.append(Strip.parse(stripped))
            except StripSyntaxError as e:
                raise StripSyntaxError(text, offset + e.position) from e
            start += len(part) + 1
        return cls.of(strips)

    @property
    def stones(self) -> int:
        return sum(len(s) for s in self.strips)

    def __len__(self) -> int:
        return len(self.strips)

    def __add__(self, other: "Position") -> "Position":
        return Position.of(self.strips + other.strips)

    def __str__(self) -> str:
        return "+".join(s.text for s in self.strips) if self.strips else "0"

    def replace(self, index: int, strip: Strip) -> "Position":
        """index 番目の石列を置き換えた局面"""
        return Position.of(self.strips[:index] + (strip,) + self.strips[index + 1:])

    def options(self, player: Player) -> FrozenSet["Position"]:
        """いずれか1つの石列で着手した結果の局面集合"""
        return frozenset(
            self.replace(i, option)
            for i, strip in enumerate(self.strips)
            for option in options(strip, player)
        )


def _strip_order(strip: Strip) -> Tuple[int, str]:
    return (len(strip.text), strip.text)


def normalize(raw: Union[str, Iterable[Stone]]) -> Strip:
    """
    生存正規化

    右側に白石を持たない黒石と、左側に黒石を持たない白石を一度に除去します。
    死んだ白石は先頭の連続白、死んだ黒石は末尾の連続黒のみなので切り出しで足ります。
    """
    text = raw if isinstance(raw, str) else "".join(Stone(s).value for s in raw)
    first_black = text.find("b")
    last_white = text.rfind("w")
    if first_black == -1 or last_white < first_black:
        return Strip("")
    return Strip(text[first_black:last_white + 1])


def options(strip: Strip, player: Player) -> FrozenSet[Strip]:
    """
    石列の着手先

    Left は黒石を、間に白石だけを挟む右方の白石の位置へ跳ばし、挟まれた白石を1つ左へずらします。
    Right は対称に白石を左方へ跳ばします。結果は生存正規化し重複を除きます。
    """
    return _options(strip.text, player is Player.LEFT)


@lru_cache(maxsize=None)
def _options(text: str, left: bool) -> FrozenSet[Strip]:
    results = set()
    n = len(text)
    if left:
        for i in range(n):
            if text[i] != "b":
                continue
            j = i + 1
            while j < n and text[j] == "w":
                results.add(normalize(text[:i] + text[i + 1:j + 1] + "b" + text[j + 1:]))
                j += 1
    else:
        for j in range(n):
            if text[j] != "w":
                continue
            i = j - 1
            while i >= 0 and text[i] == "b":
                results.add(normalize(text[:i] + "w" + text[i:j] + text[j + 1:]))
                i -= 1
    return frozenset(results)


def conjugate(strip: Strip) -> Strip:
    """反転して色を入れ替える（-g に対応）"""
    return Strip(strip.text[::-1].translate(str.maketrans("bw", "wb")))


def delta(item: Union[Strip, Position]) -> int:
    """Δ 超過 = 白石数 - 黒石数（局面では全石列の和）"""
    strips = item.strips if isinstance(item, Position) else (item,)
    return sum(s.whites - s.blacks for s in strips)


def has_unit_bypass(strip: Strip, player: Player) -> bool:
    """自分の石が2個以上あればユニットバイパスが可能"""
    own = strip.blacks if player is Player.LEFT else strip.whites
    return own >= 2


def unit_bypass(strip: Strip, player: Player) -> Optional[Strip]:
    """
    ユニットバイパスの着手結果

    Left は最右の黒石を右端へ移し（その石は死ぬ）、Right は最左の白石を左端へ移します。
    """
    if not has_unit_bypass(strip, player):
        return None
    text = strip.text
    if player is Player.LEFT:
        i = text.rfind("b")
    else:
        i = text.find("w")
    return normalize(text[:i] + text[i + 1:])


def classify_larvae(strip: Strip) -> Larva:
    """黒頭幼虫（黒1個）・白頭幼虫（白1個）・両方（•◦）・どちらでもない"""
    if not strip:
        raise ValueError("cannot classify the empty strip")
    single_black = strip.blacks == 1
    single_white = strip.whites == 1
    if single_black and single_white:
        return Larva.BOTH
    if single_black:
        return Larva.BLACK_HEADED
    if single_white:
        return Larva.WHITE_HEADED
    return Larva.NEITHER


def single_strip_outcome(strip: Strip) -> Outcome:
    """単一石列の勝敗クラスを Δ から算出（ゲーム木は使わない）"""
    if not strip:
        return Outcome.P
    d = delta(strip)
    if d > 0:
        return Outcome.L
    if d < 0:
        return Outcome.R
    return Outcome.N


def family_strip(n: int, k: int) -> Strip:
    """•◦^{n+k}•^n◦（k⇑** 族の石列）"""
    if n < 0 or k < 0:
        raise ValueError("family parameters must be non-negative")
    return Strip("b" + "w" * (n + k) + "b" * n + "w")


def family_parameters(strip: Strip) -> Optional[Tuple[int, int]]:
    """石列が •◦^{n+k}•^n◦ の形なら (n, k)、そうでなければ None"""
    match = _FAMILY_PATTERN.match(strip.text)
    if match is None:
        return None
    whites, blacks = len(match.group(1)), len(match.group(2))
    if whites < blacks:
        return None
    return blacks, whites - blacks


def mirror_family_parameters(strip: Strip) -> Optional[Tuple[int, int]]:
    """石列が •◦^n•^{n+k}◦（k⇓** 族）の形なら (n, k)"""
    return family_parameters(conjugate(strip))


class GameConverter:
    """石列・局面から正準形ゲームへの変換（石列の内容でメモ化）"""

    def __init__(self, arena: Arena):
        self.arena = arena
        self._cache: Dict[str, GameRef] = {"": arena.zero}

    def to_game(self, item: Union[Strip, Position]) -> GameRef:
        """
        正準形ゲームへ変換

        Args:
            item: 石列または局面

        Returns:
            GameRef（局面は石列ごとの値の和）
        """
        if isinstance(item, Position):
            return self.arena.add_all(self._strip_game(s.text) for s in item.strips)
        return self._strip_game(item.text)

    def _strip_game(self, text: str) -> GameRef:
        cached = self._cache.get(text)
        if cached is not None:
            return cached
        left = [self._strip_game(s.text) for s in _options(text, True)]
        right = [self._strip_game(s.text) for s in _options(text, False)]
        result = self.arena.construct(left, right)
        self._cache[text] = result
        return result

    def winning_moves(self, position: Position, player: Player) -> FrozenSet[Position]:
        """手番 player が着手して勝てる着手先（相手番で player が勝つ局面）"""
        winners = set()
        for option in position.options(player):
            outcome = self.arena.outcome(self.to_game(option))
            if player is Player.LEFT and not outcome.right_wins_moving_first:
                winners.add(option)
            if player is Player.RIGHT and not outcome.left_wins_moving_first:
                winners.add(option)
        return frozenset(winners)
