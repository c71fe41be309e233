"""
局面列挙モジュール

生存形の石列と、石列の多重集合（局面）を決定的な順序で列挙します。
shard=(index, count) を指定すると、列挙順で index 番目から count おきの要素のみを返します。
"""

import itertools
from typing import Iterator, List, Optional, Tuple

from bipass.core.strip import Position, Strip

Shard = Tuple[int, int]


def _in_shard(i: int, shard: Optional[Shard]) -> bool:
    if shard is None:
        return True
    index, count = shard
    return i % count == index


def _check_shard(shard: Optional[Shard]) -> None:
    if shard is not None:
        index, count = shard
        if count < 1 or not 0 <= index < count:
            raise ValueError(f"invalid shard {shard}")


def strips_of_length(n: int) -> Iterator[Strip]:
    """長さ n の生存形石列（先頭が黒、末尾が白、中間は任意）"""
    if n < 2:
        return
    for middle in itertools.product("bw", repeat=n - 2):
        yield Strip("b" + "".join(middle) + "w")


def enumerate_strips(max_len: int, shard: Optional[Shard] = None) -> Iterator[Strip]:
    """
    長さ 2..max_len の生存形石列を長さ順に列挙

    Args:
        max_len: 最大長（2以上）
        shard: 分割実行の (index, count)

    Returns:
        石列のイテレータ（各長さ n につき 2^(n-2) 個）
    """
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    _check_shard(shard)
    strips = itertools.chain.from_iterable(strips_of_length(n) for n in range(2, max_len + 1))
    for i, strip in enumerate(strips):
        if _in_shard(i, shard):
            yield strip


def enumerate_positions(max_stones: int, shard: Optional[Shard] = None) -> Iterator[Position]:
    """
    総石数 2..max_stones の局面（空でない石列の多重集合）を列挙

    多重集合は石列一覧への広義単調増加な添字列として1回ずつ生成します。

    Args:
        max_stones: 最大総石数（2以上）
        shard: 分割実行の (index, count)

    Returns:
        局面のイテレータ
    """
    if max_stones < 2:
        raise ValueError("max_stones must be >= 2")
    _check_shard(shard)
    strips = list(enumerate_strips(max_stones))
    for i, position in enumerate(_multisets(strips, 0, max_stones, ())):
        if _in_shard(i, shard):
            yield position


def _multisets(
    strips: List[Strip], start: int, budget: int, prefix: Tuple[Strip, ...]
) -> Iterator[Position]:
    for i in range(start, len(strips)):
        strip = strips[i]
        if len(strip) > budget:
            break
        chosen = prefix + (strip,)
        yield Position(chosen)
        yield from _multisets(strips, i, budget - len(strip), chosen)
