"""
Ferrers 図形エンコードモジュール

石列と分割 (partition) の全単射を提供します。図形の境界を右上隅から左下隅へ辿り、
黒石は列方向（下向き）の単位辺、白石は行方向（左向き）の単位辺に対応します。
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterator, Tuple

import numpy as np

from bipass.core.outcome import Player
from bipass.core.strip import Strip


@dataclass(frozen=True)
class Partition:
    """広義単調減少の正整数列（各行の長さ）"""
    rows: Tuple[int, ...] = ()

    def __post_init__(self):
        """行の長さの検証"""
        if any(r < 1 for r in self.rows):
            raise ValueError("partition rows must be positive")
        if any(a < b for a, b in zip(self.rows, self.rows[1:])):
            raise ValueError("partition rows must be weakly decreasing")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """"4,1" 形式の行表記を解析"""
        text = text.strip()
        if not text:
            return cls()
        return cls(tuple(int(part) for part in text.split(",")))

    @property
    def boundary_steps(self) -> int:
        """境界の単位辺の数（= 石列の長さ）"""
        return len(self.rows) + (self.rows[0] if self.rows else 0)

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows)


def to_ferrers(strip: Strip) -> Partition:
    """石列から分割へ（黒石ごとに現在の幅の行を出力し、白石ごとに幅を1減らす）"""
    width = strip.whites
    rows = []
    for char in strip.text:
        if char == "b":
            rows.append(width)
        else:
            width -= 1
    return Partition(tuple(rows))


def from_ferrers(partition: Partition) -> Strip:
    """分割から石列へ（to_ferrers の逆写像）"""
    rows = partition.rows
    parts = []
    for i, row in enumerate(rows):
        following = rows[i + 1] if i + 1 < len(rows) else 0
        parts.append("b" + "w" * (row - following))
    return Strip("".join(parts))


def diagram(partition: Partition) -> np.ndarray:
    """分割のセル配置を真偽値の2次元配列で返す"""
    width = partition.rows[0] if partition.rows else 0
    grid = np.zeros((len(partition.rows), width), dtype=bool)
    for i, row in enumerate(partition.rows):
        grid[i, :row] = True
    return grid


def from_diagram(grid: np.ndarray) -> Partition:
    """セル配置から分割へ（左詰めの Ferrers 形であること）"""
    rows = np.count_nonzero(grid, axis=1)
    for i, row in enumerate(rows):
        if not grid[i, :row].all():
            raise ValueError("diagram rows must be left-justified")
    return Partition(tuple(int(r) for r in rows if r > 0))


def conjugate_partition(partition: Partition) -> Partition:
    """転置した分割（列の高さの列）"""
    columns = np.count_nonzero(diagram(partition), axis=0)
    return Partition(tuple(int(c) for c in columns))


def ferrers_options(partition: Partition, player: Player) -> FrozenSet[Partition]:
    """
    Ferrers 図形上の着手先

    Left はある行の右端からセルを取り除き、Right はある列の下端からセルを取り除きます。
    残りは Ferrers 図形でなければなりません。
    """
    if player is Player.RIGHT:
        return frozenset(
            conjugate_partition(p)
            for p in ferrers_options(conjugate_partition(partition), Player.LEFT)
        )
    rows = partition.rows
    results = set()
    for i, row in enumerate(rows):
        following = rows[i + 1] if i + 1 < len(rows) else 0
        for removed in range(1, row - following + 1):
            shortened = rows[:i] + (row - removed,) + rows[i + 1:]
            results.add(Partition(tuple(r for r in shortened if r > 0)))
    return frozenset(results)


def enumerate_partitions(max_steps: int) -> Iterator[Partition]:
    """境界の単位辺が max_steps 以下の全ての分割（空の分割を含む）"""
    yield Partition()
    for width in range(1, max_steps):
        yield from _partitions_with_first_row(width, max_steps - width - 1, (width,))


def _partitions_with_first_row(
    max_row: int, remaining_rows: int, prefix: Tuple[int, ...]
) -> Iterator[Partition]:
    yield Partition(prefix)
    if remaining_rows == 0:
        return
    for row in range(1, max_row + 1):
        yield from _partitions_with_first_row(row, remaining_rows - 1, prefix + (row,))
