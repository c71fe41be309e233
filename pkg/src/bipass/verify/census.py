"""
全数調査モジュール

全ての生存形石列について Δ・勝敗・値・原子量を JSONL で出力し、numpy で集計します。
"""

import json
from typing import Dict, Iterable, Iterator, Optional, TextIO

import numpy as np

from bipass.config.validators import CensusRecord
from bipass.core.atomic_weight import AtomicWeightCalculator
from bipass.core.game import Arena
from bipass.core.strip import GameConverter, delta
from bipass.verify.enumeration import enumerate_strips


def census(
    max_len: int,
    sink: TextIO,
    arena: Optional[Arena] = None,
    pretty: bool = True,
    probe_margin: int = 2,
) -> Iterator[CensusRecord]:
    """
    石列の全数調査

    1石列につき1行の JSON を sink に書き、同じレコードを返します。
    原子量と Δ が一致しない行は CensusRecord の検証で ValueError になります。

    Args:
        max_len: 石列の最大長
        sink: 出力先（書き込み失敗はそのまま伝播）
        arena: 使用するアリーナ（省略時は新規作成）
        pretty: 値表記に別名を使う
        probe_margin: 遠星プローブの余裕

    Returns:
        CensusRecord のイテレータ
    """
    arena = arena or Arena()
    converter = GameConverter(arena)
    weights = AtomicWeightCalculator(arena, probe_margin)
    for strip in enumerate_strips(max_len):
        g = converter.to_game(strip)
        atomic_weight = weights.atomic_weight(g)
        weight = arena.as_integer(atomic_weight)
        if weight is None:
            raise ValueError(
                f"{strip}: atomic weight {arena.format_value(atomic_weight)} is not an integer"
            )
        record = CensusRecord(
            strip=strip.text,
            length=len(strip),
            delta=delta(strip),
            outcome=arena.outcome(g).value,
            value=arena.format_value(g, pretty=pretty),
            aw=weight,
        )
        sink.write(json.dumps(record.dict(), ensure_ascii=False, separators=(",", ":")) + "\n")
        yield record


def census_summary(records: Iterable[CensusRecord]) -> Dict[str, object]:
    """
    全数調査の集計

    Args:
        records: CensusRecord の並び

    Returns:
        件数、Δ ごとの件数、勝敗クラスごとの件数、長さごとの件数
    """
    records = list(records)
    if not records:
        return {'records': 0, 'by_delta': {}, 'by_outcome': {}, 'by_length': {}}
    deltas = np.array([r.delta for r in records], dtype=np.int64)
    lengths = np.array([r.length for r in records], dtype=np.int64)
    outcomes = np.array([r.outcome for r in records])

    delta_values, delta_counts = np.unique(deltas, return_counts=True)
    outcome_values, outcome_counts = np.unique(outcomes, return_counts=True)
    length_values, length_counts = np.unique(lengths, return_counts=True)
    return {
        'records': len(records),
        'by_delta': {int(v): int(c) for v, c in zip(delta_values, delta_counts)},
        'by_outcome': {str(v): int(c) for v, c in zip(outcome_values, outcome_counts)},
        'by_length': {int(v): int(c) for v, c in zip(length_values, length_counts)},
    }
