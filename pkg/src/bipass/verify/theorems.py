"""
定理検証モジュール

BIPASS の各定理を有限の範囲で全数検査し、反例を Report に記録します。
反例は例外ではなくデータとして扱い、局面表記と失敗した関係の両辺を残します。
"""

import itertools
import time
from typing import Callable, Dict, List, Optional

import numpy as np

from bipass.config.config import Config, ConfigValidator
from bipass.config.validators import Report
from bipass.core.atomic_weight import AtomicWeightCalculator, FarStarProbeError
from bipass.core.ferrers import (
    enumerate_partitions,
    ferrers_options,
    from_ferrers,
    to_ferrers,
)
from bipass.core.game import Arena, GameRef
from bipass.core.outcome import ComparisonResult, Outcome, Player
from bipass.core.strip import (
    GameConverter,
    Larva,
    Position,
    Strip,
    classify_larvae,
    conjugate,
    delta,
    family_parameters,
    family_strip,
    has_unit_bypass,
    mirror_family_parameters,
    normalize,
    options,
    single_strip_outcome,
    unit_bypass,
)
from bipass.utils.logger import Logger
from bipass.verify.enumeration import Shard, enumerate_positions, enumerate_strips, strips_of_length
from bipass.verify.search import PositionSearcher

# スイート名 → メソッド名
SUITES: Dict[str, str] = {
    "table1": "verify_table1",
    "family": "verify_family",
    "aw-delta": "verify_aw_delta",
    "outcome-rules": "verify_outcome_rules",
    "no-bypass": "verify_no_bypass",
    "aw0-bounds": "verify_aw0_bounds",
    "star2": "search_star2",
    "canonical-survival": "verify_canonical_survival",
    "misere-two-ahead": "verify_misere_two_ahead",
    "lemma2": "verify_lemma2",
    "single-strip": "verify_single_strip",
    "ferrers": "verify_ferrers",
    "far-star-definition": "verify_far_star_definition",
    "additivity": "verify_additivity",
    "engine-laws": "verify_engine_laws",
}

# 局面列挙を shard 引数で分割できるスイート
SHARDABLE = frozenset(
    {"aw-delta", "outcome-rules", "no-bypass", "aw0-bounds", "star2", "misere-two-ahead"}
)

# 群演算の法則を調べる無作為な三つ組
_LAW_SEED = 20
_LAW_SAMPLES = 128


def _primary(shard: Optional[Shard]) -> bool:
    """固定局面の検査は分割実行の先頭 shard のみで行う"""
    return shard is None or shard[0] == 0


def _shard_text(shard: Optional[Shard]) -> str:
    return "" if shard is None else f", shard {shard[0]}/{shard[1]}"


class TheoremVerifier:
    """定理検証器（1つのアリーナを所有し、全スイートで共有）"""

    def __init__(self, config: Optional[Config] = None, arena: Optional[Arena] = None):
        """
        定理検証器を初期化

        Args:
            config: 設定オブジェクト（省略時は既定値）
            arena: 共有するアリーナ（省略時は新規作成）
        """
        self.config = config or Config()
        ConfigValidator.validate_all(self.config)
        self.logger = Logger(
            self.config.log_level, self.config.enable_debug_log, self.config.log_file
        )
        self.arena = arena or Arena()
        self.converter = GameConverter(self.arena)
        self.weights = AtomicWeightCalculator(self.arena, self.config.far_star_margin)
        self.normal_searcher = PositionSearcher(misere=False)
        self.misere_searcher = PositionSearcher(misere=True)

    # ------------------------------------------------------------------
    # 共通処理
    # ------------------------------------------------------------------

    def run_suite(self, name: str, shard: Optional[Shard] = None) -> Report:
        """
        名前でスイートを実行

        Args:
            name: SUITES のキー
            shard: 分割実行の (index, count)（SHARDABLE 以外では先頭 shard のみ実行）

        Returns:
            検証レポート
        """
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}")
        method: Callable[..., Report] = getattr(self, SUITES[name])
        if name in SHARDABLE:
            return method(shard=shard)
        if not _primary(shard):
            return Report(name=name)
        return method()

    def run_all(self) -> List[Report]:
        """全スイートを定義順に実行"""
        return [self.run_suite(name) for name in SUITES]

    def _finish(self, report: Report, started: float) -> Report:
        report.elapsed = time.time() - started
        self.logger.log_performance(report.name, report.elapsed)
        self.logger.log_report(report)
        return report

    def _show(self, g: GameRef) -> str:
        return self.arena.format_value(g, pretty=self.config.pretty)

    def game(self, item) -> GameRef:
        return self.converter.to_game(item)

    def atomic_weight(self, g: GameRef) -> Optional[int]:
        return self.arena.as_integer(self.weights.atomic_weight(g))

    def _table1_rows(self):
        arena = self.arena
        plus_minus = arena.construct([arena.star, arena.up], [arena.star, arena.down])
        double_up_star = arena.kupstar(2, True)
        row8 = arena.construct([double_up_star], [arena.up, plus_minus])
        row9 = arena.construct([arena.zero], [plus_minus, row8])
        return [
            ("bw", Outcome.N, arena.star, 0),
            ("bww", Outcome.L, arena.up, 1),
            ("bwww", Outcome.L, double_up_star, 2),
            ("bwbw", Outcome.N, arena.star, 0),
            ("bbww", Outcome.N, plus_minus, 0),
            ("bwwww", Outcome.L, arena.kupstar(3, True), 3),
            ("bwwbw", Outcome.L, arena.up, 1),
            ("bwbww", Outcome.L, row8, 1),
            ("bbwww", Outcome.L, row9, 1),
        ]

    # ------------------------------------------------------------------
    # 値と原子量
    # ------------------------------------------------------------------

    def verify_table1(self) -> Report:
        """5石以下の石列の勝敗・値・Δ・原子量の表を再現"""
        started = time.time()
        report = Report(name="table1", coverage="9 strips with up to 5 stones")
        for text, outcome, expected, weight in self._table1_rows():
            strip = Strip(text)
            g = self.game(strip)
            report.checked += 1
            actual_outcome = self.arena.outcome(g)
            if actual_outcome is not outcome:
                report.fail(f"{text}: outcome {actual_outcome.value} != {outcome.value}")
            if self.arena.compare(g, expected) is not ComparisonResult.EQUIVALENT:
                report.fail(f"{text}: value {self._show(g)} != {self._show(expected)}")
            if delta(strip) != weight:
                report.fail(f"{text}: delta {delta(strip)} != {weight}")
            aw = self.atomic_weight(g)
            if aw != weight:
                report.fail(f"{text}: aw {aw} != {weight}")
        return self._finish(report, started)

    def verify_family(
        self, max_len: Optional[int] = None, converse_max_len: Optional[int] = None
    ) -> Report:
        """
        k⇑** 族の特徴付け

        順方向: 2n+k+2 <= max_len の •◦^{n+k}•^n◦ は k⇑** と等価（共役は k⇓**）。
        逆方向: converse_max_len 以下の石列のうち k⇑** と等価なものは族の形に限る。
        """
        started = time.time()
        arena = self.arena
        max_len = max_len or self.config.family_max_len
        converse_max_len = converse_max_len or min(max_len, self.config.max_len)
        report = Report(
            name="family",
            coverage=f"forward 2n+k+2 <= {max_len}, converse strips <= {converse_max_len}",
        )

        for k in range(1, 9):
            report.checked += 1
            previous = arena.kupstar(k - 1, True)
            if arena.kupstar(k, True) != arena.construct([arena.zero], [previous]):
                report.fail(f"{k}.^*+*: != {{0|{self._show(previous)}}}")

        for n in range(0, max_len // 2):
            for k in range(0, max_len - 2 * n - 1):
                strip = family_strip(n, k)
                expected = arena.kupstar(k, True)
                g = self.game(strip)
                report.checked += 1
                if g != expected:
                    report.fail(f"{strip}: value {self._show(g)} != {self._show(expected)}")
                mirrored = self.game(conjugate(strip))
                if mirrored != arena.negate(expected):
                    report.fail(
                        f"{conjugate(strip)}: value {self._show(mirrored)} "
                        f"!= {self._show(arena.negate(expected))}"
                    )

        ups = {arena.kupstar(k, True): k for k in range(converse_max_len + 1)}
        downs = {arena.negate(g): k for g, k in ups.items()}
        for strip in enumerate_strips(converse_max_len):
            g = self.game(strip)
            report.checked += 1
            parameters = family_parameters(strip)
            if (g in ups) != (parameters is not None):
                report.fail(f"{strip}: value {self._show(g)}, family form {parameters}")
            elif parameters is not None and parameters[1] != ups[g]:
                report.fail(f"{strip}: family k={parameters[1]} != value k={ups[g]}")
            mirror = mirror_family_parameters(strip)
            if (g in downs) != (mirror is not None):
                report.fail(f"{strip}: value {self._show(g)}, mirrored family form {mirror}")
        return self._finish(report, started)

    def verify_aw_delta(
        self,
        max_len: Optional[int] = None,
        max_stones: Optional[int] = None,
        shard: Optional[Shard] = None,
    ) -> Report:
        """全ての石列・局面で原子量 = Δ 超過"""
        started = time.time()
        max_len = max_len or self.config.max_len
        max_stones = max_stones or self.config.max_stones
        report = Report(
            name="aw-delta",
            coverage=f"strips <= {max_len}, positions <= {max_stones} stones{_shard_text(shard)}",
        )
        items: List = list(enumerate_strips(max_len, shard))
        items.extend(p for p in enumerate_positions(max_stones, shard) if len(p) > 1)
        for item in items:
            g = self.game(item)
            report.checked += 1
            weight = self.weights.atomic_weight(g)
            if weight != self.arena.integer(delta(item)):
                report.fail(f"{item}: aw {self._show(weight)} != delta {delta(item)}")
        return self._finish(report, started)

    def verify_far_star_definition(self, max_len: Optional[int] = None) -> Report:
        """原子量の定義性質 aw(g)·↑ が g と遠星同値"""
        started = time.time()
        max_len = max_len or self.config.additivity_max_len
        report = Report(name="far-star-definition", coverage=f"strips <= {max_len}")
        for strip in enumerate_strips(max_len):
            g = self.game(strip)
            report.checked += 1
            product = self.weights.product_up(self.weights.atomic_weight(g))
            if not self.weights.far_star_equiv(product, g):
                report.fail(
                    f"{strip}: aw.^ = {self._show(product)} not far-star equal to {self._show(g)}"
                )
        return self._finish(report, started)

    def verify_additivity(self, max_len: Optional[int] = None) -> Report:
        """原子量の加法性・否定・2歩先ルール（石列の対）"""
        started = time.time()
        arena = self.arena
        max_len = max_len or self.config.additivity_max_len
        report = Report(name="additivity", coverage=f"pairs of strips <= {max_len}")
        strips = list(enumerate_strips(max_len))

        for strip in strips:
            g = self.game(strip)
            report.checked += 1
            weight = self.weights.atomic_weight(g)
            negated = self.weights.atomic_weight(arena.negate(g))
            if negated != arena.negate(weight):
                report.fail(f"{strip}: aw(-g) {self._show(negated)} != -aw(g) {self._show(weight)}")

        for first, second in itertools.combinations_with_replacement(strips, 2):
            position = Position.of([first, second])
            g, h = self.game(first), self.game(second)
            total = arena.add(g, h)
            report.checked += 1
            combined = self.weights.atomic_weight(total)
            expected = arena.add(self.weights.atomic_weight(g), self.weights.atomic_weight(h))
            if combined != expected:
                report.fail(f"{position}: aw {self._show(combined)} != {self._show(expected)}")
            self._check_two_ahead(report, str(position), total)
        return self._finish(report, started)

    def _check_two_ahead(self, report: Report, text: str, g: GameRef) -> None:
        weight = self.atomic_weight(g)
        if weight is None:
            return
        outcome = self.arena.outcome(g)
        if weight >= 2 and outcome is not Outcome.L:
            report.fail(f"{text}: aw {weight} but outcome {outcome.value}")
        elif weight == 1 and not outcome.left_wins_moving_first:
            report.fail(f"{text}: aw 1 but Left loses moving first ({outcome.value})")
        elif weight <= -2 and outcome is not Outcome.R:
            report.fail(f"{text}: aw {weight} but outcome {outcome.value}")
        elif weight == -1 and not outcome.right_wins_moving_first:
            report.fail(f"{text}: aw -1 but Right loses moving first ({outcome.value})")

    # ------------------------------------------------------------------
    # 勝敗
    # ------------------------------------------------------------------

    def verify_outcome_rules(
        self, max_stones: Optional[int] = None, shard: Optional[Shard] = None
    ) -> Report:
        """
        Δ による勝敗規則

        Δ>=2 なら L、Δ=1 なら Left 先手勝ち（負側は対称）、Δ=0 で石列が奇数個なら N、
        Δ=0 で偶数個の幼虫の和なら P。局面探索の結果とアリーナの結果の一致も確認します。
        """
        started = time.time()
        max_stones = max_stones or self.config.max_stones
        report = Report(
            name="outcome-rules", coverage=f"positions <= {max_stones} stones{_shard_text(shard)}"
        )
        for position in enumerate_positions(max_stones, shard):
            g = self.game(position)
            outcome = self.arena.outcome(g)
            report.checked += 1
            literal = self.normal_searcher.outcome(position)
            if literal is not outcome:
                report.fail(
                    f"{position}: searched outcome {literal.value} != value outcome {outcome.value}"
                )
            d = delta(position)
            if d >= 2 and outcome is not Outcome.L:
                report.fail(f"{position}: delta {d} but outcome {outcome.value}")
            elif d == 1 and not outcome.left_wins_moving_first:
                report.fail(f"{position}: delta 1 but Left loses moving first ({outcome.value})")
            elif d <= -2 and outcome is not Outcome.R:
                report.fail(f"{position}: delta {d} but outcome {outcome.value}")
            elif d == -1 and not outcome.right_wins_moving_first:
                report.fail(f"{position}: delta -1 but Right loses moving first ({outcome.value})")
            elif d == 0 and len(position) % 2 == 1 and outcome is not Outcome.N:
                report.fail(f"{position}: delta 0, odd strip count, outcome {outcome.value} != N")
            elif (
                d == 0
                and len(position) % 2 == 0
                and all(classify_larvae(s) is not Larva.NEITHER for s in position.strips)
                and outcome is not Outcome.P
            ):
                report.fail(
                    f"{position}: delta 0, even sum of larvae, outcome {outcome.value} != P"
                )

        if _primary(shard):
            self._check_outcome_fixtures(report)
        return self._finish(report, started)

    def _check_outcome_fixtures(self, report: Report) -> None:
        fixtures = [
            ("bww+bw", Outcome.N),
            ("bww+bww+bww+bbbbw", Outcome.P),
            ("bbww+bw", Outcome.N),
        ]
        for text, expected in fixtures:
            report.checked += 1
            outcome = self.arena.outcome(self.game(Position.parse(text)))
            if outcome is not expected:
                report.fail(f"{text}: outcome {outcome.value} != {expected.value}")

        report.checked += 1
        winners = self.converter.winning_moves(Position.parse("bbww+bw"), Player.LEFT)
        expected_moves = {Position.parse("bwbw+bw")}
        if winners != expected_moves:
            shown = sorted(str(p) for p in winners)
            report.fail(f"bbww+bw: Left winning moves {shown} != ['bw+bwbw']")

    def verify_no_bypass(
        self, max_stones: Optional[int] = None, shard: Optional[Shard] = None
    ) -> Report:
        """
        ユニットバイパスを持たない局面の形

        Left がどの石列でもユニットバイパスできないとき、全石列は黒頭幼虫で Δ >= 0。
        さらに Δ=0 なら全て •◦、Δ=1 なら •◦◦ が1個で残りは •◦。Right は色を反転して同様。
        両者ともバイパスできないなら Δ=0 で全て •◦ です。
        """
        started = time.time()
        max_stones = max_stones or self.config.max_stones
        report = Report(
            name="no-bypass", coverage=f"positions <= {max_stones} stones{_shard_text(shard)}"
        )
        bw = Strip("bw")
        rules = [
            (Player.LEFT, 1, Larva.BLACK_HEADED, Strip("bww")),
            (Player.RIGHT, -1, Larva.WHITE_HEADED, Strip("bbw")),
        ]
        for position in enumerate_positions(max_stones, shard):
            report.checked += 1
            d = delta(position)
            stuck = []
            for player, sign, larva, longer in rules:
                if any(has_unit_bypass(s, player) for s in position.strips):
                    continue
                stuck.append(player)
                kinds = {classify_larvae(s) for s in position.strips}
                if not kinds <= {larva, Larva.BOTH}:
                    report.fail(f"{position}: no {player.value} unit-bypass but not all larvae")
                if sign * d < 0:
                    report.fail(f"{position}: no {player.value} unit-bypass but delta {d}")
                others = [s for s in position.strips if s != bw]
                if sign * d == 0 and others:
                    report.fail(f"{position}: no {player.value} unit-bypass, delta 0, not all bw")
                if sign * d == 1 and others != [longer]:
                    report.fail(
                        f"{position}: no {player.value} unit-bypass, delta {d}, "
                        f"strips other than bw {[str(s) for s in others]} != ['{longer}']"
                    )
            if len(stuck) == 2 and (d != 0 or any(s != bw for s in position.strips)):
                report.fail(f"{position}: neither player has a unit-bypass but not all bw")
        return self._finish(report, started)

    def verify_single_strip(self, max_len: Optional[int] = None) -> Report:
        """単一石列の勝敗を Δ から算出した結果と、値・局面探索の結果の一致"""
        started = time.time()
        max_len = max_len or self.config.max_len
        report = Report(name="single-strip", coverage=f"strips <= {max_len}")
        empty = Position()
        if Outcome.P not in (single_strip_outcome(Strip()), self.normal_searcher.outcome(empty)):
            report.fail("0: empty strip is not a P-position")
        for strip in enumerate_strips(max_len):
            report.checked += 1
            expected = single_strip_outcome(strip)
            outcome = self.arena.outcome(self.game(strip))
            if outcome is not expected:
                report.fail(f"{strip}: outcome {outcome.value} != arithmetic {expected.value}")
            literal = self.normal_searcher.outcome(Position.of([strip]))
            if literal is not expected:
                report.fail(
                    f"{strip}: searched outcome {literal.value} != arithmetic {expected.value}"
                )
        return self._finish(report, started)

    def verify_lemma2(self, max_len: Optional[int] = None) -> Report:
        """
        Δ の1手あたりの変化

        黒石が2個以上なら Δ を増やす Left の着手はユニットバイパスただ1つで増分は1。
        黒石が1個で長さ3以上なら、どちらの着手も Δ を減らす（白石側も対称）。
        """
        started = time.time()
        max_len = max_len or self.config.max_len
        report = Report(name="lemma2", coverage=f"strips <= {max_len}")
        for strip in enumerate_strips(max_len):
            report.checked += 1
            d = delta(strip)
            for player, sign in ((Player.LEFT, 1), (Player.RIGHT, -1)):
                own = strip.blacks if player is Player.LEFT else strip.whites
                moves = options(strip, player)
                gains = [s for s in moves if sign * (delta(s) - d) == 1]
                if any(sign * (delta(s) - d) > 1 for s in moves):
                    report.fail(f"{strip}: a {player.value} move changes delta by more than one")
                if own >= 2:
                    bypass = unit_bypass(strip, player)
                    if gains != [bypass]:
                        shown = sorted(str(s) for s in gains)
                        report.fail(
                            f"{strip}: {player.value} improving moves {shown} != [{bypass}]"
                        )
                elif gains:
                    report.fail(f"{strip}: {player.value} has an improving move with one own stone")

            larva_owner = None
            if strip.blacks == 1:
                larva_owner = 1
            elif strip.whites == 1:
                larva_owner = -1
            if larva_owner is not None and len(strip) > 2:
                for player in Player:
                    for option in options(strip, player):
                        if larva_owner * (delta(option) - d) >= 0:
                            report.fail(
                                f"{strip}: {player.value} move to {option or '0'} "
                                f"does not worsen delta ({d} -> {delta(option)})"
                            )

        derived = sorted(str(s) for s in options(Strip("bwwwbw"), Player.LEFT))
        self.logger.info(f"Left options of bwwwbw derived from the rules: {derived}")
        return self._finish(report, started)

    def verify_aw0_bounds(
        self, max_stones: Optional[int] = None, shard: Optional[Shard] = None
    ) -> Report:
        """
        Δ = 0 の局面の上下界

        奇数個: g ∥ 0, ↓* < g < ↑*, ↓ ⊲ g ⊲ ↑（全て * なら g = *）。
        偶数個: g ∥ *, ↓ < g < ↑, ↓* ⊲ g ⊲ ↑*（全て幼虫なら g = 0）。
        """
        started = time.time()
        arena = self.arena
        max_stones = max_stones or self.config.max_stones
        report = Report(
            name="aw0-bounds",
            coverage=f"delta 0 positions <= {max_stones} stones{_shard_text(shard)}",
        )
        greater = ComparisonResult.GREATER
        less = ComparisonResult.LESS
        fuzzy = ComparisonResult.FUZZY
        for position in enumerate_positions(max_stones, shard):
            if delta(position) != 0:
                continue
            g = self.game(position)
            report.checked += 1
            if len(position) % 2 == 1:
                fuzzy_with = arena.zero
                strict, loose = (arena.downstar, arena.upstar), (arena.down, arena.up)
                collapse = all(self.game(s) == arena.star for s in position.strips)
                collapsed_value = arena.star
            else:
                fuzzy_with = arena.star
                strict, loose = (arena.down, arena.up), (arena.downstar, arena.upstar)
                collapse = all(classify_larvae(s) is not Larva.NEITHER for s in position.strips)
                collapsed_value = arena.zero

            checks = [
                (arena.compare(g, fuzzy_with) is fuzzy, f"g || {self._show(fuzzy_with)}"),
                (arena.compare(g, strict[0]) is greater, f"g > {self._show(strict[0])}"),
                (arena.compare(g, strict[1]) is less, f"g < {self._show(strict[1])}"),
                (arena.compare(g, loose[0]) in (greater, fuzzy), f"g |> {self._show(loose[0])}"),
                (arena.compare(g, loose[1]) in (less, fuzzy), f"g <| {self._show(loose[1])}"),
            ]
            if collapse:
                checks.append((g == collapsed_value, f"g = {self._show(collapsed_value)}"))
            for holds, relation in checks:
                if not holds:
                    report.fail(f"{position}: {relation} fails (g = {self._show(g)})")
        return self._finish(report, started)

    def search_star2(
        self,
        max_stones: Optional[int] = None,
        max_len: Optional[int] = None,
        shard: Optional[Shard] = None,
    ) -> Report:
        """
        値 *2 の局面の探索（見つかれば反例）

        単一石列については、両者が 0 へ動ける石列は •◦ に限ることと、
        *2 や ↑* と等価な石列がないことも確認します。確認できるのは列挙範囲のみです。
        """
        started = time.time()
        arena = self.arena
        max_stones = max_stones or self.config.max_stones
        max_len = max_len or self.config.max_len
        report = Report(
            name="star2",
            coverage=f"positions <= {max_stones} stones, strips <= {max_len}{_shard_text(shard)}",
        )
        star2 = arena.nimber(2)
        for position in enumerate_positions(max_stones, shard):
            report.checked += 1
            if self.game(position) == star2:
                report.fail(f"{position}: value *2")

        if _primary(shard):
            for strip in enumerate_strips(max_len):
                report.checked += 1
                g = self.game(strip)
                left_zero = any(not s for s in options(strip, Player.LEFT))
                right_zero = any(not s for s in options(strip, Player.RIGHT))
                if left_zero and right_zero and strip.text != "bw":
                    report.fail(f"{strip}: both players can move to 0")
                if g in (star2, arena.upstar):
                    report.fail(f"{strip}: single strip with value {self._show(g)}")
        return self._finish(report, started)

    def verify_canonical_survival(self) -> Report:
        """
        正準形で生き残る選択肢の数

        •••◦◦◦ は各3個、••••◦◦◦◦ は各2個が残る。各4個の選択肢を持ち Left の選択肢が全て残る石列は
        •◦•••◦◦◦ で、共役の •••◦◦◦•◦ では Left の選択肢は1個しか残らない（件数は規則から導出し、ログに出す）。
        ••◦◦◦ の相手を含む2つの N 局面も確認します。
        """
        started = time.time()
        arena = self.arena
        report = Report(name="canonical-survival", coverage="fixed strips")
        # (石列, 規則上の選択肢数, 正準形の選択肢数)
        counts = [
            ("bbbwww", None, (3, 3)),
            ("bbbbwwww", None, (2, 2)),
            ("bwbbbwww", (4, 4), (4, 1)),
            ("bbbwwwbw", (4, 4), (1, 4)),
        ]
        for text, literal, canonical in counts:
            strip = Strip(text)
            g = self.game(strip)
            report.checked += 1
            actual = (len(arena.left_options(g)), len(arena.right_options(g)))
            if actual != canonical:
                report.fail(f"{text}: canonical option counts {actual} != {canonical}")
            if literal is not None:
                moves = (len(options(strip, Player.LEFT)), len(options(strip, Player.RIGHT)))
                if moves != literal:
                    report.fail(f"{text}: option counts {moves} != {literal}")
                self.logger.info(f"{text}: {moves} options, {actual} survive in canonical form")

        for text in ("bbwww+bbwbww", "bbwww+bwbbww"):
            report.checked += 1
            outcome = arena.outcome(self.game(Position.parse(text)))
            if outcome is not Outcome.N:
                report.fail(f"{text}: outcome {outcome.value} != N")
        return self._finish(report, started)

    # ------------------------------------------------------------------
    # 逆形
    # ------------------------------------------------------------------

    def misere_outcome(self, position: Position) -> Outcome:
        """逆形の勝敗クラス（検証器のメモを共有）"""
        return self.misere_searcher.outcome(position)

    def verify_misere_two_ahead(
        self, max_stones: Optional[int] = None, shard: Optional[Shard] = None
    ) -> Report:
        """
        逆形の2歩先ルール

        Δ>=2 の局面は逆形でも L（負側は R）。* + * と 0 の合同性も
        p + •◦ + •◦ と p の逆形の勝敗クラスの一致として確認します。
        """
        started = time.time()
        max_stones = max_stones or self.config.max_stones
        report = Report(
            name="misere-two-ahead",
            coverage=f"positions <= {max_stones} stones{_shard_text(shard)}",
        )
        for position in enumerate_positions(max_stones, shard):
            d = delta(position)
            if abs(d) < 2:
                continue
            report.checked += 1
            outcome = self.misere_outcome(position)
            expected = Outcome.L if d > 0 else Outcome.R
            if outcome is not expected:
                report.fail(f"{position}: delta {d} but misere outcome {outcome.value}")

        if _primary(shard):
            star_pair = Position.parse("bw+bw")
            candidates = [Position()]
            if max_stones >= 6:
                candidates.extend(enumerate_positions(max_stones - 4))
            for position in candidates:
                report.checked += 1
                plain = self.misere_outcome(position)
                paired = self.misere_outcome(position + star_pair)
                if plain is not paired:
                    report.fail(
                        f"{position + star_pair}: misere outcome {paired.value} "
                        f"!= {plain.value} of {position}"
                    )

            fixtures = [
                ("bwww", Outcome.L),
                ("bww", Outcome.N),
                ("0", Outcome.N),
                ("bww+bww", Outcome.L),
            ]
            for text, expected in fixtures:
                report.checked += 1
                outcome = self.misere_outcome(Position.parse(text))
                if outcome is not expected:
                    report.fail(f"{text}: misere outcome {outcome.value} != {expected.value}")
        return self._finish(report, started)

    # ------------------------------------------------------------------
    # Ferrers 図形とエンジンの基本法則
    # ------------------------------------------------------------------

    def verify_ferrers(self, max_len: Optional[int] = None) -> Report:
        """石列と分割の全単射、および着手との可換性"""
        started = time.time()
        max_len = max_len or self.config.max_len
        report = Report(name="ferrers", coverage=f"strips and partitions <= {max_len} steps")
        strip_count = 0
        for strip in enumerate_strips(max_len):
            strip_count += 1
            report.checked += 1
            partition = to_ferrers(strip)
            if from_ferrers(partition) != strip:
                report.fail(
                    f"{strip}: round trip through {partition} gives {from_ferrers(partition)}"
                )
            for player in Player:
                moved = {to_ferrers(s) for s in options(strip, player)}
                if moved != set(ferrers_options(partition, player)):
                    report.fail(
                        f"{strip}: {player.value} moves do not commute with the diagram {partition}"
                    )

        partition_count = 0
        for partition in enumerate_partitions(max_len):
            partition_count += 1
            report.checked += 1
            if to_ferrers(from_ferrers(partition)) != partition:
                report.fail(
                    f"[{partition}]: round trip gives {to_ferrers(from_ferrers(partition))}"
                )
        if partition_count != strip_count + 1:
            report.fail(f"{partition_count} partitions != {strip_count} strips + empty")
        return self._finish(report, started)

    def verify_engine_laws(self, max_len: Optional[int] = None) -> Report:
        """
        エンジンと規則の基本法則

        石列数、生存正規化の冪等性、着手の双対性、共役と否定、正準形の冪等性、
        表記の往復、比較と勝敗の整合、群演算、遠星プローブの安定性を確認します。
        """
        started = time.time()
        arena = self.arena
        max_len = max_len or self.config.max_len
        report = Report(
            name="engine-laws", coverage=f"strips <= {max_len}, {_LAW_SAMPLES} sampled triples"
        )

        for n in range(2, max_len + 1):
            report.checked += 1
            count = sum(1 for _ in strips_of_length(n))
            if count != 2 ** (n - 2):
                report.fail(f"length {n}: {count} strips != {2 ** (n - 2)}")

        for n in range(0, min(max_len, 8) + 1):
            for raw in itertools.product("bw", repeat=n):
                report.checked += 1
                once = normalize("".join(raw))
                if normalize(once.text) != once:
                    report.fail(f"{''.join(raw)}: normalize is not idempotent")

        games = []
        for strip in enumerate_strips(max_len):
            report.checked += 1
            g = self.game(strip)
            games.append(g)
            if bool(options(strip, Player.LEFT)) != bool(options(strip, Player.RIGHT)):
                report.fail(f"{strip}: only one player has a move")
            if not arena.is_all_small(g):
                report.fail(f"{strip}: value is not all-small")
            if self.game(conjugate(strip)) != arena.negate(g):
                report.fail(f"{conjugate(strip)}: value is not the negative of {strip}")
            if arena.construct(arena.left_options(g), arena.right_options(g)) != g:
                report.fail(f"{strip}: canonical form is not idempotent")
            if arena.parse_value(arena.format_value(g)) != g:
                report.fail(f"{strip}: value text {arena.format_value(g)} does not parse back")
            if arena.compare(g, arena.zero) is not ComparisonResult.from_outcome(arena.outcome(g)):
                report.fail(f"{strip}: comparison with 0 disagrees with outcome")
            if arena.add(g, arena.negate(g)) != arena.zero:
                report.fail(f"{strip}: g + -g != 0")
            try:
                self.weights.far_star_compare(g)
            except FarStarProbeError as e:
                report.fail(f"{strip}: {e}")

        pool = self._law_pool(games)
        rng = np.random.default_rng(_LAW_SEED)
        for i, j, k in rng.integers(0, len(pool), size=(_LAW_SAMPLES, 3)):
            a, b, c = pool[i], pool[j], pool[k]
            report.checked += 1
            if arena.add(a, arena.negate(a)) != arena.zero:
                report.fail(f"{self._show(a)}: g + -g != 0")
            if arena.add(a, b) != arena.add(b, a):
                report.fail(f"{self._show(a)} + {self._show(b)}: addition is not commutative")
            if arena.add(arena.add(a, b), c) != arena.add(a, arena.add(b, c)):
                report.fail(
                    f"{self._show(a)} + {self._show(b)} + {self._show(c)}: "
                    "addition is not associative"
                )
        return self._finish(report, started)

    def _law_pool(self, games: List[GameRef]) -> List[GameRef]:
        """誕生日 5 以下の石列の値・その否定・2つの和からなる相異なるゲーム"""
        arena = self.arena
        base = {g for g in games if arena.birthday(g) <= 5}
        base |= {arena.negate(g) for g in base}
        pairs = itertools.combinations_with_replacement(sorted(base), 2)
        # 和の誕生日は2つの誕生日の和以下
        sums = {arena.add(g, h) for g, h in pairs if arena.birthday(g) + arena.birthday(h) <= 5}
        return sorted(base | sums, key=lambda g: (arena.birthday(g), arena.format_value(g)))

    def get_statistics(self) -> dict:
        """アリーナと探索器の統計"""
        return {
            'arena': self.arena.get_statistics(),
            'normal_search': self.normal_searcher.get_statistics(),
            'misere_search': self.misere_searcher.get_statistics(),
        }
