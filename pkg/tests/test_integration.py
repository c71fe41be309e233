"""
統合テスト

アリーナ・原子量・局面探索・検証ハーネス・CLI を組み合わせた統合テストを実施します。
"""

import io
import json

import pytest
from bipass.cli.main import EXIT_OK, run
from bipass.config.config import Config
from bipass.core.game import Arena
from bipass.core.outcome import Outcome
from bipass.core.strip import GameConverter, Position, Strip, delta
from bipass.verify.census import census, census_summary
from bipass.verify.enumeration import enumerate_strips
from bipass.verify.search import PositionSearcher
from bipass.verify.sharding import run_sharded
from bipass.verify.theorems import SUITES, TheoremVerifier


@pytest.fixture(scope="module")
def config():
    """統合テスト用設定"""
    return Config(
        max_len=8,
        max_stones=6,
        family_max_len=10,
        additivity_max_len=5,
        log_level="ERROR"
    )


class TestIntegration:
    """統合テスト"""

    def test_all_suites(self, config):
        """全スイートが中程度の範囲で反例を持たないことのテスト"""
        verifier = TheoremVerifier(config)
        reports = verifier.run_all()

        assert [r.name for r in reports] == list(SUITES)
        for report in reports:
            assert report.passed, report.summary()

    def test_default_bounds(self):
        """全スイートが既定の範囲で反例を持たないことのテスト"""
        config = Config(log_level="ERROR")
        reports = TheoremVerifier(config).run_all()

        assert [r.name for r in reports] == list(SUITES)
        for report in reports:
            assert report.passed, report.summary()
            assert report.checked > 0
        coverage = {r.name: r.coverage for r in reports}
        assert coverage['outcome-rules'] == "positions <= 8 stones"
        assert coverage['engine-laws'] == "strips <= 10, 128 sampled triples"

    def test_census_matches_rules(self, config):
        """全数調査が Δ 規則と一致することのテスト"""
        sink = io.StringIO()
        records = list(census(config.max_len, sink))

        assert len(records) == 2 ** (config.max_len - 1) - 1
        for line, record in zip(sink.getvalue().splitlines(), records):
            data = json.loads(line)
            assert data['aw'] == data['delta'] == record.delta
            expected = "L" if record.delta > 0 else "R" if record.delta < 0 else "N"
            assert data['outcome'] == expected

        summary = census_summary(records)
        assert sum(summary['by_length'].values()) == summary['records']

    def test_value_and_search_agree(self):
        """値による勝敗と局面探索の勝敗の一致のテスト"""
        arena = Arena()
        converter = GameConverter(arena)
        searcher = PositionSearcher()
        for text in ("bww+bw", "bbww+bw", "bww+bww+bww+bbbbw", "bwwbw+bbwbw+bw", "bwbw+bwbw"):
            position = Position.parse(text)
            assert arena.outcome(converter.to_game(position)) == searcher.outcome(position)

    def test_no_star2_strip(self):
        """*2 と等価な石列が存在しないことのテスト"""
        arena = Arena()
        converter = GameConverter(arena)
        star2 = arena.nimber(2)
        for strip in enumerate_strips(9):
            assert converter.to_game(strip) != star2

    def test_sharded_matches_single_process(self, config):
        """分割実行と単一プロセス実行の一致のテスト"""
        single = run_sharded("outcome-rules", config, jobs=1)
        sharded = run_sharded("outcome-rules", config, jobs=2)

        assert sharded.passed == single.passed
        assert sharded.checked == single.checked
        assert sharded.coverage.endswith("2 shards")

    def test_cli_round_trip(self, capsys):
        """CLI の値と比較の整合のテスト"""
        assert run(["value", "bwwbw", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data['delta'] == delta(Strip("bwwbw"))
        assert data['aw'] == data['delta']
        assert data['outcome'] == Outcome.L.value

        assert run(["compare", "bwwbw", "bww"]) == EXIT_OK
        assert capsys.readouterr().out == "Equivalent\n"
