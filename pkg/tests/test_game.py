"""
ゲームアリーナのテスト
"""

import pytest
from bipass.core.game import Arena
from bipass.core.notation import ValueSyntaxError
from bipass.core.outcome import ComparisonResult, Outcome, Player


class TestArena:
    """Arena クラスのテスト"""

    @pytest.fixture
    def arena(self):
        """テスト用アリーナ"""
        return Arena()

    def test_initialization(self, arena):
        """初期化のテスト"""
        assert arena.format_value(arena.zero) == "0"
        assert arena.format_value(arena.star) == "*"
        assert arena.format_value(arena.up) == "{0|*}"
        assert arena.birthday(arena.zero) == 0
        assert arena.birthday(arena.up) == 2

    def test_hash_consing(self, arena):
        """等価なゲームが同じ参照になることのテスト"""
        assert arena.construct([arena.zero], [arena.zero]) == arena.star
        assert arena.construct([arena.zero], []) == arena.integer(1)
        assert arena.construct([arena.zero, arena.integer(-1)], []) == arena.integer(1)

    def test_reversible_options(self, arena):
        """可逆な選択肢の置換のテスト"""
        # {*|*} = 0
        assert arena.construct([arena.star], [arena.star]) == arena.zero
        # {0,*|*} = ↑
        assert arena.construct([arena.zero, arena.star], [arena.star]) == arena.up

    def test_negate_and_add(self, arena):
        """否定と和のテスト"""
        assert arena.negate(arena.up) == arena.down
        assert arena.negate(arena.negate(arena.upstar)) == arena.upstar
        assert arena.add(arena.up, arena.down) == arena.zero
        assert arena.add(arena.star, arena.star) == arena.zero
        assert arena.add(arena.star, arena.nimber(2)) == arena.nimber(3)
        assert arena.add(arena.integer(2), arena.integer(-3)) == arena.integer(-1)
        assert arena.add_all([]) == arena.zero

    def test_outcome(self, arena):
        """勝敗クラスのテスト"""
        assert arena.outcome(arena.zero) == Outcome.P
        assert arena.outcome(arena.star) == Outcome.N
        assert arena.outcome(arena.up) == Outcome.L
        assert arena.outcome(arena.down) == Outcome.R
        assert arena.outcome(arena.upstar) == Outcome.N

    def test_sum_outcome(self, arena):
        """和を構築しない勝敗判定のテスト"""
        assert arena.sum_outcome((arena.star, arena.star)) == Outcome.P
        assert arena.sum_outcome((arena.up, arena.nimber(2))) == Outcome.L
        assert arena.sum_outcome(()) == Outcome.P

    def test_compare(self, arena):
        """比較のテスト"""
        assert arena.compare(arena.up, arena.zero) == ComparisonResult.GREATER
        assert arena.compare(arena.down, arena.zero) == ComparisonResult.LESS
        assert arena.compare(arena.star, arena.zero) == ComparisonResult.FUZZY
        assert arena.compare(arena.up, arena.star) == ComparisonResult.FUZZY
        assert arena.compare(arena.upstar, arena.upstar) == ComparisonResult.EQUIVALENT
        assert arena.leq(arena.zero, arena.up) == True
        assert arena.leq(arena.up, arena.zero) == False

    def test_named_values(self, arena):
        """名前付きの値のテスト"""
        assert arena.nim_value(arena.nimber(2)) == 2
        assert arena.nim_value(arena.up) is None
        assert arena.as_integer(arena.integer(-3)) == -3
        assert arena.as_integer(arena.star) is None
        assert arena.kupstar(0) == arena.zero
        assert arena.kupstar(1) == arena.upstar
        assert arena.kupstar(1, plus_star=True) == arena.up
        assert arena.kupstar(2) == arena.add(arena.up, arena.up)

        with pytest.raises(ValueError):
            arena.nimber(-1)

        with pytest.raises(ValueError):
            arena.kupstar(-1)

    def test_kupstar_sums(self, arena):
        """k⇑** 族が ↑* の k 回和であることのテスト"""
        total = arena.zero
        for k in range(1, 9):
            total = arena.add(total, arena.upstar)
            assert arena.kupstar(k) == total
            assert arena.kupstar(k, plus_star=True) == arena.add(total, arena.star)

    def test_all_small(self, arena):
        """all-small 判定のテスト"""
        assert arena.is_all_small(arena.zero) == True
        assert arena.is_all_small(arena.up) == True
        assert arena.is_all_small(arena.kupstar(3, plus_star=True)) == True
        assert arena.is_all_small(arena.integer(1)) == False


class TestValueNotation:
    """値表記のテスト"""

    @pytest.fixture
    def arena(self):
        """テスト用アリーナ"""
        return Arena()

    def test_parse(self, arena):
        """値表記の解析のテスト"""
        assert arena.parse_value("0") == arena.zero
        assert arena.parse_value("*") == arena.star
        assert arena.parse_value("*2") == arena.nimber(2)
        assert arena.parse_value("{0|*}") == arena.up
        assert arena.parse_value("{0,*|0,*}") == arena.nimber(2)
        assert arena.parse_value("{|}") == arena.zero

    def test_format_round_trip(self, arena):
        """表記と解析の往復のテスト"""
        for g in (arena.upstar, arena.kupstar(3), arena.kupstar(2, plus_star=True)):
            assert arena.parse_value(arena.format_value(g)) == g

    def test_pretty(self, arena):
        """別名表記のテスト"""
        assert arena.format_value(arena.up, pretty=True) == "^"
        assert arena.format_value(arena.down, pretty=True) == "v"
        assert arena.format_value(arena.upstar, pretty=True) == "^*"
        assert arena.format_value(arena.downstar, pretty=True) == "v*"
        assert arena.format_value(arena.kupstar(2, plus_star=True), pretty=True) == "2.^*+*"
        assert arena.format_value(arena.nimber(2), pretty=True) == "*2"

    def test_syntax_error(self, arena):
        """構文エラーのテスト"""
        with pytest.raises(ValueSyntaxError):
            arena.parse_value("{0|")

        with pytest.raises(ValueSyntaxError) as excinfo:
            arena.parse_value("x")
        assert excinfo.value.position == 0

        with pytest.raises(ValueError):
            arena.parse_value("0}")

    @pytest.mark.parametrize("text", ["*²", "*٣", "*２"])
    def test_ascii_digits_only(self, arena, text):
        """ASCII 以外の数字を星のヒープサイズとして受け付けないことのテスト"""
        with pytest.raises(ValueSyntaxError) as excinfo:
            arena.parse_value(text)
        assert excinfo.value.position == 1


class TestOutcome:
    """Outcome と Player のテスト"""

    def test_partial_order(self):
        """勝敗クラスの半順序のテスト"""
        assert Outcome.L > Outcome.P
        assert Outcome.L > Outcome.N
        assert Outcome.P > Outcome.R
        assert not Outcome.N >= Outcome.P
        assert not Outcome.P >= Outcome.N

    def test_from_first_player_wins(self):
        """先手勝ちからの勝敗クラスのテスト"""
        assert Outcome.from_first_player_wins(True, True) == Outcome.N
        assert Outcome.from_first_player_wins(True, False) == Outcome.L
        assert Outcome.from_first_player_wins(False, True) == Outcome.R
        assert Outcome.from_first_player_wins(False, False) == Outcome.P

    def test_opponent(self):
        """手番交代のテスト"""
        assert Player.LEFT.opponent == Player.RIGHT
        assert Player.RIGHT.opponent == Player.LEFT
