"""
BIPASS ルールモジュールのテスト
"""

import pytest
from bipass.core.game import Arena
from bipass.core.outcome import Outcome, Player
from bipass.core.strip import (
    GameConverter,
    Larva,
    Position,
    Strip,
    StripSyntaxError,
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


def strips(*texts):
    return frozenset(Strip(t) for t in texts)


class TestStrip:
    """Strip クラスのテスト"""

    def test_parse(self):
        """石列表記の解析のテスト"""
        assert Strip.parse("BWW") == Strip("bww")
        assert Strip.parse("wbw") == Strip("bw")
        assert Strip.parse("wb") == Strip("")
        assert Strip.parse("") == Strip("")

    def test_syntax_error(self):
        """不正な文字のテスト"""
        with pytest.raises(StripSyntaxError) as excinfo:
            Strip.parse("bxw")
        assert excinfo.value.position == 1

    def test_alive_form_required(self):
        """生存形でない石列の拒否のテスト"""
        with pytest.raises(ValueError):
            Strip("wb")

        with pytest.raises(ValueError):
            Strip("bwb")

    def test_counts(self):
        """石数のテスト"""
        strip = Strip("bwwwbw")
        assert strip.blacks == 2
        assert strip.whites == 4
        assert len(strip) == 6
        assert bool(Strip("")) == False


class TestRules:
    """着手規則のテスト"""

    def test_normalize(self):
        """生存正規化のテスト"""
        assert normalize("wwbbww") == Strip("bbww")
        assert normalize("wbwb") == Strip("bw")
        assert normalize("wwbb") == Strip("")
        assert normalize("") == Strip("")

    def test_options(self):
        """着手先のテスト"""
        strip = Strip("bwwwbw")
        assert options(strip, Player.LEFT) == strips("bwwbw", "bwbw", "bbw", "bwwww")
        assert options(strip, Player.RIGHT) == strips("bwwbw", "bwwww")
        assert options(Strip("bw"), Player.LEFT) == strips("")
        assert options(Strip(""), Player.LEFT) == frozenset()

    def test_conjugate(self):
        """共役のテスト"""
        assert conjugate(Strip("bww")) == Strip("bbw")
        assert conjugate(conjugate(Strip("bwwwbw"))) == Strip("bwwwbw")
        for strip in (Strip("bwwbw"), Strip("bbwbww")):
            assert options(conjugate(strip), Player.LEFT) == frozenset(
                conjugate(s) for s in options(strip, Player.RIGHT)
            )

    def test_delta(self):
        """Δ 超過のテスト"""
        assert delta(Strip("bw")) == 0
        assert delta(Strip("bww")) == 1
        assert delta(Strip("bbbw")) == -2
        assert delta(Position.parse("bww+bwww")) == 3

    def test_unit_bypass(self):
        """ユニットバイパスのテスト"""
        assert unit_bypass(Strip("bwbw"), Player.LEFT) == Strip("bww")
        assert unit_bypass(Strip("bwbw"), Player.RIGHT) == Strip("bbw")
        assert has_unit_bypass(Strip("bw"), Player.LEFT) == False
        assert unit_bypass(Strip("bw"), Player.LEFT) is None

    def test_classify_larvae(self):
        """幼虫分類のテスト"""
        assert classify_larvae(Strip("bw")) == Larva.BOTH
        assert classify_larvae(Strip("bww")) == Larva.BLACK_HEADED
        assert classify_larvae(Strip("bbw")) == Larva.WHITE_HEADED
        assert classify_larvae(Strip("bbww")) == Larva.NEITHER

        with pytest.raises(ValueError):
            classify_larvae(Strip(""))

    def test_single_strip_outcome(self):
        """単一石列の勝敗クラスのテスト"""
        assert single_strip_outcome(Strip("bww")) == Outcome.L
        assert single_strip_outcome(Strip("bbw")) == Outcome.R
        assert single_strip_outcome(Strip("bw")) == Outcome.N
        assert single_strip_outcome(Strip("")) == Outcome.P

    def test_family(self):
        """k⇑** 族の石列のテスト"""
        assert family_strip(1, 1) == Strip("bwwbw")
        assert family_strip(0, 0) == Strip("bw")
        assert family_parameters(Strip("bwwbw")) == (1, 1)
        assert family_parameters(Strip("bw")) == (0, 0)
        assert family_parameters(Strip("bbww")) is None
        assert family_parameters(Strip("bwbbw")) is None
        assert mirror_family_parameters(Strip("bbw")) == (0, 1)

        with pytest.raises(ValueError):
            family_strip(-1, 0)


class TestPosition:
    """Position クラスのテスト"""

    def test_parse(self):
        """局面表記の解析のテスト"""
        position = Position.parse("bbww+bw")
        assert position.strips == (Strip("bw"), Strip("bbww"))
        assert str(position) == "bw+bbww"
        assert position.stones == 6
        assert len(position) == 2

    def test_empty(self):
        """空局面のテスト"""
        assert Position.parse("0") == Position()
        assert str(Position()) == "0"
        assert Position.parse("wb") == Position()

    @pytest.mark.parametrize("text, position", [
        ("bw+", 3),
        ("+bw", 0),
        ("bw++bw", 3),
        ("bw+ +bw", 3),
    ])
    def test_empty_strip_rejected(self, text, position):
        """'+' の間が空の局面表記の拒否のテスト"""
        with pytest.raises(StripSyntaxError) as excinfo:
            Position.parse(text)
        assert excinfo.value.position == position
        assert str(excinfo.value).startswith("empty strip")

    def test_syntax_error_offset(self):
        """不正な文字の位置が局面表記全体での位置になることのテスト"""
        with pytest.raises(StripSyntaxError) as excinfo:
            Position.parse("bw+bxw")
        assert excinfo.value.position == 4

    def test_invalid_order(self):
        """正規順序でない石列の拒否のテスト"""
        with pytest.raises(ValueError):
            Position((Strip("bbww"), Strip("bw")))

        with pytest.raises(ValueError):
            Position((Strip(""),))

    def test_options(self):
        """局面の着手先のテスト"""
        assert Position.parse("bw").options(Player.LEFT) == frozenset({Position()})
        assert Position.parse("bw+bw").options(Player.RIGHT) == frozenset({Position.parse("bw")})
        assert Position().options(Player.LEFT) == frozenset()

    def test_add(self):
        """局面の和のテスト"""
        assert Position.parse("bww") + Position.parse("bw") == Position.parse("bw+bww")


class TestGameConverter:
    """GameConverter クラスのテスト"""

    @pytest.fixture
    def converter(self):
        """テスト用変換器"""
        return GameConverter(Arena())

    def test_small_strips(self, converter):
        """小さな石列の値のテスト"""
        arena = converter.arena
        assert converter.to_game(Strip("")) == arena.zero
        assert converter.to_game(Strip("bw")) == arena.star
        assert converter.to_game(Strip("bww")) == arena.up
        assert converter.to_game(Strip("bbw")) == arena.down

    def test_position_is_sum(self, converter):
        """局面の値が石列の値の和であることのテスト"""
        arena = converter.arena
        position = Position.parse("bww+bw")
        assert converter.to_game(position) == arena.add(arena.up, arena.star)
        assert converter.to_game(Position()) == arena.zero

    def test_conjugate_is_negation(self, converter):
        """共役が否定に対応することのテスト"""
        arena = converter.arena
        for text in ("bwww", "bwwbw", "bbwbww"):
            strip = Strip(text)
            assert converter.to_game(conjugate(strip)) == arena.negate(converter.to_game(strip))

    def test_winning_moves(self, converter):
        """勝ち手のテスト"""
        position = Position.parse("bbww+bw")
        assert converter.winning_moves(position, Player.LEFT) == frozenset(
            {Position.parse("bw+bwbw")}
        )
