"""
原子量モジュールのテスト
"""

import pytest
from bipass.core.atomic_weight import AtomicWeightCalculator, NotAllSmallError
from bipass.core.game import Arena
from bipass.core.outcome import FarStarOrder
from bipass.core.strip import GameConverter, Strip, delta
from bipass.verify.enumeration import enumerate_strips


class TestAtomicWeightCalculator:
    """AtomicWeightCalculator クラスのテスト"""

    @pytest.fixture
    def arena(self):
        """テスト用アリーナ"""
        return Arena()

    @pytest.fixture
    def weights(self, arena):
        """テスト用計算器"""
        return AtomicWeightCalculator(arena)

    def test_initialization(self, arena):
        """初期化のテスト"""
        weights = AtomicWeightCalculator(arena, probe_margin=3)
        assert weights.probe_margin == 3

        with pytest.raises(ValueError):
            AtomicWeightCalculator(arena, probe_margin=1)

    def test_known_weights(self, arena, weights):
        """既知の原子量のテスト"""
        assert weights.atomic_weight(arena.zero) == arena.zero
        assert weights.atomic_weight(arena.star) == arena.zero
        assert weights.atomic_weight(arena.up) == arena.integer(1)
        assert weights.atomic_weight(arena.upstar) == arena.integer(1)
        assert weights.atomic_weight(arena.down) == arena.integer(-1)
        assert weights.atomic_weight(arena.kupstar(2, plus_star=True)) == arena.integer(2)

    def test_strip_weights(self, arena, weights):
        """石列の原子量のテスト"""
        converter = GameConverter(arena)
        assert weights.atomic_weight(converter.to_game(Strip("bbww"))) == arena.zero
        assert weights.atomic_weight(converter.to_game(Strip("bwww"))) == arena.integer(2)

    def test_weight_equals_delta(self, arena, weights):
        """石列の原子量が Δ に一致することのテスト"""
        converter = GameConverter(arena)
        for strip in enumerate_strips(7):
            weight = weights.atomic_weight(converter.to_game(strip))
            assert arena.as_integer(weight) == delta(strip)

    def test_not_all_small(self, arena, weights):
        """all-small でないゲームの拒否のテスト"""
        with pytest.raises(NotAllSmallError):
            weights.atomic_weight(arena.integer(1))

        with pytest.raises(ValueError):
            weights.far_star_compare(arena.integer(-2))

    def test_far_star_compare(self, arena, weights):
        """遠星との比較のテスト"""
        assert weights.far_star_compare(arena.zero) == FarStarOrder.FUZZY
        assert weights.far_star_compare(arena.star) == FarStarOrder.FUZZY
        assert weights.far_star_compare(arena.up) == FarStarOrder.GREATER
        assert weights.far_star_compare(arena.down) == FarStarOrder.LESS

    def test_far_star_equiv(self, arena, weights):
        """遠星同値のテスト"""
        assert weights.far_star_equiv(arena.up, arena.up) == True
        assert weights.far_star_equiv(arena.star, arena.nimber(2)) == True
        assert weights.far_star_equiv(arena.zero, arena.star) == True
        assert weights.far_star_equiv(arena.up, arena.zero) == False

    def test_product_up(self, arena, weights):
        """G·↑ のテスト"""
        assert weights.product_up(arena.zero) == arena.zero
        assert weights.product_up(arena.integer(1)) == arena.up
        assert weights.product_up(arena.integer(-2)) == arena.negate(arena.add(arena.up, arena.up))

    def test_probe_margin_independent(self, arena):
        """プローブの余裕によらず原子量が一致することのテスト"""
        converter = GameConverter(arena)
        narrow = AtomicWeightCalculator(arena, probe_margin=2)
        wide = AtomicWeightCalculator(arena, probe_margin=4)
        for strip in enumerate_strips(6):
            g = converter.to_game(strip)
            assert narrow.atomic_weight(g) == wide.atomic_weight(g)
