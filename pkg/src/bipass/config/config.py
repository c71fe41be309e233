"""
設定管理モジュール

ゲーム値エンジンと定理検証ハーネスの設定クラスと検証機能を提供します。
"""

from typing import Optional

from pydantic import BaseModel, Field, validator


class Config(BaseModel):
    """検証ハーネスの設定クラス"""

    # 列挙範囲パラメータ
    max_len: int = Field(
        default=10,
        ge=2,
        le=16,
        description="石列の全数調査・原子量検証の最大長"
    )
    max_stones: int = Field(
        default=8,
        ge=2,
        le=12,
        description="局面（石列の多重集合）の最大総石数"
    )
    family_max_len: int = Field(
        default=12,
        ge=2,
        le=16,
        description="k⇑** 族の順方向検証の最大長"
    )
    additivity_max_len: int = Field(
        default=6,
        ge=2,
        le=10,
        description="原子量の加法性・定義性質を検証する石列の最大長"
    )

    # 遠星プローブ
    far_star_margin: int = Field(
        default=2,
        ge=2,
        le=8,
        description="遠星プローブのヒープサイズ N = 誕生日 + margin"
    )

    # 出力設定
    pretty: bool = Field(
        default=True,
        description="値表記で ^, v, k.^* などの別名を使う"
    )
    jobs: int = Field(
        default=1,
        ge=1,
        le=64,
        description="局面列挙を分割して並列実行するワーカー数"
    )

    # ログ設定
    log_level: str = Field(
        default="INFO",
        description="ログレベル"
    )
    enable_debug_log: bool = Field(
        default=False,
        description="デバッグログ有効化"
    )
    log_file: Optional[str] = Field(
        default=None,
        description="ログファイルパス（Noneの場合はコンソールのみ）"
    )

    @validator('log_level')
    def validate_log_level(cls, v):
        """ログレベルの妥当性を検証"""
        valid_levels = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
        if v.upper() not in valid_levels:
            raise ValueError(f'log_level must be one of {valid_levels}')
        return v.upper()

    class Config:
        """Pydantic設定"""
        validate_assignment = True


class ConfigValidator:
    """設定値の妥当性検証クラス"""

    @staticmethod
    def validate_bounds(config: Config) -> bool:
        """列挙範囲の整合性を検証"""
        if config.additivity_max_len > config.max_len:
            raise ValueError("additivity_max_len must be <= max_len")
        return True

    @staticmethod
    def validate_probe(config: Config) -> bool:
        """遠星プローブの妥当性を検証"""
        if config.far_star_margin < 2:
            raise ValueError("far_star_margin must be >= 2")
        return True

    @staticmethod
    def validate_all(config: Config) -> bool:
        """全設定値の妥当性を検証"""
        ConfigValidator.validate_bounds(config)
        ConfigValidator.validate_probe(config)
        return True
