"""
データ検証モジュール

全数調査レコード、値の要約、検証レポートのモデル定義と検証機能を提供します。
"""

from typing import List, Union

from pydantic import BaseModel, Field, validator

_OUTCOME_TAGS = ['L', 'R', 'N', 'P']


class CensusRecord(BaseModel):
    """全数調査の1行（JSONL のキー順はフィールド順）"""

    strip: str = Field(
        description="石列の表記"
    )
    length: int = Field(
        ge=0,
        description="石の数"
    )
    delta: int = Field(
        description="Δ 超過（白石数 - 黒石数）"
    )
    outcome: str = Field(
        description="勝敗クラス"
    )
    value: str = Field(
        description="正準形の値表記"
    )
    aw: int = Field(
        description="原子量"
    )

    @validator('outcome')
    def validate_outcome(cls, v):
        """勝敗クラスの妥当性を検証"""
        if v not in _OUTCOME_TAGS:
            raise ValueError(f"outcome must be one of {_OUTCOME_TAGS}")
        return v

    @validator('aw')
    def validate_aw(cls, v, values):
        """原子量と Δ の一致を検証（不一致は全数調査を止める失敗）"""
        if 'delta' in values and v != values['delta']:
            raise ValueError(f"atomic weight {v} differs from delta {values['delta']}")
        return v


class ValueSummary(BaseModel):
    """value コマンドの出力モデル"""

    value: str = Field(
        description="値表記"
    )
    delta: int = Field(
        description="Δ 超過"
    )
    aw: Union[int, str] = Field(
        description="原子量（整数でなければ値表記）"
    )
    outcome: str = Field(
        description="勝敗クラス"
    )

    @validator('outcome')
    def validate_outcome(cls, v):
        """勝敗クラスの妥当性を検証"""
        if v not in _OUTCOME_TAGS:
            raise ValueError(f"outcome must be one of {_OUTCOME_TAGS}")
        return v


class Report(BaseModel):
    """定理検証レポート"""

    name: str = Field(
        description="検証項目名"
    )
    checked: int = Field(
        default=0,
        ge=0,
        description="検査した件数"
    )
    failures: List[str] = Field(
        default_factory=list,
        description="反例（局面表記と失敗した関係の両辺）"
    )
    elapsed: float = Field(
        default=0.0,
        ge=0.0,
        description="所要時間 [s]"
    )
    coverage: str = Field(
        default="",
        description="検査した範囲"
    )

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        """反例を追加"""
        self.failures.append(message)

    def merge(self, other: "Report") -> "Report":
        """分割実行したレポートを統合（件数は和、反例は連結）"""
        if other.name != self.name:
            raise ValueError(f"cannot merge report {other.name!r} into {self.name!r}")
        return Report(
            name=self.name,
            checked=self.checked + other.checked,
            failures=self.failures + other.failures,
            elapsed=self.elapsed + other.elapsed,
            coverage=self.coverage or other.coverage,
        )

    def summary(self) -> str:
        """所要時間を含まない決定的な要約"""
        status = "OK" if self.passed else "FAILED"
        lines = [f"{self.name}: {status} checked={self.checked} failures={len(self.failures)}"
                 + (f" ({self.coverage})" if self.coverage else "")]
        lines.extend(f"  {failure}" for failure in self.failures)
        return "\n".join(lines)
