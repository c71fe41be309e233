"""
値表記の解析モジュール

value := "0" | "*" | "*" DIGITS | "{" list "|" list "}"
list  := ε | value ("," value)*
"""

from typing import TYPE_CHECKING, List

if TYPE_CHECKING:
    from bipass.core.game import Arena, GameRef

_DIGITS = "0123456789"


class ValueSyntaxError(ValueError):
    """値表記の構文エラー（position は不正文字の位置）"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ValueParser:
    """再帰下降パーサ。解析結果は construct により正準化されます"""

    def __init__(self, arena: "Arena"):
        self.arena = arena
        self.text = ""
        self.pos = 0

    def parse(self, text: str) -> "GameRef":
        """
        文字列を解析

        Args:
            text: 値表記（空白なし）

        Returns:
            正準形の GameRef
        """
        self.text = text
        self.pos = 0
        result = self._value()
        if self.pos != len(self.text):
            raise ValueSyntaxError(f"unexpected character {self.text[self.pos]!r}", self.pos)
        return result

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            found = repr(self._peek()) if self._peek() else "end of input"
            raise ValueSyntaxError(f"expected {char!r}, found {found}", self.pos)
        self.pos += 1

    def _value(self) -> "GameRef":
        char = self._peek()
        if char == "0":
            self.pos += 1
            return self.arena.zero
        if char == "*":
            self.pos += 1
            start = self.pos
            while self._peek() and self._peek() in _DIGITS:
                self.pos += 1
            digits = self.text[start:self.pos]
            return self.arena.nimber(int(digits)) if digits else self.arena.star
        if char == "{":
            self.pos += 1
            left = self._list("|")
            self._expect("|")
            right = self._list("}")
            self._expect("}")
            return self.arena.construct(left, right)
        found = repr(char) if char else "end of input"
        raise ValueSyntaxError(f"expected a value, found {found}", self.pos)

    def _list(self, terminator: str) -> List["GameRef"]:
        items: List["GameRef"] = []
        if self._peek() == terminator:
            return items
        items.append(self._value())
        while self._peek() == ",":
            self.pos += 1
            items.append(self._value())
        return items
