"""
テストモジュール

BIPASS ゲーム値エンジンと定理検証ハーネスのテストケースを提供します。
"""
