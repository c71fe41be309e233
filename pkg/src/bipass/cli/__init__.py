"""
CLI モジュール

コマンドラインインターフェースを提供します。
"""
