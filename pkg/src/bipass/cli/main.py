"""
CLI エントリポイント

コマンドラインからゲーム値エンジンと定理検証ハーネスを実行するためのインターフェースを提供します。
標準出力には決定的な結果のみを書き、ログと所要時間は標準エラーへ出します。
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

from bipass.config.config import Config
from bipass.config.validators import Report, ValueSummary
from bipass.core.atomic_weight import AtomicWeightCalculator
from bipass.core.ferrers import Partition, from_ferrers, to_ferrers
from bipass.core.game import Arena
from bipass.core.strip import GameConverter, Position, Strip, delta
from bipass.utils.logger import Logger
from bipass.verify.census import census, census_summary
from bipass.verify.search import PositionSearcher, misere_outcome
from bipass.verify.sharding import run_sharded
from bipass.verify.theorems import SUITES, TheoremVerifier

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """計算前に検出した引数の誤り"""


def _dump(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, separators=(",", ":"))


def _report_data(report: Report) -> Dict[str, Any]:
    return {
        'name': report.name,
        'passed': report.passed,
        'checked': report.checked,
        'failures': report.failures,
        'coverage': report.coverage,
    }


def build_parser() -> argparse.ArgumentParser:
    """引数パーサを構築"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON で出力")
    common.add_argument(
        "--pretty",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="値表記で ^, v, k.^* などの別名を使う（既定: 有効）",
    )
    common.add_argument("--jobs", type=int, default=1, help="局面列挙の並列ワーカー数")
    common.add_argument("--verbose", "-v", action="store_true", help="詳細ログを表示")
    common.add_argument("--log-file", help="ログをファイルにも書く")

    parser = argparse.ArgumentParser(
        prog="bipass",
        description="BIPASS ゲーム値エンジンと定理検証ハーネス",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
使用例:
  bipass value bwww
  bipass value bbww+bw --json
  bipass compare bww bbw
  bipass census --max-len 10 --out census.jsonl
  bipass search-star2 --max-stones 8 --jobs 4
  bipass ferrers bwwwbw
  bipass ferrers --from 4,1

  # 全ての定理を検証
  bipass verify
        """,
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    for name, help_text in (
        ("value", "局面の正準形の値"),
        ("aw", "局面の原子量"),
        ("outcome", "局面の勝敗クラス (L/R/N/P)"),
        ("misere", "局面の逆形での勝敗クラス"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("position", metavar="POS", help="'+' 区切りの局面（例: bbww+bw）")

    sub = commands.add_parser("compare", parents=[common], help="2つの局面の比較")
    sub.add_argument("left", metavar="POS", help="比較する局面")
    sub.add_argument("right", metavar="POS", help="比較される局面")

    sub = commands.add_parser("census", parents=[common], help="石列の全数調査 (JSONL)")
    sub.add_argument("--max-len", type=int, default=None, help="石列の最大長")
    sub.add_argument("--out", type=str, default=None, help="出力 JSONL ファイルパス（省略時は標準出力）")

    sub = commands.add_parser("search-star2", parents=[common], help="値 *2 の局面の探索")
    sub.add_argument("--max-stones", type=int, default=None, help="局面の最大総石数")

    commands.add_parser("table1", parents=[common], help="5石以下の石列の値の表を検証")

    sub = commands.add_parser("family", parents=[common], help="k⇑** 族の特徴付けを検証")
    sub.add_argument("--max-len", type=int, default=None, help="族の石列の最大長")

    sub = commands.add_parser("misere-two-ahead", parents=[common], help="逆形の2歩先ルールを検証")
    sub.add_argument("--max-stones", type=int, default=None, help="局面の最大総石数")

    sub = commands.add_parser("ferrers", parents=[common], help="石列と Ferrers 図形の変換")
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("strip", metavar="STRIP", nargs="?", help="石列")
    group.add_argument("--from", dest="rows", metavar="ROWS", help="行の長さ（例: 4,1）")

    sub = commands.add_parser("verify", parents=[common], help="定理検証スイートを実行")
    sub.add_argument(
        "--suite",
        action="append",
        choices=list(SUITES),
        default=None,
        help="実行するスイート（複数指定可、省略時は全て）",
    )
    return parser


def _parse_position(text: str) -> Position:
    try:
        return Position.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _make_config(args: argparse.Namespace) -> Config:
    overrides: Dict[str, Any] = {
        'pretty': args.pretty,
        'jobs': args.jobs,
        'log_level': "DEBUG" if args.verbose else "INFO",
        'log_file': args.log_file,
    }
    if getattr(args, "max_stones", None) is not None:
        overrides['max_stones'] = args.max_stones
    if getattr(args, "max_len", None) is not None:
        if args.command == "family":
            overrides['family_max_len'] = args.max_len
        else:
            overrides['max_len'] = args.max_len
    try:
        return Config(**overrides)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _emit_reports(reports: List[Report], as_json: bool) -> int:
    if as_json:
        data = [_report_data(r) for r in reports]
        print(_dump(data[0] if len(data) == 1 else data))
    else:
        for report in reports:
            print(report.summary())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURES


def _value_command(args: argparse.Namespace, config: Config, arena: Arena) -> int:
    position = _parse_position(args.position)
    converter = GameConverter(arena)
    g = converter.to_game(position)
    text = arena.format_value(g, pretty=config.pretty)
    if args.command == "outcome":
        outcome = arena.outcome(g).value
        print(_dump({'outcome': outcome}) if args.json else outcome)
        return EXIT_OK

    weights = AtomicWeightCalculator(arena, config.far_star_margin)
    atomic_weight = weights.atomic_weight(g)
    integer = arena.as_integer(atomic_weight)
    aw = integer if integer is not None else arena.format_value(atomic_weight, pretty=config.pretty)
    if args.command == "aw":
        print(_dump({'aw': aw}) if args.json else aw)
        return EXIT_OK

    summary = ValueSummary(value=text, delta=delta(position), aw=aw, outcome=arena.outcome(g).value)
    print(_dump(summary.dict()) if args.json else text)
    return EXIT_OK


def _compare_command(args: argparse.Namespace, arena: Arena) -> int:
    left = _parse_position(args.left)
    right = _parse_position(args.right)
    converter = GameConverter(arena)
    result = arena.compare(converter.to_game(left), converter.to_game(right)).value
    print(_dump({'result': result}) if args.json else result)
    return EXIT_OK


def _misere_command(args: argparse.Namespace) -> int:
    position = _parse_position(args.position)
    outcome = misere_outcome(position, PositionSearcher(misere=True)).value
    print(_dump({'outcome': outcome}) if args.json else outcome)
    return EXIT_OK


def _ferrers_command(args: argparse.Namespace) -> int:
    try:
        if args.rows is not None:
            partition = Partition.parse(args.rows)
            strip = from_ferrers(partition)
        else:
            strip = Strip.parse(args.strip)
            partition = to_ferrers(strip)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if args.json:
        print(_dump({'strip': strip.text, 'rows': list(partition.rows)}))
    else:
        print(strip.text if args.rows is not None else str(partition))
    return EXIT_OK


def _census_command(args: argparse.Namespace, config: Config, arena: Arena, logger: Logger) -> int:
    margin = config.far_star_margin
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as sink:
                records = list(census(config.max_len, sink, arena, config.pretty, margin))
        else:
            records = list(census(config.max_len, sys.stdout, arena, config.pretty, margin))
    except ValueError as e:
        logger.error(f"Census stopped: {e}")
        return EXIT_FAILURES
    summary = census_summary(records)
    logger.info(f"Census summary: {summary}")
    if args.out:
        written = f"{summary['records']} records written to {args.out}"
        print(_dump(summary) if args.json else written)
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    コマンドを実行

    Args:
        argv: コマンドライン引数（省略時は sys.argv[1:]）

    Returns:
        終了コード（0: 成功, 1: 反例あり, 2: 引数の誤り）
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        config = _make_config(args)
        logger = Logger(config.log_level, config.enable_debug_log, config.log_file)
        arena = Arena()

        if args.command in ("value", "aw", "outcome"):
            return _value_command(args, config, arena)
        if args.command == "compare":
            return _compare_command(args, arena)
        if args.command == "misere":
            return _misere_command(args)
        if args.command == "ferrers":
            return _ferrers_command(args)
        if args.command == "census":
            return _census_command(args, config, arena, logger)

        suites = {
            "table1": ["table1"],
            "family": ["family"],
            "search-star2": ["star2"],
            "misere-two-ahead": ["misere-two-ahead"],
        }.get(args.command) or args.suite or list(SUITES)
        if config.jobs > 1:
            reports = [run_sharded(suite, config, config.jobs) for suite in suites]
        else:
            verifier = TheoremVerifier(config, arena)
            reports = [verifier.run_suite(suite) for suite in suites]
        return _emit_reports(reports, args.json)
    except UsageError as e:
        print(f"bipass: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
