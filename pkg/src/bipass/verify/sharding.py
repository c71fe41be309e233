"""
分割実行モジュール

局面列挙をワーカープロセスに分割し、ワーカーごとに独立したアリーナで検証します。
レポートは件数の和と反例の連結で統合します。
"""

from functools import reduce
from multiprocessing import Pool
from typing import Any, Dict, Optional, Tuple

from bipass.config.config import Config
from bipass.config.validators import Report
from bipass.utils.logger import Logger
from bipass.verify.enumeration import Shard
from bipass.verify.theorems import SHARDABLE, SUITES, TheoremVerifier


def _run_shard(task: Tuple[str, Dict[str, Any], Optional[Shard]]) -> Dict[str, Any]:
    suite, config_data, shard = task
    verifier = TheoremVerifier(Config(**config_data))
    return verifier.run_suite(suite, shard=shard).dict()


def run_sharded(suite: str, config: Config, jobs: Optional[int] = None) -> Report:
    """
    スイートを jobs 個のワーカーで分割実行

    Args:
        suite: SUITES のキー
        config: 設定オブジェクト
        jobs: ワーカー数（省略時は config.jobs）

    Returns:
        統合したレポート
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {sorted(SUITES)}")
    jobs = jobs or config.jobs
    if jobs > 1 and suite not in SHARDABLE:
        logger = Logger(config.log_level, config.enable_debug_log, config.log_file)
        logger.warning(f"Suite {suite} does not enumerate positions; running it in one process")
    if jobs <= 1 or suite not in SHARDABLE:
        return TheoremVerifier(config).run_suite(suite)

    config_data = config.dict()
    tasks = [(suite, config_data, (index, jobs)) for index in range(jobs)]
    with Pool(processes=jobs) as pool:
        results = pool.map(_run_shard, tasks)
    reports = [Report(**data) for data in results]
    merged = reduce(Report.merge, reports)
    # shard ごとの範囲表記を除いた範囲
    merged.coverage = merged.coverage.split(", shard")[0] + f", {jobs} shards"
    return merged
