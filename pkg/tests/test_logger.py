"""
ログ機能のテスト
"""

from bipass.config.validators import Report
from bipass.utils.logger import DEBUG_LOG_FILE, Logger


class TestLogger:
    """Logger クラスのテスト"""

    def test_passed_report(self, tmp_path):
        """反例のないレポートが INFO で記録されることのテスト"""
        log_file = tmp_path / "bipass.log"
        logger = Logger("INFO", log_file=str(log_file))
        logger.log_report(Report(name="table1", checked=9, elapsed=0.5))

        text = log_file.read_text(encoding="utf-8")
        assert "INFO" in text
        assert "Suite table1 passed: checked 9 in 0.50s" in text

    def test_failed_report(self, tmp_path):
        """反例のあるレポートが最初の反例とともに WARNING で記録されることのテスト"""
        log_file = tmp_path / "bipass.log"
        logger = Logger("WARNING", log_file=str(log_file))
        report = Report(name="lemma2", checked=5)
        report.fail("bwbw: x")
        report.fail("bbww: y")
        logger.log_report(report)

        text = log_file.read_text(encoding="utf-8")
        assert "WARNING" in text
        assert "Suite lemma2 failed (2 failures)" in text
        assert "first: bwbw: x" in text
        assert "bbww: y" not in text

    def test_level_filters_file(self, tmp_path):
        """ログレベル未満のメッセージがファイルに書かれないことのテスト"""
        log_file = tmp_path / "bipass.log"
        logger = Logger("ERROR", log_file=str(log_file))
        logger.log_report(Report(name="table1", checked=9))
        logger.error("Census stopped")

        assert log_file.read_text(encoding="utf-8").splitlines()[-1].endswith("Census stopped")
        assert "table1" not in log_file.read_text(encoding="utf-8")

    def test_debug_log(self, tmp_path, monkeypatch):
        """デバッグログに所要時間が記録されることのテスト"""
        monkeypatch.chdir(tmp_path)
        logger = Logger("WARNING", enable_debug=True)
        logger.log_performance("table1", 0.25)

        text = (tmp_path / DEBUG_LOG_FILE).read_text(encoding="utf-8")
        assert "Performance: table1 took 0.2500 seconds" in text

    def test_console_is_stderr(self, capsys):
        """コンソールログが標準出力を汚さないことのテスト"""
        logger = Logger("INFO")
        logger.info("Census summary")

        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Census summary" in captured.err
