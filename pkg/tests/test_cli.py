"""
chainscope - Command-Line and Configuration Tests

Subcommands run through ``main`` with captured output; exit codes follow
the error taxonomy.

Run with: python -m pytest tests/test_cli.py -v
"""

import sys
import os
import json

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from cli.config import RunConfig, env_overrides, load_config
from cli.main import EXIT_CAP, EXIT_FAILURE, EXIT_INPUT, EXIT_OK, EXIT_PRECONDITION, exit_code_for, main
from utils.errors import (
    ActionNotMinimalError, CertificateError, InputFormatError, ResourceCapExceeded, UnknownGeneratorError,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# =============================================================================
# CONFIGURATION
# =============================================================================

class TestConfig:

    def test_defaults(self):
        config = load_config(environ={})
        assert config.lookahead == 2
        assert config.output_format == "json"
        assert config.use_cache

    def test_environment_values(self):
        config = load_config(environ={"CHAINSCOPE_LOOKAHEAD": "4", "CHAINSCOPE_NO_CACHE": "true"})
        assert config.lookahead == 4
        assert not config.use_cache

    def test_variables_mirror_flag_names(self):
        config = load_config(environ={
            "CHAINSCOPE_WORDLEN": "3", "CHAINSCOPE_FORMAT": "text", "CHAINSCOPE_DEPTH": "4",
            "CHAINSCOPE_NO_CACHE": "0",
        })
        assert (config.word_length, config.output_format, config.depth) == (3, "text", 4)
        assert config.use_cache
        assert env_overrides({"CHAINSCOPE_WORD_LENGTH": "3", "CHAINSCOPE_USE_CACHE": "false"}) == {}
        with pytest.raises(InputFormatError):
            load_config(environ={"CHAINSCOPE_NO_CACHE": "maybe"})

    def test_flags_win_over_environment(self):
        config = load_config({"lookahead": 1, "enum_cap": None}, environ={"CHAINSCOPE_LOOKAHEAD": "4"})
        assert config.lookahead == 1
        assert config.enum_cap == RunConfig().enum_cap

    def test_empty_values_are_ignored(self):
        assert env_overrides({"CHAINSCOPE_POINT_CAP": "", "OTHER": "1"}) == {}

    def test_invalid_value(self):
        with pytest.raises(InputFormatError):
            load_config(environ={"CHAINSCOPE_ENUM_CAP": "many"})
        with pytest.raises(InputFormatError):
            load_config({"output_format": "xml"}, environ={})

    def test_env_file(self, tmp_path):
        path = tmp_path / ".env"
        path.write_text("CHAINSCOPE_MAX_LEVEL=7\n")
        try:
            config = load_config(env_file=str(path))
        finally:
            os.environ.pop("CHAINSCOPE_MAX_LEVEL", None)
        assert config.max_level == 7

    def test_limits(self):
        limits = load_config({"point_cap": 64}, environ={}).to_limits()
        assert limits.point_cap == 64


# =============================================================================
# SUBCOMMANDS
# =============================================================================

class TestCommands:

    def test_eval(self, capsys):
        code, out, _ = run(capsys, "eval", "odometer", "a", "11001.(1)")
        assert code == EXIT_OK
        assert out.strip() == "0010.(1)"

    def test_chain(self, capsys, tmp_path):
        code, out, _ = run(capsys, "chain", "odometer", ".(0)", "--depth", "3", "--lookahead", "1",
                           "--heights", "a", "--cache-dir", str(tmp_path))
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["system"] == "odometer"
        assert data["depth"] == 3
        assert [row["orderQ"] for row in data["levels"]] == ["1", "2", "4", "8"]
        assert data["verdicts"]["wild"] == "witnessed-against"
        assert data["heights"] == {"a": None}
        assert "meta" not in data

    def test_chain_with_meta(self, capsys):
        code, out, _ = run(capsys, "chain", "odometer", ".(0)", "--depth", "2", "--no-cache", "--with-meta")
        assert code == EXIT_OK
        assert set(json.loads(out)["meta"]) == {"generated_at", "elapsed_sec"}

    def test_quotients_json(self, capsys):
        code, out, _ = run(capsys, "quotients", "odometer", "--depth", "3", "--no-cache")
        assert code == EXIT_OK
        levels = json.loads(out)["levels"]
        assert [row["orderD"] for row in levels] == ["1", "1", "1", "1"]
        assert all(row["transitive"] for row in levels)
        assert levels[0]["onto_previous"] is None

    def test_quotients_depth_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("CHAINSCOPE_DEPTH", "2")
        monkeypatch.setenv("CHAINSCOPE_NO_CACHE", "1")
        code, out, _ = run(capsys, "quotients", "odometer")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["depth"] == 2
        assert len(data["levels"]) == 3

    def test_quotients_text(self, capsys):
        code, out, _ = run(capsys, "quotients", "odometer", "--depth", "2", "--no-cache", "--format", "text")
        assert code == EXIT_OK
        assert "orderQ" in out.splitlines()[0]

    def test_probe_coe(self, capsys):
        code, out, _ = run(capsys, "probe", "coe", "--g", "coe-pair-G", "--h", "coe-pair-H",
                           "--level", "1", "--wordlen", "2", "--no-cache")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["probe"] == "coe"
        assert data["verified"]
        assert data["result"]["complete"]
        assert {"generator": "a2", "block": "1T", "word": "e"} in data["result"]["alpha"]

    def test_probe_nonhausdorff(self, capsys):
        code, out, _ = run(capsys, "probe", "nonhausdorff", "pink:2,3", "--g", "a3", "--x", ".(1)", "--depth", "2")
        assert code == EXIT_OK
        result = json.loads(out)["result"]
        assert result["succeeded"]
        assert [level["W"] for level in result["levels"]] == ["01T", "101T", "1101T"]

    def test_probe_conjugacy(self, capsys):
        code, out, _ = run(capsys, "probe", "conjugacy", "odometer", "--x", ".(0)", "--y", ".(1)", "--depth", "3")
        assert code == EXIT_OK
        assert len(json.loads(out)["result"]["words"]) == 4

    def test_cache_stats_and_clear(self, capsys, tmp_path):
        run(capsys, "chain", "odometer", ".(0)", "--depth", "2", "--lookahead", "0", "--cache-dir", str(tmp_path))
        code, out, _ = run(capsys, "cache", "stats", "--cache-dir", str(tmp_path))
        assert code == EXIT_OK
        stats = json.loads(out)
        assert stats["systems"] == 1
        assert stats["total"] == stats["Q"] + stats["D"] > 0
        code, out, _ = run(capsys, "cache", "clear", "--cache-dir", str(tmp_path))
        assert json.loads(out)["removed"] == stats["total"]
        _, out, _ = run(capsys, "cache", "stats", "--cache-dir", str(tmp_path))
        assert json.loads(out)["total"] == 0


# =============================================================================
# EXIT CODES
# =============================================================================

class TestExitCodes:

    def test_unknown_generator(self, capsys):
        code, _, err = run(capsys, "eval", "odometer", "b", ".(0)")
        assert code == EXIT_INPUT
        assert "error: unknown generator" in err

    def test_unknown_system(self, capsys):
        code, _, _ = run(capsys, "eval", "no-such-system", "a", ".(0)")
        assert code == EXIT_INPUT

    def test_malformed_point(self, capsys):
        code, _, _ = run(capsys, "eval", "odometer", "a", "0101")
        assert code == EXIT_INPUT

    def test_depth_above_max_level(self, capsys):
        code, _, _ = run(capsys, "quotients", "odometer", "--depth", "11", "--no-cache")
        assert code == EXIT_INPUT

    def test_point_cap(self, capsys):
        code, _, _ = run(capsys, "chain", "odometer", ".(0)", "--depth", "3", "--point-cap", "4", "--no-cache")
        assert code == EXIT_CAP

    def test_point_not_fixed(self, capsys):
        code, _, _ = run(capsys, "probe", "nonhausdorff", "pink:2,3", "--g", "a1", "--x", ".(1)", "--depth", "2")
        assert code == EXIT_PRECONDITION

    def test_intransitive_system_file(self, capsys, tmp_path):
        path = tmp_path / "fixed.txt"
        path.write_text("degree = 2\ngen a = [0,1] (a, e)\n")
        code, _, err = run(capsys, "chain", str(path), ".(0)", "--depth", "2", "--no-cache")
        assert code == EXIT_PRECONDITION
        assert "not minimal" in err

    def test_mapping(self):
        assert exit_code_for(UnknownGeneratorError("b")) == EXIT_INPUT
        assert exit_code_for(ResourceCapExceeded("point_cap", 4)) == EXIT_CAP
        assert exit_code_for(ActionNotMinimalError(1, 1, 2)) == EXIT_PRECONDITION
        assert exit_code_for(CertificateError("forged")) == EXIT_FAILURE
