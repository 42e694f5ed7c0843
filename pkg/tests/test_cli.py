import json
import math
import os
import struct
import subprocess
import sys

import pytest

from nblab import cli
from nblab.criterion import BasisKind, BasisSelection, DistanceReport, SolveMethod

import oracles


def run_cli(*args, env_extra=None, timeout=600):
    env = dict(os.environ)
    env.pop(cli.CACHE_DIR_ENV, None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "nblab.cli", *args],
        capture_output=True,
        text=True,
        timeout=timeout,
        env=env,
    )


class TestUsage:
    def test_help_exits_zero(self):
        r = run_cli("--help")
        assert r.returncode == 0
        for sub in ("distance", "residual", "verify", "gram"):
            assert sub in r.stdout

    def test_subcommand_help(self):
        r = run_cli("distance", "--help")
        assert r.returncode == 0
        assert "--basis" in r.stdout

    def test_no_command_is_usage_error(self):
        assert run_cli().returncode == 64

    def test_bad_flag_value(self):
        assert run_cli("distance", "--L", "0").returncode == 64
        assert run_cli("distance", "--L", "abc").returncode == 64
        assert run_cli("distance", "--method", "magic").returncode == 64

    def test_unknown_suite(self):
        assert run_cli("verify", "bogus").returncode == 64


class TestDistanceCommand:
    def test_header_and_golden_row(self):
        r = run_cli("distance", "--L", "2", "--threads", "1")
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert lines[0] == "L,basis,d2,a_est,cond,ridge,method"
        fields = lines[1].split(",")
        assert fields[0] == "2"
        assert fields[1] == "exclude-one"
        assert abs(float(fields[2]) - oracles.D2_L2) < 1e-10
        assert fields[6] == "ls"

    def test_range_and_list_syntax(self):
        r = run_cli("distance", "--L", "2..5,8", "--threads", "1")
        got = [line.split(",")[0] for line in r.stdout.splitlines()[1:]]
        assert got == ["2", "3", "4", "5", "8"]

    def test_both_methods_two_rows_per_cutoff(self):
        r = run_cli("distance", "--L", "3,6", "--method", "both", "--threads", "1")
        rows = [line.split(",") for line in r.stdout.splitlines()[1:]]
        assert [(x[0], x[6]) for x in rows] == [
            ("3", "det"),
            ("3", "ls"),
            ("6", "det"),
            ("6", "ls"),
        ]

    def test_byte_identical_across_runs_and_threads(self):
        a = run_cli("distance", "--L", "2..20", "--threads", "1")
        b = run_cli("distance", "--L", "2..20", "--threads", "1")
        c = run_cli("distance", "--L", "2..20", "--threads", "4")
        assert a.stdout == b.stdout == c.stdout
        assert a.returncode == 0

    def test_json_format(self):
        r = run_cli("distance", "--L", "4", "--format", "json", "--threads", "1")
        payload = json.loads(r.stdout)
        assert isinstance(payload, list) and len(payload) == 1
        row = payload[0]
        assert row["L"] == 4
        assert 0.0 <= row["d2"] <= 1.0
        assert row["method"] == "ls"

    def test_truncated_entries_via_N(self):
        r = run_cli("distance", "--L", "2", "--N", "100000", "--threads", "1")
        assert r.returncode == 0
        d2 = float(r.stdout.splitlines()[1].split(",")[2])
        assert abs(d2 - oracles.D2_L2) < 1.0 / 100_001 + 1e-10

    def test_tol_cross_method_gate(self):
        ok = run_cli(
            "distance", "--L", "10", "--method", "both",
            "--tol", "1e-8", "--threads", "1",
        )
        assert ok.returncode == 0
        bad = run_cli(
            "distance", "--L", "10", "--method", "both",
            "--tol", "1e-18", "--threads", "1",
        )
        assert bad.returncode == 1
        assert "disagreement" in bad.stderr

    def test_degraded_solve_exits_two(self, monkeypatch, capsys):
        degraded = DistanceReport(
            L=5,
            basis=BasisSelection(BasisKind.EXCLUDE_ONE),
            d2=0.1,
            method=SolveMethod.LEAST_SQUARES,
            cond_estimate=1e15,
            ridge_used=1e-12,
            a_est=0.1 * math.log(5),
        )
        monkeypatch.setattr(cli, "distance_sweep", lambda *a, **k: [degraded])
        code = cli.main(["distance", "--L", "5", "--threads", "1"])
        assert code == 2
        out = capsys.readouterr().out
        assert ",1e-12," in out

    def test_solver_error_row_exits_one(self, monkeypatch, capsys):
        failed = DistanceReport(
            L=7,
            basis=BasisSelection(BasisKind.EXCLUDE_ONE),
            d2=float("nan"),
            method=SolveMethod.LEAST_SQUARES,
            cond_estimate=float("inf"),
            ridge_used=0.0,
            a_est=float("nan"),
            error="factorization failed at every ridge level",
        )
        monkeypatch.setattr(cli, "distance_sweep", lambda *a, **k: [failed])
        code = cli.main(["distance", "--L", "7", "--threads", "1"])
        assert code == 1
        assert "factorization" in capsys.readouterr().err


class TestResidualCommand:
    def test_golden_value(self):
        r = run_cli("residual", "--L", "2", "--eps", "0", "--threads", "1")
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert lines[0] == "L,eps,residual"
        l, eps, value = lines[1].split(",")
        assert (l, eps) == ("2", "0.0")
        assert abs(float(value) - oracles.MOEBIUS_RESIDUAL_L2) < 1e-10

    def test_eps_grid(self):
        r = run_cli("residual", "--L", "5,10", "--eps", "0,0.1", "--threads", "1")
        rows = r.stdout.splitlines()[1:]
        assert len(rows) == 4


class TestVerifyCommand:
    def test_moebius_suite_json(self):
        r = run_cli("verify", "moebius")
        assert r.returncode == 0
        payload = json.loads(r.stdout)
        assert all(item["pass"] for item in payload)
        assert all("max_residual" in item and "budget" in item for item in payload)

    def test_failing_suite_exits_one(self, monkeypatch, capsys):
        import nblab.analytic as analytic

        real = analytic.run_suite("moebius")
        import dataclasses

        broken = [dataclasses.replace(real[0], passed=False)] + real[1:]
        monkeypatch.setattr(cli, "run_suite", lambda name: broken)
        assert cli.main(["verify", "moebius"]) == 1
        payload = json.loads(capsys.readouterr().out)
        assert payload[0]["pass"] is False


class TestGramCommand:
    def test_fill_report_and_idempotence(self, tmp_path):
        cache = tmp_path / "g.nbbg"
        first = run_cli("gram", "--L", "10", "--cache", str(cache), "--threads", "1")
        assert first.returncode == 0
        assert "45 newly computed entries, 45 total" in first.stderr
        again = run_cli("gram", "--L", "10", "--cache", str(cache), "--threads", "1")
        assert "0 newly computed entries, 45 total" in again.stderr

    def test_export_csv(self, tmp_path):
        cache = tmp_path / "g.nbbg"
        r = run_cli(
            "gram", "--L", "10", "--cache", str(cache),
            "--export", "csv", "--threads", "1",
        )
        lines = r.stdout.splitlines()
        assert lines[0] == "l,m,value,error_bound,method"
        assert len(lines) == 46
        assert all(line.endswith(",closed") for line in lines[1:])

    def test_env_var_cache_dir(self, tmp_path):
        r = run_cli(
            "gram", "--L", "5", "--threads", "1",
            env_extra={cli.CACHE_DIR_ENV: str(tmp_path)},
        )
        assert r.returncode == 0
        assert (tmp_path / "gram-default-weight.nbbg").exists()

    def test_corrupt_cache_exits_65(self, tmp_path):
        cache = tmp_path / "g.nbbg"
        cache.write_bytes(b"NOPE" + bytes(40))
        r = run_cli("gram", "--L", "5", "--cache", str(cache))
        assert r.returncode == 65
        assert "cache" in r.stderr.lower()

    def test_wrong_version_exits_65(self, tmp_path):
        cache = tmp_path / "g.nbbg"
        ok = run_cli("gram", "--L", "5", "--cache", str(cache), "--threads", "1")
        assert ok.returncode == 0
        raw = bytearray(cache.read_bytes())
        raw[4:8] = struct.pack("<I", 42)
        import zlib

        body = bytes(raw[:-4])
        cache.write_bytes(body + struct.pack("<I", zlib.crc32(body)))
        r = run_cli("gram", "--L", "5", "--cache", str(cache))
        assert r.returncode == 65

    def test_distance_reuses_cache(self, tmp_path):
        cache = tmp_path / "g.nbbg"
        fill = run_cli("gram", "--L", "12", "--cache", str(cache), "--threads", "1")
        assert fill.returncode == 0
        r = run_cli("distance", "--L", "2..12", "--cache", str(cache), "--threads", "1")
        assert r.returncode == 0
        bare = run_cli("distance", "--L", "2..12", "--threads", "1")
        assert r.stdout == bare.stdout
