import json

import pytest

from torsion13.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line]


class TestSearch:
    def test_d1_height_100_finds_five_points(self, capsys):
        code, out, err = run_cli(capsys, "search", "--curve", "d1", "--height", "100")
        assert code == 0
        lines = json_lines(out)
        points = [l for l in lines if "chart" in l]
        reports = [l for l in lines if "check_id" in l]
        assert len(points) == 5
        assert reports[-1]["details"]["count"] == 5
        assert {p["u"] for p in points} == {"-1/1", "0/1", "-4/13"}

    def test_d2_height_100_finds_three_points(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--curve", "d2", "--height", "100")
        assert code == 0
        points = [l for l in json_lines(out) if "chart" in l]
        assert len(points) == 3
        assert any(p["u"] == "inf" for p in points)

    def test_point_log_shape(self, capsys):
        _, out, _ = run_cli(capsys, "search", "--curve", "d1", "--height", "5")
        for p in (l for l in json_lines(out) if "chart" in l):
            assert set(p) == {"u", "v", "chart"}


class TestCount:
    def test_d2min_mod_2(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--curve", "d2min", "--p", "2")
        assert code == 0
        report = json_lines(out)[-1]
        assert report["details"]["count"] == 3
        assert report["status"] == "pass"

    def test_non_prime_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "count", "--curve", "d2min", "--p", "4")
        assert code == 2
        assert "not prime" in err


class TestFiber:
    def test_classify_sporadic_value(self, capsys):
        code, out, _ = run_cli(capsys, "fiber", "classify",
                               "--map", "y", "--value", "-4/13")
        assert code == 0
        lines = json_lines(out)
        assert lines[0]["kind"] == "cyclic_cubic"

    def test_classify_t_map(self, capsys):
        code, out, _ = run_cli(capsys, "fiber", "classify",
                               "--map", "t", "--value", "0")
        assert code == 0
        assert json_lines(out)[0]["kind"] == "ramified"

    def test_bad_rational_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["fiber", "classify", "--map", "y", "--value", "1/0"])
        assert exc.value.code == 2


class TestFamily:
    def test_verify_single_t(self, capsys):
        code, out, _ = run_cli(capsys, "family", "verify", "--t", "1")
        assert code == 0
        report = json_lines(out)[-1]
        assert report["status"] == "pass"
        assert report["details"]["order"] == 13
        assert report["details"]["A"] == "16/7"
        assert report["details"]["B"] == "92/49"
        assert report["details"]["status"] == "cyclic"
        assert report["details"]["disc_is_square"] is True

    def test_verify_negative_rational_t(self, capsys):
        code, out, _ = run_cli(capsys, "family", "verify", "--t", "-4/7")
        assert code == 0
        assert json_lines(out)[-1]["details"]["order"] == 13

    def test_zero_t_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "family", "verify", "--t", "0")
        assert code == 2

    def test_sweep(self, capsys):
        code, out, _ = run_cli(capsys, "family", "sweep", "--height", "2")
        assert code == 0
        lines = json_lines(out)
        per_t = [l for l in lines if "check_id" not in l]
        assert len(per_t) == 6  # height <= 2, t != 0
        for entry in per_t:
            assert set(entry) == {"t", "A", "B", "disc", "disc_is_square",
                                  "order", "status"}
            assert entry["order"] == 13 and entry["status"] == "cyclic"
        report = lines[-1]
        assert report["details"]["parameters_checked"] == 6
        assert report["details"]["failures"] == []


class TestSporadic:
    def test_verify_emits_one_report_per_assertion(self, capsys):
        code, out, err = run_cli(capsys, "sporadic", "verify",
                                 "--fingerprint-bound", "100")
        assert code == 0
        lines = json_lines(out)
        ids = [l["check_id"] for l in lines]
        assert "sporadic.origin_has_order_13" in ids
        assert "sporadic.fingerprint" in ids
        fingerprint = [l for l in lines if l["check_id"] == "sporadic.fingerprint"][0]
        assert fingerprint["status"] == "evidence"

    def test_claim_refs_nonempty(self, capsys):
        _, out, _ = run_cli(capsys, "sporadic", "verify", "--fingerprint-bound", "60")
        assert all(l["claim_ref"] for l in json_lines(out))


class TestVerifyAll:
    def test_runs_every_check_and_exits_zero(self, capsys):
        code, out, err = run_cli(capsys, "verify-all")
        assert code == 0
        reports = json_lines(out)
        assert len(reports) == 17
        assert all(r["status"] in ("pass", "evidence") for r in reports)
        assert all(r["claim_ref"] for r in reports)
        ids = {r["check_id"] for r in reports}
        assert {"family.w_disc", "family.sweep", "fiber.disc.y", "fiber.disc.t",
                "search.d1.expected", "sieve.d1", "search.d2.expected",
                "count.d2min.2", "smooth.d2min.2", "jacobian.19",
                "sporadic.origin_has_order_13"} <= ids
        assert "checks:" in err  # human summary on stderr


class TestHarness:
    def test_unknown_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_json_only_suppresses_stderr(self, capsys):
        _, _, err = run_cli(capsys, "count", "--curve", "x", "--p", "3", "--json-only")
        assert err == ""

    def test_reports_parse_and_have_required_fields(self, capsys):
        _, out, _ = run_cli(capsys, "family", "verify", "--t", "2")
        for line in json_lines(out):
            if "check_id" in line:
                assert set(line) == {"check_id", "status", "claim_ref",
                                     "details", "elapsed_ms"}

    def test_determinism_modulo_elapsed(self, capsys):
        def normalized(argv):
            code, out, _ = run_cli(capsys, *argv)
            lines = []
            for obj in json_lines(out):
                obj.pop("elapsed_ms", None)
                lines.append(json.dumps(obj, sort_keys=True))
            return code, lines

        first = normalized(["search", "--curve", "d1", "--height", "30"])
        second = normalized(["search", "--curve", "d1", "--height", "30"])
        assert first == second
