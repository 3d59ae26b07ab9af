"""End-to-end checks for the command-line surface.

Each test drives main() directly with an argv list and inspects exit code
plus captured stdout/stderr, so the exact contract scripts rely on is what
gets pinned here.
"""

import io
import json
from types import SimpleNamespace

import pytest

from subcomp.cli import main, parse_pattern_token
from subcomp.graphs import (
    PatternSpec,
    complement,
    g6_decode,
    g6_encode,
    make_pattern,
    no_instance,
)

C5_G6 = g6_encode(make_pattern(PatternSpec.cycle(5)))
P3_G6 = g6_encode(make_pattern(PatternSpec.path(3)))
NO_K3_G6 = g6_encode(no_instance(make_pattern(PatternSpec.complete(3))))
DIMACS_41 = b"p cnf 4 1\n1 2 3 4 0\n"


def write_g6(tmp_path, payload, name="g.g6"):
    path = tmp_path / name
    path.write_bytes(payload + b"\n")
    return str(path)


def last_json(capsys):
    out = capsys.readouterr().out.strip().splitlines()
    return json.loads(out[-1])


class TestPatternTokens:
    @pytest.mark.parametrize(
        "token,edges,n",
        [
            ("K3", 3, 3),
            ("P4", 3, 4),
            ("C5", 5, 5),
            ("E3", 0, 3),
            ("K1,5", 5, 6),
            ("co-K3", 0, 3),
            ("co-E2", 1, 2),
        ],
    )
    def test_token_shapes(self, token, edges, n):
        g = make_pattern(parse_pattern_token(token))
        assert (g.n, g.edge_count()) == (n, edges)

    def test_co_p4_is_self_complementary(self):
        g = make_pattern(parse_pattern_token("co-P4"))
        assert g == complement(make_pattern(PatternSpec.path(4)))

    @pytest.mark.parametrize("token", ["", "K", "Q3", "K2,3", "P-4", "co-", "k3"])
    def test_rejects_garbage(self, token):
        from subcomp.errors import InvalidPattern

        with pytest.raises(InvalidPattern):
            parse_pattern_token(token)


class TestSolve:
    def test_c5_is_already_triangle_free(self, tmp_path, capsys):
        code = main(["solve", "--target", "kt", "-t", "3", write_g6(tmp_path, C5_G6)])
        report = last_json(capsys)
        assert code == 0
        assert report["status"] == "Yes"
        assert report["solution"] == []

    def test_t1_nonempty_graph_is_no(self, tmp_path, capsys):
        code = main(["solve", "--target", "kt", "-t", "1", write_g6(tmp_path, P3_G6)])
        assert code == 1
        assert last_json(capsys)["status"] == "No"

    def test_brute_pattern_on_hard_instance(self, tmp_path, capsys):
        code = main([
            "solve", "--target", "pattern", "--pattern", "K3", "--brute",
            write_g6(tmp_path, NO_K3_G6),
        ])
        report = last_json(capsys)
        assert code == 1
        assert report["status"] == "No"
        assert report["stats"]["subsets_examined"] == 512

    def test_kt_bar_reports_verified_certificate(self, tmp_path, capsys):
        code = main(["solve", "--target", "kt-bar", "-t", "2", write_g6(tmp_path, P3_G6)])
        report = last_json(capsys)
        assert code == 0
        assert report["status"] == "Yes"
        assert report["verified"] is True

    def test_budget_exhaustion_is_unknown(self, tmp_path, capsys):
        code = main([
            "solve", "--target", "pattern", "--pattern", "P3", "--budget", "1",
            write_g6(tmp_path, g6_encode(no_instance(make_pattern(PatternSpec.path(3))))),
        ])
        assert code == 2
        assert last_json(capsys)["status"] == "Unknown"

    def test_degenerate_recognizer_stays_sound(self, tmp_path, capsys):
        # C_5 has degeneracy 2 <= t-2 for t=4, so the subclass recognizer
        # accepts immediately; the answer must still be a real one.
        code = main([
            "solve", "--target", "kt", "-t", "4", "--recognizer", "degenerate",
            write_g6(tmp_path, C5_G6),
        ])
        assert code == 0
        assert last_json(capsys)["solution"] == []

    def test_human_table(self, tmp_path, capsys):
        main(["solve", "--target", "kt", "-t", "3", "--human", write_g6(tmp_path, C5_G6)])
        out = capsys.readouterr().out
        assert "status" in out and "Yes" in out
        assert "{" not in out

    def test_bad_pattern_token_exits_65(self, tmp_path, capsys):
        code = main([
            "solve", "--target", "pattern", "--pattern", "Z9",
            write_g6(tmp_path, C5_G6),
        ])
        assert code == 65
        assert json.loads(capsys.readouterr().err)["error"] == "InvalidPattern"

    def test_zero_budget_exits_65(self, tmp_path, capsys):
        code = main([
            "solve", "--target", "kt", "-t", "3", "--budget", "0",
            write_g6(tmp_path, C5_G6),
        ])
        assert code == 65

    def test_missing_file_exits_66(self, tmp_path, capsys):
        code = main(["solve", "--target", "kt", "-t", "3", str(tmp_path / "nope.g6")])
        assert code == 66

    def test_malformed_g6_exits_65_with_offset(self, tmp_path, capsys):
        path = tmp_path / "bad.g6"
        path.write_bytes(b"B\x01\n")
        code = main(["solve", "--target", "kt", "-t", "3", str(path)])
        assert code == 65
        assert "byte offset" in json.loads(capsys.readouterr().err)["message"]

    def test_stdin_dash(self, monkeypatch, capsys):
        monkeypatch.setattr("sys.stdin", SimpleNamespace(buffer=io.BytesIO(C5_G6 + b"\n")))
        code = main(["solve", "--target", "kt", "-t", "3", "-"])
        assert code == 0


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["solve", "x.g6"],
            ["solve", "--target", "kt", "x.g6"],
            ["solve", "--target", "kt", "-t", "3", "--pattern", "K3", "x.g6"],
            ["solve", "--target", "pattern", "x.g6"],
            ["solve", "--target", "pattern", "--pattern", "K3",
             "--recognizer", "degenerate", "x.g6"],
            ["gen", "star", "x.g6"],
            ["gen", "p7", "--dummy-clause", "x.cnf"],
            ["frobnicate"],
            [],
        ],
    )
    def test_usage_exit_64(self, argv, capsys, tmp_path):
        # Flag validation fires before input files are opened for the
        # post-parse checks, so give the path-dependent cases a real file.
        fixed = [a.replace("x.g6", write_g6(tmp_path, C5_G6)) for a in argv]
        if any(a.endswith(".cnf") for a in fixed):
            cnf = tmp_path / "x.cnf"
            cnf.write_bytes(DIMACS_41)
            fixed = [str(cnf) if a == "x.cnf" else a for a in fixed]
        with pytest.raises(SystemExit) as excinfo:
            main(fixed)
        assert excinfo.value.code == 64
        assert "error" in capsys.readouterr().err


class TestGen:
    def test_c8_size_line(self, tmp_path, capsys):
        cnf = tmp_path / "phi.cnf"
        cnf.write_bytes(DIMACS_41)
        code = main(["gen", "c8", "-o", str(tmp_path / "inst"), str(cnf)])
        assert code == 0
        assert capsys.readouterr().out.strip() == "vertices=80"
        g = g6_decode((tmp_path / "inst.g6").read_bytes().strip())
        assert g.n == 80
        cert = json.loads((tmp_path / "inst.cert.json").read_text())
        assert cert["size_formula_check"]["ok"] is True

    def test_star_size_line(self, tmp_path, capsys):
        src = write_g6(tmp_path, g6_encode(make_pattern(PatternSpec.path(5))))
        code = main(["gen", "star", "-t", "4", "-o", str(tmp_path / "st"), src])
        assert code == 0
        assert capsys.readouterr().out.strip() == "vertices=35"

    def test_path_t2_violates_precondition(self, tmp_path, capsys):
        code = main(["gen", "path", "-t", "2", write_g6(tmp_path, C5_G6)])
        assert code == 65
        assert json.loads(capsys.readouterr().err)["error"] == "InvalidT"

    def test_k15_dummy_clause_pads_odd_formula(self, tmp_path, capsys):
        cnf = tmp_path / "phi.cnf"
        cnf.write_bytes(DIMACS_41)
        code = main([
            "gen", "k15", "--dummy-clause", "-o", str(tmp_path / "k"), str(cnf),
        ])
        assert code == 0
        assert capsys.readouterr().out.strip() == "vertices=186"
        cert = json.loads((tmp_path / "k.cert.json").read_text())
        assert cert["params"]["dummy_clause_added"] is True

    def test_default_prefix_from_input_stem(self, tmp_path, capsys, monkeypatch):
        monkeypatch.chdir(tmp_path)
        cnf = tmp_path / "phi.cnf"
        cnf.write_bytes(DIMACS_41)
        assert main(["gen", "p7", "phi.cnf"]) == 0
        assert (tmp_path / "phi.p7.g6").exists()
        assert (tmp_path / "phi.p7.cert.json").exists()

    def test_bad_dimacs_exits_65(self, tmp_path, capsys):
        cnf = tmp_path / "phi.cnf"
        cnf.write_bytes(b"p cnf 4 1\n1 2 3 0\n")
        code = main(["gen", "c8", str(cnf)])
        assert code == 65


class TestVerify:
    def test_gs_small_sweep_passes(self, capsys):
        code = main(["verify", "gs", "--max-n", "3"])
        summary = last_json(capsys)
        assert code == 0
        assert summary["passed"] is True
        # 2^C(n,2) graphs times 2^n subsets for n = 0..3
        assert summary["cases"] == 1 + 2 + 8 + 64

    def test_split_sweep_seeded(self, capsys):
        code = main(["verify", "split", "--max-n", "5", "--seed", "7"])
        summary = last_json(capsys)
        assert code == 0
        assert summary["failures"] == []

    def test_failure_exits_3_with_dump(self, capsys, monkeypatch):
        fake = {
            "suite": "gs",
            "cases": 1,
            "failures": [{"graph6": "Bw", "s": [0, 1]}],
            "passed": False,
        }
        monkeypatch.setattr("subcomp.cli.run_suite", lambda *a, **k: fake)
        code = main(["verify", "gs"])
        assert code == 3
        assert last_json(capsys)["failures"][0]["graph6"] == "Bw"

    def test_human_verdict_line(self, capsys):
        code = main(["verify", "inductive", "--max-n", "1", "--human"])
        out = capsys.readouterr().out
        assert code == 0
        assert "PASS" in out


class TestConvert:
    def test_g6_json_round_trip(self, tmp_path, capsys):
        src = write_g6(tmp_path, C5_G6)
        assert main(["convert", "--from", "g6", "--to", "json",
                     "-o", str(tmp_path / "g.json"), src]) == 0
        payload = json.loads((tmp_path / "g.json").read_text())
        assert payload["n"] == 5
        assert len(payload["edges"]) == 5
        assert main(["convert", "--from", "json", "--to", "g6",
                     "-o", str(tmp_path / "back.g6"), str(tmp_path / "g.json")]) == 0
        assert (tmp_path / "back.g6").read_bytes().strip() == C5_G6

    def test_stdout_default(self, tmp_path, capsys):
        src = write_g6(tmp_path, P3_G6)
        assert main(["convert", "--from", "g6", "--to", "json", src]) == 0
        assert json.loads(capsys.readouterr().out)["n"] == 3

    def test_malformed_g6_offset_in_error(self, tmp_path, capsys):
        path = tmp_path / "bad.g6"
        path.write_bytes(b"~~\n")
        code = main(["convert", "--from", "g6", "--to", "json", str(path)])
        assert code == 65
        assert "byte offset" in json.loads(capsys.readouterr().err)["message"]

    def test_asymmetric_json_rejected(self, tmp_path, capsys):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"n": 2, "edges": [[0, 1], [1, 0]]}))
        code = main(["convert", "--from", "json", "--to", "g6", str(path)])
        assert code == 65

    def test_empty_input_rejected(self, tmp_path, capsys):
        path = tmp_path / "empty.g6"
        path.write_bytes(b"\n")
        code = main(["convert", "--from", "g6", "--to", "json", str(path)])
        assert code == 65
