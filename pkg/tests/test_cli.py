"""CLI contract: parsing, output format, exit codes, determinism."""

import json
import math

import pytest

from hyperclass import cli
from hyperclass import numerics as N


def run(capsys, *argv, env=None, monkeypatch=None):
    if env and monkeypatch:
        for k, v in env.items():
            monkeypatch.setenv(k, v)
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# Number round-tripping
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("z", [0.5, -3.25, 1 + 2j, -0.125 - 7.5j,
                               1e-12 + 1e-12j, 12345.678 - 0.001j])
def test_fmt_parse_roundtrip(z):
    z = complex(z)
    assert cli.parse_complex(cli.fmt_complex(z)) == pytest.approx(z, rel=1e-14)


def test_parse_forms():
    assert cli.parse_complex("1.5") == 1.5
    assert cli.parse_complex("1.5,-2") == 1.5 - 2j
    assert cli.parse_complex("2i") == 2j
    assert cli.parse_complex("-i") == -1j
    with pytest.raises(cli.UsageError):
        cli.parse_complex("one")


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def test_eval_log_anchor(capsys):
    code, out, _ = run(capsys, "eval", "2f1",
                       "--a", "1", "--b", "1", "--c", "2", "--w", "0.5")
    assert code == 0
    lines = out.splitlines()
    assert abs(cli.parse_complex(lines[0]) - 2 * math.log(2)) < 1e-12
    assert lines[1].startswith("method: ")
    assert lines[2].startswith("error: ")


def test_eval_lie_equals_classical(capsys):
    _, out1, _ = run(capsys, "eval", "2f1",
                     "--a", "0.7", "--b", "0.4", "--c", "1.2", "--w", "0.3")
    _, out2, _ = run(capsys, "eval", "2f1", "--alpha", "0.2", "--beta",
                     "-0.1", "--mu", "0.3", "--w", "0.3")
    v1 = cli.parse_complex(out1.splitlines()[0])
    v2 = cli.parse_complex(out2.splitlines()[0])
    assert abs(v1 - v2) < 1e-12 * abs(v1)


def test_eval_complex_argument(capsys):
    # 0F1(;3/2;-z^2/4) = sin(z)/z; w = -0.25 corresponds to z = 1
    code, out, _ = run(capsys, "eval", "0f1", "--c", "1.5", "--w", "-0.25")
    assert code == 0
    v = cli.parse_complex(out.splitlines()[0])
    assert abs(v - math.sin(1)) < 1e-13
    # and a genuinely complex w parsed from the "re,im" form
    code, out, _ = run(capsys, "eval", "0f1", "--c", "1.5", "--w", "0.3,0.2")
    assert code == 0
    v = cli.parse_complex(out.splitlines()[0])
    assert abs(v - N.eval_0F1(0.5, 0.3 + 0.2j)) < 1e-13 * abs(v)


def test_eval_hermite_methods_agree(capsys):
    _, out_q, _ = run(capsys, "eval", "hermite", "--lam", "0.3",
                      "--w", "1.2", "--method", "quadrature")
    _, out_a, _ = run(capsys, "eval", "hermite", "--lam", "0.3",
                      "--w", "1.2", "--method", "auto")
    vq = cli.parse_complex(out_q.splitlines()[0])
    va = cli.parse_complex(out_a.splitlines()[0])
    assert abs(vq - va) < 1e-9 * abs(vq)


def test_eval_norm_variant(capsys):
    code, out, _ = run(capsys, "eval", "1f1", "--theta", "0.2",
                       "--alpha", "0.3", "--w", "0.4", "--norm", "bold")
    assert code == 0
    v = cli.parse_complex(out.splitlines()[0])
    assert abs(v - N.bold_F_1f1(0.2, 0.3, 0.4)) < 1e-13 * abs(v)


def test_eval_missing_params_usage_error(capsys):
    code, _, err = run(capsys, "eval", "2f1", "--a", "1", "--w", "0.5")
    assert code == 2
    assert "usage error" in err


def test_eval_mixed_params_usage_error(capsys):
    code, _, err = run(capsys, "eval", "2f1", "--a", "1", "--beta", "0.2",
                       "--mu", "0.1", "--w", "0.5")
    assert code == 2


def test_eval_gamma_pole_exit_code(capsys):
    # c = -2 puts a pole in the series prefactor
    code, _, err = run(capsys, "eval", "2f1", "--a", "0.5", "--b", "0.5",
                       "--c", "-2", "--w", "0.25")
    assert code == 3
    assert "numeric error" in err


def test_bad_tol_env(capsys, monkeypatch):
    monkeypatch.setenv("HYPERCLASS_TOL", "abc")
    code, _, err = run(capsys, "eval", "0f1", "--c", "1.5", "--w", "0.5")
    assert code == 2


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "quadratic")
    assert code == 0
    d = json.loads(out)
    assert list(d) == ["suite", "family", "seed", "checks",
                       "passed", "failed", "skipped"]
    assert d["failed"] == 0
    assert d["passed"] == len(d["checks"]) - d["skipped"]


def test_verify_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "recurrences", "--seed", "4")
    _, out2, _ = run(capsys, "verify", "recurrences", "--seed", "4")
    assert out1 == out2


def test_verify_text_format(capsys):
    code, out, _ = run(capsys, "verify", "quadratic", "--format", "text")
    assert code == 0
    assert "suite=quadratic" in out
    assert "pass" in out


def test_verify_family_filter(capsys):
    code, out, _ = run(capsys, "verify", "symmetries", "--family", "0f1")
    d = json.loads(out)
    assert code == 0
    assert d["family"] == "0f1"
    assert all(c["id"].startswith(("0f1", "counts:0f1")) for c in d["checks"])


def test_verify_strict_tol_fails(capsys, monkeypatch):
    monkeypatch.setenv("HYPERCLASS_TOL", "1e-20")
    code, out, _ = run(capsys, "verify", "recurrences")
    assert code == 1
    assert json.loads(out)["failed"] > 0


def test_verify_explicit_tol_flag(capsys):
    code, out, _ = run(capsys, "verify", "recurrences", "--tol", "1e-18")
    assert code == 1


def test_verify_kummer_custom_params(capsys):
    code, out, _ = run(capsys, "verify", "kummer", "--alpha", "0.21",
                       "--beta", "0.13", "--mu", "0.34", "--w", "0.4,0.6")
    assert code == 0
    d = json.loads(out)
    assert len(d["checks"]) == 36
    assert d["failed"] == 0


def test_verify_bad_suite_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def test_catalog_json_counts(capsys):
    code, out, _ = run(capsys, "catalog", "2f1", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["counts"] == {"transmutations": 12, "factorizations": 12,
                           "symmetries": 24, "recurrences": 12,
                           "integral_representations": 10}
    for rows in d["sections"].values():
        for r in rows:
            assert set(r) == {"id", "paper_ref"}


def test_catalog_text(capsys):
    code, out, _ = run(capsys, "catalog", "hermite")
    assert code == 0
    assert "[transmutations] (4)" in out
    assert "herm:" in out


# ---------------------------------------------------------------------------
# plotdata
# ---------------------------------------------------------------------------

def test_plotdata_csv(capsys):
    code, out, _ = run(capsys, "plotdata", "0f1", "--c", "1.5",
                       "--from", "0", "--to", "0.5,0.5", "--n", "7")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 7
    first = [float(x) for x in lines[0].split(",")]
    assert first == [0.0, 0.0, 1.0, 0.0]
    last = [float(x) for x in lines[-1].split(",")]
    assert last[0] == pytest.approx(0.5)
    v = N.eval_0F1(0.5, 0.5 + 0.5j)
    assert last[2] == pytest.approx(v.real)
    assert last[3] == pytest.approx(v.imag)


def test_plotdata_bad_n(capsys):
    code, _, err = run(capsys, "plotdata", "0f1", "--c", "1.5",
                       "--from", "0", "--to", "1", "--n", "0")
    assert code == 2
