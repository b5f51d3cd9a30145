"""End-to-end CLI behaviour: text output, JSON schema, exit codes."""

import json

import pytest
from jsonschema import validate

from fanolines.cli import load_schema, main


@pytest.fixture(scope="module")
def schema():
    return load_schema()


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, schema, *argv):
    code, out, err = run(capsys, *argv, "--json")
    doc = json.loads(out)
    validate(doc, schema)
    return code, doc, err


# ---------------------------------------------------------------------------
# text mode


def test_s_command(capsys):
    code, out, _ = run(capsys, "s", "SG(2,7)")
    assert code == 0
    assert out.strip() == "S = 4 (exact)"


def test_s_lower_bound(capsys):
    code, out, _ = run(capsys, "s", "SG(3,7)")
    assert code == 0
    assert out.strip() == "S >= 1 (lower bound)"


def test_chain_command(capsys):
    code, out, _ = run(capsys, "chain", "Q(7)")
    assert code == 0
    assert out.strip() == "Q(7) ⊨ Q(5) ⊨ Q(3) ⊨ Q(1), S = 3"


def test_families_command(capsys):
    code, out, _ = run(capsys, "families", "G(2,5)")
    assert code == 0
    assert "Prod(P(1):1,P(2):1)" in out
    assert "span P^5 of P^5" in out


def test_families_no_rule_is_graceful(capsys):
    code, out, _ = run(capsys, "families", "SG(3,7)")
    assert code == 0
    assert "no family rule" in out


def test_families_uncovered_is_graceful(capsys):
    code, out, _ = run(capsys, "families", "Q(1)")
    assert code == 0
    assert "not covered by lines" in out


def test_cover_command(capsys):
    code, out, _ = run(capsys, "cover", "CI(2,2;7)")
    assert code == 0
    assert out.strip() == "covered by linear spaces of dimension at least 2"


def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", "--dim", "3", "--s", "1", "--nmax", "8")
    assert code == 0
    for name in ("Q(3)", "CI(3;4)", "CI(2,2;5)", "LS(G(2,5),3)"):
        assert name in out


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "golden", "--nmax", "12", "--quiet")
    assert code == 0
    assert "0 failed" in out


def test_trace_command(capsys):
    code, out, _ = run(capsys, "trace", "Q(5)")
    assert code == 0
    assert "verdict: (a)" in out


def test_secant_command_echoes_seed(capsys):
    code, out, _ = run(capsys, "secant", "--kind", "segre", "-d", "2", "-m", "2",
                       "--seed", "42")
    assert code == 0
    assert "seed=42" in out
    assert "pass=True" in out


def test_secant_degree_one_is_reported_not_asserted(capsys):
    code, out, _ = run(capsys, "secant", "--kind", "scroll", "-d", "1", "-m", "3")
    assert code == 0
    assert "(reported)" in out


# ---------------------------------------------------------------------------
# exit codes


def test_validation_error_exits_2(capsys):
    code, _, err = run(capsys, "s", "G(0,3)")
    assert code == 2
    assert "terms:" in err


def test_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "s", "Q(3")
    assert code == 2
    assert "dsl:" in err


def test_usage_error_exits_2(capsys):
    assert main(["verify", "--suite", "nonsense"]) == 2
    capsys.readouterr()


def test_domain_error_exits_1(capsys):
    code, _, err = run(capsys, "chain", "pt")
    assert code == 1
    assert "families:" in err
    code, _, err = run(capsys, "trace", "Q(4)")
    assert code == 1
    assert "checks:" in err


# ---------------------------------------------------------------------------
# structured mode


def test_json_s(capsys, schema):
    code, doc, _ = run_json(capsys, schema, "s", "SG(2,7)")
    assert code == 0
    assert doc["command"] == "s"
    assert doc["result"]["s"] == {"kind": "exact", "value": 4}
    assert doc["result"]["canonical"] == "SG(2,7)"


def test_json_chain_encodes_the_same_facts_as_text(capsys):
    code, out, _ = run(capsys, "chain", "SG(2,6)")
    text_chain = [part.strip() for part in out.rsplit(", S", 1)[0].split("⊨")]
    code, out, _ = run(capsys, "chain", "SG(2,6)", "--json")
    doc = json.loads(out)
    assert doc["result"]["chain"] == text_chain
    assert doc["result"]["s"]["value"] == 3


def test_json_families(capsys, schema):
    code, doc, _ = run_json(capsys, schema, "families", "Prod(P(1):1,P(3):1)")
    assert code == 0
    fams = doc["result"]["families"]
    assert [f["variety"] for f in fams] == ["pt", "P(2)"]
    assert [f["span_in_pt"] for f in fams] == [0, 2]


def test_json_cover(capsys, schema):
    code, doc, _ = run_json(capsys, schema, "cover", "Q(6)")
    assert doc["result"]["at_least"] == 3


def test_json_classify(capsys, schema):
    code, doc, _ = run_json(capsys, schema, "classify", "--dim", "7", "--s", "3",
                            "--nmax", "12")
    assert set(doc["result"]["members"]) == {"Q(7)", "SG(2,6)"}


def test_json_verify(capsys, schema):
    code, doc, _ = run_json(capsys, schema, "verify", "--suite", "lemmas",
                            "--nmax", "6", "--degmax", "3")
    assert code == 0
    assert doc["result"]["ok"] is True
    assert doc["result"]["failed"] == 0
    assert "proper_linear_vacuous" in doc["result"]["counters"]


def test_json_trace(capsys, schema):
    code, doc, _ = run_json(capsys, schema, "trace", "SG(2,6)")
    assert doc["result"]["verdict"] == "b"
    assert doc["result"]["conjecture_used"] is True
    assert doc["result"]["chain_dims"] == [7, 3, 1, 0]


def test_json_secant(capsys, schema):
    code, doc, _ = run_json(capsys, schema, "secant", "--kind", "scroll",
                            "-d", "3", "-m", "2", "--seed", "7")
    assert code == 0
    assert doc["seed"] == 7
    assert doc["result"]["secant_terracini"] == 5
    assert doc["result"]["expected"] == 5
    assert doc["result"]["pass"] is True


def test_seed_env_override(capsys, monkeypatch, schema):
    monkeypatch.setenv("FANOLINES_SEED", "31337")
    code, doc, _ = run_json(capsys, schema, "secant", "--kind", "segre",
                            "-d", "2", "-m", "2")
    assert doc["seed"] == 31337
