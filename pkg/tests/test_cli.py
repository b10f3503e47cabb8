import io
import json
import subprocess
import sys

import jsonschema
import pytest

from eqsc.cli import load_schema, main, run
from eqsc.config import JobConfig, parse_element, parse_parabolic
from eqsc.errors import BadIndex, NotMinimalRepresentative
from eqsc.parabolic import build_quotient
from eqsc.poly import Polynomial, format_poly


def call(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coeff_p1(capsys):
    code, out, _ = call(["coeff", "--group", "A1", "--parabolic", "", "--u", "e", "--v", "e",
                         "--w", "e", "--d", "0"], capsys)
    assert code == 0 and out == "x1\n"


def test_product_p2(capsys):
    code, out, _ = call(["product", "--group", "A2", "--parabolic", "2", "--u", "1", "--v", "1"],
                        capsys)
    assert code == 0 and out == "σ(e) + x2·σ(s1)\n"


def test_check_b2(capsys):
    code, out, _ = call(["check", "--group", "B2", "--parabolic", ""], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["failed"] == 0 and rep["checked"] > 0


@pytest.mark.parametrize("oracle", ["billey", "gkm", "pn"])
def test_check_oracles(oracle, capsys):
    code, out, _ = call(["check", "--group", "A2", "--parabolic", "", "--oracle", oracle], capsys)
    assert code == 0 and json.loads(out)["failed"] == 0


def test_usage_errors(capsys):
    assert call(["nonsense"], capsys)[0] == 1
    assert call(["product", "--group", "A2", "--parabolic", "2", "--u", "2", "--v", "e"],
                capsys)[0] == 1
    code, _, err = call(["product", "--group", "A2", "--parabolic", "2", "--u", "2", "--v", "e"],
                        capsys)
    assert "did you mean 'e'" in err
    assert call(["coeff", "--group", "A2", "--u", "e", "--v", "e"], capsys)[0] == 1
    assert call(["table", "--group", "Q7"], capsys)[0] == 1
    assert call(["table", "--group", "A2", "--threads", "0"], capsys)[0] == 1


def test_json_validates_and_matches_text(capsys):
    schema = load_schema()
    args = ["table", "--group", "A2", "--parabolic", ""]
    _, text, _ = call(args + ["--format", "text"], capsys)
    _, raw, _ = call(args + ["--format", "json"], capsys)
    records = json.loads(raw)
    for rec in records:
        jsonschema.validate(rec, schema)
    assert text.startswith("# x_i = -beta_i")
    # same coefficient set: every JSON polynomial appears in the text rendering
    body = text.split("\n", 1)[1]
    for rec in records:
        poly = Polynomial.from_json(2, rec["poly"])
        if poly != 1:
            assert format_poly(poly) in body
    n_terms = sum(line.count("σ(") - 2 for line in body.splitlines() if line)
    assert n_terms == len(records)


def test_json_terms_graded_lex(capsys):
    _, raw, _ = call(["coeff", "--group", "A2", "--parabolic", "2", "--u", "e", "--v", "e",
                      "--w", "e", "--format", "json"], capsys)
    rec = json.loads(raw)
    jsonschema.validate(rec, load_schema())
    assert rec["poly"] == [{"coeff": 1, "exps": [2, 0]}, {"coeff": 1, "exps": [1, 1]}]
    assert rec["u"] == [] and rec["d"] == [0]


def test_deterministic_output():
    cfg = JobConfig(group="B2", parabolic=[], command="table", format="json")
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        run(cfg, buf)
        outs.append(buf.getvalue().encode())
    assert outs[0] == outs[1]


def test_config_roundtrip_and_override(tmp_path, capsys):
    cfg = JobConfig(group=[[2, -1], [-1, 2]], parabolic=[2], command="product", u="1", v="1",
                    prune=False, threads=2)
    assert JobConfig.from_json(cfg.to_json()) == cfg
    path = tmp_path / "job.json"
    path.write_text(cfg.to_json())
    code, out, _ = call(["product", "--config", str(path)], capsys)
    assert code == 0 and out == "σ(e) + x2·σ(s1)\n"
    code, out, _ = call(["product", "--config", str(path), "--v", "e"], capsys)
    assert out == "(x1 + x2)·σ(e) + q1·σ(s2s1)\n"
    with pytest.raises(ValueError):
        JobConfig.from_dict({"grup": "A2"})


def test_parse_element():
    pq = build_quotient("A2", (1,))
    rs = pq.rs
    assert parse_element("e", rs) == rs.identity
    assert parse_element("1 2 1", rs) == rs.w0
    assert parse_element("1,2,1", rs) == rs.w0
    assert parse_element("s1s2s1", rs) == rs.w0
    with pytest.raises(NotMinimalRepresentative, match="'e'"):
        parse_element("2", rs, pq)
    with pytest.raises(BadIndex):
        parse_element("3", rs)
    with pytest.raises(BadIndex):
        parse_element("x", rs)
    assert parse_parabolic("", 3) == []
    assert parse_parabolic("3,1", 3) == [0, 2]


def test_console_script_module():
    res = subprocess.run([sys.executable, "-m", "eqsc.cli", "coeff", "--group", "A1", "--u", "e",
                          "--v", "e", "--w", "s1", "--d", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "1\n"


def test_chevalley_command(capsys):
    code, out, _ = call(["chevalley", "--group", "A2", "--parabolic", "2"], capsys)
    assert code == 0
    assert "σ(s(β1)) ∘ σ(e) = (x1 + x2)·σ(e) + q1·σ(s2s1)" in out
