import json
import random

import pytest

from monodefect import Ordinary, Saturation, Symbolic, defect_series, growth_report
from monodefect.cli import main
from monodefect.config import ConfigError, loads_config, parse_spec
from monodefect.filtration import Closure, ClosureOf, Scaled, growth_csv

from conftest import RINGS

R3 = RINGS[3]
TRI = R3.ideal("x1*x2, x2*x3, x3*x1")
P23 = R3.ideal("x2, x3")


def _config(tmp_path, pairs, **extra):
    cfg = {
        "ring": {"num_vars": 3},
        "ideals": {"T": "x1*x2, x2*x3, x3*x1", "P": "x2, x3"},
        "pairs": pairs,
        "outputs": str(tmp_path / "out"),
    }
    cfg.update(extra)
    path = tmp_path / "run.json"
    path.write_text(json.dumps(cfg))
    return path


TRIANGLE_PAIR = {"name": "tri", "filtrationI": "sat(T, P)", "filtrationJ": "symbolic(T)",
                 "n_min": 1, "n_max": 10}


def test_parse_spec_grammar():
    ideals = {"T": TRI, "P": P23}
    assert parse_spec("ordinary(T)", ideals) == Ordinary(TRI)
    assert parse_spec("sat(T, P)", ideals) == Saturation(TRI, P23)
    assert parse_spec("closure_of(symbolic(T))", ideals) == ClosureOf(Symbolic(TRI))
    assert parse_spec(" scaled( closure(T) , 3 )", ideals) == Scaled(Closure(TRI), 3)
    for bad in ["ordinary(Q)", "ordinary(T", "foo(T)", "scaled(ordinary(T), x)",
                "ordinary(T) extra", "scaled(scaled(ordinary(T), 2), 2)", "sat(T; P)"]:
        with pytest.raises(ConfigError):
            parse_spec(bad, ideals)


def test_config_validation():
    base = {"ring": {"num_vars": 3}, "ideals": {"T": "x1*x2"}}
    with pytest.raises(ConfigError):
        loads_config("{not json")
    with pytest.raises(ConfigError):
        loads_config(json.dumps({**base, "ideals": {"T": "y7"}}))
    with pytest.raises(ConfigError):
        loads_config(json.dumps({**base, "pairs": [
            {"name": "a", "filtrationI": "ordinary(T)", "filtrationJ": "ordinary(T)",
             "n_min": 3, "n_max": 2}]}))
    cfg = loads_config(json.dumps({**base, "ring": {"num_vars": 2, "names": ["a", "b"]},
                                   "ideals": {"T": "a*b"}}))
    assert cfg.ring.var_names == ("a", "b")
    assert cfg.fit.p_max == 6 and cfg.fit.d_max == 5


def test_compute_triangle(tmp_path, capsys):
    path = _config(tmp_path, [TRIANGLE_PAIR])
    assert main(["compute", "--config", str(path), "--jobs", "1"]) == 0
    text = (tmp_path / "out" / "tri.series.csv").read_text()
    rows = text.splitlines()
    assert rows[0] == "n,def"
    assert rows[1] == "1,1" and rows[2] == "2,1" and rows[-1] == "10,5"
    # thin shell: identical bytes to the library call
    assert text == defect_series(Saturation(TRI, P23), Symbolic(TRI), 1, 10).to_csv()
    doc = json.loads((tmp_path / "out" / "tri.series.json").read_text())
    assert doc["values"][-1] == 5


def test_compute_deterministic(tmp_path):
    path = _config(tmp_path, [TRIANGLE_PAIR])
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(["compute", "--config", str(path), "--out", str(out1), "--jobs", "1"]) == 0
    assert main(["compute", "--config", str(path), "--out", str(out2), "--jobs", "2"]) == 0
    for name in ("tri.series.csv", "tri.series.json"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_compute_empty_pairs(tmp_path):
    path = _config(tmp_path, [])
    assert main(["compute", "--config", str(path)]) == 0
    assert not (tmp_path / "out").exists()


def test_compute_unknown_ideal(tmp_path, capsys):
    pair = dict(TRIANGLE_PAIR, filtrationJ="symbolic(Nope)")
    path = _config(tmp_path, [pair])
    assert main(["compute", "--config", str(path)]) == 2
    assert "Nope" in capsys.readouterr().err


def test_compute_missing_config(tmp_path):
    assert main(["compute", "--config", str(tmp_path / "missing.json")]) == 4


def test_compute_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    path = _config(tmp_path, [TRIANGLE_PAIR])
    assert main(["compute", "--config", str(path), "--out", str(blocker / "sub"), "--jobs", "1"]) == 4


def test_compute_error_names_pair_and_n(tmp_path, capsys):
    # the unit ideal has no minimal primes; symbolic() of it fails at parse time
    path = _config(tmp_path, [dict(TRIANGLE_PAIR, filtrationI="symbolic(U)")],
                   ideals={"T": "x1*x2", "U": "1"})
    assert main(["compute", "--config", str(path)]) == 2


def test_growth_triangle(tmp_path):
    pair = {"name": "tri", "filtrationI": "symbolic(T)", "filtrationJ": "ordinary(T)",
            "n_min": 2, "n_max": 5}
    path = _config(tmp_path, [pair])
    assert main(["growth", "--config", str(path), "--jobs", "1"]) == 0
    text = (tmp_path / "out" / "tri.growth.csv").read_text()
    assert text == growth_csv(growth_report(Symbolic(TRI), Ordinary(TRI), 2, 5))
    lines = text.splitlines()
    assert lines[0] == "n,def,def_bar,dim_T,mu_S,F"
    assert len(lines) == 5
    for line in lines[1:]:
        n, d, dbar, _, mus, _ = line.split(",")
        assert int(d) <= int(dbar) + int(mus)


def test_growth_identical_specs(tmp_path):
    pair = {"name": "same", "filtrationI": "ordinary(T)", "filtrationJ": "ordinary(T)",
            "n_min": 1, "n_max": 3}
    path = _config(tmp_path, [pair])
    assert main(["growth", "--config", str(path), "--jobs", "1"]) == 0
    for line in (tmp_path / "out" / "same.growth.csv").read_text().splitlines()[1:]:
        cols = line.split(",")
        assert cols[1:5] == ["0", "0", "0", "0"] and cols[5] == "0/0"


def test_growth_containment_violation(tmp_path, capsys):
    pair = {"name": "bad", "filtrationI": "ordinary(T)", "filtrationJ": "symbolic(T)",
            "n_min": 1, "n_max": 3}
    path = _config(tmp_path, [pair])
    assert main(["growth", "--config", str(path), "--jobs", "1"]) == 3
    err = capsys.readouterr().err
    assert "bad" in err and "n = 2" in err
    assert not (tmp_path / "out").exists()


def _write_series(tmp_path, name, start, values):
    path = tmp_path / f"{name}.series.csv"
    path.write_text("n,def\n" + "".join(f"{start + i},{v}\n" for i, v in enumerate(values)))
    return path


def test_fit_mm412(tmp_path, capsys):
    from monodefect.catalog import EXAMPLES

    ex = EXAMPLES["mm412"]
    path = _write_series(tmp_path, "mm412", 2, [int(ex.closed_form(n)) for n in range(2, 15)])
    assert main(["fit", str(path)]) == 0
    doc = json.loads((tmp_path / "mm412.qp.json").read_text())
    assert doc["period"] == 2
    assert [c["coeffs"][-1] for c in doc["classes"]] == ["1/2", "1/2"]
    out = capsys.readouterr().out
    assert "leading_constant = true" in out
    assert "second_nonzero_constant" in out


def test_fit_constant(tmp_path):
    path = _write_series(tmp_path, "flat", 1, [3] * 8)
    assert main(["fit", str(path)]) == 0
    doc = json.loads((tmp_path / "flat.qp.json").read_text())
    assert doc["period"] == 1 and doc["classes"][0]["coeffs"] == ["3/1"]


def test_fit_noise(tmp_path, capsys):
    rng = random.Random(3)
    path = _write_series(tmp_path, "noise", 1, [rng.randint(0, 10**6) for _ in range(20)])
    assert main(["fit", str(path)]) == 5
    assert "1..20" in capsys.readouterr().err


def test_fit_malformed(tmp_path):
    path = tmp_path / "bad.series.csv"
    path.write_text("n,value\n1,2\n")
    assert main(["fit", str(path)]) == 2


def test_reproduce_triangle(capsys):
    assert main(["reproduce", "triangle", "--jobs", "1"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 15 and "FAIL" not in out


def test_reproduce_mm412():
    assert main(["reproduce", "mm412", "--jobs", "1"]) == 0


def test_reproduce_bcmm612(capsys):
    assert main(["reproduce", "bcmm612", "--jobs", "1"]) == 0
    out = capsys.readouterr().out
    assert "n =   1  def =      0" in out


def test_reproduce_mismatch(monkeypatch, capsys):
    from monodefect import catalog

    ex = catalog.EXAMPLES["triangle"]
    broken = type(ex)(ex.key, ex.description, ex.spec_i, ex.spec_j,
                      lambda n: ex.closed_form(n) + (n == 4), ex.n_min, ex.n_max)
    monkeypatch.setitem(catalog.EXAMPLES, "triangle", broken)
    assert main(["reproduce", "triangle", "--jobs", "1"]) == 1
    assert "n = 4" in capsys.readouterr().err


def test_bad_arguments():
    assert main(["reproduce", "nonsense"]) == 2
    assert main([]) == 2
