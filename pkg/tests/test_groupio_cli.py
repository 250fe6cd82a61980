"""Group-file parsing and the command-line surface (run as subprocesses)."""

import json
import math
import subprocess
import sys

import pytest

import horoflow as hf
from horoflow.groupio import spec_to_data


def _write_family(path, kind, **params):
    data = {"family": {"kind": kind}}
    data["family"].update(params)
    path.write_text(json.dumps(data))
    return str(path)


# ---------------------------------------------------------------------------
# parsing and serialization


def test_round_trip_preserves_spec(tmp_path, schottky_spec):
    p = tmp_path / "group.json"
    hf.dump_group_spec(schottky_spec, p)
    back = hf.load_group_spec(p)
    assert back.max_word_length == schottky_spec.max_word_length
    assert back.dedup_tol == schottky_spec.dedup_tol
    for g, h in zip(back.generators, schottky_spec.generators):
        assert (g.a, g.b, g.c, g.d) == (h.a, h.b, h.c, h.d)


def test_family_entries_match_presets(tmp_path):
    p = _write_family(tmp_path / "f.json", "cyclic-hyperbolic", **{"lambda": 9.0})
    spec = hf.load_group_spec(p)
    (g,) = spec.generators
    assert (g.a, g.d) == (3.0, 1.0 / 3.0)
    p = _write_family(tmp_path / "g.json", "cyclic-parabolic", shift=2.0)
    (g,) = hf.load_group_spec(p).generators
    assert g.b == 2.0
    p = _write_family(tmp_path / "h.json", "flute-truncated")
    assert hf.load_group_spec(p).max_word_length == 6


def test_generator_matrices_accept_nested_and_flat(tmp_path):
    nested = {"generators": [[[1.0, 1.0], [0.0, 1.0]]]}
    flat = {"generators": [[2.0, 0.0, 0.0, 0.5]]}
    assert hf.parse_group_spec(nested).generators[0].b == 1.0
    assert hf.parse_group_spec(flat).generators[0].a == 2.0


def test_non_unit_determinant_is_rejected_with_advice():
    with pytest.raises(hf.InvalidGenerator, match="rescale"):
        hf.parse_group_spec({"generators": [[2.0, 0.0, 0.0, 1.0]]})


def test_parse_errors():
    with pytest.raises(hf.ParseError):
        hf.parse_group_spec({})  # neither generators nor family
    with pytest.raises(hf.ParseError):
        hf.parse_group_spec({
            "generators": [[1.0, 1.0, 0.0, 1.0]],
            "family": {"kind": "cyclic-parabolic"},
        })
    with pytest.raises(hf.ParseError):
        hf.parse_group_spec({"generators": [[1, 1, 0, 1]], "colour": "red"})
    with pytest.raises(hf.ParseError):
        hf.parse_group_spec({"family": {"kind": "lattice"}})
    with pytest.raises(hf.ParseError):
        hf.parse_group_spec({"family": {"kind": "cyclic-parabolic", "spin": 3}})
    with pytest.raises(hf.ParseError):
        hf.parse_group_spec({"generators": [[1, 1, 0, 1]], "max_word_length": True})


def test_load_rejects_malformed_json(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(hf.ParseError):
        hf.load_group_spec(p)


def test_spec_to_data_omits_default_dedup(parabolic_spec):
    data = spec_to_data(parabolic_spec)
    assert "dedup_tol" not in data
    assert data["generators"] == [[[1.0, 1.0], [0.0, 1.0]]]


# ---------------------------------------------------------------------------
# CLI


def _cli(*args, **kw):
    return subprocess.run(
        [sys.executable, "-m", "horoflow.cli", *args],
        capture_output=True, text=True, timeout=120, **kw,
    )


@pytest.fixture(scope="module")
def group_files(tmp_path_factory):
    d = tmp_path_factory.mktemp("groups")
    files = {}
    for name, kind in [
        ("parabolic", "cyclic-parabolic"),
        ("hyperbolic", "cyclic-hyperbolic"),
        ("schottky", "schottky-pair"),
    ]:
        p = d / f"{name}.json"
        p.write_text(json.dumps({"family": {"kind": kind}}))
        files[name] = str(p)
    bad = d / "bad.json"
    bad.write_text(json.dumps({"generators": [[2.0, 0.0, 0.0, 1.0]]}))
    files["bad"] = str(bad)
    return files


def test_cli_verify_passes_and_is_deterministic():
    a = _cli("verify", "--samples", "300", "--seed", "7")
    b = _cli("verify", "--samples", "300", "--seed", "7")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    report = json.loads(a.stdout)
    assert report["passed"] is True
    assert {"matching", "alternative"} <= set(report["substitution"])


def test_cli_classify(group_files):
    a = _cli("classify", "--group", group_files["parabolic"], "--point", "inf")
    assert a.returncode == 0
    out = json.loads(a.stdout)["result"]
    assert out["verdict"] == "parabolic"
    assert out["parabolic_witness"]["word"] == [1]
    b = _cli("classify", "--group", group_files["parabolic"], "--point", "inf")
    assert a.stdout == b.stdout


def test_cli_orbit_csv(tmp_path):
    out = tmp_path / "orbit.csv"
    r = _cli("orbit", "--flow", "horocycle", "--start", "0", "--end", "1",
             "--step", "0.5", "--out", str(out))
    assert r.returncode == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "s_or_t,re,im"
    assert len(lines) == 4
    first = lines[1].split(",")
    assert float(first[1]) == 0.0 and float(first[2]) == 1.0


def test_cli_orbit_validates_range():
    r = _cli("orbit", "--flow", "geodesic", "--start", "2", "--end", "1")
    assert r.returncode == 1
    assert r.stderr.strip()


def test_cli_inj_writes_csv_and_summary(group_files, tmp_path):
    out = tmp_path / "prof.csv"
    r = _cli("inj", "--group", group_files["parabolic"], "--out", str(out))
    assert r.returncode == 0
    summary = json.loads(r.stdout)
    assert summary["rows"] == 101
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "t,inj_estimate"
    assert len(lines) == 102
    t, v = (float(x) for x in lines[-1].split(","))
    assert t == 10.0
    assert v == pytest.approx(math.asinh(math.exp(-10.0) / 2.0), rel=1e-9)
    assert summary["liminf_estimate"] == pytest.approx(v, rel=1e-12)


def test_cli_diagnose_verdicts(group_files):
    r = _cli("diagnose", "--group", group_files["parabolic"])
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["verdict"]["kind"] == "recurrence-evidence"
    # not in the limit set from this base point: honest shrug, still exit 0
    r2 = _cli("diagnose", "--group", group_files["schottky"])
    assert r2.returncode == 0
    assert json.loads(r2.stdout)["verdict"]["kind"] == "inconclusive"
    r3 = _cli("diagnose", "--group", group_files["parabolic"])
    assert r.stdout == r3.stdout


def test_cli_exit_codes(group_files, tmp_path):
    assert _cli("classify", "--group", group_files["bad"], "--point", "0").returncode == 1
    missing = str(tmp_path / "nope.json")
    assert _cli("classify", "--group", missing, "--point", "0").returncode == 2
    assert _cli("classify", "--group", group_files["parabolic"]).returncode == 2
    assert _cli("frobnicate").returncode == 2
    assert _cli().returncode == 2


def test_cli_version_runs():
    r = _cli("--version")
    assert r.returncode == 0
    assert hf.__version__ in r.stdout
