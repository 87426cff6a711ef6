"""CLI surface: verbs, exit codes, file outputs, determinism."""

import json
import subprocess
import sys

import pytest

from levilab.cli import main


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_classify_csv_and_json(tmp_path, capsys):
    csv_path = tmp_path / "dims.csv"
    code, out = run_cli(["classify", "--n", "3", "--csv", str(csv_path)], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["achievable"] == [3, 5, 7, 9, 11, 15]
    assert 4 in rep["excluded"]
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "s,t,p,blocks,contributions,total"
    assert len(lines) == rep["signatures"] + 1


def test_classify_rejects_large_n(capsys):
    with pytest.raises(ValueError):
        main(["classify", "--n", "9"])


def test_levi_verb(capsys):
    code, out = run_cli(
        ["levi", "--domain", "catalog:thm2-unbounded", "--point", "[[-0.75,0],[1,0]]"],
        capsys,
    )
    assert code == 0
    rep = json.loads(out)
    assert abs(rep["canonical_tangent_value"] + 1.0) < 1e-9
    assert rep["restricted_eigenvalues"][0] < 0


def test_lattice_verb(capsys):
    code, out = run_cli(["lattice", "--domain", "catalog:thm1"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["rank"] == 2
    assert rep["basis"] == [[1, 0, 0], [0, 1, 1]]


def test_stratify_verb(capsys):
    code, out = run_cli(
        ["stratify", "--domain", "catalog:thm1", "--samples", "500", "--seed", "1"],
        capsys,
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["witnesses"] == []
    assert rep["total"] == 500


def test_orbit_verb(capsys):
    code, out = run_cli(["orbit", "--family", "thm2", "--kmax", "4"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["strictly_decreasing"]


def test_orbit_verb_explicit_params(capsys):
    code, out = run_cli(
        ["orbit", "--family", "thm1", "--params", "1/2,3/4,9/10"], capsys
    )
    assert code == 0
    rep = json.loads(out)
    assert len(rep["points"]) == 3
    assert abs(rep["points"][0][0][0] + 0.5) < 1e-12


def test_catalog_list_and_export(tmp_path, capsys):
    code, out = run_cli(["catalog", "list"], capsys)
    assert code == 0
    names = [e["name"] for e in json.loads(out)["entries"]]
    assert {"thm1", "thm2", "thm2-unbounded"} <= set(names)
    dest = tmp_path / "thm2.json"
    code, _ = run_cli(["catalog", "export", "thm2", "--out", str(dest)], capsys)
    assert code == 0
    from levilab.catalog import thm2_rho
    from levilab.serialize import domain_from_dict

    dom = domain_from_dict(json.loads(dest.read_text()))
    assert dom.rho == thm2_rho()
    assert dom.known_bad_points == ((1 + 0j, 0j),)


def test_exported_domain_usable_as_file_input(tmp_path, capsys):
    dest = tmp_path / "dom.json"
    run_cli(["catalog", "export", "thm1", "--out", str(dest)], capsys)
    code, out = run_cli(["lattice", "--domain", str(dest)], capsys)
    assert code == 0
    assert json.loads(out)["rank"] == 2


def test_family_export_and_signscan(tmp_path, capsys):
    map_path = tmp_path / "map.json"
    src_path = tmp_path / "src.json"
    run_cli(
        ["catalog", "export", "thm2", "--family", "subgroup", "--param", "1/2",
         "--out", str(map_path)],
        capsys,
    )
    run_cli(["catalog", "export", "thm2", "--out", str(src_path)], capsys)
    code, out = run_cli(
        ["signscan", "--map", str(map_path), "--src", str(src_path),
         "--dst", "catalog:thm2", "--samples", "200"],
        capsys,
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"]
    assert rep["boundary_max_abs"] < 1e-6


def test_family_export_requires_param(capsys):
    with pytest.raises(SystemExit):
        main(["catalog", "export", "thm2", "--family", "subgroup"])
    with pytest.raises(SystemExit):
        main(["catalog", "export", "thm2", "--family", "nope", "--param", "1/2"])


def test_verify_thm2_small_and_deterministic(capsys):
    code, out1 = run_cli(["verify-thm2", "--samples", "150", "--seed", "3"], capsys)
    assert code == 0
    rep = json.loads(out1)
    assert rep["overall"] == "PASS"
    code, out2 = run_cli(["verify-thm2", "--samples", "150", "--seed", "3"], capsys)
    assert out1 == out2  # byte-identical reports for fixed inputs


def test_verify_thm1_small(capsys):
    code, out = run_cli(["verify-thm1", "--samples", "400", "--seed", "2"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["overall"] == "PASS"
    assert [c["verdict"] for c in rep["checks"]] == ["PASS"] * len(rep["checks"])


def test_cli_subprocess_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "levilab.cli", "classify", "--n", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    rep = json.loads(proc.stdout)
    assert rep["achievable"] == [1, 3]


def test_unknown_catalog_entry_fails(capsys):
    with pytest.raises(SystemExit):
        main(["levi", "--domain", "catalog:nope", "--point", "[[0,0],[0,0]]"])


def test_levi_off_boundary_exits_cleanly(capsys):
    with pytest.raises(SystemExit, match="not on the boundary"):
        main(["levi", "--domain", "catalog:thm1", "--point", "[[0.5,0],[0,0],[0,0]]"])


def test_exact_checks_invariant_under_seed(capsys):
    _, out1 = run_cli(["verify-thm2", "--samples", "120", "--seed", "0"], capsys)
    _, out2 = run_cli(["verify-thm2", "--samples", "120", "--seed", "9"], capsys)
    r1, r2 = json.loads(out1), json.loads(out2)
    exact1 = {c["id"]: c["verdict"] for c in r1["checks"] if c["kind"] == "exact"}
    exact2 = {c["id"]: c["verdict"] for c in r2["checks"] if c["kind"] == "exact"}
    assert exact1 == exact2


def test_thread_cap_env(monkeypatch):
    from levilab import backend

    monkeypatch.setenv("LEVILAB_THREADS", "1")
    monkeypatch.setenv("LEVILAB_BACKEND", "numba")
    assert backend.active_backend() == "numba"
    import numba

    assert numba.get_num_threads() == 1
