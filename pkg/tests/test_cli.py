import io
import json

import pytest

from at4tools import cli, graphcheck


def run(argv):
    buf = io.StringIO()
    rc = cli.main(argv, out=buf)
    return rc, buf.getvalue()


def run_json(argv):
    rc, text = run(["--format", "json", "--deterministic", *argv])
    return rc, (json.loads(text) if text else None)


def test_scan_soicher_entry():
    rc, rep = run_json(["scan", "2", "2"])
    assert rc == 0
    assert rep["schema"] == "at4.report/1"
    entry = rep["entries"][0]
    assert entry["feasible_r"] == [3]
    assert entry["arrays"][0]["b"] == [56, 45, 16, 1]
    assert entry["arrays"][0]["c"] == [1, 8, 45, 56]
    assert entry["arrays"][0]["fundamental_bound"] == "equality"
    assert entry["edge_stabilizer_primes"] == "inapplicable"
    assert "timing_ms" not in rep


def test_scan_p11_entry():
    rc, rep = run_json(["scan", "11", "11"])
    assert rc == 0
    entry = rep["entries"][0]
    assert entry["feasible_r"] == [3, 4, 6, 12]
    assert entry["spectrum_lower"] == [2, 3, 5, 13, 167]
    assert entry["spectrum_upper"] == [2, 3, 5, 7, 11, 13, 167]


def test_scan_p4_gates_inapplicable():
    rc, rep = run_json(["scan", "4", "4"])
    assert rc == 0
    entry = rep["entries"][0]
    assert entry["s"] == 34 and entry["s_prime"] is False
    assert entry["centralizer_filter"] == "inapplicable"
    assert entry["edge_stabilizer_primes"] == [2, 3]  # p = 4 is a prime power


def test_scan_bad_range_usage_error():
    rc, _ = run(["scan", "5", "3"])
    assert rc == 2
    rc, _ = run(["scan", "1", "3"])
    assert rc == 2


def test_scan_byte_identical_and_parallel(monkeypatch):
    rc1, out1 = run(["--format", "json", "--deterministic", "scan", "2", "6"])
    rc2, out2 = run(["--format", "json", "--deterministic", "scan", "2", "6"])
    assert rc1 == rc2 == 0 and out1 == out2
    rc3, out3 = run(["--format", "json", "--deterministic", "--jobs", "2", "scan", "2", "6"])
    assert rc3 == 0 and out3 == out1
    monkeypatch.setenv("AT4_JOBS", "2")
    rc4, out4 = run(["--format", "json", "--deterministic", "scan", "2", "6"])
    assert rc4 == 0 and out4 == out1


def test_array_report():
    rc, rep = run_json(["array", "2", "3"])
    assert rc == 0
    assert rep["vertices"] == 486
    assert rep["antipodal_classes"] == 162
    assert rep["recovered_r"] == "3"
    assert rep["eigenvalues"] == [56, 14, 2, -4, -16]
    assert rep["quotient_srg"] == [162, 56, 10, 24]


def test_array_invalid_params():
    rc, _ = run(["array", "3", "3"])  # 3 does not divide 8
    assert rc == 2


def test_profile_reports():
    rc, rep = run_json(["profile", "3", "4", "23"])
    assert rc == 0
    assert rep["alpha1_fixed_point_free"] == [23]
    rc, rep = run_json(["profile", "3", "4", "5"])
    assert rep["cover_congruences"] == [0, 4, 0, 3]
    assert rep["subconstituent_congruences"] == [0, 0, 0, 3]
    rc, rep = run_json(["profile", "3", "4", "29"])
    assert rep["order_admissible_with_fixed_points"] is False
    assert rep["order_admissible_fixed_point_free"] is False


def test_profile_rejects_composite_order():
    rc, _ = run(["profile", "3", "4", "6"])
    assert rc == 2


def test_bounds_report():
    rc, rep = run_json(["bounds", "11"])
    assert rc == 0
    assert rep["spectrum_lower"] == [2, 3, 5, 13, 167]
    assert rep["block_sizes"] == [1, 13, 167]
    assert rep["exclusion"]["verdict"] == "pass"
    assert rep["fix_bound"] == 167


def test_bounds_p25_live_solvable_branch():
    # p = 25 is the one small case where both solvable branches survive
    # (27 = 3^3 with 727 = 1 mod 3), while the arc-transitive exclusion
    # gate still fails because 27 is composite
    rc, rep = run_json(["bounds", "25"])
    assert rc == 0
    exclusion = rep["exclusion"]
    assert exclusion["verdict"] == "fail"
    assert exclusion["data"]["s"] == 727 and exclusion["data"]["s_prime"] is True
    assert exclusion["data"]["q_prime"] is False
    assert exclusion["data"]["solvable"]["verdict"] == "pass"
    assert exclusion["data"]["solvable"]["data"]["case_i"]["applicable"] is True


def test_verify_petersen(tmp_path):
    path = tmp_path / "petersen.txt"
    path.write_text(graphcheck.graph_to_text(graphcheck.generate_petersen()))
    rc, rep = run_json(["verify", str(path)])
    assert rc == 0
    assert rep["srg"] == [10, 3, 0, 1]
    assert rep["drg"] == {"b": [3, 2], "c": [1, 1]}


def test_verify_parse_error(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("n 2\n0: 0\n")
    rc, _ = run(["verify", str(path)])
    assert rc == 3


def test_verify_missing_file():
    rc, _ = run(["verify", "/nonexistent/graph.txt"])
    assert rc == 3


@pytest.fixture(scope="module")
def gewirtz_files(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("audit")
    g = graphcheck.generate_gewirtz()
    witnesses = graphcheck.gewirtz_automorphisms(12)
    gpath = tmp / "gewirtz.txt"
    gpath.write_text(graphcheck.graph_to_text(g))
    ppath = tmp / "gens.txt"
    ppath.write_text(graphcheck.permutations_to_text(witnesses))
    return gpath, ppath, witnesses


def test_audit_passes(gewirtz_files):
    gpath, ppath, _ = gewirtz_files
    rc, rep = run_json(["audit", str(gpath), str(ppath), "2"])
    assert rc == 0
    assert rep["passed"] == rep["total"] == 12
    assert rep["failures"] == []


def test_audit_corrupted_permutation(gewirtz_files, tmp_path):
    gpath, _, witnesses = gewirtz_files
    bad = list(witnesses[1])
    bad[0], bad[1] = bad[1], bad[0]
    ppath = tmp_path / "bad.txt"
    ppath.write_text(graphcheck.permutations_to_text([witnesses[0], tuple(bad)]))
    rc, rep = run_json(["audit", str(gpath), str(ppath), "2"])
    assert rc == 1
    assert rep["failures"] == [[1, ["not-automorphism"]]]


def test_audit_wrong_family(gewirtz_files, tmp_path):
    pet = tmp_path / "petersen.txt"
    pet.write_text(graphcheck.graph_to_text(graphcheck.generate_petersen()))
    perms = tmp_path / "id.txt"
    perms.write_text(" ".join(map(str, range(10))) + "\n")
    rc, rep = run_json(["audit", str(pet), str(perms), "2"])
    assert rc == 1
    assert "error" in rep


def test_text_format_deterministic():
    rc1, out1 = run(["--deterministic", "bounds", "3"])
    rc2, out2 = run(["--deterministic", "bounds", "3"])
    assert rc1 == rc2 == 0 and out1 == out2
    assert "spectrum_lower" in out1


def test_timing_present_without_flag():
    rc, out = run(["--format", "json", "array", "2", "3"])
    assert rc == 0
    assert "timing_ms" in json.loads(out)
