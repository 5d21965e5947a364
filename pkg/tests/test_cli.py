import io

import pytest

from selfsim.cli import main
from selfsim.treecore import format_automaton


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_act():
    assert run("act", "--aut", "adding", "--word", "2 2 1") == (0, "1 1 2\n")
    assert run("act", "--aut", "double-adding", "--word", "3 3") == (0, "4 3\n")


def test_act_from_file(tmp_path, double_adding):
    f = tmp_path / "d.aut"
    f.write_text(format_automaton(double_adding))
    assert run("act", "--aut", str(f), "--word", "3 3") == (0, "4 3\n")


def test_mul_and_inv():
    code, out = run("mul", "--aut", "adding", "--aut", "adding")
    assert code == 0 and out.startswith("m 2")
    code, out = run("inv", "--aut", "t4-cyclic:type=2,2;exps=1,2,3,0", "--depth", "2")
    assert code == 0 and out.startswith("portrait at depth 2")


def test_section_states_orbits_factor():
    code, out = run("section", "--aut", "double-adding", "--word", "2")
    assert code == 0 and "state a perm 2 1 4 3 to e a e a" in out
    code, out = run("states", "--aut", "theorem-c:n=4", "--gen", "4")
    assert code == 0 and out.startswith("4 states")
    code, out = run("orbits", "--aut", "double-adding")
    assert "orbit-type (2, 2)" in out and "P_(1) = <(1 2)>" in out
    code, out = run("factor", "--aut", "double-adding")
    assert code == 0 and out.count("a_[") == 2


def test_delta_close():
    code, out = run("delta-close", "--aut", "rooted", "--len", "2")
    assert code == 0 and out.startswith("3 generators")


def test_centralizer_with_oracle():
    code, out = run("centralizer", "--aut", "rooted", "--delta-len", "2", "--depth", "3", "--brute")
    assert code == 0 and "order 8" in out and "PASS" in out


def test_conjugate():
    code, out = run("conjugate", "--aut", "adding", "--power", "3", "--depth", "4")
    assert code == 0 and out.startswith("conjugator")


@pytest.mark.parametrize("argv", [
    ["verify", "theorem-a", "--aut", "adding", "--depth", "3"],
    ["verify", "theorem-b", "--aut", "double-adding", "--depth", "2"],
    ["verify", "prop-4-2", "--aut", "double-adding", "--depth", "2"],
    ["verify", "t4", "--type", "2,2", "--exps", "0,1,0,2"],
    ["verify", "fix", "--aut", "double-adding", "--letters", "1", "3", "--depth", "4"],
    ["verify", "multiplicity", "--m", "2", "--s", "2"],
    ["gdata", "check", "double-adding"],
    ["catalog", "show", "multiplicity:m=2;s=2"],
])
def test_passing_reports(argv):
    code, out = run(*argv)
    assert code == 0 and "FAIL" not in out


def test_failing_report_exit_code():
    # Fix(1) of the adding machine is <a^2>, so the claim <a^4> must fail
    code, out = run("verify", "fix", "--aut", "adding", "--letters", "1", "--power", "4", "--depth", "3")
    assert code == 1 and "FAIL" in out


def test_gdata_core_and_represent(tmp_path):
    code, out = run("gdata", "core", "adding")
    assert code == 0 and out.startswith("F-core trivial")
    f = tmp_path / "id.gd"
    f.write_text("rank 1\norbit 1 index 1\nH\n1\nf\n1\n")
    code, out = run("gdata", "core", str(f))
    assert "nontrivial" in out
    code, out = run("gdata", "represent", "double-adding", "--depth", "1")
    assert out == "phi(e_1) at depth 1: (1 2)(3 4)\n"


def test_catalog_list():
    code, out = run("catalog", "list")
    assert code == 0 and "double-adding" in out


def test_export_dot():
    code, out = run("export-dot", "--aut", "double-adding")
    assert code == 0 and '"a" -> "e" [label="1|2,3|4"];' in out


def test_input_errors(capsys):
    assert run("act", "--aut", "adding", "--word", "3")[0] == 2
    assert run("act", "--aut", "nosuch", "--word", "1")[0] == 2
    assert run("states", "--aut", "theorem-c:n=2", "--gen", "5")[0] == 2
    assert run("verify", "t4")[0] == 2
    assert run("gdata", "check", "nosuch")[0] == 2


def test_resource_error():
    code, _ = run("centralizer", "--aut", "rooted:m=4;perm=(1 2)(3 4)", "--depth", "3", "--brute")
    assert code == 3
