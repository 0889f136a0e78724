import io
import subprocess
import sys

from lensrack.cli import run
from lensrack.fixtures import diagram_path, rack_path


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_rack_info():
    code, out, _ = call("rack-info", "-r", rack_path("r4_quandle"))
    assert code == 0
    assert out.splitlines()[0] == "order 4, rank 1, quandle: yes"
    code, out, _ = call("rack-info", "-r", rack_path("r3_rank2"))
    assert out == "order 3, rank 2, quandle: no\noperator classes: {1} {2,3}\n"


def test_validate_rack(tmp_path):
    code, out, _ = call("validate-rack", "-r", rack_path("r6_rank2"))
    assert (code, out) == (0, "valid rack: order 6, rank 2\n")
    bad = tmp_path / "bad.rack"
    bad.write_text("rack 2\n1 1\n1 2\n")
    code, out, err = call("validate-rack", "-r", bad)
    assert code == 1 and out == "" and "column 1" in err


def test_transposed_flag(tmp_path):
    f = tmp_path / "t.rack"
    f.write_text("rack 2\n2 1\n2 1\n")
    assert call("validate-rack", "-r", f)[0] == 1
    code, out, _ = call("--transposed", "rack-info", "-r", f)
    assert code == 0 and out.startswith("order 2, rank 2")


def test_invariant_kinds():
    r, d = rack_path("trivial1"), diagram_path("trefoil_d1_p3")
    assert call("invariant", "-r", r, "-d", d, "--kind", "z")[1] == "phi_Z = 1\n"
    assert call("invariant", "-r", r, "-d", d, "--kind", "w")[1] == "phi_W = 1\n"
    assert call("invariant", "-r", r, "-d", d, "--kind", "sym")[1] == "phi_Sym = 1\n"
    assert call("invariant", "-r", r, "-d", d, "--kind", "wsym")[1] == "phi_WSym = 1\n"


def test_invariant_levels_and_table():
    r, d = rack_path("r6_rank2"), diagram_path("trefoil_p3")
    assert call("invariant", "-r", r, "-d", d, "--kind", "w", "--levels", "uniform")[1] == "phi_W = 12 + 10*q1\n"
    code, out, _ = call("invariant", "-r", r, "-d", d, "--kind", "w", "--table")
    assert out == "phi_W\n# q1\n0\t30\n1\t28\n"


def test_homs_oracle_listing_identical():
    r, d = rack_path("dihedral3"), diagram_path("unknot_p3")
    a = call("homs", "-r", r, "-d", d, "--list")
    b = call("homs", "-r", r, "-d", d, "--list", "--oracle")
    assert a == b
    assert a[1].splitlines()[0] == "count 9"
    assert a[1].splitlines()[1] == "1 | 1 | 1"


def test_enum_racks():
    code, out, _ = call("enum-racks", "-n", 3, "--up-to-iso")
    assert code == 0 and out.splitlines()[0] == "count 6"
    assert call("enum-racks", "-n", 9)[0] == 1


def test_budget_exceeded_is_domain_error():
    code, _, err = call("homs", "-r", rack_path("r4_quandle"), "-d", diagram_path("trefoil_d2_p3"), "--oracle")
    assert code == 1 and "budget" in err


def test_usage_errors():
    assert call()[0] == 2
    assert call("homs", "-r", rack_path("trivial1"))[0] == 2
    assert call("invariant", "-r", rack_path("trivial1"), "-d", diagram_path("unknot_p1"), "--kind", "q")[0] == 2


def test_missing_and_invalid_files(tmp_path):
    assert call("rack-info", "-r", tmp_path / "nope.rack")[0] == 1
    bad = tmp_path / "bad.diag"
    bad.write_text("p 2\narcs 3\ncomponent 1: 1\n")
    assert call("homs", "-r", rack_path("trivial1"), "-d", bad)[0] == 1


def test_output_is_stable():
    argv = ("invariant", "-r", rack_path("r3_rank2"), "-d", diagram_path("hopf_d1_p3"), "--kind", "wsym")
    assert call(*argv) == call(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lensrack", "invariant", "-r", str(rack_path("trivial1")),
         "-d", str(diagram_path("unknot_p2")), "--kind", "z"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "phi_Z = 1\n"
