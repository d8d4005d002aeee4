
from conftest import s4_group
from grpalg.cli import main
from grpalg.groups import format_cayley, metacyclic_group


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decompose_d8(capsys):
    code, out, _ = run(capsys, "decompose", "--metacyclic", "4", "2", "0", "3",
                       "--p", "3")
    assert code == 0
    assert "wedderburn.components = [(1, 1, 4), (2, 1, 1)]" in out
    assert "wedderburn.algebra = F_3^(4) + M_2(F_3)" in out


def test_verify_d2(capsys):
    code, out, _ = run(capsys, "verify", "--d2", "2", "--p", "3")
    assert code == 0
    assert "wedderburn.components = [(1, 1, 4), (1, 2, 2), (2, 2, 1)]" in out
    assert "oracle.match = yes" in out
    assert "oracle.q_class_count = 7" in out


def test_not_semisimple_exit_3(capsys):
    code, _, err = run(capsys, "decompose", "--d1", "2", "--p", "2")
    assert code == 3
    assert "not semisimple" in err


def test_not_metabelian_exit_4(capsys, tmp_path):
    path = tmp_path / "s4.cayley"
    path.write_text(format_cayley(s4_group()))
    code, _, err = run(capsys, "decompose", "--cayley", str(path), "--p", "5")
    assert code == 4
    assert "not metabelian" in err


def test_parse_error_exit_2(capsys, tmp_path):
    code, _, _ = run(capsys, "decompose", "--metacyclic", "4", "--p", "3")
    assert code == 2
    bad = tmp_path / "bad.cayley"
    bad.write_text("order 2\n0 1\n")
    code2, _, err = run(capsys, "decompose", "--cayley", str(bad), "--p", "3")
    assert code2 == 2
    code3, _, err3 = run(capsys, "decompose", "--cayley",
                         str(tmp_path / "missing"), "--p", "3")
    assert code3 == 2


def test_bad_presentation_exit_2(capsys):
    code, _, err = run(capsys, "decompose", "--metacyclic", "5", "2", "0", "3",
                       "--p", "7")
    assert code == 2


def test_compare_metacyclic(capsys):
    code, out, _ = run(capsys, "compare", "--metacyclic", "9", "3", "0", "4",
                       "--p", "7")
    assert code == 0
    assert "metacyclic.match = yes" in out


def test_compare_closed_form(capsys):
    code, out, _ = run(capsys, "compare", "--d1", "3", "--p", "5")
    assert code == 0
    assert "closed_form.match = yes" in out
    code2, out2, _ = run(capsys, "compare", "--d2", "2", "--p", "7")
    assert code2 == 0
    assert "metacyclic.match = yes" in out2
    assert "closed_form.match = yes" in out2


def test_families_sweep(capsys):
    code, out, _ = run(capsys, "families", "--family", "d2", "--m", "2",
                       "--q", "3", "5")
    assert code == 0
    assert "d2.2.3.engine_match = yes" in out
    assert "d2.2.5.engine_match = yes" in out


def test_idempotents_emitted(capsys):
    code, out, _ = run(capsys, "idempotents", "--metacyclic", "3", "2", "0", "2",
                       "--p", "5")
    assert code == 0
    assert "wedderburn.idempotent.0.coeffs" in out
    assert "wedderburn.idempotent.2.d" in out


def test_report_reproducible_and_out_file(capsys, tmp_path):
    out_path = tmp_path / "report.txt"
    code, out1, _ = run(capsys, "verify", "--metacyclic", "5", "4", "0", "2",
                        "--p", "3", "--out", str(out_path))
    assert code == 0
    text = out_path.read_text()
    assert text == out1
    code2, out2, _ = run(capsys, "verify", "--metacyclic", "5", "4", "0", "2",
                         "--p", "3", "--out", str(out_path))
    assert out2 == out1
    assert out_path.read_text() == text


def test_cayley_group_decomposes(capsys, tmp_path):
    path = tmp_path / "s3.cayley"
    path.write_text(format_cayley(metacyclic_group(3, 2, 0, 2)))
    code, out, _ = run(capsys, "verify", "--cayley", str(path), "--p", "5")
    assert code == 0
    assert "oracle.match = yes" in out


def test_extension_field_flag(capsys):
    code, out, _ = run(capsys, "decompose", "--metacyclic", "5", "4", "0", "2",
                       "--p", "3", "--a", "2")
    assert code == 0
    assert "wedderburn.q = 9" in out
