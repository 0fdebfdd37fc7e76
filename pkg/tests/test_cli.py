import json
import subprocess
import sys

from foxforge.cli import run
from foxforge.poly import LaurentPoly


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_alexander_builtin(capsys):
    code, out, _ = call(capsys, "alexander", "--pres", "builtin:paper_G")
    assert code == 0
    assert "polynomial: 1 - 3*t + 2*t^2 + 2*t^3 - 3*t^4 + t^5" in out


def test_alexander_json_roundtrip(capsys):
    code, out, _ = call(capsys, "alexander", "--pres", "builtin:paper_H", "--json")
    data = json.loads(out)
    assert code == 0 and data["normalized"] is True and data["minor_size"] == 4
    p = data["polynomial"]
    assert LaurentPoly.parse(p["text"]) == LaurentPoly.from_json(p["coefficients"])
    assert len(data["matrix"]) == 6


def test_alexander_missing_file(capsys):
    code, _, err = call(capsys, "alexander", "--pres", "nosuchfile")
    assert code == 1 and "nosuchfile" in err


def test_alexander_from_file(tmp_path, capsys):
    f = tmp_path / "trefoil.pres"
    f.write_text("gens: a, b; rels: a b a b^-1 a^-1 b^-1\n")
    code, out, _ = call(capsys, "alexander", "--pres", str(f))
    assert code == 0 and "polynomial: 1 - t + t^2" in out


def test_alexander_syntax_error_file(tmp_path, capsys):
    f = tmp_path / "bad.pres"
    f.write_text("gens: a, b; rels: a*c\n")
    code, _, err = call(capsys, "alexander", "--pres", str(f))
    assert code == 1 and "line 1, column 21" in err


def test_alexander_weight_error(tmp_path, capsys):
    f = tmp_path / "trefoil.pres"
    f.write_text("gens: a, b; rels: a b a b^-1 a^-1 b^-1\n")
    code, _, err = call(capsys, "alexander", "--pres", str(f), "--weights", "a=2")
    assert code == 1 and "weight sum 1" in err


def test_alexander_compare_exit_codes(capsys):
    code, out, _ = call(capsys, "alexander", "--pres", "builtin:paper_G", "--compare", "builtin:paper_H")
    assert code == 0 and "distinguished" in out
    code, out, _ = call(capsys, "alexander", "--pres", "builtin:paper_G", "--compare", "builtin:paper_G")
    assert code == 3 and "inconclusive" in out


def test_factored_hint(capsys):
    _, out, _ = call(capsys, "alexander", "--pres", "builtin:paper_G", "--factored-hint")
    assert "factored hint: (1 - t)^4*(1 + t)" in out


def test_minor_size(capsys):
    _, out, _ = call(capsys, "alexander", "--pres", "builtin:paper_G", "--minor-size", "1")
    assert "polynomial: 1 - t" in out


def test_usage_errors(capsys):
    assert call(capsys, "alexander")[0] == 2
    assert call(capsys, "nonsense")[0] == 2
    assert call(capsys, "alexander", "--pres", "builtin:mccool:x")[0] == 2
    assert call(capsys, "alexander", "--pres", "builtin:paper_G", "--weights", "e_3_1")[0] == 2


def test_present(capsys):
    code, out, _ = call(capsys, "present", "--pres", "builtin:mccool:3")
    assert code == 0 and "12 relators" in out


def test_fox_word(capsys):
    code, out, _ = call(capsys, "fox", "--word", "[x1,x2]", "--gens", "x1,x2", "--wrt", "x1")
    assert code == 0 and "-1*x1^-1 + 1*x1^-1*x2^-1" in out


def test_fox_pres_specialized(capsys):
    code, out, _ = call(capsys, "fox", "--pres", "builtin:paper_G", "--relator", "3", "--wrt", "e_4_3",
                        "--specialize", "--json")
    data = json.loads(out)
    assert code == 0
    spec = data[0]["derivatives"]["e_4_3"]["specialized"]
    assert spec["text"] == "t^-3 - t^-1"


def test_verify_mccool(capsys):
    code, out, _ = call(capsys, "verify", "relators", "--pres", "builtin:mccool:3", "--assign", "auto-eps")
    assert code == 0 and "PASS: 12/12" in out


def test_verify_pure_braid_auto(capsys):
    code, out, _ = call(capsys, "verify", "relators", "--pres", "builtin:pure_braid:4", "--assign", "auto")
    assert code == 0 and "PASS: 22/22" in out
    code, _, _ = call(capsys, "verify", "relators", "--pres", "builtin:pure_braid:4", "--assign", "auto",
                      "--order", "rtl")
    assert code == 1


def test_verify_explicit_assignment(capsys):
    code, out, _ = call(
        capsys, "verify", "relators", "--pres", "builtin:braid:3",
        "--assign", "s1=builtin:sigma:1:3,s2=builtin:sigma:2:3",
    )
    assert code == 0 and "PASS" in out


def test_verify_images_without_inverse(capsys):
    code, _, err = call(
        capsys, "verify", "relators", "--pres", "builtin:mccool:3", "--assign",
        ",".join(f"e_{i}_{j}=images:[x1;x2;x3]" for i in range(1, 4) for j in range(1, 4) if i != j),
    )
    assert code == 1 and "inverse" in err


def test_verify_poison(capsys):
    code, out, _ = call(capsys, "verify", "relators", "--pres", "builtin:poison_free:2", "--assign", "poison")
    assert code == 0 and "PASS: 6/6" in out


def test_verify_braid(capsys):
    code, out, _ = call(capsys, "verify", "braid", "--autom", "builtin:a:1:3:4", "--json")
    assert code == 0 and json.loads(out)["braid"] is True
    code, _, _ = call(capsys, "verify", "braid", "--autom", "builtin:eps:2:1:3")
    assert code == 1


def test_verify_center(capsys):
    cand = "builtin:eps:2:1:4*builtin:eps:3:1:4*builtin:eps:4:1:4"
    code, out, _ = call(capsys, "verify", "center", "--candidate", cand, "--against", "all-eps+:4")
    assert code == 0 and "6/6" in out
    code, out, _ = call(capsys, "verify", "center", "--candidate", cand, "--against", "all-eps:4")
    assert code == 1 and "9/12" in out


def test_verify_center_conj_spec(capsys):
    code, out, _ = call(capsys, "verify", "center", "--candidate", "conj:x1*x2:2",
                        "--against", "conj:x1*x2:2,builtin:eps:1:2:2")
    assert code == 1 and "1/2" in out


def test_scheuneman_alpha(capsys):
    code, out, _ = call(capsys, "scheuneman", "--alpha", "a1=[t2,t3];a2=[t1,t3];a3=[t1,t2]")
    assert code == 0 and "signature: {2,2,2}" in out


def test_scheuneman_compare(capsys):
    code, out, _ = call(capsys, "scheuneman", "--compare", "a1", "a2", "--json")
    assert code == 0 and json.loads(out)["verdict"] == "distinguished"
    code, _, _ = call(capsys, "scheuneman", "--compare", "a1", "a1")
    assert code == 3


def test_scheuneman_bad_alpha(capsys):
    code, _, err = call(capsys, "scheuneman", "--alpha", "a1=[t2,t1];a2=[t1,t3];a3=[t1,t2]")
    assert code == 1 and "not an allowed value" in err


def test_scheuneman_forms(capsys):
    code, out, _ = call(capsys, "scheuneman", "--form", "y1^2*y4 - y2^2*y5 + y3^2*y6 - y1*y2*y3",
                        "--form", "y1^2*y4 - y2*y5*y3 + y3^2*y6 - y1*y3^2")
    assert code == 0 and "verdict: distinguished" in out


def test_reproduce_prop32(capsys):
    code, out, _ = call(capsys, "reproduce", "prop3.2")
    assert code == 0 and "PASS: 6/6" in out


def test_reproduce_thm21_reports_table_status(capsys):
    code, out, err = call(capsys, "reproduce", "thm2.1")
    assert "verdict: distinguished" in out
    assert "table entries: 22/24 match" in out
    # two published entries differ from the computation by the unit t^-2
    assert code == 1 and "dr31/de_3_1" in err


def test_reproduce_thm21_weights(capsys):
    code, out, _ = call(capsys, "reproduce", "thm2.1", "--weights", "a_1_3=2")
    assert code == 0 and "skipped" in out


def test_deterministic_output(capsys):
    a = call(capsys, "reproduce", "thm2.1", "--json")[1]
    b = call(capsys, "reproduce", "thm2.1", "--json")[1]
    assert a == b


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "foxforge", "alexander", "--pres", "builtin:paper_G"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert "1 - 3*t + 2*t^2 + 2*t^3 - 3*t^4 + t^5" in r.stdout
