import io
import json

from krasner.cli import main
from krasner.dsl import parse_hyperring
from krasner.constructions import find_isomorphism
from krasner.dsl import classical_zn


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_check_pass(khr_dir):
    code, out = run_cli("check", str(khr_dir / "h3.khr"))
    assert code == 0
    assert out.strip() == "PASS (canonical hypergroup: 5/5 axioms; Krasner: 4/4)"


def test_check_fail_prints_witness(khr_dir):
    code, out = run_cli("check", str(khr_dir / "chain3.khr"))
    assert code == 1
    assert out.startswith("FAIL (canonical hypergroup: 5/5 axioms; Krasner: 3/4)")
    assert "distributivity" in out and "witness" in out


def test_check_parse_error_location(khr_dir):
    code, out = run_cli("check", str(khr_dir / "broken.khr"))
    assert code == 2
    assert "line" in out and "col" in out and "MissingCell" in out


def test_check_missing_file():
    code, out = run_cli("check", "no-such-file.khr")
    assert code == 2


def test_classify_ideal(khr_dir):
    code, out = run_cli("classify", str(khr_dir / "z6.khr"), "--ideal", "{0,2,4}")
    assert code == 0
    assert "r-hyperideal: YES" in out
    assert "prime: YES" in out


def test_classify_chain_witness(khr_dir):
    code, out = run_cli("classify", str(khr_dir / "chain3.khr"), "--ideal", "{0,a}")
    assert code == 0
    assert "r-hyperideal: NO, witness a·1=a, ann(a)=0, 1∉N" in out


def test_classify_all_lists_lattice(khr_dir):
    code, out = run_cli("classify", str(khr_dir / "z6.khr"), "--all")
    assert code == 0
    assert "ideal lattice (4): {0}, {0,3}, {0,2,4}, {0,1,2,3,4,5}" in out
    assert out.count("ideal {") == 4


def test_classify_rejects_non_ideal(khr_dir):
    code, out = run_cli("classify", str(khr_dir / "z6.khr"), "--ideal", "{0,2}")
    assert code == 2
    assert "not a hyperideal" in out


def test_classify_unknown_element(khr_dir):
    code, out = run_cli("classify", str(khr_dir / "z6.khr"), "--ideal", "{0,q}")
    assert code == 2
    assert "unknown element" in out


def test_classify_phi_flags(khr_dir):
    code, out = run_cli(
        "classify", str(khr_dir / "z6.khr"), "--ideal", "{0,2,4}", "--phi", "2", "--phi", "omega"
    )
    assert code == 0
    assert "phi_2-r: YES (vacuous)" in out
    assert "phi_omega-r:" in out
    code, out = run_cli("classify", str(khr_dir / "z6.khr"), "--ideal", "{0}", "--phi", "zeta")
    assert code == 2


def test_verify_subset_exits_zero(capfd):
    code, out = run_cli("verify", "--theorems", "COR-1a,THM-9,PROP-4")
    assert code == 0
    assert "COR-1a" in out and "confirmed at desk scale" in out
    assert "overall: OK" in out


def test_verify_expected_falsifications_keep_exit_zero():
    code, out = run_cli("verify", "--theorems", "EX3-CLAIM,COR-1j")
    assert code == 0
    assert "falsified as expected" in out
    assert "chain3" in out and "a·1=a" in out


def test_verify_unknown_theorem():
    code, out = run_cli("verify", "--theorems", "THM-42")
    assert code == 2
    assert "unknown theorem id" in out


def test_verify_jsonlines_records():
    code, out = run_cli("verify", "--theorems", "COR-1j", "--format", "jsonlines")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert all({"theorem_id", "ring_id", "verdict", "witness"} <= set(r) for r in records)
    assert any(r["verdict"] == "violation" and r["ring_id"] == "Z6" for r in records)


def test_verify_corpus_dir(khr_dir, tmp_path):
    good = tmp_path / "corpus"
    good.mkdir()
    (good / "z6.khr").write_text((khr_dir / "z6.khr").read_text())
    (good / "h3.khr").write_text((khr_dir / "h3.khr").read_text())
    code, out = run_cli("verify", "--corpus", str(good), "--theorems", "COR-1a")
    assert code == 0
    assert "corpus: 2 entries" in out


def test_verify_corpus_dir_rejects_invalid(khr_dir, tmp_path):
    bad = tmp_path / "badcorpus"
    bad.mkdir()
    (bad / "chain3.khr").write_text((khr_dir / "chain3.khr").read_text())
    code, out = run_cli("verify", "--corpus", str(bad), "--theorems", "COR-1a")
    assert code == 2
    assert "not a Krasner hyperring" in out
    code, _ = run_cli("verify", "--corpus", str(tmp_path / "missing"), "--theorems", "COR-1a")
    assert code == 2


def test_verify_seeded_random_extension():
    code_a, out_a = run_cli(
        "verify", "--theorems", "COR-1a", "--seed", "7", "--random-count", "3", "--max-order", "3"
    )
    code_b, out_b = run_cli(
        "verify", "--theorems", "COR-1a", "--seed", "7", "--random-count", "3", "--max-order", "3"
    )
    assert code_a == code_b == 0
    assert out_a == out_b


def test_enumerate_order2():
    code, out = run_cli("enumerate", "--order", "2")
    assert code == 0
    assert out.rstrip().endswith("# total: 4")
    assert out.count("hyperring ") == 4


def test_enumerate_order_too_large():
    code, out = run_cli("enumerate", "--order", "4")
    assert code == 2
    code, out = run_cli("enumerate", "--order", "7", "--random", "1", "2")
    assert code == 2


def test_enumerate_random_reproducible():
    code_a, out_a = run_cli("enumerate", "--order", "3", "--random", "5", "4")
    code_b, out_b = run_cli("enumerate", "--order", "3", "--random", "5", "4")
    assert code_a == code_b == 0 and out_a == out_b


def test_quotient_command(khr_dir, tmp_path):
    target = tmp_path / "q.khr"
    code, out = run_cli(
        "quotient", str(khr_dir / "z6.khr"), "--ideal", "{0,3}", "--emit", str(target)
    )
    assert code == 0
    assert "# coset [0] = {0,3}" in out
    ring = parse_hyperring(target.read_text())
    assert ring.order == 3
    assert find_isomorphism(ring, classical_zn(3)) is not None


def test_quotient_rejects_bad_ideal(khr_dir):
    code, out = run_cli("quotient", str(khr_dir / "z6.khr"), "--ideal", "{0,2}")
    assert code == 2
    assert "not a hyperideal" in out
    code, out = run_cli("quotient", str(khr_dir / "z6.khr"), "--ideal", "{0,1,2,3,4,5}")
    assert code == 2
