import os

import pytest

from omegarec.cli import main
from omegarec.formats import (
    dump_automaton,
    dump_recognizer,
    dump_semigroup,
    parse_artifact,
    parse_recognizer,
)
from omegarec import (
    leftzero_recognizer,
    theorem8_recognizer,
    thm6_automaton,
    weak_to_strong_simple,
)


@pytest.fixture
def files(tmp_path):
    paths = {}
    paths["leftzero"] = tmp_path / "leftzero.rec"
    paths["leftzero"].write_text(dump_recognizer(leftzero_recognizer(2)))
    paths["strong"] = tmp_path / "strong.rec"
    paths["strong"].write_text(dump_recognizer(weak_to_strong_simple(leftzero_recognizer(2))))
    paths["thm6"] = tmp_path / "thm6.aut"
    paths["thm6"].write_text(dump_automaton(thm6_automaton(5)))
    paths["sg"] = tmp_path / "sg.sem"
    paths["sg"].write_text(dump_semigroup(leftzero_recognizer(2).h.target))
    paths["tmp"] = tmp_path
    return paths


class TestMember:
    def test_weak_true(self, files, capsys):
        assert main(["member", str(files["leftzero"]), "--word", "u=a", "v=ba"]) == 0
        assert capsys.readouterr().out.strip() == "true"

    def test_weak_false_exit_code(self, files, capsys):
        assert main(["member", str(files["leftzero"]), "--word", "u=a", "v=b"]) == 1
        assert capsys.readouterr().out.strip() == "false"

    def test_automaton_finite_word(self, files, capsys):
        word = "a" * 3 + "b" + "a" * 9 + "b"
        assert main(["member", str(files["thm6"]), "--word", f"u={word}"]) == 1
        accepted = "a" * 3 + "b" + "a" * 11
        assert main(["member", str(files["thm6"]), "--word", f"u={accepted}"]) == 0

    def test_automaton_up_word(self, files):
        # reach the final state through the crossing, then loop on b forever
        word = "a" * 3 + "b" + "a" * 11
        assert main(["member", str(files["thm6"]), "--word", f"u={word}", "v=b"]) == 0
        assert main(["member", str(files["thm6"]), "--word", "u=aab", "v=b"]) == 1

    def test_strong_recognizer(self, files):
        assert main(["member", str(files["strong"]), "--word", "u=a", "v=ab"]) == 0

    def test_missing_u(self, files):
        assert main(["member", str(files["leftzero"]), "--word", "v=ab"]) == 2


class TestConvert:
    @pytest.mark.parametrize("kind,source", [
        ("ba-weak", "thm6"), ("ba-strong", "thm6"), ("nfa-rec", "thm6"),
        ("weak-ba", "leftzero"), ("weak-strong", "leftzero"),
        ("weak-strong-simple", "leftzero"),
    ])
    def test_conversions_emit_artifacts_and_sizes(self, files, capsys, kind, source):
        assert main(["convert", kind, str(files[source])]) == 0
        captured = capsys.readouterr()
        assert captured.err.startswith("sizes: in=")
        parse_artifact(captured.out)

    def test_wrong_input_type(self, files, capsys):
        assert main(["convert", "ba-weak", str(files["leftzero"])]) == 2


class TestComplementAndMinimize:
    def test_complement_round_trip(self, files, capsys):
        assert main(["complement", str(files["strong"])]) == 0
        out = capsys.readouterr().out
        rec = parse_recognizer(out)
        original = parse_recognizer(files["strong"].read_text())
        assert all(rec.accept[p] != original.accept[p] for p in rec.accept)

    def test_minimize_strong(self, files, capsys):
        assert main(["minimize", str(files["strong"])]) == 0
        captured = capsys.readouterr()
        assert "sizes: in=8 out=" in captured.err
        parse_recognizer(captured.out)

    def test_minimize_rejects_weak(self, files):
        assert main(["minimize", str(files["leftzero"])]) == 2


class TestEquiv:
    def test_same_language_through_different_routes(self, files, capsys):
        assert main(["equiv", str(files["leftzero"]), str(files["strong"])]) == 0
        assert capsys.readouterr().out.strip() == "equivalent"

    def test_different(self, files, tmp_path, capsys):
        other = tmp_path / "compl.rec"
        main(["complement", str(files["strong"])])
        other.write_text(capsys.readouterr().out)
        assert main(["equiv", str(files["strong"]), str(other)]) == 1
        assert capsys.readouterr().out.strip() == "different"


class TestGreen:
    def test_classes(self, files, capsys):
        assert main(["green", str(files["sg"])]) == 0
        out = capsys.readouterr().out
        assert "r-class 0: 0" in out
        assert "l-class 0: 0 1" in out

    def test_rejects_non_semigroup(self, files):
        assert main(["green", str(files["thm6"])]) == 2


class TestCertify:
    def test_certifies_marker_words(self, files, tmp_path, capsys):
        words = tmp_path / "words.txt"
        words.write_text("a\nb\n")
        comp = tmp_path / "comp.rec"
        main(["complement", str(files["strong"])])
        comp.write_text(capsys.readouterr().out)
        assert main(["certify", str(words), "--oracle", str(comp), "--lmax", "2"]) == 0
        captured = capsys.readouterr()
        assert captured.out.startswith("pair a b kind 1")
        assert "certified bound: 2" in captured.err

    def test_uncertifiable_pair(self, files, tmp_path, capsys):
        words = tmp_path / "words.txt"
        words.write_text("a\na\n")
        assert main(["certify", str(words), "--oracle", str(files["leftzero"])]) == 1
        assert "uncertified pair" in capsys.readouterr().err


class TestWitness:
    def test_thm6(self, capsys):
        assert main(["witness", "thm6", "--n", "5"]) == 0
        assert parse_artifact(capsys.readouterr().out) == thm6_automaton(5)

    def test_thm8(self, capsys):
        assert main(["witness", "thm8", "--n", "3"]) == 0
        rec = parse_recognizer(capsys.readouterr().out)
        assert rec.h.target.size == 15
        _, expected = theorem8_recognizer(3)
        assert rec.accept == expected.accept

    def test_leftzero(self, capsys):
        assert main(["witness", "leftzero", "--n", "4"]) == 0
        assert parse_recognizer(capsys.readouterr().out).h.target.size == 4

    def test_bad_parameter(self, capsys):
        assert main(["witness", "thm6", "--n", "4"]) == 2


class TestTable1:
    def test_report_to_stdout(self, capsys):
        assert main(["table1", "--n", "2"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("operation\t")
        assert "transition_semigroup=16" in out

    def test_out_dir_writes_files(self, tmp_path, capsys):
        out_dir = tmp_path / "report"
        assert main(["table1", "--n", "2", "--out-dir", str(out_dir)]) == 0
        capsys.readouterr()
        assert (out_dir / "table1_n2.tsv").exists()
        assert (out_dir / "table1_n2.png").exists()


class TestErrors:
    def test_missing_file(self, capsys):
        assert main(["member", "/nonexistent", "--word", "u=a", "v=a"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_malformed_artifact(self, tmp_path, capsys):
        bad = tmp_path / "bad.sem"
        bad.write_text("semigroup 2\n0 0\n")
        assert main(["green", str(bad)]) == 2
