from __future__ import annotations

import json

import pytest

from braidgen.cli import main
from braidgen.growth import GrowthTables


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "-n", "4", "-k", "3"], "19"),
        (["count", "-n", "2", "-k", "100"], "1"),
        (["count", "-n", "3", "-k", "3"], "7"),
        (["unrank", "-n", "4", "-k", "3", "-r", "16"], "3 2 1"),
        (["rank", "-n", "4", "3 2 1"], "16"),
        (["automaton", "-n", "5", "--states"], "56"),
        (["count-prefix", "-n", "4", "-k", "3", "-w", "3", "-m", "2"], "2"),
        (["count-prefix", "-n", "4", "-k", "3", "-w", "3 2", "-m", "1", "--reference"], "1"),
        (["oracle", "normalize", "-n", "3", "2 1 2"], "1 2 1"),
        (["automaton", "-n", "4", "--check-minimal"], "minimal"),
    ],
)
def test_examples(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert code == 0 and err == ""
    assert out.strip() == expected


def test_sample_is_deterministic(capsys):
    _, first, _ = run(capsys, "sample", "-n", "4", "-k", "3", "--count", "2", "--seed", "7")
    _, second, _ = run(capsys, "sample", "-n", "4", "-k", "3", "--count", "2", "--seed", "7")
    lines = first.splitlines()
    assert first == second and len(lines) == 2
    assert all(len(line.split()) == 3 for line in lines)


def test_json_output(capsys):
    code, out, _ = run(capsys, "sample", "-n", "4", "-k", "3", "--count", "3", "--seed", "1", "--json")
    assert code == 0 and len(json.loads(out)) == 3
    _, out, _ = run(capsys, "check-word", "-n", "5", "4 3 2 2 1", "--json")
    assert json.loads(out) == {"lex_representative": True, "f": [0, 2, 1, 4], "forbidden": ["2", "3 2 1", "4"]}


def test_oracle_enumerate(capsys):
    _, out, _ = run(capsys, "oracle", "enumerate", "-n", "4", "-k", "2")
    assert len(out.splitlines()) == 8


def test_automaton_export(capsys):
    _, out, _ = run(capsys, "automaton", "-n", "3", "--export", "dot")
    assert out.startswith("digraph") and out.count("shape=box") == 5
    _, out, _ = run(capsys, "automaton", "-n", "2", "--export", "json")
    assert json.loads(out)["n"] == 2


def test_cache_file(capsys, tmp_path):
    path = tmp_path / "x.txt"
    run(capsys, "count", "-n", "5", "-k", "9", "--cache", str(path))
    assert path.read_text().startswith("braidgen-growth v1 n=5 kmax=9")
    _, out, _ = run(capsys, "count", "-n", "5", "-k", "9", "--cache", str(path))
    assert out.strip() == str(GrowthTables.build(5, 9).count(9))


def test_default_cache_directory(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("BRAIDGEN_CACHE_DIR", str(tmp_path / "c"))
    run(capsys, "count", "-n", "4", "-k", "5")
    assert (tmp_path / "c" / "growth-n4.txt").exists()
    run(capsys, "count", "-n", "6", "-k", "5", "--no-cache")
    assert not (tmp_path / "c" / "growth-n6.txt").exists()


@pytest.mark.parametrize(
    "argv, code",
    [
        (["count", "-n", "1", "-k", "3"], 1),
        (["count", "-n", "4"], 1),
        (["bogus"], 1),
        (["sample", "-n", "4", "-k", "3", "--count", "0"], 1),
        (["unrank", "-n", "4", "-k", "3", "-r", "20"], 2),
        (["rank", "-n", "4", "2 1 2"], 2),
        (["rank", "-n", "4", "4 1"], 2),
        (["automaton", "-n", "20"], 2),
        (["oracle", "enumerate", "-n", "9", "-k", "2"], 2),
        (["verify", "--only", "12"], 1),
    ],
)
def test_errors(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert len(err.strip().splitlines()) == 1 and err.startswith("braidgen: error: ")


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--only", "1,2")
    assert code == 0
    assert [line[:6] for line in out.splitlines()] == ["[PASS]", "[PASS]"]
