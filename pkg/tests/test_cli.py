"""Command line behavior: output formats and exit codes."""

from cochad.cli import EXIT_ERROR, EXIT_OK, EXIT_VERDICT_FALSE, main


def test_search_output(capsys):
    code = main(["search", "--t", "3"])
    out = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK
    assert out == [
        "distribution (1, 1, 1, 0): ingredients (1, 1, 1, 1), "
        "recipes 4, solution recipes 4, hadamard 24",
        "candidates checked: 72",
        "total hadamard: 24",
    ]


def test_search_with_export(tmp_path, capsys):
    out_dir = tmp_path / "run"
    code = main(["search", "--t", "3", "--out", str(out_dir)])
    out = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK
    assert out[-1] == f"wrote 24 matrix files to {out_dir}"
    assert (out_dir / "report.txt").exists()
    assert len(list(out_dir.glob("t03-*.txt"))) == 24


def test_search_single_distribution(capsys):
    code = main(["search", "--t", "7", "--distribution", "1"])
    out = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK
    assert out == [
        "distribution (6, 5, 5, 5): ingredients (4, 3, 3, 3), "
        "recipes 60, solution recipes 36, hadamard 504",
        "candidates checked: 8232",
        "total hadamard: 504",
    ]


def test_brute_force_output(capsys):
    code = main(["brute-force", "--t", "3"])
    out = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK
    assert out == [
        "canonical subsets: 512",
        "distribution (1, 1, 1, 0): hadamard 24",
        "total hadamard: 24",
    ]


def test_distributions_output(capsys):
    code = main(["distributions", "--t", "13"])
    out = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK
    assert out == [
        "(21, 21, 21, 15)  0+0+0+6",
        "(21, 21, 18, 18)  0+0+3+3",
        "(20, 20, 20, 18)  1+1+1+3",
    ]


def test_ingredients_output(capsys):
    code = main(["ingredients", "--t", "5", "--k", "2"])
    out = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK
    assert out[0] == "t=5 k=2 entry=3"
    assert sorted(out[1:3]) == ["profile (1, 2): 5 masks", "profile (2, 1): 5 masks"]
    assert out[3] == "profiles: 2"


def test_verify_exit_codes(tmp_path, capsys):
    out_dir = tmp_path / "run"
    assert main(["search", "--t", "3", "--out", str(out_dir)]) == EXIT_OK
    capsys.readouterr()
    matrix = sorted(out_dir.glob("t03-*.txt"))[0]

    assert main(["verify", str(matrix)]) == EXIT_OK
    assert capsys.readouterr().out == "t=3 hadamard: true\n"

    text = matrix.read_text()
    body = text.index("\n") + 1
    flipped = "-" if text[body] == "+" else "+"
    matrix.write_text(text[:body] + flipped + text[body + 1 :])
    assert main(["verify", str(matrix)]) == EXIT_VERDICT_FALSE
    assert capsys.readouterr().out == "t=3 hadamard: false\n"

    assert main(["verify", str(tmp_path / "absent.txt")]) == EXIT_ERROR
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith("error: ")


def test_malformed_matrix_exits_with_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("t=3\n+++\n")
    assert main(["verify", str(bad)]) == EXIT_ERROR
    assert capsys.readouterr().err.startswith("error: ")


def test_domain_errors_exit_with_error(capsys):
    assert main(["search", "--t", "4"]) == EXIT_ERROR
    assert capsys.readouterr().err.startswith("error: ")

    assert main(["search", "--t", "17"]) == EXIT_ERROR
    assert capsys.readouterr().err.startswith("error: ")

    assert main(["brute-force", "--t", "9"]) == EXIT_ERROR
    assert capsys.readouterr().err.startswith("error: ")

    assert main(["ingredients", "--t", "5", "--k", "9"]) == EXIT_ERROR
    assert capsys.readouterr().err.startswith("error: ")
