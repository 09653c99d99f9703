from thompsonv.cli import main
from thompsonv.elements import Element


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "(.,.)|(.,.)|[1,2]")
    assert code == 0
    assert out == ".|.|[1]\n"


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]")
    assert code == 0
    assert "N=3 B=4" in out
    assert "inF=false inT=false" in out


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "4", "--b", "1")
    assert code == 0
    assert "new_upper=4\n" in out
    code, out, _ = run(capsys, "bounds", "--n", "8")
    assert "birget_upper=24" in out
    code, out, _ = run(capsys, "bounds", "--n", "7", "--b", "3")
    assert "new_upper=11.754888" in out


def test_mul_inv_eq(capsys):
    x0 = "(.,(.,.))|((.,.),.)|[1,2,3]"
    _, inv_text, _ = run(capsys, "inv", x0)
    code, out, _ = run(capsys, "mul", x0, inv_text.strip())
    assert out == ".|.|[1]\n"
    code, out, _ = run(capsys, "eq", x0, x0)
    assert out == "true\n"
    code, out, _ = run(capsys, "eq", x0, ".|.|[1]")
    assert out == "false\n"


def test_map(capsys):
    code, out, _ = run(capsys, "map", "(.,(.,.))|((.,.),.)|[1,2,3]")
    assert out.splitlines() == [
        "[0,1/2) -> [0,1/4)",
        "[1/2,3/4) -> [1/4,1/2)",
        "[3/4,1) -> [1/2,1)",
    ]


def test_collapse(capsys):
    code, out, _ = run(capsys, "collapse", "(.,(.,.))|(.,(.,.))|[2,3,1]")
    assert code == 0
    assert "collapsed: (.,.)|(.,.)|[2,1]" in out


def test_length_and_ball(capsys):
    code, out, _ = run(capsys, "length", "(.,(.,.))|((.,.),.)|[1,2,3]", "--radius", "3")
    assert out == "length=1\n"
    code, out, _ = run(capsys, "ball", "--radius", "2")
    assert out.splitlines() == ["0: 1", "1: 7", "2: 36"]


def test_word_round_trip(capsys):
    y1 = "(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]"
    _, word, _ = run(capsys, "word", "--synthesize", y1)
    code, out, _ = run(capsys, "word", "--evaluate", word.strip())
    assert Element.parse(out.strip()).equals(Element.parse(y1))


def test_counterexample(capsys):
    code, out, _ = run(capsys, "counterexample", "--n", "2")
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.splitlines())
    assert lines["y_n_carets"] == "5"
    assert lines["conjugation_mirrored"] == "true"
    assert lines["conjugation_as_written"] == "false"
    assert int(lines["witness_word_length"]) <= 18


def test_survey(capsys):
    code, out, _ = run(capsys, "survey", "--count", "5", "--carets", "3", "--radius", "2", "--seed", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "element,N,B,exact_length,birget_upper,new_upper"
    assert len(lines) == 6
    # identical invocation is byte-identical
    code, again, _ = run(capsys, "survey", "--count", "5", "--carets", "3", "--radius", "2", "--seed", "1")
    assert again == out


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", "--radius", "2")
    assert code == 0
    assert "generators: x0 x1 c pi" in out
    assert "max_carets_over_length:" in out


def test_usage_errors_exit_one(capsys):
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "reduce", "(.,.)|(.,.)")[0] == 1  # parse error
    assert run(capsys, "reduce", "(.,.)|(.,.)|[1,1]")[0] == 1  # invalid permutation
    code, _, err = run(capsys, "bounds", "--n", "3", "--b", "9")
    assert code == 1 and "cluster count" in err


def test_resource_error_exit_two(capsys, monkeypatch):
    monkeypatch.setenv("THOMPSON_MEM_BUDGET_MB", "0")
    code, _, err = run(capsys, "ball", "--radius", "3")
    assert code == 2
    assert "memory budget" in err


def test_element_outputs_reparse(capsys):
    for argv in (
        ["reduce", "((.,.),.)|((.,.),.)|[1,2,3]"],
        ["inv", "(.,(.,.))|((.,.),.)|[1,2,3]"],
        ["mul", "(.,.)|(.,.)|[2,1]", "(.,.)|(.,.)|[2,1]"],
    ):
        _, out, _ = run(capsys, *argv)
        Element.parse(out.strip())  # canonical text round trips
