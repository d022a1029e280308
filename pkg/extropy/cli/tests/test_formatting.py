import math

from extropy.cli.formatting import (
    CommandOutput,
    format_cell,
    key_value_rows,
    render_json,
    render_table,
    round_significant,
)
from extropy.simplex.probability_vector import ProbabilityVector


def test_round_significant():
    assert round_significant(1 / 3) == 0.3333333333
    assert round_significant(2 / 3, 3) == 0.667
    assert round_significant(123456789012.5) == 123456789000.0
    assert str(round_significant(-0.0)) == "0.0"
    assert round_significant(math.inf) == math.inf


def test_render_json_infinities_and_order():
    payload = {"b": -math.inf, "a": math.inf, "c": 1 / 3, "d": [0.1, None], "e": True}
    assert render_json(payload) == (
        '{"b":"-inf","a":"inf","c":0.3333333333,"d":[0.1,null],"e":true}\n'
    )


def test_render_json_converts_vectors():
    payload = {"pmf": ProbabilityVector([0.25, 0.75]), "n": 2}
    assert render_json(payload) == '{"pmf":[0.25,0.75],"n":2}\n'


def test_format_cell():
    assert format_cell(math.inf) == "inf"
    assert format_cell(-math.inf) == "-inf"
    assert format_cell(1 / 3) == "0.3333333333"
    assert format_cell(True) == "true"
    assert format_cell(None) == ""
    assert format_cell([0.25, 0.5]) == "0.25,0.5"
    assert format_cell(7) == "7"


def test_render_table():
    rows = [["a", [0.25, 0.75], -math.inf]]
    assert render_table(["id", "pmf", "score"], rows, "tsv") == (
        "id\tpmf\tscore\na\t0.25,0.75\t-inf\n"
    )
    assert render_table(["id", "pmf", "score"], rows, "csv") == (
        'id,pmf,score\na,"0.25,0.75",-inf\n'
    )


def test_key_value_rows():
    payload = {"kl": {"value": 0.5, "finite": True}, "n": 3}
    assert key_value_rows(payload) == [["kl.value", 0.5], ["kl.finite", True], ["n", 3]]


def test_command_output_render():
    output = CommandOutput(payload={"x": 1.5}, header=["x"], rows=[[1.5]])
    assert output.render("json") == '{"x":1.5}\n'
    assert output.render("tsv") == "x\n1.5\n"
