import io
import json
import shlex
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockcat.cli import main, parse_expression, parse_z
from fockcat.expr import ParseError
from fockcat.heisenberg import Generator, HExpr, normal_order, p, q
from fockcat.series import T, LaurentPoly

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


# -- parser ----------------------------------------------------------------------------


def test_parse_examples():
    assert parse_expression("q1*p1") == HExpr.word(Generator("q", 1), Generator("p", 1))
    e = parse_expression("(1+t)*q1 + p1*q2")
    assert e == (1 + T) * q(1) + p(1) * q(2)
    assert len(e.terms) == 2


def test_parse_is_case_and_space_insensitive():
    assert parse_expression(" P3 * q2 ") == p(3) * q(2)


def test_parse_keeps_product_order():
    assert parse_expression("p1*q1") != parse_expression("q1*p1")


def test_parse_t_literals():
    assert parse_expression("t^-1") == HExpr.scalar(LaurentPoly.t_power(-1))
    assert parse_expression("t^(-1/2)*p1") == LaurentPoly.s_power(-1) * p(1)
    assert parse_expression("3t^2") == HExpr.scalar(3 * T * T)
    assert parse_expression("1/2*p2 - p1") == Fraction(1, 2) * p(2) - p(1)


def test_index_zero_is_unit():
    assert parse_expression("p0*q1") == q(1)


@pytest.mark.parametrize(
    "text,column",
    [("p-1", 2), ("q1 p1", 4), ("p1*", 4), ("(p1", 4), ("", 1), ("p1 + x", 6), ("t^(1/3)", 6)],
)
def test_parse_errors_carry_columns(text, column):
    with pytest.raises(ParseError) as err:
        parse_expression(text)
    assert err.value.column == column


coeff_st = st.builds(
    LaurentPoly,
    st.dictionaries(
        st.integers(-4, 4),
        st.one_of(st.integers(-4, 4), st.fractions(-3, 3, max_denominator=3)),
        max_size=3,
    ),
)
word_st = st.lists(
    st.tuples(st.sampled_from("pq"), st.integers(1, 12)).map(lambda x: Generator(*x)), max_size=4
).map(tuple)
expr_st = st.dictionaries(word_st, coeff_st, max_size=4).map(HExpr)


@settings(max_examples=200)
@given(expr_st)
def test_print_parse_roundtrip(e):
    assert parse_expression(str(e)) == e


@settings(max_examples=50, deadline=None)
@given(expr_st)
def test_normal_forms_print_and_reparse(e):
    nf = normal_order(e)
    assert parse_expression(str(nf)) == nf


# -- CLI ------------------------------------------------------------------------------------


def test_parse_z():
    assert parse_z("q1/2") == 1
    assert parse_z("q") == 2
    assert parse_z("q3/2") == 3
    assert parse_z("1") == 0


def test_normal_order_plain():
    code, out = run("normal-order", "q2*p2")
    assert code == 0
    assert out == "p2*q2 + (1+t)*p1*q1 + (1+t+t^2)\n"


def test_normal_order_random_strategy_same_answer():
    assert run("normal-order", "q3*p2*q1*p2", "--strategy", "random", "--seed", "7") == run(
        "normal-order", "q3*p2*q1*p2"
    )


def test_vacuum_plain():
    assert run("vacuum", "q1*p1") == (0, "1 + t\n")


def test_zseries_plain():
    code, out = run("zseries", "--max-q", "3")
    assert code == 0
    assert out.splitlines()[0] == "product: 1 + q + 3q^2 + 6q^3 + O(q^4)"
    assert out.splitlines()[-1].startswith("agree: yes")


def test_zseries_csv():
    code, out = run("--format", "csv", "zseries", "--max-q", "2", "--deformed", "--method", "product")
    assert code == 0
    assert out == "n,product\n0,1\n1,1+t\n2,3+3t+t^2\n"


def test_zseries_t_specialization():
    code, out = run("zseries", "--max-q", "3", "--deformed", "--t", "0", "--method", "commutation")
    assert (code, out) == (0, "commutation: 1 + q + 3q^2 + 6q^3 + O(q^4)\n")


def test_zseries_disagreement_exit_code(monkeypatch):
    from fockcat import macmahon as M

    monkeypatch.setitem(M.METHODS, "transfer", M.z_deformed_product)
    code, out = run("zseries", "--max-q", "2", "--method", "all")
    assert code == 1
    assert "agree: NO" in out


def test_verify_failure_exit_code(monkeypatch):
    from fockcat import verify as V

    monkeypatch.setitem(V.SUITES, "planepart", lambda b: [V.Check("broken", False, "x")])
    code, out = run("verify", "planepart")
    assert code == 1
    assert "FAIL  planepart: broken  [x]" in out


def test_verify_small_suite():
    code, out = run("--format", "json", "verify", "planepart")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert {c["name"] for c in report["suites"]["planepart"]} >= {"slice roundtrip"}


def test_plane_partition_count():
    assert run("plane-partitions", "--volume", "6", "--count") == (0, "48\n")


def test_gamma_plain():
    code, out = run("gamma", "--side", "plus", "--z", "q1/2", "--state", "(1)", "--cutoff", "2")
    assert code == 0
    assert out.splitlines() == ["(): q^(1/2) + O(q^(3/2))", "(1): 1 + O(q^(3/2))"]


@pytest.mark.parametrize(
    "argv",
    [
        ["normal-order", "p-1"],
        ["normal-order", "q1 p1"],
        ["zseries", "--method", "transfer", "--deformed"],
        ["zseries", "--deformed", "--refined"],
        ["zseries", "--refined", "--t", "0"],
        ["zseries", "--max-q", "20", "--method", "enumeration"],
        ["plane-partitions", "--volume", "30", "--list"],
        ["gamma", "--side", "minus", "--z", "w"],
        ["gamma", "--side", "sideways"],
        ["ch", "3", "(2,2)"],
        ["verify", "nonexistent"],
        ["character-table"],
        ["zseries", "--bogus"],
        ["nonsense"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err


GOLDEN_CASES = {
    "normal_order_q2p2": "normal-order q2*p2",
    "vacuum_q3p3": "vacuum q3*p3",
    "zseries_classical_6": "zseries --max-q 6",
    "zseries_deformed_4": "zseries --max-q 4 --deformed",
    "zseries_refined_3": "zseries --max-q 3 --refined",
    "plane_partitions_list_3": "plane-partitions --volume 3 --list",
    "plane_partitions_slices_3": "plane-partitions --volume 3 --slices",
    "gamma_minus_1": "gamma --side minus --z q1/2 --state (1) --cutoff 3",
    "character_table_4": "character-table 4",
    "ch_3_21": "ch 3 (2,1)",
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_json_output_matches_golden(name):
    code, out = run("--format", "json", *shlex.split(GOLDEN_CASES[name]))
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()


def test_golden_values_by_hand():
    data = json.loads((GOLDEN / "vacuum_q3p3.json").read_text())
    assert data["coeff"] == {"0": "1", "1": "1", "2": "1", "3": "1"}
    table = json.loads((GOLDEN / "character_table_4.json").read_text())["table"]
    assert table[0] == [1, 1, 1, 1, 1]
    assert [row[-1] for row in table] == [1, 3, 2, 3, 1]
