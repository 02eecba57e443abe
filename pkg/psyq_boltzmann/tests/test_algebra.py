import pytest

from psyq_boltzmann.algebra import (
    FinitePsyquandle,
    alexander_parameter_sweep,
    alexander_psyquandle,
    check_axioms,
    parse_psyquandle_matrix,
    promote_biquandle,
    serialize_psyquandle_matrix,
)
from psyq_boltzmann.exceptions import NotABiquandleError, ParameterError, ParseError, TableShapeError
from psyq_boltzmann.tests.conftest import dihedral3, load_psyquandle


def constant_tables(n):
    identity = [[x for _ in range(n)] for x in range(n)]
    return identity, identity, identity, identity


def test_trivial_structure_is_valid():
    report = check_axioms(*constant_tables(3))
    assert report.valid
    assert report.pI_adequate


def test_block_example_orientation_and_report(block3):
    # row = left operand: 1 ▷̱ y = 2 for every y
    assert block3.under_tri[0] == (1, 1, 1)
    assert block3.under_dot[1] == (0, 0, 0)
    report = block3.report()
    assert report.pI_adequate
    assert set(report.failed_axioms()) == {"(iv.1)", "(iv.2)"}


def test_corrupted_block_example_fails_column_permutation(block3):
    tables = [list(map(list, t)) for t in block3.tables()]
    tables[2][0][0] = 0
    report = check_axioms(*tables)
    assert not report.valid
    assert "(0) under_dot" in report.failed_axioms()
    zero = next(v for v in report.violations if v.label == "(0) under_dot")
    assert zero.witness == (0,)


def test_alexander_example(alex5):
    x, y = 2, 3
    assert alex5.op("under_tri", x, y) == (3 * x + 4 * y) % 5
    assert alex5.op("over_tri", x, y) == (2 * x) % 5
    assert alex5.op("under_dot", x, y) == (4 * x + 3 * y) % 5
    assert alex5.op("over_dot", x, y) == (x + y) % 5
    report = alex5.report()
    assert report.valid
    assert report.pI_adequate


def test_alexander_file_matches_constructor(alex5):
    assert load_psyquandle("alex5.psy") == alex5


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_alexander_sweep_passes_axioms(n):
    tuples = list(alexander_parameter_sweep(n))
    assert tuples
    for t, s, a, b in tuples:
        assert alexander_psyquandle(n, t, s, a, b).report().valid, (n, t, s, a, b)


def test_alexander_rejects_bad_parameters():
    with pytest.raises(ParameterError):
        alexander_psyquandle(5, 1, 1, 1, 2)
    with pytest.raises(ParameterError):
        alexander_psyquandle(6, 2, 1, 2, 1)


def test_promote_trivial_biquandle():
    identity = [[0, 0], [1, 1]]
    X = promote_biquandle(identity, identity)
    assert X.under_dot == X.under_tri
    assert X.over_dot == X.over_tri
    assert X.is_biquandle_like()


def test_promote_dihedral_quandle():
    X = dihedral3()
    assert X.op("under_tri", 0, 1) == 2
    assert X.report().valid


def test_promote_rejects_non_biquandle():
    with pytest.raises(NotABiquandleError):
        promote_biquandle([[0, 0], [0, 1]], [[0, 0], [1, 1]])


def test_inverses_and_pair_maps(alex5):
    for x in alex5.elements:
        for y in alex5.elements:
            assert alex5.inv("over_dot", alex5.op("over_dot", x, y), y) == x
            assert alex5.S_inverse(*alex5.S(x, y)) == (x, y)
            assert alex5.S_prime_inverse(*alex5.S_prime(x, y)) == (x, y)


def test_parse_order_one():
    X = parse_psyquandle_matrix("1 1 1 1")
    assert X.order == 1
    assert X.report().valid


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2"):
        parse_psyquandle_matrix("n = 1\n1 1 1\n")
    with pytest.raises(ParseError):
        parse_psyquandle_matrix("1 1 1 2")
    with pytest.raises(ParseError):
        parse_psyquandle_matrix("1 1 x 1")


def test_serialize_then_parse_keeps_tables(ex54):
    X, _ = ex54
    assert parse_psyquandle_matrix(serialize_psyquandle_matrix(X)) == X
    assert X.fingerprint() == parse_psyquandle_matrix(serialize_psyquandle_matrix(X)).fingerprint()


def test_table_shape_is_checked():
    with pytest.raises(TableShapeError):
        FinitePsyquandle([[0, 1]], [[0]], [[0]], [[0]])


def test_empty_tables_are_rejected():
    with pytest.raises(TableShapeError, match="at least one element"):
        check_axioms([], [], [], [])


@pytest.mark.parametrize("name", ["alex5.psy", "block3.psy", "ex52.psy", "ex53.psy", "ex54.psy", "trivial2.psy"])
def test_serialized_tables_are_stable(name):
    text = serialize_psyquandle_matrix(load_psyquandle(name))
    again = serialize_psyquandle_matrix(parse_psyquandle_matrix(text))
    assert again == text
    assert again.startswith("n = ")
