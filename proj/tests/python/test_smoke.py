from fractions import Fraction

import pytest

import spmatroid as spm


def test_combinatorial_numbers():
    assert spm.binomial(10, 3) == 120
    assert spm.stirling2(5, 2) == 15
    assert spm.assoc_stirling1(6, 3) == 15
    assert spm.h_value(2, 1) == Fraction(1, 3)
    assert spm.double_factorial(-1) == 1
    assert spm.factorial(25) == 15511210043330985984000000


def test_count_rows():
    assert spm.table("C", 4)[-1] == [0, 1, 6, 1, 0]
    assert spm.table("A", 2) == [[1], [1, 1], [1, 3, 1]]
    assert spm.first_row("S") == 0
    assert spm.e_closed(7, 4) == 735
    assert spm.e_from_c(7)[-1] == [0, 0, 0, 0, 735, 280, 1, 0]


def test_big_values_are_python_ints():
    v = spm.c_closed(30, 15)
    assert isinstance(v, int) and v > 2**64
    assert v == spm.g_closed(29, 14)


def test_oracle_matches_formulas():
    rows = spm.oracle_counts(5)
    for fam in "CEAS":
        formula = spm.table(fam, 5)
        offset = spm.first_row(fam)
        assert rows[fam] == formula[1 - offset:]


def test_verify_has_no_failures():
    checks = spm.verify(6)
    assert checks
    assert all(c["status"] != "FAIL" for c in checks)
    assert sum(c["status"] == "FLAGGED" for c in checks) == 4


def test_render_and_parse():
    assert "4,2,6" in spm.render_table("C", 4, "csv").splitlines()
    assert spm.parse_bfile("# c\n1 5\n2 7\n") == [(1, 5), (2, 7)]


def test_errors():
    with pytest.raises(ValueError):
        spm.table("Q", 3)
    with pytest.raises(RuntimeError):
        spm.oracle_counts(9)
