import pytest

from stolarsky import arrays as ar
from stolarsky import zeckendorf as z


def test_gen_fib_examples():
    assert ar.gen_fib(4, 7, 5) == 29
    assert ar.gen_fib(1, 1, 10) == 55
    assert ar.gen_fib(0, 0, 7) == 0


def test_gen_fib_matches_tagiuri_closed_form():
    fib = [1, 1]
    while len(fib) < 30:
        fib.append(fib[-1] + fib[-2])
    for a, b in [(4, 7), (1, 2), (9, 15), (0, 5)]:
        for n in range(3, 25):
            assert ar.gen_fib(a, b, n) == a * fib[n - 3] + b * fib[n - 2]


def test_eval_f_examples():
    assert ar.eval_f("wythoff", 4) == 7
    assert ar.eval_f("stolarsky", 4) == 6
    assert ar.eval_f("dual", 9) == 14
    with pytest.raises(ValueError):
        ar.eval_f("nonsense", 1)


def test_delta_value_examples():
    assert ar.delta_value(ar.BUILTIN_ARRAYS["efc"], 2) == 1
    assert ar.delta_value(ar.BUILTIN_ARRAYS["esc"], 3) == 1
    assert ar.delta_value(ar.BUILTIN_ARRAYS["k100"], 4) == 1
    with pytest.raises(TypeError):
        ar.delta_value(ar.BUILTIN_ARRAYS["wythoff"], 1)


def test_mex_examples():
    fib = {1, 2, 3, 5, 8, 13, 21}
    assert ar.mex(fib) == 4
    assert ar.mex(set()) == 1
    assert ar.mex({1, 2, 3, 4}) == 5


def test_wythoff_window_entry():
    table = ar.generate(ar.BUILTIN_ARRAYS["wythoff"], 10, 10)
    assert table[9][9] == 1919
    assert table[1] == [4, 7, 11, 18, 29, 47, 76, 123, 199, 322]


def test_stolarsky_window_entry():
    table = ar.generate(ar.BUILTIN_ARRAYS["stolarsky"], 10, 10)
    assert table[7][9] == 1508


def test_dual_window_entry():
    table = ar.generate(ar.BUILTIN_ARRAYS["dual"], 10, 10)
    assert table[8][8] == 1021


def test_efc_window_entry():
    table = ar.generate(ar.BUILTIN_ARRAYS["efc"], 10, 10)
    assert table[9][0] == 26
    assert table[9][9] == 2008


def test_k100_first_column_prefix():
    first = ar.first_column(ar.BUILTIN_ARRAYS["k100"], 12)
    assert first == [1, 4, 7, 9, 12, 14, 17, 20, 23, 25, 27, 30]


def test_dual_first_column_prefix():
    assert ar.first_column(ar.BUILTIN_ARRAYS["dual"], 4) == [1, 4, 7, 9]
    assert ar.first_column(ar.BUILTIN_ARRAYS["wythoff"], 1) == [1]


@pytest.mark.parametrize("name", sorted(ar.BUILTIN_ARRAYS))
def test_interspersion_sanity(name):
    spec = ar.BUILTIN_ARRAYS[name]
    table = ar.generate(spec, 40, 16)
    bound = table[39][0]
    seen = set()
    for row in table:
        assert all(a < b for a, b in zip(row, row[1:]))
        for value in row:
            assert value not in seen
            seen.add(value)
    for col in range(16):
        column = [row[col] for row in table]
        assert all(a < b for a, b in zip(column, column[1:]))
    # Every positive integer up to the last first-column entry is covered
    # (the window is wide enough that row values beyond it exceed bound).
    assert set(range(1, bound + 1)) <= seen


@pytest.mark.parametrize("name", sorted(ar.BUILTIN_ARRAYS))
def test_classification_bits_binary(name):
    spec = ar.BUILTIN_ARRAYS[name]
    table = ar.generate(spec, 200, 2)
    for first, second in table:
        assert second - z.floor_alpha(first) in (0, 1)


@pytest.mark.parametrize("name", sorted(ar.BUILTIN_ARRAYS))
def test_tagiuri_identity_per_row(name):
    spec = ar.BUILTIN_ARRAYS[name]
    table = ar.generate(spec, 50, 9)
    fib = [1, 1]
    while len(fib) < 12:
        fib.append(fib[-1] + fib[-2])
    for row in table:
        for n in range(3, 10):
            assert row[n - 1] == row[0] * fib[n - 3] + row[1] * fib[n - 2]


@pytest.mark.parametrize("name", sorted(ar.BUILTIN_ARRAYS))
def test_row_shift_law(name):
    # Columns three and beyond are digit-shift images of column three.
    spec = ar.BUILTIN_ARRAYS[name]
    table = ar.generate(spec, 50, 9)
    for row in table:
        word3 = z.encode(row[2])
        for n in range(3, 10):
            assert z.encode(row[n - 1]) == word3 + "0" * (n - 3)


def test_exports():
    table = [[1, 2], [3, 4]]
    assert ar.to_tsv(table) == "1\t2\n3\t4\n"
    assert ar.pretty(table) == "1 2\n3 4\n"


def test_window_validation():
    with pytest.raises(ValueError):
        ar.generate(ar.BUILTIN_ARRAYS["wythoff"], 0, 5)
    with pytest.raises(ValueError):
        ar.first_column(ar.BUILTIN_ARRAYS["wythoff"], 0)
