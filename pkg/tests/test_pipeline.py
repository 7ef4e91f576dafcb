import pytest

from stolarsky import arrays as ar
from stolarsky import automata as At
from stolarsky.pipeline import (
    classification_sequence,
    renumerate,
    seven_step_verify,
    subword_complexity,
    theorem_suite,
)
from stolarsky.regex import regex_to_dfa


@pytest.fixture(scope="module")
def wythoff_report(registry):
    report = seven_step_verify(ar.BUILTIN_ARRAYS["wythoff"], registry)
    assert report.fully_verified, report.to_text()
    return report


def test_renumerate_cleans_concat_output():
    lit = At.normalize_leading_zeros(regex_to_dfa("101", 1))
    zeros = regex_to_dfa("0*", 1)
    cat = At.concat_languages(lit, zeros)
    clean = renumerate(cat)
    assert clean.accepts_values(11)  # 10100
    assert At.same_language(renumerate(clean), clean)
    # words with adjacent ones are gone even if concatenation made them
    dirty = At.concat_languages(regex_to_dfa("1", 1), regex_to_dfa("1", 1))
    assert dirty.accepts([1, 1])
    assert not renumerate(dirty).accepts([1, 1])


def test_wythoff_pipeline_counts(wythoff_report):
    assert wythoff_report.state_counts["col1"] == 10
    assert wythoff_report.state_counts["col2"] == 13
    assert wythoff_report.state_counts["col3"] == 18
    assert [s.name for s in wythoff_report.steps] == [
        "data",
        "guess",
        "functionality",
        "monotonicity",
        "columns-2-3",
        "set-S",
        "mex-induction",
    ]


def test_report_serialization_is_stable(wythoff_report):
    text = wythoff_report.to_text()
    assert "wythoff.mex-induction PASS" in text
    assert text == wythoff_report.to_text()


def test_wythoff_theorems(registry, wythoff_report):
    results = theorem_suite("wythoff", registry, wythoff_report)
    assert all(results.values()), results


def test_suite_requires_verification(registry):
    from stolarsky.pipeline import VerificationReport

    stub = VerificationReport("wythoff")
    with pytest.raises(RuntimeError):
        theorem_suite("wythoff", registry, stub)


def test_set_s_matches_brute_force(registry, wythoff_report):
    bound = 10**5
    s_set = registry.get("w1_set")
    automaton_values = set(At.enumerate_values(s_set, bound))
    table_rows = []
    spec = ar.BUILTIN_ARRAYS["wythoff"]
    count = 64
    while True:
        table = ar.generate(spec, count, 2)
        if table[-1][1] > bound:
            break
        count *= 2
    brute = set()
    for first, second in table:
        if second > bound:
            continue
        a, b = first, second
        while b <= bound:
            brute.add(b)
            a, b = b, a + b
    assert automaton_values == brute


def test_oracle_equivalence_of_columns(registry, wythoff_report):
    table = ar.generate(ar.BUILTIN_ARRAYS["wythoff"], 1000, 3)
    w1 = registry.get("w1")
    w2 = registry.get("w2")
    w3 = registry.get("w3")
    for i, row in enumerate(table, start=1):
        if i % 97 == 0:
            assert w1.accepts_values(i, row[0])
            assert w2.accepts_values(i, row[1])
            assert w3.accepts_values(i, row[2])


def test_morrison_sets_spot_enumeration(registry, wythoff_report):
    # The two sets agree on positive integers (the column automata also
    # relate 0 to 0, which only the difference set picks up, hence the
    # published n >= 1 guard).
    theorem_suite("wythoff", registry, wythoff_report)
    import stolarsky.logic as logic

    left = logic.compile_formula("?msd_fib n>=1 & $mleft(n)", registry)
    right = logic.compile_formula("?msd_fib n>=1 & $mright(n)", registry)
    assert At.equivalent(left, right)
    bound = 10**4
    values = At.enumerate_values(left.relabel(None), bound)
    assert values == At.enumerate_values(right.relabel(None), bound)
    assert values[0] == 1 and len(values) > 100


def test_classification_sequences():
    assert classification_sequence("wythoff", 200) == [1] * 200
    assert classification_sequence("stolarsky", 3) == [1, 0, 0]
    assert classification_sequence("dual", 3) == [1, 0, 0]
    assert classification_sequence("dual", 50)[3:] == [0] * 47


def test_classification_matches_delta_rules():
    for name in ("efc", "esc", "k100"):
        spec = ar.BUILTIN_ARRAYS[name]
        delta = classification_sequence(name, 300)
        assert delta == [spec.rule.bit(i) for i in range(1, 301)]


def test_subword_complexity_of_classification():
    delta = classification_sequence("stolarsky", 5000)
    assert subword_complexity(delta, 1) == 2
    assert subword_complexity(delta, 3) == 6
    for n in range(1, 13):
        assert subword_complexity(delta, n) == 2 * n


def test_subword_complexity_constant_sequence():
    assert subword_complexity([0] * 5000, 7) == 1


def test_subword_complexity_requires_long_prefix():
    with pytest.raises(ValueError):
        subword_complexity([0, 1] * 100, 3)


def test_classification_frequency_evidence():
    delta = classification_sequence("stolarsky", 10**4)
    ones = sum(delta)
    assert abs(2 * ones - 10**4) < 200
