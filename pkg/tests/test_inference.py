import pytest

from stolarsky import arrays as ar
from stolarsky import automata as At
from stolarsky.inference import SampleSet, guess_dfa, learn_synchronized


def test_sample_set_rejects_inconsistency():
    with pytest.raises(ValueError):
        SampleSet.from_pairs([(1, 2), (1, 3)])


def test_sample_set_complete_upto():
    samples = SampleSet.from_pairs([(1, 1), (2, 4), (3, 6), (5, 12)])
    assert samples.complete_upto == 3


def test_sample_file_round_trip(tmp_path):
    samples = SampleSet.from_pairs([(0, 0), (1, 1), (2, 4)])
    path = tmp_path / "samples.txt"
    samples.to_file(path)
    assert path.read_text() == "0 0\n1 1\n2 4\n"
    assert SampleSet.from_file(path) == samples


def test_guess_is_deterministic():
    column = ar.first_column(ar.BUILTIN_ARRAYS["wythoff"], 200)
    samples = SampleSet.from_pairs(
        [(0, 0)] + list(enumerate(column, start=1))
    )
    first = guess_dfa(samples)
    second = guess_dfa(samples)
    assert first.to_text() == second.to_text()


def test_guess_sound_on_samples():
    column = ar.first_column(ar.BUILTIN_ARRAYS["dual"], 300)
    samples = SampleSet.from_pairs(
        [(0, 0)] + list(enumerate(column, start=1))
    )
    machine = guess_dfa(samples)
    for i, value in samples.pairs:
        assert machine.accepts_values(i, value)
        assert not machine.accepts_values(i, value + 1)
        if value:
            assert not machine.accepts_values(i, value - 1)


def test_guess_recovers_known_machine(base):
    # Samples produced by the certified successor relation are learned back
    # as a language-equal machine.
    samples = SampleSet.from_pairs([(n, n + 1) for n in range(800)])
    machine = guess_dfa(samples)
    assert At.equivalent(machine, base.succ.automaton)


def test_learner_handles_three_tracks():
    machine = learn_synchronized(
        [(x, y, x + y) for x in range(40) for y in range(40)], 3
    )
    assert machine.accepts_values(30, 25, 55)
    assert not machine.accepts_values(30, 25, 56)


def test_empty_samples_rejected():
    with pytest.raises(ValueError):
        learn_synchronized([], 2)


def test_state_budget_enforced():
    column = ar.first_column(ar.BUILTIN_ARRAYS["k100"], 400)
    samples = SampleSet.from_pairs(list(enumerate(column, start=1)))
    from stolarsky.inference import InferenceError

    with pytest.raises(InferenceError):
        guess_dfa(samples, state_budget=5)
