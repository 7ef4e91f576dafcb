import pytest

from stolarsky import automata as At
from stolarsky import logic
from stolarsky import zeckendorf as z
from stolarsky.relations import CertificationError, _certify


def test_chain_produces_certificates(base):
    for rel in base.all():
        assert rel.certificate, rel.name
        assert all(check.passed for check in rel.certificate)


def test_certify_raises_on_failure():
    dummy = At.validity(1)
    with pytest.raises(CertificationError) as err:
        _certify("demo", dummy, [("always wrong", False, "because")])
    assert "always wrong" in str(err.value)


def test_less_than_examples(base):
    lt = base.lt.automaton
    assert lt.accepts_values(4, 7)
    assert not lt.accepts_values(0, 0)
    assert not lt.accepts_values(7, 4)


def test_successor_examples(base):
    succ = base.succ.automaton
    assert succ.accepts_values(0, 1)
    assert succ.accepts_values(4, 5)
    assert not succ.accepts_values(4, 6)


def test_adder_examples(base):
    add = base.add.automaton
    assert add.accepts_values(4, 7, 11)
    assert add.accepts_values(9, 0, 9)
    assert not add.accepts_values(1, 1, 3)


def test_shift_examples(base):
    shift = base.shift.automaton
    assert shift.accepts_values(4, 7)
    assert shift.accepts_values(0, 0)
    assert not shift.accepts_values(1, 3)


def test_phin_examples(base):
    phin = base.phin.automaton
    assert phin.accepts_values(1, 1)
    assert phin.accepts_values(2, 3)
    assert not phin.accepts_values(2, 4)


def test_phi2n_examples(base):
    phi2n = base.phi2n.automaton
    assert phi2n.accepts_values(1, 2)
    assert phi2n.accepts_values(10, 26)
    assert phi2n.accepts_values(0, 0)


def test_lemma_shift_addition(registry):
    assert logic.eval_sentence(
        "?msd_fib Ax,y,z ($shift(x,y) & $shift(y,z)) => z=x+y", registry
    )


def test_lemma_generalized_fibonacci_shift(registry):
    assert logic.eval_sentence(
        "?msd_fib Aa,b,c,d,x ($phin(a,x) & (b=x|b=x+1) & c=a+b & d=b+c)"
        " => $shift(c,d)",
        registry,
    )


def test_phin_strictly_increasing(registry):
    assert logic.eval_sentence(
        "?msd_fib An,m,x,y ($phin(n,x) & $phin(m,y) & n<m) => x<y", registry
    )


def test_projecting_output_of_adder_is_total(base):
    pairs = At.project(base.add.automaton, 2)
    for x in range(25):
        for y in range(25):
            assert pairs.accepts(At.tuple_symbols((x, y)))


def test_projecting_input_of_shift_matches_brute_force(base):
    images = At.project(base.shift.automaton, 0)
    expected = {z.decode(z.encode(x) + "0") for x in range(200)}
    for value in range(200):
        assert images.accepts(At.tuple_symbols((value,))) == (value in expected)


def test_validity_tracks(base):
    valid2 = At.validity(2)
    assert valid2.accepts([2, 1])  # tracks 10 and 01
    assert not valid2.accepts([3, 2])  # first track 11
    assert not At.validity(1).accepts([1, 1])
