import pytest

from stolarsky import automata as At
from stolarsky import logic
from stolarsky.logic import (
    ArityError,
    BinOp,
    Call,
    Cmp,
    CompileError,
    Not,
    ParseError,
    Quant,
    parse,
)
from stolarsky.zeckendorf import floor_alpha


# -- parsing ---------------------------------------------------------------


def test_parse_existential_with_shorthand():
    f = parse("?msd_fib Ek n=2*k+1")
    assert isinstance(f, Quant) and f.kind == "E" and f.variables == ("k",)
    assert logic.free_variables(f) == {"n"}


def test_parse_multi_variable_quantifier():
    f = parse("Ax,y,z ($shift(x,y) & $shift(y,z)) => z=x+y")
    assert isinstance(f, Quant) and f.kind == "A"
    assert f.variables == ("x", "y", "z")
    assert isinstance(f.body, BinOp) and f.body.op == "=>"


def test_parse_negated_existential():
    f = parse("~En,x,y n>=1 & x!=y & $w1(n,x) & $w1(n,y)")
    assert isinstance(f, Not)
    assert isinstance(f.body, Quant) and f.body.variables == ("n", "x", "y")


def test_quantifier_scope_extends_right():
    f = parse("$p(n) & Ay (y>=1 & $q(y)) => y>=n")
    # The quantifier swallows the implication: p(n) & (Ay (...) => ...)
    assert isinstance(f, BinOp) and f.op == "&"
    assert isinstance(f.right, Quant)
    assert isinstance(f.right.body, BinOp) and f.right.body.op == "=>"


def test_implication_is_right_associative():
    f = parse("n=1 => n=2 => n=3")
    assert isinstance(f, BinOp) and f.op == "=>"
    assert isinstance(f.right, BinOp) and f.right.op == "=>"
    assert isinstance(f.left, Cmp)


def test_conjunction_binds_tighter_than_implication():
    f = parse("n=1 & n=2 => n=3")
    assert f.op == "=>" and f.left.op == "&"


def test_parenthesized_term_on_left():
    f = parse("(y+1)/2 = z")
    assert isinstance(f, Cmp) and f.op == "="


def test_call_with_term_arguments():
    f = parse("$phin(2*n-1,y)")
    assert isinstance(f, Call) and len(f.args) == 2


def test_unknown_numeration_rejected():
    with pytest.raises(ParseError):
        parse("?msd_trib Ek n=2*k")


def test_syntax_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse("Ek n=+")
    assert "line" in str(err.value)


def test_double_binding_rejected():
    with pytest.raises(CompileError):
        parse("Ex Ex x=1")


def test_nonconstant_multiplication_rejected():
    with pytest.raises(ParseError):
        parse("x*y = z")


# -- compilation -------------------------------------------------------------


def test_tracks_are_alphabetical(registry):
    dfa = logic.compile_formula("?msd_fib z=2*n+1", registry)
    assert dfa.labels == ("n", "z")
    # Textual order of appearance does not matter.
    dfa2 = logic.compile_formula("?msd_fib 2*n+1=z", registry)
    assert dfa2.labels == ("n", "z")
    assert At.same_language(dfa, dfa2)


def test_odd_set_membership(registry):
    odd = logic.compile_formula("?msd_fib Ek n=2*k+1", registry)
    for n in range(80):
        assert odd.accepts_values(n) == (n % 2 == 1)


def test_closed_sentence_compiles_to_zero_tracks(registry):
    dfa = logic.compile_formula("?msd_fib Ek k=1", registry)
    assert dfa.tracks == 0
    assert logic.eval_sentence("?msd_fib Ek k=1", registry) is True
    assert logic.eval_sentence("?msd_fib An n>=1 => n>=2", registry) is False


def test_eval_rejects_free_variables(registry):
    with pytest.raises(ArityError):
        logic.eval_sentence("?msd_fib n=2*k+1", registry)


def test_universal_equals_negated_existential(registry):
    corpus = [
        ("An n>=0", "~En ~(n>=0)"),
        ("An,x $phin(n,x) => x>=n", "~En,x ~($phin(n,x) => x>=n)"),
        ("Ak k+1>=1", "~Ek ~(k+1>=1)"),
    ]
    for a_text, e_text in corpus:
        a = logic.compile_formula(a_text, registry)
        b = logic.compile_formula(e_text, registry)
        assert At.same_language(a, b), a_text


def _eval_term(term, env):
    if isinstance(term, logic.Var):
        return env[term.name]
    if isinstance(term, logic.Const):
        return term.value
    left = _eval_term(term.left, env)
    right = _eval_term(term.right, env)
    if term.op == "+":
        return left + right
    if term.op == "-":
        return left - right
    if term.op == "*":
        return left * right
    return left // right


def _eval_formula(node, env, oracles, bound):
    if isinstance(node, Quant):
        values = range(bound + 1)
        results = (
            _eval_formula(node.body, {**env, **dict(zip(node.variables, vs))},
                          oracles, bound)
            for vs in _assignments(len(node.variables), bound)
        )
        return all(results) if node.kind == "A" else any(results)
    if isinstance(node, Not):
        return not _eval_formula(node.body, env, oracles, bound)
    if isinstance(node, BinOp):
        left = _eval_formula(node.left, env, oracles, bound)
        right = _eval_formula(node.right, env, oracles, bound)
        return {
            "&": left and right,
            "|": left or right,
            "=>": (not left) or right,
            "<=>": left == right,
        }[node.op]
    if isinstance(node, Cmp):
        left = _eval_term(node.left, env)
        right = _eval_term(node.right, env)
        return {
            "=": left == right,
            "!=": left != right,
            "<": left < right,
            "<=": left <= right,
            ">": left > right,
            ">=": left >= right,
        }[node.op]
    if isinstance(node, Call):
        args = tuple(_eval_term(a, env) for a in node.args)
        if any(a < 0 for a in args):
            return False  # no natural witness for a negative argument
        return oracles[node.name](*args)
    raise AssertionError(node)


def _assignments(arity, bound):
    if arity == 0:
        yield ()
        return
    for v in range(bound + 1):
        for rest in _assignments(arity - 1, bound):
            yield (v,) + rest


ORACLES = {
    "phin": lambda n, x: x == floor_alpha(n),
    "phi2n": lambda n, x: x == n + floor_alpha(n),
}

# Formulas with one or two free variables whose bounded integer evaluation
# is exact for the tested range: inner existential witnesses stay within
# three times the largest free value, and inner universals are monotone
# beyond it.
REGRESSION_CORPUS = [
    ("?msd_fib Ek n=2*k+1", ("n",)),
    ("?msd_fib z=2*n+1", ("n", "z")),
    ("?msd_fib z=(y+1)/2", ("y", "z")),
    ("?msd_fib x=y/2+2", ("x", "y")),
    ("?msd_fib Ey $phin(n+1,y) & z+1=y", ("n", "z")),
    ("?msd_fib Ex $phin(n-1,x) & z=x+2", ("n", "z")),
    ("?msd_fib Ek n=3*k+1", ("n",)),
    ("?msd_fib x!=y & x<=y", ("x", "y")),
    ("?msd_fib Ey $phin(2*n,y) & z=(y+1)/2", ("n", "z")),
]


@pytest.mark.parametrize("source,variables", REGRESSION_CORPUS)
def test_compile_matches_integer_semantics(registry, source, variables):
    formula = parse(source)
    dfa = logic.compile_formula(formula, registry)
    assert dfa.labels == tuple(sorted(variables))
    bound = 40 if len(variables) > 1 else 200
    witness_bound = 3 * bound + 10
    for assignment in _assignments(len(variables), bound):
        env = dict(zip(sorted(variables), assignment))
        expected = _eval_formula(formula, env, ORACLES, witness_bound)
        got = dfa.accepts_values(*[env[v] for v in sorted(variables)])
        assert got == expected, (source, env)


def test_define_and_call(registry):
    if "double1" not in registry:
        logic.define(registry, "double1", "?msd_fib z=2*n+1")
    assert logic.eval_sentence("?msd_fib $double1(3,7)", registry)
    assert not logic.eval_sentence("?msd_fib $double1(3,6)", registry)


def test_call_arity_checked(registry):
    if "double1" not in registry:
        logic.define(registry, "double1", "?msd_fib z=2*n+1")
    with pytest.raises(ArityError):
        logic.eval_sentence("?msd_fib $double1(1,2,3)", registry)


def test_unknown_name_rejected(registry):
    with pytest.raises(CompileError):
        logic.eval_sentence("?msd_fib $nonexistent(1)", registry)


def test_reserved_name_cannot_be_shadowed(registry):
    with pytest.raises(CompileError):
        logic.define(registry, "shift", "?msd_fib x=y")


def test_identical_redefinition_is_noop(registry):
    logic.define(registry, "redef_demo", "?msd_fib Ek n=2*k")
    logic.define(registry, "redef_demo", "?msd_fib Ek n=k+k")  # same language
    with pytest.raises(CompileError):
        logic.define(registry, "redef_demo", "?msd_fib Ek n=2*k+1")


def test_duplicate_call_arguments_take_diagonal(registry):
    # $lt(x, x) is empty: nothing is smaller than itself.
    assert not logic.eval_sentence("?msd_fib Ex $lt(x,x)", registry)
    assert logic.eval_sentence("?msd_fib Ex,y $lt(x,y)", registry)


def test_subtraction_moves_across_comparison(registry):
    dfa = logic.compile_formula("?msd_fib x=2*n-1", registry)
    for n in range(1, 30):
        assert dfa.accepts_values(n, 2 * n - 1)
        assert not dfa.accepts_values(n, 2 * n)
