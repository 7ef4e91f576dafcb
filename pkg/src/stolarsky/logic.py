"""First-order query language over Zeckendorf-synchronized relations.

Formulas use the shorthand common to automatic-sequence provers: `A` and
`E` are the universal and existential quantifiers (variable lists may be
comma-separated, e.g. `Ax,y,z`), `& | ~ => <=>` are the connectives, atoms
compare linear terms with `= != < <= > >=`, and `$name(...)` calls a
previously defined automaton.  An optional leading `?msd_fib` tag names the
numeration system; it is validated and otherwise ignored since only
Fibonacci numeration exists here.

Compilation maps every formula to a complete, minimized, leading-zero
normalized DFA whose tracks are the free variables in alphabetical order.
Lowering rules: a constant multiple becomes balanced repeated addition,
floor division `t/k` becomes `Eq,r t = k*q + r & r <= k-1`, subtraction
moves across the comparison, the derived comparisons reduce to `=` and `<`,
and `A` is `~E~`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from stolarsky import automata as At
from stolarsky.automata import Dfa

__all__ = [
    "ArityError",
    "CompileError",
    "Formula",
    "ParseError",
    "Registry",
    "compile_formula",
    "define",
    "eval_sentence",
    "free_variables",
    "parse",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class CompileError(ValueError):
    pass


class ArityError(CompileError):
    pass


# -- abstract syntax -------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class BinTerm:
    op: str  # '+', '-', '*', '/'; '*' and '/' have a Const operand
    left: object
    right: object


@dataclass(frozen=True)
class Cmp:
    op: str  # '=', '!=', '<', '<=', '>', '>='
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class Not:
    body: object


@dataclass(frozen=True)
class BinOp:
    op: str  # '&', '|', '=>', '<=>'
    left: object
    right: object


@dataclass(frozen=True)
class Quant:
    kind: str  # 'A' or 'E'
    variables: tuple[str, ...]
    body: object


Formula = object  # any of the node types above


# -- tokenizer -------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<call>\$[A-Za-z_][A-Za-z0-9_]*)
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op><=>|=>|!=|<=|>=|[()~&|,+\-*/<>=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            raise ParseError(f"unexpected character {source[pos]!r}", line, col)
        kind = match.lastgroup
        text = match.group()
        if kind != "ws":
            tokens.append(_Token(kind, text, line, col))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        pos = match.end()
    return tokens


_QUANT_RE = re.compile(r"^([AE])([a-z][a-z0-9_]*)$")


class _FormulaParser:
    """Recursive descent with precedence climbing.

    Precedence (loosest first): <=> , => , | , & ; ~ binds tightest.  A
    quantifier encountered in operand position swallows the maximal formula
    to its right.  => and <=> associate to the right.
    """

    _LEVELS = {"<=>": 1, "=>": 2, "|": 3, "&": 4}

    def __init__(self, tokens: list[_Token], source: str):
        self.tokens = tokens
        self.source = source
        self.pos = 0

    def error(self, message: str):
        if self.pos < len(self.tokens):
            tok = self.tokens[self.pos]
            raise ParseError(message, tok.line, tok.column)
        raise ParseError(message + " (at end of input)", 1, len(self.source) + 1)

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of formula")
        self.pos += 1
        return tok

    def expect(self, text: str) -> None:
        tok = self.peek()
        if tok is None or tok.text != text:
            self.error(f"expected {text!r}")
        self.pos += 1

    # formulas ------------------------------------------------------------

    def parse(self) -> Formula:
        node = self.formula(0)
        if self.peek() is not None:
            self.error("trailing input after formula")
        return node

    def formula(self, level: int) -> Formula:
        left = self.unary()
        while True:
            tok = self.peek()
            if tok is None or tok.text not in self._LEVELS:
                return left
            op_level = self._LEVELS[tok.text]
            if op_level < level:
                return left
            self.pos += 1
            # '&' and '|' are associative; '=>' and '<=>' associate right,
            # which the recursion at equal level provides.
            right_level = op_level + 1 if tok.text in ("&", "|") else op_level
            right = self.formula(right_level)
            left = BinOp(tok.text, left, right)

    def unary(self) -> Formula:
        tok = self.peek()
        if tok is None:
            self.error("expected a formula")
        if tok.text == "~":
            self.pos += 1
            return Not(self.unary())
        quant = self._try_quantifier()
        if quant is not None:
            return quant
        if tok.text == "(":
            saved = self.pos
            self.pos += 1
            try:
                inner = self.formula(0)
                self.expect(")")
            except ParseError:
                self.pos = saved
            else:
                nxt = self.peek()
                term_continues = nxt is not None and nxt.text in (
                    "+", "-", "*", "/", "=", "!=", "<", "<=", ">", ">=",
                )
                if not term_continues:
                    return inner
                self.pos = saved  # it was a parenthesized term after all
        return self.atom()

    def _try_quantifier(self) -> Formula | None:
        tok = self.peek()
        if tok is None or tok.kind != "word":
            return None
        names: list[str] = []
        if tok.text in ("A", "E"):
            kind = tok.text
            self.pos += 1
            first = self.take()
            if first.kind != "word":
                self.error("expected a variable after quantifier")
            names.append(first.text)
        else:
            match = _QUANT_RE.match(tok.text)
            if match is None:
                return None
            kind = match.group(1)
            names.append(match.group(2))
            self.pos += 1
        while self.peek() is not None and self.peek().text == ",":
            self.pos += 1
            var = self.take()
            if var.kind != "word":
                self.error("expected a variable name")
            names.append(var.text)
        body = self.formula(0)  # maximal scope to the right
        return Quant(kind, tuple(names), body)

    def atom(self) -> Formula:
        tok = self.peek()
        if tok is not None and tok.kind == "call":
            call = self._call()
            return call
        left = self.term()
        tok = self.peek()
        if tok is None or tok.text not in ("=", "!=", "<", "<=", ">", ">="):
            self.error("expected a comparison operator")
        self.pos += 1
        right = self.term()
        return Cmp(tok.text, left, right)

    def _call(self) -> Call:
        tok = self.take()
        name = tok.text[1:]
        self.expect("(")
        args = [self.term()]
        while self.peek() is not None and self.peek().text == ",":
            self.pos += 1
            args.append(self.term())
        self.expect(")")
        return Call(name, tuple(args))

    # terms ---------------------------------------------------------------

    def term(self):
        left = self.product()
        while True:
            tok = self.peek()
            if tok is None or tok.text not in ("+", "-"):
                return left
            self.pos += 1
            right = self.product()
            left = BinTerm(tok.text, left, right)

    def product(self):
        left = self.factor()
        while True:
            tok = self.peek()
            if tok is None or tok.text not in ("*", "/"):
                return left
            op = tok.text
            self.pos += 1
            right = self.factor()
            if op == "*":
                if isinstance(left, Const):
                    left = BinTerm("*", left, right)
                elif isinstance(right, Const):
                    left = BinTerm("*", right, left)
                else:
                    self.error("multiplication needs a constant operand")
            else:
                if not isinstance(right, Const):
                    self.error("division needs a constant divisor")
                if right.value == 0:
                    self.error("division by zero")
                left = BinTerm("/", left, right)

    def factor(self):
        tok = self.peek()
        if tok is None:
            self.error("expected a term")
        if tok.text == "(":
            self.pos += 1
            inner = self.term()
            self.expect(")")
            return inner
        if tok.kind == "num":
            self.pos += 1
            return Const(int(tok.text))
        if tok.kind == "word":
            self.pos += 1
            return Var(tok.text)
        self.error("expected a variable, number, or '('")


def parse(source: str) -> Formula:
    """Parse a formula, accepting an optional leading `?msd_fib` tag."""
    text = source.strip()
    if text.startswith("?"):
        parts = re.split(r"\s+", text, maxsplit=1)
        if parts[0] != "?msd_fib":
            raise ParseError(f"unsupported numeration {parts[0]!r}", 1, 1)
        text = parts[1] if len(parts) > 1 else ""
    tokens = _tokenize(text)
    formula = _FormulaParser(tokens, text).parse()
    _check_bindings(formula)
    return formula


# -- scope checking --------------------------------------------------------


def _check_bindings(formula: Formula) -> None:
    def walk(node, bound: frozenset[str]) -> None:
        if isinstance(node, Quant):
            for v in node.variables:
                if v in bound:
                    raise CompileError(f"variable {v!r} bound twice")
            walk(node.body, bound | set(node.variables))
        elif isinstance(node, Not):
            walk(node.body, bound)
        elif isinstance(node, BinOp):
            walk(node.left, bound)
            walk(node.right, bound)

    walk(formula, frozenset())


def _term_vars(term, out: set[str]) -> None:
    if isinstance(term, Var):
        out.add(term.name)
    elif isinstance(term, BinTerm):
        _term_vars(term.left, out)
        _term_vars(term.right, out)


def free_variables(formula: Formula) -> frozenset[str]:
    def walk(node, bound: frozenset[str]) -> set[str]:
        if isinstance(node, Quant):
            return walk(node.body, bound | set(node.variables))
        if isinstance(node, Not):
            return walk(node.body, bound)
        if isinstance(node, BinOp):
            return walk(node.left, bound) | walk(node.right, bound)
        names: set[str] = set()
        if isinstance(node, Cmp):
            _term_vars(node.left, names)
            _term_vars(node.right, names)
        elif isinstance(node, Call):
            for arg in node.args:
                _term_vars(arg, names)
        return names - bound

    return frozenset(walk(formula, frozenset()))


# -- registry ---------------------------------------------------------------


class Registry:
    """Named automata addressable from formulas via `$name(...)`.

    Base-relation names are reserved: they may be (re)bound only to a
    language-equal automaton.  The same idempotence rule applies to every
    other name, which lets proof scripts repeat identical definitions.
    """

    def __init__(self) -> None:
        self.automata: dict[str, Dfa] = {}
        self.reserved: set[str] = set()

    def install_base(self, name: str, dfa: Dfa) -> None:
        self.automata[name] = dfa
        self.reserved.add(name)

    def register(self, name: str, dfa: Dfa) -> None:
        existing = self.automata.get(name)
        if existing is not None:
            if existing.tracks == dfa.tracks and At.equivalent(existing, dfa):
                return  # identical redefinition is a no-op
            raise CompileError(f"name {name!r} already defined differently")
        self.automata[name] = dfa

    def get(self, name: str) -> Dfa:
        try:
            return self.automata[name]
        except KeyError:
            raise CompileError(f"unknown automaton {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self.automata

    def names(self) -> list[str]:
        return sorted(self.automata)


# -- elementary automata ----------------------------------------------------


validity = At.validity


@lru_cache(maxsize=None)
def _equality() -> Dfa:
    """Two valid tracks carrying the same digits."""
    # State 0: equal so far (both last bits 0); 1: equal, last bits 1; 2: sink.
    delta = (
        (0, 2, 2, 1),
        (0, 2, 2, 2),
        (2, 2, 2, 2),
    )
    return At.minimized(Dfa(2, delta, frozenset({0, 1}), 0))


@lru_cache(maxsize=None)
def _constant(value: int) -> Dfa:
    """1-track automaton for {value}, closed under leading zeros."""
    from stolarsky import zeckendorf

    word = zeckendorf.encode(value)
    n = len(word)
    delta = []
    for i in range(n):
        want = 1 if word[i] == "1" else 0
        row = [n + 1, n + 1]
        row[want] = i + 1
        delta.append(tuple(row))
    delta.append((n + 1, n + 1))  # accepting end state
    delta.append((n + 1, n + 1))  # sink
    dfa = Dfa(1, tuple(delta), frozenset({n}), 0)
    return At.normalize_leading_zeros(dfa)


def constant_dfa(value: int, label: str) -> Dfa:
    return _constant(value).relabel((label,))


def _true_dfa() -> Dfa:
    return Dfa(0, ((0,),), frozenset({0}), 0, ())


def _false_dfa() -> Dfa:
    return Dfa(0, ((0,),), frozenset(), 0, ())


# -- compiler ----------------------------------------------------------------


class _Compiler:
    def __init__(self, registry: Registry):
        self.registry = registry
        self.fresh_count = 0

    def fresh(self) -> str:
        self.fresh_count += 1
        return f"%{self.fresh_count}"

    # automaton helpers -----------------------------------------------------

    def base(self, name: str, labels: tuple[str, ...]) -> Dfa:
        dfa = self.registry.get(name)
        if dfa.tracks != len(labels):
            raise ArityError(
                f"${name} has {dfa.tracks} tracks, called with {len(labels)}"
            )
        return self.apply_args_vars(dfa, labels)

    def apply_args_vars(self, dfa: Dfa, argvars: tuple[str, ...]) -> Dfa:
        """Bind a stored automaton's tracks to variables, positionally.

        Repeated variables produce a diagonal via equality constraints.
        Results are sanitized with track validity (stored automata such as
        the raw shift regex may accept invalid digit words).
        """
        temps = tuple(f"%arg{i}" for i in range(len(argvars)))
        result = dfa.relabel(temps)
        assignment: dict[str, str] = {}
        fold_pairs: list[tuple[str, str]] = []
        rename: dict[str, str] = {}
        for temp, var in zip(temps, argvars):
            if var not in assignment.values():
                rename[temp] = var
                assignment[temp] = var
            else:
                fold_pairs.append((var, temp))
        relabeled = tuple(rename.get(lbl, lbl) for lbl in result.labels)
        result = result.relabel(relabeled)
        result = self._sorted_tracks(result)
        for var, temp in fold_pairs:
            eq = _equality().relabel(tuple(sorted((var, temp))))
            result = At.boolean_combine("and", result, eq)
            result = At.project(result, temp)
            result = At.minimized(result)
        result = self.intersect_validity(result)
        return At.minimized(result)

    @staticmethod
    def _sorted_tracks(dfa: Dfa) -> Dfa:
        labels = dfa.labels
        if labels is None or tuple(sorted(labels)) == labels:
            return dfa
        order = tuple(sorted(labels))
        return At.expand_tracks(dfa, order)

    def intersect_validity(self, dfa: Dfa) -> Dfa:
        if dfa.tracks == 0:
            return dfa
        return At.boolean_combine(
            "and", dfa, validity(dfa.tracks, dfa.labels)
        )

    def conjoin(self, parts: list[Dfa]) -> Dfa:
        result = parts[0]
        for nxt in parts[1:]:
            result = At.boolean_combine("and", result, nxt)
        return result

    def negate(self, dfa: Dfa) -> Dfa:
        return self.intersect_validity(At.complement(dfa))

    def union_fix(self, op: str, a: Dfa, b: Dfa) -> Dfa:
        """Combine and restore validity on the tracks only one side covers."""
        combined = At.boolean_combine(op, a, b)
        if a.labels is not None and b.labels is not None:
            only = set(a.labels) ^ set(b.labels)
            if only and op in ("or", "xor", "minus"):
                combined = self.intersect_validity(combined)
        return combined

    # terms -----------------------------------------------------------------

    def flatten(self, term) -> tuple[str, list[Dfa], list[str]]:
        """Reduce a subtraction-free term to a variable plus constraints."""
        if isinstance(term, Var):
            return term.name, [], []
        if isinstance(term, Const):
            v = self.fresh()
            return v, [constant_dfa(term.value, v)], [v]
        if isinstance(term, BinTerm):
            if term.op == "+":
                va, ca, fa = self.flatten(term.left)
                vb, cb, fb = self.flatten(term.right)
                w = self.fresh()
                adder = self.base("add", (va, vb, w))
                return w, ca + cb + [adder], fa + fb + [w]
            if term.op == "*":
                const = term.left.value
                if const == 0:
                    v = self.fresh()
                    return v, [constant_dfa(0, v)], [v]
                if const == 1:
                    return self.flatten(term.right)
                if const % 2 == 0:
                    vh, ch, fh = self.flatten(
                        BinTerm("*", Const(const // 2), term.right)
                    )
                    w = self.fresh()
                    return w, ch + [self.base("add", (vh, vh, w))], fh + [w]
                vh, ch, fh = self.flatten(
                    BinTerm("*", Const(const - 1), term.right)
                )
                vt, ct, ft = self.flatten(term.right)
                w = self.fresh()
                return (
                    w,
                    ch + ct + [self.base("add", (vh, vt, w))],
                    fh + ft + [w],
                )
            if term.op == "/":
                divisor = term.right.value
                vt, ct, ft = self.flatten(term.left)
                q, r = self.fresh(), self.fresh()
                prod_v, prod_c, prod_f = self.flatten(
                    BinTerm("+", BinTerm("*", Const(divisor), Var(q)), Var(r))
                )
                eq = _equality().relabel(tuple(sorted((vt, prod_v))))
                bound = self.fresh()
                remainder_ok = [
                    constant_dfa(divisor, bound),
                    self.base("lt", (r, bound)),
                ]
                constraints = ct + prod_c + [eq] + remainder_ok
                return q, constraints, ft + prod_f + [bound, r, q]
            raise CompileError(f"cannot lower term operator {term.op!r}")
        raise CompileError(f"unsupported term {term!r}")

    @staticmethod
    def split_difference(term) -> tuple[object, object]:
        """Rewrite a term as P - N with P, N subtraction-free."""
        if isinstance(term, (Var, Const)):
            return term, None
        if isinstance(term, BinTerm):
            if term.op in ("*", "/"):
                # Divisions and multiples of differences are rejected; the
                # formulas in scope only subtract at the additive level.
                p, n = _Compiler.split_difference(term.left if term.op == "/" else term.right)
                if n is not None:
                    raise CompileError(
                        "subtraction under * or / is not supported"
                    )
                return term, None
            pl, nl = _Compiler.split_difference(term.left)
            pr, nr = _Compiler.split_difference(term.right)
            if term.op == "+":
                pos = _add_opt(pl, pr)
                neg = _add_opt(nl, nr)
                return pos, neg
            # subtraction: (pl - nl) - (pr - nr) = (pl + nr) - (nl + pr)
            pos = _add_opt(pl, nr)
            neg = _add_opt(nl, pr)
            return pos, neg
        raise CompileError(f"unsupported term {term!r}")

    # atoms -------------------------------------------------------------

    def compile_cmp(self, node: Cmp) -> Dfa:
        lp, ln = self.split_difference(node.left)
        rp, rn = self.split_difference(node.right)
        left = _add_opt(lp, rn)
        right = _add_opt(rp, ln)
        if isinstance(left, Const) and isinstance(right, Const):
            result = {
                "=": left.value == right.value,
                "!=": left.value != right.value,
                "<": left.value < right.value,
                "<=": left.value <= right.value,
                ">": left.value > right.value,
                ">=": left.value >= right.value,
            }[node.op]
            return _true_dfa() if result else _false_dfa()
        vl, cl, fl = self.flatten(left)
        vr, cr, fr = self.flatten(right)
        core = self.relation_core(node.op, vl, vr)
        parts = cl + cr + [core]
        dfa = self.conjoin(parts)
        for fresh in fl + fr:
            dfa = At.minimized(At.project(dfa, fresh))
        return dfa

    def relation_core(self, op: str, vl: str, vr: str) -> Dfa:
        if vl == vr:
            holds = op in ("=", "<=", ">=")
            return _true_dfa() if holds else _false_dfa()
        if op == "=":
            return _equality().relabel(tuple(sorted((vl, vr)))) if vl < vr else (
                _equality().relabel((vr, vl))
            )
        if op == "<":
            return self.base("lt", (vl, vr))
        if op == ">":
            return self.base("lt", (vr, vl))
        if op == "!=":
            return At.boolean_combine(
                "or", self.base("lt", (vl, vr)), self.base("lt", (vr, vl))
            )
        if op == "<=":
            return At.boolean_combine(
                "or", self.base("lt", (vl, vr)), self.relation_core("=", vl, vr)
            )
        if op == ">=":
            return At.boolean_combine(
                "or", self.base("lt", (vr, vl)), self.relation_core("=", vl, vr)
            )
        raise CompileError(f"unknown comparison {op!r}")

    def compile_call(self, node: Call) -> Dfa:
        stored = self.registry.get(node.name)
        if stored.tracks != len(node.args):
            raise ArityError(
                f"${node.name} expects {stored.tracks} arguments, got {len(node.args)}"
            )
        argvars: list[str] = []
        constraints: list[Dfa] = []
        freshes: list[str] = []
        for arg in node.args:
            if isinstance(arg, Var):
                argvars.append(arg.name)
                continue
            v = self.fresh()
            eq_formula = Cmp("=", Var(v), arg)
            constraints.append(self.compile_cmp(eq_formula))
            argvars.append(v)
            freshes.append(v)
        dfa = self.apply_args_vars(stored, tuple(argvars))
        if constraints:
            dfa = self.conjoin([dfa] + constraints)
        for v in freshes:
            dfa = At.minimized(At.project(dfa, v))
        return dfa

    # formulas ------------------------------------------------------------

    def compile(self, node: Formula) -> Dfa:
        if isinstance(node, Cmp):
            return self.compile_cmp(node)
        if isinstance(node, Call):
            return self.compile_call(node)
        if isinstance(node, Not):
            return self.negate(self.compile(node.body))
        if isinstance(node, BinOp):
            left = self.compile(node.left)
            right = self.compile(node.right)
            if node.op == "&":
                return At.boolean_combine("and", left, right)
            if node.op == "|":
                return self.union_fix("or", left, right)
            if node.op == "=>":
                return self.union_fix("or", self.negate(left), right)
            if node.op == "<=>":
                xor = self.union_fix("xor", left, right)
                return self.negate(xor)
            raise CompileError(f"unknown connective {node.op!r}")
        if isinstance(node, Quant):
            if node.kind == "E":
                dfa = self.compile(node.body)
                for v in node.variables:
                    dfa = At.minimized(At.project(dfa, v))
                return dfa
            inner = self.negate(self.compile(node.body))
            for v in node.variables:
                inner = At.minimized(At.project(inner, v))
            return self.negate(inner)
        raise CompileError(f"cannot compile {node!r}")


def compile_formula(formula: Formula, registry: Registry) -> Dfa:
    """Compile to a DFA over the free variables, tracks in alphabetical order."""
    if isinstance(formula, str):
        formula = parse(formula)
    compiler = _Compiler(registry)
    dfa = compiler.compile(formula)
    dfa = At.minimized(At.normalize_leading_zeros(dfa))
    expected = tuple(sorted(free_variables(formula)))
    if dfa.labels is None:
        if expected:
            raise CompileError("free variables lost during compilation")
        return dfa.relabel(())
    if dfa.labels != expected:
        missing = set(expected) - set(dfa.labels)
        if missing:
            # Variables that never reached an automaton track (possible for
            # vacuous appearances) get unconstrained valid tracks.
            dfa = At.boolean_combine(
                "and", dfa, validity(len(expected), expected)
            )
        else:
            raise CompileError(
                f"track order {dfa.labels} does not match {expected}"
            )
    return dfa


def eval_sentence(formula: Formula, registry: Registry) -> bool:
    """Truth value of a closed formula."""
    if isinstance(formula, str):
        formula = parse(formula)
    if free_variables(formula):
        raise ArityError(
            f"sentence has free variables: {sorted(free_variables(formula))}"
        )
    dfa = compile_formula(formula, registry)
    return dfa.initial in dfa.finals


def define(registry: Registry, name: str, formula: Formula) -> Dfa:
    """Compile and register an automaton for later `$name(...)` calls."""
    dfa = compile_formula(formula, registry)
    registry.register(name, dfa)
    return dfa


def _add_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return BinTerm("+", a, b)
