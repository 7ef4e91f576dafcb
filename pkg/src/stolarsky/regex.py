"""Regular expressions over k-track tuple alphabets.

The pattern language matches what the proof scripts use: tuple literals
`[b1,...,bk]` (bare `0`/`1` when there is a single track), alternation `|`,
juxtaposition for concatenation, Kleene star, and parentheses.  Patterns
compile through a Thompson construction and subset construction to the
minimal DFA for the literal word language; no leading-zero closure is
applied here.
"""

from __future__ import annotations

from stolarsky.automata import Dfa, Nfa, determinize

__all__ = ["RegexSyntaxError", "regex_to_dfa"]


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    def __init__(self, pattern: str, tracks: int):
        self.pattern = pattern
        self.tracks = tracks
        self.pos = 0

    def error(self, message: str):
        raise RegexSyntaxError(message, self.pos)

    def peek(self) -> str | None:
        self._skip_ws()
        return self.pattern[self.pos] if self.pos < len(self.pattern) else None

    def _skip_ws(self) -> None:
        while self.pos < len(self.pattern) and self.pattern[self.pos].isspace():
            self.pos += 1

    def parse(self):
        node = self.alternation()
        if self.peek() is not None:
            self.error(f"unexpected {self.pattern[self.pos]!r}")
        return node

    def alternation(self):
        branches = [self.concatenation()]
        while self.peek() == "|":
            self.pos += 1
            branches.append(self.concatenation())
        return ("alt", branches) if len(branches) > 1 else branches[0]

    def concatenation(self):
        parts = []
        while True:
            ch = self.peek()
            if ch is None or ch in "|)":
                break
            parts.append(self.starred())
        if not parts:
            return ("eps",)
        return ("cat", parts) if len(parts) > 1 else parts[0]

    def starred(self):
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = ("star", node)
        return node

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.alternation()
            if self.peek() != ")":
                self.error("unbalanced parenthesis")
            self.pos += 1
            return node
        if ch == "[":
            return ("sym", self.tuple_literal())
        if ch in ("0", "1"):
            if self.tracks != 1:
                self.error("bare digit literal needs a 1-track alphabet")
            self.pos += 1
            return ("sym", int(ch))
        self.error("expected a literal, '(' or '['")

    def tuple_literal(self) -> int:
        self.pos += 1  # consume '['
        bits = []
        while True:
            ch = self.peek()
            if ch not in ("0", "1"):
                self.error("expected a bit inside tuple literal")
            bits.append(int(ch))
            self.pos += 1
            ch = self.peek()
            if ch == ",":
                self.pos += 1
                continue
            if ch == "]":
                self.pos += 1
                break
            self.error("expected ',' or ']' in tuple literal")
        if len(bits) != self.tracks:
            self.error(
                f"tuple literal has {len(bits)} bits, alphabet has {self.tracks}"
            )
        sym = 0
        for b in bits:
            sym = (sym << 1) | b
        return sym


def _build(nfa: Nfa, node) -> tuple[int, int]:
    """Thompson construction; returns (entry, exit) states."""
    kind = node[0]
    if kind == "eps":
        s = nfa.add_state()
        return s, s
    if kind == "sym":
        a = nfa.add_state()
        b = nfa.add_state()
        nfa.add_edge(a, node[1], b)
        return a, b
    if kind == "cat":
        first, last = None, None
        for part in node[1]:
            entry, exit_ = _build(nfa, part)
            if first is None:
                first = entry
            else:
                nfa.epsilon[last].add(entry)
            last = exit_
        return first, last
    if kind == "alt":
        a = nfa.add_state()
        b = nfa.add_state()
        for part in node[1]:
            entry, exit_ = _build(nfa, part)
            nfa.epsilon[a].add(entry)
            nfa.epsilon[exit_].add(b)
        return a, b
    if kind == "star":
        a = nfa.add_state()
        b = nfa.add_state()
        entry, exit_ = _build(nfa, node[1])
        nfa.epsilon[a].update((entry, b))
        nfa.epsilon[exit_].update((entry, b))
        return a, b
    raise AssertionError(kind)


def regex_to_dfa(pattern: str, tracks: int) -> Dfa:
    """Minimal complete DFA for the pattern's word language."""
    if tracks < 1:
        raise ValueError("at least one track required")
    ast = _Parser(pattern, tracks).parse()
    nfa = Nfa(tracks)
    entry, exit_ = _build(nfa, ast)
    nfa.initials = {entry}
    nfa.finals = {exit_}
    return determinize(nfa)
