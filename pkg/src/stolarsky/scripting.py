"""Proof-script engine.

A script is a sequence of commands, each terminated by a colon:

    def <name> "<formula>":
    eval <name> "<formula>":
    reg <name> msd_fib... "<regex>":
    concat <out> <a> <b>:
    alphabet <out> msd_fib $<a>:

`def` compiles a formula and stores it under a name, `eval` decides a
closed formula and prints `<name>: TRUE` or `FALSE`, `reg` compiles a
regular expression over as many tracks as there are `msd_fib` tags,
`concat` concatenates two stored languages word-wise, and `alphabet`
renumerates (valid digits, leading-zero closure, minimization).  `#`
starts a comment that runs to the end of the line; quoted bodies may span
lines.  Registering a name twice is an error unless the new automaton is
language-equal to the old one, in which case the command is a no-op; that
lets scripts repeat stock definitions such as `reg all0 msd_fib "0*"`.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from stolarsky import automata as At
from stolarsky import logic
from stolarsky.pipeline import renumerate
from stolarsky.regex import regex_to_dfa

__all__ = ["Command", "CommandResult", "ScriptError", "parse_script", "run_script"]


class ScriptError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


@dataclass(frozen=True)
class Command:
    kind: str  # def | eval | reg | concat | alphabet
    name: str
    args: tuple[str, ...]
    body: str  # quoted formula or regex, empty otherwise
    line: int


@dataclass(frozen=True)
class CommandResult:
    command: Command
    outcome: str  # 'TRUE' / 'FALSE' for eval, 'defined' / 'unchanged' else


def _tokenize_script(text: str):
    """Yield (token, line) pairs; quoted strings come through as one token."""
    line = 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            i += 1
        elif ch.isspace():
            i += 1
        elif ch == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif ch == '"':
            start_line = line
            j = i + 1
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    line += 1
                j += 1
            if j >= n:
                raise ScriptError("unterminated quote", start_line)
            yield '"' + text[i + 1 : j], start_line
            i = j + 1
        elif ch == ":":
            yield ":", line
            i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in ':"#':
                j += 1
            yield text[i:j], line
            i = j


def parse_script(text: str) -> list[Command]:
    tokens = list(_tokenize_script(text))
    commands: list[Command] = []
    i = 0
    while i < len(tokens):
        tok, line = tokens[i]
        group: list[tuple[str, int]] = []
        while i < len(tokens) and tokens[i][0] != ":":
            group.append(tokens[i])
            i += 1
        if i >= len(tokens):
            raise ScriptError("missing ':' terminator", line)
        i += 1  # consume ':'
        if not group:
            continue
        kind = group[0][0]
        words = [t for t, _ in group[1:] if not t.startswith('"')]
        bodies = [t[1:] for t, _ in group[1:] if t.startswith('"')]
        if kind in ("def", "eval"):
            if len(words) != 1 or len(bodies) != 1:
                raise ScriptError(f"malformed {kind} command", line)
            commands.append(Command(kind, words[0], (), bodies[0], line))
        elif kind == "reg":
            if len(bodies) != 1 or len(words) < 2:
                raise ScriptError("malformed reg command", line)
            name, tags = words[0], words[1:]
            if any(tag != "msd_fib" for tag in tags):
                raise ScriptError(f"unsupported numeration in reg", line)
            commands.append(Command(kind, name, tuple(tags), bodies[0], line))
        elif kind == "concat":
            if len(words) != 3 or bodies:
                raise ScriptError("malformed concat command", line)
            commands.append(Command(kind, words[0], tuple(words[1:]), "", line))
        elif kind == "alphabet":
            if len(words) != 3 or bodies:
                raise ScriptError("malformed alphabet command", line)
            out, tag, src = words
            if tag != "msd_fib":
                raise ScriptError("unsupported numeration in alphabet", line)
            if not src.startswith("$"):
                raise ScriptError("alphabet source must be $name", line)
            commands.append(Command(kind, out, (src[1:],), "", line))
        else:
            raise ScriptError(f"unknown command {kind!r}", line)
    return commands


def _register(registry: logic.Registry, store: Path | None, name: str, dfa) -> str:
    if name in registry:
        registry.register(name, dfa)  # raises unless language-equal
        return "unchanged"
    registry.register(name, dfa)
    if store is not None:
        (store / f"{name}.aut").write_text(dfa.to_text())
    return "defined"


def run_script(
    text: str,
    registry: logic.Registry,
    store: Path | None = None,
    echo=None,
) -> list[CommandResult]:
    """Execute a script against a registry; `echo` gets one line per eval."""
    commands = parse_script(text)
    results: list[CommandResult] = []
    for cmd in commands:
        try:
            if cmd.kind == "def":
                dfa = logic.compile_formula(logic.parse(cmd.body), registry)
                outcome = _register(registry, store, cmd.name, dfa.relabel(None))
            elif cmd.kind == "eval":
                value = logic.eval_sentence(logic.parse(cmd.body), registry)
                outcome = "TRUE" if value else "FALSE"
                if echo is not None:
                    echo(f"{cmd.name}: {outcome}")
            elif cmd.kind == "reg":
                dfa = regex_to_dfa(cmd.body, len(cmd.args))
                outcome = _register(registry, store, cmd.name, dfa)
            elif cmd.kind == "concat":
                a = registry.get(cmd.args[0])
                b = registry.get(cmd.args[1])
                dfa = At.concat_languages(a, b)
                outcome = _register(registry, store, cmd.name, dfa)
            else:  # alphabet
                dfa = renumerate(registry.get(cmd.args[0]))
                outcome = _register(registry, store, cmd.name, dfa)
        except (logic.ParseError, logic.CompileError, At.CompositionError) as exc:
            raise ScriptError(f"{cmd.kind} {cmd.name}: {exc}", cmd.line) from exc
        results.append(CommandResult(cmd, outcome))
    return results
