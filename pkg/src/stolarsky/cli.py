"""Command-line interface.

Subcommands: `run` executes a proof script, `prove` drives the seven-step
verification for a built-in array and its theorem suite, `array` prints an
array window, `guess` infers an automaton from a sample file, `export-dot`
renders a stored automaton, and `selftest` runs the acceptance suite.
Exit codes: 0 all good, 1 a proof failed or a pipeline step failed,
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from stolarsky import arrays as ar
from stolarsky import logic
from stolarsky.automata import Dfa
from stolarsky.inference import InferenceError, SampleSet, guess_dfa
from stolarsky.pipeline import seven_step_verify, theorem_suite
from stolarsky.relations import (
    DEFAULT_LIMITS,
    CertificationError,
    build_base_relations,
    standard_registry,
)
from stolarsky.scripting import ScriptError, run_script

_BASE_NAMES = ("lt", "succ", "add", "shift", "phin", "phi2n")
_SWEEP_KEYS = ("less_than", "shift", "phin", "phi2n")


def _load_or_build_registry(store: Path, limit: int | None) -> logic.Registry:
    """Registry backed by the automaton store; base relations are built and
    certified once, then reused from disk."""
    store.mkdir(parents=True, exist_ok=True)
    files = {name: store / f"{name}.aut" for name in _BASE_NAMES}
    if all(f.exists() for f in files.values()):
        registry = logic.Registry()
        for name, f in files.items():
            registry.install_base(name, Dfa.from_text(f.read_text()))
        from stolarsky.automata import validity

        for k in (1, 2, 3):
            registry.install_base(f"valid_{k}", validity(k))
    else:
        limits = None
        if limit is not None:
            limits = {k: min(DEFAULT_LIMITS[k], limit) for k in _SWEEP_KEYS}
        base = build_base_relations(limits)
        registry = standard_registry(base)
        for rel in base.all():
            (store / f"{rel.name}.aut").write_text(rel.automaton.to_text())
    # Previously persisted definitions become available to scripts.
    for f in sorted(store.glob("*.aut")):
        name = f.stem
        if name not in registry:
            registry.register(name, Dfa.from_text(f.read_text()))
    return registry


def _cmd_run(args) -> int:
    store = Path(args.store)
    try:
        registry = _load_or_build_registry(store, args.limit)
        results = run_script(
            Path(args.script).read_text(), registry, store, echo=print
        )
    except (ScriptError, logic.ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CertificationError, InferenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    failed = [r for r in results if r.outcome == "FALSE"]
    return 1 if failed else 0


def _cmd_prove(args) -> int:
    store = Path(args.store)
    try:
        registry = _load_or_build_registry(store, args.limit)
    except (CertificationError, InferenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    spec = ar.BUILTIN_ARRAYS[args.array]
    report = seven_step_verify(spec, registry, samples=args.samples)
    if report.fully_verified:
        theorem_suite(spec.name, registry, report)
        for name in list(registry.names()):
            if name not in _BASE_NAMES and not name.startswith("valid_"):
                path = store / f"{name}.aut"
                if not path.exists():
                    path.write_text(registry.get(name).to_text())
    print(report.to_text(), end="")
    ok = report.fully_verified and all(report.theorems.values())
    print(f"{spec.name}: {'fully-verified' if ok else 'FAILED'}")
    return 0 if ok else 1


def _cmd_array(args) -> int:
    spec = ar.BUILTIN_ARRAYS[args.name]
    table = ar.generate(spec, args.rows, args.cols)
    out = ar.to_tsv(table) if args.tsv else ar.pretty(table)
    print(out, end="")
    return 0


def _cmd_guess(args) -> int:
    try:
        samples = SampleSet.from_file(args.samples)
        machine = guess_dfa(samples, max_pad=args.max_pad)
    except (InferenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(machine.to_text())
    print(f"# {machine.useful_state_count()} states", file=sys.stderr)
    return 0


def _cmd_export_dot(args) -> int:
    path = Path(args.store) / f"{args.name}.aut"
    if not path.exists():
        print(f"error: no stored automaton {args.name!r}", file=sys.stderr)
        return 2
    dfa = Dfa.from_text(path.read_text())
    text = dfa.to_dot(args.name)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_selftest(args) -> int:
    from stolarsky.acceptance import run_selftest

    return run_selftest(Path(args.store), limit=args.limit)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="stolarsky",
        description="Decision procedure and certified interspersion arrays "
        "over Zeckendorf numeration.",
    )
    parser.add_argument(
        "--store",
        default="./store",
        help="automaton store directory (default ./store)",
    )
    parser.add_argument(
        "--limit",
        type=int,
        default=None,
        help="cap the certification sweep bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="execute a proof script")
    p.add_argument("script")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("prove", help="verify a built-in array end to end")
    p.add_argument("array", choices=sorted(ar.BUILTIN_ARRAYS))
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=_cmd_prove)

    p = sub.add_parser("array", help="print an array window")
    p.add_argument("name", choices=sorted(ar.BUILTIN_ARRAYS))
    p.add_argument("--rows", type=int, default=10)
    p.add_argument("--cols", type=int, default=10)
    p.add_argument("--tsv", action="store_true")
    p.set_defaults(func=_cmd_array)

    p = sub.add_parser("guess", help="infer an automaton from samples")
    p.add_argument("--samples", required=True, help="file of '<i> <value>' lines")
    p.add_argument("--max-pad", type=int, default=2)
    p.set_defaults(func=_cmd_guess)

    p = sub.add_parser("export-dot", help="emit DOT for a stored automaton")
    p.add_argument("name")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_export_dot)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.set_defaults(func=_cmd_selftest)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
