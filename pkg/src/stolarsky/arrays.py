"""Exact generation of Stolarsky interspersion arrays.

An interspersion array has the Fibonacci numbers as its first row, a first
column defined by the least positive integer missing from all earlier rows,
a second column given either by a golden-ratio floor function of the first
entry or by a classification bit, and the Fibonacci recurrence everywhere
after that.  All arithmetic is exact; rows grow exponentially, so the mex
bookkeeping extends rows lazily up to a growing bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from stolarsky.zeckendorf import floor_alpha

__all__ = [
    "ArraySpec",
    "BUILTIN_ARRAYS",
    "DeltaRule",
    "FRule",
    "delta_value",
    "eval_f",
    "first_column",
    "gen_fib",
    "generate",
    "mex",
    "to_tsv",
    "pretty",
]


@dataclass(frozen=True)
class FRule:
    """Second column as a function of the first entry alone."""

    kind: str  # 'wythoff' | 'stolarsky' | 'dual'


@dataclass(frozen=True)
class DeltaRule:
    """Second column ``floor(alpha * A[i][1]) + delta_i`` for an eventually
    periodic classification sequence given as preperiod + period."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period must be nonempty")
        if any(b not in (0, 1) for b in self.preperiod + self.period):
            raise ValueError("classification bits must be 0 or 1")

    def bit(self, i: int) -> int:
        idx = i - 1
        if idx < len(self.preperiod):
            return self.preperiod[idx]
        return self.period[(idx - len(self.preperiod)) % len(self.period)]


@dataclass(frozen=True)
class ArraySpec:
    name: str
    rule: FRule | DeltaRule
    col1_name: str  # registry name for the guessed first-column automaton
    sample_count: int = 1000


BUILTIN_ARRAYS: dict[str, ArraySpec] = {
    "wythoff": ArraySpec("wythoff", FRule("wythoff"), "w1", 500),
    "stolarsky": ArraySpec("stolarsky", FRule("stolarsky"), "s1", 1000),
    "dual": ArraySpec("dual", FRule("dual"), "d1", 1000),
    "efc": ArraySpec("efc", DeltaRule((1,), (1, 0)), "efc1", 1000),
    "esc": ArraySpec("esc", DeltaRule((), (1, 0)), "esc1", 1000),
    "k100": ArraySpec("k100", DeltaRule((), (1, 0, 0)), "k100", 3000),
}


def gen_fib(a: int, b: int, n: int) -> int:
    """n-th term of the generalized Fibonacci sequence with seeds a, b."""
    if n < 1:
        raise ValueError("index starts at 1")
    if n == 1:
        return a
    x, y = a, b
    for _ in range(n - 2):
        x, y = y, x + y
    return y


def eval_f(kind: str, n: int) -> int:
    """Second-column functions, reduced to exact floor_alpha compositions."""
    if n < 1:
        raise ValueError("index starts at 1")
    if kind == "wythoff":
        # floor(alpha n - beta) = floor(alpha (n+1)) - 1
        return floor_alpha(n + 1) - 1
    if kind == "stolarsky":
        # floor(alpha n + 1/2) = floor((floor(2 alpha n) + 1) / 2)
        return (floor_alpha(2 * n) + 1) // 2
    if kind == "dual":
        # floor(alpha n + beta^2) = floor(alpha (n-1)) + 2
        return floor_alpha(n - 1) + 2
    raise ValueError(f"unknown rule kind {kind!r}")


def delta_value(spec: ArraySpec, i: int) -> int:
    """Classification bit for row i of a DeltaRule array."""
    if not isinstance(spec.rule, DeltaRule):
        raise TypeError(f"array {spec.name!r} uses an f-rule, not a delta rule")
    return spec.rule.bit(i)


def mex(values) -> int:
    """Least positive integer not in `values`."""
    present = set(values)
    candidate = 1
    while candidate in present:
        candidate += 1
    return candidate


class _Engine:
    """Shared row machinery for `generate` and `first_column`.

    `taken` holds every entry <= `bound` of every existing row; `tails`
    remembers, per row, the first pending value beyond the bound together
    with its predecessor, so rows extend lazily as the bound grows.
    """

    def __init__(self, spec: ArraySpec):
        self.spec = spec
        self.rows: list[tuple[int, int]] = []
        self.taken: set[int] = set()
        self.tails: list[tuple[int, int]] = []
        self.bound = 16
        self._add_row(1, 2)  # row 1 is the Fibonacci sequence

    def _add_row(self, a: int, b: int) -> None:
        self.rows.append((a, b))
        p, q = b - a, a
        while q <= self.bound:
            self.taken.add(q)
            p, q = q, p + q
        self.tails.append((p, q))

    def _extend(self, bound: int) -> None:
        if bound <= self.bound:
            return
        self.bound = bound
        for idx, (p, q) in enumerate(self.tails):
            if q <= bound:
                while q <= bound:
                    self.taken.add(q)
                    p, q = q, p + q
                self.tails[idx] = (p, q)

    def second_column(self, i: int, first: int) -> int:
        rule = self.spec.rule
        if isinstance(rule, FRule):
            return eval_f(rule.kind, first)
        return floor_alpha(first) + rule.bit(i)

    def grow(self, count: int) -> None:
        while len(self.rows) < count:
            i = len(self.rows) + 1
            # Column 1 is strictly increasing, so the search starts just
            # past the previous entry; `taken` is complete up to the bound.
            candidate = self.rows[-1][0] + 1
            while True:
                if candidate > self.bound:
                    self._extend(max(2 * candidate, 2 * self.bound))
                if candidate not in self.taken:
                    break
                candidate += 1
            self._add_row(candidate, self.second_column(i, candidate))


def _engine_rows(spec: ArraySpec, count: int) -> _Engine:
    engine = _Engine(spec)
    engine.grow(count)
    return engine


def generate(spec: ArraySpec, rows: int, cols: int) -> list[list[int]]:
    """The rows x cols window of the array, exactly."""
    if rows < 1 or cols < 1:
        raise ValueError("window must be at least 1x1")
    engine = _engine_rows(spec, rows)
    table = []
    for a, b in engine.rows[:rows]:
        row = [a, b]
        while len(row) < cols:
            row.append(row[-1] + row[-2])
        table.append(row[:cols])
    return table


def first_column(spec: ArraySpec, count: int) -> list[int]:
    """First `count` entries of the first column."""
    if count < 1:
        raise ValueError("count must be at least 1")
    engine = _engine_rows(spec, count)
    return [a for a, _ in engine.rows[:count]]


def to_tsv(table: list[list[int]]) -> str:
    return "\n".join("\t".join(str(v) for v in row) for row in table) + "\n"


def pretty(table: list[list[int]]) -> str:
    width = max(len(str(v)) for row in table for v in row)
    return "\n".join(
        " ".join(str(v).rjust(width) for v in row) for row in table
    ) + "\n"
