"""Seven-step verification of interspersion arrays, plus theorem suites.

For a given array the pipeline (1) computes first-column data from the
exact generator, (2) guesses a synchronized automaton for it, (3) proves
the guess is a total function, (4) proves it is strictly increasing,
(5) derives automata for columns two and three from the array's rule and
checks all three columns against the generator, (6) builds an automaton
for the set of values in columns three and beyond (digit-shift images of
column three) united with column two, and (7) closes the induction by
proving that the guessed first column is always the least positive integer
not yet used.  A fully verified report certifies the guessed automata
exactly; the per-array theorem suites then prove the published properties
on top of them.

Sampled first columns include the trivial zero row (0, 0): the mex
induction quantifies over all earlier rows including row zero, so the
column automata must relate 0 to 0 for the step to close.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from stolarsky import arrays as ar
from stolarsky import automata as At
from stolarsky import logic
from stolarsky.automata import Dfa
from stolarsky.bulk import accepts_pairs
from stolarsky.inference import SampleSet, guess_dfa
from stolarsky.regex import regex_to_dfa

__all__ = [
    "StepResult",
    "VerificationReport",
    "classification_sequence",
    "renumerate",
    "seven_step_verify",
    "subword_complexity",
    "theorem_suite",
]

STEP_NAMES = (
    "data",
    "guess",
    "functionality",
    "monotonicity",
    "columns-2-3",
    "set-S",
    "mex-induction",
)


@dataclass(frozen=True)
class StepResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    array: str
    steps: list[StepResult] = field(default_factory=list)
    state_counts: dict[str, int] = field(default_factory=dict)
    theorems: dict[str, bool] = field(default_factory=dict)

    @property
    def fully_verified(self) -> bool:
        names = [s.name for s in self.steps]
        return names == list(STEP_NAMES) and all(s.passed for s in self.steps)

    def to_text(self) -> str:
        lines = []
        for step in self.steps:
            status = "PASS" if step.passed else "FAIL"
            lines.append(f"{self.array}.{step.name} {status} {step.detail}".rstrip())
        for key in sorted(self.state_counts):
            lines.append(f"{self.array}.states.{key} {self.state_counts[key]}")
        for name in sorted(self.theorems):
            status = "PASS" if self.theorems[name] else "FAIL"
            lines.append(f"{self.array}.theorem.{name} {status}")
        return "\n".join(lines) + "\n"


def renumerate(dfa: Dfa) -> Dfa:
    """Attach numeric semantics: valid digits, leading-zero closure, minimal."""
    if dfa.tracks != 1:
        raise At.CompositionError("renumeration applies to 1-track automata")
    out = At.boolean_combine("and", dfa, At.validity(1))
    return At.minimized(At.normalize_leading_zeros(out))


# Column definitions, per array, in the query language.  {c1} is the name
# of the guessed first-column automaton.
_PRELUDE: dict[str, list[tuple[str, str]]] = {
    "wythoff": [
        ("fw", "?msd_fib Ey $phin(n+1,y) & z+1=y"),
        ("w2", "?msd_fib Ex $w1(i,x) & $fw(x,z)"),
        ("w3", "?msd_fib Ex,y $w1(i,x) & $w2(i,y) & z=x+y"),
    ],
    "stolarsky": [
        ("s2", "?msd_fib En,y $s1(i,n) & $phin(2*n,y) & z=(y+1)/2"),
        ("s3", "?msd_fib Ex,y $s1(i,x) & $s2(i,y) & z=x+y"),
    ],
    "dual": [
        ("fd", "?msd_fib Ex $phin(n-1,x) & z=x+2"),
        ("d2", "?msd_fib Ex $d1(i,x) & $fd(x,z)"),
        ("d3", "?msd_fib Ex,y $d1(i,x) & $d2(i,y) & z=x+y"),
    ],
    "efc": [
        (
            "efc2",
            "?msd_fib (i=1&z=2)| (i>=2 & Ex,y,k,r $efc1(i,x) & $phin(x,y) & "
            "i=2*k+r & r<=1 & z=y+(1-r))",
        ),
        ("efc3", "?msd_fib Ex,y $efc1(i,x) & $efc2(i,y) & z=x+y"),
    ],
    "esc": [
        ("esc2", "?msd_fib Ex,y,r $esc1(i,x) & $phin(x,y) & i=r+2*(i/2) & z=y+r"),
        ("esc3", "?msd_fib Ex,y $esc1(i,x) & $esc2(i,y) & z=x+y"),
    ],
    "k100": [
        ("is1mod3", "?msd_fib (z=1 & Ek n=3*k+1)|(z=0 & ~Ek n=3*k+1)"),
        ("k1002", "?msd_fib Ex,y,r $k100(i,x) & $phin(x,y) & $is1mod3(i,r) & z=y+r"),
        ("k1003", "?msd_fib Ex,y $k100(i,x) & $k1002(i,y) & z=x+y"),
    ],
}

COLUMN_NAMES: dict[str, tuple[str, str, str]] = {
    "wythoff": ("w1", "w2", "w3"),
    "stolarsky": ("s1", "s2", "s3"),
    "dual": ("d1", "d2", "d3"),
    "efc": ("efc1", "efc2", "efc3"),
    "esc": ("esc1", "esc2", "esc3"),
    "k100": ("k100", "k1002", "k1003"),
}


def seven_step_verify(
    spec: ar.ArraySpec,
    registry: logic.Registry,
    samples: int | None = None,
    oracle_rows: int = 1000,
    desk_bound: int = 10**5,
) -> VerificationReport:
    report = VerificationReport(spec.name)
    c1, c2, c3 = COLUMN_NAMES[spec.name]
    count = samples or spec.sample_count

    # Step 1: first-column data from the exact generator.
    column = ar.first_column(spec, max(count, oracle_rows))
    report.steps.append(
        StepResult("data", True, f"{count} terms, complete from row 1")
    )

    # Step 2: guess a synchronized automaton (zero row included).
    sample_set = SampleSet.from_pairs(
        [(0, 0)] + [(i, column[i - 1]) for i in range(1, count + 1)]
    )
    try:
        guessed = guess_dfa(sample_set)
    except Exception as exc:  # inference failure halts the pipeline
        report.steps.append(StepResult("guess", False, str(exc)))
        return report
    registry.register(c1, guessed)
    report.state_counts["col1"] = guessed.useful_state_count()
    report.steps.append(
        StepResult("guess", True, f"{guessed.useful_state_count()} states")
    )

    # Step 3: the guess computes a function on every positive row.
    func_total = logic.eval_sentence(
        f"?msd_fib An (n>=1) => Ex ${c1}(n,x)", registry
    )
    func_unique = logic.eval_sentence(
        f"?msd_fib ~En,x,y n>=1 & x!=y & ${c1}(n,x) & ${c1}(n,y)", registry
    )
    report.steps.append(
        StepResult(
            "functionality",
            func_total and func_unique,
            f"total={func_total} unique={func_unique}",
        )
    )
    if not (func_total and func_unique):
        return report

    # Step 4: strictly increasing.
    increasing = logic.eval_sentence(
        f"?msd_fib An,x,y (n>=1 & ${c1}(n,x) & ${c1}(n+1,y)) => x<y", registry
    )
    report.steps.append(StepResult("monotonicity", increasing, ""))
    if not increasing:
        return report

    # Step 5: columns two and three from the array's rule, then compare all
    # three column automata against the generator.
    for name, formula in _PRELUDE[spec.name]:
        logic.define(registry, name, formula)
    report.state_counts["col2"] = registry.get(c2).useful_state_count()
    report.state_counts["col3"] = registry.get(c3).useful_state_count()
    idx = np.arange(1, oracle_rows + 1, dtype=np.int64)
    col1_vals = np.array(column[:oracle_rows], dtype=np.int64)
    table = ar.generate(spec, oracle_rows, 3)
    col2_vals = np.array([row[1] for row in table], dtype=np.int64)
    col3_vals = np.array([row[2] for row in table], dtype=np.int64)
    agree = (
        bool(accepts_pairs(registry.get(c1), idx, col1_vals).all())
        and bool(accepts_pairs(registry.get(c2), idx, col2_vals).all())
        and bool(accepts_pairs(registry.get(c3), idx, col3_vals).all())
    )
    report.steps.append(
        StepResult(
            "columns-2-3",
            agree,
            f"{report.state_counts['col2']} and {report.state_counts['col3']} "
            f"states; generator agreement on {oracle_rows} rows",
        )
    )
    if not agree:
        return report

    # Step 6: values of columns >= 3 are the digit-shift images of column
    # three; united with column two this is the set S of all later-column
    # values.  Columns >= 2 of every row are already covered because the
    # second column satisfies the same shift law one step earlier or is
    # included directly.
    col3_set = logic.compile_formula(
        f"?msd_fib Ei i>=1 & ${c3}(i,n)", registry
    ).relabel(None)
    all_zeros = regex_to_dfa("0*", 1)
    shifted = At.concat_languages(col3_set, all_zeros)
    shifted = renumerate(shifted)
    col2_set = logic.compile_formula(
        f"?msd_fib Ei i>=1 & ${c2}(i,n)", registry
    ).relabel(None)
    s_set = At.minimized(At.boolean_combine("or", col2_set, shifted))
    s_name = f"{c1}_set"
    registry.register(s_name, s_set)
    report.state_counts["set"] = s_set.useful_state_count()
    # Desk-scale sanity: no first-column value may appear in S.
    s_values = set(At.enumerate_values(s_set, desk_bound))
    col1_all = _column_values_upto(spec, desk_bound)
    clash = sorted(s_values & set(col1_all))
    report.steps.append(
        StepResult(
            "set-S",
            not clash,
            f"no first-column value below {desk_bound} in S"
            if not clash
            else f"first-column values in S: {clash[:5]}",
        )
    )
    if clash:
        return report

    # Step 7: the mex induction.  If rows 1..i-1 are correct, the least
    # positive integer outside S and outside those rows' first entries is
    # row i's first entry.  The automaton set S covers all columns >= 2 of
    # all rows rather than just rows below i; that makes no difference,
    # because an equality between row i's first entry and a later-column
    # value of some row j >= i would contradict the array being strictly
    # increasing along rows and columns.
    chk = f"{c1}_chk"
    mex = f"{c1}_mex"
    logic.define(
        registry,
        chk,
        f"?msd_fib (~${s_name}(n)) & Aip,x (ip<i & ${c1}(ip,x)) => n!=x",
    )
    logic.define(
        registry,
        mex,
        f"?msd_fib ${chk}(i,x) & Ay (y>=1 & ${chk}(i,y)) => y>=x",
    )
    closed = logic.eval_sentence(
        f"?msd_fib Ai,x (i>=2 & ${mex}(i,x)) => ${c1}(i,x)", registry
    )
    report.steps.append(
        StepResult(
            "mex-induction",
            closed,
            "least unused positive integer matches the guessed column",
        )
    )
    return report


def _column_values_upto(spec: ar.ArraySpec, bound: int) -> list[int]:
    count = 64
    while True:
        col = ar.first_column(spec, count)
        if col[-1] > bound:
            return [v for v in col if v <= bound]
        count *= 2


# -- theorem suites ---------------------------------------------------------

_THEOREMS: dict[str, list[tuple[str, str]]] = {
    "wythoff": [
        (
            "closed_form_col1",
            "?msd_fib Ai,x,y (i>=1 & $w1(i,x) & $phi2n(i,y)) => x+1=y",
        ),
        (
            "closed_form_col2",
            "?msd_fib Ai,x,y (i>=1 & $w2(i,x) & $phin(i,y)) => x+1=2*y+i",
        ),
        (
            "morrison_definition",
            "?msd_fib An,z1,z2 (n>=1 & $morrison1(n,z1) & $morrison2(n,z2))"
            " => $fw(z1,z2)",
        ),
        (
            "morrison_sets",
            "?msd_fib An (n>=1) => ($mleft(n) <=> $mright(n))",
        ),
    ],
    "stolarsky": [
        (
            "closed_form_col1",
            "?msd_fib An,x (n>=1) => "
            "($s1(n,x) <=> Ey,z $phin(2*n-1,y) & z=y/2 & x=z+n)",
        ),
        (
            "closed_form_col2",
            "?msd_fib An,x (n>=1) => ($s2(n,x) <=> Ey $phin(2*n-1,y) & x=y+n)",
        ),
        (
            "column_difference",
            "?msd_fib An,x,y (n>=2 & $s1(n,x) & $s2(n,y)) "
            "=> Ei,a,b 1<=i & i<n & $s1(i,a) & $s2(i,b) & (y=x+a|y=x+b)",
        ),
        (
            "difference_in_col1_iff",
            "?msd_fib An (n>=1) => ((Ei,x,y,z $s1(n,x) & $s2(n,y) "
            "& $s1(i,z) & y=x+z) <=> (Ek,t $phin(2*k-1,t) & n=t/2+1))",
        ),
        (
            "classification_formula",
            "?msd_fib An (n>=1) => ($l3(n) <=> $sdelta(n,1))",
        ),
    ],
    "dual": [
        (
            "closed_form_col1",
            "?msd_fib Ai,x,y (i>=2 & $d1(i,x) & $phin(i-1,y)) => x=y+i+1",
        ),
        ("classification_zero", "?msd_fib Ai (i>=2) => $ddelta(i,0)"),
        (
            "kimberling_form",
            "?msd_fib Ai,x,y (i>=1 & $d1(i,x) & $d1_alt(i,y)) => x=y",
        ),
    ],
    "efc": [
        (
            "even_rows",
            "?msd_fib An,x,y (n>=1 & $efc1(2*n,x) & $phin(n,y)) => x=2*y+2*n",
        ),
        (
            "odd_rows",
            "?msd_fib An,x,y (n>=1 & $efc1(2*n+1,x) & $phin(n,y)) "
            "=> x=2*y+2*n+2",
        ),
    ],
    "esc": [
        ("even_second_column", "?msd_fib Ai,x (i>=1 & $esc2(i,x)) => Ek x=2*k"),
    ],
    "k100": [
        (
            "col3_mod3",
            "?msd_fib Ai,x (i>=1 & $k1003(i,x)) => ~Ek x=3*k+2",
        ),
    ],
}

_SUITE_DEFS: dict[str, list[tuple[str, str]]] = {
    "wythoff": [
        ("morrison1", "?msd_fib Ey $phin(n,y) & $phin(y,z)"),
        ("morrison2", "?msd_fib Ey $phin(n,y) & $phi2n(y,z)"),
        ("mleft", "?msd_fib Ei,x,y $w1(i,x) & $w2(i,y) & z+x=y"),
    ],
    "stolarsky": [
        ("l1", "?msd_fib Ex $phin(2*n-1,x) & z=(x+3)/2"),
        ("l2", "?msd_fib Ex $phin(2*n-1,x) & z=(x/2)+2"),
        ("l3", "?msd_fib Ex,y $l1(n,x) & $l2(n,y) & x=y"),
        ("sdelta", "?msd_fib Ex,y,t $s1(n,x) & $s2(n,y) & $phin(x,t) & z+t=y"),
    ],
    "dual": [
        ("ddelta", "?msd_fib Ex,y,t $d1(i,x) & $d2(i,y) & $phin(x,t) & z+t=y"),
        ("dcond", "?msd_fib Ek,x k>=1 & $phin(k,x) & i=x+k+1"),
        (
            "d1_alt",
            "?msd_fib ($dcond(i) & Ex $phin(i,x) & z=x+i) | "
            "(~$dcond(i) & Ex $phin(i,x) & z+1=x+i)",
        ),
    ],
}


def theorem_suite(
    array: str, registry: logic.Registry, report: VerificationReport
) -> dict[str, bool]:
    """Evaluate the published properties of a verified array."""
    if report.array != array or not report.fully_verified:
        raise RuntimeError(
            f"theorem suite for {array!r} requires a fully verified report"
        )
    for name, formula in _SUITE_DEFS.get(array, ()):
        logic.define(registry, name, formula)
    if array == "wythoff":
        _define_morrison_right(registry)
    results = {}
    for name, formula in _THEOREMS[array]:
        results[name] = logic.eval_sentence(formula, registry)
    report.theorems.update(results)
    return results


def _define_morrison_right(registry: logic.Registry) -> None:
    """Odd-column value set: column 1 united with even-shift images of
    column 3, i.e. {W[j][2k+1] : j >= 1, k >= 0}."""
    if "mright" in registry:
        return
    col3_set = logic.compile_formula(
        "?msd_fib Ei i>=1 & $w3(i,n)", registry
    ).relabel(None)
    even_zeros = regex_to_dfa("(00)*", 1)
    shifted = renumerate(At.concat_languages(col3_set, even_zeros))
    col1_set = logic.compile_formula(
        "?msd_fib Ej j>=1 & $w1(j,n)", registry
    ).relabel(None)
    registry.register(
        "mright", At.minimized(At.boolean_combine("or", col1_set, shifted))
    )


# -- classification sequences ------------------------------------------------


def classification_sequence(array: str, prefix: int) -> list[int]:
    """delta_i = A[i][2] - floor(alpha * A[i][1]) for 1 <= i <= prefix."""
    from stolarsky.zeckendorf import floor_alpha

    spec = ar.BUILTIN_ARRAYS[array]
    table = ar.generate(spec, prefix, 2)
    return [row[1] - floor_alpha(row[0]) for row in table]


def subword_complexity(seq, n: int) -> int:
    """Distinct length-n blocks in the given prefix of a sequence."""
    if len(seq) < 4096:
        raise ValueError("prefix too short for a meaningful block count")
    if n < 1 or n > len(seq):
        raise ValueError("block length out of range")
    blocks = {tuple(seq[i : i + n]) for i in range(len(seq) - n + 1)}
    return len(blocks)
