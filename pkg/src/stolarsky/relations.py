"""Bootstrap relations and their certification chain.

Nothing here is trusted by transcription.  The comparison automaton is a
direct lexicographic construction checked exhaustively against integer
order; the successor and the adder are inferred from data and then pinned
down by first-order properties decided on the automata themselves; the
digit-shift relation comes from a regular expression and is checked against
the decoder; the golden-floor relation is built from the trailing-zero
parity rule and swept against the exact oracle.  The chain order is
validity -> less-than -> successor -> adder -> shift/floor-alpha ->
floor-alpha-squared, and a relation is only usable once every check in its
certificate has passed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from stolarsky import automata as At
from stolarsky import logic
from stolarsky import zeckendorf
from stolarsky.automata import Dfa
from stolarsky.bulk import accepts_pairs
from stolarsky.inference import learn_synchronized
from stolarsky.regex import regex_to_dfa

__all__ = [
    "BaseRelations",
    "CertificationError",
    "CertifiedRelation",
    "CheckResult",
    "DEFAULT_LIMITS",
    "build_adder",
    "build_base_relations",
    "build_less_than",
    "build_phi2n",
    "build_phin",
    "build_shift",
    "build_successor",
    "build_validity",
    "standard_registry",
]

SHIFT_PATTERN = "([0,0]|[0,1][1,1]*[1,0])*"

DEFAULT_LIMITS = {
    "less_than": 3000,
    "successor_samples": 2000,
    "adder_samples": 300,
    "shift": 10**4,
    "phin": 10**6,
    "phi2n": 10**4,
}


class CertificationError(RuntimeError):
    def __init__(self, relation: str, check: str, detail: str = ""):
        msg = f"certification of {relation!r} failed at {check!r}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CertifiedRelation:
    name: str
    automaton: Dfa
    certificate: tuple[CheckResult, ...]


def _certify(name: str, dfa: Dfa, checks: list[tuple[str, bool, str]]) -> CertifiedRelation:
    results = []
    for check, passed, detail in checks:
        results.append(CheckResult(check, passed, detail))
        if not passed:
            raise CertificationError(name, check, detail)
    return CertifiedRelation(name, dfa, tuple(results))


def build_validity(k: int) -> Dfa:
    return At.validity(k)


def build_less_than(limit: int = DEFAULT_LIMITS["less_than"]) -> CertifiedRelation:
    """{(x, y) : x < y} as strict lexicographic comparison of padded words."""
    # States: 0 equal-so-far, 1 first difference was x<y, 2 first was x>y.
    lex = Dfa(
        2,
        ((0, 1, 2, 0), (1, 1, 1, 1), (2, 2, 2, 2)),
        frozenset({1}),
        0,
    )
    dfa = At.boolean_combine("and", lex, At.validity(2))
    dfa = At.minimized(At.normalize_leading_zeros(dfa))
    values = np.arange(limit + 1, dtype=np.int64)
    xs = np.repeat(values, limit + 1)
    ys = np.tile(values, limit + 1)
    got = accepts_pairs(dfa, xs, ys)
    want = xs < ys
    agree = bool((got == want).all())
    detail = f"all ordered pairs up to {limit}"
    if not agree:
        bad = int(np.argmin(got == want))
        detail = f"disagrees at ({int(xs[bad])}, {int(ys[bad])})"
    return _certify("lt", dfa, [("integer-order agreement", agree, detail)])


def _eval(registry: logic.Registry, formula: str) -> bool:
    return logic.eval_sentence(logic.parse(formula), registry)


def build_successor(
    lt: CertifiedRelation, sample_limit: int = DEFAULT_LIMITS["successor_samples"]
) -> CertifiedRelation:
    """m = n + 1, inferred from samples and pinned down by order properties."""
    guess = learn_synchronized(
        [(n, n + 1) for n in range(sample_limit)], 2
    )
    reg = logic.Registry()
    reg.install_base("lt", lt.automaton)
    reg.install_base("succ", guess)
    checks = [
        (
            "totality and functionality",
            _eval(reg, "An Em $succ(n,m)")
            and _eval(reg, "~En,m,p m!=p & $succ(n,m) & $succ(n,p)"),
            "for every n exactly one m",
        ),
        (
            "successor is larger",
            _eval(reg, "An,m $succ(n,m) => n<m"),
            "",
        ),
        (
            "nothing in between",
            _eval(reg, "~En,m,k $succ(n,m) & n<k & k<m"),
            "",
        ),
        ("base case", _eval(reg, "$succ(0,1)"), "succ(0) = 1"),
    ]
    return _certify("succ", guess, checks)


def build_adder(
    succ: CertifiedRelation,
    lt: CertifiedRelation,
    sample_limit: int = DEFAULT_LIMITS["adder_samples"],
) -> CertifiedRelation:
    """z = x + y, inferred from samples and certified by induction laws.

    Identity, totality/functionality, and compatibility with the certified
    successor force the relation to be addition for every y by induction;
    commutativity is a redundant safeguard.
    """
    samples = [
        (x, y, x + y)
        for x in range(sample_limit + 1)
        for y in range(sample_limit + 1)
    ]
    guess = learn_synchronized(samples, 3)
    reg = logic.Registry()
    reg.install_base("lt", lt.automaton)
    reg.install_base("succ", succ.automaton)
    reg.install_base("add", guess)
    checks = [
        (
            "totality and functionality",
            _eval(reg, "Ax,y Ez $add(x,y,z)")
            and _eval(reg, "~Ex,y,z,t z!=t & $add(x,y,z) & $add(x,y,t)"),
            "for every x, y exactly one z",
        ),
        ("identity", _eval(reg, "Ax $add(x,0,x)"), "x + 0 = x"),
        (
            "successor compatibility",
            _eval(
                reg,
                "Ax,y,z,u,v ($add(x,y,z) & $succ(y,u) & $succ(z,v)) => $add(x,u,v)",
            ),
            "x + (y+1) = (x+y) + 1",
        ),
        (
            "commutativity",
            _eval(reg, "Ax,y,z $add(x,y,z) <=> $add(y,x,z)"),
            "",
        ),
    ]
    return _certify("add", guess, checks)


def build_shift(limit: int = DEFAULT_LIMITS["shift"]) -> CertifiedRelation:
    """{(x, y) : the digits of y are the digits of x followed by 0}."""
    dfa = At.normalize_leading_zeros(regex_to_dfa(SHIFT_PATTERN, 2))
    xs = np.arange(limit + 1, dtype=np.int64)
    ys = np.array(
        [zeckendorf.decode(zeckendorf.encode(x) + "0") for x in range(limit + 1)],
        dtype=np.int64,
    )
    ok = bool(accepts_pairs(dfa, xs, ys).all())
    wrong = bool(accepts_pairs(dfa, xs[1:], ys[1:] + 1).any())
    checks = [
        ("decoder agreement", ok, f"shift values up to {limit}"),
        ("no off-by-one acceptance", not wrong, ""),
    ]
    return _certify("shift", dfa, checks)


def build_phin(
    shift: CertifiedRelation,
    succ: CertifiedRelation,
    add: CertifiedRelation,
    lt: CertifiedRelation,
    limit: int = DEFAULT_LIMITS["phin"],
) -> CertifiedRelation:
    """{(n, x) : x = floor(alpha n)} from the trailing-zero parity rule.

    x equals the shifted value, minus one exactly when the canonical word
    of n ends in an even number of zeros (including none); the correction
    automaton is the regular set of words ending in 1(00)*.
    """
    even_trail = At.boolean_combine(
        "and", regex_to_dfa("(0|1)*1(00)*", 1), At.validity(1)
    )
    even_trail = At.minimized(At.normalize_leading_zeros(even_trail))
    reg = logic.Registry()
    reg.install_base("lt", lt.automaton)
    reg.install_base("succ", succ.automaton)
    reg.install_base("add", add.automaton)
    reg.install_base("shift", shift.automaton)
    reg.install_base("evt", even_trail)
    dfa = logic.compile_formula(
        logic.parse(
            "Ey $shift(n,y) & (($succ(x,y) & $evt(n)) | (x=y & ~$evt(n)))"
        ),
        reg,
    ).relabel(None)
    reg.install_base("phin", dfa)
    fo_ok = (
        _eval(reg, "An Ex $phin(n,x)")
        and _eval(reg, "~En,x,y x!=y & $phin(n,x) & $phin(n,y)")
    )
    increasing = _eval(reg, "An,m,x,y ($phin(n,x) & $phin(m,y) & n<m) => x<y")
    ns = np.arange(limit + 1, dtype=np.int64)
    oracle = np.empty(limit + 1, dtype=np.int64)
    value = 0
    oracle[0] = 0
    for n in range(1, limit + 1):
        # floor(alpha n) grows by 1 or 2; the exact test picks which.
        step2 = 2 * (value + 2) - n
        if step2 <= 0 or step2 * step2 <= 5 * n * n:
            value += 2
        else:
            value += 1
        oracle[n] = value
    sweep = bool(accepts_pairs(dfa, ns, oracle).all())
    checks = [
        ("totality and functionality", fo_ok, "for every n exactly one x"),
        ("strictly increasing", increasing, ""),
        ("oracle agreement", sweep, f"floor(alpha n) for all n <= {limit}"),
    ]
    return _certify("phin", dfa, checks)


def build_phi2n(
    phin: CertifiedRelation,
    add: CertifiedRelation,
    lt: CertifiedRelation,
    limit: int = DEFAULT_LIMITS["phi2n"],
) -> CertifiedRelation:
    """{(n, x) : x = floor(alpha^2 n)} via alpha^2 = alpha + 1."""
    reg = logic.Registry()
    reg.install_base("lt", lt.automaton)
    reg.install_base("add", add.automaton)
    reg.install_base("phin", phin.automaton)
    dfa = logic.compile_formula(
        logic.parse("Ey $phin(n,y) & x=n+y"), reg
    ).relabel(None)
    ns = np.arange(limit + 1, dtype=np.int64)
    expect = np.array(
        [zeckendorf.floor_alpha_sq(n) for n in range(limit + 1)], dtype=np.int64
    )
    sweep = bool(accepts_pairs(dfa, ns, expect).all())
    checks = [("oracle agreement", sweep, f"floor(alpha^2 n) for n <= {limit}")]
    return _certify("phi2n", dfa, checks)


@dataclass(frozen=True)
class BaseRelations:
    lt: CertifiedRelation
    succ: CertifiedRelation
    add: CertifiedRelation
    shift: CertifiedRelation
    phin: CertifiedRelation
    phi2n: CertifiedRelation

    def all(self) -> tuple[CertifiedRelation, ...]:
        return (self.lt, self.succ, self.add, self.shift, self.phin, self.phi2n)


def build_base_relations(limits: dict | None = None) -> BaseRelations:
    """Run the whole certification chain in dependency order."""
    cfg = dict(DEFAULT_LIMITS)
    if limits:
        cfg.update(limits)
    lt = build_less_than(cfg["less_than"])
    succ = build_successor(lt, cfg["successor_samples"])
    add = build_adder(succ, lt, cfg["adder_samples"])
    shift = build_shift(cfg["shift"])
    phin = build_phin(shift, succ, add, lt, cfg["phin"])
    phi2n = build_phi2n(phin, add, lt, cfg["phi2n"])
    return BaseRelations(lt, succ, add, shift, phin, phi2n)


def standard_registry(base: BaseRelations) -> logic.Registry:
    """Registry with the reserved base-relation names installed."""
    reg = logic.Registry()
    for rel in base.all():
        reg.install_base(rel.name, rel.automaton)
    for k in (1, 2, 3):
        reg.install_base(f"valid_{k}", At.validity(k))
    return reg
