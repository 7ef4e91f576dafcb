"""Complete DFAs over k-track binary tuple alphabets.

A k-track automaton reads tuples from {0,1}^k, msd first, and is the
universal representation for sets, relations, and synchronized functions in
Zeckendorf numeration.  Symbols are packed into integers: track j
contributes bit (symbol >> (k-1-j)) & 1, so track 0 is the most significant
bit and the serialized bitstring reads in track order.

Invariants kept throughout the package:

* automata are complete (the transition function is total; a rejecting sink
  is materialized, never implied);
* `minimized` produces the canonical minimal form with states numbered in
  breadth-first order from the initial state, so equal languages serialize
  identically;
* persisted relation automata are additionally leading-zero normalized:
  a word is accepted iff every variant with extra all-zero tuples prepended
  is accepted.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from stolarsky import zeckendorf

__all__ = [
    "CompositionError",
    "Dfa",
    "Nfa",
    "boolean_combine",
    "complement",
    "concat_languages",
    "determinize",
    "enumerate_accepted",
    "enumerate_values",
    "equivalent",
    "expand_tracks",
    "normalize_leading_zeros",
    "project",
    "same_language",
    "tuple_symbols",
    "validity",
]


class CompositionError(ValueError):
    """Operands with incompatible track arity or labels."""


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton over the alphabet {0,1}^tracks.

    `delta[state][symbol]` gives the successor; `labels`, when present,
    names the tracks (the formula compiler keeps them sorted).
    """

    tracks: int
    delta: tuple[tuple[int, ...], ...]
    finals: frozenset[int]
    initial: int = 0
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.labels is not None and len(self.labels) != self.tracks:
            raise CompositionError("label count differs from track count")

    @property
    def n_states(self) -> int:
        return len(self.delta)

    @property
    def n_symbols(self) -> int:
        return 1 << self.tracks

    def accepts(self, word) -> bool:
        """Run the automaton on a sequence of packed symbols."""
        state = self.initial
        row = self.delta
        for sym in word:
            state = row[state][sym]
        return state in self.finals

    def accepts_values(self, *values: int) -> bool:
        """Numeric membership: encode the tuple, pad to a common length, run."""
        if len(values) != self.tracks:
            raise CompositionError(
                f"{len(values)} values for a {self.tracks}-track automaton"
            )
        return self.accepts(tuple_symbols(values))

    def state_count(self) -> int:
        return len(self.delta)

    def useful_state_count(self) -> int:
        """States excluding the rejecting sink, the convention used when
        comparing against published automaton sizes."""
        return len(self.delta) - (1 if self.dead_state() is not None else 0)

    def dead_state(self) -> int | None:
        for s, row in enumerate(self.delta):
            if s not in self.finals and all(t == s for t in row):
                return s
        return None

    def relabel(self, labels: tuple[str, ...] | None) -> "Dfa":
        return Dfa(self.tracks, self.delta, self.finals, self.initial, labels)

    # -- serialization ----------------------------------------------------

    def to_text(self) -> str:
        lines = [
            f"tracks {self.tracks}",
            f"states {self.n_states}",
            f"initial {self.initial}",
            "final " + " ".join(str(s) for s in sorted(self.finals)),
        ]
        for s in range(self.n_states):
            for a in range(self.n_symbols):
                bits = format(a, f"0{self.tracks}b") if self.tracks else "-"
                lines.append(f"t {s} {bits} {self.delta[s][a]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Dfa":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) < 4:
            raise ValueError("truncated automaton text")
        tracks = int(lines[0].split()[1])
        n = int(lines[1].split()[1])
        initial = int(lines[2].split()[1])
        finals = frozenset(int(tok) for tok in lines[3].split()[1:])
        m = 1 << tracks
        delta = [[0] * m for _ in range(n)]
        seen = 0
        for ln in lines[4:]:
            parts = ln.split()
            if parts[0] != "t":
                raise ValueError(f"unexpected line: {ln!r}")
            s = int(parts[1])
            sym = 0 if parts[2] == "-" else int(parts[2], 2)
            delta[s][sym] = int(parts[3])
            seen += 1
        if seen != n * m:
            raise ValueError("transition table incomplete")
        return cls(tracks, tuple(tuple(row) for row in delta), finals, initial)

    def to_dot(self, name: str = "dfa") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;", '  start [shape=none,label=""];']
        for s in range(self.n_states):
            shape = "doublecircle" if s in self.finals else "circle"
            lines.append(f"  {s} [shape={shape}];")
        lines.append(f"  start -> {self.initial};")
        grouped: dict[tuple[int, int], list[str]] = {}
        for s in range(self.n_states):
            for a in range(self.n_symbols):
                bits = format(a, f"0{self.tracks}b") if self.tracks else "-"
                grouped.setdefault((s, self.delta[s][a]), []).append(bits)
        for (s, t), syms in sorted(grouped.items()):
            label = ",".join(syms)
            lines.append(f'  {s} -> {t} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass
class Nfa:
    """Nondeterministic intermediate for projection, concatenation, regexes.

    Never persisted; `determinize` is the only consumer.
    """

    tracks: int
    transitions: list[dict[int, set[int]]] = field(default_factory=list)
    epsilon: list[set[int]] = field(default_factory=list)
    initials: set[int] = field(default_factory=set)
    finals: set[int] = field(default_factory=set)

    def add_state(self) -> int:
        self.transitions.append({})
        self.epsilon.append(set())
        return len(self.transitions) - 1

    def add_edge(self, src: int, sym: int, dst: int) -> None:
        self.transitions[src].setdefault(sym, set()).add(dst)

    def closure(self, states) -> frozenset[int]:
        seen = set(states)
        stack = list(states)
        while stack:
            s = stack.pop()
            for t in self.epsilon[s]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)


def validity(k: int, labels: tuple[str, ...] | None = None) -> Dfa:
    """Automaton accepting tuple words whose tracks each avoid adjacent 1s."""
    dfa = _validity_cached(k)
    return dfa.relabel(labels) if labels is not None else dfa


def _validity_cached(k: int, _cache: dict = {}) -> Dfa:
    dfa = _cache.get(k)
    if dfa is None:
        if k == 0:
            dfa = Dfa(0, ((0,),), frozenset({0}))
        else:
            m = 1 << k
            dead = m  # states are last-digit masks plus a rejecting sink
            delta = [
                tuple(dead if mask & sym else sym for sym in range(m))
                for mask in range(m)
            ]
            delta.append(tuple(dead for _ in range(m)))
            dfa = minimized(Dfa(k, tuple(delta), frozenset(range(m)), 0))
        _cache[k] = dfa
    return dfa


def tuple_symbols(values: tuple[int, ...] | list[int]) -> list[int]:
    """Packed symbol word for a tuple of naturals, padded to a common length."""
    words = [zeckendorf.encode(v) for v in values]
    width = max((len(w) for w in words), default=0)
    padded = [w.rjust(width, "0") for w in words]
    k = len(values)
    out = []
    for pos in range(width):
        sym = 0
        for j in range(k):
            sym = (sym << 1) | (padded[j][pos] == "1")
        out.append(sym)
    return out


# -- determinization and minimization -------------------------------------


def determinize(nfa: Nfa) -> Dfa:
    """Subset construction; the empty subset becomes the rejecting sink."""
    m = 1 << nfa.tracks
    start = nfa.closure(nfa.initials)
    index: dict[frozenset[int], int] = {start: 0}
    order = [start]
    delta: list[list[int]] = []
    i = 0
    while i < len(order):
        subset = order[i]
        row = []
        for a in range(m):
            targets: set[int] = set()
            for s in subset:
                targets |= nfa.transitions[s].get(a, _EMPTY_SET)
            nxt = nfa.closure(targets) if targets else _EMPTY_FROZEN
            j = index.get(nxt)
            if j is None:
                j = len(order)
                index[nxt] = j
                order.append(nxt)
            row.append(j)
        delta.append(row)
        i += 1
    finals = frozenset(
        i for i, subset in enumerate(order) if subset & nfa.finals
    )
    dfa = Dfa(nfa.tracks, tuple(tuple(r) for r in delta), finals, 0)
    return minimized(dfa)


_EMPTY_SET: set[int] = set()
_EMPTY_FROZEN: frozenset[int] = frozenset()


def _reachable(dfa: Dfa) -> Dfa:
    seen = {dfa.initial: 0}
    order = [dfa.initial]
    i = 0
    while i < len(order):
        for t in dfa.delta[order[i]]:
            if t not in seen:
                seen[t] = len(order)
                order.append(t)
        i += 1
    if len(order) == dfa.n_states and order == list(range(dfa.n_states)):
        return dfa
    delta = tuple(
        tuple(seen[t] for t in dfa.delta[s]) for s in order
    )
    finals = frozenset(seen[s] for s in dfa.finals if s in seen)
    return Dfa(dfa.tracks, delta, finals, 0, dfa.labels)


def _partition(dfa: Dfa) -> list[int]:
    """Hopcroft refinement; returns a block id per state.

    Stale splitters in the worklist are unions of current blocks, which is
    still a sound refinement step, so snapshots are safe.
    """
    n = dfa.n_states
    m = dfa.n_symbols
    inv: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(m)]
    for s in range(n):
        row = dfa.delta[s]
        for a in range(m):
            inv[a][row[a]].append(s)
    finals = set(dfa.finals)
    nonfinals = set(range(n)) - finals
    block_of = [0] * n
    blocks: dict[int, set[int]] = {}
    next_id = 0
    for group in (finals, nonfinals):
        if group:
            blocks[next_id] = set(group)
            for s in group:
                block_of[s] = next_id
            next_id += 1
    work: deque[frozenset[int]] = deque(frozenset(b) for b in blocks.values())
    while work:
        splitter = work.popleft()
        for a in range(m):
            preimage: set[int] = set()
            for t in splitter:
                preimage.update(inv[a][t])
            if not preimage:
                continue
            touched: dict[int, set[int]] = {}
            for s in preimage:
                touched.setdefault(block_of[s], set()).add(s)
            for b, inter in touched.items():
                block = blocks[b]
                if len(inter) == len(block):
                    continue
                rest = block - inter
                blocks[b] = rest
                blocks[next_id] = inter
                for s in inter:
                    block_of[s] = next_id
                next_id += 1
                work.append(frozenset(inter if len(inter) <= len(rest) else rest))
    return block_of


def minimized(dfa: Dfa) -> Dfa:
    """Canonical minimal complete DFA, states in BFS order from the initial."""
    dfa = _reachable(dfa)
    block_of = _partition(dfa)
    # Quotient, then renumber blocks in BFS discovery order.
    start_block = block_of[dfa.initial]
    renum = {start_block: 0}
    order = [start_block]
    rep = {}
    for s in range(dfa.n_states):
        rep.setdefault(block_of[s], s)
    i = 0
    while i < len(order):
        src = rep[order[i]]
        for t in dfa.delta[src]:
            b = block_of[t]
            if b not in renum:
                renum[b] = len(order)
                order.append(b)
        i += 1
    delta = tuple(
        tuple(renum[block_of[t]] for t in dfa.delta[rep[b]]) for b in order
    )
    finals = frozenset(
        renum[block_of[s]] for s in dfa.finals if block_of[s] in renum
    )
    return Dfa(dfa.tracks, delta, finals, 0, dfa.labels)


# -- boolean algebra -------------------------------------------------------

_FINAL_RULES = {
    "and": lambda fa, fb: fa and fb,
    "or": lambda fa, fb: fa or fb,
    "xor": lambda fa, fb: fa != fb,
    "minus": lambda fa, fb: fa and not fb,
}


def _aligned(a: Dfa, b: Dfa) -> tuple[Dfa, Dfa, tuple[str, ...] | None]:
    if a.labels is not None and b.labels is not None:
        if a.labels == b.labels:
            return a, b, a.labels
        union = tuple(sorted(set(a.labels) | set(b.labels)))
        return expand_tracks(a, union), expand_tracks(b, union), union
    if a.tracks != b.tracks:
        raise CompositionError(
            f"track arity mismatch: {a.tracks} vs {b.tracks}"
        )
    return a, b, a.labels if a.labels is not None else b.labels


def expand_tracks(a: Dfa, labels: tuple[str, ...]) -> Dfa:
    """Embed `a` into a larger labeled track space (cylindrification)."""
    if a.labels is None:
        raise CompositionError("expand_tracks requires labeled tracks")
    if not set(a.labels) <= set(labels):
        raise CompositionError(f"labels {a.labels} not contained in {labels}")
    k = len(labels)
    positions = [labels.index(lbl) for lbl in a.labels]
    symbol_map = []
    for sym in range(1 << k):
        old = 0
        for pos in positions:
            old = (old << 1) | ((sym >> (k - 1 - pos)) & 1)
        symbol_map.append(old)
    delta = tuple(
        tuple(row[symbol_map[sym]] for sym in range(1 << k)) for row in a.delta
    )
    return Dfa(k, delta, a.finals, a.initial, labels)


def _product(a: Dfa, b: Dfa, rule, labels) -> Dfa:
    m = a.n_symbols
    index = {(a.initial, b.initial): 0}
    order = [(a.initial, b.initial)]
    delta: list[tuple[int, ...]] = []
    finals = set()
    i = 0
    while i < len(order):
        sa, sb = order[i]
        if rule(sa in a.finals, sb in b.finals):
            finals.add(i)
        row = []
        ra, rb = a.delta[sa], b.delta[sb]
        for sym in range(m):
            key = (ra[sym], rb[sym])
            j = index.get(key)
            if j is None:
                j = len(order)
                index[key] = j
                order.append(key)
            row.append(j)
        delta.append(tuple(row))
        i += 1
    return Dfa(a.tracks, tuple(delta), frozenset(finals), 0, labels)


def boolean_combine(op: str, a: Dfa, b: Dfa) -> Dfa:
    """Set operation on (padded-word) languages; result is minimized."""
    try:
        rule = _FINAL_RULES[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    a, b, labels = _aligned(a, b)
    return minimized(_product(a, b, rule, labels))


def complement(a: Dfa) -> Dfa:
    """Accept exactly the words `a` rejects.  Callers re-intersect with
    validity when the result must stay a relation over numbers."""
    finals = frozenset(s for s in range(a.n_states) if s not in a.finals)
    return minimized(Dfa(a.tracks, a.delta, finals, a.initial, a.labels))


def same_language(a: Dfa, b: Dfa) -> bool:
    """Word-level language equality via canonical minimal forms."""
    if a.tracks != b.tracks:
        raise CompositionError("track arity mismatch")
    ca, cb = minimized(a), minimized(b)
    return ca.delta == cb.delta and ca.finals == cb.finals


def equivalent(a: Dfa, b: Dfa) -> bool:
    """Equality of padded-word languages (leading zeros quotiented out)."""
    return same_language(normalize_leading_zeros(a), normalize_leading_zeros(b))


# -- leading-zero normalization and projection -----------------------------


def normalize_leading_zeros(a: Dfa) -> Dfa:
    """Close the language under adding and removing leading all-zero tuples."""
    # Strip closure: accept w whenever some 0^j w is accepted.  The initial
    # state set is the zero-symbol chain from the original initial state.
    chain = []
    seen = set()
    s = a.initial
    while s not in seen:
        seen.add(s)
        chain.append(s)
        s = a.delta[s][0]
    nfa = Nfa(a.tracks)
    for st in range(a.n_states):
        nfa.add_state()
        for sym, t in enumerate(a.delta[st]):
            nfa.add_edge(st, sym, t)
    nfa.initials = set(chain)
    nfa.finals = set(a.finals)
    stripped = determinize(nfa)
    # Pad closure: accept 0^j w for every accepted w.  A sticky new initial
    # state loops on the zero symbol and otherwise acts like the old initial.
    nfa2 = Nfa(stripped.tracks)
    for st in range(stripped.n_states):
        nfa2.add_state()
        for sym, t in enumerate(stripped.delta[st]):
            nfa2.add_edge(st, sym, t)
    fresh = nfa2.add_state()
    nfa2.add_edge(fresh, 0, fresh)
    for sym, t in enumerate(stripped.delta[stripped.initial]):
        nfa2.add_edge(fresh, sym, t)
    nfa2.initials = {fresh}
    nfa2.finals = set(stripped.finals) | (
        {fresh} if stripped.initial in stripped.finals else set()
    )
    out = determinize(nfa2)
    return out.relabel(a.labels)


def project(a: Dfa, track, *, normalize: bool = True) -> Dfa:
    """Existentially quantify one track away.

    `track` is an index or, when the automaton is labeled, a label.  Extra
    leading zeros on the kept tracks are absorbed before determinizing, which
    handles assignments of the removed track that are longer than the kept
    words.
    """
    if a.tracks < 1:
        raise CompositionError("nothing to project")
    if isinstance(track, str):
        if a.labels is None or track not in a.labels:
            return a  # quantifying a variable with no track is a no-op
        idx = a.labels.index(track)
    else:
        idx = track
        if not 0 <= idx < a.tracks:
            raise CompositionError(f"track index {idx} out of range")
    k = a.tracks
    nfa = Nfa(k - 1)
    for st in range(a.n_states):
        nfa.add_state()
    for st in range(a.n_states):
        for sym, t in enumerate(a.delta[st]):
            bit_pos = k - 1 - idx
            high = sym >> (bit_pos + 1)
            low = sym & ((1 << bit_pos) - 1)
            reduced = (high << bit_pos) | low
            nfa.add_edge(st, reduced, t)
    # Kept tracks may need extra leading zeros: any state reachable from the
    # initial by symbols that are zero on every kept track is also initial.
    zero_like = [
        sym for sym in range(1 << k)
        if sym & ~(1 << (k - 1 - idx)) == 0
    ]
    initials = {a.initial}
    stack = [a.initial]
    while stack:
        s = stack.pop()
        for sym in zero_like:
            t = a.delta[s][sym]
            if t not in initials:
                initials.add(t)
                stack.append(t)
    nfa.initials = initials
    nfa.finals = set(a.finals)
    labels = None
    if a.labels is not None:
        labels = tuple(lbl for i, lbl in enumerate(a.labels) if i != idx)
    out = determinize(nfa)
    if normalize:
        out = normalize_leading_zeros(out)
    return out.relabel(labels)


def concat_languages(a: Dfa, b: Dfa) -> Dfa:
    """Word-level concatenation {uv : u in L(a), v in L(b)}, minimized.

    The result can denote non-canonical numeric words; numeric consumers
    apply renumeration (validity + zero normalization) afterwards.
    """
    if a.tracks != b.tracks:
        raise CompositionError("track arity mismatch")
    nfa = Nfa(a.tracks)
    for st in range(a.n_states):
        nfa.add_state()
    offset = a.n_states
    for st in range(b.n_states):
        nfa.add_state()
    for st in range(a.n_states):
        for sym, t in enumerate(a.delta[st]):
            nfa.add_edge(st, sym, t)
    for st in range(b.n_states):
        for sym, t in enumerate(b.delta[st]):
            nfa.add_edge(offset + st, sym, offset + t)
    for st in a.finals:
        nfa.epsilon[st].add(offset + b.initial)
    nfa.initials = {a.initial}
    nfa.finals = {offset + s for s in b.finals}
    return determinize(nfa)


# -- enumeration -----------------------------------------------------------


def _co_reachable(dfa: Dfa) -> set[int]:
    rev: dict[int, set[int]] = {s: set() for s in range(dfa.n_states)}
    for s in range(dfa.n_states):
        for t in dfa.delta[s]:
            rev[t].add(s)
    seen = set(dfa.finals)
    stack = list(dfa.finals)
    while stack:
        s = stack.pop()
        for p in rev[s]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def enumerate_accepted(dfa: Dfa, max_length: int):
    """All accepted words of length <= max_length, length-then-lex order."""
    live = _co_reachable(dfa)
    out: list[tuple[int, ...]] = []

    # Group by length to honor the ordering contract without sorting.
    for length in range(max_length + 1):
        def exact(state: int, prefix: list[int], left: int) -> None:
            if left == 0:
                if state in dfa.finals:
                    out.append(tuple(prefix))
                return
            for sym in range(dfa.n_symbols):
                nxt = dfa.delta[state][sym]
                if nxt in live:
                    prefix.append(sym)
                    exact(nxt, prefix, left - 1)
                    prefix.pop()

        exact(dfa.initial, [], length)
    return out


def enumerate_values(dfa: Dfa, bound: int) -> list[int]:
    """Sorted values <= bound accepted by a 1-track automaton.

    Walks canonical words only (first digit 1); the value of a word grows
    under every extension, so branches prune as soon as the shift value
    exceeds the bound.
    """
    if dfa.tracks != 1:
        raise CompositionError("value enumeration needs a 1-track automaton")
    live = _co_reachable(dfa)
    found: list[int] = []
    if dfa.initial in dfa.finals:
        found.append(0)

    def walk(state: int, value: int, shifted: int) -> None:
        # value = [w], shifted = [w0]; appending d gives ([w0]+d, [w00]+2d).
        if state in dfa.finals and value <= bound:
            found.append(value)
        if shifted > bound:
            return
        for bit in (0, 1):
            nxt = dfa.delta[state][bit]
            if nxt in live:
                walk(nxt, shifted + bit, value + shifted + 2 * bit)

    start = dfa.delta[dfa.initial][1]
    if start in live:
        walk(start, 1, 2)
    return sorted(set(found))
