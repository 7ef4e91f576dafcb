"""Guess a synchronized-function automaton from finite samples.

The guesser is a blue-fringe state-merging learner over the prefix tree of
padded sample words.  Negative evidence is implicit and numeric: any word
whose input tracks decode to a sampled input value must carry exactly the
sampled output, whatever the leading-zero padding; near-miss outputs are
additionally materialized as explicit rejected paths so that merges have
hard evidence to collide with.  Merges fold subtrees with an undo trail, so
a label conflict anywhere in the folded residuals rejects the merge.

Guesses are only guaranteed sound on the data (every sampled pair accepted
with 0..max_pad leading-zero paddings, every contradicting output
rejected); rigorous correctness is established later by the verification
pipeline.  Identical samples always produce the bit-identical automaton:
training runs on deterministic value-bounded stages of the sample list and
returns the first machine consistent with the whole sample set.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from stolarsky import zeckendorf
from stolarsky.automata import (
    Dfa,
    boolean_combine,
    minimized,
    normalize_leading_zeros,
    validity,
)
from stolarsky.bulk import batch_accepts, completion_counts

__all__ = ["InferenceError", "SampleSet", "guess_dfa", "learn_synchronized"]


class InferenceError(RuntimeError):
    """No consistent machine found within the configured state budget."""


class _StageInsufficient(Exception):
    """A sample outside the training stage is rejected; grow the stage."""


@dataclass(frozen=True)
class SampleSet:
    """Sampled values of a sequence: pairs (i, value) with distinct i."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen: dict[int, int] = {}
        for i, v in self.pairs:
            if i in seen and seen[i] != v:
                raise ValueError(f"inconsistent samples at index {i}")
            seen[i] = v

    @property
    def complete_upto(self) -> int:
        present = {i for i, _ in self.pairs}
        n = 0
        while n + 1 in present:
            n += 1
        return n

    @classmethod
    def from_pairs(cls, pairs) -> "SampleSet":
        return cls(tuple((int(i), int(v)) for i, v in pairs))

    @classmethod
    def from_file(cls, path) -> "SampleSet":
        pairs = []
        for line in Path(path).read_text().splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            i, v = line.split()
            pairs.append((int(i), int(v)))
        return cls.from_pairs(pairs)

    def to_file(self, path) -> None:
        Path(path).write_text("".join(f"{i} {v}\n" for i, v in self.pairs))


def _tuple_word(values, pad: int, width: int | None = None) -> list[int] | None:
    """Packed symbol word for a tuple, `pad` extra zero symbols in front.

    With an explicit `width` the word is padded to exactly that length, or
    None is returned when some component does not fit.
    """
    words = [zeckendorf.encode(v) for v in values]
    natural = max((len(w) for w in words), default=0)
    length = natural + pad if width is None else width
    if any(len(w) > length for w in words):
        return None
    padded = [w.rjust(length, "0") for w in words]
    out = []
    for pos in range(length):
        sym = 0
        for w in padded:
            sym = (sym << 1) | (w[pos] == "1")
        out.append(sym)
    return out


_MAX_ROUNDS = 40


def learn_synchronized(
    tuples: list[tuple[int, ...]],
    tracks: int,
    *,
    max_pad: int = 2,
    state_budget: int = 256,
) -> Dfa:
    """Learn a k-track DFA for the function (first k-1 tracks) -> last track.

    Runs value-bounded training stages; within a stage, wrongly accepted
    completions found by validation are fed back as explicit negative words
    until the machine is sound on the whole sample set.
    """
    if not tuples:
        raise ValueError("empty sample set")
    if tracks < 2:
        raise ValueError("a synchronized function needs at least two tracks")
    tuples = sorted(set(tuples))
    top = max(max(t) for t in tuples)
    thresholds = sorted({max(8, top // 8), max(8, top // 4), max(8, top // 2), top})
    last_error = "no stage attempted"
    for bound in thresholds:
        stage = [t for t in tuples if max(t) <= bound]
        if not stage:
            continue
        extra_negs: list[list[int]] = []
        for _ in range(_MAX_ROUNDS):
            machine = _learn_stage(stage, tracks, max_pad, state_budget, extra_negs)
            if machine is None:
                last_error = f"stage bound {bound}: no machine within budget"
                break
            # Cheap sweep over the stage first; the whole sample set is only
            # swept once the machine is clean on the stage.
            try:
                counterexamples = _counterexamples(machine, stage, tracks, max_pad)
                if not counterexamples:
                    counterexamples = _counterexamples(
                        machine, tuples, tracks, max_pad
                    )
                    if not counterexamples:
                        return machine
            except _StageInsufficient as exc:
                last_error = f"stage bound {bound}: {exc}"
                break
            last_error = (
                f"stage bound {bound}: {len(counterexamples)} contradictions"
            )
            before = len(extra_negs)
            seen = {tuple(w) for w in extra_negs}
            for w in counterexamples:
                if tuple(w) not in seen:
                    seen.add(tuple(w))
                    extra_negs.append(w)
            if len(extra_negs) == before:
                break  # no new evidence; a larger stage is needed
    raise InferenceError(last_error)


def _learn_stage(
    tuples, tracks: int, max_pad: int, state_budget: int, extra_negs=()
) -> Dfa | None:
    pos_words: list[list[int]] = []
    neg_words: list[list[int]] = [list(w) for w in extra_negs]
    expected: dict[str, str] = {}
    for values in tuples:
        base = None
        for pad in range(max_pad + 1):
            word = _tuple_word(values, pad)
            pos_words.append(word)
            if pad == 0:
                base = word
        u, v = _projections(base, tracks)
        expected[u.lstrip("0")] = v.lstrip("0")
        out_value = values[-1]
        for wrong in (out_value - 2, out_value - 1, out_value + 1, out_value + 2):
            if wrong < 0:
                continue
            for pad in range(max_pad + 1):
                neg = _tuple_word(values[:-1] + (wrong,), 0, width=len(base) + pad)
                if neg is not None:
                    neg_words.append(neg)
                    break  # the shortest width that fits is evidence enough

    # Prefix tree over packed symbols, nodes in BFS order for determinism.
    edges: list[dict[int, int]] = [{}]
    pos_ends: set[int] = set()
    neg_ends: set[int] = set()
    for word in pos_words:
        pos_ends.add(_insert(edges, word))
    for word in neg_words:
        neg_ends.add(_insert(edges, word))
    edges, pos_ends, neg_ends = _bfs_renumber(edges, pos_ends, neg_ends)
    n = len(edges)

    # Word-level labels: +1 accept, -1 reject, 0 unknown.  Besides the
    # explicit ends, any node whose input projection is a sampled value and
    # whose output disagrees is rejecting.
    label = [0] * n
    stack: list[tuple[int, str, str]] = [(0, "", "")]
    while stack:
        node, u, v = stack.pop()
        exp = expected.get(u.lstrip("0"))
        if node in pos_ends:
            label[node] = 1
        elif node in neg_ends or (exp is not None and exp != v.lstrip("0")):
            label[node] = -1
        for sym, child in edges[node].items():
            stack.append(
                (child, u + chr(48 + (sym >> 1)), v + chr(48 + (sym & 1)))
            )

    machine = _blue_fringe(edges, label, tracks, state_budget)
    if machine is None:
        return None
    # The merged machine may accept junk with invalid digit patterns that no
    # sample path ever constrained; the guess is a numeric relation, so cut
    # it down to valid words before normalizing.
    machine = boolean_combine("and", machine, validity(tracks))
    machine = normalize_leading_zeros(minimized(machine))
    if machine.useful_state_count() > state_budget:
        return None
    return machine


def _projections(word: list[int], tracks: int) -> tuple[str, str]:
    u = "".join(chr(48 + (sym >> 1)) for sym in word)
    v = "".join(chr(48 + (sym & 1)) for sym in word)
    return u, v


def _insert(edges: list[dict[int, int]], word: list[int]) -> int:
    node = 0
    for sym in word:
        nxt = edges[node].get(sym)
        if nxt is None:
            nxt = len(edges)
            edges.append({})
            edges[node][sym] = nxt
        node = nxt
    return node


def _bfs_renumber(edges, pos_ends, neg_ends):
    renum = {0: 0}
    order = [0]
    i = 0
    while i < len(order):
        node = order[i]
        for sym in sorted(edges[node]):
            child = edges[node][sym]
            renum[child] = len(order)
            order.append(child)
        i += 1
    new_edges = [
        {sym: renum[child] for sym, child in edges[node].items()}
        for node in order
    ]
    return (
        new_edges,
        {renum[x] for x in pos_ends},
        {renum[x] for x in neg_ends},
    )


def _blue_fringe(edges, label, tracks: int, state_budget: int) -> Dfa | None:
    """Classic RPNI with folding merges and an undo trail."""
    n = len(edges)
    parent = list(range(n))
    trans: list[dict[int, int]] = [dict(row) for row in edges]

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    red_set: set[int] = {0}

    def try_merge(ra: int, rb: int) -> bool:
        trail: list[tuple] = []
        queue = [(ra, rb)]
        ok = True
        while queue and ok:
            x, y = queue.pop()
            x, y = find(x), find(y)
            if x == y:
                continue
            if y in red_set:
                if x in red_set:
                    # Red states are committed distinct; folding two of
                    # them together invalidates the whole attempt.
                    ok = False
                    break
                x, y = y, x
            lx, ly = label[x], label[y]
            if lx * ly < 0:
                ok = False
                break
            if ly != 0 and lx == 0:
                trail.append(("l", x, lx))
                label[x] = ly
            trail.append(("p", y, parent[y]))
            parent[y] = x
            tx = trans[x]
            for sym, child in trans[y].items():
                cur = tx.get(sym)
                if cur is None:
                    tx[sym] = child
                    trail.append(("t", x, sym))
                else:
                    queue.append((cur, child))
        if not ok:
            for kind, a, b in reversed(trail):
                if kind == "p":
                    parent[a] = b
                elif kind == "t":
                    del trans[a][b]
                else:
                    label[a] = b
        return ok

    red: list[int] = [0]
    while True:
        blue = sorted(
            {
                find(child)
                for r in red
                for child in trans[find(r)].values()
            }
            - {find(r) for r in red}
        )
        if not blue:
            break
        b = blue[0]
        for r in red:
            if try_merge(find(r), b):
                break
        else:
            red.append(b)
            red_set.add(b)
            if len(red) > 4 * state_budget:
                return None

    roots = []
    seen = set()
    for r in red:
        root = find(r)
        if root not in seen:
            seen.add(root)
            roots.append(root)
    index = {root: i for i, root in enumerate(roots)}
    dead = len(roots)
    n_sym = 1 << tracks
    delta = []
    for root in roots:
        row = []
        for sym in range(n_sym):
            child = trans[root].get(sym)
            row.append(index[find(child)] if child is not None else dead)
        delta.append(tuple(row))
    delta.append(tuple(dead for _ in range(n_sym)))
    finals = frozenset(index[root] for root in roots if label[root] == 1)
    return Dfa(tracks, tuple(delta), finals, index[find(0)])


def _counterexamples(
    machine: Dfa, tuples, tracks: int, max_pad: int, cap: int = 1000
) -> list[list[int]]:
    """Wrongly accepted completions of sampled inputs; empty means sound."""
    words = []
    for values in tuples:
        for pad in range(max_pad + 1):
            words.append(_tuple_word(values, pad))
    width = max(len(w) for w in words)
    mat = np.zeros((len(words), width), dtype=np.int32)
    for row, w in enumerate(words):
        mat[row, width - len(w):] = w
    accepted = batch_accepts(machine, mat)
    if not accepted.all():
        raise _StageInsufficient(
            f"positive sample #{int(np.argmin(accepted))} rejected"
        )
    counts = completion_counts(machine, mat >> 1)
    bad_rows = np.nonzero(counts != 1)[0]
    found: list[list[int]] = []
    for row in bad_rows:
        positive = list(int(s) for s in mat[row])
        base = [int(s) >> 1 for s in mat[row]]
        for word in _accepted_completions(machine, base, limit=4):
            if word != positive:
                found.append(word)
                if len(found) >= cap:
                    return found
    return found


def _accepted_completions(machine: Dfa, base: list[int], limit: int) -> list[list[int]]:
    length = len(base)
    okay = [set() for _ in range(length + 1)]
    okay[length] = set(machine.finals)
    for pos in range(length - 1, -1, -1):
        live = okay[pos + 1]
        here = okay[pos]
        for state in range(machine.n_states):
            row = machine.delta[state]
            if row[base[pos] << 1] in live or row[(base[pos] << 1) | 1] in live:
                here.add(state)
    sols: list[list[int]] = []

    def dfs(pos: int, state: int, acc: list[int]) -> None:
        if len(sols) >= limit:
            return
        if pos == length:
            sols.append(acc[:])
            return
        for bit in (0, 1):
            sym = (base[pos] << 1) | bit
            nxt = machine.delta[state][sym]
            if nxt in okay[pos + 1]:
                acc.append(sym)
                dfs(pos + 1, nxt, acc)
                acc.pop()

    if machine.initial in okay[0]:
        dfs(0, machine.initial, [])
    return sols


def guess_dfa(samples: SampleSet, max_pad: int = 2, state_budget: int = 256) -> Dfa:
    """Guess a 2-track automaton for the sampled function i -> value."""
    tuples = [(i, v) for i, v in samples.pairs]
    return learn_synchronized(tuples, 2, max_pad=max_pad, state_budget=state_budget)
