"""Vectorized batch runs of automata over many integer tuples.

Certification sweeps check automata against the exact integer oracles for
up to 10^6 inputs; running words one at a time in Python is too slow, so
the encoding and the DFA runs are vectorized with numpy.  Values here stay
within int64 range (the oracles themselves remain arbitrary-precision).
"""

from __future__ import annotations

import numpy as np

from stolarsky.automata import Dfa

__all__ = [
    "accepts_pairs",
    "batch_accepts",
    "completion_counts",
    "encode_bits",
    "pack_symbols",
]


def _weights_desc(limit: int) -> list[int]:
    ws = [1, 2]
    while ws[-1] <= limit:
        ws.append(ws[-1] + ws[-2])
    return ws[::-1]


def encode_bits(values: np.ndarray, width: int | None = None) -> np.ndarray:
    """Greedy Zeckendorf digits, msd first, one row per value."""
    values = np.asarray(values, dtype=np.int64)
    top = int(values.max(initial=0))
    weights = _weights_desc(top)
    if width is not None:
        if width < len(weights):
            weights = weights[len(weights) - width:]
        else:
            pad = width - len(weights)
            bits = np.zeros((len(values), width), dtype=np.uint8)
            rem = values.copy()
            for j, w in enumerate(weights):
                take = rem >= w
                bits[:, pad + j] = take
                rem -= take * w
            return bits
    bits = np.zeros((len(values), len(weights)), dtype=np.uint8)
    rem = values.copy()
    for j, w in enumerate(weights):
        take = rem >= w
        bits[:, j] = take
        rem -= take * w
    return bits


def pack_symbols(*tracks: np.ndarray) -> np.ndarray:
    """Combine per-track bit matrices into packed symbol indices."""
    out = np.zeros_like(tracks[0], dtype=np.int32)
    for bits in tracks:
        out = (out << 1) | bits.astype(np.int32)
    return out


def batch_accepts(dfa: Dfa, symbols: np.ndarray) -> np.ndarray:
    """Vectorized acceptance for a matrix of symbol words (one word per row)."""
    delta = np.asarray(dfa.delta, dtype=np.int32)
    states = np.full(symbols.shape[0], dfa.initial, dtype=np.int32)
    for j in range(symbols.shape[1]):
        states = delta[states, symbols[:, j]]
    final_mask = np.zeros(dfa.n_states, dtype=bool)
    final_mask[list(dfa.finals)] = True
    return final_mask[states]


def accepts_pairs(dfa: Dfa, *value_tracks: np.ndarray) -> np.ndarray:
    """Acceptance of numeric tuples: encode each track, pad, pack, run."""
    arrays = [np.asarray(v, dtype=np.int64) for v in value_tracks]
    top = max(int(a.max(initial=0)) for a in arrays)
    width = len(_weights_desc(top))
    bit_mats = [encode_bits(a, width) for a in arrays]
    return batch_accepts(dfa, pack_symbols(*bit_mats))


def completion_counts(dfa: Dfa, input_symbols: np.ndarray) -> np.ndarray:
    """Number of accepted words per row when the last track ranges freely.

    `input_symbols` holds the packed symbols of all tracks except the last;
    the free output track contributes the least significant symbol bit.
    Rows sharing an input symbol advance through one shared 0/1 transfer
    matrix, so each step is a handful of float matmuls (exact: counts stay
    far below 2**53 for the word lengths involved).
    """
    n, length = input_symbols.shape
    n_states = dfa.n_states
    delta = np.asarray(dfa.delta, dtype=np.int64)
    transfer: dict[int, np.ndarray] = {}
    for g in range(1 << max(0, dfa.tracks - 1)):
        m = np.zeros((n_states, n_states), dtype=np.float64)
        for bit in (0, 1):
            np.add.at(m, (np.arange(n_states), delta[:, (g << 1) | bit]), 1.0)
        transfer[g] = m
    counts = np.zeros((n, n_states), dtype=np.float64)
    counts[:, dfa.initial] = 1.0
    for j in range(length):
        col = input_symbols[:, j]
        nxt = np.empty_like(counts)
        for g in np.unique(col):
            rows = col == g
            nxt[rows] = counts[rows] @ transfer[int(g)]
        counts = nxt
    final_mask = np.zeros(n_states, dtype=bool)
    final_mask[list(dfa.finals)] = True
    return counts[:, final_mask].sum(axis=1).astype(np.int64)
