"""Zeckendorf numeration and exact golden-ratio floors.

Every natural number has a unique expansion as a sum of non-consecutive
Fibonacci numbers; we write it msd-first as a binary word with no "11"
factor.  The empty word denotes 0, and prepending zeros never changes the
value.  This module is the integer ground truth that every automaton in the
package is certified against, so everything here is exact arbitrary-precision
arithmetic; floating point is deliberately absent.
"""

from __future__ import annotations

from math import isqrt

__all__ = [
    "RepresentationError",
    "decode",
    "encode",
    "floor_alpha",
    "floor_alpha_sq",
    "is_valid",
    "lex_less",
    "trailing_zeros",
]


class RepresentationError(ValueError):
    """A digit word violates the no-adjacent-ones constraint."""


# Digit weights, least significant first: 1, 2, 3, 5, 8, ...
_WEIGHTS = [1, 2]


def _weights_through(n: int) -> list[int]:
    while _WEIGHTS[-1] <= n:
        _WEIGHTS.append(_WEIGHTS[-1] + _WEIGHTS[-2])
    return _WEIGHTS


def is_valid(word: str) -> bool:
    """True iff `word` is a legal digit word: bits only, no two adjacent 1s."""
    if word.strip("01"):
        raise ValueError(f"not a bit word: {word!r}")
    return "11" not in word


def encode(n: int) -> str:
    """Canonical (greedy) representation of `n`; `encode(0)` is the empty word."""
    if n < 0:
        raise ValueError("natural number required")
    if n == 0:
        return ""
    weights = _weights_through(n)
    k = len(weights) - 1
    while weights[k] > n:
        k -= 1
    digits = []
    rem = n
    for i in range(k, -1, -1):
        if weights[i] <= rem:
            digits.append("1")
            rem -= weights[i]
        else:
            digits.append("0")
    return "".join(digits)


def decode(word: str) -> int:
    """Value of a digit word, msd first.  Leading zeros are ignored."""
    if not is_valid(word):
        raise RepresentationError(f"adjacent ones in {word!r}")
    while len(_WEIGHTS) < len(word):
        _WEIGHTS.append(_WEIGHTS[-1] + _WEIGHTS[-2])
    total = 0
    for pos, digit in enumerate(reversed(word)):
        if digit == "1":
            total += _WEIGHTS[pos]
    return total


def floor_alpha(n: int) -> int:
    """Exact floor of n * (1 + sqrt(5)) / 2.

    Uses the identity floor(n*alpha) = (n + isqrt(5 n^2)) // 2; 5 n^2 is never
    a perfect square for n >= 1, so the inner floor is strict.
    """
    if n < 0:
        raise ValueError("natural number required")
    return (n + isqrt(5 * n * n)) // 2


def floor_alpha_sq(n: int) -> int:
    """Exact floor of n * alpha^2, via alpha^2 = alpha + 1."""
    return n + floor_alpha(n)


def trailing_zeros(word: str) -> int:
    """Number of trailing 0 digits ('0' * k words count all their digits)."""
    return len(word) - len(word.rstrip("0"))


def lex_less(a: str, b: str) -> bool:
    """Strict lexicographic order after padding both words with leading zeros.

    For valid canonical words this coincides with numeric order; the
    comparison automaton is built on that fact.
    """
    width = max(len(a), len(b))
    return a.rjust(width, "0") < b.rjust(width, "0")
