"""Workbench for Fibonacci-automatic sequences and Stolarsky interspersions.

The package decides first-order statements about integer relations that are
synchronized in Zeckendorf (Fibonacci) numeration, by compiling formulas to
multi-track automata.  On top of the decision procedure it generates,
guesses, and certifies the classical interspersion arrays (Wythoff,
Stolarsky, dual Wythoff, EFC, ESC, and the period-3 "k100" array).
"""

from stolarsky.zeckendorf import decode, encode, floor_alpha, floor_alpha_sq, is_valid
from stolarsky.automata import Dfa

__version__ = "0.1.0"

__all__ = [
    "Dfa",
    "decode",
    "encode",
    "floor_alpha",
    "floor_alpha_sq",
    "is_valid",
    "__version__",
]
