"""Superpattern constructions and closed-form length bounds."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import ceil

from .perm import Permutation, Word, format_line
from .zigzag import break_ties, zz

__all__ = [
    "ConstructionResult",
    "ev_linear_superpattern",
    "circular_from_linear",
    "zzc_word",
    "zzc_permutation",
    "bounds",
]

METHODS = ("ev-linear", "circ-from-linear", "zzc-odd")


@dataclass(frozen=True)
class ConstructionResult:
    permutation: Permutation
    method: str
    claimed_k: int
    source_word: Word | None = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown construction method {self.method!r}")
        if self.method == "zzc-odd" and (self.claimed_k < 5 or self.claimed_k % 2 == 0):
            raise ValueError("zzc-odd needs odd k >= 5")

    @property
    def length(self) -> int:
        return len(self.permutation)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "claimed_k": self.claimed_k,
            "length": self.length,
            "permutation": format_line(self.permutation),
            "source_word": None if self.source_word is None else format_line(self.source_word),
        }


def ev_linear_superpattern(n: int) -> ConstructionResult:
    """Linear n-superpattern from breaking ties in ``zz(n, n)``.

    For even n a final letter 1 is appended to the word first. The length is
    ``ceil((n*n + 1) / 2)`` in both cases.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    letters = tuple(zz(n, n))
    if n % 2 == 0:
        letters += (1,)
    word = Word(letters, n)
    return ConstructionResult(break_ties(word), "ev-linear", n, word)


def circular_from_linear(pi: Sequence[int], k: int | None = None) -> ConstructionResult:
    """Prepend a new maximum ``L + 1`` to a permutation of length ``L``.

    A linear (k-1)-superpattern becomes a circular k-superpattern. The input
    is not checked for being a superpattern. Without an explicit ``k`` the
    claim is the largest k whose linear (k-1) construction fits in length L.
    """
    pi = Permutation(pi)
    gamma = Permutation((len(pi) + 1,) + tuple(pi))
    if k is None:
        j = 1
        while ceil(((j + 1) ** 2 + 1) / 2) <= len(pi):
            j += 1
        k = j + 1
    return ConstructionResult(gamma, "circ-from-linear", k)


def zzc_word(k: int) -> Word:
    """``zz(k-1, k-1)`` plus a final 1, with its trailing ``(2, 1)`` replaced by ``(k, k-1)``."""
    if k < 5 or k % 2 == 0:
        raise ValueError(f"zzc_word needs odd k >= 5, got {k}")
    omega = tuple(zz(k - 1, k - 1)) + (1,)
    assert omega[-2:] == (2, 1)
    return Word(omega[:-2] + (k, k - 1), k)


def zzc_permutation(k: int) -> ConstructionResult:
    word = zzc_word(k)
    return ConstructionResult(break_ties(word), "zzc-odd", k, word)


def bounds(k: int) -> dict[str, int | None]:
    """Every closed-form length bound for circular k-superpatterns, side by side.

    ``word_alphabet``: length of ``zz(k-1, k+1)``, odd k only.
    ``permutation_table``: ``ceil((k^2 + 1) / 2) + 1``.
    ``circular_from_linear``: ``ceil((k^2 - 2k + 4) / 2)``, i.e. one more than
    the linear (k-1) construction.
    ``zzc_length``: ``(k-1)^2 / 2 + 1``, odd k >= 5 only.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    odd = k % 2 == 1
    return {
        "k": k,
        "word_alphabet": (k - 1) * (k + 1) // 2 if odd else None,
        "permutation_table": ceil((k * k + 1) / 2) + 1,
        "circular_from_linear": ceil((k * k - 2 * k + 4) / 2),
        "zzc_length": (k - 1) ** 2 // 2 + 1 if odd and k >= 5 else None,
    }
