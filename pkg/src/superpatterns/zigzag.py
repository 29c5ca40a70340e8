"""Zigzag words, breaking ties, and parity-based score functions.

A zigzag word over ``[q]`` alternates odd runs (odd letters ascending) and
even runs (even letters descending). The score of a sequence counts how many
runs beyond its length a greedy placement needs; it is a sum of local costs
that depend only on the parities and order of consecutive values.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .containment import exact_subsequence
from .perm import Permutation, Word

__all__ = [
    "ZigzagSpec",
    "ScoreReport",
    "run",
    "zz",
    "break_ties",
    "parity_sign",
    "local_cost",
    "initial_cost",
    "score",
    "circular_score",
    "shifted_score",
    "greedy_place",
    "min_runs",
]


@dataclass(frozen=True)
class ZigzagSpec:
    m: int
    q: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"number of runs must be >= 1, got {self.m}")
        if self.q < 2:
            raise ValueError(f"alphabet width must be >= 2, got {self.q}")


@dataclass(frozen=True)
class ScoreReport:
    kind: str  # "linear", "circular" or "shifted"
    steps: tuple[tuple[int, int, int], ...]
    initial: int | None
    total: int = field(init=False)

    def __post_init__(self):
        total = sum(c for _, _, c in self.steps) + (self.initial or 0)
        object.__setattr__(self, "total", total)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "steps": [list(step) for step in self.steps],
            "initial": self.initial,
            "total": self.total,
        }


def run(j: int, q: int) -> tuple[int, ...]:
    """The j-th run: odd letters ascending for odd j, even letters descending otherwise."""
    if j < 1 or q < 2:
        raise ValueError(f"need j >= 1 and q >= 2, got j={j}, q={q}")
    if j % 2:
        return tuple(range(1, q + 1, 2))
    return tuple(range(q - q % 2, 1, -2))


def zz(m: int | ZigzagSpec, q: int | None = None) -> Word:
    """Concatenate runs ``1..m`` over ``[q]``.

    Accepts either ``zz(spec)`` or ``zz(m, q)``.
    """
    spec = m if isinstance(m, ZigzagSpec) else ZigzagSpec(m, q)
    letters = [x for j in range(1, spec.m + 1) for x in run(j, spec.q)]
    return Word(letters, spec.q)


def break_ties(w: Sequence[int]) -> Permutation:
    """Turn a word into a permutation, ranking lowest level first, right to left."""
    if not w:
        raise ValueError("cannot break ties in an empty word")
    order = sorted(range(len(w)), key=lambda i: (w[i], -i))
    ranks = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        ranks[i] = rank
    return Permutation(ranks)


def parity_sign(x: int) -> int:
    return 1 if x % 2 == 0 else -1


def _sgn(t: int) -> int:
    return (t > 0) - (t < 0)


def local_cost(x: int, y: int) -> int:
    """Extra runs (-1, 0 or +1) needed to place ``y`` right after ``x``."""
    px, py = parity_sign(x), parity_sign(y)
    return int(x == y) - (px * py + 1) // 2 * _sgn(x - y) * px


def initial_cost(x: int) -> int:
    return (1 + parity_sign(x)) // 2


def _pair_steps(s: Sequence[int], cyclic: bool = False) -> tuple[tuple[int, int, int], ...]:
    pairs = list(zip(s, s[1:]))
    if cyclic:
        pairs.append((s[-1], s[0]))
    return tuple((x, y, local_cost(x, y)) for x, y in pairs)


def _check_scoreable(s: Sequence[int]) -> None:
    if not s:
        raise ValueError("cannot score an empty sequence")
    if len(set(s)) != len(s):
        raise ValueError(f"score needs distinct values, got {tuple(s)}")


def score(s: Sequence[int]) -> ScoreReport:
    """Linear score: initial cost of the first value plus consecutive local costs."""
    _check_scoreable(s)
    return ScoreReport("linear", _pair_steps(s), initial_cost(s[0]))


def circular_score(s: Sequence[int]) -> ScoreReport:
    """Sum of local costs over all cyclically consecutive pairs, last-to-first included."""
    _check_scoreable(s)
    return ScoreReport("circular", _pair_steps(s, cyclic=True), None)


def shifted_score(s: Sequence[int]) -> ScoreReport:
    """Score when the placement is shifted one run later."""
    _check_scoreable(s)
    return ScoreReport("shifted", _pair_steps(s), (1 - parity_sign(s[0])) // 2)


def greedy_place(s: Sequence[int], q: int) -> list[int]:
    """Assign each value to the earliest zigzag run that can hold it.

    Simulates reading ``zz(infinity, q)`` left to right: a value stays in the
    current run when the run has its parity and the run order allows it after
    the previous value, otherwise it moves to the next run of its parity.
    Returns the 1-based run index of every value.
    """
    runs: list[int] = []
    current = 0
    prev = None
    for y in s:
        if not 1 <= y <= q:
            raise ValueError(f"value {y} outside alphabet [1, {q}]")
        odd = y % 2 == 1
        if current and prev is not None and (current % 2 == 1) == odd:
            in_order = y > prev if odd else y < prev
            if in_order:
                runs.append(current)
                prev = y
                continue
        # next run whose parity matches y
        nxt = current + 1
        if (nxt % 2 == 1) != odd:
            nxt += 1
        current = nxt
        runs.append(current)
        prev = y
    return runs


def min_runs(s: Sequence[int]) -> int:
    """Smallest m such that ``s`` is an exact subsequence of ``zz(m, max(s) + 2)``."""
    if not s:
        return 0
    q = max(s) + 2
    m = 1
    while exact_subsequence(zz(m, q), s) is None:
        m += 1
    return m
