"""Permutations and words in one-line notation.

Positions are 1-based in every public function (``restrict``, index pairs,
witnesses); the underlying storage is an ordinary tuple.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence

__all__ = [
    "Permutation",
    "Word",
    "make_permutation",
    "rotate",
    "canonical_rotation",
    "lift",
    "pattern_of",
    "restrict",
    "direct_sum",
    "is_layered",
    "distant_inverse_descents",
    "parse_line",
    "format_line",
    "read_objects",
]


class Permutation(tuple):
    """A bijection on ``{1, ..., n}`` stored as its one-line notation.

    Compares equal to the plain tuple of its entries.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int]) -> Permutation:
        entries = tuple(int(v) for v in values)
        n = len(entries)
        if n == 0:
            raise ValueError("a permutation needs at least one entry")
        if sorted(entries) != list(range(1, n + 1)):
            missing = sorted(set(range(1, n + 1)) - set(entries))
            raise ValueError(
                f"{entries} is not a permutation of 1..{n}"
                + (f" (missing {missing})" if missing else "")
            )
        return super().__new__(cls, entries)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"

    def __reduce__(self):
        return (Permutation, (tuple(self),))


class Word(tuple):
    """A finite sequence over the alphabet ``[q]``; letters may repeat."""

    def __new__(cls, letters: Iterable[int], q: int | None = None) -> Word:
        entries = tuple(int(v) for v in letters)
        if any(v < 1 for v in entries):
            raise ValueError(f"word letters must be positive: {entries}")
        width = max(entries, default=1) if q is None else int(q)
        if entries and max(entries) > width:
            raise ValueError(f"letter {max(entries)} exceeds alphabet width {width}")
        self = super().__new__(cls, entries)
        self.q = width
        return self

    def __repr__(self) -> str:
        return f"Word({tuple(self)}, q={self.q})"

    def __reduce__(self):
        return (Word, (tuple(self), self.q))


def make_permutation(values: Iterable[int]) -> Permutation:
    return Permutation(values)


def rotate(sigma: Sequence[int], r: int) -> tuple[int, ...]:
    """Left rotation ``(s[r+1], ..., s[n], s[1], ..., s[r])``, ``0 <= r < n``.

    Permutations stay permutations; any other sequence comes back as a tuple.
    """
    n = len(sigma)
    if not 0 <= r < n:
        raise ValueError(f"rotation {r} out of range for length {n}")
    rotated = tuple(sigma[r:]) + tuple(sigma[:r])
    return Permutation(rotated) if isinstance(sigma, Permutation) else rotated


def canonical_rotation(sigma: Sequence[int]) -> tuple[Permutation, int]:
    """The unique rotation starting with the maximum entry, and its shift."""
    r = list(sigma).index(len(sigma))
    return rotate(Permutation(sigma), r), r


def lift(s: Iterable[int]) -> tuple[int, ...]:
    # not a Permutation: the values live in 2..n+1
    return tuple(v + 1 for v in s)


def pattern_of(s: Sequence[int]) -> Permutation:
    """Standardize distinct values: the i-th smallest becomes i."""
    if len(set(s)) != len(s):
        raise ValueError(f"pattern_of needs distinct values, got {tuple(s)}")
    rank = {v: i for i, v in enumerate(sorted(s), start=1)}
    return Permutation(rank[v] for v in s)


def restrict(pi: Sequence[int], indices: Iterable[int]) -> tuple[int, ...]:
    """Entries of ``pi`` at the given 1-based, strictly increasing positions."""
    idx = tuple(indices)
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"indices must be strictly increasing: {idx}")
    if idx and not (1 <= idx[0] and idx[-1] <= len(pi)):
        raise IndexError(f"indices {idx} out of range for length {len(pi)}")
    return tuple(pi[i - 1] for i in idx)


def direct_sum(pi: Sequence[int], sigma: Sequence[int]) -> Permutation:
    m = len(pi)
    return Permutation(tuple(pi) + tuple(v + m for v in sigma))


def is_layered(sigma: Sequence[int]) -> tuple[bool, list[int]]:
    """Decide whether ``sigma`` is a direct sum of decreasing permutations.

    Returns ``(True, layer_lengths)`` or ``(False, [])``. Layers are the
    minimal blocks ``sigma[a:b]`` whose entries are exactly ``a+1..b``.
    """
    layers: list[int] = []
    start = 0
    seen_max = 0
    for i, v in enumerate(sigma):
        seen_max = max(seen_max, v)
        if seen_max == i + 1:
            block = sigma[start : i + 1]
            if any(x <= y for x, y in zip(block, block[1:])):
                return False, []
            layers.append(i + 1 - start)
            start = i + 1
    return True, layers


def distant_inverse_descents(sigma: Sequence[int]) -> list[tuple[int, int]]:
    """Pairs of 1-based positions ``(j, k)``, ``k >= j + 2``, with ``sigma(j) = sigma(k) + 1``."""
    where = {v: i for i, v in enumerate(sigma, start=1)}
    pairs = []
    for j, v in enumerate(sigma, start=1):
        k = where.get(v - 1)
        if k is not None and k >= j + 2:
            pairs.append((j, k))
    return pairs


_SEP = re.compile(r"[\s,]+")


def parse_line(line: str) -> tuple[int, ...]:
    """Parse ``"3 2 1"`` or ``"3,2,1"`` (brackets tolerated) into integers."""
    body = line.strip().strip("()[]")
    if not body:
        return ()
    values = tuple(int(tok) for tok in _SEP.split(body) if tok)
    if any(v < 1 for v in values):
        raise ValueError(f"entries must be positive integers: {line!r}")
    return values


def format_line(values: Iterable[int]) -> str:
    return " ".join(str(v) for v in values)


def read_objects(text: str) -> list[tuple[int, ...]]:
    """One object per non-blank line; ``#`` starts a comment."""
    objects = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        if line.strip():
            objects.append(parse_line(line))
    return objects
