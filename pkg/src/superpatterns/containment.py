"""Pattern containment with witnesses.

Two notions live here. Order-isomorphic containment looks for positions in a
host whose values compare pairwise like the pattern's; the host may be a
permutation or a word (repeated letters are never chosen together, since the
comparisons are strict). Exact containment looks for the pattern's values
verbatim as a subsequence of a word.

All witnesses use 1-based host positions. When several witnesses exist the
lexicographically smallest one is returned, and for circular queries the
smallest rotation wins, so every answer is reproducible.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import inf

from .perm import pattern_of, restrict, rotate

__all__ = [
    "Witness",
    "contains_pattern",
    "contains_circular",
    "exact_subsequence",
    "exact_cyclic_subsequence",
    "witness_is_valid",
]


@dataclass(frozen=True)
class Witness:
    """Where a (possibly rotated) pattern sits inside a host.

    ``indices`` are 1-based positions in the host, strictly increasing.
    ``rotation`` is the left shift applied to the query pattern (0 for
    linear checks). ``word_shift`` is the left shift applied to the host
    word, and is non-zero only under word-cyclic semantics; the indices
    then refer to the shifted word.
    """

    indices: tuple[int, ...]
    rotation: int = 0
    word_shift: int = 0

    def to_dict(self) -> dict:
        d = {"rotation": self.rotation, "indices": list(self.indices)}
        if self.word_shift:
            d["word_shift"] = self.word_shift
        return d


@lru_cache(maxsize=1 << 16)
def _window_plan(pattern: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    # For each pattern position i: the earlier positions holding the nearest
    # smaller and nearest larger values (-1 when there is none). The host
    # value chosen for i must fall strictly between the host values chosen
    # for those two positions.
    plan = []
    for i, v in enumerate(pattern):
        lo = hi = -1
        for a in range(i):
            w = pattern[a]
            if w < v and (lo < 0 or w > pattern[lo]):
                lo = a
            elif w > v and (hi < 0 or w < pattern[hi]):
                hi = a
        plan.append((lo, hi))
    return tuple(plan)


def _embed(host: Sequence[int], pattern: tuple[int, ...]) -> tuple[int, ...] | None:
    """Lexicographically first 0-based embedding, by depth-first search."""
    k, n = len(pattern), len(host)
    if k == 0:
        return ()
    if k > n:
        return None
    plan = _window_plan(pattern)
    chosen = [0] * k
    vals = [0] * k
    i = j = 0
    while True:
        if i == k:
            return tuple(chosen)
        lo, hi = plan[i]
        low = vals[lo] if lo >= 0 else -inf
        high = vals[hi] if hi >= 0 else inf
        last = n - k + i
        while j <= last and not (low < host[j] < high):
            j += 1
        if j <= last:
            chosen[i] = j
            vals[i] = host[j]
            i += 1
            j += 1
        else:
            i -= 1
            if i < 0:
                return None
            j = chosen[i] + 1


def contains_pattern(pi: Sequence[int], sigma: Sequence[int]) -> Witness | None:
    """Find ``sigma`` as an order-isomorphic subsequence of ``pi``."""
    hit = _embed(pi, tuple(sigma))
    if hit is None:
        return None
    return Witness(indices=tuple(i + 1 for i in hit))


def contains_circular(pi: Sequence[int], sigma: Sequence[int]) -> Witness | None:
    """Find some rotation of ``sigma`` in ``pi``; the smallest rotation is reported."""
    sigma = tuple(sigma)
    if not sigma:
        return Witness(indices=())
    for r in range(len(sigma)):
        hit = _embed(pi, sigma[r:] + sigma[:r])
        if hit is not None:
            return Witness(indices=tuple(i + 1 for i in hit), rotation=r)
    return None


def exact_subsequence(w: Sequence[int], s: Sequence[int]) -> tuple[int, ...] | None:
    """Greedy leftmost match of ``s`` inside ``w`` by equal values.

    Greedy matching is complete for exact subsequences and yields the
    lexicographically least index set.
    """
    found = []
    i = 0
    k = len(s)
    for pos, letter in enumerate(w, start=1):
        if i == k:
            break
        if letter == s[i]:
            found.append(pos)
            i += 1
    return tuple(found) if i == k else None


def exact_cyclic_subsequence(
    w: Sequence[int], s: Sequence[int], word_cyclic: bool = False
) -> Witness | None:
    """Find some rotation of ``s`` as an exact subsequence of ``w``.

    By default only the pattern is rotated and the word is read linearly.
    With ``word_cyclic=True`` the word may also be read starting at any
    position and wrapping around once. The smallest pattern rotation wins,
    then the smallest word shift. Both readings find a match for the same
    inputs: a match split across the end of the word is a linear match of
    another rotation of ``s``.
    """
    s = tuple(s)
    if not s:
        return Witness(indices=())
    w = tuple(w)
    shifts = range(len(w)) if word_cyclic else (0,)
    for r in range(len(s)):
        target = s[r:] + s[:r]
        for t in shifts:
            hit = exact_subsequence(w[t:] + w[:t], target)
            if hit is not None:
                return Witness(indices=hit, rotation=r, word_shift=t)
    return None


def witness_is_valid(
    host: Sequence[int], pattern: Sequence[int], witness: Witness, exact: bool = False
) -> bool:
    """Re-check a witness from scratch."""
    host = tuple(host)
    if witness.word_shift:
        t = witness.word_shift
        host = host[t:] + host[:t]
    expected = rotate(tuple(pattern), witness.rotation) if pattern else ()
    try:
        seen = restrict(host, witness.indices)
    except (ValueError, IndexError):
        return False
    if exact:
        return seen == tuple(expected)
    if len(set(seen)) != len(seen):
        return False
    return tuple(pattern_of(seen)) == tuple(pattern_of(expected)) if seen else not expected
