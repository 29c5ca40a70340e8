"""Exhaustive verification of superpatterns and of the score/embedding results.

Verification fans out over contiguous chunks of patterns (or of candidate
hosts, for the minimal-length search) and merges the chunk results in their
original order, so reports do not depend on the worker count.
"""

from __future__ import annotations

import logging
import os
import time
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import ceil, factorial

from .constructions import circular_from_linear, ev_linear_superpattern, zzc_permutation
from .containment import (
    Witness,
    contains_circular,
    contains_pattern,
    exact_cyclic_subsequence,
    exact_subsequence,
    witness_is_valid,
)
from .perm import Permutation, format_line, is_layered, lift
from .reporting import digest
from .zigzag import circular_score, parity_sign, score, shifted_score, zz

__all__ = [
    "Budget",
    "VerificationReport",
    "SearchResult",
    "CheckReport",
    "enumerate_patterns",
    "enumerate_cyclic_classes",
    "verify_superpattern",
    "verify_circular_superpattern",
    "min_superpattern_length",
    "check_identities",
    "check_embedding_theorems",
    "check_zzc_claim",
    "check_circular_construction",
]

log = logging.getLogger(__name__)

MAX_K = 9
ENV_WORKERS = "SUPERPATTERNS_WORKERS"
ENV_MAX_SECONDS = "SUPERPATTERNS_MAX_SECONDS"
ENV_MAX_NODES = "SUPERPATTERNS_MAX_NODES"


@dataclass(frozen=True)
class Budget:
    """Limits for the minimal-length search. ``None`` means unlimited.

    Nodes are candidate hosts examined.
    """

    max_seconds: float | None = None
    max_nodes: int | None = None

    @classmethod
    def from_env(cls, max_seconds=None, max_nodes=None) -> Budget:
        if max_seconds is None and os.environ.get(ENV_MAX_SECONDS):
            max_seconds = float(os.environ[ENV_MAX_SECONDS])
        if max_nodes is None and os.environ.get(ENV_MAX_NODES):
            max_nodes = int(os.environ[ENV_MAX_NODES])
        return cls(max_seconds, max_nodes)


def default_workers() -> int:
    return int(os.environ.get(ENV_WORKERS, "1"))


def _key(p: Sequence[int]) -> str:
    return format_line(p)


def _check_k(k: int) -> None:
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must be between 1 and {MAX_K}, got {k}")


def enumerate_patterns(k: int) -> Iterator[Permutation]:
    """All of S_k in lexicographic order."""
    _check_k(k)
    for p in permutations(range(1, k + 1)):
        yield Permutation(p)


def enumerate_cyclic_classes(k: int) -> Iterator[Permutation]:
    """One representative per rotation class: the rotation starting with k."""
    _check_k(k)
    for rest in permutations(range(1, k)):
        yield Permutation((k,) + rest)


# -- superpattern verification ------------------------------------------------


@dataclass
class VerificationReport:
    host: Permutation
    k: int
    mode: str
    total_patterns: int
    total_classes: int | None
    failures: list[Permutation]
    witnesses: dict[Permutation, Witness] | None
    elapsed: float = 0.0

    @property
    def verified(self) -> bool:
        return not self.failures

    def revalidate(self) -> bool:
        """Re-check every stored witness against the host."""
        if self.witnesses is None:
            return True
        return all(witness_is_valid(self.host, p, w) for p, w in self.witnesses.items())

    def to_dict(self) -> dict:
        return {
            "type": "verification",
            "host": format_line(self.host),
            "length": len(self.host),
            "k": self.k,
            "mode": self.mode,
            "verdict": "verified" if self.verified else "counterexample",
            "total_patterns": self.total_patterns,
            "total_classes": self.total_classes,
            "failures": [_key(p) for p in self.failures],
            "witnesses": None
            if self.witnesses is None
            else {_key(p): w.to_dict() for p, w in self.witnesses.items()},
            "elapsed": self.elapsed,
        }


def _scan(host: tuple[int, ...], patterns: list[tuple[int, ...]], circular: bool):
    find = contains_circular if circular else contains_pattern
    return [(p, find(host, p)) for p in patterns]


def _chunks(items: list, workers: int) -> list[list]:
    size = max(1, ceil(len(items) / (4 * workers)))
    return [items[i : i + size] for i in range(0, len(items), size)]


def _fan_out(fn, jobs: list[tuple], workers: int) -> Iterator:
    """Apply ``fn`` to every argument tuple, yielding results in job order."""
    if workers <= 1 or len(jobs) <= 1:
        for args in jobs:
            yield fn(*args)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *args) for args in jobs]
        try:
            for fut in futures:
                yield fut.result()
        finally:
            for fut in futures:
                fut.cancel()


def _verify(host, k, circular, workers, keep_witnesses) -> VerificationReport:
    host = Permutation(host)
    _check_k(k)
    if k > len(host):
        raise ValueError(f"k={k} exceeds host length {len(host)}")
    workers = default_workers() if workers is None else workers
    start = time.perf_counter()
    patterns = [
        tuple(p) for p in (enumerate_cyclic_classes(k) if circular else enumerate_patterns(k))
    ]
    jobs = [(tuple(host), chunk, circular) for chunk in _chunks(patterns, workers)]
    failures, witnesses = [], {}
    for chunk_result in _fan_out(_scan, jobs, workers):
        for p, w in chunk_result:
            if w is None:
                failures.append(Permutation(p))
            elif keep_witnesses:
                witnesses[Permutation(p)] = w
    return VerificationReport(
        host=host,
        k=k,
        mode="circular" if circular else "linear",
        total_patterns=factorial(k),
        total_classes=len(patterns) if circular else None,
        failures=failures,
        witnesses=witnesses if keep_witnesses else None,
        elapsed=time.perf_counter() - start,
    )


def verify_superpattern(
    pi: Sequence[int], k: int, workers: int | None = None, keep_witnesses: bool = True
) -> VerificationReport:
    """Check that ``pi`` contains every permutation of length k."""
    return _verify(pi, k, False, workers, keep_witnesses)


def verify_circular_superpattern(
    pi: Sequence[int], k: int, workers: int | None = None, keep_witnesses: bool = True
) -> VerificationReport:
    """Check that ``pi`` contains some rotation of every permutation of length k.

    Iterates the (k-1)! rotation classes; each class is tried in all k
    rotations, and witnesses record the rotation relative to the class
    representative (which starts with k).
    """
    return _verify(pi, k, True, workers, keep_witnesses)


# -- minimal length search ----------------------------------------------------


@dataclass
class SearchResult:
    k: int
    mode: str
    status: str  # "found", "budget_exhausted" or "limit_reached"
    minimal_length: int | None
    example: Permutation | None
    lengths_refuted: list[tuple[int, int]] = field(default_factory=list)
    nodes: int = 0
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "type": "search",
            "k": self.k,
            "mode": self.mode,
            "status": self.status,
            "minimal_length": self.minimal_length,
            "example": None if self.example is None else format_line(self.example),
            "lengths_refuted": [list(pair) for pair in self.lengths_refuted],
            "elapsed": self.elapsed,
        }


def _search_chunk(n, prefix, k, circular, deadline):
    """Scan hosts of length n starting with ``prefix`` in lexicographic order.

    Returns ``(status, example, examined)`` with status "hit", "miss" or
    "timeout".
    """
    find = contains_circular if circular else contains_pattern
    gen = enumerate_cyclic_classes(k) if circular else enumerate_patterns(k)
    patterns = [tuple(p) for p in gen]
    rest = [v for v in range(1, n + 1) if v not in prefix]
    examined = 0
    for tail in permutations(rest):
        if deadline is not None and examined % 256 == 0 and time.monotonic() > deadline:
            return "timeout", None, examined
        host = prefix + tail
        examined += 1
        for i, p in enumerate(patterns):
            if find(host, p) is None:
                # failing patterns move to the front: cheap refutation next time
                if i:
                    patterns.insert(0, patterns.pop(i))
                break
        else:
            return "hit", host, examined
    return "miss", None, examined


def min_superpattern_length(
    k: int,
    mode: str = "circular",
    n_limit: int | None = None,
    budget: Budget | None = None,
    workers: int | None = None,
) -> SearchResult:
    """Smallest n for which some permutation of length n is a (circular) k-superpattern.

    Lengths are tried from k upward; each length is scanned in lexicographic
    order and the first verifying permutation is the example. Every shorter
    length is refuted exhaustively and reported with its candidate count.
    If the budget runs out the result is marked ``budget_exhausted``.
    """
    if mode not in ("linear", "circular"):
        raise ValueError(f"mode must be 'linear' or 'circular', got {mode!r}")
    _check_k(k)
    circular = mode == "circular"
    if n_limit is None:
        # a construction of this length is known to exist
        n_limit = ceil((k * k - 2 * k + 4) / 2) if circular else ceil((k * k + 1) / 2)
        n_limit = max(n_limit, k)
    budget = budget or Budget()
    workers = default_workers() if workers is None else workers
    start = time.perf_counter()
    deadline = None if budget.max_seconds is None else time.monotonic() + budget.max_seconds
    result = SearchResult(k=k, mode=mode, status="limit_reached", minimal_length=None, example=None)
    for n in range(k, n_limit + 1):
        depth = 1 if n <= 6 else 2
        prefixes = list(permutations(range(1, n + 1), depth))
        jobs = [(n, p, k, circular, deadline) for p in prefixes]
        hit = None
        for status, example, examined in _fan_out(_search_chunk, jobs, workers):
            result.nodes += examined
            if status == "timeout" or (
                budget.max_nodes is not None and result.nodes > budget.max_nodes
            ):
                result.status = "budget_exhausted"
                result.elapsed = time.perf_counter() - start
                return result
            if status == "hit":
                hit = example
                break
        if hit is not None:
            result.status = "found"
            result.minimal_length = n
            result.example = Permutation(hit)
            break
        log.info("length %d refuted (%d candidates)", n, factorial(n))
        result.lengths_refuted.append((n, factorial(n)))
    result.elapsed = time.perf_counter() - start
    return result


# -- theorem and claim checks -------------------------------------------------


@dataclass
class CheckReport:
    """Outcome of a family of exhaustive checks.

    ``families`` maps a check name to ``{"asserted", "checked", "violations"}``;
    only asserted families decide ``passed``. ``kind`` separates proved
    results ("theorem") from conjectures ("claim"), whose counterexamples are
    findings rather than defects.
    """

    suite: str
    k: int
    kind: str
    families: dict[str, dict] = field(default_factory=dict)
    notes: dict[str, object] = field(default_factory=dict)
    elapsed: float = 0.0

    def add(self, name: str, asserted: bool = True) -> dict:
        fam = {"asserted": asserted, "checked": 0, "violations": []}
        self.families[name] = fam
        return fam

    @property
    def passed(self) -> bool:
        return all(not f["violations"] for f in self.families.values() if f["asserted"])

    def to_dict(self) -> dict:
        return {
            "type": "check",
            "suite": self.suite,
            "k": self.k,
            "kind": self.kind,
            "verdict": "pass" if self.passed else ("finding" if self.kind == "claim" else "fail"),
            "families": self.families,
            "notes": self.notes,
            "elapsed": self.elapsed,
        }


def check_identities(k: int) -> CheckReport:
    """Lift identities, odd-k circular non-vanishing, and the shifted-score relations over S_k."""
    if not 1 <= k <= 8:
        raise ValueError(f"k must be between 1 and 8, got {k}")
    start = time.perf_counter()
    report = CheckReport("identities", k, "theorem")
    lin = report.add("lift")
    # at k = 1 the only cyclic pair is (x, x), whose cost does not flip under lifting
    circ = report.add("circular_lift", asserted=k >= 2)
    odd = report.add("circular_nonzero", asserted=k % 2 == 1)
    shifted = report.add("shifted_score")
    zero_example = None
    for sigma in permutations(range(1, k + 1)):
        up = lift(sigma)
        s, s_up = score(sigma).total, score(up).total
        lin["checked"] += 1
        if s + s_up != 1:
            lin["violations"].append(_key(sigma))
        c = circular_score(sigma).total
        circ["checked"] += 1
        if c + circular_score(up).total != 0:
            circ["violations"].append(_key(sigma))
        odd["checked"] += 1
        if c == 0:
            if k % 2:
                odd["violations"].append(_key(sigma))
            elif zero_example is None:
                zero_example = _key(sigma)
        if s in (0, 1):
            shifted["checked"] += 1
            even_first = parity_sign(sigma[0]) == 1
            target = sigma if even_first else up
            expected = {(0, True): -1, (0, False): 0, (1, True): 0, (1, False): -1}[s, even_first]
            if shifted_score(target).total != expected:
                shifted["violations"].append(_key(sigma))
    if k % 2 == 0:
        report.notes["circular_zero_example"] = zero_example
    report.elapsed = time.perf_counter() - start
    return report


def check_embedding_theorems(k: int) -> CheckReport:
    """Exact and circular embeddings of S_k into finite zigzag words.

    ``exact_zz(k,k+1)``: sigma or its lift is an exact subsequence of
    ``zz(k, k+1)`` (every k). ``cyclic_exact``: odd k, some rotation of sigma
    or its lift is an exact subsequence of ``zz(k-1, k+1)``; asserted under
    pattern-rotation semantics, reported under word-cyclic semantics.
    ``circular_order_isomorphic``: even k, some rotation of sigma is
    order-isomorphic to a subsequence of ``zz(k-1, k+1)``.
    """
    if not 1 <= k <= 7:
        raise ValueError(f"k must be between 1 and 7, got {k}")
    start = time.perf_counter()
    report = CheckReport("embeddings", k, "theorem")
    linear_word = tuple(zz(k, k + 1))
    fam_a = report.add("exact_zz(k,k+1)")
    fam_b = fam_bw = fam_c = None
    if k >= 2:
        short_word = tuple(zz(k - 1, k + 1))
        if k % 2:
            fam_b = report.add("cyclic_exact[pattern-rotation]")
            fam_bw = report.add("cyclic_exact[word-cyclic]", asserted=False)
        else:
            fam_c = report.add("circular_order_isomorphic")
    for sigma in permutations(range(1, k + 1)):
        up = lift(sigma)
        fam_a["checked"] += 1
        if exact_subsequence(linear_word, sigma) is None and exact_subsequence(linear_word, up) is None:
            fam_a["violations"].append(_key(sigma))
        if fam_b is not None:
            for fam, cyc in ((fam_b, False), (fam_bw, True)):
                fam["checked"] += 1
                if (
                    exact_cyclic_subsequence(short_word, sigma, word_cyclic=cyc) is None
                    and exact_cyclic_subsequence(short_word, up, word_cyclic=cyc) is None
                ):
                    fam["violations"].append(_key(sigma))
        if fam_c is not None:
            fam_c["checked"] += 1
            if contains_circular(short_word, sigma) is None:
                fam_c["violations"].append(_key(sigma))
    report.elapsed = time.perf_counter() - start
    return report


def _zzc_lemma_patterns(k: int) -> dict[str, list[Permutation]]:
    decreasing = [Permutation(tuple(range(k - 1, 0, -1)) + (k,))]
    layered = {2: [], 3: []}
    for rest in permutations(range(1, k)):
        if rest[-1] in layered and is_layered(rest)[0]:
            layered[rest[-1]].append(Permutation(rest + (k,)))
    return {
        "lemma_decreasing": decreasing,
        "lemma_layered_2": layered[2],
        "lemma_layered_3": layered[3],
    }


def check_zzc_claim(k: int, workers: int | None = None) -> CheckReport:
    """Computational check that the zzc(k) permutation is a circular k-superpattern.

    Besides the full verification, the specific pattern families singled out
    in the argument for the construction (a decreasing run closed by k, and
    layered prefixes ending in 2 or 3) are checked by name. Failures here are
    findings about a conjecture.
    """
    start = time.perf_counter()
    construction = zzc_permutation(k)
    gamma = construction.permutation
    report = CheckReport("claim-zzc", k, "claim")
    full = verify_circular_superpattern(gamma, k, workers=workers)
    fam = report.add("circular_superpattern")
    fam["checked"] = full.total_classes
    fam["violations"] = [_key(p) for p in full.failures]
    for name, pats in _zzc_lemma_patterns(k).items():
        fam = report.add(name)
        for p in pats:
            fam["checked"] += 1
            if contains_circular(gamma, p) is None:
                fam["violations"].append(_key(p))
    report.notes["permutation"] = format_line(gamma)
    report.notes["word"] = format_line(construction.source_word)
    report.notes["length"] = len(gamma)
    report.notes["witnesses_valid"] = full.revalidate()
    report.notes["verification_digest"] = digest(full)
    report.elapsed = time.perf_counter() - start
    return report


def check_circular_construction(k: int, workers: int | None = None) -> CheckReport:
    """Prepend a maximum to the linear (k-1) zigzag superpattern and verify the result."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    start = time.perf_counter()
    base = Permutation((1,)) if k == 2 else ev_linear_superpattern(k - 1).permutation
    gamma = circular_from_linear(base, k).permutation
    report = CheckReport("circ-from-linear", k, "theorem")
    full = verify_circular_superpattern(gamma, k, workers=workers)
    fam = report.add("circular_superpattern")
    fam["checked"] = full.total_classes
    fam["violations"] = [_key(p) for p in full.failures]
    bound = ceil(((k - 1) ** 2 + 1) / 2) + 1
    fam = report.add("length_matches_bound")
    fam["checked"] = 1
    if len(gamma) != bound:
        fam["violations"].append(f"length {len(gamma)} != {bound}")
    report.notes["permutation"] = format_line(gamma)
    report.notes["length"] = len(gamma)
    report.notes["witnesses_valid"] = full.revalidate()
    report.notes["verification_digest"] = digest(full)
    report.elapsed = time.perf_counter() - start
    return report
