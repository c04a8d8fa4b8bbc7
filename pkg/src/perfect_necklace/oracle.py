"""Construction-agnostic checks: perfectness, exhaustive search, de Bruijn reference.

Nothing in this module calls the generator. The search and the k=1
reference are deliberately naive so they can be trusted by reading them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .core import Params, Word
from .errors import (
    BudgetExceededError,
    CapacityError,
    InvalidInputError,
    InvalidParamsError,
    SearchExhaustedError,
)

WRONG_COUNT = "WRONG_COUNT"
RESIDUE_COLLISION = "RESIDUE_COLLISION"
WRONG_LENGTH = "WRONG_LENGTH"

DEFAULT_BUDGET = 10**7
DEFAULT_MAX_LENGTH = 24
FILTER_MAX_LENGTH = 16
FILTER_MAX_CANDIDATES = 2**17
FKM_GUARD = 10**7

# window codes are kept in int64
_CODE_LIMIT = 2**62


@dataclass(frozen=True)
class Violation:
    """One reason a word makes the input imperfect.

    ``word`` is None for a WRONG_LENGTH violation. ``found`` and
    ``expected`` are occurrence counts (or lengths for WRONG_LENGTH);
    ``residues`` lists the start positions mod k.
    """

    word: Word | None
    reason: str
    found: int = 0
    expected: int = 0
    residues: Tuple[int, ...] = ()


@dataclass
class PerfectnessReport:
    params: Params
    is_perfect: bool
    violations: List[Violation]
    input_length: int
    _codes: np.ndarray = field(repr=False, default=None)

    @cached_property
    def occurrences(self) -> Dict[Word, List[int]]:
        """Map every word of length n to the sorted 0-based circular start positions."""
        s, n = self.params.s, self.params.n
        order = np.argsort(self._codes, kind="stable")
        counts = np.bincount(self._codes, minlength=s**n)
        result = {}
        start = 0
        for code, word in enumerate(itertools.product(range(s), repeat=n)):
            stop = start + int(counts[code])
            result[word] = order[start:stop].tolist()
            start = stop
        return result

    def window_pairs(self) -> List[Tuple[Word, int]]:
        """``(window(i), i mod k)`` for every position i, in position order."""
        n, k, s = self.params.n, self.params.k, self.params.s
        words = list(itertools.product(range(s), repeat=n))
        return [(words[c], i % k) for i, c in enumerate(self._codes.tolist())]


def window_codes(x: Sequence[int], s: int, n: int) -> np.ndarray:
    """Base-s value of the circular window starting at each position of ``x``."""
    arr = np.asarray(x, dtype=np.int64)
    L = len(arr)
    codes = np.zeros(L, dtype=np.int64)
    if L == 0:
        return codes
    idx = np.arange(L)
    for j in range(n):
        codes = codes * s + arr[(idx + j) % L]
    return codes


def check_perfect(x: Sequence[int], p: Params) -> PerfectnessReport:
    """Check that every length-n word occurs k times in the circular word ``x``
    at start positions that are pairwise distinct mod k.

    Symbols outside ``range(s)`` raise InvalidInputError. A wrong length is
    reported as a WRONG_LENGTH violation rather than raised.
    """
    s, n, k = p.s, p.n, p.k
    x = list(x)
    for a in x:
        if isinstance(a, bool) or not isinstance(a, (int, np.integer)) or not 0 <= a < s:
            raise InvalidInputError(f"symbol {a!r} is not in range(0, {s})")
    if s**n * k > _CODE_LIMIT:
        raise CapacityError(f"s^n*k = {s}^{n}*{k} is too large to verify")

    L = len(x)
    expected_length = s**n * k
    codes = window_codes(x, s, n)
    residues = np.arange(L) % k
    per_word = np.bincount(codes, minlength=s**n)
    per_slot = np.bincount(codes * k + residues, minlength=s**n * k).reshape(s**n, k)

    violations = []
    if L != expected_length:
        violations.append(Violation(None, WRONG_LENGTH, L, expected_length))
    bad_count = np.nonzero(per_word != k)[0]
    collide = np.nonzero((per_word == k) & (per_slot.max(axis=1) > 1))[0]
    for code in sorted(bad_count.tolist() + collide.tolist()):
        word = _decode(code, s, n)
        if per_word[code] != k:
            violations.append(Violation(word, WRONG_COUNT, int(per_word[code]), k))
        else:
            res = tuple(sorted(int(r) for r in residues[codes == code]))
            violations.append(Violation(word, RESIDUE_COLLISION, k, k, res))
    return PerfectnessReport(p, not violations, violations, L, codes)


def _decode(code: int, s: int, n: int) -> Word:
    out = []
    for _ in range(n):
        code, a = divmod(code, s)
        out.append(a)
    return tuple(reversed(out))


def is_perfect_naive(x: Sequence[int], p: Params) -> bool:
    """Tuple-keyed set check, used to cross-check :func:`check_perfect`."""
    s, n, k = p.s, p.n, p.k
    L = len(x)
    if L != s**n * k:
        return False
    seen = set()
    for i in range(L):
        key = (tuple(x[(i + j) % L] for j in range(n)), i % k)
        if key in seen:
            return False
        seen.add(key)
    return True


def brute_force_greatest(
    p: Params, budget: int = DEFAULT_BUDGET, max_length: int = DEFAULT_MAX_LENGTH
) -> Word:
    """Lexicographically greatest (n,k)-perfect necklace by depth-first search.

    Symbols are tried from s-1 down to 0, so the first accepted leaf is the
    greatest string. A prefix is dropped as soon as one of its complete
    (non-wrapping) windows repeats a (word, position mod k) slot. Leaves
    are accepted by :func:`check_perfect` on the circular string.

    ``budget`` bounds the number of visited nodes; ``max_length`` bounds
    ``s**n * k``. Exceeding either raises a CapacityError.
    """
    s, n, k = p.s, p.n, p.k
    L = s**n * k
    if L > max_length:
        raise CapacityError(
            f"necklace length {L} exceeds the search limit of {max_length} symbols"
        )
    x = [0] * L
    used = set()
    visited = 0

    def dfs(m):
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceededError(f"search budget of {budget} nodes exhausted")
        if m == L:
            return check_perfect(x, p).is_perfect
        for a in range(s - 1, -1, -1):
            x[m] = a
            start = m - n + 1
            if start >= 0:
                key = (tuple(x[start : m + 1]), start % k)
                if key in used:
                    continue
                used.add(key)
                if dfs(m + 1):
                    return True
                used.discard(key)
            elif dfs(m + 1):
                return True
        return False

    if not dfs(0):
        raise SearchExhaustedError(f"no ({n},{k})-perfect necklace over {s} symbols found")
    return tuple(x)


def brute_force_filter(
    p: Params, max_length: int = FILTER_MAX_LENGTH, max_candidates: int = FILTER_MAX_CANDIDATES
) -> Word:
    """Greatest perfect necklace by scanning every string in decreasing order.

    An oracle for :func:`brute_force_greatest`. Limited to lengths
    ``s**n * k <= max_length`` and to ``s**length <= max_candidates`` strings.
    """
    L = p.s**p.n * p.k
    if L > max_length:
        raise CapacityError(f"length {L} exceeds the filter limit of {max_length}")
    if p.s**L > max_candidates:
        raise CapacityError(
            f"{p.s}^{L} candidate strings exceed the filter limit of {max_candidates}"
        )
    for x in itertools.product(range(p.s - 1, -1, -1), repeat=L):
        if is_perfect_naive(x, p):
            return x
    raise SearchExhaustedError(f"no perfect necklace found for {p}")


def _is_dominant_aperiodic(w: Word) -> bool:
    d = len(w)
    rotations = [w[i:] + w[:i] for i in range(1, d)]
    aperiodic = all(r != w for r in rotations)
    return aperiodic and all(w > r for r in rotations)


def fkm_reference(s: int, n: int, guard: int = FKM_GUARD) -> Word:
    """Greatest de Bruijn necklace of order n by the Fredricksen-Maiorana rule.

    Collects every aperiodic word that is greater than all its rotations and
    whose length divides n, orders them by their n-periodic extension,
    greatest first, and concatenates.
    """
    if s < 2 or n < 1:
        raise InvalidParamsError(f"need s >= 2 and n >= 1, got s={s}, n={n}")
    if s**n > guard:
        raise CapacityError(f"s^n = {s}^{n} exceeds the guard of {guard}")
    words = []
    for d in range(1, n + 1):
        if n % d:
            continue
        for w in itertools.product(range(s), repeat=d):
            if _is_dominant_aperiodic(w):
                words.append(w)
    words.sort(key=lambda w: w * (n // len(w)), reverse=True)
    return tuple(a for w in words for a in w)
