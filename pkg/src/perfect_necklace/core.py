"""Words, pairs in Sigma^n x Z_k and the operations on them.

Words are tuples of ints in ``range(s)``. Positions are 0-based
internally; where an operation is naturally described with 1-based
positions (``a_1 .. a_n``) the translation is noted next to the code.

Two orders are involved:

* the lexicographic order on words, which is plain tuple comparison;
* the pair order, written ``succ`` below: a smaller residue wins, and on
  equal residues the lexicographically greater word wins. ``<(s-1)^n, 0>``
  is the greatest pair and ``<0^n, k-1>`` the least.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .errors import (
    DomainError,
    InvalidInputError,
    InvalidParamsError,
    NoPredecessorError,
    PreconditionError,
)

Word = Tuple[int, ...]


class Mode(enum.Enum):
    K_DIVIDES_N = "k|n"
    N_DIVIDES_K = "n|k"


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Params:
    """Alphabet size ``s``, word length ``n`` and modulus ``k``.

    Requires ``k | n`` or ``n | k``. When ``n == k`` both hold and the mode
    is ``K_DIVIDES_N``.
    """

    s: int
    n: int
    k: int

    def __post_init__(self):
        for name in ("s", "n", "k"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidParamsError(f"{name} must be an integer, got {value!r}")
        if self.s < 2:
            raise InvalidParamsError(f"alphabet size s must be >= 2, got {self.s}")
        if self.n < 1:
            raise InvalidParamsError(f"word length n must be >= 1, got {self.n}")
        if self.k < 1:
            raise InvalidParamsError(f"modulus k must be >= 1, got {self.k}")
        if self.n % self.k and self.k % self.n:
            raise InvalidParamsError(
                f"k must divide n or n must divide k (got n={self.n}, k={self.k})"
            )

    @property
    def mode(self) -> Mode:
        return Mode.K_DIVIDES_N if self.n % self.k == 0 else Mode.N_DIVIDES_K

    @property
    def period(self) -> int:
        """Length of a full rotation cycle of a pair, ``max(n, k)``."""
        return max(self.n, self.k)

    def check_word(self, word: Sequence[int], length: int | None = None) -> Word:
        """Return ``word`` as a tuple after checking its symbols (and length)."""
        word = tuple(word)
        if length is not None and len(word) != length:
            raise InvalidInputError(f"expected a word of length {length}, got {len(word)}")
        for a in word:
            if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < self.s:
                raise InvalidInputError(f"symbol {a!r} is not in range(0, {self.s})")
        return word


@dataclass(frozen=True, order=False)
class Pair:
    """The pair ``<word, residue>`` of Sigma^n x Z_k."""

    word: Word
    residue: int = 0

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))

    def __str__(self):
        return f"<{_digits(self.word)},{self.residue}>"


@dataclass(frozen=True)
class LyndonPair:
    """Residue-0 pair obtained by reducing (k|n) or expanding (n|k) a maximal pair.

    Its word has length ``p`` with ``k | p | n`` in the first case and
    length ``k`` in the second.
    """

    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))

    @property
    def residue(self) -> int:
        return 0

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return f"<{_digits(self.word)},0>"


def _digits(word: Word) -> str:
    if all(a < 10 for a in word):
        return "".join(map(str, word))
    return ",".join(map(str, word))


def check_pair(a: Pair, p: Params) -> Pair:
    """Validate ``a`` as an element of Sigma^n x Z_k for ``p``."""
    if not isinstance(a, Pair):
        raise InvalidInputError(f"expected a Pair, got {type(a).__name__}")
    p.check_word(a.word, p.n)
    if isinstance(a.residue, bool) or not isinstance(a.residue, int) or not 0 <= a.residue < p.k:
        raise InvalidInputError(f"residue {a.residue!r} is not in range(0, {p.k})")
    return a


def cmp_succ(a: Pair, b: Pair, p: Params) -> Ordering:
    """Compare two pairs in the pair order.

    GREATER means ``a`` succ ``b``: ``a`` has the smaller residue, or the
    same residue and the lexicographically greater word.
    """
    check_pair(a, p)
    check_pair(b, p)
    return _cmp(a, b)


def _cmp(a: Pair, b: Pair) -> Ordering:
    if a.residue != b.residue:
        return Ordering.GREATER if a.residue < b.residue else Ordering.LESS
    if a.word == b.word:
        return Ordering.EQUAL
    return Ordering.GREATER if a.word > b.word else Ordering.LESS


def succ(a: Pair, b: Pair, p: Params) -> bool:
    """True when ``a`` is strictly greater than ``b`` in the pair order."""
    return cmp_succ(a, b, p) is Ordering.GREATER


def rotate_right(a: Pair, p: Params) -> Pair:
    """``<a1 a2..an, u>`` -> ``<a2..an a1, u+1>``."""
    check_pair(a, p)
    w = a.word
    return Pair(w[1:] + w[:1], (a.residue + 1) % p.k)


def rotate_left(a: Pair, p: Params) -> Pair:
    """``<a1..an, u>`` -> ``<an a1..a(n-1), u-1>``."""
    check_pair(a, p)
    w = a.word
    return Pair(w[-1:] + w[:-1], (a.residue - 1) % p.k)


def _rotations(word: Word, residue: int, p: Params):
    n = len(word)
    for i in range(p.period):
        r = i % n
        yield Pair(word[r:] + word[:r], (residue + i) % p.k)


def rotation_class(a: Pair, p: Params) -> frozenset:
    """All pairs reachable from ``a`` by rotating, i.e. its necklace in Sigma^n x Z_k."""
    check_pair(a, p)
    return frozenset(_rotations(a.word, a.residue, p))


def is_maximal(a: Pair, p: Params) -> bool:
    """True when no rotation of ``a`` is strictly greater than ``a``.

    A maximal pair may coincide with one of its rotations (periodic words).
    """
    check_pair(a, p)
    return _is_maximal(a.word, a.residue, p)


def _is_maximal(word: Word, residue: int, p: Params) -> bool:
    if residue == 0:
        if p.mode is Mode.N_DIVIDES_K:
            # the only residue-0 rotation is the pair itself
            return True
        n, k = p.n, p.k
        return all(word[i:] + word[:i] <= word for i in range(k, n, k))
    # some rotation reaches residue 0 and is therefore greater
    return False


def is_maximal_bruteforce(a: Pair, p: Params) -> bool:
    """Same as :func:`is_maximal` but by comparing against the whole rotation class."""
    check_pair(a, p)
    return all(_cmp(r, a) is not Ordering.GREATER for r in _rotations(a.word, a.residue, p))


def pair_power(a: Pair, t: int, p: Params) -> Tuple[Pair, Params]:
    """``<A, u>^t = <A^t, t*u>``, returned together with the parameters of Sigma^(tn) x Z_k."""
    check_pair(a, p)
    if t < 1:
        raise InvalidInputError(f"power must be >= 1, got {t}")
    q = Params(p.s, p.n * t, p.k)
    return Pair(a.word * t, (a.residue * t) % p.k), q


def reduce(a: Pair, p: Params) -> LyndonPair:
    """Shortest prefix ``A_q`` with ``k | q``, ``q | n`` and ``A == A_q^(n/q)``."""
    check_pair(a, p)
    if p.mode is not Mode.K_DIVIDES_N:
        raise PreconditionError("reduction requires k | n")
    if a.residue != 0:
        raise PreconditionError("reduction is defined on residue-0 pairs")
    return LyndonPair(_reduce_word(a.word, p.k))


def _reduce_word(word: Word, k: int) -> Word:
    n = len(word)
    for q in range(k, n, k):
        if n % q == 0 and word[:q] * (n // q) == word:
            return word[:q]
    return word


def expand(a: Pair, p: Params) -> LyndonPair:
    """``<A, 0>`` -> ``<A^(k/n), 0>``, a word of length k."""
    check_pair(a, p)
    if p.mode is not Mode.N_DIVIDES_K and p.n != p.k:
        raise PreconditionError("expansion requires n | k")
    if a.residue != 0:
        raise PreconditionError("expansion is defined on residue-0 pairs")
    return LyndonPair(a.word * (p.k // p.n))


def lyndon_of(a: Pair, p: Params) -> LyndonPair:
    """Reduction or expansion of a residue-0 pair, whichever the mode calls for."""
    if p.mode is Mode.K_DIVIDES_N:
        return reduce(a, p)
    return expand(a, p)


def is_lyndon_pair(w: LyndonPair, p: Params) -> bool:
    """True when ``w`` is strictly greater than every other rotation of itself.

    Rotations are taken in Sigma^|w| x Z_k.
    """
    q = Params(p.s, len(w.word), p.k)
    q.check_word(w.word)
    me = Pair(w.word, 0)
    rotations = list(_rotations(w.word, 0, q))
    return all(_cmp(me, r) is Ordering.GREATER for r in rotations[1:])


def theta(a: Pair, p: Params) -> Pair:
    """Successor of a residue-0 pair on the decreasing chain.

    With ``i`` the last (1-based) position holding a nonzero symbol,
    ``j = i + ((n - i) mod k)`` (the least multiple of k that is >= i when
    k | n, and n when n | k) and ``q = n // j``, the result is
    ``[A_{i-1} (a_i - 1) (s-1)^{j-i}]^q A_{n-qj}``.
    """
    check_pair(a, p)
    if a.residue != 0:
        raise DomainError("theta is defined on residue-0 pairs only")
    return Pair(_theta_word(a.word, p), 0)


def _theta_word(word: Word, p: Params) -> Word:
    n, k, top = p.n, p.k, p.s - 1
    i = n
    while i and word[i - 1] == 0:
        i -= 1
    if i == 0:
        raise DomainError("theta is undefined at the all-zero word")
    j = i + (n - i) % k
    q = n // j
    block = word[: i - 1] + (word[i - 1] - 1,) + (top,) * (j - i)
    # n - qj < i, so the tail prefix of A equals the same prefix of the block
    return block * q + word[: n - q * j]


def theta_preimage(a: Pair, p: Params) -> Pair:
    """Predecessor of ``a`` on the chain, a preimage of ``a`` under :func:`theta`.

    When n | k theta is a bijection on residue-0 pairs and this is its
    inverse. When k | n theta is not injective; the preimage is read off the
    factorization ``A = (A_u (s-1)^(r-u))^w A_v`` with ``r`` the least
    multiple of k for which it exists, ``r - k < u <= r`` and ``a_u < s-1``.
    """
    check_pair(a, p)
    if a.residue != 0:
        raise DomainError("theta_preimage is defined on residue-0 pairs only")
    word, n, k, top = a.word, p.n, p.k, p.s - 1
    if all(x == top for x in word):
        raise DomainError("the all-(s-1) word has no predecessor")

    if p.mode is Mode.N_DIVIDES_K:
        u = _last_below(word, n, top)
        return Pair(word[: u - 1] + (word[u - 1] + 1,) + (0,) * (n - u), 0)

    for r in range(k, n + 1, k):
        w, v = divmod(n, r)
        head = word[:r]
        if head * w + head[:v] != word:
            continue
        u = _last_below(head, r, top)
        # strict lower bound: theta produces u in (j-k, j]
        if u and r - k < u:
            return Pair(word[: u - 1] + (word[u - 1] + 1,) + (0,) * (n - u), 0)
    raise NoPredecessorError(f"{_digits(word)} is not the theta image of any pair")


def _last_below(word: Word, length: int, top: int) -> int:
    """1-based index of the last symbol < top among the first ``length``, or 0."""
    u = length
    while u and word[u - 1] == top:
        u -= 1
    return u


def residue_zero_pairs(p: Params) -> Iterable[Pair]:
    """Every ``<A, 0>`` with A in Sigma^n, in decreasing lexicographic order."""
    for w in itertools.product(range(p.s - 1, -1, -1), repeat=p.n):
        yield Pair(w, 0)
