"""Streaming construction of the lexicographically greatest perfect necklace.

The chain starts at ``<(s-1)^n, 0>`` and applies :func:`~.core.theta`
until it reaches ``<0^n, 0>``. Keeping only the maximal pairs of the chain
gives every maximal pair in decreasing order. Replacing each of them by its
Lyndon pair (reduction when k | n, expansion when n | k) and concatenating
the words yields the necklace, of length ``s**n * k``.

Nothing here materialises the necklace: every stream holds O(n) state.
"""
from __future__ import annotations

import sys
from typing import Iterator

from .core import (
    LyndonPair,
    Mode,
    Pair,
    Params,
    _is_maximal,
    _reduce_word,
    _theta_word,
)
from .errors import CapacityError, TheoremViolation

DEFAULT_GUARD = 10**8


class ChainCursor:
    """Position on the chain ``theta^i <(s-1)^n, 0>``.

    ``step_index`` is the exponent ``i``. :meth:`advance` returns False once
    the cursor sits on ``<0^n, 0>``.
    """

    def __init__(self, params: Params):
        self.params = params
        self.current = Pair((params.s - 1,) * params.n, 0)
        self.step_index = 0

    @property
    def exhausted(self) -> bool:
        return not any(self.current.word)

    def advance(self) -> bool:
        if self.exhausted:
            return False
        self.current = Pair(_theta_word(self.current.word, self.params), 0)
        self.step_index += 1
        return True

    def __repr__(self):
        return f"ChainCursor({self.params}, step={self.step_index}, current={self.current})"


def chain_iter(p: Params) -> Iterator[Pair]:
    """Yield ``<(s-1)^n, 0>``, then theta of each previous pair, ending at ``<0^n, 0>``."""
    cursor = ChainCursor(p)
    yield cursor.current
    while cursor.advance():
        yield cursor.current


def maximal_list(p: Params) -> Iterator[Pair]:
    """The maximal residue-0 pairs, in strictly decreasing pair order."""
    for a in chain_iter(p):
        if _is_maximal(a.word, 0, p):
            yield a


def _lyndon_word(word, p: Params):
    if p.mode is Mode.K_DIVIDES_N:
        return _reduce_word(word, p.k)
    return word * (p.k // p.n)


def lyndon_list(p: Params, check_neighbors: bool = True) -> Iterator[LyndonPair]:
    """Lyndon pairs of :func:`maximal_list`, in the same order.

    With ``check_neighbors`` each maximal word ``A`` followed by ``B`` is
    checked to be a prefix of ``lyndon(A) + lyndon(B)``; a failure raises
    :class:`TheoremViolation`.
    """
    prev_word = prev_lyndon = None
    for a in maximal_list(p):
        lw = _lyndon_word(a.word, p)
        if check_neighbors and prev_word is not None:
            joined = prev_lyndon + lw
            if joined[: p.n] != prev_word:
                raise TheoremViolation(
                    f"{prev_word} is not a prefix of its Lyndon word followed by the next one"
                )
        prev_word, prev_lyndon = a.word, lw
        yield LyndonPair(lw)


def necklace_length(p: Params) -> int:
    """``s**n * k``; raises CapacityError beyond the platform word size."""
    length = p.s**p.n * p.k
    if length > sys.maxsize:
        raise CapacityError(f"necklace length s^n*k = {p.s}^{p.n}*{p.k} exceeds {sys.maxsize}")
    return length


class NecklaceStream:
    """Iterable over the symbols of the necklace for ``params``.

    Iterating yields ints one at a time; :meth:`blocks` yields the Lyndon
    words instead. ``emitted`` counts symbols produced so far. A stream can
    be iterated once.
    """

    def __init__(self, params: Params, guard: int | None = None):
        self.params = params
        self.guard = DEFAULT_GUARD if guard is None else guard
        self.total = necklace_length(params)
        if self.total > self.guard:
            raise CapacityError(
                f"necklace length {self.total} exceeds the emission guard of {self.guard} symbols"
            )
        self.emitted = 0
        self._started = False

    def blocks(self) -> Iterator[tuple]:
        if self._started:
            raise RuntimeError("a NecklaceStream can only be consumed once")
        self._started = True
        for lp in lyndon_list(self.params):
            self.emitted += len(lp.word)
            if self.emitted > self.total:
                raise TheoremViolation(f"emitted more than s^n*k = {self.total} symbols")
            yield lp.word
        if self.emitted != self.total:
            raise TheoremViolation(f"emitted {self.emitted} symbols, expected {self.total}")

    def __iter__(self) -> Iterator[int]:
        for block in self.blocks():
            yield from block

    def __len__(self):
        return self.total

    def collect(self) -> tuple:
        """Materialise the whole necklace as a tuple."""
        return tuple(self)


def build_necklace(p: Params, guard: int | None = None) -> NecklaceStream:
    return NecklaceStream(p, guard)
