import itertools

import pytest
from hypothesis import given, strategies as st

from helpers import P, all_pairs, w
from perfect_necklace import (
    DomainError,
    InvalidInputError,
    InvalidParamsError,
    LyndonPair,
    Mode,
    NoPredecessorError,
    Ordering,
    Pair,
    Params,
    PreconditionError,
    cmp_succ,
    expand,
    is_maximal,
    reduce,
    rotate_left,
    rotate_right,
    rotation_class,
    theta,
    theta_preimage,
)
from perfect_necklace.core import (
    is_lyndon_pair,
    is_maximal_bruteforce,
    lyndon_of,
    pair_power,
    residue_zero_pairs,
)


# -- Params ------------------------------------------------------------------

@pytest.mark.parametrize("s,n,k,mode", [
    (2, 6, 2, Mode.K_DIVIDES_N),
    (2, 4, 4, Mode.K_DIVIDES_N),
    (3, 2, 8, Mode.N_DIVIDES_K),
    (2, 1, 2, Mode.N_DIVIDES_K),
    (2, 5, 1, Mode.K_DIVIDES_N),
])
def test_params_mode(s, n, k, mode):
    assert Params(s, n, k).mode is mode


@pytest.mark.parametrize("s,n,k", [(1, 2, 2), (2, 0, 1), (2, 2, 0), (2, 3, 2), (2, 4, 6), (2.0, 2, 2)])
def test_params_rejects(s, n, k):
    with pytest.raises(InvalidParamsError):
        Params(s, n, k)


def test_params_error_names_divisibility():
    with pytest.raises(InvalidParamsError, match="divide"):
        Params(2, 3, 2)


def test_check_word():
    p = Params(3, 2, 2)
    assert p.check_word([2, 0]) == (2, 0)
    with pytest.raises(InvalidInputError):
        p.check_word([3, 0])
    with pytest.raises(InvalidInputError):
        p.check_word([1], length=2)


# -- order -------------------------------------------------------------------

def test_cmp_examples():
    p = Params(2, 2, 2)
    assert cmp_succ(P("11"), P("10"), p) is Ordering.GREATER
    assert cmp_succ(P("00", 0), P("11", 1), p) is Ordering.GREATER
    assert cmp_succ(P("10"), P("10"), p) is Ordering.EQUAL
    assert cmp_succ(P("10"), P("11"), p) is Ordering.LESS


def test_top_pair_is_greatest():
    for p in [Params(2, 3, 3), Params(3, 2, 4), Params(2, 4, 2)]:
        top = Pair((p.s - 1,) * p.n, 0)
        for a in all_pairs(p):
            if a != top:
                assert cmp_succ(top, a, p) is Ordering.GREATER


def test_cmp_rejects_bad_pairs():
    p = Params(2, 2, 2)
    with pytest.raises(InvalidInputError):
        cmp_succ(P("110"), P("10"), p)
    with pytest.raises(InvalidInputError):
        cmp_succ(P("11", 2), P("10"), p)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 5) for k in (1, 2, 4) if n % k == 0 or k % n == 0])
def test_order_total_and_transitive(n, k):
    p = Params(2, n, k)
    pairs = list(all_pairs(p))
    for a in pairs:
        for b in pairs:
            ab, ba = cmp_succ(a, b, p), cmp_succ(b, a, p)
            assert ab == -ba
            assert (ab is Ordering.EQUAL) == (a == b)
    # transitivity via a sort-consistency check
    ordered = sorted(pairs, key=lambda a: (-a.residue, a.word))
    for x, y in zip(ordered, ordered[1:]):
        assert cmp_succ(y, x, p) is Ordering.GREATER
    for a, b, c in itertools.product(pairs[:12], repeat=3):
        if cmp_succ(a, b, p) > 0 and cmp_succ(b, c, p) > 0:
            assert cmp_succ(a, c, p) is Ordering.GREATER


# -- rotations -----------------------------------------------------------------

def test_rotation_examples():
    # the textbook instance for <13212,4> uses symbol 3, so s >= 4 here;
    # words follow the rotation definition (right drops a_1 to the end)
    p = Params(4, 5, 5)
    assert rotate_right(P("13212", 4), p) == P("32121", 0)
    assert rotate_left(P("13212", 4), p) == P("21321", 3)
    q = Params(2, 3, 3)
    assert rotate_right(P("000", 0), q) == P("000", 1)


def test_rotation_class_examples():
    p = Params(2, 4, 2)
    cls = rotation_class(P("0000"), p)
    assert cls == {P("0000", 0), P("0000", 1)}
    cls = rotation_class(P("1110"), p)
    assert P("1011", 0) in cls and P("1101", 1) in cls
    assert rotation_class(P("10"), Params(2, 2, 2)) == {P("10", 0), P("01", 1)}


def test_rotation_class_of_reduced_pair_has_full_size():
    p = Params(2, 4, 2)
    assert len(rotation_class(P("1110"), p)) == 4
    assert len(rotation_class(P("1010"), p)) == 2
    q = Params(2, 2, 6)
    assert len(rotation_class(P("10"), q)) == 6


@given(st.data())
def test_rotation_inverse(data):
    s = data.draw(st.integers(2, 4))
    n = data.draw(st.integers(1, 6))
    k = data.draw(st.sampled_from(sorted({d for d in range(1, n + 1) if n % d == 0} | {2 * n, 3 * n})))
    p = Params(s, n, k)
    word = data.draw(st.lists(st.integers(0, s - 1), min_size=n, max_size=n))
    a = Pair(word, data.draw(st.integers(0, k - 1)))
    assert rotate_left(rotate_right(a, p), p) == a
    assert rotate_right(rotate_left(a, p), p) == a
    b = a
    for _ in range(p.period):
        b = rotate_right(b, p)
    assert b == a


# -- maximality ------------------------------------------------------------------

def test_is_maximal_examples():
    p = Params(2, 4, 2)
    assert is_maximal(P("1110"), p)
    assert not is_maximal(P("1011"), p)
    assert not is_maximal(P("1101", 1), p)
    assert is_maximal(P("1010"), p)


@pytest.mark.parametrize("s,n,k", [(2, 1, 2), (2, 2, 6), (3, 2, 4), (4, 1, 3)])
def test_all_residue_zero_pairs_maximal_when_n_divides_k(s, n, k):
    p = Params(s, n, k)
    assert all(is_maximal(a, p) for a in residue_zero_pairs(p))


@pytest.mark.parametrize("s,n,k", [
    (2, 4, 2), (2, 6, 2), (2, 6, 3), (3, 4, 2), (2, 4, 1), (2, 2, 4), (3, 3, 3), (2, 1, 3),
])
def test_fast_maximality_matches_rotation_class(s, n, k):
    p = Params(s, n, k)
    for a in all_pairs(p):
        assert is_maximal(a, p) == is_maximal_bruteforce(a, p), a


@pytest.mark.parametrize("n", [2, 4])
def test_power_maximality(n):
    p = Params(2, n, 2)
    for a in residue_zero_pairs(p):
        b, q = pair_power(a, 2, p)
        assert q == Params(2, 2 * n, 2)
        assert is_maximal(a, p) == is_maximal(b, q)


@pytest.mark.parametrize("s,n,k", [(s, n, k) for s in (2, 3) for n in (4, 6) for k in (1, 2)])
def test_prefix_maximality(s, n, k):
    p = Params(s, n, k)
    top = s - 1
    for a in residue_zero_pairs(p):
        if not any(a.word) or not is_maximal(a, p):
            continue
        for i in range(1, n + 1):
            if a.word[i - 1] == 0:
                continue
            # least multiple of k that is >= i (n when n | k)
            j = -(-i // k) * k if p.mode is Mode.K_DIVIDES_N else n
            b = a.word[: i - 1] + (a.word[i - 1] - 1,) + (top,) * (j - i)
            assert is_maximal(Pair(b, 0), Params(s, j, k)), (a, i, b)


def test_prefix_maximality_spot_values():
    p = Params(7, 6, 3)
    assert is_maximal(P("456123"), p)
    assert is_maximal(P("455"), Params(7, 3, 3))
    assert is_maximal(P("366"), Params(7, 3, 3))


# -- reduction / expansion ---------------------------------------------------------

@pytest.mark.parametrize("word,expected", [
    ("10101010", "10"),
    ("01230123", "0123"),
    ("01234567", "01234567"),
])
def test_reduce_examples(word, expected):
    assert reduce(P(word), Params(8, 8, 2)) == LyndonPair(w(expected))


def test_reduce_respects_k():
    # period 1 is not a multiple of k=2
    assert reduce(P("1111"), Params(2, 4, 2)).word == w("11")
    assert reduce(P("111111"), Params(2, 6, 3)).word == w("111")


def test_reduce_preconditions():
    with pytest.raises(PreconditionError):
        reduce(P("12"), Params(3, 2, 8))
    with pytest.raises(PreconditionError):
        reduce(P("1010", 1), Params(2, 4, 2))


def test_reduce_idempotent():
    p = Params(2, 6, 2)
    for a in residue_zero_pairs(p):
        lp = reduce(a, p)
        again = reduce(Pair(lp.word * (p.n // len(lp.word)), 0), p)
        assert again == lp
        assert again.word * (p.n // len(lp.word)) == a.word


def test_expand_examples():
    assert expand(P("12"), Params(3, 2, 8)) == LyndonPair(w("12121212"))
    assert expand(P("201"), Params(3, 3, 3)) == LyndonPair(w("201"))
    assert expand(P("1"), Params(2, 1, 2)) == LyndonPair(w("11"))


def test_expand_preconditions():
    with pytest.raises(PreconditionError):
        expand(P("1010"), Params(2, 4, 2))
    with pytest.raises(PreconditionError):
        expand(P("10", 1), Params(2, 2, 4))


@pytest.mark.parametrize("s,n,k", [(2, 4, 2), (2, 6, 2), (3, 4, 2), (2, 6, 3), (2, 2, 4), (3, 2, 6), (2, 3, 1)])
def test_lyndon_pairs_strictly_dominate_rotations(s, n, k):
    p = Params(s, n, k)
    for a in residue_zero_pairs(p):
        if is_maximal(a, p):
            assert is_lyndon_pair(lyndon_of(a, p), p)


# -- theta -------------------------------------------------------------------------

@pytest.mark.parametrize("word,expected", [
    ("010000", "000000"),
    ("011000", "010101"),
    ("011101", "011100"),
])
def test_theta_examples(word, expected):
    p = Params(2, 6, 2)
    assert theta(P(word), p) == P(expected)
    assert theta(theta_preimage(P(expected), p), p) == P(expected)


def test_theta_preimage_inverts_chain_examples():
    # 011000 is off the chain; the chain predecessor of 010101 is 100000
    p = Params(2, 6, 2)
    assert theta_preimage(P("000000"), p) == P("010000")
    assert theta_preimage(P("011100"), p) == P("011101")
    assert theta_preimage(P("010101"), p) == P("100000")


def test_theta_not_injective_when_k_divides_n():
    p = Params(2, 4, 2)
    assert theta(P("0100"), p) == theta(P("0001"), p) == P("0000")


def test_theta_domain():
    p = Params(2, 6, 2)
    with pytest.raises(DomainError):
        theta(P("000000"), p)
    with pytest.raises(DomainError):
        theta(P("010000", 1), p)


@pytest.mark.parametrize("s,n,k", [(2, n, k) for n in range(1, 7) for k in range(1, n + 1) if n % k == 0]
                         + [(3, n, k) for n in range(1, 5) for k in range(1, n + 1) if n % k == 0]
                         + [(2, 2, 4), (3, 2, 6), (2, 3, 6)])
def test_theta_strictly_decreases(s, n, k):
    p = Params(s, n, k)
    for a in residue_zero_pairs(p):
        if any(a.word):
            b = theta(a, p)
            assert b.residue == 0
            assert cmp_succ(a, b, p) is Ordering.GREATER


# -- theta_preimage ------------------------------------------------------------------

def test_theta_preimage_examples():
    p = Params(2, 6, 2)
    # forward check of the oracle: theta(100000) = 010101
    assert theta(P("100000"), p) == P("010101")
    assert theta_preimage(P("010101"), p) == P("100000")
    assert theta_preimage(P("111110"), p) == P("111111")
    assert theta_preimage(P("011100"), p) == P("011101")


def test_theta_preimage_errors():
    p = Params(2, 6, 2)
    with pytest.raises(DomainError):
        theta_preimage(P("111111"), p)
    with pytest.raises(DomainError):
        theta_preimage(P("011100", 1), p)
    # 1011 is not in the image of theta for s=2, n=4, k=2
    with pytest.raises(NoPredecessorError):
        theta_preimage(P("1011"), Params(2, 4, 2))


@pytest.mark.parametrize("s,n,k", [(2, n, k) for n in range(1, 7) for k in range(1, n + 1) if n % k == 0]
                         + [(3, n, k) for n in range(1, 5) for k in range(1, n + 1) if n % k == 0]
                         + [(2, 2, 4), (3, 2, 6), (2, 3, 6), (2, 1, 5)])
def test_theta_preimage_round_trip(s, n, k):
    p = Params(s, n, k)
    top = (s - 1,) * n
    for a in residue_zero_pairs(p):
        if a.word != top:
            try:
                b = theta_preimage(a, p)
            except NoPredecessorError:
                assert p.mode is Mode.K_DIVIDES_N and p.k < p.n
                continue
            assert theta(b, p) == a
        if p.mode is Mode.N_DIVIDES_K and any(a.word):
            assert theta_preimage(theta(a, p), p) == a
