import itertools

from perfect_necklace import Pair, Params


def w(text):
    return tuple(int(c) for c in text)


def P(text, residue=0):
    return Pair(w(text), residue)


def valid_params(s_values, n_values, extra_multiples=(2,)):
    """(s, n, k) with k | n, plus k = n*t for t in ``extra_multiples``."""
    for s in s_values:
        for n in n_values:
            ks = {d for d in range(1, n + 1) if n % d == 0}
            ks.update(n * t for t in extra_multiples)
            for k in sorted(ks):
                yield Params(s, n, k)


def all_pairs(p, residues=None):
    residues = range(p.k) if residues is None else residues
    for word in itertools.product(range(p.s), repeat=p.n):
        for u in residues:
            yield Pair(word, u)
