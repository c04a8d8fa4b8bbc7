"""Text renderings of words, pairs and necklaces.

PLAIN writes digits when s <= 10 and comma-separated integers otherwise.
BLOCKS is PLAIN with ``|`` between Lyndon words. JSON uses::

    {"word": [int, ...], "residue": int}                       # a pair
    {"necklace": [int, ...], "s": int, "n": int, "k": int, "length": int}
"""
from __future__ import annotations

import json
from typing import Iterable, List, Sequence

from .errors import InvalidInputError

PLAIN = "plain"
JSON = "json"
BLOCKS = "blocks"
FORMATS = (PLAIN, JSON, BLOCKS)

BLOCK_SEP = "|"


def render_word(word: Sequence[int], s: int) -> str:
    if s <= 10:
        return "".join(map(str, word))
    return ",".join(map(str, word))


def render_chunk(word: Sequence[int], s: int, first: bool) -> str:
    """Render part of a longer word so that pieces can be written back to back."""
    text = render_word(word, s)
    if s > 10 and not first and text:
        return "," + text
    return text


def render_pair(word: Sequence[int], residue: int, s: int, fmt: str = PLAIN) -> str:
    if fmt == JSON:
        return json.dumps(pair_to_json(word, residue))
    return f"{render_word(word, s)} {residue}"


def pair_to_json(word: Sequence[int], residue: int) -> dict:
    return {"word": [int(a) for a in word], "residue": int(residue)}


def necklace_to_json(word: Sequence[int], s: int, n: int, k: int) -> dict:
    word = [int(a) for a in word]
    return {"necklace": word, "s": s, "n": n, "k": k, "length": len(word)}


def parse_word(text: str, s: int) -> List[int]:
    """Inverse of PLAIN/BLOCKS rendering; whitespace and ``|`` are ignored.

    Commas switch to decimal-integer tokens, which is also the only
    accepted form when s > 10.
    """
    cleaned = "".join(text.split()).replace(BLOCK_SEP, "," if "," in text or s > 10 else "")
    if not cleaned:
        return []
    if "," in cleaned or s > 10:
        tokens = [t for t in cleaned.split(",") if t]
    else:
        tokens = list(cleaned)
    try:
        word = [int(t) for t in tokens]
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse symbol: {exc}") from None
    for a in word:
        if not 0 <= a < s:
            raise InvalidInputError(f"symbol {a} is not in range(0, {s})")
    return word


def parse_json(text: str, s: int) -> List[int]:
    """Read a necklace or pair JSON object, or a bare list of ints."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"invalid JSON: {exc}") from None
    if isinstance(data, dict):
        if "necklace" in data:
            data = data["necklace"]
        elif "word" in data:
            data = data["word"]
        else:
            raise InvalidInputError('JSON object needs a "necklace" or "word" key')
    if not isinstance(data, list) or not all(
        isinstance(a, int) and not isinstance(a, bool) for a in data
    ):
        raise InvalidInputError("expected a list of integers")
    for a in data:
        if not 0 <= a < s:
            raise InvalidInputError(f"symbol {a} is not in range(0, {s})")
    return data


def iter_json_necklace(blocks: Iterable[Sequence[int]], s: int, n: int, k: int, length: int):
    """Yield text pieces of the necklace JSON object without building the list."""
    yield '{"necklace": ['
    first = True
    for block in blocks:
        if not block:
            continue
        piece = ", ".join(map(str, block))
        yield piece if first else ", " + piece
        first = False
    yield f'], "s": {s}, "n": {n}, "k": {k}, "length": {length}}}'
