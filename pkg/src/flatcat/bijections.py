"""Bijections and involutions on flattened Catalan words.

Every map comes with its inverse (or is its own inverse) so exhaustive checks
can confirm bijectivity on each finite domain.  Marks are 0-based indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core_words import (
    CatalanWord,
    increasing_runs,
    is_catalan,
    is_flattened,
    letter_runs,
)
from .errors import InvalidInput

__all__ = [
    "MarkedWord",
    "prime_map",
    "prime_inverse",
    "trun_map",
    "trun_map_inverse",
    "trun_marks",
    "tilde_involution",
    "hat_involution",
    "swap_231_221",
    "valley_map",
    "valley_inverse",
    "occurrences_312",
    "valley_positions",
    "MAPS",
]


@dataclass(frozen=True)
class MarkedWord:
    word: tuple[int, ...]
    mark: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        if not 0 <= self.mark < len(self.word):
            raise InvalidInput(f"mark {self.mark} outside word of length {len(self.word)}")


def _flattened(w: Sequence[int], what: str) -> tuple[int, ...]:
    w = tuple(w)
    if not w or not is_catalan(w) or not is_flattened(w):
        raise InvalidInput(f"{what} expects a flattened Catalan word, got {w}")
    return w


# -- binary words <-> level-free flattened words ------------------------


def prime_map(bits: Sequence[int]) -> CatalanWord:
    """Binary word of length n-1 starting with 0 -> level-free member of F_n.

    Write bits as 0^(k1-l1) 1^l1 ... 0^(kr-lr) 1^lr 0^t.  The image has r + 1
    increasing runs: 1..k1, then for a = 1..r-1 the k_(a+1) consecutive letters
    starting at s_a - a + 1, and finally t + 1 letters starting at s_r - r + 1,
    where s_a = sum_{j<=a} (kj - lj).
    """
    bits = tuple(bits)
    if not bits or bits[0] != 0 or any(b not in (0, 1) for b in bits):
        raise InvalidInput(f"expected a nonempty 0/1 word starting with 0, got {bits}")
    runs = letter_runs(bits)
    blocks = []  # (k, l) per 0-run followed by a 1-run
    t = 0
    i = 0
    while i < len(runs):
        if i + 1 < len(runs):
            zeros, ones = runs[i][1], runs[i + 1][1]
            blocks.append((zeros + ones, ones))
            i += 2
        else:
            t = runs[i][1]
            i += 1
    r = len(blocks)
    if r == 0:
        return CatalanWord.unchecked(range(1, len(bits) + 2))
    s = [0]
    for k, l in blocks:
        s.append(s[-1] + k - l)
    word = list(range(1, blocks[0][0] + 1))
    for a in range(1, r):
        start = s[a] - a + 1
        word.extend(range(start, start + blocks[a][0]))
    start = s[r] - r + 1
    word.extend(range(start, start + t + 1))
    return CatalanWord.unchecked(word)


def prime_inverse(w: Sequence[int]) -> tuple[int, ...]:
    w = _flattened(w, "prime_inverse")
    if any(a == b for a, b in zip(w, w[1:])):
        raise InvalidInput(f"word has a level: {w}")
    runs = increasing_runs(w)
    r = len(runs) - 1
    if r == 0:
        return (0,) * (len(w) - 1)
    ks = [e - s for s, e in runs[:-1]]
    t = runs[-1][1] - runs[-1][0] - 1
    s_vals = [0] + [w[runs[a][0]] + a - 1 for a in range(1, r + 1)]
    bits: list[int] = []
    for j in range(1, r + 1):
        zeros = s_vals[j] - s_vals[j - 1]
        ones = ks[j - 1] - zeros
        if zeros < 1 or ones < 1:
            raise InvalidInput(f"word is not in the image of prime_map: {w}")
        bits += [0] * zeros + [1] * ones
    bits += [0] * t
    return tuple(bits)


# -- trun designation bijection -----------------------------------------


def trun_marks(w: Sequence[int]) -> list[int]:
    """Canonical marks of F_n^*: first index of each non-smallest letter in the terminal run."""
    s0, e0 = increasing_runs(w)[-1]
    marks = []
    for i in range(s0 + 1, e0):
        if w[i] != w[i - 1]:
            marks.append(i)
    return marks


def trun_map(mw: MarkedWord) -> CatalanWord:
    """F_n^* -> F_n minus the all-ones word."""
    w = _flattened(mw.word, "trun_map")
    s0, e0 = increasing_runs(w)[-1]
    if not s0 <= mw.mark < e0:
        raise InvalidInput("designated letter must lie in the terminal run")
    term = w[s0:e0]
    blocks = letter_runs(term)  # [(a_1, k_1), ..., (a_t, k_t)]
    letters = [a for a, _ in blocks]
    p = letters.index(w[mw.mark]) + 1
    if p == 1:
        raise InvalidInput("the smallest letter of the terminal run cannot be designated")
    t = len(blocks)
    prefix = w[:s0]
    if p == t:
        kt = blocks[-1][1]
        out = [1] * kt + [a + 1 for a in prefix] + [a + 1 for a in term[: len(term) - kt]]
    else:
        head: list[int] = []
        for i in range(p, t + 1):
            head += [i - p + 1] * blocks[i - 1][1]
        out = head + list(prefix) + list(term[: len(term) - len(head)])
    return CatalanWord.unchecked(out)


def trun_map_inverse(w: Sequence[int]) -> MarkedWord:
    w = _flattened(w, "trun_map_inverse")
    if all(a == 1 for a in w):
        raise InvalidInput("the all-ones word is not in the range")
    second = next((i for i in range(1, len(w)) if w[i] == 1 and w[i - 1] != 1), None)
    if second is None:
        kt = next(i for i, a in enumerate(w) if a != 1)
        base = [a - 1 for a in w[kt:]]
        top = base[-1] + 1
        return MarkedWord(tuple(base) + (top,) * kt, len(base))
    head, rest = w[:second], w[second:]
    top = rest[-1]
    tail = tuple(top + a for a in head)
    return MarkedWord(tuple(rest) + tail, len(rest))


# -- involutions --------------------------------------------------------


def tilde_involution(w: Sequence[int]) -> CatalanWord:
    """Reverse the multiplicities of the letters inside each increasing run."""
    w = _flattened(w, "tilde_involution")
    out: list[int] = []
    for s, e in increasing_runs(w):
        blocks = letter_runs(w[s:e])
        mults = [k for _, k in blocks][::-1]
        for (a, _), k in zip(blocks, mults):
            out += [a] * k
    return CatalanWord.unchecked(out)


def hat_involution(w: Sequence[int]) -> CatalanWord:
    """Each maximal a^x b^y with a > b becomes a^y b^x."""
    w = _flattened(w, "hat_involution")
    out = list(w)
    n = len(w)
    for i in range(n - 1):
        a, b = w[i], w[i + 1]
        if a <= b:
            continue
        lo = i
        while lo > 0 and w[lo - 1] == a:
            lo -= 1
        hi = i + 1
        while hi + 1 < n and w[hi + 1] == b:
            hi += 1
        x, y = i - lo + 1, hi - i
        out[lo:hi + 1] = [a] * y + [b] * x
    return CatalanWord.unchecked(out)


def swap_231_221(w: Sequence[int]) -> CatalanWord:
    """Swap every a(a+1)b with aab (a > b), all sites at once."""
    w = _flattened(w, "swap_231_221")
    out = list(w)
    for i in range(len(w) - 2):
        a, m, b = w[i], w[i + 1], w[i + 2]
        if a > b:
            if m == a + 1:
                out[i + 1] = a
            elif m == a:
                out[i + 1] = a + 1
    return CatalanWord.unchecked(out)


# -- 312 occurrences <-> valleys -----------------------------------------


def occurrences_312(w: Sequence[int]) -> list[int]:
    """Start indices i with w[i] > w[i+1] + 1 and w[i+2] = w[i+1] + 1."""
    return [i for i in range(len(w) - 2) if w[i] > w[i + 1] + 1 and w[i + 2] == w[i + 1] + 1]


def valley_positions(w: Sequence[int]) -> list[int]:
    """Start indices of valleys a b^l (b+1) with a > b, l >= 1."""
    out = []
    n = len(w)
    for i in range(n - 2):
        b = w[i + 1]
        if w[i] <= b:
            continue
        j = i + 1
        while j + 1 < n and w[j + 1] == b:
            j += 1
        if j + 1 < n and w[j + 1] == b + 1:
            out.append(i)
    return out


def valley_map(mw: MarkedWord) -> MarkedWord:
    """(a-1) a^l b (b+1) with the 312 marked -> (a-1) b^l (b+1) with the valley marked."""
    w = _flattened(mw.word, "valley_map")
    i = mw.mark
    if i not in occurrences_312(w):
        raise InvalidInput(f"mark {i} does not start an occurrence of 312")
    a, b = w[i], w[i + 1]
    j = i
    while j > 0 and w[j - 1] == a:
        j -= 1
    if j == 0 or w[j - 1] != a - 1:
        raise InvalidInput("312 occurrence is not preceded by a - 1; word is not flattened")
    ell = i - j + 1
    out = w[:j] + (b,) * ell + w[i + 2:]
    return MarkedWord(out, j - 1)


def valley_inverse(mw: MarkedWord) -> MarkedWord:
    w = _flattened(mw.word, "valley_inverse")
    i = mw.mark
    if i not in valley_positions(w):
        raise InvalidInput(f"mark {i} does not start a valley")
    c, b = w[i], w[i + 1]
    j = i + 1
    while w[j + 1] == b:
        j += 1
    ell = j - i
    out = w[:i + 1] + (c + 1,) * ell + (b,) + w[j + 1:]
    return MarkedWord(out, i + ell)


MAPS = {
    "prime": prime_map,
    "prime_inverse": prime_inverse,
    "trun": trun_map,
    "trun_inverse": trun_map_inverse,
    "tilde": tilde_involution,
    "hat": hat_involution,
    "swap": swap_231_221,
    "valley": valley_map,
    "valley_inverse": valley_inverse,
}
