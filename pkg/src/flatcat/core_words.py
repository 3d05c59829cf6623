"""Catalan words, the flattened property and consecutive-pattern statistics.

Words are plain tuples of positive integers.  ``CatalanWord`` is a tuple
subclass that validates on construction; every function here also accepts an
ordinary tuple or list so that hot loops can skip the validation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInput

__all__ = [
    "CatalanWord",
    "Pattern",
    "WordStats",
    "BinaryWord",
    "is_catalan",
    "is_flattened",
    "increasing_runs",
    "letter_runs",
    "count_pattern",
    "standardize",
    "window_profile",
    "trun",
    "skeleton",
    "statistics",
    "parse_word",
    "format_word",
]


def is_catalan(letters: Sequence[int]) -> bool:
    if len(letters) == 0:
        raise InvalidInput("a Catalan word has at least one letter")
    if letters[0] != 1:
        return False
    prev = 1
    for b in letters[1:]:
        if not 1 <= b <= prev + 1:
            return False
        prev = b
    return True


class CatalanWord(tuple):
    """Immutable Catalan word; ``CatalanWord([1, 2, 2, 1])``."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int]):
        letters = tuple(int(a) for a in letters)
        if not letters:
            raise InvalidInput("a Catalan word has at least one letter")
        if not is_catalan(letters):
            raise InvalidInput(f"not a Catalan word: {format_word(letters)}")
        return tuple.__new__(cls, letters)

    @classmethod
    def unchecked(cls, letters: Iterable[int]) -> "CatalanWord":
        # caller guarantees the invariants (used by the generators)
        return tuple.__new__(cls, letters)

    def __repr__(self) -> str:
        return f"CatalanWord({format_word(self)})"

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class Pattern:
    """A consecutive pattern whose distinct letters are exactly 1..ell."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        if len(letters) < 2:
            raise InvalidInput("a pattern needs at least two letters")
        if set(letters) != set(range(1, max(letters) + 1)):
            raise InvalidInput(
                f"pattern letters must cover 1..{max(letters)}: {letters}"
            )

    @classmethod
    def parse(cls, text: "str | Pattern | Sequence[int]") -> "Pattern":
        """Accept ``"312"``, ``"3,1,2"``, a sequence of ints, or a Pattern."""
        if isinstance(text, Pattern):
            return text
        if isinstance(text, str):
            text = text.strip()
            if not text:
                raise InvalidInput("empty pattern")
            if "," in text:
                parts = text.split(",")
            else:
                parts = list(text)
            try:
                return cls(tuple(int(c) for c in parts))
            except ValueError as exc:
                if isinstance(exc, InvalidInput):
                    raise
                raise InvalidInput(f"cannot parse pattern {text!r}") from None
        return cls(tuple(text))

    @property
    def alphabet_size(self) -> int:
        return max(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if self.alphabet_size <= 9:
            return "".join(map(str, self.letters))
        return ",".join(map(str, self.letters))


# A BinaryWord is a tuple over {0, 1}; validation lives with the bijection
# that consumes it (bijections.prime_map).
BinaryWord = tuple


def increasing_runs(w: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal weakly increasing segments as half-open index ranges."""
    if len(w) == 0:
        raise InvalidInput("empty word")
    runs = []
    start = 0
    for i in range(1, len(w)):
        if w[i] < w[i - 1]:
            runs.append((start, i))
            start = i
    runs.append((start, len(w)))
    return runs


def letter_runs(w: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal constant segments (runs of a letter) as (letter, length)."""
    if len(w) == 0:
        raise InvalidInput("empty word")
    out = []
    cur, k = w[0], 1
    for b in w[1:]:
        if b == cur:
            k += 1
        else:
            out.append((cur, k))
            cur, k = b, 1
    out.append((cur, k))
    return out


def is_flattened(w: Sequence[int]) -> bool:
    heads = [w[s] for s, _ in increasing_runs(w)]
    return all(a <= b for a, b in zip(heads, heads[1:]))


def _cmp(a: int, b: int) -> int:
    return (a > b) - (a < b)


def count_pattern(w: Sequence[int], tau: "Pattern | str | Sequence[int]") -> int:
    """Number of windows of ``w`` order-isomorphic to ``tau`` (equalities count)."""
    tau = Pattern.parse(tau)
    t = tau.letters
    m = len(t)
    if len(w) < m:
        return 0
    pairs = [(s, u, _cmp(t[s], t[u])) for s in range(m) for u in range(s + 1, m)]
    hits = 0
    for i in range(len(w) - m + 1):
        for s, u, c in pairs:
            if _cmp(w[i + s], w[i + u]) != c:
                break
        else:
            hits += 1
    return hits


def standardize(window: Sequence[int]) -> tuple[int, ...]:
    """Replace each letter by its rank among the distinct letters (1-based)."""
    ranks = {v: i for i, v in enumerate(sorted(set(window)), start=1)}
    return tuple(ranks[v] for v in window)


def window_profile(w: Sequence[int], lengths: Iterable[int] = (2, 3)) -> dict[tuple[int, ...], int]:
    """Occurrence counts of every consecutive pattern of the given lengths.

    Used by the brute-force oracle: one pass per word yields the counts of all
    thirteen patterns of length two or three at once.
    """
    prof: dict[tuple[int, ...], int] = {}
    n = len(w)
    for m in lengths:
        for i in range(n - m + 1):
            key = standardize(w[i:i + m])
            prof[key] = prof.get(key, 0) + 1
    return prof


def trun(w: Sequence[int]) -> int:
    """Number of distinct letters in the terminal increasing run."""
    start, end = increasing_runs(w)[-1]
    return len(set(w[start:end]))


def skeleton(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(a for a, _ in letter_runs(w))


@dataclass(frozen=True)
class WordStats:
    asc: int
    des: int
    lev: int
    trun: int


def statistics(w: Sequence[int]) -> WordStats:
    if len(w) == 0:
        raise InvalidInput("empty word")
    asc = des = lev = 0
    for a, b in zip(w, w[1:]):
        if a < b:
            asc += 1
        elif a > b:
            des += 1
        else:
            lev += 1
    return WordStats(asc, des, lev, trun(w))


def parse_word(text: str) -> tuple[int, ...]:
    """Parse the canonical comma-separated form, e.g. ``"1,2,3,3,2"``."""
    text = text.strip()
    if not text:
        raise InvalidInput("empty word")
    try:
        letters = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InvalidInput(f"cannot parse word {text!r}") from None
    if any(a < 1 for a in letters):
        raise InvalidInput(f"letters must be positive: {text!r}")
    return letters


def format_word(w: Sequence[int]) -> str:
    return ",".join(str(a) for a in w)
