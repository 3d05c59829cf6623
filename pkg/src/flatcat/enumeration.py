"""Exhaustive generators for Catalan and flattened Catalan words.

All generators are lazy and emit words in lexicographic order.  The flattened
generator keeps the terminal-run size of the current prefix so each extension
costs O(1): after a prefix ending in ``a`` with ``trun = t`` the next letter may
be ``a + 1`` (t grows), ``a`` (t unchanged) or any descent ``b`` with
``a - t + 1 <= b <= a - 1`` (t resets to 1).
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core_words import CatalanWord, Pattern, trun as trun_of
from .errors import InvalidInput

__all__ = [
    "iter_catalan",
    "iter_flattened",
    "iter_flattened_by_trun",
    "iter_avoiders",
    "SubStream",
    "partitioned",
    "count_flattened",
]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidInput(f"length must be a positive integer, got {n!r}")


def iter_catalan(n: int) -> Iterator[CatalanWord]:
    _check_n(n)
    w = [1] * n
    if n == 1:
        yield CatalanWord.unchecked(w)
        return
    nxt = [0] * (n + 1)
    k = 1
    nxt[1] = 1
    while k >= 1:
        b = nxt[k]
        if b > w[k - 1] + 1:
            k -= 1
            continue
        nxt[k] = b + 1
        w[k] = b
        if k + 1 == n:
            yield CatalanWord.unchecked(w)
        else:
            k += 1
            nxt[k] = 1


def _walk(prefix: Sequence[int], t: int, n: int, final_trun: int = 0) -> Iterator[CatalanWord]:
    """All flattened completions of ``prefix`` (whose trun is ``t``) to length n."""
    k0 = len(prefix)
    if k0 == n:
        if not final_trun or t == final_trun:
            yield CatalanWord.unchecked(prefix)
        return
    w = list(prefix) + [0] * (n - k0)
    truns = [0] * (n + 1)
    nxt = [0] * (n + 1)
    truns[k0] = t
    k = k0
    nxt[k] = w[k - 1] - t + 1
    while k >= k0:
        a = w[k - 1]
        b = nxt[k]
        if b > a + 1:
            k -= 1
            continue
        nxt[k] = b + 1
        w[k] = b
        tr = truns[k]
        tr = 1 if b < a else (tr if b == a else tr + 1)
        if k + 1 == n:
            if not final_trun or tr == final_trun:
                yield CatalanWord.unchecked(w)
            continue
        k += 1
        truns[k] = tr
        nxt[k] = b - tr + 1


def iter_flattened(n: int) -> Iterator[CatalanWord]:
    _check_n(n)
    return _walk((1,), 1, n)


def iter_flattened_by_trun(n: int, m: int) -> Iterator[CatalanWord]:
    _check_n(n)
    if not 1 <= m <= n:
        raise InvalidInput(f"trun must lie in [1, {n}], got {m}")
    return _walk((1,), 1, n, final_trun=m)


def _ends_with(w: list[int], k: int, sig: list[tuple[int, int, int]], m: int) -> bool:
    base = k - m
    for s, u, c in sig:
        a, b = w[base + s], w[base + u]
        if (a > b) - (a < b) != c:
            return False
    return True


def iter_avoiders(n: int, tau: "Pattern | str | Sequence[int]") -> Iterator[CatalanWord]:
    """Members of F_n with no occurrence of ``tau``.

    Generation prunes as soon as the newest |tau| letters form an occurrence,
    which is exact: every occurrence is detected at the step that completes it.
    """
    _check_n(n)
    tau = Pattern.parse(tau)
    t = tau.letters
    m = len(t)
    sig = [(s, u, (t[s] > t[u]) - (t[s] < t[u])) for s in range(m) for u in range(s + 1, m)]
    w = [0] * n
    w[0] = 1

    def rec(k: int, tr: int) -> Iterator[CatalanWord]:
        if k == n:
            yield CatalanWord.unchecked(w)
            return
        a = w[k - 1]
        for b in range(a - tr + 1, a + 2):
            w[k] = b
            if k + 1 >= m and _ends_with(w, k + 1, sig, m):
                continue
            yield from rec(k + 1, 1 if b < a else (tr if b == a else tr + 1))

    return rec(1, 1)


@dataclass(frozen=True)
class SubStream:
    """The flattened words of length ``n`` that begin with ``prefix``."""

    prefix: tuple[int, ...]
    n: int

    def __iter__(self) -> Iterator[CatalanWord]:
        return _walk(self.prefix, trun_of(self.prefix), self.n)

    def count(self) -> int:
        return sum(1 for _ in self)


def partitioned(n: int, depth: int) -> list[SubStream]:
    """Split F_n by its length-``depth`` prefixes, in lexicographic order."""
    _check_n(n)
    if not 1 <= depth < n:
        raise InvalidInput(f"depth must lie in [1, {n - 1}], got {depth}")
    return [SubStream(tuple(p), n) for p in _walk((1,), 1, depth)]


def _count_stream(stream: SubStream) -> int:
    return stream.count()


def count_flattened(n: int, depth: int | None = None, workers: int | None = None) -> int:
    """Count F_n by brute force, optionally fanning sub-streams out to processes."""
    _check_n(n)
    if depth is None or n <= depth:
        return sum(1 for _ in iter_flattened(n))
    streams = partitioned(n, depth)
    if workers == 1:
        return sum(map(_count_stream, streams))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_stream, streams))
