"""Triangular arrays s_{n,m} and their first-moment / total / m=1 sequences.

Each family's array weights F_{n,m} (flattened words of length n with
trun = m) by p, q, r raised to the occurrence counts of its three patterns.
Rows are built from the recurrences obtained by comparing coefficients in the
functional equations; weighted sums such as sum_j (j-1) s_{n-1,j} are
recomputed from stored rows rather than carried incrementally.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import ConsistencyError, InvalidInput
from .polyalg import MultiPoly, XSeries

__all__ = [
    "StatArray",
    "UVWSeq",
    "build_a",
    "build_b",
    "build_c",
    "build_d",
    "build_e",
    "build",
    "build_uvw",
    "uvw_from_array",
    "array_vs_oracle",
    "OracleReport",
]

_ZERO = MultiPoly.const(0)
_ONE = MultiPoly.const(1)
p = MultiPoly.var("p")
q = MultiPoly.var("q")
r = MultiPoly.var("r")


@dataclass
class StatArray:
    family: str
    N: int
    entries: dict[tuple[int, int], MultiPoly] = field(default_factory=dict)

    def __call__(self, n: int, m: int) -> MultiPoly:
        # virtual zero rows and out-of-triangle cells
        if n < 1 or m < 1 or m > n:
            return _ZERO
        if n > self.N:
            raise InvalidInput(f"row {n} beyond the built size {self.N}")
        return self.entries[(n, m)]

    entry = __call__

    def row(self, n: int) -> list[MultiPoly]:
        return [self(n, m) for m in range(1, n + 1)]

    def moment(self, n: int) -> MultiPoly:
        """sum_m (m-1) s_{n,m}"""
        out = _ZERO
        for m in range(2, n + 1):
            out = out + self(n, m) * (m - 1)
        return out

    def total(self, n: int) -> MultiPoly:
        out = _ZERO
        for m in range(1, n + 1):
            out = out + self(n, m)
        return out

    def weighted(self, n: int, lo: int, hi: int, weight: Callable[[int], "MultiPoly | int"]) -> MultiPoly:
        out = _ZERO
        for j in range(lo, hi + 1):
            s = self(n, j)
            if s:
                out = out + s * weight(j)
        return out

    def specialize(self, **bindings: int) -> "StatArray":
        return StatArray(self.family, self.N, {k: v.substitute(bindings) for k, v in self.entries.items()})

    def to_series(self) -> XSeries:
        """sum_{n,m} s_{n,m} x^n y^(m-1), through x^N."""
        coeffs = [_ZERO]
        for n in range(1, self.N + 1):
            c = _ZERO
            for m in range(1, n + 1):
                c = c + self(n, m) * MultiPoly.monomial(1, y=m - 1)
            coeffs.append(c)
        return XSeries(coeffs, self.N)


def _check_N(N: int, least: int) -> None:
    if N < least:
        raise InvalidInput(f"N must be at least {least}")


def build_a(N: int) -> StatArray:
    """Ascents (p), descents (q), levels (r)."""
    _check_N(N, 1)
    a = StatArray("a", N)
    a.entries[(1, 1)] = _ONE
    for n in range(2, N + 1):
        a.N = n
        for m in range(2, n + 1):
            a.entries[(n, m)] = p * a(n - 1, m - 1) + r * a(n - 1, m)
        a.entries[(n, 1)] = r * a(n - 1, 1) + q * a.weighted(n - 1, 2, n - 1, lambda j: j - 1)
    a.N = N
    return a


def build_b(N: int) -> StatArray:
    """#122 (p), #211 (q), #111 (r)."""
    _check_N(N, 2)
    b = StatArray("b", N)
    b.entries.update({(1, 1): _ONE, (2, 1): _ONE, (2, 2): _ONE})
    for n in range(3, N + 1):
        b.N = n
        for m in range(2, n + 1):
            b.entries[(n, m)] = r * b(n - 1, m) + b(n - 1, m - 1) + (p - r) * b(n - 2, m - 1)
        b.entries[(n, 1)] = r * b(n - 1, 1) + b.moment(n - 1) + (q - r) * b.moment(n - 2)
    b.N = N
    return b


def build_c(N: int) -> StatArray:
    """#112 (p), #121 (q), #221 (r)."""
    _check_N(N, 2)
    c = StatArray("c", N)
    c.entries.update({(1, 1): _ONE, (2, 1): _ONE, (2, 2): _ONE})
    for n in range(3, N + 1):
        c.N = n
        for m in range(2, n + 1):
            c.entries[(n, m)] = c(n - 1, m) + c(n - 1, m - 1) + (p - 1) * c(n - 2, m - 1)
        tail = _ZERO
        for j in range(2, n):
            tail = tail + (q + (j - 2)) * (c(n - 2, j - 1) + (p - 1) * c(n - 3, j - 1))
        c.entries[(n, 1)] = c(n - 1, 1) + r * c.weighted(n - 2, 2, n - 2, lambda j: j - 1) + tail
    c.N = N
    return c


def build_d(N: int) -> StatArray:
    """#123 (p), #231 (q), #221 (r)."""
    _check_N(N, 2)
    d = StatArray("d", N)
    d.entries.update({(1, 1): _ONE, (2, 1): _ONE, (2, 2): _ONE})
    for n in range(3, N + 1):
        d.N = n
        for m in range(3, n + 1):
            d.entries[(n, m)] = d(n - 1, m) + p * d(n - 1, m - 1) + (1 - p) * d(n - 2, m - 1)
        d.entries[(n, 2)] = d(n - 1, 2) + d(n - 1, 1)
        lin = _ZERO
        for j in range(1, n - 1):
            lin = lin + p * d(n - 2, j) + (1 - p) * d(n - 3, j)
        d.entries[(n, 1)] = (
            d(n - 1, 1)
            + (1 - p) * (d(n - 2, 1) - d(n - 3, 1))
            + (p * q + r) * d.weighted(n - 2, 2, n - 2, lambda j: j - 1)
            + (1 - p) * q * d.weighted(n - 3, 2, n - 3, lambda j: j - 1)
            + lin
        )
    d.N = N
    return d


def build_e(N: int) -> StatArray:
    """#112 (p), #212 (q), #312 (r)."""
    _check_N(N, 2)
    e = StatArray("e", N)
    e.entries.update({(1, 1): _ONE, (2, 1): _ONE, (2, 2): _ONE})
    for n in range(3, N + 1):
        e.N = n
        for m in range(3, n + 1):
            e.entries[(n, m)] = e(n - 1, m) + e(n - 1, m - 1) + (p - 1) * e(n - 2, m - 1)
        e.entries[(n, 2)] = e(n - 1, 2) + p * e(n - 2, 1) + e.weighted(n - 2, 2, n - 2, lambda j: r * (j - 2) + q)
        e.entries[(n, 1)] = e(n - 1, 1) + e.weighted(n - 1, 2, n - 1, lambda j: j - 1)
    e.N = N
    return e


_BUILDERS = {"a": build_a, "b": build_b, "c": build_c, "d": build_d, "e": build_e}


def build(family: str, N: int) -> StatArray:
    try:
        return _BUILDERS[family.lower()](N)
    except KeyError:
        raise InvalidInput(f"unknown family {family!r}; expected one of a-e") from None


@dataclass
class UVWSeq:
    """u, v, w indexed 0..N (index 0 is the zero padding)."""

    family: str
    u: list[MultiPoly]
    v: list[MultiPoly]
    w: list[MultiPoly]

    @property
    def N(self) -> int:
        return len(self.u) - 1

    def series(self, name: str) -> XSeries:
        return XSeries(getattr(self, name.lower()), self.N)


def uvw_from_array(s: StatArray) -> UVWSeq:
    u = [_ZERO] + [s.moment(n) for n in range(1, s.N + 1)]
    v = [_ZERO] + [s.total(n) for n in range(1, s.N + 1)]
    w = [_ZERO] + [s(n, 1) for n in range(1, s.N + 1)]
    return UVWSeq(s.family, u, v, w)


def _uvw_recurrence(family: str, N: int, w_from_array: list[MultiPoly]) -> UVWSeq:
    """u, v, w from the coupled recurrences alone (w only where one is given)."""
    Z = _ZERO
    u = [Z] * (N + 1)
    v = [Z] * (N + 1)
    w = [Z] * (N + 1)

    def g(seq: list[MultiPoly], k: int) -> MultiPoly:
        return seq[k] if k >= 0 else Z

    if family == "a":
        v[1] = _ONE
        for n in range(2, N + 1):
            u[n] = (p + r) * u[n - 1] + p * v[n - 1]
            v[n] = (p + r) * v[n - 1] + q * u[n - 1]
        w = list(w_from_array)
    elif family == "b":
        seeds = {1: (Z, _ONE), 2: (_ONE, MultiPoly.const(2))}
        for n in range(1, N + 1):
            if n in seeds:
                u[n], v[n] = seeds[n]
                continue
            u[n] = (1 + r) * u[n - 1] + v[n - 1] + (p - r) * (u[n - 2] + v[n - 2])
            v[n] = u[n - 1] + (1 + r) * v[n - 1] + (q - r) * u[n - 2] + (p - r) * v[n - 2]
        w = list(w_from_array)
    elif family == "c":
        seeds = {1: (Z, _ONE), 2: (_ONE, MultiPoly.const(2))}
        for n in range(1, N + 1):
            if n in seeds:
                u[n], v[n] = seeds[n]
                continue
            u[n] = 2 * u[n - 1] + v[n - 1] + (p - 1) * (u[n - 2] + v[n - 2])
            v[n] = (
                2 * v[n - 1]
                + (r + 1) * u[n - 2]
                + (p + q - 1) * v[n - 2]
                + (p - 1) * (g(u, n - 3) + q * g(v, n - 3))
            )
        w = list(w_from_array)
    elif family == "d":
        seeds = {1: (Z, _ONE, _ONE), 2: (_ONE, MultiPoly.const(2), _ONE)}
        for n in range(1, N + 1):
            if n in seeds:
                u[n], v[n], w[n] = seeds[n]
                continue
            w[n] = (
                (p * q + r) * u[n - 2]
                + (1 - p) * q * g(u, n - 3)
                + p * v[n - 2]
                + w[n - 1]
                + (1 - p) * (g(v, n - 3) + w[n - 2] - g(w, n - 3))
            )
            u[n] = (1 + p) * u[n - 1] + p * v[n - 1] + (1 - p) * (u[n - 2] + v[n - 2] + w[n - 1] - w[n - 2])
            v[n] = (1 + p) * v[n - 1] + w[n] - p * w[n - 1] + (1 - p) * (v[n - 2] - w[n - 2])
    elif family == "e":
        seeds = {1: (Z, _ONE, _ONE), 2: (_ONE, MultiPoly.const(2), _ONE)}
        for n in range(1, N + 1):
            if n in seeds:
                u[n], v[n], w[n] = seeds[n]
                continue
            w[n] = u[n - 1] + w[n - 1]
            v[n] = (
                u[n - 1]
                + r * u[n - 2]
                + 2 * v[n - 1]
                + (p + q - r - 1) * v[n - 2]
                - w[n - 1]
                + (r - q + 1) * w[n - 2]
            )
            u[n] = u[n - 1] + (p - 1) * u[n - 2] + v[n] - v[n - 1]
    else:
        raise InvalidInput(f"unknown family {family!r}")
    return UVWSeq(family, u, v, w)


def build_uvw(family: str, N: int, array: StatArray | None = None) -> UVWSeq:
    """u, v, w by the coupled recurrences, cross-checked against the array sums.

    Raises ConsistencyError on any disagreement.
    """
    family = family.lower()
    array = array if array is not None else build(family, N)
    if array.N < N:
        raise InvalidInput(f"array built only to {array.N}")
    defs = uvw_from_array(array)
    rec = _uvw_recurrence(family, N, defs.w[: N + 1])
    for name in ("u", "v", "w"):
        a, b = getattr(rec, name), getattr(defs, name)
        for n in range(N + 1):
            if a[n] != b[n]:
                raise ConsistencyError(
                    f"family {family}: {name}_{n} by recurrence {a[n]} != by definition {b[n]}"
                )
    return rec


@dataclass
class OracleReport:
    family: str
    N: int
    ok: bool
    first_mismatch: tuple[int, int] | None = None
    detail: str = ""


_FAMILY_LETTER = {"a": "A", "b": "B", "c": "C", "d": "D", "e": "E"}


def array_vs_oracle(family: str, N: int, array: StatArray | None = None) -> OracleReport:
    """Compare every cell with the weight enumerated over F_{n,m}."""
    from .oracle import refined_distribution

    family = family.lower()
    if family not in _FAMILY_LETTER:
        raise InvalidInput(f"unknown family {family!r}")
    array = array if array is not None else build(family, N)
    fam = _FAMILY_LETTER[family]
    for n in range(1, N + 1):
        for m in range(1, n + 1):
            want = refined_distribution(n, m, fam)
            got = array(n, m)
            if got != want:
                return OracleReport(family, N, False, (n, m), f"array {got} != oracle {want}")
    return OracleReport(family, N, True)

