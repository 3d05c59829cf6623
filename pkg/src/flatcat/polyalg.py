"""Exact sparse polynomials in y, p, q, r and power series in x over them.

A ``MultiPoly`` stores its terms in a dict keyed by a packed exponent vector:
16 bits per variable, so the product of two monomials is the sum of their
keys.  Coefficients are Python ints (arbitrary precision).

``XPoly`` is a dense polynomial in x whose coefficients are ``MultiPoly``;
``RationalGF`` is a quotient of two of them and ``XSeries`` a truncated power
series.  The symbols ``X, Y, P, Q, R`` let formulas be typed as printed::

    A = X * (1 - (P + R) * X) ** 2 / ((1 - (R + P * Y) * X) * (...))
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import InvalidInput, NotExpandable

__all__ = [
    "VARS",
    "MultiPoly",
    "XPoly",
    "RationalGF",
    "XSeries",
    "X",
    "Y",
    "P",
    "Q",
    "R",
    "poly_add",
    "poly_mul",
    "substitute",
    "series_expand",
    "dy_at_1",
    "series_eq",
    "parse_bindings",
]

VARS = ("y", "p", "q", "r")
_BITS = 16
_FIELD = (1 << _BITS) - 1
_SHIFT = {v: _BITS * i for i, v in enumerate(VARS)}
_UNIT = {v: 1 << s for v, s in _SHIFT.items()}


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if not 0 <= e <= _FIELD:
            raise InvalidInput(f"exponent out of range: {e}")
        key |= e << (_BITS * i)
    return key


def _unpack(key: int) -> tuple[int, int, int, int]:
    return (key & _FIELD, (key >> 16) & _FIELD, (key >> 32) & _FIELD, (key >> 48) & _FIELD)


def _exp(key: int, var: str) -> int:
    return (key >> _SHIFT[var]) & _FIELD


Coef = Union["MultiPoly", int]


class MultiPoly:
    """Sparse polynomial in y, p, q, r with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms: dict[int, int] = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "MultiPoly":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls._raw({0: int(c)} if c else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        if name not in _UNIT:
            raise InvalidInput(f"unknown variable {name!r}; expected one of {VARS}")
        return cls._raw({_UNIT[name]: 1})

    @classmethod
    def monomial(cls, coef: int = 1, y: int = 0, p: int = 0, q: int = 0, r: int = 0) -> "MultiPoly":
        return cls._raw({_pack((y, p, q, r)): int(coef)} if coef else {})

    @classmethod
    def from_exponents(cls, items: Iterable[tuple[Sequence[int], int]]) -> "MultiPoly":
        terms: dict[int, int] = {}
        for exps, c in items:
            k = _pack(exps)
            terms[k] = terms.get(k, 0) + c
        return cls(terms)

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other: Coef) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other: Coef) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Coef) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coef) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: Coef) -> "MultiPoly":
        if isinstance(other, int):
            if not other:
                return MultiPoly._raw({})
            return MultiPoly._raw({k: c * other for k, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            ((ka, ca),) = a.items()
            return MultiPoly._raw({ka + kb: ca * cb for kb, cb in b.items()})
        out: dict[int, int] = {}
        get = out.get
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return MultiPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise InvalidInput("negative power of a polynomial")
        out = MultiPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- inspection -----------------------------------------------------

    def is_constant(self) -> bool:
        return all(k == 0 for k in self.terms)

    def constant_term(self) -> int:
        return self.terms.get(0, 0)

    def items(self) -> Iterator[tuple[tuple[int, int, int, int], int]]:
        """Terms as ((y, p, q, r), coef), sorted by exponent vector."""
        for k in sorted(self.terms, key=_unpack):
            yield _unpack(k), self.terms[k]

    def coefficient(self, y: int = 0, p: int = 0, q: int = 0, r: int = 0) -> int:
        return self.terms.get(_pack((y, p, q, r)), 0)

    def degree(self, var: str) -> int:
        return max((_exp(k, var) for k in self.terms), default=-1)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    # -- specialization -------------------------------------------------

    def substitute(self, bindings: Mapping[str, int]) -> "MultiPoly":
        """Bind some of y, p, q, r to integers; unbound variables remain."""
        bound = [(v, _SHIFT[v], int(val)) for v, val in bindings.items()]
        if not bound:
            return self
        clear = 0
        for v, s, _ in bound:
            clear |= _FIELD << s
        keep = ~clear
        out: dict[int, int] = {}
        for k, c in self.terms.items():
            for v, s, val in bound:
                e = (k >> s) & _FIELD
                if e:
                    c *= val ** e
                    if not c:
                        break
            if c:
                nk = k & keep
                out[nk] = out.get(nk, 0) + c
        return MultiPoly._raw({k: c for k, c in out.items() if c})

    def evaluate(self, **values: int) -> int:
        missing = [v for v in VARS if v not in values and self.degree(v) > 0]
        if missing:
            raise InvalidInput(f"unbound variables: {missing}")
        return self.substitute(values).constant_term()

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Permute variables, e.g. ``{"q": "p", "r": "q"}``; must be injective."""
        if len(set(mapping.values())) != len(mapping):
            raise InvalidInput("variable renaming must be injective")
        moves = [(_SHIFT[src], _SHIFT[dst]) for src, dst in mapping.items()]
        moved_src = 0
        for s, _ in moves:
            moved_src |= _FIELD << s
        out: dict[int, int] = {}
        for k, c in self.terms.items():
            nk = k & ~moved_src
            for s, d in moves:
                e = (k >> s) & _FIELD
                if e:
                    if (nk >> d) & _FIELD:
                        raise InvalidInput("renaming collides with a variable left in place")
                    nk |= e << d
            out[nk] = out.get(nk, 0) + c
        return MultiPoly(out)

    def derivative(self, var: str) -> "MultiPoly":
        s = _SHIFT[var]
        unit = _UNIT[var]
        out = {}
        for k, c in self.terms.items():
            e = (k >> s) & _FIELD
            if e:
                out[k - unit] = c * e
        return MultiPoly._raw(out)

    def derivative_at(self, var: str, value: int) -> "MultiPoly":
        return self.derivative(var).substitute({var: value})

    # -- serialization --------------------------------------------------

    def to_json(self) -> list[dict]:
        return [
            {"y": y, "p": p, "q": q, "r": r, "coef": str(c)}
            for (y, p, q, r), c in self.items()
        ]

    @classmethod
    def from_json(cls, items: Iterable[Mapping]) -> "MultiPoly":
        return cls.from_exponents(
            ((int(t.get("y", 0)), int(t.get("p", 0)), int(t.get("q", 0)), int(t.get("r", 0))), int(t["coef"]))
            for t in items
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.items(), key=lambda it: (-sum(it[0]), tuple(-e for e in it[0]))):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def substitute(a: MultiPoly, bindings: Mapping[str, int]) -> MultiPoly:
    return a.substitute(bindings)


_ZERO = MultiPoly.const(0)
_ONE = MultiPoly.const(1)


def _as_poly(c: Coef) -> MultiPoly:
    return c if isinstance(c, MultiPoly) else MultiPoly.const(c)


class XPoly:
    """Polynomial in x with ``MultiPoly`` coefficients (dense in x)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coef]):
        cs = [_as_poly(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: list[MultiPoly] = cs

    @staticmethod
    def _coerce(other) -> "XPoly":
        if isinstance(other, XPoly):
            return other
        if isinstance(other, (int, MultiPoly)):
            return XPoly([other])
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> MultiPoly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def __add__(self, other) -> "XPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "XPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "XPoly":
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (RationalGF, XSeries)):
            return NotImplemented
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return XPoly([])
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "XPoly":
        out = XPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, other) -> "RationalGF":
        if isinstance(other, RationalGF):
            return RationalGF(self, XPoly([1])) / other
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalGF(self, other)

    def __rtruediv__(self, other) -> "RationalGF":
        return RationalGF(self._coerce(other), self)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def substitute(self, bindings: Mapping[str, int]) -> "XPoly":
        return XPoly([c.substitute(bindings) for c in self.coeffs])

    def __repr__(self) -> str:
        terms = [f"({c})*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "XPoly(" + (" + ".join(terms) or "0") + ")"


X = XPoly([0, 1])
Y = XPoly([MultiPoly.var("y")])
P = XPoly([MultiPoly.var("p")])
Q = XPoly([MultiPoly.var("q")])
R = XPoly([MultiPoly.var("r")])


class RationalGF:
    """numerator / denominator, both polynomials in x.

    The denominator is normalized so that its x^0 coefficient is the constant
    1.  An integer constant term c is divided out only when c divides every
    coefficient exactly; anything else raises ``NotExpandable``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: XPoly, den: XPoly):
        num = XPoly._coerce(num)
        den = XPoly._coerce(den)
        c0 = den[0]
        if not c0 or not c0.is_constant():
            raise NotExpandable("denominator constant term is not a nonzero integer")
        c = c0.constant_term()
        if c != 1:
            parts = [t for poly in (num, den) for m in poly.coeffs for t in m.terms.values()]
            if any(t % c for t in parts):
                raise NotExpandable(f"cannot normalize denominator constant term {c}")
            num = XPoly([MultiPoly._raw({k: t // c for k, t in m.terms.items()}) for m in num.coeffs])
            den = XPoly([MultiPoly._raw({k: t // c for k, t in m.terms.items()}) for m in den.coeffs])
        self.num = num
        self.den = den

    @staticmethod
    def _coerce(other) -> "RationalGF":
        if isinstance(other, RationalGF):
            return other
        if isinstance(other, (int, MultiPoly, XPoly)):
            return RationalGF(XPoly._coerce(other), XPoly([1]))
        return NotImplemented

    def __add__(self, other) -> "RationalGF":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalGF(self.num + other.num, self.den)
        return RationalGF(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalGF":
        return RationalGF(-self.num, self.den)

    def __sub__(self, other) -> "RationalGF":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalGF":
        return (-self) + other

    def __mul__(self, other) -> "RationalGF":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalGF(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalGF":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalGF(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalGF":
        return self._coerce(other) / self

    def substitute(self, bindings: Mapping[str, int]) -> "RationalGF":
        return RationalGF(self.num.substitute(bindings), self.den.substitute(bindings))

    def expand(self, order: int) -> "XSeries":
        return series_expand(self, order)

    def __repr__(self) -> str:
        return f"RationalGF({self.num!r} / {self.den!r})"


class XSeries:
    """Power series in x truncated after x^order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Coef], order: int):
        cs = [_as_poly(c) for c in coeffs][: order + 1]
        cs += [_ZERO] * (order + 1 - len(cs))
        self.coeffs: list[MultiPoly] = cs
        self.order = order

    def __getitem__(self, n: int) -> MultiPoly:
        if n > self.order:
            raise IndexError(f"coefficient x^{n} lies beyond truncation order {self.order}")
        return self.coeffs[n] if n >= 0 else _ZERO

    def coefficient(self, n: int) -> MultiPoly:
        return self[n]

    def _coerce(self, other) -> "XSeries":
        if isinstance(other, XSeries):
            return other
        if isinstance(other, (int, MultiPoly)):
            return XSeries([other], self.order)
        if isinstance(other, XPoly):
            return XSeries(other.coeffs, self.order)
        if isinstance(other, RationalGF):
            return series_expand(other, self.order)
        return NotImplemented

    def __add__(self, other) -> "XSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return XSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self) -> "XSeries":
        return XSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "XSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "XSeries":
        return (-self) + other

    def __mul__(self, other) -> "XSeries":
        if isinstance(other, (int, MultiPoly)):
            return XSeries([c * other for c in self.coeffs], self.order)
        if isinstance(other, XPoly):
            out = [_ZERO] * (self.order + 1)
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                for i in range(self.order + 1 - j):
                    if self.coeffs[i]:
                        out[i + j] = out[i + j] + self.coeffs[i] * b
            return XSeries(out, self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        out = [_ZERO] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                if other.coeffs[j]:
                    out[i + j] = out[i + j] + a * other.coeffs[j]
        return XSeries(out, n)

    __rmul__ = __mul__

    def substitute(self, bindings: Mapping[str, int]) -> "XSeries":
        return XSeries([c.substitute(bindings) for c in self.coeffs], self.order)

    def derivative_at(self, var: str, value: int) -> "XSeries":
        return XSeries([c.derivative_at(var, value) for c in self.coeffs], self.order)

    def truncate(self, order: int) -> "XSeries":
        if order > self.order:
            raise InvalidInput(f"cannot extend a series of order {self.order} to {order}")
        return XSeries(self.coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def ints(self) -> list[int]:
        """Coefficients as integers; every variable must already be bound."""
        out = []
        for c in self.coeffs:
            if not c.is_constant():
                raise InvalidInput(f"coefficient {c} still contains variables")
            out.append(c.constant_term())
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return series_eq(self, other, min(self.order, other.order))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        terms = [f"({c})*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"XSeries({' + '.join(terms) or '0'}; O(x^{self.order + 1}))"


def series_expand(f: RationalGF, order: int) -> XSeries:
    """Coefficients of x^0..x^order by long division (den[0] == 1)."""
    if order < 0:
        raise InvalidInput("truncation order must be nonnegative")
    if f.den[0] != 1:
        raise NotExpandable("denominator is not normalized")
    den = [(k, c) for k, c in enumerate(f.den.coeffs) if k and c]
    out: list[MultiPoly] = []
    for n in range(order + 1):
        acc = dict(f.num[n].terms)
        for k, d in den:
            if k > n:
                break
            prev = out[n - k]
            if not prev:
                continue
            for kd, cd in d.terms.items():
                for kp, cp in prev.terms.items():
                    key = kd + kp
                    acc[key] = acc.get(key, 0) - cd * cp
        out.append(MultiPoly._raw({k: c for k, c in acc.items() if c}))
    return XSeries(out, order)


def dy_at_1(s: XSeries) -> XSeries:
    """Apply d/dy and then set y = 1, coefficientwise."""
    return s.derivative_at("y", 1)


def series_eq(a: XSeries, b: XSeries, order: int) -> bool:
    if a.order < order or b.order < order:
        raise InvalidInput(f"both series must be known through x^{order}")
    return all(a.coeffs[i] == b.coeffs[i] for i in range(order + 1))


def parse_bindings(items: Iterable[str]) -> dict[str, int]:
    """``["q=1", "r=0"]`` -> ``{"q": 1, "r": 0}``."""
    out: dict[str, int] = {}
    for item in items:
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in VARS:
            raise InvalidInput(f"bad binding {item!r}; expected VAR=INT with VAR in {VARS}")
        try:
            out[name] = int(value)
        except ValueError:
            raise InvalidInput(f"bad binding {item!r}; value must be an integer") from None
    return out
