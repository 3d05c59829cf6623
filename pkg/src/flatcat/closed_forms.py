"""Explicit counting formulas: |F_n|, pattern totals tot_n and avoider counts f_n.

Every formula is evaluated in exact arithmetic with the division done last;
a non-integral result raises ``ConsistencyError``, which is how a mistyped
formula announces itself.  Powers of three with a negative exponent (length-3
totals at n = 2) are evaluated as fractions before that final check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core_words import Pattern
from .errors import ConsistencyError, InvalidInput, NotInCatalog

__all__ = [
    "binom",
    "cardinality",
    "tot",
    "trun_sum",
    "avoiders",
    "CountFormula",
    "TOT_FORMULAS",
    "AVOIDER_FORMULAS",
    "OEIS",
]


def binom(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    from math import comb

    return comb(a, b)


def _pow3(e: int) -> Fraction:
    return Fraction(3) ** e


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ConsistencyError(f"{what} evaluated to the non-integer {value}")
    if value < 0:
        raise ConsistencyError(f"{what} evaluated to the negative value {value}")
    return int(value)


def _check(n: int, least: int, what: str) -> None:
    if not isinstance(n, int) or n < least:
        raise InvalidInput(f"{what} requires n >= {least}, got {n!r}")


def cardinality(n: int) -> int:
    _check(n, 1, "|F_n|")
    return _exact(Fraction(3 ** (n - 1) + 1, 2), "|F_n|")


def trun_sum(n: int) -> int:
    """Sum of trun - 1 over F_n."""
    _check(n, 1, "trun sum")
    return _exact(Fraction(3 ** (n - 1) - 1, 2), "trun sum")


@dataclass(frozen=True)
class CountFormula:
    id: str
    validity: int  # least n for which the formula is stated
    evaluate: Callable[[int], Fraction]

    def __call__(self, n: int) -> int:
        _check(n, self.validity, f"formula {self.id}")
        return _exact(self.evaluate(n), f"formula {self.id} at n={n}")


def _tot12(n: int) -> Fraction:
    return (n - 1) * (_pow3(n - 1) + 1) / 4


def _tot21(n: int) -> Fraction:
    return (n - 1) * (_pow3(n - 2) - 1) / 4


def _tot11(n: int) -> Fraction:
    return (n - 1) * (_pow3(n - 2) + 1) / 2


TOT_FORMULAS: dict[str, CountFormula] = {
    "11": CountFormula("11", 1, _tot11),
    "12": CountFormula("12", 1, _tot12),
    "21": CountFormula("21", 1, _tot21),
    "111": CountFormula("111", 2, lambda n: _tot11(n - 1)),
    "122": CountFormula("122", 2, lambda n: _tot12(n - 1)),
    "211": CountFormula("211", 2, lambda n: _tot21(n - 1)),
    "121": CountFormula("121", 2, lambda n: ((n + 1) * _pow3(n - 3) + n - 3) / 4),
    "123": CountFormula("123", 2, lambda n: (n - 2) * _pow3(n - 3)),
    "212": CountFormula("212", 2, lambda n: (n - 2) * (_pow3(n - 3) - 1) / 4),
    "312": CountFormula("312", 2, lambda n: ((n - 5) * _pow3(n - 3) + n - 1) / 4),
}
# equidistributed patterns share totals
_TOT_ALIAS = {"112": "122", "221": "211", "231": "211"}


def _key(tau: "Pattern | str") -> str:
    return str(Pattern.parse(tau))


def tot(tau: "Pattern | str", n: int) -> int:
    """Total number of occurrences of tau over all of F_n."""
    key = _key(tau)
    key = _TOT_ALIAS.get(key, key)
    if key not in TOT_FORMULAS:
        raise NotInCatalog(f"no total formula for pattern {tau}")
    return TOT_FORMULAS[key](n)


def _f11(n: int) -> Fraction:
    return Fraction(2 ** (n - 2))


def _f122(n: int) -> Fraction:
    return Fraction(sum(binom(n + r, 3 * r + 1) for r in range((n - 1) // 2 + 1)))


def _f211(n: int) -> Fraction:
    return Fraction(
        sum(
            binom(j - 1, 2 * r) * binom(n - r - 1, j - r - 1)
            for j in range(1, n + 1)
            for r in range((j - 1) // 2 + 1)
        )
    )


def _f111(n: int) -> Fraction:
    return sum((binom(n - k, k) * Fraction(2) ** (n - k - 2) for k in range(n // 2 + 1)), Fraction(0))


def _f121(n: int) -> Fraction:
    total = 0
    for j in range(1, n + 1):
        for p in range((j - 1) // 2 + 1):
            for r in range(p + 1):
                total += binom(p, r) * binom(j - p - 1, 2 * p - r) * binom(n - r - 1, j - 1)
    return Fraction(total)


def _f123(n: int) -> Fraction:
    return Fraction(
        1
        + sum(
            binom(j - 2, l - 1) * binom(n - j + l, j - 1)
            for j in range(2, n + 1)
            for l in range(1, j)
        )
    )


def _f_valley(last: Callable[[int, int, int], int]) -> Callable[[int], Fraction]:
    # 212 and 312 differ only in the top of the last binomial
    def f(n: int) -> Fraction:
        total = 1
        for j in range(2, n + 1):
            for p in range(1, j // 2 + 1):
                for r in range(p):
                    total += binom(p - 1, r) * binom(j - p, p + r) * binom(last(n, p, r), j - 1)
        return Fraction(total)

    return f


AVOIDER_FORMULAS: dict[str, CountFormula] = {
    "11": CountFormula("11", 2, _f11),
    "122": CountFormula("122", 1, _f122),
    "211": CountFormula("211", 1, _f211),
    "111": CountFormula("111", 3, _f111),
    "121": CountFormula("121", 1, _f121),
    "123": CountFormula("123", 1, _f123),
    "212": CountFormula("212", 1, _f_valley(lambda n, p, r: n - p + r)),
    "312": CountFormula("312", 1, _f_valley(lambda n, p, r: n - r - 1)),
}
_AVOID_ALIAS = {"112": "122", "221": "211", "231": "211"}


def avoiders(tau: "Pattern | str", n: int) -> int:
    """Number of members of F_n avoiding tau."""
    key = _key(tau)
    key = _AVOID_ALIAS.get(key, key)
    if key not in AVOIDER_FORMULAS:
        raise NotInCatalog(f"no avoider formula for pattern {tau}")
    return AVOIDER_FORMULAS[key](n)


# OEIS labels for output only: (A-number, offset rule as a description)
OEIS = {
    "cardinality": ("A007051", "|F_n| = A007051[n-1]"),
    "11": ("A082133", "tot_n(11) = A082133[n-1], n >= 1"),
    "21": ("A261064", "tot_n(21) = A261064[n-2], n >= 3"),
    "123": ("A027471", "tot_n(123) = A027471[n-1], n >= 2"),
    "312": ("A212337", "tot_n(312) = A212337[n-5], n >= 5"),
}
