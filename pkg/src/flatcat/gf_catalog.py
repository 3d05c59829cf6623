"""Closed-form generating functions, typed exactly as printed.

No entry is simplified: a transcription slip shows up as a mismatch against
the brute-force oracle instead of being absorbed by algebra.  In every
full-distribution entry ``x`` marks length and ``y`` marks trun - 1; the
``roles`` mapping says which pattern each of p, q, r marks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .core_words import Pattern
from .errors import InvalidInput, NotInCatalog
from .polyalg import P, Q, R, X, Y, RationalGF, XPoly, XSeries, dy_at_1, series_expand

__all__ = [
    "CatalogEntry",
    "TABLE1_PATTERNS",
    "FAMILY_ROLES",
    "gf_A",
    "gf_B",
    "gf_C",
    "gf_D",
    "gf_E",
    "gf_trun",
    "gf_table1",
    "gf_uvw",
    "catalog",
    "get_entry",
    "check_functional_equation",
    "table1_specialization",
]

FAMILY_ROLES: dict[str, dict[str, str]] = {
    "A": {"p": "12", "q": "21", "r": "11"},
    "B": {"p": "122", "q": "211", "r": "111"},
    "C": {"p": "112", "q": "121", "r": "221"},
    "D": {"p": "123", "q": "231", "r": "221"},
    "E": {"p": "112", "q": "212", "r": "312"},
}

TABLE1_PATTERNS = (
    "11", "12", "21", "111", "112", "122", "121", "123", "211", "221", "231", "212", "312",
)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    gf: RationalGF
    roles: Mapping[str, str] = field(default_factory=dict)
    # "full": joint distribution over F with y marking trun - 1
    # "table1": a single-pattern distribution F_tau(x; q)
    # "aux": U, V, W and other derived series
    kind: str = "full"
    note: str = ""


def gf_A() -> RationalGF:
    return X * (1 - (P + R) * X) ** 2 / (
        (1 - (R + P * Y) * X) * (1 - 2 * (P + R) * X + ((P + R) ** 2 - P * Q) * X ** 2)
    )


def _b_core() -> XPoly:
    return 1 - (1 + R) * X - (P - R) * X ** 2


def gf_B() -> RationalGF:
    core = _b_core()
    return X * (1 + (1 - R) * X) * core ** 2 / (
        (1 - (R + Y) * X - (P - R) * X ** 2 * Y)
        * (core ** 2 - X ** 2 * (1 + (P - R) * X) * (1 + (Q - R) * X))
    )


def _c_alpha() -> XPoly:
    return (
        1
        - 4 * X
        - (2 * P + Q - 6) * X ** 2
        + (4 * P + 3 * Q - R - P * Q - 5) * X ** 3
        + (P - 1) * (P + 3 * Q - R - 3) * X ** 4
        + (P - 1) ** 2 * (Q - 1) * X ** 5
    )


def _c_D() -> XPoly:
    # the product form the alpha polynomial is claimed to equal
    return (1 - 2 * X - (P - 1) * X ** 2) * (
        1 - 2 * X - (P + Q - 1) * X ** 2 - (P - 1) * Q * X ** 3
    ) - X ** 3 * (1 + (P - 1) * X) * (R + 1 + (P - 1) * X)


def _c_beta() -> XPoly:
    return Q + (P * Q + R - 3 * Q + 1) * X + (P - 1) * (R - 3 * Q + 2) * X ** 2 - (P - 1) ** 2 * (Q - 1) * X ** 3


def gf_C() -> RationalGF:
    return X * (1 - 2 * X - (P - 1) * X ** 2) ** 2 / (
        (1 - X * (1 + Y) - (P - 1) * X ** 2 * Y) * _c_alpha()
    )


def _d_quad() -> XPoly:
    return 1 - (P + 1) * X + (P - 1) * X ** 2


def _d_kernel() -> XPoly:
    return 1 - X * (1 + P * Y) + (P - 1) * X ** 2 * Y


def gf_D_V() -> RationalGF:
    return X * (1 - (P - 1) * X) * _d_quad() / (
        1
        - 2 * (P + 1) * X
        + (P ** 2 + 4 * P - 2) * X ** 2
        - (2 * P ** 2 + P * Q - P + R - 3) * X ** 3
        + (P - 1) * (P + Q - 2) * X ** 4
    )


def gf_D() -> RationalGF:
    first = X / _d_kernel()
    coef = (
        X ** 2
        + (P * Q - P + R - 1) * X ** 3
        - (P - 1) * (Q - 1) * X ** 4
        - X * Y * (P - 1) * _d_quad() ** 2
    ) / ((1 - (P - 1) * X) * _d_quad() * _d_kernel())
    return first + coef * gf_D_V()


def _e_alpha() -> XPoly:
    return 1 - 3 * X - (P + Q - 4) * X ** 2 + (P + 2 * Q - R - 2) * X ** 3 + (P - 1) * (Q - R) * X ** 4


def _e_beta() -> XPoly:
    return 1 - 4 * X - (2 * P + Q - 6) * X ** 2 + (3 * P + 2 * Q - R - 4) * X ** 3 + (P - 1) * (P + Q - R - 1) * X ** 4


def gf_E_V() -> RationalGF:
    return X * _e_alpha() / ((1 - X) * _e_beta())


def gf_E() -> RationalGF:
    tail = Q - 1 + (R - 2 * Q + 1) * X + (P - 1) * (R - Q) * X ** 2
    kernel = 1 - X - X * Y - (P - 1) * X ** 2 * Y
    first = (X - 3 * X ** 2 - (P - 3) * X ** 3 + (P - 1) * X ** 4 - X ** 3 * Y * tail) / (
        (1 - X) * (1 - X - (P - 1) * X ** 2) * kernel
    )
    second = (X - X ** 2 + X ** 2 * Y * tail) / ((1 - X - (P - 1) * X ** 2) * kernel)
    return first + second * gf_E_V()


def gf_trun() -> RationalGF:
    return X * (1 - 2 * X) ** 2 / ((1 - X - X * Y) * (1 - 4 * X + 3 * X ** 2))


_TABLE1 = {
    "11": lambda: X * (1 - (1 + Q) * X) / (1 - 2 * (1 + Q) * X + Q * (2 + Q) * X ** 2),
    "12": lambda: X * (1 - (1 + Q) * X) / (1 - 2 * (1 + Q) * X + (1 + Q + Q ** 2) * X ** 2),
    "21": lambda: X * (1 - 2 * X) / (1 - 4 * X + (4 - Q) * X ** 2),
    "111": lambda: X * (1 + (1 - Q) * X) * (1 - (1 + Q) * X - (1 - Q) * X ** 2) / (
        1 - 2 * (1 + Q) * X - (2 - 4 * Q - Q ** 2) * X ** 2 + 2 * Q * (1 - Q) * X ** 3
    ),
    "112": lambda: X * (1 - 2 * X + (1 - Q) * X ** 2) / (
        1 - 4 * X + (5 - 2 * Q) * X ** 2 - 3 * (1 - Q) * X ** 3 + (1 - Q) ** 2 * X ** 4
    ),
    "121": lambda: X * (1 - 2 * X) / (1 - 4 * X + (4 - Q) * X ** 2 - 2 * (1 - Q) * X ** 3),
    "123": lambda: X * (1 + (1 - Q) * X) * (1 - (1 + Q) * X - (1 - Q) * X ** 2) / (
        1 - 2 * (1 + Q) * X - (2 - 4 * Q - Q ** 2) * X ** 2 + 2 * (1 - Q ** 2) * X ** 3 + (1 - Q) ** 2 * X ** 4
    ),
    "211": lambda: X * (1 - 2 * X) / (1 - 4 * X + 3 * X ** 2 + (1 - Q) * X ** 3),
    "212": lambda: X * (1 - 3 * X + (3 - Q) * X ** 2 - 2 * (1 - Q) * X ** 3) / (
        (1 - X) * (1 - 4 * X + (4 - Q) * X ** 2 - 2 * (1 - Q) * X ** 3)
    ),
    "312": lambda: X * (1 - 3 * X + 2 * X ** 2 + (1 - Q) * X ** 3) / (
        (1 - X) * (1 - 4 * X + 3 * X ** 2 + (1 - Q) * X ** 3)
    ),
}
# rows shared by equidistributed patterns
_TABLE1_ALIAS = {"122": "112", "221": "211", "231": "211"}

# which theorem and variable each single-pattern distribution comes from
_SPECIALIZATION = {
    "11": ("A", "r"), "12": ("A", "p"), "21": ("A", "q"),
    "111": ("B", "r"), "122": ("B", "p"), "211": ("B", "q"),
    "112": ("C", "p"), "121": ("C", "q"), "221": ("C", "r"),
    "123": ("D", "p"), "231": ("D", "q"),
    "212": ("E", "q"), "312": ("E", "r"),
}


def gf_table1(tau: "Pattern | str") -> RationalGF:
    """F_tau(x; q) from the table of all patterns of length two or three."""
    key = str(Pattern.parse(tau))
    key = _TABLE1_ALIAS.get(key, key)
    if key not in _TABLE1:
        raise NotInCatalog(f"pattern {tau} has no catalogued generating function")
    return _TABLE1[key]()


def table1_specialization(tau: "Pattern | str") -> RationalGF:
    """F_tau(x; q) obtained instead by specializing a five-variable theorem."""
    key = str(Pattern.parse(tau))
    if key not in _SPECIALIZATION:
        raise NotInCatalog(f"pattern {tau} is not marked by any theorem")
    fam, var = _SPECIALIZATION[key]
    gf = _FULL[fam]()
    binding = {v: 1 for v in ("y", "p", "q", "r") if v != var}
    gf = gf.substitute(binding)
    if var != "q":
        gf = gf_rename(gf, {var: "q"})
    return gf


def gf_rename(gf: RationalGF, mapping: Mapping[str, str]) -> RationalGF:
    def ren(poly: XPoly) -> XPoly:
        return XPoly([c.rename(mapping) for c in poly.coeffs])

    return RationalGF(ren(gf.num), ren(gf.den))


_FULL = {"A": gf_A, "B": gf_B, "C": gf_C, "D": gf_D, "E": gf_E}


def _uvw_A() -> dict[str, RationalGF]:
    U = P * X ** 2 / (1 - 2 * (P + R) * X + ((P + R) ** 2 - P * Q) * X ** 2)
    V = X * (1 - (P + R) * X) / (1 - 2 * (P + R) * X + ((P + R) ** 2 - P * Q) * X ** 2)
    return {"U": U, "V": V}


def _uvw_B() -> dict[str, RationalGF]:
    core = _b_core()
    U = X ** 2 * (1 + (1 - R) * X) * (1 + (P - R) * X) / (
        core ** 2 - X ** 2 * (1 + (P - R) * X) * (1 + (Q - R) * X)
    )
    V = (X + (1 - R) * X ** 2 + X * (1 + (Q - R) * X) * U) / (1 - X * (1 + R + (P - R) * X))
    return {"U": U, "V": V}


def _uvw_C() -> dict[str, RationalGF]:
    D = _c_D()
    return {"U": X ** 2 * (1 + (P - 1) * X) / D, "V": X * (1 - 2 * X - (P - 1) * X ** 2) / D}


def _uvw_D() -> dict[str, RationalGF]:
    V = gf_D_V()
    U = X / ((1 - (P - 1) * X) * _d_quad()) * V
    W = _d_quad() / ((1 - X) * (1 - (P - 1) * X)) * V
    return {"U": U, "V": V, "W": W}


def _uvw_E() -> dict[str, RationalGF]:
    V = gf_E_V()
    U = ((1 - X) * V - X) / (1 - X - (P - 1) * X ** 2)
    W = X * (1 + U) / (1 - X)
    return {"U": U, "V": V, "W": W}


_UVW = {"A": _uvw_A, "B": _uvw_B, "C": _uvw_C, "D": _uvw_D, "E": _uvw_E}


def gf_uvw(family: str) -> dict[str, RationalGF]:
    """Auxiliary closed forms U, V (and W where printed) for one family."""
    try:
        return _UVW[family.upper()]()
    except KeyError:
        raise NotInCatalog(f"unknown family {family!r}") from None


@lru_cache(maxsize=None)
def catalog() -> dict[str, CatalogEntry]:
    entries: dict[str, CatalogEntry] = {}
    for fam, fn in _FULL.items():
        entries[fam] = CatalogEntry(fam, fn(), FAMILY_ROLES[fam], "full")
    entries["trun"] = CatalogEntry("trun", gf_trun(), {}, "full", "A(x,y;1,1,1)")
    for tau in TABLE1_PATTERNS:
        entries[f"F_{tau}"] = CatalogEntry(f"F_{tau}", gf_table1(tau), {"q": tau}, "table1")
    entries["shortValley"] = CatalogEntry(
        "shortValley",
        X * (1 - 2 * X - (Q - 1) * X ** 2) / ((1 - X) * (1 - 3 * X - (Q - 1) * X ** 2)),
        {"q": "short valley"},
        "table1",
        "E(x,1;1,q,q)",
    )
    entries["D_231_221"] = CatalogEntry(
        "D_231_221",
        X * (1 - 2 * X) / (1 - 4 * X + 3 * X ** 2 - (P + Q - 2) * X ** 3),
        {"p": "231", "q": "221"},
        "aux",
        "D(x,1;1,p,q)",
    )
    entries["C_avoid112"] = CatalogEntry(
        "C_avoid112",
        X * (1 - X) / (1 - 3 * X - (P - 3) * X ** 2 + (2 * P - Q - 2) * X ** 3 - (P - 1) * X ** 4),
        {"p": "121", "q": "221"},
        "aux",
        "C(x,1;0,p,q), words avoiding 112",
    )
    for fam, fn in _UVW.items():
        for name, gf in fn().items():
            entries[f"{name}_{fam}"] = CatalogEntry(f"{name}_{fam}", gf, FAMILY_ROLES[fam], "aux")
    return entries


def get_entry(entry_id: str) -> CatalogEntry:
    cat = catalog()
    key = entry_id
    if key not in cat:
        # accept "F11" for "F_11" and "UA" for "U_A"
        alt = {k.replace("_", ""): k for k in cat}
        key = alt.get(entry_id.replace("_", ""), entry_id)
    if key not in cat:
        raise NotInCatalog(f"unknown generating function id {entry_id!r}")
    return cat[key]


def check_functional_equation(
    family: str, order: int, bindings: Mapping[str, int] | None = None
) -> XSeries:
    """LHS - RHS of the family's functional equation, through x^order.

    The closed form is expanded with y kept symbolic; U, V and W are its
    y-derivative at 1, its value at y = 1 and its value at y = 0.
    """
    family = family.upper()
    if family not in _FULL:
        raise NotInCatalog(f"unknown family {family!r}")
    if order < 1:
        raise InvalidInput("order must be at least 1")
    bindings = dict(bindings or {})
    if "y" in bindings:
        raise InvalidInput("y must stay symbolic in a functional equation")

    def k(e: XPoly) -> XPoly:
        return e.substitute(bindings)

    F = series_expand(_FULL[family]().substitute(bindings), order)
    U = dy_at_1(F)
    V = F.substitute({"y": 1})
    W = F.substitute({"y": 0})
    zero = XSeries([], order)

    if family == "A":
        lhs = F * k(1 - X * (P * Y + R))
        rhs = zero + k(X) + U * k(Q * X)
    elif family == "B":
        lhs = F * k(1 - (R + Y) * X - (P - R) * X ** 2 * Y)
        rhs = zero + k(X + X ** 2 * (1 - R)) + U * k(X * (1 + (Q - R) * X))
    elif family == "C":
        lhs = F * k(1 - X * (1 + Y) - (P - 1) * X ** 2 * Y)
        rhs = zero + k(X) + U * k(X ** 2 * (R + 1 + (P - 1) * X)) + V * k(Q * X ** 2 * (1 + (P - 1) * X))
    elif family == "D":
        lhs = F * k(1 - X * (1 + P * Y) - (1 - P) * X ** 2 * Y)
        rhs = (
            zero
            + k(X)
            + U * k(X ** 2 * (P * Q + R + (1 - P) * Q * X))
            + V * k(X ** 2 * (P + (1 - P) * X))
            + W * k((1 - P) * X * (1 - X) * (X + Y))
        )
    else:
        lhs = F * k(1 - X - X * Y - (P - 1) * X ** 2 * Y)
        rhs = (
            zero
            + k(X + X ** 2 * Y)
            + U * k(X * (1 + R * X * Y))
            + V * k((Q - R) * X ** 2 * Y)
            - W * k(X * Y * (1 - (R - Q + 1) * X))
        )
    return lhs - rhs
