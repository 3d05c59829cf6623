"""Verification suites: every closed form checked against brute force or
against another independent derivation.

Each suite returns a VerifyReport whose cases carry the first mismatch found.
"""
from __future__ import annotations

import itertools
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from . import bijections as bj
from .closed_forms import AVOIDER_FORMULAS, TOT_FORMULAS, avoiders, cardinality, tot
from .core_words import count_pattern, increasing_runs, letter_runs, trun
from .enumeration import iter_avoiders, iter_catalan, iter_flattened
from .errors import ConsistencyError, InvalidInput
from .gf_catalog import TABLE1_PATTERNS, catalog, check_functional_equation, gf_table1, gf_uvw
from .oracle import avoider_count, joint_distribution, pattern_distribution, total_occurrences
from .recurrences import array_vs_oracle, build, build_uvw

DEFAULT_MAX_N = 10

SUITES = (
    "cardinality",
    "table1",
    "theorems",
    "functional",
    "recurrences",
    "totals",
    "avoiders",
    "bijections",
    "equidistribution",
)

EXCLUDED_AT_6 = (
    "112321", "122321", "123211", "123212", "123221",
    "123231", "123321", "123421", "123431", "123432",
)


@dataclass
class Case:
    id: str
    n_range: str
    status: str  # "pass" or "fail"
    detail: str = ""


@dataclass
class VerifyReport:
    suite: str
    cases: list[Case] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.cases)

    def add(self, case_id: str, n_range: str, mismatch: str | None, note: str = "") -> None:
        if mismatch is None:
            self.cases.append(Case(case_id, n_range, "pass", note))
        else:
            self.cases.append(Case(case_id, n_range, "fail", mismatch))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "elapsed": round(self.elapsed, 3),
            "cases": [asdict(c) for c in self.cases],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _first(pairs: Iterable[tuple[object, object, object]]) -> str | None:
    """First (label, got, want) triple with got != want, rendered."""
    for label, got, want in pairs:
        if got != want:
            return f"{label}: got {got}, expected {want}"
    return None


def _rng(lo: int, hi: int) -> str:
    return f"{lo}..{hi}"


# -- suites ---------------------------------------------------------------


def suite_cardinality(max_n: int = 14) -> VerifyReport:
    rep = VerifyReport("cardinality")
    rep.add(
        "|F_n| = (3^(n-1)+1)/2",
        _rng(1, max_n),
        _first((f"n={n}", sum(1 for _ in iter_flattened(n)), cardinality(n)) for n in range(1, max_n + 1)),
    )
    flat = {"".join(map(str, w)) for w in iter_flattened(6)}
    excluded = tuple(sorted("".join(map(str, w)) for w in iter_catalan(6) if "".join(map(str, w)) not in flat))
    rep.add("n=6 anchor", "6", _first([("|F_6|", len(flat), 122), ("C_6 - F_6", excluded, EXCLUDED_AT_6)]))
    return rep


def suite_table1(max_n: int = 12) -> VerifyReport:
    rep = VerifyReport("table1")
    for tau in TABLE1_PATTERNS:
        s = gf_table1(tau).expand(max_n)
        rep.add(
            f"F_{tau}",
            _rng(1, max_n),
            _first((f"[x^{n}]", s[n], pattern_distribution(n, tau)) for n in range(1, max_n + 1)),
        )
    return rep


def suite_theorems(max_n: int = 10) -> VerifyReport:
    rep = VerifyReport("theorems")
    for fam in "ABCDE":
        s = catalog()[fam].gf.expand(max_n)
        rep.add(
            fam,
            _rng(1, max_n),
            _first((f"[x^{n}]", s[n], joint_distribution(n, fam)) for n in range(1, max_n + 1)),
        )
    return rep


def suite_functional(order: int = 20) -> VerifyReport:
    rep = VerifyReport("functional")
    for fam in "ABCDE":
        res = check_functional_equation(fam, order)
        bad = next((n for n in range(order + 1) if res[n]), None)
        rep.add(fam, _rng(0, order), None if bad is None else f"residual [x^{bad}] = {res[bad]}")
    return rep


def suite_recurrences(max_n: int = 10, order: int = 20) -> VerifyReport:
    rep = VerifyReport("recurrences")
    for fam in "abcde":
        arr = build(fam, max(order, max_n))
        r = array_vs_oracle(fam, max_n, arr)
        rep.add(f"{fam}_(n,m) vs oracle", _rng(1, max_n), None if r.ok else f"cell {r.first_mismatch}: {r.detail}")
        got = arr.to_series()
        want = catalog()[fam.upper()].gf.expand(order)
        rep.add(
            f"{fam} double GF",
            _rng(1, order),
            _first((f"[x^{n}]", got[n], want[n]) for n in range(order + 1)),
        )
        try:
            seq = build_uvw(fam, order, arr)
        except ConsistencyError as exc:
            rep.add(f"{fam} u/v/w recurrences", _rng(0, order), str(exc))
            continue
        rep.add(f"{fam} u/v/w recurrences", _rng(0, order), None)
        for name, gf in sorted(gf_uvw(fam).items()):
            s, g = seq.series(name), gf.expand(order)
            rep.add(
                f"{name}_{fam.upper()} closed form",
                _rng(0, order),
                _first((f"[x^{n}]", s[n], g[n]) for n in range(order + 1)),
            )
    return rep


SHIFT_IDENTITIES = (("111", "11"), ("122", "12"), ("211", "21"), ("212", "21"))


def suite_totals(max_n: int = 12, order: int = 20) -> VerifyReport:
    rep = VerifyReport("totals")
    for tau in TABLE1_PATTERNS:
        lo = max(2, TOT_FORMULAS.get(tau, TOT_FORMULAS["11"]).validity)
        rep.add(
            f"tot({tau}) vs oracle",
            _rng(lo, max_n),
            _first((f"n={n}", tot(tau, n), total_occurrences(n, tau)) for n in range(lo, max_n + 1)),
        )
        d = gf_table1(tau).expand(order).derivative_at("q", 1).ints()
        rep.add(
            f"tot({tau}) vs dF/dq at q=1",
            _rng(lo, order),
            _first((f"n={n}", tot(tau, n), d[n]) for n in range(lo, order + 1)),
        )
    for long, short in SHIFT_IDENTITIES:
        # both sides from the generating functions, independent of the closed forms
        a = gf_table1(long).expand(order).derivative_at("q", 1).ints()
        b = gf_table1(short).expand(order).derivative_at("q", 1).ints()
        rep.add(
            f"tot_n({long}) = tot_(n-1)({short})",
            _rng(2, order),
            _first((f"n={n}", a[n], b[n - 1]) for n in range(2, order + 1)),
        )
    return rep


def suite_avoiders(max_n: int = 12, max_n_11: int = 14) -> VerifyReport:
    rep = VerifyReport("avoiders")
    for tau, formula in AVOIDER_FORMULAS.items():
        lo = formula.validity
        g = gf_table1(tau).substitute({"q": 0}).expand(max_n).ints()
        rep.add(
            f"f_n({tau})",
            _rng(lo, max_n),
            _first(
                itertools.chain.from_iterable(
                    [(f"n={n} oracle", avoiders(tau, n), avoider_count(n, tau)), (f"n={n} GF", avoiders(tau, n), g[n])]
                    for n in range(lo, max_n + 1)
                )
            ),
        )
    rep.add(
        "f_n(11) = 2^(n-2)",
        _rng(2, max_n_11),
        _first(
            (f"n={n}", sum(1 for _ in iter_avoiders(n, "11")), 2 ** (n - 2))
            for n in range(2, max_n_11 + 1)
        ),
    )
    return rep


# -- bijection checks (each returns the first problem or None) -------------


def _descents(w) -> int:
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


def _heads(w) -> tuple[tuple[int, int], ...]:
    return tuple((w[s], e - s) for s, e in increasing_runs(w))


def check_prime(n: int) -> str | None:
    sources = [(0,) + b for b in itertools.product((0, 1), repeat=n - 2)] if n >= 2 else []
    level_free = sorted(w for w in iter_flattened(n) if count_pattern(w, "11") == 0)
    images = [bj.prime_map(b) for b in sources]
    if sorted(images) != level_free:
        return f"n={n}: image of prime_map is not F_n(11)"
    for b, w in zip(sources, images):
        if bj.prime_inverse(w) != b:
            return f"n={n}: prime_inverse(prime_map({b})) = {bj.prime_inverse(w)}"
        ones = sum(1 for x, _ in letter_runs(b) if x == 1)
        if _descents(w) != ones:
            return f"n={n}: {b} has {ones} runs of 1 but image {w} has {_descents(w)} descents"
        if count_pattern(w, "123") != n - 1 - len(letter_runs(b)):
            return f"n={n}: #123 of {w} is not n-1-run({b})"
    return None


def check_trun_map(n: int) -> str | None:
    words = list(iter_flattened(n))
    domain = [bj.MarkedWord(w, m) for w in words for m in bj.trun_marks(w)]
    if len(domain) != sum(trun(w) - 1 for w in words):
        return f"n={n}: marked domain size is not the trun-1 sum"
    images = [bj.trun_map(mw) for mw in domain]
    target = set(words) - {tuple([1] * n)}
    if len(set(images)) != len(images):
        return f"n={n}: trun_map is not injective"
    if set(images) != target:
        return f"n={n}: trun_map is not onto F_n - {{1^n}}"
    for mw, w in zip(domain, images):
        if bj.trun_map_inverse(w) != mw:
            return f"n={n}: inverse fails at {w}"
    return None


def _involution(n: int, f: Callable, a: str, b: str, invariant: Callable, inv_name: str) -> tuple[str | None, int]:
    """Shared checks; returns (problem, number of words where #a(w) != #b(f(w)))."""
    words = list(iter_flattened(n))
    space = set(words)
    pairs: Counter = Counter()
    pointwise_misses = 0
    for w in words:
        v = f(w)
        if v not in space:
            return f"n={n}: {w} maps outside F_n", 0
        if f(v) != w:
            return f"n={n}: not an involution at {w}", 0
        if invariant(w) != invariant(v):
            return f"n={n}: {inv_name} not preserved at {w} -> {v}", 0
        if count_pattern(w, a) != count_pattern(v, b):
            pointwise_misses += 1
        pairs[(count_pattern(w, a), count_pattern(w, b))] += 1
    swapped = Counter({(y, x): c for (x, y), c in pairs.items()})
    if pairs != swapped:
        return f"n={n}: joint ({a},{b}) distribution is not symmetric", pointwise_misses
    return None, pointwise_misses


def check_tilde(n: int) -> str | None:
    problem, misses = _involution(n, bj.tilde_involution, "112", "122", _heads, "run heads and lengths")
    if problem is None and misses:
        problem = f"n={n}: #112(w) != #122(tilde(w)) for {misses} words"
    return problem


def check_hat(n: int) -> str | None:
    problem, misses = _involution(n, bj.hat_involution, "211", "221", _descents, "descent count")
    if problem is None and misses:
        problem = f"n={n}: #211(w) != #221(hat(w)) for {misses} words"
    return problem


def hat_moved_descents(n: int) -> int:
    """Number of words of F_n whose descent positions change under hat."""
    def pos(w):
        return [i for i in range(len(w) - 1) if w[i] > w[i + 1]]

    return sum(1 for w in iter_flattened(n) if pos(w) != pos(bj.hat_involution(w)))


def check_swap(n: int) -> str | None:
    problem, misses = _involution(n, bj.swap_231_221, "231", "221", lambda w: len(w), "length")
    if problem is not None:
        return problem
    if misses:
        return f"n={n}: #231(w) != #221(swap(w)) for {misses} words"
    joint = Counter()
    for w in iter_flattened(n):
        joint[(trun(w), count_pattern(w, "231"), count_pattern(w, "221"))] += 1
    if joint != Counter({(t, b, a): c for (t, a, b), c in joint.items()}):
        return f"n={n}: joint (trun,#231,#221) distribution is not swap-invariant"
    return None


def swap_preserves_trun(n: int) -> bool:
    return all(trun(bj.swap_231_221(w)) == trun(w) for w in iter_flattened(n))


def check_valley(n: int) -> str | None:
    domain = [bj.MarkedWord(w, i) for w in iter_flattened(n) for i in bj.occurrences_312(w)]
    target = {bj.MarkedWord(w, i) for w in iter_flattened(n - 1) for i in bj.valley_positions(w)}
    images = [bj.valley_map(mw) for mw in domain]
    if len(set(images)) != len(images):
        return f"n={n}: valley_map is not injective"
    if set(images) != target:
        return f"n={n}: image is not the set of marked valleys of F_{n - 1}"
    for mw, im in zip(domain, images):
        if bj.valley_inverse(im) != mw:
            return f"n={n}: valley_inverse fails at {im}"
    if n >= 2 and len(domain) != tot("312", n):
        return f"n={n}: {len(domain)} marked occurrences but tot = {tot('312', n)}"
    return None


BIJECTION_BOUNDS = {"prime": 12, "trun": 10, "tilde": 12, "hat": 12, "swap": 10, "valley": 11}
_CHECKS = {
    "prime": (check_prime, 2),
    "trun": (check_trun_map, 1),
    "tilde": (check_tilde, 1),
    "hat": (check_hat, 1),
    "swap": (check_swap, 1),
    "valley": (check_valley, 3),
}


def suite_bijections(max_n: int | None = None) -> VerifyReport:
    """max_n caps every map's bound; None uses the per-map defaults."""
    rep = VerifyReport("bijections")
    for name, (check, lo) in _CHECKS.items():
        hi = BIJECTION_BOUNDS[name] if max_n is None else max_n
        problem = next((p for p in (check(n) for n in range(lo, hi + 1)) if p), None)
        note = ""
        if problem is None and name == "hat":
            note = f"descent positions move in {hat_moved_descents(min(hi, 8))} words of F_{min(hi, 8)}"
        if problem is None and name == "swap":
            note = "trun preserved wordwise" if all(swap_preserves_trun(n) for n in range(1, hi + 1)) else "trun moves"
        rep.add(name, _rng(lo, hi), problem, note)
    return rep


def distribution_witness(a: str, b: str, max_n: int = 12) -> int | None:
    """Least n with differing q-distributions of the two patterns."""
    return next((n for n in range(1, max_n + 1) if pattern_distribution(n, a) != pattern_distribution(n, b)), None)


def suite_equidistribution(max_n: int = 12, order: int = 20) -> VerifyReport:
    rep = VerifyReport("equidistribution")
    for group in (("112", "122"), ("211", "221", "231")):
        base = group[0]
        for other in group[1:]:
            rep.add(
                f"{base} ~ {other}",
                _rng(1, max_n),
                _first(
                    (f"n={n}", pattern_distribution(n, other), pattern_distribution(n, base))
                    for n in range(1, max_n + 1)
                ),
            )
    a = gf_table1("211").expand(order).derivative_at("q", 1).ints()
    b = gf_table1("212").expand(order).derivative_at("q", 1).ints()
    rep.add("tot(211) = tot(212)", _rng(1, order), _first((f"n={n}", a[n], b[n]) for n in range(1, order + 1)))
    w = distribution_witness("211", "212", max_n)
    rep.add(
        "211 and 212 distributions differ",
        _rng(1, max_n),
        None if w is not None else "no n found",
        "" if w is None else f"first difference at n={w}",
    )
    return rep


def run_suite(name: str, max_n: int | None = None) -> list[VerifyReport]:
    """Run a named suite (or "all").

    max_n bounds the brute-force side (default 10); for "functional" it is the
    series order (default 20).  Series-side checks elsewhere always run to x^20.
    """
    brute = DEFAULT_MAX_N if max_n is None else max_n
    runners: dict[str, Callable[[], VerifyReport]] = {
        "cardinality": lambda: suite_cardinality(brute),
        "table1": lambda: suite_table1(brute),
        "theorems": lambda: suite_theorems(brute),
        "functional": lambda: suite_functional(20 if max_n is None else max_n),
        "recurrences": lambda: suite_recurrences(brute),
        "totals": lambda: suite_totals(brute),
        "avoiders": lambda: suite_avoiders(brute, brute),
        "bijections": lambda: suite_bijections(brute),
        "equidistribution": lambda: suite_equidistribution(brute),
    }
    if name != "all" and name not in runners:
        raise InvalidInput(f"unknown suite {name!r}")
    names = SUITES if name == "all" else (name,)
    out = []
    for s in names:
        start = time.perf_counter()
        rep = runners[s]()
        rep.elapsed = time.perf_counter() - start
        out.append(rep)
    return out
