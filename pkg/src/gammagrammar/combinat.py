"""Combinatorial families and their statistics.

Word families are stored internally as tuples of integer letter codes:
barred ``k`` is ``2k-1`` and unbarred ``k`` is ``2k``, so the code order is
the Jacobi-Stirling order (1bar < 1 < 2bar < 2 < ...).  The Legendre-Stirling
order compares values only, ``(code + 1) // 2``.  Stirling permutations use
unbarred codes only.

Permutations and signed permutations are plain tuples in one-line notation
(``window[i-1] = pi(i)``).
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .polycore import Poly, X, check_var

# ------------------------------------------------------------------ errors


class UnsupportedFamily(ValueError):
    pass


class UndefinedStatistic(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, family: str, n: int, budget: int):
        super().__init__(f"{family} of order {n} exceeds the enumeration budget {budget}")
        self.family = family
        self.n = n
        self.budget = budget


WORD_FAMILIES = ("stirling", "legendre", "legendre-deleted", "jacobi", "jacobi-deleted",
                 "jacobi-partial")
PERM_FAMILIES = ("perm", "involutions", "derangements")
SIGNED_FAMILIES = ("signed", "typeB-derangements")
FAMILIES = WORD_FAMILIES + PERM_FAMILIES + SIGNED_FAMILIES

DEFAULT_BUDGETS = {
    "perm": 8, "involutions": 8, "derangements": 8,
    "signed": 8, "typeB-derangements": 8,
    "stirling": 6,
    "legendre": 4, "legendre-deleted": 4,
    "jacobi": 4, "jacobi-deleted": 4, "jacobi-partial": 4,
}

BUDGET_ENV = "GAMMAGRAMMAR_BUDGET"


def budget_for(family: str, override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_BUDGETS[family]


def check_budget(family: str, n: int, budget: int | None = None) -> None:
    limit = budget_for(family, budget)
    if n > limit:
        raise BudgetExceeded(family, n, limit)


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise UnsupportedFamily(family)


# ------------------------------------------------------------------ letters


class GenLetter(NamedTuple):
    value: int
    barred: bool = False

    @property
    def code(self) -> int:
        return 2 * self.value - 1 if self.barred else 2 * self.value

    @classmethod
    def from_code(cls, code: int) -> "GenLetter":
        return cls((code + 1) // 2, bool(code & 1))

    def __str__(self) -> str:
        return f"b{self.value}" if self.barred else str(self.value)


def ls_key(code: int) -> int:
    return (code + 1) >> 1


def _order_key(family: str):
    if family.startswith("legendre"):
        return ls_key
    if family == "stirling":
        return ls_key
    return None  # jacobi order is the code itself


@dataclass(frozen=True)
class GenWord:
    letters: tuple
    family: str

    @classmethod
    def from_codes(cls, codes: Sequence[int], family: str) -> "GenWord":
        return cls(tuple(GenLetter.from_code(c) for c in codes), family)

    @classmethod
    def parse(cls, text: str, family: str) -> "GenWord":
        """Parse ``"b2 b1 1 1"``; for bar-free families ``"1221"`` also works."""
        toks = text.split()
        if len(toks) == 1 and toks[0].isdigit() and len(toks[0]) > 1:
            toks = list(toks[0])
        letters = []
        for t in toks:
            if t.startswith("b"):
                letters.append(GenLetter(int(t[1:]), True))
            else:
                letters.append(GenLetter(int(t), False))
        return cls(tuple(letters), family)

    @property
    def codes(self) -> tuple:
        return tuple(l.code for l in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(l) for l in self.letters)

    def to_json(self) -> list:
        return [{"v": l.value, "b": l.barred} for l in self.letters]


def word_str(codes: Sequence[int]) -> str:
    return " ".join(str(GenLetter.from_code(c)) for c in codes)


# --------------------------------------------------------- ground multisets


def ground_multiset(family: str, n: int, extra: Iterable[int] | None = None) -> Counter:
    _check_family(family)
    ms: Counter = Counter()
    skip = set(extra or ())
    for k in range(1, n + 1):
        if family == "stirling":
            ms[2 * k] += 2
            continue
        if not (family == "jacobi-partial" and k in skip):
            ms[2 * k - 1] += 1
        if not (family.endswith("-deleted") and k == n):
            ms[2 * k] += 2
    return ms


def _valid_codes(codes: Sequence[int], key) -> bool:
    first = {}
    for pos, c in enumerate(codes):
        if c & 1:
            continue
        if c in first:
            p = first.pop(c)
            kc = key(c) if key else c
            for mid in codes[p + 1:pos]:
                km = key(mid) if key else mid
                if km <= kc:
                    return False
        else:
            first[c] = pos
    return True


def is_valid(w: GenWord) -> bool:
    """Betweenness condition and ground multiset for the word's family."""
    fam = w.family
    _check_family(fam)
    codes = w.codes
    if not codes:
        return False
    n = max(ls_key(c) for c in codes)
    counts = Counter(codes)
    if fam == "jacobi-partial":
        missing = {k for k in range(1, n + 1) if counts[2 * k - 1] == 0}
        if counts != ground_multiset(fam, n, missing):
            return False
    elif fam in WORD_FAMILIES:
        if counts != ground_multiset(fam, n):
            return False
    else:
        raise UnsupportedFamily(f"is_valid is defined for word families, not {fam}")
    return _valid_codes(codes, _order_key(fam))


# -------------------------------------------------------------- generation


def _insert(w: tuple, gap: int, letters: tuple) -> tuple:
    return w[:gap] + letters + w[gap:]


def _word_level(family: str, n: int, extra: frozenset) -> list:
    """All codes of order n (list), built by repeated insertion."""
    if family == "stirling":
        level = [()]
        for k in range(1, n + 1):
            pair = (2 * k, 2 * k)
            level = [_insert(w, g, pair) for w in level for g in range(len(w) + 1)]
        return level
    full = [()]
    for k in range(1, n + 1):
        last = k == n
        out = []
        for w in full:
            out.extend(_extend_jacobi(w, k, family, extra, last))
        full = out
    return full


def _extend_jacobi(w: tuple, k: int, family: str, extra: frozenset, last: bool) -> list:
    """Children of w at step k: insert barred k (unless skipped), then the pair kk."""
    bar = (2 * k - 1,)
    pair = (2 * k, 2 * k)
    if family == "jacobi-partial" and k in extra:
        mids = [w]
    else:
        mids = [_insert(w, g, bar) for g in range(len(w) + 1)]
    if last and family.endswith("-deleted"):
        return mids
    return [_insert(m, g, pair) for m in mids for g in range(len(m) + 1)]


def _word_parents(family: str, n: int, extra: frozenset) -> list:
    if family == "stirling":
        return _word_level(family, n - 1, extra)
    return _word_level("jacobi-partial" if family == "jacobi-partial" else "jacobi", n - 1, extra)


def _word_children(family: str, n: int, extra: frozenset, parent: tuple) -> list:
    if family == "stirling":
        pair = (2 * n, 2 * n)
        return [_insert(parent, g, pair) for g in range(len(parent) + 1)]
    return _extend_jacobi(parent, n, family, extra, True)


def word_codes(family: str, n: int, extra: Iterable[int] | None = None) -> Iterator[tuple]:
    """Stream the code tuples of a word family in canonical insertion order."""
    ex = frozenset(extra or ())
    for parent in _word_parents(family, n, ex):
        yield from _word_children(family, n, ex, parent)


def signed_perms(n: int) -> Iterator[tuple]:
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * p for s, p in zip(signs, perm))


def typeB_derangements(n: int) -> Iterator[tuple]:
    for w in signed_perms(n):
        if all(w[i] != i + 1 for i in range(n)):
            yield w


def gen_involutions(n: int) -> Iterator[tuple]:
    """All involutions of [n] in one-line notation (lexicographic)."""
    def rec(free: tuple, assign: dict):
        if not free:
            yield tuple(assign[i] for i in range(1, n + 1))
            return
        a = free[0]
        rest = free[1:]
        assign[a] = a
        yield from rec(rest, assign)
        for idx, b in enumerate(rest):
            assign[a], assign[b] = b, a
            yield from rec(rest[:idx] + rest[idx + 1:], assign)
            del assign[b]
        del assign[a]

    results = sorted(rec(tuple(range(1, n + 1)), {}))
    yield from results


def derangements(n: int) -> Iterator[tuple]:
    for p in itertools.permutations(range(1, n + 1)):
        if all(p[i] != i + 1 for i in range(n)):
            yield p


def generate(family: str, n: int, extra: Iterable[int] | None = None,
             budget: int | None = None) -> Iterator:
    """Stream every object of the family exactly once, in canonical order.

    Word families yield :class:`GenWord`; permutation families yield tuples.
    ``extra`` is the set S of barred values removed for ``jacobi-partial``.
    """
    _check_family(family)
    if n < 1:
        raise ValueError("n must be positive")
    check_budget(family, n, budget)
    if family == "jacobi-partial":
        ex = set(extra or ())
        if not ex <= set(range(1, n + 1)):
            raise ValueError(f"S={sorted(ex)} is not a subset of barred 1..{n}")
    if family in WORD_FAMILIES:
        for codes in word_codes(family, n, extra):
            yield GenWord.from_codes(codes, family)
    elif family == "perm":
        yield from itertools.permutations(range(1, n + 1))
    elif family == "involutions":
        yield from gen_involutions(n)
    elif family == "derangements":
        yield from derangements(n)
    elif family == "signed":
        yield from signed_perms(n)
    elif family == "typeB-derangements":
        yield from typeB_derangements(n)


def family_size(family: str, n: int) -> int:
    """Closed-form cardinalities of the insertion-generated families."""
    from math import factorial, prod
    if family == "stirling":
        return prod(2 * k - 1 for k in range(1, n + 1))
    if family in ("legendre", "jacobi"):
        return prod((3 * k - 2) * (3 * k - 1) for k in range(1, n + 1))
    if family in ("legendre-deleted", "jacobi-deleted"):
        return family_size("jacobi", n - 1) * (3 * n - 2)
    if family == "perm":
        return factorial(n)
    if family == "signed":
        return 2 ** n * factorial(n)
    raise UnsupportedFamily(f"no closed form for {family}")


# ------------------------------------------------------------ brute force


def _multiset_perms(counts: dict) -> Iterator[tuple]:
    keys = sorted(counts)
    total = sum(counts.values())
    cur: list = []

    def rec():
        if len(cur) == total:
            yield tuple(cur)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                cur.append(k)
                yield from rec()
                cur.pop()
                counts[k] += 1

    yield from rec()


def brute_force_codes(family: str, n: int, extra: Iterable[int] | None = None) -> set:
    """Filter every arrangement of the ground multiset by the validity rule."""
    ms = dict(ground_multiset(family, n, extra))
    key = _order_key(family)
    return {w for w in _multiset_perms(ms) if _valid_codes(w, key)}


# -------------------------------------------------------------- cycle form


class CycleForm(NamedTuple):
    cycles: tuple

    def __str__(self) -> str:
        def ent(c):
            return f"b{-c}" if c < 0 else str(c)
        return "".join("(" + ",".join(ent(c) for c in cyc) + ")" for cyc in self.cycles)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cycles)


def to_cycle_form(window: Sequence[int]) -> CycleForm:
    """Standard cycle form: ``pi(|c_i|) = c_(i+1)``, each cycle ends with its
    largest signed entry, cycles ascend by last entry."""
    n = len(window)
    seen = set()
    cycles = []
    for a in range(1, n + 1):
        if a in seen:
            continue
        entries = []
        b = a
        while True:
            seen.add(b)
            nxt = window[b - 1]
            entries.append(nxt)
            b = abs(nxt)
            if b == a:
                break
        # entries[i] = pi(|entries[i-1]|); rotate so entries[0] sits at |.| = a
        cyc = [entries[-1]] + entries[:-1]
        top = max(range(len(cyc)), key=lambda i: cyc[i])
        cyc = cyc[top + 1:] + cyc[:top + 1]
        cycles.append(tuple(cyc))
    cycles.sort(key=lambda c: c[-1])
    return CycleForm(tuple(cycles))


def from_cycle_form(cf: CycleForm | Sequence[Sequence[int]]) -> tuple:
    cycles = cf.cycles if isinstance(cf, CycleForm) else cf
    n = sum(len(c) for c in cycles)
    window = [0] * n
    for cyc in cycles:
        k = len(cyc)
        for i, c in enumerate(cyc):
            window[abs(c) - 1] = cyc[(i + 1) % k]
    if 0 in window or sorted(abs(v) for v in window) != list(range(1, n + 1)):
        raise ValueError(f"not a signed permutation cycle form: {cycles}")
    return tuple(window)


def is_standard_cycle_form(cf: CycleForm) -> bool:
    lasts = [c[-1] for c in cf.cycles]
    return (all(c[-1] == max(c) for c in cf.cycles) and lasts == sorted(lasts))


# -------------------------------------------------------------- statistics

WORD_STATS = ("asc", "des", "plat", "dasc", "ddes", "laplat", "desp", "peak", "ubdes",
              "expk", "bddes")
PERM_STATS = ("des", "asc", "exc", "dc", "fix", "peak", "ddes", "valley", "dasc")
SIGNED_STATS = ("desB", "wexc", "aexc", "single", "fix", "neg", "cda", "cdd")
CYCLE_STATS = ("cda", "cdd", "single", "wexc", "aexc", "cycle_asc", "cycle_des")


def word_stats_codes(codes: Sequence[int], family: str, names: Sequence[str]) -> tuple:
    """Statistics of a coded word with value-0 sentinels at both ends."""
    key = _order_key(family)
    ks = [0]
    ks.extend(key(c) for c in codes) if key else ks.extend(codes)
    ks.append(0)
    m = len(codes)
    out = []
    for name in names:
        if name == "asc":
            out.append(sum(1 for i in range(m + 1) if ks[i] < ks[i + 1]))
        elif name == "des":
            out.append(sum(1 for i in range(m + 1) if ks[i] > ks[i + 1]))
        elif name == "plat":
            out.append(sum(1 for i in range(m + 1) if ks[i] == ks[i + 1]))
        elif name == "dasc":
            out.append(sum(1 for i in range(1, m + 1) if ks[i - 1] < ks[i] < ks[i + 1]))
        elif name == "ddes":
            top = m if family == "stirling" else m + 1
            out.append(sum(1 for i in range(1, top) if ks[i - 1] > ks[i] > ks[i + 1]))
        elif name == "laplat":
            out.append(sum(1 for i in range(1, m + 1) if ks[i - 1] < ks[i] == ks[i + 1]))
        elif name == "desp":
            out.append(sum(1 for i in range(1, m + 1) if ks[i - 1] > ks[i] == ks[i + 1]))
        elif name == "peak":
            out.append(sum(1 for i in range(1, m + 1) if ks[i - 1] < ks[i] > ks[i + 1]))
        elif name == "expk":
            out.append(sum(1 for i in range(1, m + 1)
                           if ks[i - 1] < ks[i] and ks[i] >= ks[i + 1]))
        elif name == "ubdes":
            out.append(sum(1 for i in range(1, m + 1)
                           if ks[i] > ks[i + 1] and not codes[i - 1] & 1))
        elif name == "bddes":
            out.append(sum(1 for i in range(1, m + 1)
                           if ks[i - 1] > ks[i] > ks[i + 1] and codes[i - 1] & 1))
        else:
            raise UndefinedStatistic(f"{name!r} is not defined for {family}")
    return tuple(out)


def perm_stats(p: Sequence[int], names: Sequence[str]) -> tuple:
    """Permutation statistics; des/asc range over 1..n-1, the peak family
    uses value-0 sentinels at both ends."""
    n = len(p)
    ext = (0,) + tuple(p) + (0,)
    out = []
    for name in names:
        if name == "des":
            out.append(sum(1 for i in range(n - 1) if p[i] > p[i + 1]))
        elif name == "asc":
            out.append(sum(1 for i in range(n - 1) if p[i] < p[i + 1]))
        elif name == "exc":
            out.append(sum(1 for i in range(n) if p[i] > i + 1))
        elif name == "dc":
            out.append(sum(1 for i in range(n) if p[i] < i + 1))
        elif name == "fix":
            out.append(sum(1 for i in range(n) if p[i] == i + 1))
        elif name == "peak":
            out.append(sum(1 for i in range(1, n + 1) if ext[i - 1] < ext[i] > ext[i + 1]))
        elif name == "valley":
            out.append(sum(1 for i in range(1, n + 1) if ext[i - 1] > ext[i] < ext[i + 1]))
        elif name == "ddes":
            out.append(sum(1 for i in range(1, n + 1) if ext[i - 1] > ext[i] > ext[i + 1]))
        elif name == "dasc":
            out.append(sum(1 for i in range(1, n + 1) if ext[i - 1] < ext[i] < ext[i + 1]))
        else:
            raise UndefinedStatistic(f"{name!r} is not defined for permutations")
    return tuple(out)


def cycle_stats(cf: CycleForm, names: Sequence[str]) -> tuple:
    out = []
    for name in names:
        total = 0
        for c in cf.cycles:
            k = len(c)
            if name == "cda":
                total += sum(1 for j in range(1, k - 1) if c[j - 1] < c[j] < c[j + 1])
            elif name == "cdd":
                total += sum(1 for j in range(1, k - 1) if c[j - 1] > c[j] > c[j + 1])
            elif name == "single":
                total += k == 1 and c[0] < 0
            elif name in ("cycle_asc", "wexc"):
                total += sum(1 for j in range(k - 1) if c[j] < c[j + 1])
                if name == "wexc" and k == 1 and c[0] > 0:
                    total += 1
            elif name in ("cycle_des", "aexc"):
                if k > 1:
                    total += sum(1 for j in range(k) if c[j] > c[(j + 1) % k])
            else:
                raise UndefinedStatistic(f"{name!r} is not defined for cycle forms")
        out.append(total)
    return tuple(out)


def signed_stats(w: Sequence[int], names: Sequence[str], cf: CycleForm | None = None) -> tuple:
    n = len(w)

    def pi(i):
        return w[i - 1] if i > 0 else -w[-i - 1]

    out = []
    for name in names:
        if name == "desB":
            ext = (0,) + tuple(w)
            out.append(sum(1 for i in range(n) if ext[i] > ext[i + 1]))
        elif name == "wexc":
            out.append(sum(1 for i in range(1, n + 1)
                           if w[i - 1] == i or pi(abs(w[i - 1])) > w[i - 1]))
        elif name == "aexc":
            out.append(sum(1 for i in range(1, n + 1) if pi(abs(w[i - 1])) < w[i - 1]))
        elif name == "single":
            out.append(sum(1 for i in range(1, n + 1) if w[i - 1] == -i))
        elif name == "fix":
            out.append(sum(1 for i in range(1, n + 1) if w[i - 1] == i))
        elif name == "neg":
            out.append(sum(1 for v in w if v < 0))
        elif name in ("cda", "cdd", "cycle_asc", "cycle_des"):
            if cf is None:
                cf = to_cycle_form(w)
            out.append(cycle_stats(cf, (name,))[0])
        else:
            raise UndefinedStatistic(f"{name!r} is not defined for signed permutations")
    return tuple(out)


def statistics(obj, names: Sequence[str], family: str | None = None) -> dict:
    """Dispatch on the object kind and return ``{name: count}``."""
    names = list(names)
    if isinstance(obj, GenWord):
        vals = word_stats_codes(obj.codes, obj.family, names)
    elif isinstance(obj, CycleForm):
        vals = cycle_stats(obj, names)
    else:
        fam = family or ("signed" if any(v < 0 for v in obj) else "perm")
        if fam in SIGNED_FAMILIES:
            vals = signed_stats(tuple(obj), names)
        elif fam in PERM_FAMILIES:
            vals = perm_stats(tuple(obj), names)
        elif fam in WORD_FAMILIES:
            vals = word_stats_codes(tuple(obj), fam, names)
        else:
            raise UnsupportedFamily(fam)
    return dict(zip(names, vals))


# ------------------------------------------------------------ distributions


@dataclass(frozen=True)
class StatDistribution:
    polynomial: Poly
    family: str
    n: int
    stats: tuple  # ((statistic, variable), ...)
    extra: tuple = ()

    def cardinality(self) -> int:
        return int(self.polynomial.evaluate({v: 1 for v in self.polynomial.variables}))

    def to_json(self) -> dict:
        from .polycore import poly_to_json
        meta = {"family": self.family, "n": self.n,
                "stats": [{"stat": s, "var": v} for s, v in self.stats]}
        if self.extra:
            meta["S"] = list(self.extra)
        return {"polynomial": str(self.polynomial), "terms": poly_to_json(self.polynomial),
                **meta}


def _stat_fn(family: str):
    if family in WORD_FAMILIES:
        return lambda obj, names: word_stats_codes(obj, family, names)
    if family in SIGNED_FAMILIES:
        return signed_stats
    return perm_stats


def _objects(family: str, n: int, extra: frozenset, part: int, nparts: int) -> Iterator:
    if family in WORD_FAMILIES:
        parents = _word_parents(family, n, extra)
        for idx, parent in enumerate(parents):
            if idx % nparts == part:
                yield from _word_children(family, n, extra, parent)
        return
    if family == "involutions":
        for idx, p in enumerate(gen_involutions(n)):
            if idx % nparts == part:
                yield p
        return
    for idx, perm in enumerate(itertools.permutations(range(1, n + 1))):
        if idx % nparts != part:
            continue
        if family == "perm":
            yield perm
        elif family == "derangements":
            if all(perm[i] != i + 1 for i in range(n)):
                yield perm
        else:
            for signs in itertools.product((1, -1), repeat=n):
                w = tuple(s * p for s, p in zip(signs, perm))
                if family == "typeB-derangements" and any(w[i] == i + 1 for i in range(n)):
                    continue
                yield w


def _count_part(args) -> Counter:
    family, n, extra, names, part, nparts = args
    fn = _stat_fn(family)
    counts: Counter = Counter()
    for obj in _objects(family, n, extra, part, nparts):
        counts[fn(obj, names)] += 1
    return counts


def stat_counter(family: str, n: int, names: Sequence[str], extra: Iterable[int] | None = None,
                 workers: int = 1, budget: int | None = None) -> Counter:
    """Joint distribution of ``names`` over the family as a Counter of tuples."""
    _check_family(family)
    if n < 1:
        raise ValueError("n must be positive")
    check_budget(family, n, budget)
    ex = frozenset(extra or ())
    names = tuple(names)
    # validate statistic names up front
    probe = {"stirling": (2, 2), "perm": (1,), "involutions": (1,), "derangements": (2, 1),
             "signed": (1,), "typeB-derangements": (-1,)}.get(family, (1, 2, 2))
    _stat_fn(family)(probe, names)
    if workers <= 1:
        return _count_part((family, n, ex, names, 0, 1))
    total: Counter = Counter()
    jobs = [(family, n, ex, names, i, workers) for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for c in pool.map(_count_part, jobs):
            total.update(c)
    return total


def distribution(family: str, n: int, stats: Sequence[tuple], extra: Iterable[int] | None = None,
                 workers: int = 1, budget: int | None = None) -> StatDistribution:
    """Generating polynomial ``sum prod var^stat`` over the family."""
    stats = tuple((s, check_var(v)) for s, v in stats)
    names = [s for s, _ in stats]
    counts = stat_counter(family, n, names, extra, workers, budget)
    # several statistics may share a variable
    by_var = sorted({v for _, v in stats})
    merged: Counter = Counter()
    for exps, c in counts.items():
        acc = dict.fromkeys(by_var, 0)
        for (_, v), e in zip(stats, exps):
            acc[v] += e
        merged[tuple(acc[v] for v in by_var)] += c
    poly = Poly.from_counts(merged, by_var)
    return StatDistribution(poly, family, n, stats, tuple(sorted(extra or ())))


def parse_stats(spec: str) -> list:
    """``"asc:x,des:y"`` -> ``[("asc", "x"), ("des", "y")]``."""
    out = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        if ":" not in item:
            raise ValueError(f"expected stat:var, got {item!r}")
        s, v = item.split(":", 1)
        out.append((s.strip(), check_var(v.strip())))
    return out


DEFAULT_STATS = {
    "stirling": "asc:x,des:y,plat:z",
    "legendre": "asc:x,des:y,plat:z",
    "legendre-deleted": "asc:x,des:y,plat:z",
    "jacobi": "asc:x,des:y,plat:z",
    "jacobi-deleted": "asc:x,des:y,plat:z",
    "jacobi-partial": "asc:x,des:y,plat:z",
    "perm": "des:x",
    "involutions": "des:x",
    "derangements": "exc:x",
    "signed": "desB:x",
    "typeB-derangements": "wexc:x,aexc:y,single:z",
}


# --------------------------------------------------------- named polynomials


def E_poly(n: int, **kw) -> Poly:
    """E_n(x,y,z) over type-B derangements (wexc, aexc, single)."""
    return distribution("typeB-derangements", n, [("wexc", "x"), ("aexc", "y"),
                                                   ("single", "z")], **kw).polynomial


def C_poly(n: int, **kw) -> Poly:
    return distribution("stirling", n, [("asc", "x"), ("des", "y"), ("plat", "z")], **kw).polynomial


def L_poly(n: int, **kw) -> Poly:
    return distribution("legendre", n, [("asc", "x"), ("des", "y"), ("plat", "z")], **kw).polynomial


def H_poly(n: int, **kw) -> Poly:
    """H_n = sum over LSD_n of x^(asc-1) y^(des-1) z^plat."""
    p = distribution("legendre-deleted", n, [("asc", "x"), ("des", "y"), ("plat", "z")],
                     **kw).polynomial
    return p * Poly.monomial({"x": -1, "y": -1})


def S_poly(n: int, **kw) -> Poly:
    return distribution("jacobi", n, [("asc", "x"), ("des", "y"), ("plat", "z")], **kw).polynomial


def T_poly(n: int, **kw) -> Poly:
    return distribution("jacobi-deleted", n, [("asc", "x"), ("des", "y"), ("plat", "z")],
                        **kw).polynomial


def jsp_ki_poly(k: int, i: int, budget: int | None = None, workers: int = 1) -> Poly:
    """JSP_{k,i}(x,y,z): union of JSP_{k,S} over |S| = i."""
    total = Poly()
    for S in itertools.combinations(range(1, k + 1), i):
        total = total + distribution("jacobi-partial", k, [("asc", "x"), ("des", "y"),
                                                           ("plat", "z")],
                                     extra=S, budget=budget, workers=workers).polynomial
    return total


def involution_descent_poly(n: int, var: str = "x", budget: int | None = None) -> Poly:
    return distribution("involutions", n, [("des", var)], budget=budget).polynomial


def eulerian_poly(n: int, var: str = "x") -> Poly:
    """A_n(x) = sum over S_n of x^(des+1)."""
    return distribution("perm", n, [("des", var)]).polynomial * X(var)


def typeB_eulerian_poly(n: int, var: str = "x") -> Poly:
    return distribution("signed", n, [("desB", var)]).polynomial


def symmetric_slice_poly(m: int) -> Poly:
    """sum over S_m of x^(des+1) y^(asc+1)."""
    return distribution("perm", m, [("des", "x"), ("asc", "y")]).polynomial * X("x") * X("y")
