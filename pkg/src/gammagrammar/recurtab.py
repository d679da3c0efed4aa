"""Coefficient recurrences, the third pipeline next to enumeration and
grammar derivation.

Every table is a sparse mapping; indices outside the stored support read as
zero, which is how the recurrences treat negative or out-of-range indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Callable, Mapping

from .grammar import derive_n, preset
from .polycore import Poly, X, poly_partial


class UnknownRecurrence(ValueError):
    pass


@dataclass(frozen=True)
class CoefficientTable:
    name: str
    n: int
    entries: Mapping  # (i, j) -> int, or k -> int

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    @property
    def bivariate(self) -> bool:
        return any(isinstance(k, tuple) for k in self.entries)

    def total(self) -> int:
        return sum(self.entries.values())

    def to_poly(self, xv: str = "x", yv: str = "y") -> Poly:
        if self.bivariate:
            return Poly.from_counts(self.entries, [xv, yv])
        return Poly.from_counts({(k,): v for k, v in self.entries.items()}, [xv])

    def rows(self) -> list:
        """Sorted ``(i, j, value)`` or ``(k, value)`` tuples over nonzero entries."""
        out = []
        for key in sorted(self.entries):
            v = self.entries[key]
            if v:
                out.append((*key, v) if isinstance(key, tuple) else (key, v))
        return out

    def to_tsv(self) -> str:
        head = "i\tj\tvalue" if self.bivariate else "k\tvalue"
        return "\n".join([head] + ["\t".join(str(c) for c in r) for r in self.rows()]) + "\n"

    def to_json(self) -> dict:
        keys = ["i", "j", "value"] if self.bivariate else ["k", "value"]
        return {"name": self.name, "n": self.n,
                "entries": [dict(zip(keys, r)) for r in self.rows()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _step2(prev: dict, size: int, rule: Callable) -> dict:
    """Apply ``rule(get, i, j)`` over 0..size for both indices."""
    get = lambda i, j: prev.get((i, j), 0)  # noqa: E731
    return _clean({(i, j): rule(get, i, j) for i in range(size + 1) for j in range(size + 1)})


# ------------------------------------------------------------------ a(n,k)


def _rows_a(n: int) -> list:
    rows = [None, {1: 1}]
    for m in range(2, n + 1):
        p = rows[-1]
        rows.append(_clean({k: k * p.get(k, 0) + (2 * m - 4 * k + 4) * p.get(k - 1, 0)
                            for k in range(1, m + 1)}))
    return rows


def table_a(n: int) -> CoefficientTable:
    """Peak numbers: ``A_n(x) = sum_k a(n,k) x^k (1+x)^(n+1-2k)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return CoefficientTable("a", n, _rows_a(n)[n])


def eulerian_from_a(n: int, var: str = "x") -> Poly:
    x = X(var)
    total = Poly()
    for k, v in table_a(n).entries.items():
        total = total + v * x ** k * (1 + x) ** (n + 1 - 2 * k)
    return total


def eulerian_number(n: int, k: int) -> int:
    """<n k>: permutations of [n] with k-1 descents, k in 1..n."""
    if not 1 <= k <= n:
        return 0
    return sum((-1) ** t * comb(n + 1, t) * (k - t) ** n for t in range(k + 1))


# ------------------------------------------------------------------ g_n(i,j)


def _rows_g(n: int) -> list:
    rows = [{(0, 0): 1}]
    for m in range(n):
        rows.append(_step2(rows[-1], m + 2, lambda g, i, j, m=m:
                           g(i - 1, j) + 4 * (1 + i) * g(i + 1, j - 1) + 2 * j * g(i, j)
                           + 4 * (m + 2 - i - 2 * j) * g(i, j - 1)))
    return rows


def table_g(n: int) -> CoefficientTable:
    """g_n(i,j) with g_0(0,0) = 1 (so g_1(1,0) = 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return CoefficientTable("g", n, _rows_g(n)[n])


# ------------------------------------------------------------ gamma_{n,i,j}


def _rows_gamma(n: int) -> list:
    rows = [None, {(1, 1): 1}]
    for m in range(1, n):
        rows.append(_step2(rows[-1], 2 * m + 3, lambda g, i, j, m=m:
                           i * g(i, j - 1) + j * g(i - 1, j)
                           + 2 * (2 * m + 4 - i - 2 * j) * g(i - 1, j - 1)))
    return rows


def table_gamma_stirling(n: int) -> CoefficientTable:
    if n < 1:
        raise ValueError("n must be at least 1")
    return CoefficientTable("gamma-stirling", n, _rows_gamma(n)[n])


# ------------------------------------------------------------ h_n, l_n


def _rows_h_l(n: int) -> tuple:
    hs = [None, {(0, 0): 1}]
    ls = [None]
    for m in range(1, n + 1):
        ls.append(_step2(hs[m], 2 * m + 2, lambda h, i, j, m=m:
                         2 * h(i - 2, j - 1) + i * h(i, j - 2) + (j - 1) * h(i - 1, j - 1)
                         + 2 * (3 * m + 2 - i - 2 * j) * h(i - 1, j - 2)))
        if m < n:
            hs.append(_step2(ls[m], 2 * m + 2, lambda l, i, j, m=m:
                             (i + 1) * l(i + 1, j) + (j + 1) * l(i, j + 1)
                             + 2 * (3 * m + 1 - i - 2 * j) * l(i, j)))
    return hs, ls


def tables_h_l(n: int) -> tuple:
    """Coupled h_n/l_n tables, seeded h_1(0,0) = 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    hs, ls = _rows_h_l(n)
    return CoefficientTable("h", n, hs[n]), CoefficientTable("l", n, ls[n])


def standalone_l(n: int) -> CoefficientTable:
    """The single-sequence l_{n+1} recurrence, seeded l_1(2,1) = 2."""
    row = {(2, 1): 2}
    for m in range(1, n):
        row = _step2(row, 2 * m + 4, lambda l, i, j, m=m:
                     i * (i + 1) * l(i + 1, j - 2) + 2 * i * (j - 1) * l(i, j - 1)
                     + j * (j - 1) * l(i - 1, j) + 2 * j * l(i - 2, j)
                     + 4 * i * (3 * m + 5 - i - 2 * j) * l(i, j - 2)
                     + 4 * (3 * m + 5 - i - 2 * j) * l(i - 2, j - 1)
                     + 4 * (3 * m + 6 - i - 2 * j) * (3 * m + 5 - i - 2 * j) * l(i - 1, j - 2)
                     + 2 * ((2 * j - 2) * (3 * m + 4 - i - 2 * j) + i + j - 2) * l(i - 1, j - 1))
    return CoefficientTable("l-standalone", n, row)


# ------------------------------------------------------------ s_n, t_n


def _rows_s_t(n: int) -> tuple:
    ts = [None, {(0, 1): 1}]
    ss = [None]
    for m in range(1, n + 1):
        ss.append(_step2(ts[m], 3 * m + 2, lambda t, i, j, m=m:
                         i * t(i, j - 1) + j * t(i - 1, j)
                         + 2 * (3 * m + 2 - i - 2 * j) * t(i - 1, j - 1)))
        if m < n:
            ts.append(_step2(ss[m], 3 * m + 3, lambda s, i, j, m=m:
                             (i + 1) * s(i + 1, j - 1) + j * s(i, j)
                             + 2 * (3 * m + 3 - i - 2 * j) * s(i, j - 1)))
    return ss, ts


def tables_s_t(n: int) -> tuple:
    """Coupled s_n/t_n tables, seeded t_1(0,1) = 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    ss, ts = _rows_s_t(n)
    return CoefficientTable("s", n, ss[n]), CoefficientTable("t", n, ts[n])


def standalone_s(n: int) -> CoefficientTable:
    """The single-sequence s_{n+1} recurrence, seeded s_0(1,0) = 1."""
    row = {(1, 0): 1}
    for m in range(0, n):
        row = _step2(row, 3 * m + 6, lambda s, i, j, m=m:
                     i * (i + 1) * s(i + 1, j - 2) + i * (2 * j - 1) * s(i, j - 1)
                     + 4 * i * (3 * m + 5 - i - 2 * j) * s(i, j - 2)
                     + j * j * s(i - 1, j)
                     + (4 * (j - 1) * (3 * m + 4 - i - 2 * j) + 6 * m + 6 - 2 * i - 2 * j)
                     * s(i - 1, j - 1)
                     + 4 * (3 * m + 6 - i - 2 * j) * (3 * m + 5 - i - 2 * j) * s(i - 1, j - 2))
    return CoefficientTable("s-standalone", n, row)


# ------------------------------------------------------- grammar-extracted


def table_b(n: int) -> CoefficientTable:
    """b(n,k) from ``D^n(u) = u sum_k b(n,k) u^(2k) v^(n-2k)`` (u -> uv, v -> 4u^2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = derive_n(preset("typeB-uv"), "u", n)
    out = {}
    for mono, c in p.items():
        e = dict(mono)
        ue, ve = e.get("u", 0), e.get("v", 0)
        if (ue - 1) % 2 or ve != n - (ue - 1):
            raise ArithmeticError(f"unexpected term u^{ue} v^{ve} in D^{n}(u)")
        out[(ue - 1) // 2] = c
    return CoefficientTable("b", n, out)


def table_d(n: int) -> CoefficientTable:
    """d(n,k) from ``D^n(e)|_(z=0) = e sum_k d(n,k) u^k v^(n-2k)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = derive_n(preset("derangement-uv"), "e", n)
    out = {}
    for mono, c in p.items():
        e = dict(mono)
        if e.get("z", 0):
            continue
        k, ve = e.get("u", 0), e.get("v", 0)
        if e.get("e") != 1 or ve != n - 2 * k:
            raise ArithmeticError(f"unexpected term {mono} in D^{n}(e)")
        out[k] = c
    return CoefficientTable("d", n, out)


def gamma_poly(table: CoefficientTable, d: int, var: str = "x") -> Poly:
    """``sum_k table[k] x^k (1+x)^(d-2k)``."""
    x = X(var)
    total = Poly()
    for k, v in table.entries.items():
        total = total + v * x ** k * (1 + x) ** (d - 2 * k)
    return total


# ------------------------------------------------------------ identities


def leibniz_corollary_check(n: int) -> bool:
    """g_{n+1} = x g_n + sum_{k<n} C(n,k) 2^(n+1-k) g_k a_{n-k}(y)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    g = [t.to_poly() for t in (CoefficientTable("g", m, r) for m, r in enumerate(_rows_g(n + 1)))]
    a_rows = _rows_a(max(n, 1))
    y = X("y")
    rhs = X("x") * g[n]
    for k in range(n):
        a_poly = sum((v * y ** i for i, v in a_rows[n - k].items()), Poly())
        rhs = rhs + comb(n, k) * 2 ** (n + 1 - k) * g[k] * a_poly
    return rhs == g[n + 1]


def _dx(p):
    return poly_partial(p, "x")


def _dy(p):
    return poly_partial(p, "y")


def _polyform_g(n: int) -> bool:
    x, y = X("x"), X("y")
    rows = _rows_g(n + 1)
    for m in range(n + 1):
        cur = CoefficientTable("g", m, rows[m]).to_poly()
        nxt = (x + 4 * m * y) * cur + 4 * y * (1 - x) * _dx(cur) + 2 * y * (1 - 4 * y) * _dy(cur)
        if nxt != CoefficientTable("g", m + 1, rows[m + 1]).to_poly():
            return False
    return True


def _polyform_gamma(n: int) -> bool:
    x, y = X("x"), X("y")
    rows = _rows_gamma(n + 1)
    for m in range(1, n + 1):
        cur = CoefficientTable("gamma", m, rows[m]).to_poly()
        nxt = ((4 * m + 2) * x * y * cur + x * y * (1 - 2 * x) * _dx(cur)
               + x * y * (1 - 4 * y) * _dy(cur))
        if nxt != CoefficientTable("gamma", m + 1, rows[m + 1]).to_poly():
            return False
    return True


def _polyform_h_l(n: int) -> bool:
    x, y = X("x"), X("y")
    hs, ls = _rows_h_l(n + 1)
    for m in range(1, n + 1):
        h = CoefficientTable("h", m, hs[m]).to_poly()
        l_expected = CoefficientTable("l", m, ls[m]).to_poly()
        l = (x * y * (6 * m * y - 6 * y + 2 * x) * h + x * y ** 2 * (1 - 2 * x) * _dx(h)
             + x * y ** 2 * (1 - 4 * y) * _dy(h))
        if l != l_expected:
            return False
        h_next = (6 * m + 2) * l + (1 - 2 * x) * _dx(l) + (1 - 4 * y) * _dy(l)
        if h_next != CoefficientTable("h", m + 1, hs[m + 1]).to_poly():
            return False
    return True


def _polyform_s_t(n: int) -> bool:
    x, y = X("x"), X("y")
    ss, ts = _rows_s_t(n + 1)
    for m in range(1, n + 1):
        t = CoefficientTable("t", m, ts[m]).to_poly()
        s = (2 * (3 * m - 1) * x * y * t + x * y * (1 - 2 * x) * _dx(t)
             + x * y * (1 - 4 * y) * _dy(t))
        if s != CoefficientTable("s", m, ss[m]).to_poly():
            return False
        t_next = 2 * (3 * m + 1) * y * s + y * (1 - 2 * x) * _dx(s) + y * (1 - 4 * y) * _dy(s)
        if t_next != CoefficientTable("t", m + 1, ts[m + 1]).to_poly():
            return False
    return True


POLYFORMS = {"g": _polyform_g, "gamma-stirling": _polyform_gamma,
             "h-l": _polyform_h_l, "s-t": _polyform_s_t}


def polyform_recurrence_check(name: str, n: int) -> bool:
    """Check the differential-operator form of a recurrence for orders up to n+1."""
    try:
        fn = POLYFORMS[name]
    except KeyError:
        raise UnknownRecurrence(name) from None
    return fn(n)


# ------------------------------------------------------------ dispatcher


def _pair(fn, idx):
    return lambda n: fn(n)[idx]


TABLES = {
    "a": table_a,
    "b": table_b,
    "d": table_d,
    "g": table_g,
    "gamma-stirling": table_gamma_stirling,
    "h": _pair(tables_h_l, 0),
    "l": _pair(tables_h_l, 1),
    "l-standalone": standalone_l,
    "s": _pair(tables_s_t, 0),
    "t": _pair(tables_s_t, 1),
    "s-standalone": standalone_s,
}


def table(name: str, n: int) -> CoefficientTable:
    try:
        fn = TABLES[name]
    except KeyError:
        raise UnknownRecurrence(name) from None
    return fn(n)
