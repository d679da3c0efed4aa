"""Exact sparse multivariate Laurent polynomials over the integers.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable
name with no zero exponents; a :class:`Poly` maps monomials to nonzero
Python ints.  Values are immutable.

Text form::

    term   := [sign] [coeff ["*"]] factor ("*" factor)*  |  [sign] coeff
    factor := var ["^" signed-int]

e.g. ``"x*y^2 + x*y"``, ``"3*x^2*y^2*z^-3"``, ``"0"``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Monomial = tuple  # tuple[tuple[str, int], ...]
ONE_MONO: Monomial = ()

_VAR_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, offset: int):
        super().__init__(f"{message} at offset {offset}: {text!r}")
        self.text = text
        self.offset = offset


class NonInvertibleSubstitution(ValueError):
    pass


class MissingAssignment(KeyError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def check_var(name: str) -> str:
    if not isinstance(name, str) or not _VAR_RE.match(name):
        raise ValueError(f"invalid variable name {name!r}")
    return name


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        s = exps.get(v, 0) + e
        if s:
            exps[v] = s
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


def mono_pow(a: Monomial, k: int) -> Monomial:
    if k == 0:
        return ONE_MONO
    return tuple((v, e * k) for v, e in a)


def mono_degree(a: Monomial) -> int:
    return sum(e for _, e in a)


class Poly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # caller guarantees normalized monomials and no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # construction helpers

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls._raw({ONE_MONO: int(c)} if c else {})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls._raw({((check_var(name), 1),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: int = 1) -> "Poly":
        mono = tuple(sorted((check_var(v), int(e)) for v, e in exps.items() if e))
        return cls._raw({mono: int(coeff)} if coeff else {})

    @classmethod
    def from_counts(cls, counts: Mapping[tuple, int], names: Iterable[str]) -> "Poly":
        """Build ``sum count * prod(name_i ^ exps_i)`` from exponent tuples."""
        names = list(names)
        order = sorted(range(len(names)), key=lambda i: names[i])
        terms: dict = {}
        for exps, c in counts.items():
            if not c:
                continue
            mono = tuple((names[i], exps[i]) for i in order if exps[i])
            terms[mono] = terms.get(mono, 0) + c
        return cls(terms)

    # basic protocol

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    @property
    def variables(self) -> tuple:
        names = set()
        for m in self._terms:
            names.update(v for v, _ in m)
        return tuple(sorted(names))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coeff(self, exps: Mapping[str, int] | Monomial) -> int:
        if isinstance(exps, Mapping):
            exps = tuple(sorted((v, e) for v, e in exps.items() if e))
        return self._terms.get(exps, 0)

    def degree(self, var: str | None = None) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        if var is None:
            return max(mono_degree(m) for m in self._terms)
        return max(dict(m).get(var, 0) for m in self._terms)

    def min_degree(self, var: str) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return min(dict(m).get(var, 0) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self._terms}) <= 1

    # arithmetic

    def __add__(self, other) -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            if other == 0:
                return Poly._raw({})
            return Poly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (m, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative power of a non-unit monomial")
            return Poly._raw({mono_pow(m, k): c ** (-k)})
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # calculus and structure

    def partial(self, var: str) -> "Poly":
        return poly_partial(self, var)

    def substitute(self, mapping: Mapping[str, "Poly | int"]) -> "Poly":
        return substitute_many(self, mapping)

    def slices(self, var: str) -> list:
        return poly_coeff_slices(self, var)

    def evaluate(self, assignment: Mapping[str, object]) -> Fraction:
        return poly_eval(self, assignment)


PolyLike = Union[Poly, int, str]


def as_poly(p: PolyLike) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, int):
        return Poly.const(p)
    if isinstance(p, str):
        return poly_parse(p)
    raise TypeError(f"cannot convert {type(p).__name__} to Poly")


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_partial(p: Poly, var: str) -> Poly:
    out: dict = {}
    for m, c in p.items():
        exps = dict(m)
        k = exps.get(var, 0)
        if not k:
            continue
        if k == 1:
            del exps[var]
        else:
            exps[var] = k - 1
        mono = tuple(sorted(exps.items()))
        out[mono] = out.get(mono, 0) + c * k
    return Poly(out)


def substitute_many(p: Poly, mapping: Mapping[str, PolyLike]) -> Poly:
    """Simultaneously replace each mapped variable by its polynomial."""
    subs = {v: as_poly(q) for v, q in mapping.items()}
    powers: dict = {}

    def power(v: str, k: int) -> Poly:
        key = (v, k)
        if key not in powers:
            q = subs[v]
            if k < 0:
                if not q.is_monomial() or next(iter(q.items()))[1] not in (1, -1):
                    raise NonInvertibleSubstitution(
                        f"{v}^{k} cannot be replaced by non-unit {format_poly(q)}")
            powers[key] = q ** k
        return powers[key]

    out = Poly()
    for m, c in p.items():
        kept = []
        term = Poly.const(c)
        for v, e in m:
            if v in subs:
                term = term * power(v, e)
            else:
                kept.append((v, e))
        if kept:
            term = term * Poly._raw({tuple(kept): 1})
        out = out + term
    return out


def poly_substitute(p: Poly, var: str, q: PolyLike) -> Poly:
    return substitute_many(p, {var: q})


def poly_eval(p: Poly, assignment: Mapping[str, object]) -> Fraction:
    total = Fraction(0)
    vals = {}
    for m, c in p.items():
        term = Fraction(c)
        for v, e in m:
            if v not in vals:
                if v not in assignment:
                    raise MissingAssignment(v)
                vals[v] = Fraction(assignment[v])
            x = vals[v]
            if e < 0 and x == 0:
                raise DivisionByZero(f"{v}=0 with exponent {e}")
            term *= x ** e
        total += term
    return total


def poly_coeff_slices(p: Poly, var: str) -> list:
    """Return ``[(i, slice_i), ...]`` ascending in i with p = sum var^i * slice_i."""
    buckets: dict = {}
    for m, c in p.items():
        k = 0
        rest = []
        for v, e in m:
            if v == var:
                k = e
            else:
                rest.append((v, e))
        buckets.setdefault(k, {})[tuple(rest)] = c
    return [(k, Poly._raw(buckets[k])) for k in sorted(buckets)]


def divide_exponents(p: Poly, divisors: Mapping[str, int]) -> Poly:
    """Map ``v^(d*k) -> v^k`` for each ``v: d``; every exponent must be divisible."""
    out = {}
    for m, c in p.items():
        new = []
        for v, e in m:
            d = divisors.get(v, 1)
            if e % d:
                raise ValueError(f"exponent {e} of {v} not divisible by {d}")
            new.append((v, e // d))
        out[tuple(new)] = c
    return Poly(out)


# ---------------------------------------------------------------- text I/O

def _sort_key(mono: Monomial, names: tuple) -> tuple:
    exps = dict(mono)
    return (mono_degree(mono), tuple(exps.get(v, 0) for v in names))


def sorted_terms(p: Poly) -> list:
    """Terms in canonical order: total degree, then exponent vector lex."""
    names = p.variables
    return sorted(p.items(), key=lambda mc: _sort_key(mc[0], names))


def _format_mono(mono: Monomial) -> str:
    parts = []
    for v, e in mono:
        parts.append(v if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    if not p:
        return "0"
    out = []
    for idx, (m, c) in enumerate(sorted_terms(p)):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = _format_mono(m)
        else:
            body = f"{a}*{_format_mono(m)}"
        if idx == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\^)|(\*)|([+-])|(\()|(\)))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        kind = ("int", "var", "^", "*", "sign", "(", ")")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


def poly_parse(text: str) -> Poly:
    """Parse the canonical text grammar into a normalized :class:`Poly`."""
    if not isinstance(text, str):
        raise TypeError("poly_parse expects a string")
    toks = _tokenize(text)
    i = 0
    terms: dict = {}

    def peek():
        return toks[i]

    def take(kind):
        nonlocal i
        tok = toks[i]
        if tok[0] != kind:
            raise PolySyntaxError(f"expected {kind}, found {tok[1] or 'end'!r}", text, tok[2])
        i += 1
        return tok

    def signed_int():
        nonlocal i
        neg = False
        paren = False
        if peek()[0] == "(":
            take("(")
            paren = True
        if peek()[0] == "sign":
            neg = take("sign")[1] == "-"
        val = int(take("int")[1])
        if paren:
            take(")")
        return -val if neg else val

    if peek()[0] == "end":
        raise PolySyntaxError("empty polynomial", text, 0)
    first = True
    while peek()[0] != "end":
        sign = 1
        if peek()[0] == "sign":
            sign = -1 if take("sign")[1] == "-" else 1
        elif not first:
            tok = peek()
            raise PolySyntaxError(f"expected '+' or '-', found {tok[1]!r}", text, tok[2])
        first = False
        coeff = 1
        exps: dict = {}
        need_factor = True
        if peek()[0] == "int":
            coeff = int(take("int")[1])
            need_factor = False
            if peek()[0] == "*":
                take("*")
                need_factor = True
            elif peek()[0] == "var":
                need_factor = True
        if need_factor:
            while True:
                name = take("var")[1]
                e = 1
                if peek()[0] == "^":
                    take("^")
                    e = signed_int()
                exps[name] = exps.get(name, 0) + e
                if peek()[0] == "*":
                    take("*")
                    if peek()[0] == "int":
                        coeff *= int(take("int")[1])
                        if peek()[0] != "*":
                            break
                        take("*")
                    continue
                break
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        terms[mono] = terms.get(mono, 0) + sign * coeff
    return Poly(terms)


def poly_to_json(p: Poly) -> list:
    return [{"coeff": str(c), "exps": dict(m)} for m, c in sorted_terms(p)]


def poly_from_json(data) -> Poly:
    if isinstance(data, str):
        data = json.loads(data)
    terms: dict = {}
    for item in data:
        exps = {check_var(v): int(e) for v, e in item["exps"].items() if int(e)}
        mono = tuple(sorted(exps.items()))
        terms[mono] = terms.get(mono, 0) + int(item["coeff"])
    return Poly(terms)


def X(name: str) -> Poly:
    """Shorthand for a variable polynomial."""
    return Poly.var(name)
