"""Context-free grammars and the formal derivative they induce.

A grammar maps variables to polynomials.  ``derive`` extends it to a
derivation on Laurent polynomials: linear, Leibniz on products, and
``D(v^k) = k v^(k-1) G(v)`` for any integer k.  Variables without a rule
are constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .polycore import Poly, PolyLike, as_poly, check_var, divide_exponents, mono_mul, substitute_many


class UnknownVariable(KeyError):
    pass


class UnknownGrammar(KeyError):
    pass


@dataclass(frozen=True)
class Grammar:
    rules: Mapping[str, Poly]
    name: str | None = None

    def __post_init__(self):
        clean = {check_var(v): as_poly(p) for v, p in dict(self.rules).items()}
        object.__setattr__(self, "rules", clean)

    def __getitem__(self, var: str) -> Poly:
        return self.rules.get(var, Poly())

    def __contains__(self, var: str) -> bool:
        return var in self.rules

    @property
    def variables(self) -> tuple:
        names = set(self.rules)
        for p in self.rules.values():
            names.update(p.variables)
        return tuple(sorted(names))

    def __str__(self) -> str:
        return "\n".join(f"{v} -> {p}" for v, p in sorted(self.rules.items()))


def grammar(rules: Mapping[str, PolyLike], name: str | None = None) -> Grammar:
    return Grammar({v: as_poly(p) for v, p in rules.items()}, name)


def derive(g: Grammar, p: PolyLike) -> Poly:
    p = as_poly(p)
    rules = g.rules
    out: dict = {}
    for mono, c in p.items():
        for idx, (v, k) in enumerate(mono):
            rule = rules.get(v)
            if rule is None or not rule:
                continue
            if k == 1:
                rest = mono[:idx] + mono[idx + 1:]
            else:
                rest = mono[:idx] + ((v, k - 1),) + mono[idx + 1:]
            ck = c * k
            for rm, rc in rule.items():
                m = mono_mul(rest, rm)
                out[m] = out.get(m, 0) + ck * rc
    return Poly(out)


def derive_n(g: Grammar, p: PolyLike, n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = as_poly(p)
    for _ in range(n):
        p = derive(g, p)
    return p


def derive_iterates(g: Grammar, p: PolyLike, n: int) -> list:
    """``[p, D p, ..., D^n p]``."""
    out = [as_poly(p)]
    for _ in range(n):
        out.append(derive(g, out[-1]))
    return out


def derive_alternating(grammars: Sequence[Grammar], p: PolyLike, rounds: int,
                       extra: int = 0) -> Poly:
    """Apply ``grammars`` left to right, ``rounds`` times, then the first
    ``extra`` grammars once more (``extra=1`` gives the half step D1 (D2 D1)^r)."""
    if not grammars:
        raise ValueError("need at least one grammar")
    if rounds < 0 or not 0 <= extra < len(grammars) + 1:
        raise ValueError("bad rounds/extra")
    p = as_poly(p)
    for _ in range(rounds):
        for g in grammars:
            p = derive(g, p)
    for g in grammars[:extra]:
        p = derive(g, p)
    return p


@dataclass
class TransformCheck:
    ok: bool
    variable: str | None = None
    lhs: Poly | None = None
    rhs: Poly | None = None
    checked: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def verify_grammar_transform(g_old: Grammar, defs: Mapping[str, PolyLike],
                             g_new: Grammar) -> TransformCheck:
    """Check D_old(defs[w]) == defs(G_new(w)) for every new variable w.

    ``defs`` gives each new variable as a polynomial in the old ones.  On
    failure the offending variable and both expansions are returned.
    """
    defs = {check_var(w): as_poly(q) for w, q in defs.items()}
    for w in g_new.rules:
        if w not in defs:
            raise UnknownVariable(f"rule for {w!r} in the new grammar has no definition")
    for w, rule in g_new.rules.items():
        stray = set(rule.variables) - set(defs)
        if stray:
            raise UnknownVariable(f"rule {w} -> {rule} uses undefined {sorted(stray)}")
    checked = []
    for w in sorted(defs):
        lhs = derive(g_old, defs[w])
        rhs = substitute_many(g_new[w], defs)
        checked.append(w)
        if lhs != rhs:
            return TransformCheck(False, w, lhs, rhs, checked)
    return TransformCheck(True, checked=checked)


def read_off_exponents(p: Poly, divisors: Mapping[str, int]) -> Poly:
    """Exponent post-map ``v^(d k) -> v^k`` with a divisibility check."""
    return divide_exponents(p, divisors)


# ------------------------------------------------------------------ presets

_PRESET_RULES = {
    # D^n(x) = x sum_k S(n,k) y^k with Stirling numbers of the second kind
    "intro": {"x": "x*y", "y": "y"},
    "eulerian": {"x": "x*y", "y": "x*y"},
    "eulerian-uv": {"x": "u", "u": "u*v", "v": "2*u"},
    "typeB": {"x": "x*y^2", "y": "x^2*y"},
    "typeB-uv": {"u": "u*v", "v": "4*u^2"},
    "derangement": {"x": "x*y", "y": "x*y", "z": "x*y", "e": "e*z"},
    "derangement-uv": {"e": "e*z", "z": "u", "u": "u*v", "v": "2*u"},
    "dB": {"x": "x*y^2", "y": "x^2*y", "z": "x^2*y^2*z^-3", "e": "e*z^4"},
    "dB-uv": {"s": "s*t", "t": "4*u^2", "u": "u*v", "v": "4*u^2"},
    "stirling": {"x": "x*y*z", "y": "x*y*z", "z": "x*y*z"},
    "stirling-uv": {"w": "w*u", "u": "w*u*v", "v": "2*w*u"},
    "chen-fu": {"x": "x*y^2", "y": "x*y^2"},
    "legendre-1": {"x": "u*v", "y": "u*v", "z": "u*v"},
    "legendre-2": {
        "x": "x^2*y^2*z*u^-1*v^-1",
        "y": "x^2*y^2*z*u^-1*v^-1",
        "z": "x^2*y^2*z*u^-1*v^-1",
        "u": "x*y*z^2*v^-1",
        "v": "x*y*z^2*u^-1",
    },
    # the printed G_3 lists no rule for y; y -> uv is restored from G_1
    "legendre-uv-1": {"x": "u*v", "y": "u*v", "z": "u*v", "a": "2*u*v", "b": "a*u*v"},
    "legendre-uv-2": {
        "x": "z*b^2*u^-1*v^-1",
        "y": "z*b^2*u^-1*v^-1",
        "z": "z*b^2*u^-1*v^-1",
        "u": "z^2*b*v^-1",
        "v": "z^2*b*u^-1",
        "a": "2*z*b^2*u^-1*v^-1",
        "b": "z*a*b^2*u^-1*v^-1",
    },
    "jacobi-1": {"x": "x*y", "y": "x*y", "z": "x*y"},
    "jacobi-2": {"x": "x*y*z", "y": "x*y*z", "z": "x*y*z"},
    "jacobi-uv-1": {"a": "c", "b": "2*c", "c": "b*c"},
    "jacobi-uv-2": {"a": "a*c", "b": "2*a*c", "c": "a*b*c"},
}


def preset_names() -> list:
    return list(_PRESET_RULES)


def preset(name: str) -> Grammar:
    try:
        rules = _PRESET_RULES[name]
    except KeyError:
        raise UnknownGrammar(name) from None
    return grammar(rules, name)


@dataclass(frozen=True)
class Transform:
    """A change of grammar: old grammars, new grammars, and the definitions
    of the new variables in terms of the old ones."""

    name: str
    old: tuple
    new: tuple
    defs: Mapping[str, str]
    start_old: str
    start_new: str

    def definitions(self) -> dict:
        return {w: as_poly(q) for w, q in self.defs.items()}


TRANSFORMS = (
    Transform("eulerian", ("eulerian",), ("eulerian-uv",),
              {"x": "x", "u": "x*y", "v": "x+y"}, "x", "x"),
    Transform("typeB", ("typeB",), ("typeB-uv",),
              {"u": "x*y", "v": "x^2+y^2"}, "x*y", "u"),
    Transform("derangement", ("derangement",), ("derangement-uv",),
              {"e": "e", "z": "z", "u": "x*y", "v": "x+y"}, "e", "e"),
    Transform("dB", ("dB",), ("dB-uv",),
              {"s": "e", "t": "z^4", "u": "x*y", "v": "x^2+y^2"}, "e", "s"),
    Transform("stirling", ("stirling",), ("stirling-uv",),
              {"w": "x", "u": "y*z", "v": "y+z"}, "x", "w"),
    Transform("legendre", ("legendre-1", "legendre-2"), ("legendre-uv-1", "legendre-uv-2"),
              {"x": "x", "y": "y", "z": "z", "u": "u", "v": "v", "a": "x+y", "b": "x*y"},
              "x", "x"),
    Transform("jacobi", ("jacobi-1", "jacobi-2"), ("jacobi-uv-1", "jacobi-uv-2"),
              {"a": "z", "b": "x+y", "c": "x*y"}, "z", "a"),
)


def transform(name: str) -> Transform:
    for t in TRANSFORMS:
        if t.name == name:
            return t
    raise UnknownGrammar(name)


def check_transform(t: Transform) -> list:
    """Run :func:`verify_grammar_transform` for each old/new grammar pair."""
    defs = t.definitions()
    return [(o, n, verify_grammar_transform(preset(o), defs, preset(n)))
            for o, n in zip(t.old, t.new)]


def transform_commutes(t: Transform, steps: int) -> tuple:
    """Compare derivatives taken in new variables (then expanded) with
    derivatives taken in the old variables, for 0..steps applications.

    For alternating pairs a step is one grammar application.  Returns
    ``(ok, first_failing_step, lhs, rhs)``.
    """
    defs = t.definitions()
    olds = [preset(g) for g in t.old]
    news = [preset(g) for g in t.new]
    p_old = as_poly(t.start_old)
    p_new = as_poly(t.start_new)
    if substitute_many(p_new, defs) != p_old:
        return False, 0, substitute_many(p_new, defs), p_old
    for k in range(1, steps + 1):
        i = (k - 1) % len(olds)
        p_old = derive(olds[i], p_old)
        p_new = derive(news[i], p_new)
        expanded = substitute_many(p_new, defs)
        if expanded != p_old:
            return False, k, expanded, p_old
    return True, None, None, None


# ------------------------------------------------------------ rule files

def parse_rules(text: str, name: str | None = None) -> Grammar:
    """Parse ``var -> polynomial`` lines; ``#`` starts a comment."""
    rules = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise ValueError(f"line {lineno}: expected 'var -> polynomial'")
        lhs, rhs = line.split("->", 1)
        var = lhs.strip()
        try:
            check_var(var)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if var in rules:
            raise ValueError(f"line {lineno}: duplicate rule for {var}")
        rules[var] = as_poly(rhs.strip())
    return Grammar(rules, name)


def load_rules(path: str | Path) -> Grammar:
    path = Path(path)
    return parse_rules(path.read_text(), path.stem)


def format_rules(g: Grammar) -> str:
    head = f"# {g.name}\n" if g.name else ""
    return head + str(g) + "\n"
