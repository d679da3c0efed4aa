"""Verification catalog: every invariant is reachable through exactly one id.

A check returns a :class:`CheckResult`.  Report-only checks (open
conjectures) carry ``report=True`` and never count as failures.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import actions, combinat, gammalib, grammar, recurtab
from .polycore import Poly, X, as_poly, format_poly, poly_parse


@dataclass
class CheckResult:
    id: str
    ok: bool
    report: bool = False
    details: dict = field(default_factory=dict)
    counterexample: dict | None = None
    seconds: float = 0.0

    @property
    def status(self) -> str:
        if self.report:
            return "report"
        return "pass" if self.ok else "fail"

    def to_json(self, timing: bool = False) -> dict:
        # wall time is opt-in so that reports stay byte-deterministic
        out = {"id": self.id, "status": self.status, "details": self.details}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class CheckCatalogEntry:
    id: str
    description: str
    budget: int
    pipelines: tuple
    run: Callable
    report_only: bool = False


class Failure(Exception):
    """Raised inside a check body with a counterexample payload."""

    def __init__(self, message: str, **payload):
        super().__init__(message)
        self.payload = {"message": message, **{k: _jsonable(v) for k, v in payload.items()}}


def _jsonable(v):
    if isinstance(v, Poly):
        return format_poly(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


def _expect(cond: bool, message: str, **payload) -> None:
    if not cond:
        raise Failure(message, **payload)


# ------------------------------------------------------------ golden values
# Printed values, transcribed verbatim except where noted.

GOLDEN_DB = ["1", "1+4x", "1+20x+8x^2", "1+72x+144x^2+16x^3"]
GOLDEN_C = ["x", "x+2x^2", "x+8x^2+6x^3", "x+22x^2+58x^3+24x^4"]
GOLDEN_L = ["2x", "4x+24x^2+12x^3", "8x+240x^2+984x^3+864x^4+144x^5"]
GOLDEN_G = ["x", "x^2+4y", "x^3+12x*y+8y", "x^4+32x*y+24x^2*y+16y+80y^2"]
GOLDEN_GAMMA = ["x*y", "x*y^2+x^2*y", "x^3*y+4x^2*y^2+x*y^3+2x^3*y^2",
                "x^4*y+11x^3*y^2+11x^2*y^3+x*y^4+8x^4*y^2+14x^3*y^3"]
GOLDEN_H = ["1", "4x*y+2x^2", "4y^3+28x*y^2+16x^2*y+52x^2*y^2+40x^3*y+8x^4*y+4x^4"]
GOLDEN_LL = ["2x^2*y", "4x*y^3+8x^2*y^2+12x^3*y^2+4x^4*y"]
GOLDEN_S = {1: "x*y", 2: "x^2*y+8x^2*y^2+3x*y^2+4x*y^3"}
GOLDEN_T = {2: "x*y+2x*y^2+y^2", 3: "x^2*y+22x^2*y^2+16x^2*y^3+8x*y^2+3y^3+40x*y^3+4y^4"}
GOLDEN_G_SUMS = [1, 1, 5, 21, 153, 1209]


def golden_S(n: int) -> Poly:
    x, y, z = X("x"), X("y"), X("z")
    xy = x * y
    if n == 1:
        return xy * (x + y) * z
    if n == 2:
        return (xy ** 2 * (3 * x ** 2 + 10 * xy + 3 * y ** 2) * z
                + xy * (x ** 3 + 11 * x ** 2 * y + 11 * x * y ** 2 + y ** 3) * z ** 2)
    if n == 3:
        # the z^2 slice prints 284xy^2; homogeneity and symmetry force 284xy^3
        return (xy ** 3 * (17 * x ** 3 + 119 * x ** 2 * y + 119 * x * y ** 2 + 17 * y ** 3) * z
                + xy ** 2 * (18 * x ** 4 + 284 * x ** 3 * y + 644 * x ** 2 * y ** 2
                             + 284 * x * y ** 3 + 18 * y ** 4) * z ** 2
                + xy * (x ** 5 + 57 * x ** 4 * y + 302 * x ** 3 * y ** 2 + 302 * x ** 2 * y ** 3
                        + 57 * x * y ** 4 + y ** 5) * z ** 3)
    raise ValueError(n)


def _cmp(label, got, want):
    _expect(got == as_poly(want), f"{label} differs from the printed value", got=got,
            expected=as_poly(want))


def check_golden(n=None, **_):
    for k, want in enumerate(GOLDEN_DB, 1):
        _cmp(f"d_{k}^B", combinat.distribution("typeB-derangements", k, [("wexc", "x")]).polynomial,
             want)
    for k, want in enumerate(GOLDEN_C, 1):
        _cmp(f"C_{k}", combinat.distribution("stirling", k, [("des", "x")]).polynomial, want)
    for k, want in enumerate(GOLDEN_L, 1):
        _cmp(f"L_{k}", combinat.distribution("legendre", k, [("des", "x")]).polynomial, want)
    for k, want in enumerate(GOLDEN_G, 1):
        _cmp(f"g_{k}", recurtab.table_g(k).to_poly(), want)
    for k, want in enumerate(GOLDEN_GAMMA, 1):
        _cmp(f"gamma_{k}", recurtab.table_gamma_stirling(k).to_poly(), want)
    for k, want in enumerate(GOLDEN_H, 1):
        _cmp(f"h_{k}", recurtab.tables_h_l(k)[0].to_poly(), want)
    for k, want in enumerate(GOLDEN_LL, 1):
        _cmp(f"l_{k}", recurtab.tables_h_l(k)[1].to_poly(), want)
    for k, want in GOLDEN_S.items():
        _cmp(f"s_{k}", recurtab.tables_s_t(k)[0].to_poly(), want)
    for k, want in GOLDEN_T.items():
        _cmp(f"t_{k}", recurtab.tables_s_t(k)[1].to_poly(), want)
    for k in (1, 2, 3):
        _cmp(f"S_{k}", combinat.S_poly(k), golden_S(k))
    sums = [recurtab.table_g(k).total() for k in range(len(GOLDEN_G_SUMS))]
    _expect(sums == GOLDEN_G_SUMS, "g row sums", got=sums, expected=GOLDEN_G_SUMS)
    return {"families": ["dB", "C", "L", "g", "gamma", "h", "l", "s", "t", "S", "g-sums"]}


# ------------------------------------------------------------ triple pipelines


def gamma_coefficients(p: Poly, ivar: str, jvar: str, avar: str, degree: Callable) -> dict:
    """Read ``sum c(i,j) ivar^i jvar^j avar^(degree(i,j))`` into ``{(i,j): c}``,
    checking the exponent of ``avar`` and that nothing else appears."""
    out = {}
    for mono, c in p.items():
        e = dict(mono)
        i, j, a = e.pop(ivar, 0), e.pop(jvar, 0), e.pop(avar, 0)
        if e or a != degree(i, j):
            raise Failure("unexpected term in grammar expansion",
                          term=format_poly(Poly({mono: c})))
        out[(i, j)] = c
    return out


def grammar_g(n: int) -> dict:
    # D^n(s) = s sum g(i,j) t^i u^(2j) v^(n-i-2j)
    p = grammar.derive_n(grammar.preset("dB-uv"), "s", n) * Poly.monomial({"s": -1})
    raw = gamma_coefficients(p, "t", "u", "v", lambda i, j: n - i - j)
    _expect(all(j % 2 == 0 for _, j in raw), "odd power of u in the dB-uv expansion", n=n)
    return {(i, j // 2): c for (i, j), c in raw.items()}


def grammar_gamma_stirling(n: int) -> dict:
    p = grammar.derive_n(grammar.preset("stirling-uv"), "w", n)
    return gamma_coefficients(p, "w", "u", "v", lambda i, j: 2 * n + 1 - i - 2 * j)


def grammar_h_l(n: int) -> tuple:
    g1, g2 = grammar.preset("legendre-uv-1"), grammar.preset("legendre-uv-2")
    pre = grammar.derive_alternating([g1, g2], "x", n - 1, extra=1)
    h = gamma_coefficients(pre * Poly.monomial({"u": -1, "v": -1}), "z", "b", "a",
                           lambda i, j: 3 * n - 3 - i - 2 * j)
    ell = gamma_coefficients(grammar.derive(g2, pre), "z", "b", "a",
                             lambda i, j: 3 * n + 1 - i - 2 * j)
    return h, ell


def grammar_s_t(n: int) -> tuple:
    g1, g2 = grammar.preset("jacobi-uv-1"), grammar.preset("jacobi-uv-2")
    pre = grammar.derive_alternating([g1, g2], "a", n - 1, extra=1)
    t = gamma_coefficients(pre, "a", "c", "b", lambda i, j: 3 * n - 1 - i - 2 * j)
    s = gamma_coefficients(grammar.derive(g2, pre), "a", "c", "b",
                           lambda i, j: 3 * n + 1 - i - 2 * j)
    return s, t


def _agree(label: str, n: int, **tables):
    vals = list(tables.values())
    _expect(all(v == vals[0] for v in vals[1:]), f"{label} pipelines disagree at n={n}",
            n=n, **{k: sorted(v.items()) for k, v in tables.items()})


def check_typeB_triple(n=None, workers=1, **_):
    top = n or 5
    for m in range(1, top + 1):
        enum = combinat.E_poly(m, workers=workers)
        _agree("type B", m, enumeration=gammalib.partial_gamma(enum).table(),
               grammar=grammar_g(m), recurrence=recurtab.table_g(m).entries)
        # the raw grammar read-off also reproduces E_n itself
        raw = grammar.derive_n(grammar.preset("dB"), "e", m) * Poly.monomial({"e": -1})
        _expect(grammar.read_off_exponents(raw, {"x": 2, "y": 2, "z": 4}) == enum,
                f"dB grammar read-off differs from E_{m}")
    return {"n": top}


def check_stirling_triple(n=None, workers=1, **_):
    top = n or 5
    for m in range(1, top + 1):
        enum = combinat.C_poly(m, workers=workers)
        _agree("Stirling", m, enumeration=gammalib.partial_gamma(enum, "x", "y", "z").table(),
               grammar=grammar_gamma_stirling(m),
               recurrence=recurtab.table_gamma_stirling(m).entries)
        _expect(grammar.derive_n(grammar.preset("stirling"), "x", m) == enum,
                f"stirling grammar differs from C_{m}")
    return {"n": top}


def check_legendre_triple(n=None, workers=1, **_):
    top = n or 3
    for m in range(1, top + 1):
        h_rec, l_rec = recurtab.tables_h_l(m)
        h_gr, l_gr = grammar_h_l(m)
        H = combinat.H_poly(m, workers=workers)
        L = combinat.L_poly(m, workers=workers)
        _agree("h", m, enumeration=gammalib.partial_gamma(H).table(), grammar=h_gr,
               recurrence=h_rec.entries)
        _agree("l", m, enumeration=gammalib.partial_gamma(L).table(), grammar=l_gr,
               recurrence=l_rec.entries)
        g1, g2 = grammar.preset("legendre-1"), grammar.preset("legendre-2")
        _expect(grammar.derive_alternating([g1, g2], "x", m) == L,
                f"legendre grammar differs from L_{m}")
        uvH = grammar.derive_alternating([g1, g2], "x", m - 1, extra=1)
        _expect(uvH == H * Poly.monomial({"u": 1, "v": 1}), f"legendre grammar differs from H_{m}")
    return {"n": top}


def check_jacobi_triple(n=None, workers=1, **_):
    top = n or 4
    for m in range(1, top + 1):
        s_rec, t_rec = recurtab.tables_s_t(m)
        s_gr, t_gr = grammar_s_t(m)
        S = combinat.S_poly(m, workers=workers)
        T = combinat.T_poly(m, workers=workers)
        _agree("s", m, enumeration=gammalib.partial_gamma(S).table(), grammar=s_gr,
               recurrence=s_rec.entries)
        _agree("t", m, enumeration=gammalib.partial_gamma(T).table(), grammar=t_gr,
               recurrence=t_rec.entries)
        g1, g2 = grammar.preset("jacobi-1"), grammar.preset("jacobi-2")
        _expect(grammar.derive_alternating([g1, g2], "z", m) == S,
                f"jacobi grammar differs from S_{m}")
        _expect(grammar.derive_alternating([g1, g2], "z", m - 1, extra=1) == T,
                f"jacobi grammar differs from T_{m}")
    return {"n": top}


# ------------------------------------------------------------ grammar checks


def check_transforms(**_):
    out = {}
    for t in grammar.TRANSFORMS:
        for old, new, res in grammar.check_transform(t):
            _expect(res.ok, f"transform {t.name} fails at {res.variable}", old=old, new=new,
                    lhs=res.lhs, rhs=res.rhs)
        out[t.name] = "ok"
    return out


def check_transform_commute(n=None, **_):
    steps = n or 8
    for t in grammar.TRANSFORMS:
        ok, k, lhs, rhs = grammar.transform_commutes(t, steps)
        _expect(ok, f"transform {t.name} does not commute at step {k}", lhs=lhs, rhs=rhs)
    return {"steps": steps, "transforms": [t.name for t in grammar.TRANSFORMS]}


# ------------------------------------------------------------ random algebra


def random_poly(rng: random.Random, names=("x", "y", "z"), terms=4, lo=-2, hi=3,
                coeff=20) -> Poly:
    out = {}
    for _ in range(rng.randint(0, terms)):
        mono = tuple((v, e) for v in names if (e := rng.randint(lo, hi)))
        out[mono] = out.get(mono, 0) + rng.randint(-coeff, coeff)
    return Poly(out)


def check_ring_axioms(n=None, seed=0, **_):
    rng = random.Random(seed)
    cases = n or 1000
    for _ in range(cases):
        a, b, c = (random_poly(rng) for _ in range(3))
        for label, ok in (("add-comm", a + b == b + a), ("mul-comm", a * b == b * a),
                          ("add-assoc", (a + b) + c == a + (b + c)),
                          ("mul-assoc", (a * b) * c == a * (b * c)),
                          ("distrib", a * (b + c) == a * b + a * c),
                          ("neg", a - a == 0), ("one", a * 1 == a)):
            _expect(ok, f"ring axiom {label}", a=a, b=b, c=c)
    return {"cases": cases, "seed": seed}


def check_leibniz(n=None, seed=0, **_):
    rng = random.Random(seed)
    cases = n or 1000
    names = ("x", "y", "z")
    for _ in range(cases):
        g = grammar.grammar({v: random_poly(rng, terms=3) for v in names})
        a, b = random_poly(rng), random_poly(rng)
        lhs = grammar.derive(g, a * b)
        rhs = grammar.derive(g, a) * b + a * grammar.derive(g, b)
        _expect(lhs == rhs, "D(ab) != D(a)b + aD(b)", grammar=str(g), a=a, b=b)
        _expect(grammar.derive(g, a + b) == grammar.derive(g, a) + grammar.derive(g, b),
                "D is not additive", a=a, b=b)
    return {"cases": cases, "seed": seed}


def check_parse_roundtrip(n=None, seed=0, **_):
    rng = random.Random(seed)
    cases = n or 1000
    for _ in range(cases):
        p = random_poly(rng, terms=6, coeff=10 ** 12)
        text = format_poly(p)
        _expect(poly_parse(text) == p, "parse(format(p)) != p", text=text)
        _expect(format_poly(poly_parse(text)) == text, "format is not canonical", text=text)
    return {"cases": cases, "seed": seed}


def check_gamma_reconstruction(n=None, seed=0, **_):
    rng = random.Random(seed)
    cases = n or 1000
    for _ in range(cases):
        d = rng.randint(0, 9)
        gv = gammalib.GammaVector(d, tuple(rng.randint(-50, 50) for _ in range(d // 2 + 1)))
        f = gv.reconstruct()
        back = gammalib.gamma_expand(f, d, "x")
        _expect(back == gv, "univariate gamma round trip", d=d, gamma=list(gv.gammas))
        cs = list(gv.gammas)
        pxy = gammalib.reconstruct_xy(cs, d)
        if pxy:
            _expect(gammalib.gamma_expand_xy(pxy, d) == cs, "bivariate gamma round trip",
                    d=d, gamma=cs)
        # a perturbed vector never reproduces f
        j = rng.randrange(len(cs))
        bumped = gammalib.GammaVector(d, tuple(c + (k == j) for k, c in enumerate(cs)))
        _expect(bumped.reconstruct() != f, "gamma expansion is not unique", d=d, gamma=cs)
    return {"cases": cases, "seed": seed}


# ------------------------------------------------------------ combinat checks


def check_generator_bruteforce(**_):
    for fam, top in (("stirling", 4), ("legendre", 2), ("jacobi", 2), ("jacobi-deleted", 2),
                     ("legendre-deleted", 2)):
        for m in range(1, top + 1):
            gen = list(combinat.word_codes(fam, m))
            _expect(len(gen) == len(set(gen)), f"{fam} n={m} has duplicates")
            brute = combinat.brute_force_codes(fam, m)
            _expect(set(gen) == brute, f"{fam} n={m} generator differs from brute force",
                    missing=[combinat.word_str(w) for w in sorted(brute - set(gen))][:5],
                    extra=[combinat.word_str(w) for w in sorted(set(gen) - brute)][:5])
    for S in ((), (1,), (2,), (1, 2)):
        gen = set(combinat.word_codes("jacobi-partial", 2, S))
        _expect(gen == combinat.brute_force_codes("jacobi-partial", 2, S),
                f"jacobi-partial S={S} generator differs from brute force")
    return {"stirling": 4, "legendre": 2, "jacobi": 2}


def check_cardinalities(**_):
    tops = {"stirling": 5, "legendre": 4, "jacobi": 4, "legendre-deleted": 4,
            "jacobi-deleted": 4, "perm": 5, "signed": 5}
    for fam, top in tops.items():
        for m in range(1, top + 1):
            stat = {"perm": "des", "signed": "desB"}.get(fam, "asc")
            dist = combinat.distribution(fam, m, [(stat, "x")])
            _expect(dist.cardinality() == combinat.family_size(fam, m),
                    f"|{fam}_{m}| mismatch", got=dist.cardinality(),
                    expected=combinat.family_size(fam, m))
    return tops


DEGREES = {"E": lambda n: n, "C": lambda n: 2 * n + 1, "L": lambda n: 3 * n + 1,
           "H": lambda n: 3 * n - 3, "S": lambda n: 3 * n + 1, "T": lambda n: 3 * n - 1}


def check_degrees(**_):
    polys = {"E": (combinat.E_poly, 5), "C": (combinat.C_poly, 5), "L": (combinat.L_poly, 3),
             "H": (combinat.H_poly, 3), "S": (combinat.S_poly, 3), "T": (combinat.T_poly, 3)}
    for name, (fn, top) in polys.items():
        for m in range(1, top + 1):
            p = fn(m)
            _expect(p.is_homogeneous() and p.degree() == DEGREES[name](m),
                    f"{name}_{m} is not homogeneous of degree {DEGREES[name](m)}", poly=p)
    return {k: v[1] for k, v in polys.items()}


def check_typeB_eulerian(**_):
    g = grammar.preset("typeB")
    for m in range(1, 7):
        p = grammar.derive_n(g, "x*y", m)
        read = {}
        for mono, c in p.items():
            e = dict(mono)
            k = (e["x"] - 1) // 2
            _expect(e["x"] == 2 * k + 1 and e["y"] == 2 * m - 2 * k + 1,
                    "unexpected term in D^n(xy)", n=m, poly=p)
            read[(k,)] = c
        want = combinat.distribution("signed", m, [("desB", "x")]).polynomial
        _expect(Poly.from_counts(read, ["x"]) == want, f"B_{m} differs", n=m)
        _expect(want == recurtab.gamma_poly(recurtab.table_b(m), m), f"b({m},k) differs")
    return {"n": 6}


def check_stirling_equidistribution(**_):
    for m in range(1, 6):
        d = [combinat.distribution("stirling", m, [(s, "x")]).polynomial
             for s in ("des", "asc", "plat")]
        _expect(d[0] == d[1] == d[2], f"des/asc/plat differ on Q_{m}", polys=d)
    return {"n": 5}


def check_wexc_sum(**_):
    for m in range(1, 7):
        for w in combinat.typeB_derangements(m):
            s = combinat.signed_stats(w, ("wexc", "aexc", "single"))
            _expect(sum(s) == m, "wexc+aexc+single != n", window=list(w))
    return {"n": 6}


def check_cycle_roundtrip(**_):
    for m in range(1, 6):
        for w in combinat.signed_perms(m):
            cf = combinat.to_cycle_form(w)
            _expect(combinat.is_standard_cycle_form(cf) and combinat.from_cycle_form(cf) == w,
                    "cycle form round trip", window=list(w), cycles=str(cf))
            _expect(combinat.cycle_stats(cf, ("wexc", "aexc", "single"))
                    == combinat.signed_stats(w, ("wexc", "aexc", "single")),
                    "cycle and window statistics disagree", window=list(w))
    return {"n": 5}


def check_symmetric_slices(n=None, **_):
    top = n or 3
    for m in range(1, top + 1):
        S = combinat.S_poly(m)
        top_slice = dict(S.slices("z"))[m]
        _expect(top_slice == combinat.symmetric_slice_poly(2 * m),
                f"top z-slice of S_{m} differs", got=top_slice)
        T = combinat.T_poly(m)
        t_slice = dict(T.slices("z"))[m - 1]
        _expect(t_slice == combinat.symmetric_slice_poly(2 * m - 1),
                f"top z-slice of T_{m} differs", got=t_slice)
    return {"n": top}


# ------------------------------------------------------------ action checks


ACTION_BUDGETS = {"typeB-derangements": 4, "stirling": 4, "jacobi": 3, "jacobi-deleted": 3,
                  "perm": 5}


def check_action_involutions(**_):
    for fam, m in ACTION_BUDGETS.items():
        for obj in actions.objects(fam, m):
            letters = actions.letters_of(fam, obj)
            for l in letters:
                _expect(actions.act(fam, actions.act(fam, obj, l), l) == obj,
                        f"{fam}: letter {l} is not an involution", obj=obj)
            for l1, l2 in itertools.combinations(letters, 2):
                a = actions.act(fam, actions.act(fam, obj, l1), l2)
                b = actions.act(fam, actions.act(fam, obj, l2), l1)
                _expect(a == b, f"{fam}: letters {l1}, {l2} do not commute", obj=obj)
    return ACTION_BUDGETS


def check_action_validity(**_):
    for fam in ("stirling", "jacobi", "jacobi-deleted"):
        m = ACTION_BUDGETS[fam]
        for obj in actions.objects(fam, m):
            for l in actions.letters_of(fam, obj):
                w = combinat.GenWord.from_codes(actions.act(fam, obj, l), fam)
                _expect(combinat.is_valid(w), f"{fam}: action leaves the family", word=str(w))
    for cf in actions.objects("typeB-derangements", 4):
        for l in range(1, 5):
            out = actions.fs_typeB(cf, l)
            _expect(combinat.is_standard_cycle_form(out), "type B action breaks standard form",
                    cycles=str(out))
    return {"families": ["stirling", "jacobi", "jacobi-deleted", "typeB-derangements"]}


def check_worked_example(**_):
    sigma = combinat.GenWord.parse("2447887332115665", "stirling")
    p1 = actions.fs_stirling_at(sigma, 1)
    p4 = actions.fs_stirling_at(sigma, 4)
    expect = {"phi1": "4478873322115665", "phi4": "2448877332115665"}
    got = {"phi1": "".join(str(l) for l in p1.letters),
           "phi4": "".join(str(l) for l in p4.letters)}
    _expect(got == expect, "worked example maps differ", got=got, expected=expect)
    _expect(actions.fs_stirling_at(p1, 9) == sigma, "phi_9 o phi_1 is not the identity")
    _expect(actions.fs_stirling_at(p4, 6) == sigma, "phi_6 o phi_4 is not the identity")
    return got


ORBIT_BUDGETS = {"g": 5, "gamma-stirling": 5, "s": 4, "t": 4, "a": 7}


def check_orbit_representatives(n=None, **_):
    specs = (("typeB-derangements", ("single", "wexc"), recurtab.table_g, "g"),
             ("stirling", ("des", "laplat"), recurtab.table_gamma_stirling, "gamma-stirling"),
             ("jacobi", ("ubdes", "expk"), lambda m: recurtab.tables_s_t(m)[0], "s"),
             ("jacobi-deleted", ("ubdes", "expk"), lambda m: recurtab.tables_s_t(m)[1], "t"))
    for fam, keys, tab, name in specs:
        top = min(n, ORBIT_BUDGETS[name]) if n else ORBIT_BUDGETS[name]
        for m in range(1, top + 1):
            got = dict(actions.representative_counts(fam, m, keys))
            _expect(got == tab(m).entries, f"{fam} n={m}: representatives differ from {name}",
                    got=sorted(got.items()), expected=sorted(tab(m).entries.items()))
    top = min(n, ORBIT_BUDGETS["a"]) if n else ORBIT_BUDGETS["a"]
    for m in range(1, top + 1):
        got = {k[0]: v for k, v in actions.representative_counts("perm", m, ("peak",)).items()}
        _expect(got == recurtab.table_a(m).entries, f"perm n={m}: representatives differ from a")
    return ORBIT_BUDGETS


# ------------------------------------------------------------ gamma checks


def check_partial_gamma_positivity(**_):
    cases = [("E", combinat.E_poly, 6, ("z", "x", "y")),
             ("C", combinat.C_poly, 5, ("x", "y", "z")),
             ("S", combinat.S_poly, 4, ("z", "x", "y")),
             ("T", combinat.T_poly, 4, ("z", "x", "y")),
             ("H", combinat.H_poly, 4, ("z", "x", "y")),
             ("L", combinat.L_poly, 4, ("z", "x", "y"))]
    for name, fn, top, roles in cases:
        for m in range(1, top + 1):
            p = fn(m)
            exp = gammalib.partial_gamma(p, *roles)
            _expect(exp.reconstruct() == p, f"{name}_{m} reconstruction")
            _expect(exp.positive, f"{name}_{m} is not partial gamma-positive",
                    witness=exp.witness)
    return {c[0]: c[2] for c in cases}


def check_peak_gamma(**_):
    for m in range(1, 8):
        a = combinat.eulerian_poly(m)
        gv = gammalib.gamma_expand(a * Poly.monomial({"x": -1}), m - 1, "x")
        want = [recurtab.table_a(m)[k + 1] for k in range(len(gv.gammas))]
        _expect(list(gv.gammas) == want, f"gamma vector of A_{m} differs from a({m},k)",
                got=list(gv.gammas), expected=want)
        _expect(recurtab.eulerian_from_a(m) == a, f"A_{m} reconstruction from a({m},k)")
    return {"n": 7}


def check_eulerian_slice(**_):
    for m in range(1, 8):
        t = recurtab.table_gamma_stirling(m)
        for i in range(1, m + 1):
            _expect(t[(i, m + 1 - i)] == recurtab.eulerian_number(m, i),
                    f"gamma_{m},{i},{m + 1 - i} is not Eulerian", got=t[(i, m + 1 - i)])
        bad = [k for k, v in t.entries.items() if sum(k) <= m and v]
        _expect(not bad, f"gamma_{m} nonzero with i+j<=n", entries=bad)
    for m in range(1, 5):
        p = combinat.distribution("perm", m, [("des", "x")]).polynomial
        want = Poly.from_counts({(k - 1,): recurtab.eulerian_number(m, k)
                                 for k in range(1, m + 1)}, ["x"])
        _expect(p == want, f"Eulerian numbers differ from S_{m} descents")
    return {"n": 7}


def check_grammar_tables(**_):
    for m in range(1, 7):
        _expect(recurtab.gamma_poly(recurtab.table_b(m), m) == combinat.typeB_eulerian_poly(m),
                f"b({m},k) does not reconstruct B_{m}")
        d = combinat.distribution("derangements", m, [("exc", "x")]).polynomial
        _expect(recurtab.gamma_poly(recurtab.table_d(m), m) == d,
                f"d({m},k) does not reconstruct d_{m}")
    return {"n": 6}


def check_standalone_recurrences(n=None, **_):
    top = n or 6
    for m in range(1, top + 1):
        _expect(recurtab.standalone_l(m).entries == recurtab.tables_h_l(m)[1].entries,
                f"standalone l_{m} differs from the coupled recurrence")
        _expect(recurtab.standalone_s(m).entries == recurtab.tables_s_t(m)[0].entries,
                f"standalone s_{m} differs from the coupled recurrence")
    return {"n": top}


def check_g_corollary(n=None, **_):
    top = n or 6
    for m in range(0, top + 1):
        _expect(recurtab.leibniz_corollary_check(m), f"g corollary fails at n={m}")
    return {"n": top}


def check_polyform(n=None, **_):
    top = n or 6
    for name in recurtab.POLYFORMS:
        _expect(recurtab.polyform_recurrence_check(name, top), f"{name} polynomial form fails")
    return {"n": top, "recurrences": list(recurtab.POLYFORMS)}


def _ranges_ok(table, lo_i, hi_i, lo_j, hi_j) -> list:
    return [k for k in table.entries if not (lo_i <= k[0] <= hi_i and lo_j <= k[1] <= hi_j(k[0]))]


def check_index_ranges(**_):
    for m in range(1, 8):
        bad = _ranges_ok(recurtab.table_g(m), 0, m, 0, lambda i: (m - i) // 2)
        _expect(not bad, f"g_{m} index range", entries=bad)
        bad = _ranges_ok(recurtab.table_gamma_stirling(m), 1, m, 1,
                         lambda i: (2 * m + 1 - i) // 2)
        _expect(not bad, f"gamma_{m} index range", entries=bad)
        s, t = recurtab.tables_s_t(m)
        _expect(not _ranges_ok(s, 1, m, 1, lambda i: (3 * m + 1 - i) // 2), f"s_{m} range")
        _expect(not _ranges_ok(t, 0, m - 1, 1, lambda i: (3 * m - 1 - i) // 2), f"t_{m} range")
        h, ell = recurtab.tables_h_l(m)
        _expect(not _ranges_ok(h, 0, 2 * m - 2, 0, lambda i: (3 * m - 3 - i) // 2),
                f"h_{m} range")
        _expect(not _ranges_ok(ell, 1, 2 * m, 1, lambda i: (3 * m + 1 - i) // 2), f"l_{m} range")
    return {"n": 7}


# ------------------------------------------------------------ reports


def report_conjecture_jsp(k=None, n=None, workers=1, **_):
    top = k or n or 4
    verdicts = []
    for kk in range(2, top + 1):
        for i in range(1, kk):
            verdicts.append(gammalib.conjecture_check_jsp(kk, i, workers=workers).to_json())
    return {"k": top, "verdicts": verdicts,
            "all_positive": all(v["positive"] for v in verdicts)}


def report_guo_zeng(n=None, **_):
    top = n or 8
    verdicts = [gammalib.guo_zeng_check(m).to_json() for m in range(1, top + 1)]
    return {"n": top, "verdicts": verdicts,
            "all_nonnegative": all(v["positive"] for v in verdicts)}


# ------------------------------------------------------------ catalog


def _e(id, desc, budget, pipes, fn, report=False):
    return CheckCatalogEntry(id, desc, budget, pipes, fn, report)


CATALOG = {e.id: e for e in (
    _e("golden", "printed values of d^B, C, L, g, gamma, h, l, s, t, S and g row sums", 4,
       ("enumeration", "recurrence"), check_golden),
    _e("typeB-triple", "E_n: enumeration = dB grammar = g recurrence", 5,
       ("enumeration", "grammar", "recurrence"), check_typeB_triple),
    _e("stirling-triple", "C_n: enumeration = stirling grammar = gamma recurrence", 5,
       ("enumeration", "grammar", "recurrence"), check_stirling_triple),
    _e("legendre-triple", "H_n, L_n: enumeration = grammar = h/l recurrence", 3,
       ("enumeration", "grammar", "recurrence"), check_legendre_triple),
    _e("jacobi-triple", "S_n, T_n: enumeration = grammar = s/t recurrence", 4,
       ("enumeration", "grammar", "recurrence"), check_jacobi_triple),
    _e("transforms", "every change of grammar verifies", 0, ("grammar",), check_transforms),
    _e("transform-commute", "derive_n commutes with substitution", 8, ("grammar",),
       check_transform_commute),
    _e("ring-axioms", "randomized ring axioms", 1000, ("polycore",), check_ring_axioms),
    _e("leibniz", "randomized derivation property", 1000, ("grammar",), check_leibniz),
    _e("parse-roundtrip", "parse(format(p)) == p", 1000, ("polycore",), check_parse_roundtrip),
    _e("gamma-reconstruction", "gamma expansions round trip and are unique", 1000,
       ("gammalib",), check_gamma_reconstruction),
    _e("generator-bruteforce", "insertion generator equals the brute-force filter", 4,
       ("enumeration",), check_generator_bruteforce),
    _e("cardinalities", "distribution totals equal closed-form sizes", 5, ("enumeration",),
       check_cardinalities),
    _e("degrees", "distribution polynomials are homogeneous of the stated degree", 5,
       ("enumeration",), check_degrees),
    _e("typeB-eulerian", "des_B distribution equals the typeB grammar read-off", 6,
       ("enumeration", "grammar"), check_typeB_eulerian),
    _e("stirling-equidistribution", "des, asc, plat equidistributed on Q_n", 5,
       ("enumeration",), check_stirling_equidistribution),
    _e("wexc-sum", "wexc+aexc+single = n on type B derangements", 6, ("enumeration",),
       check_wexc_sum),
    _e("cycle-roundtrip", "standard cycle form round trip", 5, ("enumeration",),
       check_cycle_roundtrip),
    _e("symmetric-slices", "top z-slices of S_n and T_n are symmetric-group polynomials", 3,
       ("enumeration",), check_symmetric_slices),
    _e("action-involutions", "letter actions are commuting involutions", 4, ("actions",),
       check_action_involutions),
    _e("action-validity", "actions preserve the family", 4, ("actions",), check_action_validity),
    _e("worked-example", "phi_1, phi_4 and their inverses on 2447887332115665", 8,
       ("actions",), check_worked_example),
    _e("orbit-representatives", "orbit representative counts equal a, g, gamma, s, t", 5,
       ("actions", "recurrence"), check_orbit_representatives),
    _e("partial-gamma-positivity", "E, C, S, T, H, L are partial gamma-positive", 6,
       ("enumeration", "gammalib"), check_partial_gamma_positivity),
    _e("peak-gamma", "gamma vector of A_n equals a(n,k)", 7, ("enumeration", "recurrence"),
       check_peak_gamma),
    _e("eulerian-slice", "gamma_{n,i,n+1-i} is Eulerian and gamma vanishes for i+j<=n", 7,
       ("recurrence",), check_eulerian_slice),
    _e("grammar-tables", "b(n,k), d(n,k) reconstruct B_n, d_n", 6, ("grammar", "enumeration"),
       check_grammar_tables),
    _e("standalone-recurrences", "single-sequence l and s recurrences equal coupled ones", 6,
       ("recurrence",), check_standalone_recurrences),
    _e("g-corollary", "Leibniz corollary for g_n", 6, ("recurrence",), check_g_corollary),
    _e("polyform", "differential-operator forms of the recurrences", 6, ("recurrence",),
       check_polyform),
    _e("index-ranges", "table supports lie in the stated index ranges", 7, ("recurrence",),
       check_index_ranges),
    _e("conjecture-jsp", "partial gamma verdicts for JSP_{k,i} (report only)", 4,
       ("enumeration", "gammalib"), report_conjecture_jsp, report=True),
    _e("guo-zeng", "gamma vectors of involution descent polynomials (report only)", 8,
       ("enumeration", "gammalib"), report_guo_zeng, report=True),
)}


class UnknownCheck(KeyError):
    pass


def run_check(check_id: str, **params) -> CheckResult:
    try:
        entry = CATALOG[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None
    start = time.perf_counter()
    try:
        details = entry.run(**params)
        res = CheckResult(check_id, True, entry.report_only, details or {})
    except Failure as exc:
        res = CheckResult(check_id, False, entry.report_only, {}, exc.payload)
    res.seconds = time.perf_counter() - start
    return res


def run_all(**params) -> list:
    return [run_check(cid, **params) for cid in CATALOG]
