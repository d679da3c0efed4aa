"""Gamma expansions.

Univariate: ``f(x) = sum_k g_k x^k (1+x)^(d-2k)``.
Bivariate: ``p(x,y) = sum_j c_j (xy)^j (x+y)^(d-2j)`` for homogeneous symmetric p.
Partial: expand every slice of a trivariate polynomial in one variable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Mapping

from .polycore import Poly, X, as_poly, poly_coeff_slices


class NotSymmetric(ValueError):
    def __init__(self, message: str, pair=None, slice_index=None):
        super().__init__(message)
        self.pair = pair
        self.slice_index = slice_index


class NotHomogeneous(ValueError):
    def __init__(self, message: str, slice_index=None):
        super().__init__(message)
        self.slice_index = slice_index


@dataclass(frozen=True)
class GammaVector:
    d: int
    gammas: tuple

    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def reconstruct(self, var: str = "x") -> Poly:
        x = X(var)
        total = Poly()
        for k, g in enumerate(self.gammas):
            if g:
                total = total + g * x ** k * (1 + x) ** (self.d - 2 * k)
        return total

    def to_json(self) -> dict:
        return {"d": self.d, "gamma": list(self.gammas)}


def _univariate_coeffs(f: Poly, var: str | None) -> tuple:
    names = f.variables
    if var is None:
        if len(names) > 1:
            raise ValueError(f"expected a univariate polynomial, got variables {names}")
        var = names[0] if names else "x"
    elif set(names) - {var}:
        raise ValueError(f"polynomial involves {names}, expected only {var}")
    coeffs = {}
    for mono, c in f.items():
        e = dict(mono).get(var, 0)
        if e < 0:
            raise ValueError("negative exponent in a gamma expansion input")
        coeffs[e] = c
    return var, coeffs


def gamma_expand(f, d: int, var: str | None = None) -> GammaVector:
    """Gamma vector of f about the centre d/2; the basis degree is explicit."""
    f = as_poly(f)
    if d < 0:
        raise ValueError("d must be nonnegative")
    var, coeffs = _univariate_coeffs(f, var)
    if coeffs and max(coeffs) > d:
        raise NotSymmetric(f"degree {max(coeffs)} exceeds the basis degree {d}")
    for k in range(d // 2 + 1):
        a, b = coeffs.get(k, 0), coeffs.get(d - k, 0)
        if a != b:
            raise NotSymmetric(f"coefficient of {var}^{k} is {a} but of {var}^{d - k} is {b}",
                               pair=(k, d - k))
    resid = [coeffs.get(k, 0) for k in range(d + 1)]
    gammas = []
    for k in range(d // 2 + 1):
        g = resid[k]
        gammas.append(g)
        if g:
            m = d - 2 * k
            for t in range(m + 1):
                resid[k + t] -= g * comb(m, t)
    if any(resid):
        raise ArithmeticError(f"gamma peel left a residue {resid}")
    return GammaVector(d, tuple(gammas))


def _bivariate_coeffs(p: Poly, x: str, y: str, d: int | None) -> tuple:
    stray = set(p.variables) - {x, y}
    if stray:
        raise NotHomogeneous(f"unexpected variables {sorted(stray)} besides {x}, {y}")
    coeffs = {}
    degs = set()
    for mono, c in p.items():
        e = dict(mono)
        a, b = e.get(x, 0), e.get(y, 0)
        if a < 0 or b < 0:
            raise NotHomogeneous("negative exponent in a gamma expansion input")
        coeffs[(a, b)] = c
        degs.add(a + b)
    if d is None:
        if len(degs) > 1:
            raise NotHomogeneous(f"mixed total degrees {sorted(degs)}")
        d = degs.pop() if degs else 0
    elif degs - {d}:
        raise NotHomogeneous(f"total degrees {sorted(degs)} differ from {d}")
    return d, coeffs


def gamma_expand_xy(p, d: int | None = None, x: str = "x", y: str = "y") -> list:
    """Coefficients c_j with ``p = sum_j c_j (xy)^j (x+y)^(d-2j)``.

    Negative coefficients are allowed; positivity is judged by the caller.
    """
    p = as_poly(p)
    d, coeffs = _bivariate_coeffs(p, x, y, d)
    for (a, b), c in coeffs.items():
        if coeffs.get((b, a), 0) != c:
            raise NotSymmetric(f"coefficient of {x}^{a}{y}^{b} is {c} but of {x}^{b}{y}^{a} "
                               f"is {coeffs.get((b, a), 0)}", pair=((a, b), (b, a)))
    # the coefficient of x^(d-k) y^k is symmetric, so the univariate peel applies
    uni = Poly({((("t", k),) if k else ()): coeffs.get((d - k, k), 0) for k in range(d + 1)})
    return list(gamma_expand(uni, d, "t").gammas)


def reconstruct_xy(cs, d: int, x: str = "x", y: str = "y") -> Poly:
    px, py = X(x), X(y)
    total = Poly()
    for j, c in enumerate(cs):
        if c:
            total = total + c * (px * py) ** j * (px + py) ** (d - 2 * j)
    return total


@dataclass(frozen=True)
class PartialGammaExpansion:
    z_var: str
    x_var: str
    y_var: str
    slices: Mapping  # i -> (d_i, [c_0, c_1, ...])
    positive: bool
    witness: tuple | None = None

    def table(self) -> dict:
        """``{(i, j): gamma}`` over nonzero entries."""
        return {(i, j): c for i, (_, cs) in self.slices.items() for j, c in enumerate(cs) if c}

    def as_poly(self, ivar: str = "x", jvar: str = "y") -> Poly:
        """The gamma generating polynomial ``sum gamma(i,j) ivar^i jvar^j``."""
        return Poly.from_counts({k: v for k, v in self.table().items()}, [ivar, jvar])

    def reconstruct(self) -> Poly:
        z = X(self.z_var)
        total = Poly()
        for i, (d, cs) in self.slices.items():
            total = total + z ** i * reconstruct_xy(cs, d, self.x_var, self.y_var)
        return total

    def to_json(self) -> dict:
        return {
            "z": self.z_var, "pair": [self.x_var, self.y_var],
            "slices": {str(i): {"d": d, "gamma": list(cs)} for i, (d, cs) in self.slices.items()},
            "positive": self.positive,
            "witness": list(self.witness) if self.witness else None,
        }


def partial_gamma(p, z_var: str = "z", x_var: str = "x", y_var: str = "y") -> PartialGammaExpansion:
    """Expand each ``z_var``-slice in the ``(x_var y_var, x_var + y_var)`` basis."""
    p = as_poly(p)
    slices = {}
    witness = None
    for i, sl in poly_coeff_slices(p, z_var):
        try:
            d, _ = _bivariate_coeffs(sl, x_var, y_var, None)
            cs = gamma_expand_xy(sl, d, x_var, y_var)
        except NotSymmetric as exc:
            raise NotSymmetric(f"slice {z_var}^{i}: {exc}", exc.pair, i) from None
        except NotHomogeneous as exc:
            raise NotHomogeneous(f"slice {z_var}^{i}: {exc}", i) from None
        slices[i] = (d, tuple(cs))
        if witness is None:
            for j, c in enumerate(cs):
                if c < 0:
                    witness = (i, j, c)
                    break
    return PartialGammaExpansion(z_var, x_var, y_var, slices, witness is None, witness)


# ------------------------------------------------------------------ reports


@dataclass
class Verdict:
    name: str
    params: dict
    positive: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.name, **self.params, "positive": self.positive, **self.detail}


def conjecture_check_jsp(k: int, i: int, budget: int | None = None, workers: int = 1) -> Verdict:
    """Partial gamma verdict for JSP_{k,i} (barred letters of i values removed)."""
    from .combinat import jsp_ki_poly
    if not 1 <= i <= k - 1:
        raise ValueError(f"need 1 <= i <= k-1, got k={k}, i={i}")
    poly = jsp_ki_poly(k, i, budget=budget, workers=workers)
    exp = partial_gamma(poly, "z", "x", "y")
    detail = {"expansion": exp.to_json()}
    if not exp.positive:
        detail["provenance"] = {"family": "jacobi-partial", "k": k, "i": i,
                                "stats": "asc:x,des:y,plat:z", "polynomial": str(poly)}
    return Verdict("conjecture-jsp", {"k": k, "i": i}, exp.positive, detail)


def guo_zeng_check(n: int, budget: int | None = None) -> Verdict:
    """Gamma vector of the involution descent polynomial about degree n-1."""
    from .combinat import involution_descent_poly
    f = involution_descent_poly(n, "x", budget=budget)
    gv = gamma_expand(f, n - 1, "x")
    return Verdict("guo-zeng", {"n": n}, gv.is_nonnegative(),
                   {"polynomial": str(f), **gv.to_json()})
