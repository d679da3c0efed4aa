"""Foata-Strehl style actions, the insertion/deletion maps, and orbits.

Actions are indexed by letter: a value for type B cycles and Stirling
permutations, a (value, barred) letter for Jacobi-Stirling words.  Each
letter action is an involution and different letters commute.  The
position-indexed maps used in worked examples are thin wrappers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .combinat import (CycleForm, GenLetter, GenWord, check_budget, from_cycle_form, perm_stats,
                       signed_stats, to_cycle_form, word_codes, word_stats_codes)
from .polycore import Poly


class PositionOutOfRange(IndexError):
    pass


class InvalidGap(IndexError):
    pass


class MissingLetter(ValueError):
    pass


class UnsupportedAction(ValueError):
    pass


INF = float("inf")

# ------------------------------------------------------------ type B cycles


def _cycle_move(cyc: tuple, k: int) -> tuple | None:
    """Move entry k (1-based within the cycle) of one standard cycle, or None."""
    c = (INF,) + cyc
    i = len(cyc)
    if not 1 <= k < i:
        return None
    a, b, nxt = c[k - 1], c[k], c[k + 1]
    rest = list(c)
    del rest[k]
    if a < b < nxt:
        j = max(t for t in range(0, k) if c[t] > b > c[t + 1])
        rest.insert(j + 1, b)
    elif a > b > nxt:
        j = min(t for t in range(k + 1, i) if c[t] < b < c[t + 1])
        rest.insert(j, b)  # j shifted by the deletion
    else:
        return None
    return tuple(rest[1:])


def fs_typeB(pi: CycleForm, letter: int) -> CycleForm:
    """Letter-indexed action on a type B cycle form; identity off cda/cdd."""
    for ci, cyc in enumerate(pi.cycles):
        for k, e in enumerate(cyc, 1):
            if abs(e) == letter:
                moved = _cycle_move(cyc, k)
                if moved is None:
                    return pi
                cycles = list(pi.cycles)
                cycles[ci] = moved
                return CycleForm(tuple(cycles))
    raise MissingLetter(f"letter {letter} not in {pi}")


def typeB_states(pi: CycleForm) -> dict:
    """``{letter: 'asc' | 'des'}`` for every movable letter (c_0 = +inf)."""
    out = {}
    for cyc in pi.cycles:
        c = (INF,) + cyc
        for k in range(1, len(cyc)):
            if c[k - 1] < c[k] < c[k + 1]:
                out[abs(c[k])] = "asc"
            elif c[k - 1] > c[k] > c[k + 1]:
                out[abs(c[k])] = "des"
    return out


# ------------------------------------------------------------ Stirling


def _stirling_state(codes: tuple, v: int) -> tuple | None:
    """(state, first, second) positions (0-based) for value code v, or None."""
    p = codes.index(v)
    q = codes.index(v, p + 1)
    before = codes[p - 1] if p > 0 else 0
    after = codes[p + 1]
    if before < v < after:
        return "asc", p, q
    if q == p + 1 and before > v:
        return "desp", p, q
    return None


def _stirling_move(codes: tuple, v: int) -> tuple:
    st = _stirling_state(codes, v)
    if st is None:
        return codes
    state, p, q = st
    w = list(codes)
    del w[p]
    if state == "asc":
        w.insert(q - 1, v)
    else:
        j = max((s for s in range(p) if codes[s] < v), default=-1)
        w.insert(j + 1, v)
    return tuple(w)


def fs_stirling(w: GenWord, value: int) -> GenWord:
    """Letter-indexed action on a Stirling permutation."""
    codes = w.codes
    v = 2 * value
    if codes.count(v) != 2:
        raise MissingLetter(f"value {value} does not occur twice in {w}")
    return GenWord.from_codes(_stirling_move(codes, v), w.family)


def fs_stirling_at(w: GenWord, k: int) -> GenWord:
    """Position-indexed map phi_k (1-based): moves sigma_k when k is a double
    ascent or a descent-plateau, otherwise the identity."""
    codes = w.codes
    if not 1 <= k <= len(codes):
        raise PositionOutOfRange(k)
    v = codes[k - 1]
    st = _stirling_state(codes, v)
    if st is None or st[1] != k - 1:
        return w
    return GenWord.from_codes(_stirling_move(codes, v), w.family)


def stirling_states(codes: tuple) -> dict:
    out = {}
    for v in set(codes):
        st = _stirling_state(codes, v)
        if st:
            out[v // 2] = st[0]
    return out


# ------------------------------------------------------------ Jacobi


def _jacobi_state(codes: tuple, k: int) -> str | None:
    m = len(codes)
    prev = codes[k - 1] if k > 0 else 0
    cur = codes[k]
    nxt = codes[k + 1] if k + 1 < m else 0
    if prev < cur < nxt:
        return "asc"
    if prev > cur == nxt:
        return "desp"
    if prev > cur > nxt and cur & 1:
        return "bddes"
    return None


def _jacobi_move(codes: tuple, k: int) -> tuple:
    state = _jacobi_state(codes, k)
    if state is None:
        return codes
    cur = codes[k]
    w = list(codes)
    del w[k]
    if state == "asc":
        j = min((s for s in range(k + 1, len(codes)) if codes[s] <= cur), default=len(codes))
        w.insert(j - 1, cur)
    else:
        j = max((s for s in range(k) if codes[s] < cur), default=-1)
        w.insert(j + 1, cur)
    return tuple(w)


def fs_jacobi(w: GenWord, letter: GenLetter) -> GenWord:
    """Letter-indexed action on JSP/JSPD words.  Unbarred letters act through
    their first copy."""
    codes = w.codes
    c = letter.code
    if c not in codes:
        raise MissingLetter(f"letter {letter} not in {w}")
    return GenWord.from_codes(_jacobi_move(codes, codes.index(c)), w.family)


def fs_jacobi_at(w: GenWord, k: int) -> GenWord:
    """Position-indexed phi_k (1-based); positions 0 and len+1 are fixed."""
    codes = w.codes
    if not 0 <= k <= len(codes) + 1:
        raise PositionOutOfRange(k)
    if k == 0 or k == len(codes) + 1:
        return w
    c = codes[k - 1]
    if not c & 1 and codes.index(c) != k - 1:
        return w  # second copy of an unbarred letter is never movable
    return GenWord.from_codes(_jacobi_move(codes, k - 1), w.family)


def jacobi_states(codes: tuple) -> dict:
    out = {}
    seen = set()
    for k, c in enumerate(codes):
        if c in seen:
            continue
        seen.add(c)
        st = _jacobi_state(codes, k)
        if st:
            out[c] = st
    return out


# ------------------------------------------------------------ classic FS


def fs_perm(p: Sequence[int], x: int) -> tuple:
    """Classic Foata-Strehl move with value-0 sentinels: swap the maximal runs
    of larger letters on either side of x when x is a double ascent or double
    descent (exactly one of the runs is then empty)."""
    p = tuple(p)
    i = p.index(x)
    lo = i
    while lo > 0 and p[lo - 1] > x:
        lo -= 1
    hi = i + 1
    while hi < len(p) and p[hi] > x:
        hi += 1
    left, right = p[lo:i], p[i + 1:hi]
    if bool(left) == bool(right):
        return p
    return p[:lo] + right + (x,) + left + p[hi:]


def perm_states(p: Sequence[int]) -> dict:
    ext = (0,) + tuple(p) + (0,)
    out = {}
    for i in range(1, len(p) + 1):
        if ext[i - 1] < ext[i] < ext[i + 1]:
            out[ext[i]] = "asc"
        elif ext[i - 1] > ext[i] > ext[i + 1]:
            out[ext[i]] = "des"
    return out


# ------------------------------------------------------------ insert/delete


def _check_gap(w: GenWord, gap: int) -> None:
    if not 0 <= gap <= len(w.letters):
        raise InvalidGap(f"gap {gap} outside 0..{len(w.letters)}")


def insert_pair(w: GenWord, value: int, gap: int) -> GenWord:
    """theta: insert ``value value`` after the first ``gap`` letters."""
    _check_gap(w, gap)
    pair = (GenLetter(value), GenLetter(value))
    return GenWord(w.letters[:gap] + pair + w.letters[gap:], w.family)


def insert_barred(w: GenWord, value: int, gap: int) -> GenWord:
    _check_gap(w, gap)
    return GenWord(w.letters[:gap] + (GenLetter(value, True),) + w.letters[gap:], w.family)


def delete_pair(w: GenWord, value: int) -> GenWord:
    """psi: remove both unbarred copies of ``value``."""
    target = GenLetter(value)
    if w.letters.count(target) != 2:
        raise MissingLetter(f"{value}{value} not in {w}")
    return GenWord(tuple(l for l in w.letters if l != target), w.family)


def delete_barred(w: GenWord, value: int) -> GenWord:
    target = GenLetter(value, True)
    if target not in w.letters:
        raise MissingLetter(f"b{value} not in {w}")
    return GenWord(tuple(l for l in w.letters if l != target), w.family)


# ------------------------------------------------------------ orbits


@dataclass(frozen=True)
class OrbitReport:
    representative: object
    orbit: frozenset
    orbit_weight: Poly
    rep_stats: dict

    @property
    def orbit_size(self) -> int:
        return len(self.orbit)

    def to_json(self) -> dict:
        rep = self.representative
        if isinstance(rep, GenWord):
            rep_txt = str(rep)
        elif isinstance(rep, CycleForm):
            rep_txt = str(rep)
        else:
            rep_txt = " ".join(str(v) for v in rep)
        return {"rep": rep_txt, "orbit_size": self.orbit_size,
                "weight_poly": str(self.orbit_weight), "rep_stats": self.rep_stats}


@dataclass(frozen=True)
class _ActionSpec:
    family: str
    objects: callable      # n -> iterable of hashable objects
    states: callable       # obj -> {letter: state}
    act: callable          # (obj, letter) -> obj
    target: str            # state the representative has for every movable letter
    weight: callable       # obj -> Poly
    rep_stats: callable    # obj -> dict


def _tb_objects(n):
    from .combinat import typeB_derangements
    return (to_cycle_form(w) for w in typeB_derangements(n))


def _tb_weight(cf):
    w, a, s = signed_stats(from_cycle_form(cf), ("wexc", "aexc", "single"))
    return Poly.monomial({"x": w, "y": a, "z": s})


def _tb_rep(cf):
    names = ("single", "wexc", "cda", "cdd")
    return dict(zip(names, signed_stats(from_cycle_form(cf), names, cf)))


def _word_weight(fam):
    def weight(codes):
        a, d, p = word_stats_codes(codes, fam, ("asc", "des", "plat"))
        return Poly.monomial({"x": a, "y": d, "z": p})
    return weight


def _word_rep(fam, names):
    def rep(codes):
        return dict(zip(names, word_stats_codes(codes, fam, names)))
    return rep


def _perm_weight(p):
    return Poly.monomial({"x": perm_stats(p, ("des",))[0]})


ACTIONS = {
    "typeB-derangements": _ActionSpec(
        "typeB-derangements", _tb_objects, typeB_states, fs_typeB, "des", _tb_weight, _tb_rep),
    "stirling": _ActionSpec(
        "stirling", lambda n: word_codes("stirling", n), stirling_states,
        lambda c, v: _stirling_move(c, 2 * v), "asc", _word_weight("stirling"),
        _word_rep("stirling", ("des", "laplat", "desp", "dasc"))),
    "jacobi": _ActionSpec(
        "jacobi", lambda n: word_codes("jacobi", n), jacobi_states,
        lambda c, l: _jacobi_move(c, c.index(l)), "asc", _word_weight("jacobi"),
        _word_rep("jacobi", ("ubdes", "expk", "bddes", "desp"))),
    "jacobi-deleted": _ActionSpec(
        "jacobi-deleted", lambda n: word_codes("jacobi-deleted", n), jacobi_states,
        lambda c, l: _jacobi_move(c, c.index(l)), "asc", _word_weight("jacobi-deleted"),
        _word_rep("jacobi-deleted", ("ubdes", "expk", "bddes", "desp"))),
    "perm": _ActionSpec(
        "perm", lambda n: __import__("itertools").permutations(range(1, n + 1)), perm_states,
        fs_perm, "asc", _perm_weight, lambda p: {"peak": perm_stats(p, ("peak",))[0],
                                                 "des": perm_stats(p, ("des",))[0]}),
}


def orbit_of(family: str, obj) -> frozenset:
    spec = ACTIONS[family]
    letters = sorted(spec.states(obj))
    orbit = {obj}
    for letter in letters:
        orbit |= {spec.act(o, letter) for o in orbit}
    return frozenset(orbit)


def canonical_rep(family: str, obj):
    """Drive every movable letter into the representative's state."""
    spec = ACTIONS[family]
    for letter, state in sorted(spec.states(obj).items()):
        if state != spec.target:
            obj = spec.act(obj, letter)
    return obj


def orbit_decompose(family: str, n: int, budget: int | None = None) -> list:
    """Partition the family into orbits; one report per orbit, ordered by
    the canonical enumeration order of the representatives."""
    if family not in ACTIONS:
        raise UnsupportedAction(family)
    base = "typeB-derangements" if family == "typeB-derangements" else family
    check_budget(base, n, budget)
    spec = ACTIONS[family]
    visited: set = set()
    reports = []
    for obj in spec.objects(n):
        if obj in visited:
            continue
        rep = canonical_rep(family, obj)
        orbit = orbit_of(family, rep)
        if obj not in orbit:
            raise AssertionError(f"{obj} not in the orbit of its representative")
        reps = [o for o in orbit if all(s == spec.target for s in spec.states(o).values())]
        if reps != [rep]:
            raise AssertionError(f"orbit of {rep} has representatives {reps}")
        visited |= orbit
        weight = sum((spec.weight(o) for o in orbit), Poly())
        shown = GenWord.from_codes(rep, family) if isinstance(rep, tuple) and family in (
            "stirling", "jacobi", "jacobi-deleted") else rep
        reports.append(OrbitReport(shown, orbit, weight, spec.rep_stats(rep)))
    return reports


def representative_counts(family: str, n: int, keys: Sequence[str],
                          budget: int | None = None) -> Counter:
    """Count orbit representatives by the given rep_stats keys."""
    return Counter(tuple(r.rep_stats[k] for k in keys)
                   for r in orbit_decompose(family, n, budget))


def letters_of(family: str, obj) -> list:
    """Every letter the action is indexed by (movable or not)."""
    if family == "typeB-derangements":
        return list(range(1, obj.n + 1))
    if family == "stirling":
        return sorted({c // 2 for c in obj})
    if family in ("jacobi", "jacobi-deleted"):
        return sorted(set(obj))
    return sorted(obj)


def act(family: str, obj, letter):
    return ACTIONS[family].act(obj, letter)


def objects(family: str, n: int) -> Iterator:
    return iter(ACTIONS[family].objects(n))
