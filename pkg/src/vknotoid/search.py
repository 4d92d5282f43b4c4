"""Search for valid virtual brackets over prime fields.

The pair equations (3)-(8) determine (C, D, U) from (A, B, V) at each pair,
which collapses the search to the A/B/V side: per-element diagonal triples
constrained by equations (1)-(2), then off-diagonal triples per ansatz, with
the triple equations (9)-(23) checked incrementally as soon as all six pair
slots they mention are assigned.  omega is derived from equation (1) at the
first element and never searched.

The diagonal ansatz fixes off-diagonal A = B = 0 (so C = D = 0 and
U = V^{-1} there), mirroring the shape of the known small examples; the full
ansatz searches all off-diagonal triples.  Every candidate that completes is
re-verified from scratch before being reported.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .biquandle import FiniteBiquandle
from .bracket import VirtualBracket, verify_bracket_axioms
from .ring import Modulus, extended_gcd, inverse_mod


@dataclass(frozen=True)
class SearchConfig:
    modulus: int
    ansatz: str = "diagonal"          # "diagonal" | "full"
    budget: int = 1_000_000           # max assignments examined
    seed: int = 0
    require_delta_unit: bool = False

    def __post_init__(self) -> None:
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.ansatz not in ("diagonal", "full"):
            raise ValueError("ansatz must be 'diagonal' or 'full'")
        p = self.modulus
        if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
            raise ValueError("modulus must be prime, got %d" % p)


@dataclass
class SearchResult:
    brackets: list[VirtualBracket]
    exhausted: bool
    nodes: int


def solve_pair(a: int, b: int, v: int, delta: int,
               p: int) -> tuple[int, int, int] | None:
    """Solve equations (3)-(8) at one pair for (c, d, u) over Z_p.

    {a*c + v*u = 1, a*u + v*c = 0} and {b*d + v*u = 1, b*u + v*d = 0} are
    linear in (c, u) and (d, u); the two u values must agree, and (7)-(8)
    are checked directly.  Returns None when no solution exists.
    """
    a, b, v, delta = a % p, b % p, v % p, delta % p

    def solve2(m00: int, m01: int) -> tuple[int, int] | None:
        # [[m00, m01], [m01, m00]] (X, Y)^T = (1, 0)^T
        det = (m00 * m00 - m01 * m01) % p
        if det == 0:
            return None
        dinv = inverse_mod(det, p)
        return (m00 * dinv % p, (-m01) * dinv % p)

    cu = solve2(a, v)
    du = solve2(b, v)
    if cu is None or du is None:
        return None
    c, u1 = cu
    d, u2 = du
    if u1 != u2:
        return None
    u = u1
    if (delta * b * d + a * d + b * c) % p:
        return None
    if (delta * a * c + a * d + b * c) % p:
        return None
    return (c, d, u)


def _triple_dependencies(x: FiniteBiquandle) -> list[tuple[tuple, frozenset]]:
    """For each (a, b, c): the set of pair slots its equations read."""
    deps = []
    n = x.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                pairs = frozenset([
                    (a, b), (b, c), (a, c),
                    (x.under_op(a, b), x.over_op(c, b)),
                    (x.over_op(b, a), x.over_op(c, a)),
                    (x.under_op(a, c), x.under_op(b, c)),
                ])
                deps.append(((a, b, c), pairs))
    return deps


def _triples_hold(x: FiniteBiquandle, tabs: dict[str, dict], delta: int,
                  p: int, triple: tuple[int, int, int]) -> bool:
    a, b, c = triple
    A, B, V = tabs["A"], tabs["B"], tabs["V"]
    pp = (x.under_op(a, b), x.over_op(c, b))
    q = (x.over_op(b, a), x.over_op(c, a))
    r = (x.under_op(a, c), x.under_op(b, c))
    Aab, Bab, Vab = A[(a, b)], B[(a, b)], V[(a, b)]
    Abc, Bbc, Vbc = A[(b, c)], B[(b, c)], V[(b, c)]
    Aac, Bac, Vac = A[(a, c)], B[(a, c)], V[(a, c)]
    Ap, Bp, Vp = A[pp], B[pp], V[pp]
    Aq, Bq, Vq = A[q], B[q], V[q]
    Ar, Br, Vr = A[r], B[r], V[r]
    checks = (
        Aab * Ap * Abc + Vab * Ap * Vbc - (Aq * Aac * Ar + Vq * Aac * Vr),
        (Aab * Ap * Bbc + Bab * Ap * Abc + delta * Bab * Ap * Bbc
         + Bab * Ap * Vbc + Bab * Bp * Bbc + Bab * Vp * Bbc
         + Vab * Ap * Bbc) - Aq * Bac * Ar,
        Aab * Bp * Abc - (Aq * Aac * Br + Bq * Aac * Ar + delta * Bq * Aac * Br
                          + Bq * Aac * Vr + Bq * Bac * Br + Bq * Vac * Br
                          + Vq * Aac * Br),
        Aab * Vp * Abc - (Aq * Aac * Vr + Vq * Aac * Ar),
        Aab * Ap * Vbc + Vab * Ap * Abc - Aq * Vac * Ar,
        Bab * Bp * Abc + Bab * Vp * Vbc - (Aq * Bac * Br + Vq * Vac * Br),
        Aab * Bp * Bbc + Vab * Vp * Bbc - (Bq * Bac * Ar + Bq * Vac * Vr),
        Bab * Bp * Vbc + Bab * Vp * Abc - Aq * Bac * Vr,
        Aab * Bp * Vbc - (Bq * Bac * Vr + Bq * Vac * Ar),
        Vab * Bp * Abc - (Aq * Vac * Br + Vq * Bac * Br),
        Aab * Vp * Bbc + Vab * Bp * Bbc - Vq * Bac * Ar,
        Vab * Vp * Abc - Aq * Vac * Vr,
        Aab * Vp * Vbc - Vq * Vac * Ar,
        Vab * Bp * Vbc - Vq * Bac * Vr,
        Vab * Vp * Vbc - Vq * Vac * Vr,
    )
    return not any(v % p for v in checks)


def search_brackets(x: FiniteBiquandle, cfg: SearchConfig) -> SearchResult:
    """Enumerate brackets over Z_p matching the configured ansatz.

    Deterministic for a fixed (biquandle, config): value orders are drawn
    from random.Random(cfg.seed).
    """
    p = cfg.modulus
    n = x.n
    rng = random.Random(cfg.seed)
    deps = _triple_dependencies(x)
    diag_slots = [(i, i) for i in range(n)]
    off_slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    rng.shuffle(off_slots)
    slot_order = diag_slots + off_slots
    slot_rank = {s: k for k, s in enumerate(slot_order)}
    # triples become checkable once their highest-ranked slot is assigned
    by_last_slot: dict[int, list[tuple[int, int, int]]] = {}
    for triple, pairs in deps:
        last = max(slot_rank[s] for s in pairs)
        by_last_slot.setdefault(last, []).append(triple)

    deltas = list(range(p))
    rng.shuffle(deltas)
    values = list(range(p))

    found: list[VirtualBracket] = []
    nodes = 0
    exhausted = False

    def diag_candidates(delta: int, omega: int | None) -> list[tuple]:
        """Diagonal (a, b, v) triples compatible with (1)-(2), plus derived
        (c, d, u); when omega is fixed only matching triples survive."""
        out = []
        for a, b, v in itertools.product(values, repeat=3):
            w = (delta * a + b + v) % p
            if omega is not None and w != omega:
                continue
            g, _, _ = extended_gcd(w, p)
            if g != 1:
                continue
            cdu = solve_pair(a, b, v, delta, p)
            if cdu is None:
                continue
            c, d, u = cdu
            if (delta * c + d + u - inverse_mod(w, p)) % p:
                continue
            out.append((a, b, v, c, d, u, w))
        return out

    def off_candidates(delta: int) -> list[tuple]:
        out = []
        if cfg.ansatz == "diagonal":
            for v in range(1, p):
                out.append((0, 0, v, 0, 0, inverse_mod(v, p)))
            return out
        for a, b, v in itertools.product(values, repeat=3):
            cdu = solve_pair(a, b, v, delta, p)
            if cdu is not None:
                out.append((a, b, v) + cdu)
        return out

    for delta in deltas:
        if cfg.require_delta_unit:
            g, _, _ = extended_gcd(delta, p)
            if g != 1:
                continue
        tabs = {L: {} for L in "ABVCDU"}
        off_cands = off_candidates(delta)

        def place(slot_idx: int, omega: int | None) -> bool:
            """Returns False when the budget ran out."""
            nonlocal nodes, exhausted
            if nodes >= cfg.budget:
                exhausted = True
                return False
            if slot_idx == len(slot_order):
                br = _assemble(x, p, tabs, delta, omega)
                if verify_bracket_axioms(br).passed:
                    found.append(br)
                return True
            slot = slot_order[slot_idx]
            if slot_idx < n:
                cands = diag_candidates(delta, omega)
            else:
                cands = off_cands
            for cand in cands:
                nodes += 1
                if nodes > cfg.budget:
                    exhausted = True
                    return False
                a, b, v, c, d, u = cand[:6]
                w = cand[6] if len(cand) > 6 else omega
                for L, val in zip("ABVCDU", (a, b, v, c, d, u)):
                    tabs[L][slot] = val
                ok = all(_triples_hold(x, tabs, delta, p, t)
                         for t in by_last_slot.get(slot_idx, ()))
                if ok:
                    if not place(slot_idx + 1, w):
                        return False
                for L in "ABVCDU":
                    del tabs[L][slot]
            return True

        if not place(0, None):
            break
    return SearchResult(found, exhausted, nodes)


def _assemble(x: FiniteBiquandle, p: int, tabs: dict[str, dict],
              delta: int, omega: int) -> VirtualBracket:
    n = x.n

    def tbl(L: str):
        return tuple(tuple(tabs[L][(i, j)] for j in range(n)) for i in range(n))

    return VirtualBracket(x, Modulus(p), tbl("A"), tbl("B"), tbl("V"),
                          tbl("C"), tbl("D"), tbl("U"), delta, omega)


def brute_force_singleton(p: int) -> list[VirtualBracket]:
    """Oracle for n = 1: enumerate all (delta, a, b, v) with derived
    (c, d, u) and omega, keeping those passing the full axiom check."""
    x = FiniteBiquandle(((0,),), ((0,),))
    out = []
    for delta, a, b, v in itertools.product(range(p), repeat=4):
        w = (delta * a + b + v) % p
        g, _, _ = extended_gcd(w, p)
        if g != 1:
            continue
        cdu = solve_pair(a, b, v, delta, p)
        if cdu is None:
            continue
        br = VirtualBracket(x, Modulus(p), ((a,),), ((b,),), ((v,),),
                            ((cdu[0],),), ((cdu[1],),), ((cdu[2],),), delta, w)
        if verify_bracket_axioms(br).passed:
            out.append(br)
    return out
