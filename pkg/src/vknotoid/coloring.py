"""Biquandle colorings of knotoid diagrams.

A coloring assigns a biquandle element to every semi-arc so that each
classical crossing's two relations hold.  Enumeration walks the classical
passes in traversal order: the color of the segment after a pass is free
until the crossing's partner pass has been seen, at which point the crossing
forces (and checks) the remaining out-color.  This keeps the branch factor
at one free choice per crossing plus the tail color, and covers non-affine
biquandles the same way as affine ones.

Enumeration is pure; callers may split the search over the tail color across
threads if they want to.
"""

from __future__ import annotations

from .biquandle import FiniteBiquandle
from .diagram import KnotoidDiagram

Coloring = tuple[int, ...]


def _forced_outputs(x: FiniteBiquandle, sign: int, u_in: int,
                    o_in: int) -> tuple[int, int]:
    """(u_out, o_out) forced by the crossing relations from the in-colors."""
    if sign > 0:
        o_out = x.over_inv(o_in, u_in)       # o_in = o_out over u_in
        u_out = x.under_op(u_in, o_out)
    else:
        u_out = x.under_inv(u_in, o_in)      # u_in = u_out under o_in
        o_out = x.over_op(o_in, u_out)
    return u_out, o_out


def enumerate_colorings(diagram: KnotoidDiagram,
                        x: FiniteBiquandle) -> list[Coloring]:
    """All colorings, as tuples of 0-based element indices per semi-arc."""
    crossings = diagram.crossings()
    by_pass: dict[int, tuple[int, str]] = {}
    for cid, c in crossings.items():
        by_pass[c.under_pass] = (cid, "U")
        by_pass[c.over_pass] = (cid, "O")

    nseg = diagram.semi_arc_count
    colors = [-1] * nseg
    out: list[Coloring] = []

    def extend(seg: int) -> None:
        if seg == nseg:
            out.append(tuple(colors))
            return
        k = seg - 1                    # the pass leading into this segment
        cid, role = by_pass[k]
        c = crossings[cid]
        partner = c.over_pass if role == "U" else c.under_pass
        if partner > k:
            # partner not traversed yet: the out-color is still free
            for v in range(x.n):
                colors[seg] = v
                extend(seg + 1)
            colors[seg] = -1
            return
        u_out, o_out = _forced_outputs(x, c.sign, colors[c.u_in], colors[c.o_in])
        expected_partner_out = o_out if role == "U" else u_out
        if colors[partner + 1] != expected_partner_out:
            return
        colors[seg] = u_out if role == "U" else o_out
        extend(seg + 1)
        colors[seg] = -1

    for tail in range(x.n):
        colors[0] = tail
        extend(1)
    return out


def counting_invariant(diagram: KnotoidDiagram, x: FiniteBiquandle) -> int:
    """Number of colorings."""
    return len(enumerate_colorings(diagram, x))


def counting_matrix(diagram: KnotoidDiagram,
                    x: FiniteBiquandle) -> list[list[int]]:
    """n x n matrix whose (i, j) entry counts colorings with the tail arc
    colored x_{i+1} and the head arc colored x_{j+1}.  Entries sum to the
    counting invariant."""
    mat = [[0] * x.n for _ in range(x.n)]
    for f in enumerate_colorings(diagram, x):
        mat[f[0]][f[-1]] += 1
    return mat


def matrix_product(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
