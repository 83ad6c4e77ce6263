"""Independent brute-force oracles for cross-checking the solvers.

These deliberately share no code with the package solvers: plain exhaustive
enumeration over subsets, colorings, and LP basis subsets.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from seghyp.hypergraph import as_generic

ZERO = Fraction(0)
ONE = Fraction(1)


def oracle_tau(H) -> int:
    G = as_generic(H)
    verts = list(G.vertices)
    edges = list(G.edges)
    if not edges:
        return 0
    for size in range(0, len(verts) + 1):
        for sub in itertools.combinations(verts, size):
            s = set(sub)
            if all(e & s for e in edges):
                return size
    raise AssertionError("unreachable: full vertex set always covers")


def oracle_nu(H) -> int:
    G = as_generic(H)
    edges = list(G.edges)
    best = 0
    for size in range(len(edges), 0, -1):
        if size <= best:
            break
        for sub in itertools.combinations(edges, size):
            union = set()
            ok = True
            for e in sub:
                if e & union:
                    ok = False
                    break
                union |= e
            if ok:
                return size
    return best


def oracle_chi(H) -> int:
    G = as_generic(H)
    verts = list(G.vertices)
    edges = [frozenset(e) for e in G.edges]
    if not edges:
        return 1
    idx = {v: i for i, v in enumerate(verts)}
    eidx = [tuple(idx[v] for v in e) for e in edges]
    for k in range(1, len(verts) + 1):
        for assignment in itertools.product(range(k), repeat=len(verts)):
            if all(len({assignment[i] for i in e}) > 1 for e in eidx):
                return k
    raise AssertionError("unreachable: distinct colors are always proper")


def _solve_square(M: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact Gaussian elimination; None if singular."""
    n = len(M)
    A = [row[:] + [rhs[i]] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        inv = A[col][col]
        A[col] = [v / inv for v in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [vr - f * vc for vr, vc in zip(A[r], A[col])]
    return [A[i][n] for i in range(n)]


def oracle_nu_star(H) -> Fraction:
    """Fractional matching optimum by enumerating vertices of the feasible polytope."""
    G = as_generic(H)
    verts = list(G.vertices)
    edges = list(G.edges)
    n = len(edges)
    if n == 0:
        return ZERO
    # constraints: for each vertex, sum_{e ni v} x_e <= 1; for each var, -x_e <= 0
    rows: list[tuple[list[Fraction], Fraction]] = []
    for v in verts:
        rows.append(([ONE if v in e else ZERO for e in edges], ONE))
    for j in range(n):
        rows.append(([-ONE if i == j else ZERO for i in range(n)], ZERO))
    best = ZERO
    for combo in itertools.combinations(range(len(rows)), n):
        M = [rows[i][0] for i in combo]
        rhs = [rows[i][1] for i in combo]
        x = _solve_square(M, rhs)
        if x is None:
            continue
        if all(sum((a * xi for a, xi in zip(row, x)), ZERO) <= b for row, b in rows):
            val = sum(x, ZERO)
            if val > best:
                best = val
    return best
