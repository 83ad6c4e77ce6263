"""Exact fractional matching/cover via rational simplex with duality certificates.

Everything runs over `fractions.Fraction`; optima are certified by producing a
primal/dual pair with exactly equal objectives, both re-checked for feasibility
independently of the pivoting internals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hypergraph import Hypergraph, ValidationError, as_generic
from .solvers import covering_number, matching_number, Cover, Matching

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class FractionalSolution:
    kind: str  # "matching" | "cover"
    weights: dict
    objective: Fraction

    def __post_init__(self) -> None:
        assert self.kind in ("matching", "cover")


class SimplexError(RuntimeError):
    """Internal simplex invariant violated (should never fire on these LPs)."""


def _simplex_max(A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]) -> tuple[list[Fraction], list[Fraction], Fraction]:
    """Maximize c·x subject to Ax <= b, x >= 0 with b >= 0.

    Dense tableau simplex with Bland's anti-cycling rule.  Returns the optimal
    primal x, the dual y read off the slack columns, and the objective value.
    """
    m, n = len(A), len(c)
    if any(bi < 0 for bi in b):
        raise SimplexError("RHS must be nonnegative for the slack-basis start")
    # tableau rows: [A | I | b]; objective row holds reduced costs.
    tab = [list(A[i]) + [ONE if j == i else ZERO for j in range(m)] + [b[i]] for i in range(m)]
    obj = [-ci for ci in c] + [ZERO] * m + [ZERO]
    basis = list(range(n, n + m))

    while True:
        enter = -1
        for j in range(n + m):
            if obj[j] < 0:  # Bland: first improving column
                enter = j
                break
        if enter == -1:
            break
        leave = -1
        best_ratio: Fraction | None = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[leave]
                ):
                    best_ratio = ratio
                    leave = i
        if leave == -1:
            raise SimplexError("LP unbounded; matching/cover LPs are always bounded")
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [vi - f * vl for vi, vl in zip(tab[i], tab[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [vo - f * vl for vo, vl in zip(obj, tab[leave])]
        basis[leave] = enter

    x = [ZERO] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = tab[i][-1]
    y = [obj[n + i] for i in range(m)]
    value = sum((ci * xi for ci, xi in zip(c, x)), ZERO)
    return x, y, value


def _solve_pair(H: Hypergraph) -> tuple[FractionalSolution, FractionalSolution]:
    """One exact solve of the matching LP; primal is f, dual is the cover g."""
    G = as_generic(H)
    verts = list(G.vertices)
    edges = list(G.edges)
    if not edges:
        return (
            FractionalSolution("matching", {}, ZERO),
            FractionalSolution("cover", {v: ZERO for v in verts}, ZERO),
        )
    vpos = {v: i for i, v in enumerate(verts)}
    A = [[ZERO] * len(edges) for _ in verts]
    for j, e in enumerate(edges):
        for v in e:
            A[vpos[v]][j] = ONE
    b = [ONE] * len(verts)
    c = [ONE] * len(edges)
    x, y, value = _simplex_max(A, b, c)

    # Independent certificates: primal and dual feasibility, equal objectives.
    for v in verts:
        load = sum((x[j] for j, e in enumerate(edges) if v in e), ZERO)
        if load > 1:
            raise SimplexError(f"primal infeasible at vertex {v!r}")
    for j, e in enumerate(edges):
        if sum((y[vpos[v]] for v in e), ZERO) < 1:
            raise SimplexError(f"dual infeasible at edge {sorted(e)}")
    if any(xi < 0 for xi in x) or any(yi < 0 for yi in y):
        raise SimplexError("negative weight")
    dual_value = sum(y, ZERO)
    if dual_value != value:
        raise SimplexError(f"duality gap: {value} != {dual_value}")

    f = FractionalSolution("matching", {j: x[j] for j in range(len(edges))}, value)
    g = FractionalSolution("cover", {v: y[vpos[v]] for v in verts}, dual_value)
    return f, g


def fractional_matching(H: Hypergraph) -> FractionalSolution:
    """Optimal fractional matching: max Σ f(e) with Σ_{e∋v} f(e) <= 1 per vertex."""
    return _solve_pair(H)[0]


def fractional_cover(H: Hypergraph) -> FractionalSolution:
    """Optimal fractional cover: min Σ g(v) with Σ_{v∈e} g(v) >= 1 per edge."""
    return _solve_pair(H)[1]


@dataclass(frozen=True)
class SlacknessReport:
    entries: tuple[tuple[object, Fraction, Fraction], ...]  # (vertex, g(v), Σ_{e∋v} f(e))
    violations: tuple[object, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_slackness(H: Hypergraph, f: FractionalSolution, g: FractionalSolution) -> SlacknessReport:
    """Check complementary slackness: every positively-weighted cover vertex is saturated.

    A violation (g(u) > 0 with Σ_{e∋u} f(e) != 1) certifies that the pair is not
    optimal; with exact arithmetic this never fires on solver output.
    """
    if f.objective != g.objective:
        raise ValidationError(
            f"objectives differ ({f.objective} vs {g.objective}); not a certified optimal pair"
        )
    G = as_generic(H)
    edges = list(G.edges)
    entries = []
    violations = []
    for v in G.vertices:
        gv = g.weights.get(v, ZERO)
        if gv > 0:
            load = sum((f.weights.get(j, ZERO) for j, e in enumerate(edges) if v in e), ZERO)
            entries.append((v, gv, load))
            if load != 1:
                violations.append(v)
    return SlacknessReport(tuple(entries), tuple(violations))


@dataclass(frozen=True)
class ChainReport:
    nu: int
    nu_star: Fraction
    tau_star: Fraction
    tau: int
    matching: Matching
    cover: Cover
    fractional_matching: FractionalSolution
    fractional_cover: FractionalSolution

    @property
    def chain_ok(self) -> bool:
        return self.nu <= self.nu_star == self.tau_star <= self.tau


def chain_report(H: Hypergraph, node_limit: int | None = None) -> ChainReport:
    """Compute ν <= ν* = τ* <= τ with witnesses and assert the chain exactly."""
    nu, mw = matching_number(H, node_limit=node_limit)
    tau, cw = covering_number(H, node_limit=node_limit)
    f, g = _solve_pair(H)
    report = ChainReport(
        nu=nu, nu_star=f.objective, tau_star=g.objective, tau=tau,
        matching=mw, cover=cw, fractional_matching=f, fractional_cover=g,
    )
    if not report.chain_ok:
        raise SimplexError(
            f"invariant chain violated: nu={nu} nu*={f.objective} tau*={g.objective} tau={tau}"
        )
    return report
