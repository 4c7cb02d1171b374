"""Deterministic builders for extremal uniquely-dominated graphs.

Two families are produced with full role bookkeeping: the bipartite family
meeting the bipartite bound and the perfectly dominated general family
meeting Fischermann's bound, plus the star that settles gamma = 1.  The
verifier re-derives every claimed property through the domination module,
trusting nothing the builder says about its own output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bounds import phi
from .domination import (
    closed_neighborhoods_disjoint,
    domination_number,
    exterior_private_neighbors,
    is_dominating,
    is_perfectly_dominated,
    is_umd,
)
from .graph import Bipartition, Graph, bit_list, check_bipartition, from_edge_list, mask_of


@dataclass(frozen=True)
class ConstructionLayout:
    """Role partition attached to a constructed graph.

    ``role_of`` uses the bipartite-family roles D_X, D_Y, X1, X2, Y, C,
    R_prime, R_dprime or the general-family roles D, A, B, R.  ``labels``
    carry the per-vertex display names used for DOT output.
    """

    role_of: dict[int, str]
    labels: dict[int, str]
    intended_dominators: int
    partition: Optional[Bipartition] = None


def _bipartite_parts(n: int, gamma: int):
    """Vertex index layout for the bipartite family.

    Fixed convention: dominators x_1..x_dx first, then y_1..y_dy, then the
    pair-blocks b_{i,1}, b_{i,2}, then a_{j,1}, a_{j,2}, then c_1.., then
    r_1.. in order.
    """
    dx = gamma // 2
    dy = gamma - dx
    c_count = min(n - 3 * gamma, 2 * dy - dx + 1)
    r_count = phi(n, gamma)
    assert 3 * gamma + c_count + r_count == n
    xs = list(range(dx))
    ys = list(range(dx, gamma))
    bs = [(gamma + 2 * i, gamma + 2 * i + 1) for i in range(dx)]
    a0 = gamma + 2 * dx
    as_ = [(a0 + 2 * j, a0 + 2 * j + 1) for j in range(dy)]
    c0 = 3 * gamma
    cs = list(range(c0, c0 + c_count))
    rs = list(range(c0 + c_count, n))
    return xs, ys, bs, as_, cs, rs


def _bipartite_edge_groups(n: int, gamma: int) -> dict[str, list[tuple[int, int]]]:
    """Edge recipe for the bipartite family, one list per stage."""
    xs, ys, bs, as_, cs, rs = _bipartite_parts(n, gamma)
    ally = [a for pair in as_ for a in pair]
    x1 = xs[0]
    y1 = ys[0]

    skeleton = []
    for x, (b1, b2) in zip(xs, bs):
        skeleton += [(x, b1), (x, b2)]
    for y, (a1, a2) in zip(ys, as_):
        skeleton += [(y, a1), (y, a2)]

    # one chosen neighbor of each x becomes adjacent to all of Y
    hub = [(b1, a) for (b1, _) in bs for a in ally]

    c_block = []
    for c in cs:
        c_block.append((x1, c))
        c_block += [(c, a) for a in ally]

    tail = []
    r_prime = rs[0::2]
    r_dprime = rs[1::2]
    x1_side = [b1 for (b1, _) in bs]
    for r in r_prime:
        tail += [(r, c) for c in cs]
        tail += [(r, b) for b in x1_side]
        tail.append((r, y1))
    for r in r_dprime:
        tail += [(r, a) for a in ally]
        tail.append((r, x1))
    tail += [(rp, rd) for rp in r_prime for rd in r_dprime]

    return {"skeleton": skeleton, "hub": hub, "c_block": c_block, "tail": tail}


def construct_bipartite(n: int, gamma: int) -> tuple[Graph, ConstructionLayout]:
    """Extremal bipartite graph with unique minimum dominating set of size
    ``gamma`` on ``n`` vertices, together with its role layout."""
    if gamma < 2:
        raise ValueError("family requires gamma >= 2 (see construct_star)")
    if n < 3 * gamma:
        raise ValueError("family requires n >= 3*gamma")
    groups = _bipartite_edge_groups(n, gamma)
    edges = [e for group in groups.values() for e in group]
    g = from_edge_list(n, edges)

    xs, ys, bs, as_, cs, rs = _bipartite_parts(n, gamma)
    role_of: dict[int, str] = {}
    labels: dict[int, str] = {}
    for i, x in enumerate(xs, start=1):
        role_of[x] = "D_X"
        labels[x] = f"x{i}"
    for j, y in enumerate(ys, start=1):
        role_of[y] = "D_Y"
        labels[y] = f"y{j}"
    for i, (b1, b2) in enumerate(bs, start=1):
        role_of[b1] = "X1"
        role_of[b2] = "X2"
        labels[b1] = f"b{i},1"
        labels[b2] = f"b{i},2"
    for j, (a1, a2) in enumerate(as_, start=1):
        role_of[a1] = role_of[a2] = "Y"
        labels[a1] = f"a{j},1"
        labels[a2] = f"a{j},2"
    for k, c in enumerate(cs, start=1):
        role_of[c] = "C"
        labels[c] = f"c{k}"
    for i, r in enumerate(rs, start=1):
        role_of[r] = "R_prime" if i % 2 == 1 else "R_dprime"
        labels[r] = f"r{i}"

    side_a = mask_of(xs) | mask_of(a for pair in as_ for a in pair) | mask_of(rs[0::2])
    partition = Bipartition(side_a, g.full_mask & ~side_a)
    layout = ConstructionLayout(
        role_of=role_of,
        labels=labels,
        intended_dominators=mask_of(xs) | mask_of(ys),
        partition=partition,
    )
    return g, layout


def construct_fischermann(n: int, gamma: int) -> tuple[Graph, ConstructionLayout]:
    """Perfectly dominated graph meeting Fischermann's bound, generally not
    bipartite (one block is a clique)."""
    if gamma < 2:
        raise ValueError("family requires gamma >= 2")
    if n < 3 * gamma:
        raise ValueError("family requires n >= 3*gamma")
    xs = list(range(gamma))
    as_ = list(range(gamma, 2 * gamma))
    bs = list(range(2 * gamma, 3 * gamma))
    rs = list(range(3 * gamma, n))

    edges: list[tuple[int, int]] = []
    for i in range(gamma):
        edges += [(as_[i], xs[i]), (bs[i], xs[i])]
    edges += [(xs[0], r) for r in rs]
    edges += [(bs[i], as_[j]) for i in range(1, gamma) for j in range(i)]
    edges += [(bs[i], r) for i in range(1, gamma) for r in rs]
    clique = as_ + rs
    edges += [(clique[i], clique[j]) for i in range(len(clique)) for j in range(i)]
    g = from_edge_list(n, edges)

    role_of: dict[int, str] = {}
    labels: dict[int, str] = {}
    for i, x in enumerate(xs, start=1):
        role_of[x] = "D"
        labels[x] = f"x{i}"
    for i, a in enumerate(as_, start=1):
        role_of[a] = "A"
        labels[a] = f"a{i}"
    for i, b in enumerate(bs, start=1):
        role_of[b] = "B"
        labels[b] = f"b{i}"
    for k, r in enumerate(rs, start=1):
        role_of[r] = "R"
        labels[r] = f"r{k}"

    layout = ConstructionLayout(
        role_of=role_of,
        labels=labels,
        intended_dominators=mask_of(xs),
        partition=None,
    )
    return g, layout


def construct_star(n: int) -> tuple[Graph, ConstructionLayout]:
    """K_{1,n-1}: the unique-dominator graph for gamma = 1, needs n >= 3."""
    if n < 3:
        raise ValueError("a two-vertex star has two minimum dominating sets")
    g = from_edge_list(n, [(0, v) for v in range(1, n)])
    role_of = {0: "D"}
    labels = {0: "x1"}
    for v in range(1, n):
        role_of[v] = "A"
        labels[v] = f"a{v}"
    layout = ConstructionLayout(
        role_of=role_of,
        labels=labels,
        intended_dominators=1,
        partition=Bipartition(1, g.full_mask & ~1),
    )
    return g, layout


@dataclass
class CheckResult:
    passed: bool
    expected: object = None
    actual: object = None


@dataclass
class VerificationCertificate:
    """Per-check outcomes from re-deriving a construction's claimed properties."""

    checks: dict[str, CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.passed]

    def to_json(self) -> dict:
        return {
            "schema": "unidom/1",
            "kind": "certificate",
            "passed": self.passed,
            "checks": {
                name: {"passed": c.passed, "expected": c.expected, "actual": c.actual}
                for name, c in self.checks.items()
            },
        }


def verify_construction(g: Graph, layout: ConstructionLayout,
                        expected_size: int) -> VerificationCertificate:
    """Independently certify size, domination number, uniqueness, perfect
    domination and the neighborhood conditions of a constructed graph."""
    checks: dict[str, CheckResult] = {}
    intended = layout.intended_dominators
    want_gamma = intended.bit_count()

    size = g.size()
    checks["size"] = CheckResult(size == expected_size, expected_size, size)

    isolated = g.isolated_vertices()
    checks["no_isolated_vertices"] = CheckResult(isolated == 0, [], bit_list(isolated))

    dominates = is_dominating(g, intended)
    checks["intended_set_dominates"] = CheckResult(dominates, True, dominates)

    gamma = domination_number(g)
    checks["gamma"] = CheckResult(gamma == want_gamma, want_gamma, gamma)

    report = is_umd(g)
    checks["unique_minimum_dominating_set"] = CheckResult(report.unique, True, report.unique)

    match = report.unique and report.min_sets == [intended]
    checks["minimum_set_is_intended"] = CheckResult(
        match, bit_list(intended), [bit_list(s) for s in report.min_sets]
    )

    if dominates and gamma == want_gamma:
        perfect = is_perfectly_dominated(g, intended)
    else:
        perfect = False
    checks["perfectly_dominated"] = CheckResult(perfect, True, perfect)

    disjoint = closed_neighborhoods_disjoint(g, intended)
    checks["closed_neighborhoods_disjoint"] = CheckResult(disjoint, True, disjoint)

    if dominates:
        epn_counts = {
            v: exterior_private_neighbors(g, v, intended).bit_count()
            for v in bit_list(intended)
        }
        epn_ok = all(c >= 2 for c in epn_counts.values())
    else:
        epn_counts = {}
        epn_ok = False
    checks["epn_at_least_two_per_dominator"] = CheckResult(
        epn_ok, ">=2 each", {str(v): c for v, c in epn_counts.items()}
    )

    if layout.partition is not None:
        try:
            check_bipartition(g, layout.partition)
            checks["bipartite"] = CheckResult(True, True, True)
        except ValueError as exc:
            checks["bipartite"] = CheckResult(False, True, str(exc))

    return VerificationCertificate(checks=checks)
