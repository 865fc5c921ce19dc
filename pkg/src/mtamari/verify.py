"""
Named verification suites for ``mtamari verify``.

Each suite yields ``(label, passed)`` pairs.  Grids default to desk scale;
``m_max`` and ``order`` shrink or widen them.
"""
from __future__ import annotations

import itertools
from typing import Callable, Iterator

from . import formulas, identities, lattice, paths, series

Check = Iterator[tuple[str, bool]]


def _lattice_grid(m_max: int) -> list[tuple[int, int]]:
    grid = []
    for m in range(1, min(m_max, 3) + 1):
        top = {1: 4, 2: 4, 3: 3}[m]
        grid += [(m, n) for n in range(0, top + 1)]
    return grid


def counts(m_max: int = 3, order: int = 5) -> Check:
    limits = {1: 5, 2: 4, 3: 3}
    for m in range(1, min(m_max, 3) + 1):
        for n in range(1, min(order, limits[m]) + 1):
            h = lattice.build_hasse(m, n)
            brute = sum(1 for _ in lattice.enumerate_intervals(h))
            yield f"intervals m={m} n={n}", brute == formulas.count_intervals(m, n)


def contacts(m_max: int = 3, order: int = 8) -> Check:
    for m in range(1, min(m_max, 2) + 1):
        for n in range(1, min(order, 4) + 1):
            table = lattice.interval_table(lattice.build_hasse(m, n))
            brute = dict(map(tuple, table["by_contacts"]))
            row = formulas.contact_row(m, n)
            yield f"by-contacts m={m} n={n}", all(brute.get(i, 0) == c for i, c in row.items())
    for m in range(1, m_max + 1):
        for n in range(1, order + 1):
            yield (f"row-sum m={m} n={n}",
                   sum(formulas.contact_row(m, n).values()) == formulas.count_intervals(m, n))


def order(m_max: int = 3, order: int = 4) -> Check:
    for m, n in _lattice_grid(m_max):
        if n > order:
            continue
        h = lattice.build_hasse(m, n)
        N = len(h)
        pairs = list(itertools.product(range(N), repeat=2))
        yield (f"distance=reachability m={m} n={n}",
               all(h.leq(i, j) == h.leq(i, j, reachability=True) for i, j in pairs))
        yield (f"below m={m} n={n}",
               all(lattice.is_below(h.nodes[i], h.nodes[j]) for i, j in pairs if h.leq(i, j)))
        ok = True
        try:
            for i, j in pairs:
                lattice.meet(h, i, j)
                lattice.join(h, i, j)
        except lattice.NotALattice:
            ok = False
        yield f"meet/join m={m} n={n}", ok


def symmetry(m_max: int = 2, order: int = 6) -> Check:
    for m in range(1, m_max + 1):
        yield f"symmetry m={m} order={order}", series.check_symmetry(series.solve_f(m, order))


def parametrization(m_max: int = 3, order: int = 6) -> Check:
    for m in range(1, m_max + 1):
        yield f"F(1,1) m={m} order={order}", series.check_f11_parametrization(m, order)
    for m in range(1, min(m_max, 2) + 1):
        yield (f"F(x,y) m={m} (2,3) order={order}",
               series.check_full_parametrization(m, order, 2, 3))


def series_brute(m_max: int = 2, order: int = 4) -> Check:
    for m in range(1, min(m_max, 2) + 1):
        F = series.solve_f(m, order, with_y=True, with_q=True)
        for n in range(order + 1):
            brute = lattice.interval_polynomial(lattice.build_hasse(m, n))
            got = {e: int(c) for e, c in F[n].items()}
            yield f"series=brute m={m} n={n}", dict(brute) == got


def identities_suite(m_max: int = 6, order: int = identities.DEFAULT_ORDER) -> Check:
    for p in range(0, 7):
        yield f"lambda of w powers p={p}", identities.verify_lambda_elem(p, order)
    for m in range(1, m_max + 1):
        yield f"inverse power m={m}", identities.verify_lemma_id(m, order)
    for m in range(1, min(m_max, 5) + 1):
        for k in range(1, m + 1):
            yield f"identity m={m} k={k}", identities.verify_identity_k(m, k, order)
    for m in range(1, min(m_max, 3) + 1):
        yield f"final identity m={m}", identities.verify_final_id(m, order)
    for m in range(1, min(m_max, 2) + 1):
        yield f"symmetric form m={m}", identities.verify_sym_form(identities.build_h(m, order), m)
    yield "lagrange table N=10", identities.verify_appendix_lagrange(10)
    for d in range(2, 9):
        for p in range(1, d + 1):
            yield f"hypergeometric m-i={d} p={p}", identities.verify_hypergeometric(d + 1, 1, p)


def bijections(m_max: int = 3, order: int = 4) -> Check:
    for m in range(1, min(m_max, 3) + 1):
        for n in range(0, order + 1):
            dyck = list(paths.m_dyck_paths(m, n))
            ballots = list(paths.ballot_paths(m, n))
            yield (f"fuss-catalan m={m} n={n}",
                   len(dyck) == len(ballots) == formulas.count_paths(m, n))
            yield (f"ballot round trip m={m} n={n}",
                   [paths.ballot_to_dyck(b) for b in ballots] == dyck
                   and all(paths.dyck_to_ballot(p, m) == b for p, b in zip(dyck, ballots)))
            if n:
                yield (f"reduction round trip m={m} n={n}",
                       all(paths.m_expansion(paths.m_reduction(p, m), m) == p for p in dyck))
    for m in range(1, min(m_max, 2) + 1):
        for n in range(0, order + 1):
            yield f"tree rotations m={m} n={n}", rotation_edges(m, n) == cover_edges(m, n)


def rotation_edges(m: int, n: int) -> set[tuple[str, str]]:
    edges = set()
    for t in lattice.m_ary_trees(m, n):
        src = lattice.tree_to_path(t, m).steps
        for leaf in lattice.rotation_sites(t):
            edges.add((src, lattice.tree_to_path(lattice.tree_rotate(t, leaf), m).steps))
    return edges


def cover_edges(m: int, n: int) -> set[tuple[str, str]]:
    h = lattice.build_hasse(m, n)
    return {(h.nodes[a].steps, h.nodes[b].steps) for a, b in h.edges()}


def pointed(m_max: int = 2, order: int = 3) -> Check:
    for m in range(1, min(m_max, 2) + 1):
        for k in range(m):
            for n in range(0, order + 1):
                lhs, rhs = pointed_recursion_sides(m, k, n)
                yield f"pointed m={m} k={k} n={n}", lhs == rhs


def pointed_recursion_sides(m: int, k: int, n: int):
    """Both sides of ``[t^n] G^(k+1) = [t^n] F(x,1) * D G^(k)`` as ``ZZ[x,y]`` polynomials."""
    R, X, Y = series.RING, series.X, series.Y

    def poly(counter):
        return R.from_dict({(a, r, 0): c for (a, r), c in counter.items()}) if counter else R.zero

    diagrams = [lattice.build_hasse(m, s) for s in range(n + 1)]
    lhs = poly(lattice.pointed_polynomial(diagrams[n], k + 1))
    rhs = R.zero
    for a in range(n + 1):
        f1 = poly(lattice.pointed_polynomial(diagrams[a], 0)).subs(Y, 1)
        g = poly(lattice.pointed_polynomial(diagrams[n - a], k))
        rhs += f1 * series.delta(g)
    return lhs, rhs


SUITES: dict[str, Callable[..., Check]] = {
    "counts": counts,
    "contacts": contacts,
    "order": order,
    "symmetry": symmetry,
    "parametrization": parametrization,
    "series": series_brute,
    "identities": identities_suite,
    "bijections": bijections,
    "pointed": pointed,
}
