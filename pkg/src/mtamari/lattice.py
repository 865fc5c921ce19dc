"""
The m-Tamari order on m-Dyck paths.

The order is tested through distance vectors (componentwise comparison); the
explicit cover DAG of :class:`HasseDiagram` provides the reachability oracle
that the distance-vector test is checked against.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional

from .errors import InvalidLeaf, NotALattice, NotMDyck, ResourceLimit, SizeMismatch
from .formulas import count_paths
from .paths import (PointedPath, StepPath, _matches, contact_abscissas,
                    contacts, distance_vector, initial_rise, is_m_dyck,
                    m_dyck_paths, parse_path)

DEFAULT_NODE_CAP = 100_000


def covers(p: StepPath) -> list[StepPath]:
    """Paths covering ``p``: one per down step immediately followed by an up step.

    The down step ``d`` is swapped with the excursion of the following up step.
    """
    s = p.steps
    match = _matches(p)
    out = []
    for i in range(len(s) - 1):
        if s[i] == "d" and s[i + 1] == "u":
            end = match[i + 1]
            out.append(parse_path(s[:i] + s[i + 1:end + 1] + "d" + s[end + 1:]))
    return out


def leq(p: StepPath, q: StepPath) -> bool:
    """``p <= q`` in the Tamari order, by componentwise distance vectors."""
    if p.size != q.size:
        raise SizeMismatch(f"sizes {p.size} and {q.size} differ")
    return all(a <= b for a, b in zip(distance_vector(p), distance_vector(q)))


def is_below(p: StepPath, q: StepPath) -> bool:
    """True when every vertex of ``p`` is at most as high as that of ``q``."""
    hp = hq = 0
    for i in range(p.length):
        hp += 1 if p[i] else -1
        hq += 1 if q[i] else -1
        if hp > hq:
            return False
    return True


@dataclass(frozen=True)
class HasseDiagram:
    m: int
    n: int
    nodes: tuple[StepPath, ...]
    cover_edges: tuple[tuple[int, ...], ...]
    index: dict = field(repr=False, compare=False)
    _dv: tuple = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(e) for e in self.cover_edges)

    def edges(self) -> Iterator[tuple[int, int]]:
        for a, ups in enumerate(self.cover_edges):
            for b in ups:
                yield a, b

    def distance(self, i: int) -> tuple[int, ...]:
        return self._dv[i]

    @cached_property
    def reach_up(self) -> list[int]:
        """Bitmask of nodes reachable from each node, itself included."""
        reach = [0] * len(self.nodes)
        for i in reversed(self.topological_order()):
            r = 1 << i
            for j in self.cover_edges[i]:
                r |= reach[j]
            reach[i] = r
        return reach

    @cached_property
    def reach_down(self) -> list[int]:
        down = [0] * len(self.nodes)
        for i, mask in enumerate(self.reach_up):
            for j in _bits(mask):
                down[j] |= 1 << i
        return down

    def leq(self, i: int, j: int, *, reachability: bool = False) -> bool:
        if reachability:
            return bool(self.reach_up[i] >> j & 1)
        return all(a <= b for a, b in zip(self._dv[i], self._dv[j]))

    def topological_order(self) -> list[int]:
        # each cover strictly increases the sum of the distance vector
        return sorted(range(len(self.nodes)), key=lambda i: (sum(self._dv[i]), i))

    @property
    def bottom(self) -> int:
        return self.index[parse_path(("u" * self.m + "d" * self.m) * self.n)]

    @property
    def top(self) -> int:
        return self.index[parse_path("u" * (self.m * self.n) + "d" * (self.m * self.n))]


def build_hasse(m: int, n: int, node_cap: int = DEFAULT_NODE_CAP) -> HasseDiagram:
    """Cover DAG over all m-Dyck paths of size ``m*n``, in canonical order."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    expected = count_paths(m, n)
    if expected > node_cap:
        raise ResourceLimit(f"{expected} nodes exceeds the cap of {node_cap}")
    nodes = tuple(m_dyck_paths(m, n))
    index = {p: i for i, p in enumerate(nodes)}
    edges = []
    for p in nodes:
        ups = []
        for q in covers(p):
            if q not in index:
                raise NotMDyck(f"cover {q} of {p} is not a {m}-Dyck path")
            ups.append(index[q])
        edges.append(tuple(sorted(ups)))
    dv = tuple(distance_vector(p) for p in nodes)
    return HasseDiagram(m, n, nodes, tuple(edges), index, dv)


def up_sets(h: HasseDiagram) -> list[int]:
    """Reachability oracle: the up-set of every node as a bitmask."""
    return h.reach_up


def down_sets(h: HasseDiagram) -> list[int]:
    return h.reach_down


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _extremum(common: int, cone: list[int], what: str, a: int, b: int) -> int:
    found = [g for g in _bits(common) if cone[g] & common == common]
    if len(found) != 1:
        raise NotALattice(f"{len(found)} candidate {what}s for nodes {a}, {b}")
    return found[0]


def meet(h: HasseDiagram, a: int, b: int) -> int:
    """Greatest lower bound, from intersected down-sets."""
    down = down_sets(h)
    return _extremum(down[a] & down[b], down, "meet", a, b)


def join(h: HasseDiagram, a: int, b: int) -> int:
    ups = up_sets(h)
    return _extremum(ups[a] & ups[b], ups, "join", a, b)


def componentwise_meet(h: HasseDiagram, a: int, b: int) -> Optional[int]:
    """Node whose distance vector is the componentwise min, if there is one.

    Exploratory only; nothing else in the package depends on it.
    """
    target = tuple(min(x, y) for x, y in zip(h.distance(a), h.distance(b)))
    for i, d in enumerate(h._dv):
        if d == target:
            return i
    return None


# -- intervals ----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class IntervalRecord:
    lower: int
    upper: int
    contacts_lower: int
    initial_rise_upper: int
    longest_chain: int


def longest_chains_from(h: HasseDiagram, lower: int) -> dict[int, int]:
    """Longest cover-chain length from ``lower`` to every node above it."""
    best = {lower: 0}
    for i in h.topological_order():
        if i in best:
            for j in h.cover_edges[i]:
                if best.get(j, -1) < best[i] + 1:
                    best[j] = best[i] + 1
    return best


def enumerate_intervals(h: HasseDiagram) -> Iterator[IntervalRecord]:
    """Every interval ``[lower, upper]`` exactly once, grouped by lower node."""
    rises = [initial_rise(p, h.m) for p in h.nodes]
    for i, p in enumerate(h.nodes):
        c = contacts(p)
        chains = longest_chains_from(h, i)
        for j in sorted(chains):
            yield IntervalRecord(i, j, c, rises[j], chains[j])


def interval_table(h: HasseDiagram) -> dict:
    """Aggregated interval statistics in the JSON statistics layout.

    ``joint`` rows are ``[contacts - 1, initial rise, longest chain, count]``.
    """
    joint: Counter = Counter()
    by_contacts: Counter = Counter()
    total = 0
    for r in enumerate_intervals(h):
        total += 1
        by_contacts[r.contacts_lower] += 1
        joint[(r.contacts_lower - 1, r.initial_rise_upper, r.longest_chain)] += 1
    return {
        "schema": "mtamari.intervals/1",
        "m": h.m,
        "n": h.n,
        "intervals": total,
        "by_contacts": [[i, by_contacts[i]] for i in sorted(by_contacts)],
        "joint": [[c, r, q, joint[(c, r, q)]] for (c, r, q) in sorted(joint)],
    }


def interval_polynomial(h: HasseDiagram) -> Counter:
    """Brute-force coefficient of ``t^n``: counts keyed by (contacts, rise, chain)."""
    return Counter((r.contacts_lower, r.initial_rise_upper, r.longest_chain)
                   for r in enumerate_intervals(h))


@dataclass(frozen=True, slots=True)
class PointedInterval:
    lower: PointedPath
    upper: PointedPath

    @property
    def active_contacts(self) -> int:
        cs = contact_abscissas(self.lower.path)
        if not self.lower.points:
            return len(cs)
        return sum(1 for a in cs if a >= self.lower.points[-1])

    def initial_rise(self, m: int) -> int:
        """Initial rise of the upper path cut at its first marked point.

        With no marked points this is the plain initial rise; a first marked
        point at the origin gives 0.
        """
        q = self.upper.path
        if not self.upper.points:
            return initial_rise(q, m)
        cut = self.upper.points[0]
        run = 0
        while run < cut and q[run]:
            run += 1
        return run // m


def _weak_chains(cands: list[int], k: int, floor: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    for pts in itertools.combinations_with_replacement(cands, k):
        if all(a >= b for a, b in zip(pts, floor)):
            yield pts


def enumerate_pointed_intervals(h: HasseDiagram, k: int) -> Iterator[PointedInterval]:
    """All k-pointed intervals over the paths of ``h``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    ups = up_sets(h)
    for i, p in enumerate(h.nodes):
        cp = contact_abscissas(p)
        for j in _bits(ups[i]):
            q = h.nodes[j]
            cq = contact_abscissas(q)
            for pts in _weak_chains(cp, k):
                for qts in _weak_chains(cq, k, pts):
                    yield PointedInterval(PointedPath(p, pts), PointedPath(q, qts))


def pointed_polynomial(h: HasseDiagram, k: int) -> Counter:
    """Counts of k-pointed intervals keyed by (active contacts, initial rise)."""
    return Counter((pi.active_contacts, pi.initial_rise(h.m))
                   for pi in enumerate_pointed_intervals(h, k))


# -- (m+1)-ary trees ------------------------------------------------------------
# A tree is ``()`` for a leaf, or a tuple of m+1 subtrees for an internal node.

def tree_view(p: StepPath, m: int):
    """Decode ``p`` as the prefix code of an (m+1)-ary tree.

    Internal nodes read as a block of ``m`` up steps, leaves as one down step;
    the final leaf is not encoded.
    """
    if not is_m_dyck(p, m):
        raise NotMDyck(f"{p} is not a {m}-Dyck path")
    code = p.steps.replace("u" * m, "N") + "d"
    pos = 0

    def rec():
        nonlocal pos
        c = code[pos]
        pos += 1
        if c == "d":
            return ()
        return tuple(rec() for _ in range(m + 1))

    t = rec()
    assert pos == len(code)
    return t


def tree_to_path(t, m: int) -> StepPath:
    out = []

    def rec(node):
        if node == ():
            out.append("d")
        else:
            out.append("u" * m)
            for c in node:
                rec(c)

    rec(t)
    return parse_path("".join(out)[:-1])


def _preorder(t, addr=()):
    yield addr, t
    for i, c in enumerate(t):
        yield from _preorder(c, addr + (i,))


def _replace(t, addr, new):
    if not addr:
        return new
    i = addr[0]
    return t[:i] + (_replace(t[i], addr[1:], new),) + t[i + 1:]


def rotation_sites(t) -> list[int]:
    """Prefix-order indices of leaves that are followed by an internal node."""
    seq = list(_preorder(t))
    sites, leaf = [], 0
    for (_, a), (_, b) in zip(seq, seq[1:]):
        if a == ():
            if b != ():
                sites.append(leaf)
            leaf += 1
    return sites


def tree_rotate(t, leaf: int):
    """Rotate at the ``leaf``-th leaf (prefix order, 0-based).

    The internal node ``v`` that follows the leaf moves into the leaf's place
    keeping its first ``m`` subtrees, the leaf becomes its rightmost child, and
    the former rightmost subtree of ``v`` takes ``v``'s old place.
    """
    seq = list(_preorder(t))
    leaves = [k for k, (_, node) in enumerate(seq) if node == ()]
    if not 0 <= leaf < len(leaves):
        raise InvalidLeaf(f"no leaf with index {leaf}")
    k = leaves[leaf]
    if k + 1 >= len(seq) or seq[k + 1][1] == ():
        raise InvalidLeaf(f"leaf {leaf} is not followed by an internal node")
    addr_leaf = seq[k][0]
    addr_v, v = seq[k + 1]
    moved = v[:-1] + ((),)
    t = _replace(t, addr_v, v[-1])
    return _replace(t, addr_leaf, moved)


def m_ary_trees(m: int, n: int):
    """All (m+1)-ary trees with ``n`` internal nodes, built structurally."""
    if n == 0:
        return [()]
    out = []
    for sizes in _compositions(n - 1, m + 1):
        for kids in itertools.product(*(m_ary_trees(m, s) for s in sizes)):
            out.append(tuple(kids))
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# -- export -----------------------------------------------------------------------

def export_dot(h: HasseDiagram) -> str:
    """Graphviz digraph of the cover relation, nodes labelled by path strings."""
    lines = [f"digraph tamari_m{h.m}_n{h.n} {{", "  rankdir=BT;"]
    for i, p in enumerate(h.nodes):
        lines.append(f'  n{i} [label="{p.steps}"];')
    for a, b in h.edges():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_json(h: HasseDiagram) -> dict:
    return {
        "schema": "mtamari.hasse/1",
        "m": h.m,
        "n": h.n,
        "nodes": [p.steps for p in h.nodes],
        "edges": [[a, b] for a, b in h.edges()],
    }
