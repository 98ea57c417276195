"""Truncated orbit graphs, exact balls and spheres, and order structures.

The graph is an honest truncation: an edge is recorded only when its image
was actually computed and lies inside the truncation.  Everything downstream
either avoids the undefined frontier or raises TruncationExceeded.
"""

from __future__ import annotations

import csv
import functools
import json
import random
from collections import deque
from dataclasses import dataclass, field

from .errors import StateSpaceError, TruncationExceeded
from .families import IDENTITY, ActionFamily, GeneratorSystem, make_family


class _Anchor:
    """Synthetic global fixed point added when circularising a linear order."""

    __slots__ = ()

    def __repr__(self):
        return "*"


ANCHOR = _Anchor()


@dataclass
class OrbitGraph:
    family: ActionFamily
    gens: GeneratorSystem
    states: set
    edges: dict                 # label -> {state: image}
    depth: dict                 # state -> BFS depth from its basepoint
    basepoints: list
    radius: int
    frontier: frozenset         # states with at least one undefined edge

    @property
    def state_count(self):
        return len(self.states)

    def image(self, label, state):
        if label == self.gens.identity:
            return state
        return self.edges[label].get(state)

    def is_frontier(self, state):
        return state in self.frontier


def build_orbit_graph(family: ActionFamily, radius: int, seeds=None) -> OrbitGraph:
    """BFS closure of the seeds to the given depth.

    Partial edges at the frontier stay undefined; each seed not reached from
    an earlier seed opens a new orbit and becomes its basepoint.
    """
    if radius < 0:
        raise StateSpaceError("radius must be >= 0")
    gens = family.generators()
    seeds = [family.validate_state(s) for s in (seeds or family.seeds())]

    states: set = set()
    depth: dict = {}
    basepoints = []
    order_of_discovery = []

    for seed in seeds:
        if seed in states:
            continue
        basepoints.append(seed)
        states.add(seed)
        depth[seed] = 0
        queue = deque([seed])
        while queue:
            x = queue.popleft()
            d = depth[x]
            if d == radius:
                continue
            for lab in gens.labels:
                y = family.apply(lab, x)
                if y not in states:
                    states.add(y)
                    depth[y] = d + 1
                    queue.append(y)
        order_of_discovery.append(seed)

    edges = {lab: {} for lab in gens.labels}
    frontier = set()
    for x in states:
        for lab in gens.labels:
            try:
                y = family.apply(lab, x)
            except KeyError:
                frontier.add(x)
                continue
            if y in states:
                edges[lab][x] = y
            else:
                frontier.add(x)
    return OrbitGraph(family, gens, states, edges, depth, basepoints, radius,
                      frozenset(frontier))


def _bfs_levels(graph: OrbitGraph, x, n_max):
    """Level sets of the generator BFS from x, honest about the frontier.

    Returns (levels, exact_horizon): levels[k] is the sphere at distance k,
    and counts are exact for every n <= exact_horizon.
    """
    x = graph.family.validate_state(x)
    if x not in graph.states:
        raise StateSpaceError(f"state {graph.family.state_str(x)} not in truncation")
    dist = {x: 0}
    levels = [[x]]
    exact = n_max
    d = 0
    while d < n_max and levels[d]:
        nxt = []
        for u in levels[d]:
            if u in graph.frontier:
                exact = min(exact, d)
                continue
            for lab in graph.gens.labels:
                v = graph.edges[lab].get(u)
                if v is not None and v not in dist:
                    dist[v] = d + 1
                    nxt.append(v)
        levels.append(nxt)
        d += 1
    return levels, exact


def ball(graph: OrbitGraph, x, n: int) -> set:
    """The exact set of states within n generator steps of x."""
    levels, exact = _bfs_levels(graph, x, n)
    if n > exact:
        raise TruncationExceeded(
            f"ball of radius {n} touches the undefined frontier (exact up to {exact})",
            exact_up_to=exact,
        )
    out = set()
    for lvl in levels[: n + 1]:
        out.update(lvl)
    return out


def sphere(graph: OrbitGraph, x, n: int) -> set:
    levels, exact = _bfs_levels(graph, x, n)
    if n > exact:
        raise TruncationExceeded(
            f"sphere of radius {n} touches the undefined frontier (exact up to {exact})",
            exact_up_to=exact,
        )
    return set(levels[n]) if n < len(levels) else set()


def ball_profile(graph: OrbitGraph, x=None, horizon=None) -> list[int]:
    """Cumulative ball sizes [|B(0)|, ..., |B(N)|] from x, exact by construction."""
    x = graph.basepoints[0] if x is None else x
    horizon = graph.radius if horizon is None else horizon
    levels, exact = _bfs_levels(graph, x, horizon)
    if horizon > exact:
        raise TruncationExceeded(
            f"profile horizon {horizon} exceeds certified range {exact}",
            exact_up_to=exact,
        )
    counts = []
    total = 0
    for n in range(horizon + 1):
        total += len(levels[n]) if n < len(levels) else 0
        counts.append(total)
    return counts


@dataclass
class OrderStructure:
    """A linear or circular order on states, with exact comparisons.

    linear: ``cmp(a, b)`` in {-1, 0, 1}.  circular: ``c(x, y, z)`` in
    {-1, 0, 1}, zero exactly on repeated arguments.  ``sorted_states``
    returns states in the order used to lay intervals along the circle.
    """

    kind: str
    cmp: object = None
    circ: object = None
    anchor: object = None
    _sort_key: object = None

    def c(self, x, y, z):
        if self.kind != "circular":
            raise StateSpaceError("ternary orientation needs a circular order")
        return self.circ(x, y, z)

    def compare(self, a, b):
        if self.cmp is None:
            raise StateSpaceError("no linear comparison available")
        return self.cmp(a, b)

    def sorted_states(self, states):
        """States minus the anchor, ascending in the induced linear order."""
        pool = [s for s in states if s is not self.anchor and s != self.anchor]
        if self._sort_key is not None:
            return sorted(pool, key=self._sort_key)
        return sorted(pool, key=functools.cmp_to_key(self.cmp))


def linear_order_for(family: ActionFamily) -> OrderStructure:
    return OrderStructure(kind="linear", cmp=family.linear_cmp)


def circular_order_for(family: ActionFamily, anchor) -> OrderStructure:
    """Circular order induced by exact circle positions, cut at the anchor."""
    anchor = family.validate_state(anchor)
    p0 = family.position(anchor)

    def circ(x, y, z):
        if x == y or y == z or x == z:
            return 0
        px, py, pz = family.position(x), family.position(y), family.position(z)
        a = (py - px) % 1
        b = (pz - px) % 1
        return 1 if a < b else -1

    def key(s):
        return (family.position(s) - p0) % 1

    def cmp(a, b):
        ka, kb = key(a), key(b)
        return (ka > kb) - (ka < kb)

    return OrderStructure(kind="circular", cmp=cmp, circ=circ, anchor=anchor,
                          _sort_key=key)


def linear_to_circular(order: OrderStructure, anchor=ANCHOR) -> OrderStructure:
    """Add a fixed point to a linear order and extend it to a circular one."""
    if order.kind != "linear":
        raise StateSpaceError("linear_to_circular needs a linear order")
    base_cmp = order.cmp

    def is_anchor(v):
        return v is anchor

    def cmp(a, b):
        if is_anchor(a) or is_anchor(b):
            raise StateSpaceError("anchor has no place in the cut linear order")
        return base_cmp(a, b)

    def circ(x, y, z):
        if x == y or y == z or x == z:
            return 0
        if is_anchor(z):
            return 1 if base_cmp(x, y) < 0 else -1
        if is_anchor(y):
            return 1 if base_cmp(z, x) < 0 else -1
        if is_anchor(x):
            return 1 if base_cmp(y, z) < 0 else -1
        a_lt_b = base_cmp(x, y) < 0
        b_lt_c = base_cmp(y, z) < 0
        c_lt_a = base_cmp(z, x) < 0
        # +1 iff (x, y, z) is a cyclic rotation of the sorted triple
        return 1 if (a_lt_b + b_lt_c + c_lt_a) == 2 else -1

    return OrderStructure(kind="circular", cmp=cmp, circ=circ, anchor=anchor)


def order_for(family: ActionFamily, anchor=None) -> OrderStructure | None:
    if family.order_kind == "linear":
        return linear_order_for(family)
    if family.order_kind == "circular":
        seed = family.seeds()[0] if anchor is None else anchor
        return circular_order_for(family, seed)
    return None


@dataclass
class OrderReport:
    kind: str
    checked: int
    violations: int
    skipped: int
    examples: list = field(default_factory=list)

    @property
    def preserved(self):
        return self.violations == 0


def order_preservation_report(graph: OrbitGraph, order: OrderStructure,
                              samples: int = 2000, seed: int = 0) -> OrderReport:
    """Count order violations over random (generator, tuple) samples.

    Linear orders are checked on pairs, circular orders on triples; samples
    whose images fall outside the truncation are skipped, not guessed.
    """
    rng = random.Random(seed)
    pool = sorted(graph.states, key=graph.family.state_str)
    labels = list(graph.gens.labels)
    width = 2 if order.kind == "linear" else 3
    if len(pool) < width or not labels:
        return OrderReport(order.kind, 0, 0, 0)
    checked = violations = skipped = 0
    examples = []
    for _ in range(samples):
        tup = rng.sample(pool, width)
        lab = rng.choice(labels)
        images = [graph.edges[lab].get(s) for s in tup]
        if any(v is None for v in images):
            skipped += 1
            continue
        checked += 1
        if order.kind == "linear":
            before = order.compare(tup[0], tup[1])
            after = order.compare(images[0], images[1])
        else:
            before = order.c(*tup)
            after = order.c(*images)
        if before != after:
            violations += 1
            if len(examples) < 5:
                examples.append((lab, tuple(map(graph.family.state_str, tup))))
    return OrderReport(order.kind, checked, violations, skipped, examples)


def export_edges_csv(graph: OrbitGraph, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["state", "generator", "image"])
        fam = graph.family
        for lab in graph.gens.labels:
            for x in sorted(graph.edges[lab], key=fam.state_str):
                w.writerow([fam.state_str(x), lab, fam.state_str(graph.edges[lab][x])])


def load_action_spec(source) -> ActionFamily:
    """Build a family from an action-spec dict or a JSON file path."""
    if isinstance(source, (str, bytes)):
        with open(source) as fh:
            spec = json.load(fh)
    else:
        spec = dict(source)
    name = spec.get("family")
    if name == "table":
        return make_family("table", {"spec": spec})
    return make_family(name, spec.get("params", {}))
