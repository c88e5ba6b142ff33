"""Structural diagnostics: fracture graphs, splits, fingerprints, witnesses.

Orbits of label-deleted subgroups coincide with connected components of the
label-deleted subgraph, so fracture graphs and splits are computed purely
graph-theoretically; group orders only enter the fingerprint and witness
checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cgroup import Sggi
from .errors import NoFractureGraph
from .perm_core import PermGroup, Permutation
from .prg import LabeledGraph
from . import constructions


# ---------------------------------------------------------------------------
# fracture graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FractureReport:
    """One chosen crossing edge per label, or the labels that admit none."""

    exists: bool
    edges: dict = field(default_factory=dict)       # label -> (a, b)
    failing_labels: tuple = ()

    def __bool__(self) -> bool:
        return self.exists


def fracture_graph(g: LabeledGraph) -> FractureReport:
    """For each label i, a least i-edge joining distinct orbits of the
    subgroup generated by the other labels; fails when some label-deleted
    subgroup has no more orbits than the full group.
    """
    base_count = len(g.components())
    chosen = {}
    failing = []
    for label in g.labels:
        rest = g.restrict_labels(set(g.labels) - {label})
        comps = rest.components()
        if len(comps) <= base_count:
            failing.append(label)
            continue
        comp_of = {}
        for idx, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = idx
        crossing = [(a, b) for lab, a, b in g.edges_with_label(label)
                    if comp_of[a] != comp_of[b]]
        chosen[label] = min(crossing)
    if failing:
        return FractureReport(False, {}, tuple(failing))
    return FractureReport(True, chosen, ())


# ---------------------------------------------------------------------------
# splits
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SplitReport:
    """An i-split: the unique i-edge crossing the two-part orbit partition
    produced by deleting the label-i generator.

    ``orientation`` records which assignment of low/high labels to the two
    sides certifies perfection: "low-high" puts the labels below i on
    side_a, "high-low" the mirror image, None when neither works.
    """

    label: int
    crossing_edge: tuple
    side_a: tuple
    side_b: tuple
    j_a: tuple
    j_b: tuple
    perfect: bool
    orientation: str | None

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "crossing_edge": list(self.crossing_edge),
            "side_a": list(self.side_a),
            "side_b": list(self.side_b),
            "j_a": list(self.j_a),
            "j_b": list(self.j_b),
            "perfect": self.perfect,
            "orientation": self.orientation,
        }


def _acting_labels(g: LabeledGraph, part: set, skip: int) -> tuple:
    return tuple(sorted({lab for lab, x, y in g.edges
                         if lab != skip and (x in part or y in part)}))


def find_splits(g: LabeledGraph) -> list:
    """All i-splits of a graph with a fracture graph.

    For each i-split the remaining orbits of the label-deleted subgroup are
    assigned to the side their labels allow; both orientations are tried
    and the certifying one recorded.
    """
    fracture = fracture_graph(g)
    if not fracture.exists:
        raise NoFractureGraph(
            f"labels {list(fracture.failing_labels)} delete no orbit",
            failing_labels=fracture.failing_labels)
    base = g.components()
    splits = []
    for label in g.labels:
        rest = g.restrict_labels(set(g.labels) - {label})
        comps = rest.components()
        if len(comps) != len(base) + 1:
            continue
        comp_of = {v: idx for idx, comp in enumerate(comps) for v in comp}
        crossing = [(a, b) for lab, a, b in g.edges_with_label(label)
                    if comp_of[a] != comp_of[b]]
        if len(crossing) != 1:
            continue
        a, b = crossing[0]
        part_a = set(comps[comp_of[a]])
        part_b = set(comps[comp_of[b]])
        others = [set(c) for idx, c in enumerate(comps)
                  if idx not in (comp_of[a], comp_of[b])]
        acting = {frozenset(c): _acting_labels(g, c, label)
                  for c in [part_a, part_b] + others}

        def orient(low_core: set, high_core: set):
            low, high = set(low_core), set(high_core)
            for comp in others:
                labs = acting[frozenset(comp)]
                if all(l < label for l in labs):
                    low |= comp
                elif all(l > label for l in labs):
                    high |= comp
                else:
                    return None
            j_low = _acting_labels(g, low, label)
            j_high = _acting_labels(g, high, label)
            if all(l < label for l in j_low) and all(l > label for l in j_high):
                return low, high, j_low, j_high
            return None

        low_first = orient(part_a, part_b)
        high_first = None if low_first else orient(part_b, part_a)
        if low_first:
            side_a, side_b, j_a, j_b = low_first
            perfect, orientation = True, "low-high"
        elif high_first:
            side_b, side_a, j_b, j_a = high_first
            perfect, orientation = True, "high-low"
        else:
            side_a, side_b = set(part_a), set(part_b)
            for comp in others:
                labs = acting[frozenset(comp)]
                if labs and min(labs) > label:
                    side_b |= comp
                else:
                    side_a |= comp
            j_a = _acting_labels(g, side_a, label)
            j_b = _acting_labels(g, side_b, label)
            perfect, orientation = False, None
        splits.append(SplitReport(
            label=label, crossing_edge=(a, b),
            side_a=tuple(sorted(side_a)), side_b=tuple(sorted(side_b)),
            j_a=j_a, j_b=j_b, perfect=perfect, orientation=orientation))
    return splits


def is_perfect_split(g: LabeledGraph, label: int, edge: tuple) -> bool:
    """Whether the given edge is an i-split of g and perfect."""
    a, b = min(edge), max(edge)
    for split in find_splits(g):
        if split.label == label and split.crossing_edge in ((a, b), (b, a)):
            return split.perfect
    return False


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NamedMatch:
    """An order-plus-structure match, not an isomorphism certificate."""

    name: str          # S_n | SaxSb | C2wrSr | SrwrC2 | StxH
    params: dict

    def to_json(self) -> dict:
        return {"name": self.name, "params": dict(self.params)}


@dataclass(frozen=True)
class Fingerprint:
    orbit_sizes: tuple
    transitive: bool
    primitive: bool | None
    group_order: int
    induced_orders: tuple
    factorization_check: bool
    named_match: NamedMatch | None

    def to_json(self) -> dict:
        return {
            "orbit_sizes": list(self.orbit_sizes),
            "transitive": self.transitive,
            "primitive": self.primitive,
            "group_order": self.group_order,
            "induced_orders": list(self.induced_orders),
            "factorization_check": self.factorization_check,
            "named_match": self.named_match.to_json() if self.named_match else None,
        }


def _match_name(group: PermGroup, orbit_sizes, induced_orders,
                factorization_ok) -> NamedMatch | None:
    n = group.degree
    order = group.order
    if group.is_transitive:
        if order == math.factorial(n):
            return NamedMatch("S_n", {"n": n})
        if n % 2 == 0:
            r = n // 2
            systems = group.minimal_block_systems()
            if order == 2 ** r * math.factorial(r) and any(
                    s.block_size == 2 and len(s) == r for s in systems):
                return NamedMatch("C2wrSr", {"r": r})
            if order == 2 * math.factorial(r) ** 2 and any(
                    s.block_size == r and len(s) == 2 for s in systems):
                return NamedMatch("SrwrC2", {"r": r})
        return None
    if len(orbit_sizes) == 2 and factorization_ok:
        a, b = orbit_sizes
        if order == math.factorial(a) * math.factorial(b):
            return NamedMatch("SaxSb", {"a": a, "b": b})
    if factorization_ok:
        sym_sizes = [size for size, ind in zip(orbit_sizes, induced_orders)
                     if ind == math.factorial(size)]
        if sym_sizes:
            t = max(sym_sizes)
            return NamedMatch("StxH", {"t": t, "h_order": order // math.factorial(t)})
    return None


def fingerprint(g: LabeledGraph) -> Fingerprint:
    """Orbit sizes, transitivity, per-orbit primitivity, order equations.

    A named match asserts only that the defining order equation and the
    block/orbit structure hold, never full isomorphism.
    """
    sggi = Sggi.from_graph(g)
    group = sggi.group()
    orbit_sizes = tuple(len(o) for o in group.orbits())
    transitive = group.is_transitive
    primitive = group.is_primitive() if transitive and g.n >= 1 else None
    induced = tuple(group.induced_on(o).order for o in group.orbits())
    factorization_ok = group.order == math.prod(induced)
    match = _match_name(group, orbit_sizes, induced, factorization_ok)
    return Fingerprint(
        orbit_sizes=orbit_sizes,
        transitive=transitive,
        primitive=primitive,
        group_order=group.order,
        induced_orders=induced,
        factorization_check=factorization_ok,
        named_match=match,
    )


# ---------------------------------------------------------------------------
# the refutation witness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessReport:
    """Membership outcome for the refutation witness of the two-row graph.

    ``sigma`` is the product of the vertical (h+1)-edge transpositions,
    i.e. the (h+1) generator with its top-row transposition (a,b) removed.
    It must lie in the sections kept on 0..h+1 and on 1..h+2 but escape the
    expected meet section kept on 1..h+1.
    """

    r: int
    h: int
    sigma: Permutation
    a: int
    b: int
    in_low: bool          # sigma in <rho_0 .. rho_{h+1}>
    in_high: bool         # sigma in <rho_1 .. rho_{h+2}>
    in_meet: bool         # sigma in <rho_1 .. rho_{h+1}>
    order_low: int
    order_high: int
    order_meet: int

    @property
    def ok(self) -> bool:
        return self.in_low and self.in_high and not self.in_meet

    def to_json(self) -> dict:
        return {
            "r": self.r, "h": self.h,
            "sigma": self.sigma.cycle_string(),
            "internal_pair": [self.a, self.b],
            "in_low": self.in_low, "in_high": self.in_high, "in_meet": self.in_meet,
            "order_low": self.order_low, "order_high": self.order_high,
            "order_meet": self.order_meet,
            "ok": self.ok,
        }


def graph_x_witness(r: int, h: int) -> Permutation:
    """The witness permutation: the r-h-2 vertical transpositions."""
    pairs = [(2 * h + 3 + j, r + h + 1 + j) for j in range(1, r - h - 1)]
    return Permutation.from_cycles(2 * r - 1, pairs)


def verify_graph_x_witness(r: int, h: int) -> WitnessReport:
    g = constructions.family_graph_x(r, h)
    sggi = Sggi.from_graph(g)
    a, b = 2 * h + 2, 2 * h + 3
    sigma = graph_x_witness(r, h)
    low = sggi.section(range(0, h + 2))
    high = sggi.section(range(1, h + 3))
    meet = sggi.section(range(1, h + 2))
    return WitnessReport(
        r=r, h=h, sigma=sigma, a=a, b=b,
        in_low=low.contains(sigma),
        in_high=high.contains(sigma),
        in_meet=meet.contains(sigma),
        order_low=low.order,
        order_high=high.order,
        order_meet=meet.order,
    )
