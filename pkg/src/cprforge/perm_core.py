"""Permutation arithmetic and permutation-group algorithms.

Points are 1-based in the public interface, matching the vertex numbering
of permutation representation graphs; internally images live in 0-based
tuples.  Composition order is fixed package-wide: ``compose(p, q)`` applies
``p`` first, then ``q``.

Groups carry a deterministic stabilizer chain (Schreier-Sims with the base
fixed to the ascending point order 1..n, skipping points the relevant
stabilizer does not move).  The same input generator list always produces
the same chain, the same element enumeration order and therefore the same
witnesses downstream.  A ``PermGroup`` is immutable once constructed.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .errors import (
    DegreeMismatch,
    DomainNotInvariant,
    IntersectionTooLarge,
    NotTransitive,
)

DEFAULT_INTERSECTION_CAP = 5_000_000


# ---------------------------------------------------------------------------
# raw tuple helpers (0-based images), the hot path of everything below
# ---------------------------------------------------------------------------

def _mul(p: tuple, q: tuple) -> tuple:
    """Apply p, then q."""
    return tuple(q[x] for x in p)


def _inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _is_id(p: tuple) -> bool:
    return all(i == x for i, x in enumerate(p))


def _min_moved(p: tuple):
    """Smallest 0-based moved point, or None for the identity."""
    for i, x in enumerate(p):
        if i != x:
            return i
    return None


class Permutation:
    """A bijection of {1..n} stored as an image sequence."""

    __slots__ = ("_img",)

    def __init__(self, images: Sequence[int]):
        """Build from 1-based images: position p holds the image of point p."""
        img = tuple(x - 1 for x in images)
        n = len(img)
        if sorted(img) != list(range(n)):
            raise ValueError(f"not a permutation of 1..{n}: {list(images)!r}")
        self._img = img

    # -- constructors -------------------------------------------------------

    @classmethod
    def _from_tuple(cls, img: tuple) -> "Permutation":
        p = object.__new__(cls)
        p._img = img
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._from_tuple(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(degree))
        seen = set()
        for cycle in cycles:
            for pt in cycle:
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated across cycles")
                seen.add(pt)
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                img[a - 1] = b - 1
        return cls._from_tuple(tuple(img))

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse cycle notation like "(1,2)(3,4)"; "()" or "id" is the identity."""
        s = "".join(text.split())
        if s in ("()", "id", ""):
            return cls.identity(degree)
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = []
        for chunk in s[1:-1].split(")("):
            if not chunk:
                continue
            try:
                cycle = [int(tok) for tok in chunk.split(",")]
            except ValueError as exc:
                raise ValueError(f"bad cycle notation: {text!r}") from exc
            if len(cycle) < 2:
                raise ValueError(f"bad cycle notation: {text!r}")
            cycles.append(cycle)
        return cls.from_cycles(degree, cycles)

    # -- basics -------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """1-based image sequence."""
        return tuple(x + 1 for x in self._img)

    def apply(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def is_identity(self) -> bool:
        return _is_id(self._img)

    def inverse(self) -> "Permutation":
        return Permutation._from_tuple(_inv(self._img))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """self * other applies self first, then other."""
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def cycles(self) -> list:
        """Nontrivial cycles, each starting at its least point, ordered by it."""
        seen = set()
        out = []
        for i in range(len(self._img)):
            if i in seen or self._img[i] == i:
                continue
            cycle = [i + 1]
            j = self._img[i]
            seen.add(i)
            while j != i:
                seen.add(j)
                cycle.append(j + 1)
                j = self._img[j]
            out.append(tuple(cycle))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation[{self.cycle_string()} deg {self.degree}]"

    def support(self) -> tuple:
        """The moved points, ascending, 1-based."""
        return tuple(i + 1 for i, x in enumerate(self._img) if i != x)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p, then q.  Degrees must match."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degree {p.degree} vs {q.degree}")
    return Permutation._from_tuple(_mul(p._img, q._img))


def element_order(p: Permutation) -> int:
    """Least m >= 1 with p^m = identity (lcm of cycle lengths)."""
    order = 1
    for cycle in p.cycles():
        order = math.lcm(order, len(cycle))
    return order


def parity(p: Permutation) -> str:
    """'even' or 'odd': number of transpositions mod 2."""
    flips = sum(len(c) - 1 for c in p.cycles())
    return "odd" if flips % 2 else "even"


# ---------------------------------------------------------------------------
# stabilizer chain
# ---------------------------------------------------------------------------

class _Layer:
    """Transversal of the orbit of one base point (0-based)."""

    __slots__ = ("base", "transversal", "inv_transversal", "stamp")

    def __init__(self, base: int):
        self.base = base
        self.transversal = {}       # point -> representative tuple (base -> point)
        self.inv_transversal = {}   # point -> inverse of that representative
        self.stamp = (-1, -1)       # (gen count, orbit size) at last verification


class _Chain:
    """Deterministic Schreier-Sims chain with base fixed to points 1..n.

    Generators are stored at the level equal to their least moved point, so
    the level-p generating set (everything stored at levels >= p) is exactly
    the stored strong generators fixing 1..p-1 pointwise.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.store = {}    # level point (0-based) -> list of gen tuples
        self.layers = {}   # level point (0-based) -> _Layer

    # -- queries ------------------------------------------------------------

    def order(self) -> int:
        n = 1
        for layer in self.layers.values():
            n *= len(layer.transversal)
        return n

    def sift(self, g: tuple):
        """Divide g through the chain; return (residue, stuck_point) or (None, None)."""
        for p in range(self.degree):
            x = g[p]
            if x == p:
                continue
            layer = self.layers.get(p)
            if layer is None:
                return g, p
            u_inv = layer.inv_transversal.get(x)
            if u_inv is None:
                return g, p
            g = _mul(g, u_inv)
        return None, None

    def contains(self, g: tuple) -> bool:
        residue, _ = self.sift(g)
        return residue is None

    # -- construction -------------------------------------------------------

    def level_gens(self, p: int) -> list:
        out = []
        for q in sorted(self.store):
            if q >= p:
                out.extend(self.store[q])
        return out

    def insert(self, g: tuple) -> bool:
        """Sift g in; if new, store the residue and re-close.  True if the group grew."""
        residue, stuck = self.sift(g)
        if residue is None:
            return False
        self.store.setdefault(stuck, []).append(residue)
        if stuck not in self.layers:
            self.layers[stuck] = _Layer(stuck)
        self._close()
        return True

    def _rebuild_transversal(self, p: int) -> None:
        layer = self.layers[p]
        gens = self.level_gens(p)
        identity = tuple(range(self.degree))
        transversal = {p: identity}
        inv_transversal = {p: identity}
        queue = [p]
        head = 0
        while head < len(queue):
            pt = queue[head]
            head += 1
            rep = transversal[pt]
            for s in gens:
                y = s[pt]
                if y not in transversal:
                    new_rep = _mul(rep, s)
                    transversal[y] = new_rep
                    inv_transversal[y] = _inv(new_rep)
                    queue.append(y)
        layer.transversal = transversal
        layer.inv_transversal = inv_transversal

    def _close(self) -> None:
        """Restore the strong-generator property chain-wide.

        Walks stale levels deepest-first (a level is stale when its
        generating-set size or orbit size moved since its last verified
        stamp) until a full scan finds nothing stale.
        """
        while True:
            stale = None
            for p in sorted(self.layers, reverse=True):
                layer = self.layers[p]
                gens = self.level_gens(p)
                self._rebuild_transversal(p)
                if layer.stamp == (len(gens), len(layer.transversal)):
                    continue
                stale = p
                break
            if stale is None:
                return
            self._verify_level(stale)

    def _verify_level(self, p: int) -> None:
        """Sift every Schreier generator of level p; store residues deeper."""
        layer = self.layers[p]
        while True:
            self._rebuild_transversal(p)
            gens = self.level_gens(p)
            stamp = (len(gens), len(layer.transversal))
            if layer.stamp == stamp:
                return
            grew = False
            points = list(layer.transversal)
            for pt in points:
                rep = layer.transversal[pt]
                for s in gens:
                    y = s[pt]
                    schreier = _mul(_mul(rep, s), layer.inv_transversal[y])
                    if _is_id(schreier):
                        continue
                    residue, stuck = self.sift(schreier)
                    if residue is None:
                        continue
                    # residues of level-p Schreier generators fix 1..p
                    self.store.setdefault(stuck, []).append(residue)
                    if stuck not in self.layers:
                        self.layers[stuck] = _Layer(stuck)
                    self._verify_level(stuck)
                    grew = True
                    break
                if grew:
                    break
            if not grew:
                layer.stamp = stamp
                return

    def element_tuples(self) -> Iterator[tuple]:
        """All elements, depth-first over layers in ascending base order.

        Within a layer the orbit points are visited ascending, so the
        identity comes first and the whole order is reproducible.
        """
        levels = sorted(self.layers)
        reps = [
            [self.layers[p].transversal[pt] for pt in sorted(self.layers[p].transversal)]
            for p in levels
        ]
        identity = tuple(range(self.degree))
        if not levels:
            yield identity
            return

        def rec(k: int, acc: tuple) -> Iterator[tuple]:
            if k == len(levels):
                yield acc
                return
            for u in reps[k]:
                yield from rec(k + 1, _mul(u, acc))

        yield from rec(0, identity)


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------

class BlockSystem:
    """A G-invariant partition of the acted-on point set into equal cells."""

    def __init__(self, blocks: Iterable[Iterable[int]]):
        cells = tuple(tuple(sorted(b)) for b in blocks)
        self.blocks = tuple(sorted(cells, key=lambda c: c[0]))
        self.block_map = {}
        for idx, cell in enumerate(self.blocks, start=1):
            for pt in cell:
                self.block_map[pt] = idx

    @property
    def block_size(self) -> int:
        return len(self.blocks[0]) if self.blocks else 0

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, BlockSystem) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"BlockSystem{self.blocks!r}"


class PermGroup:
    """A permutation group with a deterministic stabilizer chain.

    Immutable after construction; safe for concurrent reads.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generating set")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}")
        self.degree = degree
        self.generators = gens
        self._chain = _Chain(degree)
        for g in gens:
            self._chain.insert(g._img)
        self._order = self._chain.order()
        self._orbits = self._compute_orbits()
        self._orbit_id = self._compute_orbit_ids()
        self._sym_product = self._order == math.prod(
            math.factorial(len(o)) for o in self._orbits)

    @classmethod
    def _from_chain(cls, chain: _Chain, generators: tuple) -> "PermGroup":
        group = object.__new__(cls)
        group.degree = chain.degree
        group.generators = generators
        group._chain = chain
        group._order = chain.order()
        group._orbits = group._compute_orbits()
        group._orbit_id = group._compute_orbit_ids()
        group._sym_product = group._order == math.prod(
            math.factorial(len(o)) for o in group._orbits)
        return group

    # -- structure ----------------------------------------------------------

    def _compute_orbits(self) -> tuple:
        n = self.degree
        seen = [False] * n
        orbits = []
        gen_imgs = [g._img for g in self.generators]
        for start in range(n):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            head = 0
            while head < len(orbit):
                pt = orbit[head]
                head += 1
                for img in gen_imgs:
                    y = img[pt]
                    if not seen[y]:
                        seen[y] = True
                        orbit.append(y)
            orbits.append(tuple(sorted(x + 1 for x in orbit)))
        return tuple(orbits)

    def _compute_orbit_ids(self) -> tuple:
        ids = [0] * self.degree
        for idx, orbit in enumerate(self._orbits):
            for pt in orbit:
                ids[pt - 1] = idx
        return tuple(ids)

    @property
    def order(self) -> int:
        return self._order

    def orbits(self) -> tuple:
        """Orbit partition of {1..n}, singletons included, ordered by least element."""
        return self._orbits

    @property
    def is_transitive(self) -> bool:
        return len(self._orbits) <= 1

    @property
    def is_symmetric_orbit_product(self) -> bool:
        """True iff the group is the full direct product Sym(O_1) x ... x Sym(O_k).

        Exact: holds iff the order equals the product of orbit factorials.
        Membership then reduces to an orbit-preservation check.
        """
        return self._sym_product

    # -- membership ---------------------------------------------------------

    def contains_tuple(self, img: tuple) -> bool:
        """Membership on a raw 0-based image tuple (the hot path)."""
        if self._sym_product:
            ids = self._orbit_id
            return all(ids[x] == ids[i] for i, x in enumerate(img))
        return self._chain.contains(img)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} vs group degree {self.degree}")
        return self.contains_tuple(p._img)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    # -- enumeration --------------------------------------------------------

    def element_tuples(self) -> Iterator[tuple]:
        """All elements as raw tuples, in the chain's deterministic order."""
        return self._chain.element_tuples()

    def elements(self) -> Iterator[Permutation]:
        for t in self._chain.element_tuples():
            yield Permutation._from_tuple(t)

    # -- block systems ------------------------------------------------------

    def _finest_block_system_with(self, a: int, b: int) -> BlockSystem:
        """Finest invariant partition placing 0-based points a and b together."""
        n = self.degree
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> bool:
            rx, ry = find(x), find(y)
            if rx == ry:
                return False
            if ry < rx:
                rx, ry = ry, rx
            parent[ry] = rx
            return True

        gen_imgs = [g._img for g in self.generators]
        queue = [(a, b)]
        union(a, b)
        head = 0
        while head < len(queue):
            x, y = queue[head]
            head += 1
            for img in gen_imgs:
                sx, sy = img[x], img[y]
                if union(sx, sy):
                    queue.append((sx, sy))
        cells = {}
        for pt in range(n):
            cells.setdefault(find(pt), []).append(pt + 1)
        return BlockSystem(cells.values())

    def minimal_block_systems(self) -> list:
        """All minimal nontrivial block systems.

        For a transitive group this is the standard finest-block computation
        seeded by point pairs.  For an intransitive group the systems of the
        induced action on each orbit are returned (each partitions only that
        orbit's points).
        """
        if not self.is_transitive:
            out = []
            for orbit in self._orbits:
                if len(orbit) < 2:
                    continue
                induced = self.induced_on(orbit)
                back = dict(enumerate(orbit, start=1))
                for system in induced.minimal_block_systems():
                    out.append(BlockSystem(
                        [[back[pt] for pt in cell] for cell in system.blocks]))
            return out
        n = self.degree
        if n < 2:
            return []
        candidates = []
        for b in range(1, n):
            system = self._finest_block_system_with(0, b)
            if 1 < len(system) < n:
                candidates.append(system)
        unique = []
        for system in candidates:
            if system not in unique:
                unique.append(system)

        def refines(fine: BlockSystem, coarse: BlockSystem) -> bool:
            return all(
                set(cell) <= set(coarse.blocks[coarse.block_map[cell[0]] - 1])
                for cell in fine.blocks)

        minimal = [
            s for s in unique
            if not any(o is not s and refines(o, s) and o != s for o in unique)
        ]
        minimal.sort(key=lambda s: (s.block_size, s.blocks))
        return minimal

    def is_primitive(self) -> bool:
        if not self.is_transitive:
            raise NotTransitive(
                f"group with orbits {self._orbits} is not transitive")
        return not self.minimal_block_systems()

    # -- induced actions ----------------------------------------------------

    def induced_on(self, domain: Iterable[int]) -> "PermGroup":
        """Action on a union of orbits, relabeled onto 1..|domain|."""
        points = sorted(set(domain))
        if not points:
            raise DomainNotInvariant("empty domain")
        dom = set(points)
        for orbit in self._orbits:
            inside = dom.intersection(orbit)
            if inside and len(inside) != len(orbit):
                raise DomainNotInvariant(
                    f"domain splits orbit {orbit}")
        if not dom <= set(range(1, self.degree + 1)):
            raise DomainNotInvariant("domain outside 1..n")
        index = {pt: i for i, pt in enumerate(points)}
        gens = []
        for g in self.generators:
            img = [0] * len(points)
            for pt in points:
                img[index[pt]] = index[g.apply(pt)]
            gens.append(Permutation._from_tuple(tuple(img)))
        return PermGroup(gens, degree=len(points))

    def induced_on_blocks(self, system: BlockSystem) -> "PermGroup":
        """Action on the blocks of an invariant partition, as 1..#blocks."""
        gens = []
        for g in self.generators:
            img = [0] * len(system.blocks)
            for idx, cell in enumerate(system.blocks):
                target = system.block_map.get(g.apply(cell[0]))
                if target is None or any(
                        system.block_map.get(g.apply(pt)) != target for pt in cell):
                    raise DomainNotInvariant(
                        f"{g!r} does not permute the blocks {system.blocks!r}")
                img[idx] = target - 1
            gens.append(Permutation._from_tuple(tuple(img)))
        return PermGroup(gens, degree=len(system.blocks))

    def induced_action(self, domain) -> "PermGroup":
        """Dispatch on a point set or a BlockSystem."""
        if isinstance(domain, BlockSystem):
            return self.induced_on_blocks(domain)
        return self.induced_on(domain)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self._order})"


# ---------------------------------------------------------------------------
# module-level operations (the documented surface)
# ---------------------------------------------------------------------------

def group_from_generators(gens: Iterable[Permutation], degree: int | None = None) -> PermGroup:
    return PermGroup(gens, degree=degree)


def contains(group: PermGroup, p: Permutation) -> bool:
    return group.contains(p)


def orbits(group: PermGroup) -> tuple:
    return group.orbits()


def group_order(group: PermGroup) -> int:
    return group.order


def minimal_block_systems(group: PermGroup) -> list:
    return group.minimal_block_systems()


def is_primitive(group: PermGroup) -> bool:
    return group.is_primitive()


def induced_action(group: PermGroup, domain) -> PermGroup:
    return group.induced_action(domain)


def intersection(G: PermGroup, H: PermGroup,
                 cap: int = DEFAULT_INTERSECTION_CAP) -> PermGroup:
    """The subgroup {g : g in G and g in H}, with its own chain.

    Enumerates the smaller group through its chain and filters by
    membership in the other; refuses when even the smaller order
    exceeds ``cap``.
    """
    if G.degree != H.degree:
        raise DegreeMismatch(f"degree {G.degree} vs {H.degree}")
    small, big = (G, H) if G.order <= H.order else (H, G)
    if small.order > cap:
        raise IntersectionTooLarge(
            f"min(|G|,|H|) = {small.order} exceeds cap {cap}",
            left=G.order, right=H.order)
    chain = _Chain(G.degree)
    new_gens = []
    for img in small.element_tuples():
        if big.contains_tuple(img) and chain.insert(img):
            new_gens.append(Permutation._from_tuple(img))
    return PermGroup._from_chain(chain, tuple(new_gens))
