"""String groups generated by involutions and the intersection property.

An ``Sggi`` holds one involution per label of a contiguous window [lo, hi].
Subscripts follow the kept-label convention: ``section(I)`` is the subgroup
generated by the involutions whose labels lie in I.  (The literature often
indexes by *removed* labels; convert before calling.)

Two independent intersection-property checkers are provided:

* ``check_ip_recursive`` descends over contiguous label intervals, using the
  fact that an sggi is a string C-group iff both maximal intervals are and
  their intersection is the inner interval's group.
* ``check_ip_full`` checks every pair of label subsets with neither side
  containing the other.

Both return an ``IpCertificate``; a failing certificate carries the first
witness permutation in the deterministic enumeration order of the offending
intersection.
"""

from __future__ import annotations

import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .errors import DegreeMismatch, IdentityGenerator, IntersectionTooLarge, RankTooLarge
from .perm_core import (
    DEFAULT_INTERSECTION_CAP,
    PermGroup,
    Permutation,
    compose,
    element_order,
)
from .prg import LabeledGraph

DEFAULT_FULL_RANK_BOUND = 10


@dataclass(frozen=True)
class LabelWindow:
    """Contiguous inclusive range of generator labels."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty label window [{self.lo}, {self.hi}]")

    @property
    def rank(self) -> int:
        return self.hi - self.lo + 1

    def labels(self) -> range:
        return range(self.lo, self.hi + 1)

    def __contains__(self, label: int) -> bool:
        return self.lo <= label <= self.hi


@dataclass(frozen=True)
class StringPropertyVerdict:
    ok: bool
    failing_pair: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class IpCertificate:
    """Verdict of an intersection-property check.

    On failure, ``left`` and ``right`` are the offending kept-label subsets,
    ``expected_order`` the order of the subgroup generated by their meet,
    ``actual_order`` the order of the actual intersection and ``witness`` a
    permutation inside both sections but outside the expected subgroup.
    """

    status: str                       # "pass" | "fail"
    left: tuple | None = None
    right: tuple | None = None
    meet: tuple | None = None
    expected_order: int | None = None
    actual_order: int | None = None
    witness: Permutation | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        if self.ok:
            return {"status": "pass"}
        return {
            "status": "fail",
            "left": list(self.left),
            "right": list(self.right),
            "meet": list(self.meet),
            "expected_order": self.expected_order,
            "actual_order": self.actual_order,
            "witness": self.witness.cycle_string(),
        }


@dataclass(frozen=True)
class CprVerdict:
    """Combined string-property plus intersection-property outcome."""

    string_property: StringPropertyVerdict
    certificate: IpCertificate | None

    @property
    def is_string_c_group(self) -> bool:
        return bool(self.string_property) and self.certificate is not None \
            and self.certificate.ok

    def __bool__(self) -> bool:
        return self.is_string_c_group


class Sggi:
    """An ordered family of involutions indexed by a contiguous label window."""

    def __init__(self, window: LabelWindow, involutions: dict,
                 degree: int, source: LabeledGraph | None = None,
                 _allow_identity: bool = False):
        for label in window.labels():
            inv = involutions.get(label)
            if inv is None or (inv.is_identity() and not _allow_identity):
                raise IdentityGenerator(
                    f"label {label} has no edges (identity is not an involution)")
            if not compose(inv, inv).is_identity():
                raise ValueError(f"generator at label {label} is not an involution")
            if inv.degree != degree:
                raise DegreeMismatch(f"label {label}: degree {inv.degree} != {degree}")
        self.window = window
        self.involutions = {label: involutions[label] for label in window.labels()}
        self.degree = degree
        self.source = source
        self._sections = {}
        self._lock = threading.Lock()

    # -- construction -------------------------------------------------------

    @classmethod
    def from_graph(cls, g: LabeledGraph, window: LabelWindow | None = None,
                   allow_identity_labels: bool = False) -> "Sggi":
        """Derive the sggi of a graph; every window label needs >= 1 edge.

        The default window spans the labels present in the graph.  A wider
        explicit window raises ``IdentityGenerator`` unless identity padding
        is explicitly opted into.
        """
        if window is None:
            w = g.window()
            if w is None:
                raise IdentityGenerator("graph has no edges, no window to derive")
            window = LabelWindow(*w)
        involutions = {label: g.generator_of_label(label) for label in window.labels()}
        return cls(window, involutions, g.n, source=g,
                   _allow_identity=allow_identity_labels)

    @property
    def rank(self) -> int:
        return self.window.rank

    def generator(self, label: int) -> Permutation:
        return self.involutions[label]

    def generators(self) -> list:
        return [self.involutions[label] for label in self.window.labels()]

    def dual(self) -> "Sggi":
        """The same involutions in reversed label order."""
        lo, hi = self.window.lo, self.window.hi
        involutions = {lo + hi - label: inv for label, inv in self.involutions.items()}
        source = self.source.dual() if self.source is not None else None
        return Sggi(self.window, involutions, self.degree, source=source)

    # -- string property ----------------------------------------------------

    def check_string_property(self) -> StringPropertyVerdict:
        """(rho_i rho_j)^2 = 1 for all |i-j| >= 2; first offending pair on fail."""
        labels = list(self.window.labels())
        for idx, i in enumerate(labels):
            for j in labels[idx + 2:]:
                prod = compose(self.involutions[i], self.involutions[j])
                if not compose(prod, prod).is_identity():
                    return StringPropertyVerdict(False, (i, j))
        return StringPropertyVerdict(True)

    def schlafli_type(self) -> tuple:
        """Orders of the products of consecutive generators."""
        if self.rank < 2:
            raise ValueError("Schlafli type needs rank >= 2")
        labels = list(self.window.labels())
        return tuple(
            element_order(compose(self.involutions[i], self.involutions[j]))
            for i, j in zip(labels, labels[1:]))

    # -- sections -----------------------------------------------------------

    def section(self, labels: Iterable[int]) -> PermGroup:
        """The subgroup generated by the kept labels, cached per subset."""
        key = frozenset(labels)
        for label in key:
            if label not in self.window:
                raise KeyError(f"label {label} outside window "
                               f"[{self.window.lo}, {self.window.hi}]")
        with self._lock:
            cached = self._sections.get(key)
        if cached is not None:
            return cached
        gens = [self.involutions[label] for label in sorted(key)]
        group = PermGroup(gens, degree=self.degree)
        with self._lock:
            self._sections.setdefault(key, group)
        return group

    def group(self) -> PermGroup:
        return self.section(self.window.labels())

    # -- intersection property ----------------------------------------------

    def _node_check(self, left: tuple, right: tuple, cap: int):
        """Check <rho_left> ^ <rho_right> = <rho_(left^right)>.

        Returns a passing/failing certificate for that single subset pair.
        The fast path: when both sections are full symmetric products over
        their orbits, the intersection is the symmetric product over the
        common orbit refinement and only orders need comparing.  Failures
        always re-run the enumeration scan so the reported witness is the
        first element of the intersection enumeration that leaves the
        expected subgroup.
        """
        meet = tuple(sorted(set(left) & set(right)))
        A = self.section(left)
        B = self.section(right)
        C = self.section(meet)
        if A.is_symmetric_orbit_product and B.is_symmetric_orbit_product:
            actual = _sym_product_meet_order(A, B)
            if actual == C.order:
                return IpCertificate("pass")
        small, big = (A, B) if A.order <= B.order else (B, A)
        if small.order > cap:
            raise IntersectionTooLarge(
                f"sections for {list(left)} and {list(right)} both exceed cap {cap}",
                left=A.order, right=B.order)
        witness = None
        count = 0
        for img in small.element_tuples():
            if big.contains_tuple(img):
                count += 1
                if witness is None and not C.contains_tuple(img):
                    witness = Permutation._from_tuple(img)
        if witness is None:
            return IpCertificate("pass")
        return IpCertificate("fail", left=tuple(left), right=tuple(right),
                             meet=meet, expected_order=C.order,
                             actual_order=count, witness=witness)

    def check_ip_recursive(self, cap: int = DEFAULT_INTERSECTION_CAP) -> IpCertificate:
        """Recursive descent over contiguous label intervals.

        Interval [i..j] passes iff [i..j-1] and [i+1..j] pass and
        <rho_[i..j-1]> ^ <rho_[i+1..j]> = <rho_[i+1..j-1]>.  Rank <= 1 always
        passes; rank 2 passes iff the two involutions differ.  Memoized on
        intervals; the innermost failing interval is reported.
        """
        memo = {}

        def check(i: int, j: int) -> IpCertificate:
            key = (i, j)
            if key in memo:
                return memo[key]
            rank = j - i + 1
            if rank <= 1:
                result = IpCertificate("pass")
            elif rank == 2:
                if self.involutions[i] == self.involutions[j]:
                    result = IpCertificate(
                        "fail", left=(i,), right=(j,), meet=(),
                        expected_order=1, actual_order=2,
                        witness=self.involutions[i])
                else:
                    result = IpCertificate("pass")
            else:
                result = check(i, j - 1)
                if result.ok:
                    result = check(i + 1, j)
                if result.ok:
                    result = self._node_check(
                        tuple(range(i, j)), tuple(range(i + 1, j + 1)), cap)
            memo[key] = result
            return result

        return check(self.window.lo, self.window.hi)

    def _subset_pairs(self):
        """Canonical order of subset pairs: masks with I < J, no containment.

        Bit k of a mask selects label lo+k.
        """
        labels = list(self.window.labels())
        total = 1 << len(labels)
        for a in range(1, total):
            for b in range(a + 1, total):
                common = a & b
                if common == a or common == b:
                    continue
                yield (a, b)

    def _mask_labels(self, mask: int) -> tuple:
        lo = self.window.lo
        return tuple(lo + k for k in range(self.rank) if mask >> k & 1)

    def check_ip_full(self, cap: int = DEFAULT_INTERSECTION_CAP,
                      rank_bound: int = DEFAULT_FULL_RANK_BOUND,
                      jobs: int = 1, any_failure: bool = False) -> IpCertificate:
        """Check every subset pair with neither side containing the other.

        With ``jobs > 1`` pairs are evaluated in windows across a thread
        pool; unless ``any_failure`` is set the reported failure is still
        the canonically first one.
        """
        if self.rank > rank_bound:
            raise RankTooLarge(
                f"rank {self.rank} exceeds exhaustive bound {rank_bound}")

        def run(pair):
            a, b = pair
            return self._node_check(self._mask_labels(a), self._mask_labels(b), cap)

        pairs = list(self._subset_pairs())
        if jobs <= 1:
            for pair in pairs:
                cert = run(pair)
                if not cert.ok:
                    return cert
            return IpCertificate("pass")
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            window_size = max(jobs * 16, 64)
            for start in range(0, len(pairs), window_size):
                window = pairs[start:start + window_size]
                for cert in pool.map(run, window):
                    if not cert.ok:
                        return cert
        return IpCertificate("pass")

    def is_string_c_group(self, mode: str = "recursive",
                          cap: int = DEFAULT_INTERSECTION_CAP,
                          rank_bound: int = DEFAULT_FULL_RANK_BOUND,
                          jobs: int = 1, any_failure: bool = False) -> CprVerdict:
        """String property plus intersection property in the requested mode."""
        sp = self.check_string_property()
        if not sp.ok:
            return CprVerdict(sp, None)
        if mode == "recursive":
            cert = self.check_ip_recursive(cap=cap)
        elif mode == "full":
            cert = self.check_ip_full(cap=cap, rank_bound=rank_bound,
                                      jobs=jobs, any_failure=any_failure)
        else:
            raise ValueError(f"unknown mode {mode!r} (use 'recursive' or 'full')")
        return CprVerdict(sp, cert)

    # -- sesqui-extension ----------------------------------------------------

    def sesqui_extend(self, k: int) -> "Sggi":
        """Multiply the label-k generator by a transposition on two new points.

        The degree grows by 2; on graphs this is the disjoint union with a
        single k-edge.
        """
        if k not in self.window:
            raise KeyError(f"label {k} outside window")
        n = self.degree
        tau = Permutation.from_cycles(n + 2, [(n + 1, n + 2)])
        involutions = {}
        for label, inv in self.involutions.items():
            extended = Permutation(tuple(inv.images) + (n + 1, n + 2))
            involutions[label] = compose(extended, tau) if label == k else extended
        source = None
        if self.source is not None:
            source = self.source.union_disjoint(LabeledGraph(2, [(k, 1, 2)]))
        return Sggi(self.window, involutions, n + 2, source=source)


def _sym_product_meet_order(A: PermGroup, B: PermGroup) -> int:
    """|A ^ B| when both are full symmetric products over their orbits.

    Sym(P_1) x ... intersected with Sym(Q_1) x ... is the symmetric product
    over the cells of the common refinement {P_i ^ Q_j}.
    """
    order = 1
    b_orbits = B.orbits()
    for p in A.orbits():
        pset = set(p)
        for q in b_orbits:
            cell = pset & set(q)
            if cell:
                order *= math.factorial(len(cell))
    return order
