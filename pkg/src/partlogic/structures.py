"""Boolean cores of upper segments and the corelation picture of subsets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .boolops import implication_blocks, join_blocks, meet_blocks
from .core import Partition, Universe, enumerate_partitions, refines
from .errors import CapExceededError, NotInCoreError

DEFAULT_EMBEDDING_CAP = 3


@dataclass(frozen=True)
class BooleanCore:
    """All partitions ``sigma => base``, in order of first discovery."""

    base: Partition
    members: tuple[Partition, ...]

    @property
    def top(self) -> Partition:
        return Partition.discrete(self.base.universe)

    @property
    def bottom(self) -> Partition:
        return self.base

    def __contains__(self, p: Partition) -> bool:
        return p in self.members

    def __len__(self) -> int:
        return len(self.members)


def boolean_core(pi: Partition, cap: int | None = None) -> BooleanCore:
    seen: dict[Partition, None] = {}
    for sigma in enumerate_partitions(pi.universe, cap):
        seen.setdefault(implication_blocks(sigma, pi))
    return BooleanCore(pi, tuple(seen))


def in_core(tau: Partition, pi: Partition) -> bool:
    """Membership test without enumeration: the members are exactly the
    partitions obtained from ``pi`` by discretizing some of its blocks."""
    if not refines(pi, tau):
        return False
    for block in pi.blocks:
        labels = {tau.rgs[i] for i in block}
        if len(block) > 1 and len(labels) not in (1, len(block)):
            return False
    return True


def core_negation(tau: Partition, pi: Partition) -> Partition:
    """Complement of ``tau`` inside the Boolean core of ``[pi, 1]``."""
    if not in_core(tau, pi):
        raise NotInCoreError(f"{tau} is not of the form sigma => {pi}")
    return implication_blocks(tau, pi)


@dataclass(frozen=True)
class Corelation:
    """A subset ``S`` of ``U`` as a partition on ``U`` plus a starred copy.

    Element ``i`` of the doubled universe is ``u_i`` and ``n + i`` is its
    copy; the pair ``{u_i, u_i*}`` is a block exactly when ``i`` is not in S.
    """

    base_universe: Universe
    doubled_universe: Universe
    subset: frozenset[int]
    partition: Partition


def corelation_of(universe: Universe, s) -> Corelation:
    s = frozenset(s)
    n = universe.size
    bad = [x for x in s if not (isinstance(x, int) and 0 <= x < n)]
    if bad:
        raise IndexError(f"element index {bad[0]!r} outside universe of size {n}")
    doubled = universe.doubled()
    blocks: list[tuple[int, ...]] = []
    for i in range(n):
        if i in s:
            blocks += [(i,), (n + i,)]
        else:
            blocks.append((i, n + i))
    return Corelation(universe, doubled, s, Partition.from_blocks(doubled, blocks))


def subset_of_corelation(p: Partition, base: Universe) -> frozenset[int]:
    """Inverse of :func:`corelation_of` on partitions of that shape."""
    n = base.size
    return frozenset(i for i in range(n) if p.rgs[i] != p.rgs[n + i])


@dataclass
class LawResult:
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None

    def to_json(self) -> dict:
        return {"law": self.name, "passed": self.passed, "checked": self.checked, "counterexample": self.counterexample}


@dataclass
class EmbeddingReport:
    universe: Universe
    laws: list[LawResult] = field(default_factory=list)
    members: tuple[Partition, ...] = ()

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    def to_json(self) -> dict:
        return {
            "universe": list(self.universe.names),
            "passed": self.passed,
            "laws": [law.to_json() for law in self.laws],
            "members": [str(m) for m in self.members],
        }


def _subsets(n: int) -> list[frozenset[int]]:
    return [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]


def _fmt(s: frozenset[int], u: Universe) -> str:
    return "{" + ",".join(u.names[i] for i in sorted(s)) + "}"


def check_powerset_embedding(universe: Universe, cap: int = DEFAULT_EMBEDDING_CAP) -> EmbeddingReport:
    """Brute-force check that ``S -> pi(S)`` carries the subset algebra onto
    the Boolean core of ``[pi(empty), 1]`` on the doubled universe.

    Dictionary checked: join to union, meet to intersection, implication to
    ``complement(S) | T``.
    """
    n = universe.size
    if n > cap:
        raise CapExceededError(f"universe of size {n} exceeds the embedding cap {cap}")
    full = frozenset(range(n))
    subsets = _subsets(n)
    pi = {s: corelation_of(universe, s).partition for s in subsets}
    report = EmbeddingReport(universe)

    def law(name, cases):
        checked = 0
        for label, lhs, rhs in cases:
            checked += 1
            if lhs != rhs:
                report.laws.append(LawResult(name, False, checked, f"{label}: {lhs} != {rhs}"))
                return
        report.laws.append(LawResult(name, True, checked))

    pairs = list(itertools.product(subsets, repeat=2))
    law(
        "join is union",
        ((f"S={_fmt(s, universe)} T={_fmt(t, universe)}", join_blocks(pi[s], pi[t]), pi[s | t]) for s, t in pairs),
    )
    law(
        "meet is intersection",
        ((f"S={_fmt(s, universe)} T={_fmt(t, universe)}", meet_blocks(pi[s], pi[t]), pi[s & t]) for s, t in pairs),
    )
    law(
        "implication is complement-union",
        (
            (f"S={_fmt(s, universe)} T={_fmt(t, universe)}", implication_blocks(pi[s], pi[t]), pi[(full - s) | t])
            for s, t in pairs
        ),
    )
    bottom = pi[frozenset()]
    top = Partition.discrete(bottom.universe)
    law("1 => pi(empty) is pi(empty)", [("", implication_blocks(top, bottom), bottom)])
    law("pi(empty) => pi(empty) is 1", [("", implication_blocks(bottom, bottom), top)])
    law("pi(U) is 1", [("", pi[full], top)])
    law(
        "corelation is injective",
        ((f"S={_fmt(s, universe)} T={_fmt(t, universe)}", pi[s] == pi[t], s == t) for s, t in pairs),
    )

    core = boolean_core(bottom, cap=2 * cap)
    report.members = core.members
    expected = {pi[s] for s in subsets}
    law("core members are the pi(S)", [("", set(core.members), expected)])
    law("core has 2^|U| members", [("", len(core.members), 2**n)])
    return report
