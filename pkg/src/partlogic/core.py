"""Finite universes, canonical partitions and binary relations on them.

Elements are always the integers ``0..n-1``; names only matter for parsing
and printing.  A partition is stored as its restricted growth string (block
numbers assigned in order of first appearance), which makes equality and
ordering cheap.  A relation is a dense ``n x n`` bit grid, one int per row.
"""

from __future__ import annotations

import os
import re
import string
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    CapExceededError,
    CoverageError,
    EmptyBlockError,
    OverlapError,
    PartitionError,
    UniverseMismatchError,
)
from .unionfind import UnionFind

DEFAULT_ENUMERATION_CAP = 10

#: When true, ``refines`` cross-checks block containment against ditset
#: inclusion on every call.
DEBUG = os.environ.get("PARTLOGIC_DEBUG", "") not in ("", "0")


def enumeration_cap() -> int:
    return int(os.environ.get("PARTLOGIC_ENUM_CAP", DEFAULT_ENUMERATION_CAP))


_NAME_RE = re.compile(r"[^\s,|{}\[\]]+")


@dataclass(frozen=True)
class Universe:
    """A finite set ``{0, ..., size-1}`` with display names."""

    size: int
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise ValueError(f"universe size must be a positive integer, got {self.size!r}")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"e{i}" for i in range(self.size)))
        else:
            names = tuple(str(x) for x in self.names)
            if len(names) != self.size:
                raise ValueError(f"expected {self.size} names, got {len(names)}")
            if len(set(names)) != self.size:
                raise ValueError(f"universe names are not distinct: {names}")
            for name in names:
                if not _NAME_RE.fullmatch(name):
                    raise ValueError(f"invalid element name {name!r}")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_names(cls, names: Iterable[str]) -> Universe:
        names = tuple(names)
        return cls(len(names), names)

    @classmethod
    def parse(cls, text: str) -> Universe:
        """Parse a comma-separated name list such as ``"a,b,c,d"``."""
        names = [x.strip() for x in text.split(",") if x.strip()]
        if not names:
            raise ValueError("empty universe")
        return cls.from_names(names)

    @classmethod
    def letters(cls, n: int) -> Universe:
        """``a, b, c, ...`` for small ``n``; falls back to default names."""
        if n <= 26:
            return cls(n, tuple(string.ascii_lowercase[:n]))
        return cls(n)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.size))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PartitionError(f"element {name!r} is not in universe {{{','.join(self.names)}}}") from None

    def doubled(self) -> Universe:
        """The disjoint union of the universe with a starred copy of itself."""
        return Universe(2 * self.size, self.names + tuple(f"{x}*" for x in self.names))


def _check_same(u: Universe, v: Universe) -> None:
    if u != v:
        raise UniverseMismatchError(f"universes differ: {u.names} vs {v.names}")


def canonical_labels(labels: Sequence[int]) -> tuple[int, ...]:
    """Renumber arbitrary block labels by order of first appearance."""
    seen: dict[int, int] = {}
    out = []
    for x in labels:
        if x not in seen:
            seen[x] = len(seen)
        out.append(seen[x])
    return tuple(out)


@dataclass(frozen=True)
class Partition:
    """A set partition in restricted-growth form.

    ``rgs[i]`` is the number of the block holding element ``i``; block numbers
    are assigned in order of least element, so each partition has exactly one
    representation.
    """

    universe: Universe
    rgs: tuple[int, ...]

    def __post_init__(self):
        rgs = tuple(self.rgs)
        object.__setattr__(self, "rgs", rgs)
        if len(rgs) != self.universe.size:
            raise PartitionError(f"rgs has length {len(rgs)}, universe has {self.universe.size} elements")
        top = -1
        for i, x in enumerate(rgs):
            if not isinstance(x, int) or x < 0 or x > top + 1:
                raise PartitionError(f"not a restricted growth string: {list(rgs)} (entry {i})")
            top = max(top, x)

    # constructors

    @classmethod
    def discrete(cls, universe: Universe) -> Partition:
        """The partition ``1`` of all singletons (top of the refinement order)."""
        return cls(universe, tuple(range(universe.size)))

    @classmethod
    def indiscrete(cls, universe: Universe) -> Partition:
        """The one-block partition ``0`` (bottom of the refinement order)."""
        return cls(universe, (0,) * universe.size)

    @classmethod
    def from_labels(cls, universe: Universe, labels: Sequence[int]) -> Partition:
        return cls(universe, canonical_labels(labels))

    @classmethod
    def from_blocks(cls, universe: Universe, blocks: Iterable[Iterable[int]]) -> Partition:
        labels: list[int | None] = [None] * universe.size
        for b, block in enumerate(blocks):
            block = list(block)
            if not block:
                raise EmptyBlockError(f"block {b} is empty")
            for x in block:
                if not 0 <= x < universe.size:
                    raise PartitionError(f"element index {x} outside universe of size {universe.size}")
                if labels[x] is not None:
                    raise OverlapError(f"element {universe.names[x]!r} appears in more than one block")
                labels[x] = b
        missing = [universe.names[i] for i, x in enumerate(labels) if x is None]
        if missing:
            raise CoverageError(f"elements in no block: {', '.join(missing)}")
        return cls.from_labels(universe, labels)  # type: ignore[arg-type]

    @classmethod
    def parse(cls, text: str, universe: Universe) -> Partition:
        """Read a partition literal.

        Accepted forms: block notation ``{a,b|c,d}``, rgs notation
        ``[0,0,1,1]``, and the constants ``0`` and ``1``.
        """
        s = "".join(text.split())
        if s == "0":
            return cls.indiscrete(universe)
        if s == "1":
            return cls.discrete(universe)
        if s.startswith("[") and s.endswith("]"):
            try:
                values = [int(x) for x in s[1:-1].split(",")] if s[1:-1] else []
            except ValueError:
                raise PartitionError(f"bad rgs literal {text!r}") from None
            return cls(universe, tuple(values))
        if s.startswith("{") and s.endswith("}"):
            body = s[1:-1]
            blocks = []
            for chunk in body.split("|"):
                names = [x for x in chunk.split(",")]
                if any(not x for x in names):
                    raise EmptyBlockError(f"empty block or stray comma in {text!r}")
                blocks.append([universe.index(x) for x in names])
            return cls.from_blocks(universe, blocks)
        raise PartitionError(f"unrecognised partition literal {text!r}")

    # views

    @property
    def n(self) -> int:
        return self.universe.size

    @property
    def num_blocks(self) -> int:
        return max(self.rgs) + 1

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks as sorted index tuples, ordered by least element."""
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for i, b in enumerate(self.rgs):
            out[b].append(i)
        return tuple(tuple(b) for b in out)

    def is_discrete(self) -> bool:
        return self.num_blocks == self.n

    def is_indiscrete(self) -> bool:
        return self.num_blocks == 1

    def same_block(self, i: int, j: int) -> bool:
        return self.rgs[i] == self.rgs[j]

    def named_blocks(self) -> list[list[str]]:
        names = self.universe.names
        return [[names[i] for i in b] for b in self.blocks]

    def __str__(self) -> str:
        return "{" + "|".join(",".join(b) for b in self.named_blocks()) + "}"

    def __lt__(self, other: Partition) -> bool:
        _check_same(self.universe, other.universe)
        return self.rgs < other.rgs

    def to_json(self) -> dict:
        return {"universe": list(self.universe.names), "blocks": self.named_blocks(), "rgs": list(self.rgs)}


@dataclass(frozen=True)
class BinaryRelation:
    """A set of ordered pairs over a universe, held as one bitmask per row.

    Bit ``j`` of ``rows[i]`` is set iff ``(i, j)`` is in the relation.
    """

    universe: Universe
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.universe.size:
            raise ValueError("relation needs one row per element")
        full = (1 << self.universe.size) - 1
        for r in rows:
            if r & ~full:
                raise ValueError("relation pair outside the universe")

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[tuple[int, int]]) -> BinaryRelation:
        n = universe.size
        rows = [0] * n
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"pair ({i}, {j}) outside universe of size {n}")
            rows[i] |= 1 << j
        return cls(universe, tuple(rows))

    @classmethod
    def empty(cls, universe: Universe) -> BinaryRelation:
        return cls(universe, (0,) * universe.size)

    @classmethod
    def full(cls, universe: Universe) -> BinaryRelation:
        return cls(universe, ((1 << universe.size) - 1,) * universe.size)

    @classmethod
    def diagonal(cls, universe: Universe) -> BinaryRelation:
        return cls(universe, tuple(1 << i for i in range(universe.size)))

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        return bool(self.rows[i] >> j & 1)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.rows):
            for j in range(self.universe.size):
                if row >> j & 1:
                    yield (i, j)

    def __len__(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)

    def pairs(self) -> set[tuple[int, int]]:
        return set(self)

    def _binop(self, other: BinaryRelation, op) -> BinaryRelation:
        _check_same(self.universe, other.universe)
        return BinaryRelation(self.universe, tuple(op(a, b) for a, b in zip(self.rows, other.rows)))

    def __or__(self, other: BinaryRelation) -> BinaryRelation:
        return self._binop(other, lambda a, b: a | b)

    def __and__(self, other: BinaryRelation) -> BinaryRelation:
        return self._binop(other, lambda a, b: a & b)

    def __sub__(self, other: BinaryRelation) -> BinaryRelation:
        return self._binop(other, lambda a, b: a & ~b)

    def __le__(self, other: BinaryRelation) -> bool:
        _check_same(self.universe, other.universe)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __ge__(self, other: BinaryRelation) -> bool:
        return other <= self

    def complement(self) -> BinaryRelation:
        full = (1 << self.universe.size) - 1
        return BinaryRelation(self.universe, tuple(full & ~r for r in self.rows))

    def transpose(self) -> BinaryRelation:
        return BinaryRelation.from_pairs(self.universe, ((j, i) for i, j in self))

    def is_reflexive(self) -> bool:
        return all(r >> i & 1 for i, r in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_transitive(self) -> bool:
        for i, row in enumerate(self.rows):
            reach = row
            for j in range(self.universe.size):
                if row >> j & 1:
                    reach |= self.rows[j]
            if reach != row:
                return False
        return True

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()

    def to_json(self) -> dict:
        names = self.universe.names
        return {"universe": list(names), "pairs": [[names[i], names[j]] for i, j in sorted(self)]}


def partition_from_blocks(universe: Universe, blocks: Iterable[Iterable[int]]) -> Partition:
    return Partition.from_blocks(universe, blocks)


def indit(p: Partition) -> BinaryRelation:
    """Pairs of elements lying in a common block (the equivalence relation)."""
    masks = [0] * p.num_blocks
    for i, b in enumerate(p.rgs):
        masks[b] |= 1 << i
    return BinaryRelation(p.universe, tuple(masks[b] for b in p.rgs))


def dit(p: Partition) -> BinaryRelation:
    """Pairs of elements lying in different blocks (the distinctions)."""
    return indit(p).complement()


def _refines_by_blocks(sigma: Partition, pi: Partition) -> bool:
    for block in pi.blocks:
        if len({sigma.rgs[i] for i in block}) != 1:
            return False
    return True


def refines(sigma: Partition, pi: Partition, debug: bool | None = None) -> bool:
    """``sigma <= pi`` in the refinement order: every block of ``pi`` sits
    inside some block of ``sigma``.  ``1`` is the top, ``0`` the bottom."""
    _check_same(sigma.universe, pi.universe)
    result = _refines_by_blocks(sigma, pi)
    if DEBUG if debug is None else debug:
        by_dits = dit(sigma) <= dit(pi)
        assert result == by_dits, f"refinement disagreement for {sigma} and {pi}"
    return result


def refines_by_dits(sigma: Partition, pi: Partition) -> bool:
    _check_same(sigma.universe, pi.universe)
    return dit(sigma) <= dit(pi)


def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _check_cap(n: int, cap: int | None) -> None:
    limit = enumeration_cap() if cap is None else cap
    if n > limit:
        raise CapExceededError(f"universe of size {n} exceeds the enumeration cap {limit}")


def enumerate_partitions(universe: Universe, cap: int | None = None) -> Iterator[Partition]:
    """Yield every partition of ``universe`` in lexicographic rgs order."""
    _check_cap(universe.size, cap)
    n = universe.size
    a = [0] * n
    # m[i] = max(a[0..i]) kept alongside a for O(1) growth checks
    m = [0] * n
    while True:
        yield Partition(universe, tuple(a))
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


def all_partitions(universe: Universe, cap: int | None = None) -> list[Partition]:
    return list(enumerate_partitions(universe, cap))


def components(universe: Universe, links: Iterable[tuple[int, int]]) -> Partition:
    """Connected components of the undirected graph ``(U, links)``."""
    uf = UnionFind(universe.size)
    for x, y in links:
        if not (0 <= x < universe.size and 0 <= y < universe.size):
            raise ValueError(f"link {x}-{y} outside universe of size {universe.size}")
        uf.union(x, y)
    return Partition(universe, uf.labels())


def closure_partition(r: BinaryRelation) -> Partition:
    """The partition whose indit set is the RST closure of ``r``."""
    return components(r.universe, r)


def rst_closure(r: BinaryRelation) -> BinaryRelation:
    """Smallest equivalence relation containing ``r``."""
    return indit(closure_partition(r))


def interior(r: BinaryRelation) -> BinaryRelation:
    """Complement of the closure of the complement; always a ditset."""
    return rst_closure(r.complement()).complement()


def partition_of_equivalence(r: BinaryRelation) -> Partition:
    """Inverse of :func:`indit`; ``r`` must already be an equivalence relation."""
    if not r.is_equivalence():
        raise PartitionError("relation is not an equivalence relation")
    labels = [(r.rows[i] & -r.rows[i]).bit_length() - 1 for i in range(r.universe.size)]
    return Partition.from_labels(r.universe, labels)
