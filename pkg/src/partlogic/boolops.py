"""Boolean operations lifted to partitions.

Three constructions live here:

* the set-of-blocks definitions of join, meet and implication;
* the graph method: label every link ``u-u'`` of the complete graph on the
  universe with ``T`` for each partition that distinguishes ``u`` and ``u'``
  and ``F`` for each that does not, keep the links where the truth function
  returns ``F``, and take connected components;
* the closure method: union, over the false rows of the table, of the
  intersections of ditsets (``T`` inputs) and indit sets (``F`` inputs),
  followed by the reflexive-symmetric-transitive closure.

Truth tables list rows starting from all-``T`` and ending at all-``F``,
with the first argument as the most significant position, i.e. the order
``TT, TF, FT, FF`` for binary tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import (
    BinaryRelation,
    Partition,
    Universe,
    components,
    dit,
    indit,
    partition_of_equivalence,
    rst_closure,
)
from .errors import (
    ArityMismatchError,
    CharacterError,
    LengthError,
    MethodUnsupportedError,
    UniverseMismatchError,
)
from .unionfind import UnionFind

_CHARS = {"T": True, "F": False}


@dataclass(frozen=True)
class TruthTable:
    """An ``arity``-ary Boolean function given by its output column."""

    arity: int
    rows: tuple[bool, ...]

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError("arity must be non-negative")
        rows = tuple(bool(x) for x in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != 1 << self.arity:
            raise LengthError(f"arity {self.arity} needs {1 << self.arity} rows, got {len(rows)}")

    def row_index(self, args: Sequence[bool]) -> int:
        idx = 0
        for a in args:
            idx = (idx << 1) | (not a)
        return idx

    def inputs(self, row: int) -> tuple[bool, ...]:
        """Argument vector of ``row``."""
        k = self.arity
        return tuple(not (row >> (k - 1 - i) & 1) for i in range(k))

    def __call__(self, *args: bool) -> bool:
        if len(args) != self.arity:
            raise ArityMismatchError(f"table of arity {self.arity} applied to {len(args)} arguments")
        return self.rows[self.row_index(args)]

    def false_rows(self) -> list[tuple[bool, ...]]:
        return [self.inputs(r) for r, out in enumerate(self.rows) if not out]

    def __str__(self) -> str:
        return "".join("T" if x else "F" for x in self.rows)

    @property
    def name(self) -> str | None:
        if self.arity == 2:
            return BINARY_NAMES.get(str(self))
        return None


def table_from_string(arity: int, s: str) -> TruthTable:
    if len(s) != 1 << arity:
        raise LengthError(f"arity {arity} needs a string of length {1 << arity}, got {len(s)}")
    bad = [c for c in s if c not in _CHARS]
    if bad:
        raise CharacterError(f"truth table strings use only 'T' and 'F', found {bad[0]!r}")
    return TruthTable(arity, tuple(_CHARS[c] for c in s))


def table_from_function(arity: int, fn) -> TruthTable:
    rows = [bool(fn(*args)) for args in itertools.product((True, False), repeat=arity)]
    return TruthTable(arity, tuple(rows))


OR = table_from_string(2, "TTTF")
AND = table_from_string(2, "TFFF")
IMP = table_from_string(2, "TFTT")
XOR = table_from_string(2, "FTTF")

BINARY_NAMES = {
    "TTTT": "TRUE",
    "TTTF": "OR",
    "TTFT": "CONVERSE",
    "TTFF": "LEFT",
    "TFTT": "IMP",
    "TFTF": "RIGHT",
    "TFFT": "IFF",
    "TFFF": "AND",
    "FTTT": "NAND",
    "FTTF": "XOR",
    "FTFT": "NOT_RIGHT",
    "FTFF": "NONIMP",
    "FFTT": "NOT_LEFT",
    "FFTF": "CONVERSE_NONIMP",
    "FFFT": "NOR",
    "FFFF": "FALSE",
}
_BY_NAME = {v: k for k, v in BINARY_NAMES.items()}

#: All sixteen binary tables, ``TTTT`` first and ``FFFF`` last.
BINARY_TABLES: tuple[TruthTable, ...] = tuple(
    table_from_string(2, "".join(chars)) for chars in itertools.product("TF", repeat=4)
)


def resolve_table(name: str | TruthTable, arity: int | None = None) -> TruthTable:
    """Accept a table, a catalogue name such as ``"xor"``, or a T/F string."""
    if isinstance(name, TruthTable):
        table = name
    elif name.upper() in _BY_NAME:
        table = table_from_string(2, _BY_NAME[name.upper()])
    else:
        k = (len(name) - 1).bit_length() if name else 0
        if arity is not None:
            k = arity
        table = table_from_string(k, name)
    if arity is not None and table.arity != arity:
        raise ArityMismatchError(f"expected arity {arity}, got {table.arity}")
    return table


def _universe_of(f: TruthTable, parts: Sequence[Partition], universe: Universe | None) -> Universe:
    if len(parts) != f.arity:
        raise ArityMismatchError(f"table of arity {f.arity} given {len(parts)} partitions")
    if parts:
        u = parts[0].universe
        for p in parts[1:]:
            if p.universe != u:
                raise UniverseMismatchError("all arguments must live on the same universe")
        if universe is not None and universe != u:
            raise UniverseMismatchError("explicit universe differs from the arguments' universe")
        return u
    if universe is None:
        raise ArityMismatchError("a nullary operation needs an explicit universe")
    return universe


def link_labels(parts: Sequence[Partition], i: int, j: int) -> tuple[bool, ...]:
    """``True`` (T) for each partition distinguishing ``i`` and ``j``."""
    return tuple(p.rgs[i] != p.rgs[j] for p in parts)


def kept_links(
    f: TruthTable, parts: Sequence[Partition], universe: Universe | None = None
) -> Iterator[tuple[int, int]]:
    """Unordered pairs ``i < j`` whose label vector ``f`` maps to F."""
    u = _universe_of(f, parts, universe)
    rgss = [p.rgs for p in parts]
    rows = f.rows
    n = u.size
    for i in range(n):
        for j in range(i + 1, n):
            idx = 0
            for r in rgss:
                idx = (idx << 1) | (r[i] == r[j])
            if not rows[idx]:
                yield (i, j)


def graph_method(f: TruthTable, parts: Sequence[Partition], universe: Universe | None = None) -> Partition:
    u = _universe_of(f, parts, universe)
    return components(u, kept_links(f, parts, u))


def dnf_terms(
    f: TruthTable, parts: Sequence[Partition], universe: Universe | None = None
) -> list[tuple[tuple[bool, ...], BinaryRelation]]:
    """One relation per false row of ``f``: the intersection of ``dit`` for
    each ``T`` input and ``indit`` for each ``F`` input."""
    u = _universe_of(f, parts, universe)
    terms = []
    for args in f.false_rows():
        rel = BinaryRelation.full(u)
        for a, p in zip(args, parts):
            rel = rel & (dit(p) if a else indit(p))
        terms.append((args, rel))
    return terms


def negated_dnf_relation(
    f: TruthTable, parts: Sequence[Partition], universe: Universe | None = None, mode: str = "pairs"
) -> BinaryRelation:
    """The relation whose RST closure is the indit set of ``f(parts)``.

    ``mode="pairs"`` evaluates ``f`` once per ordered pair; ``mode="terms"``
    unions the DNF terms of :func:`dnf_terms`.  Both give the same set.
    """
    u = _universe_of(f, parts, universe)
    if mode == "terms":
        rel = BinaryRelation.empty(u)
        for _, term in dnf_terms(f, parts, u):
            rel = rel | term
        return rel
    if mode != "pairs":
        raise ValueError(f"unknown closure mode {mode!r}")
    rgss = [p.rgs for p in parts]
    rows = []
    for i in range(u.size):
        mask = 0
        for j in range(u.size):
            idx = 0
            for r in rgss:
                idx = (idx << 1) | (r[i] == r[j])
            if not f.rows[idx]:
                mask |= 1 << j
        rows.append(mask)
    return BinaryRelation(u, tuple(rows))


def closure_method(
    f: TruthTable, parts: Sequence[Partition], universe: Universe | None = None, mode: str = "pairs"
) -> Partition:
    rel = negated_dnf_relation(f, parts, universe, mode)
    return partition_of_equivalence(rst_closure(rel))


def _same_universe(a: Partition, b: Partition) -> None:
    if a.universe != b.universe:
        raise UniverseMismatchError("partitions live on different universes")


def join_blocks(pi: Partition, sigma: Partition) -> Partition:
    """Blocks are the non-empty intersections ``B & C``."""
    _same_universe(pi, sigma)
    return Partition.from_labels(pi.universe, list(zip(pi.rgs, sigma.rgs)))


def meet_blocks(pi: Partition, sigma: Partition) -> Partition:
    """Unions of the classes of the overlap relation on the blocks of both."""
    _same_universe(pi, sigma)
    offset = pi.num_blocks
    uf = UnionFind(offset + sigma.num_blocks)
    for a, b in zip(pi.rgs, sigma.rgs):
        uf.union(a, offset + b)
    return Partition.from_labels(pi.universe, [uf.find(a) for a in pi.rgs])


def implication_blocks(sigma: Partition, pi: Partition) -> Partition:
    """``sigma => pi``: each block of ``pi`` contained in a block of ``sigma``
    is discretized, every other block of ``pi`` stays whole."""
    _same_universe(sigma, pi)
    out: list[tuple[int, ...]] = []
    for block in pi.blocks:
        if len({sigma.rgs[i] for i in block}) == 1:
            out.extend((i,) for i in block)
        else:
            out.append(block)
    return Partition.from_blocks(pi.universe, out)


BLOCK_METHODS = {str(OR): join_blocks, str(AND): meet_blocks, str(IMP): implication_blocks}


def apply(
    f: TruthTable, parts: Sequence[Partition], method: str = "graph", universe: Universe | None = None
) -> Partition:
    """Dispatch to one of the three constructions."""
    if method == "graph":
        return graph_method(f, parts, universe)
    if method == "closure":
        return closure_method(f, parts, universe)
    if method == "blocks":
        fn = BLOCK_METHODS.get(str(f)) if f.arity == 2 else None
        if fn is None:
            raise MethodUnsupportedError(f"no set-of-blocks definition for table {f}")
        return fn(*parts)
    raise ValueError(f"unknown method {method!r}")
