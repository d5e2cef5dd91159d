"""Binary partition operations generated by compounding the sixteen basic ones.

A binary operation on a fixed universe is tabulated over all ``Bell(n)**2``
ordered argument pairs.  Each table is stored as a ``uint8`` vector of result
partition indices (indices into the lexicographic enumeration), so that
compounding two tables with a connective is a pointwise lookup and
deduplication is a byte comparison.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .boolops import BINARY_TABLES, TruthTable, graph_method
from .core import Partition, Universe, all_partitions
from .errors import CapExceededError, VariableError
from .formula import Apply, Assignment, ConstBottom, ConstTop, Formula, Var, eval_partition, parse, to_text, variables

DEFAULT_N = 3
DEFAULT_TABLE_CAP_N = 4
DEFAULT_DEPTH_CAP = 4
DEFAULT_SIZE_CAP = 100_000

X, Y = Var("x"), Var("y")


class Domain:
    """All partitions of a universe plus the argument-pair layout."""

    def __init__(self, universe: Universe, cap: int = DEFAULT_TABLE_CAP_N):
        if universe.size > cap:
            raise CapExceededError(f"universe of size {universe.size} exceeds the explorer cap {cap}")
        self.universe = universe
        self.partitions = all_partitions(universe)
        self.index = {p: i for i, p in enumerate(self.partitions)}
        m = len(self.partitions)
        if m > 255:
            raise CapExceededError("too many partitions for uint8 tables")
        self.size = m
        # pair k = (k // m, k % m)
        self.left = np.repeat(np.arange(m, dtype=np.uint8), m)
        self.right = np.tile(np.arange(m, dtype=np.uint8), m)

    def lookup(self, table: TruthTable) -> np.ndarray:
        """``m x m`` array of result indices for a binary connective."""
        out = np.empty((self.size, self.size), dtype=np.uint8)
        for i, a in enumerate(self.partitions):
            for j, b in enumerate(self.partitions):
                out[i, j] = self.index[graph_method(table, [a, b])]
        return out


@dataclass(frozen=True, eq=False)
class OpTable:
    """A total binary operation on the partitions of one universe."""

    universe: Universe
    values: tuple[int, ...]
    provenance: Formula | None = field(default=None)
    depth: int = 0

    @cached_property
    def _partitions(self) -> list[Partition]:
        return all_partitions(self.universe)

    @property
    def key(self) -> bytes:
        return bytes(self.values)

    @property
    def entries(self) -> dict[tuple[Partition, Partition], Partition]:
        ps = self._partitions
        m = len(ps)
        return {(ps[k // m], ps[k % m]): ps[v] for k, v in enumerate(self.values)}

    def __call__(self, a: Partition, b: Partition) -> Partition:
        return self.entries[(a, b)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, OpTable):
            return NotImplemented
        return self.universe == other.universe and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.universe, self.values))

    def differing_entries(self, other: OpTable) -> list[tuple[Partition, Partition, Partition, Partition]]:
        ps = self._partitions
        m = len(ps)
        return [
            (ps[k // m], ps[k % m], ps[a], ps[b])
            for k, (a, b) in enumerate(zip(self.values, other.values))
            if a != b
        ]


def _generic(table: TruthTable) -> Formula:
    return Apply(table, (X, Y))


def basic_sixteen(universe: Universe, cap: int = DEFAULT_TABLE_CAP_N) -> list[OpTable]:
    dom = Domain(universe, cap)
    out = []
    for t in BINARY_TABLES:
        values = dom.lookup(t)[dom.left, dom.right]
        out.append(OpTable(universe, tuple(int(v) for v in values), _generic(t), 1))
    return out


def table_of_formula(
    formula: Formula, universe: Universe, cap: int = DEFAULT_TABLE_CAP_N, method: str = "graph"
) -> OpTable:
    extra = [v for v in variables(formula) if v not in ("x", "y")]
    if extra:
        raise VariableError(f"only x and y may occur, found {', '.join(extra)}")
    dom = Domain(universe, cap)
    memo: dict = {}
    values = []
    for a, b in itertools.product(dom.partitions, repeat=2):
        result = eval_partition(formula, Assignment(universe, {"x": a, "y": b}), method, memo)
        values.append(dom.index[result])
    return OpTable(universe, tuple(values), formula)


@dataclass
class ClosureResult:
    universe: Universe
    tables: list[OpTable]
    saturated: bool
    counts_by_depth: list[int]
    basic: list[OpTable]
    depth_cap: int
    size_cap: int

    @cached_property
    def by_key(self) -> dict[bytes, OpTable]:
        return {t.key: t for t in self.tables}

    def find(self, table: OpTable) -> OpTable | None:
        return self.by_key.get(table.key)

    def beyond_basic(self) -> list[OpTable]:
        basic = {t.key for t in self.basic}
        return [t for t in self.tables if t.key not in basic]

    def to_json(self, samples: int = 10, landmarks: dict[str, Formula] | None = None) -> dict:
        extra = self.beyond_basic()
        out = {
            "universe": list(self.universe.names),
            "n": self.universe.size,
            "depth_cap": self.depth_cap,
            "size_cap": self.size_cap,
            "seeds": ["x", "y", "0", "1"],
            "saturated": self.saturated,
            "counts_by_depth": list(self.counts_by_depth),
            "total": len(self.tables),
            "basic_distinct": len({t.key for t in self.basic}),
            "beyond_basic": len(extra),
            "samples": [{"depth": t.depth, "formula": to_text(t.provenance)} for t in extra[:samples]],
        }
        if landmarks:
            out["landmarks"] = [self.landmark(name, f) for name, f in landmarks.items()]
        return out

    def landmark(self, name: str, formula: Formula) -> dict:
        """Where a given compound sits relative to the closure and constant 1."""
        table = table_of_formula(formula, self.universe)
        top = next(t for t in self.basic if str(t.provenance.table) == "TTTT")
        found = self.find(table)
        return {
            "name": name,
            "formula": to_text(formula),
            "in_closure": found is not None,
            "depth": found.depth if found is not None else None,
            "equals_constant_1": table == top,
            "equals_basic": any(table == t for t in self.basic),
        }

    def counts_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["depth", "distinct_tables"])
        for d, c in enumerate(self.counts_by_depth):
            writer.writerow([d, c])
        return buf.getvalue()


def _seeds(dom: Domain) -> list[tuple[np.ndarray, Formula]]:
    m = dom.size
    n_pairs = m * m
    return [
        (dom.left.copy(), X),
        (dom.right.copy(), Y),
        (np.zeros(n_pairs, dtype=np.uint8), ConstBottom()),
        (np.full(n_pairs, m - 1, dtype=np.uint8), ConstTop()),
    ]


def _first_new(
    rows: np.ndarray, order: np.ndarray, known: dict[bytes, int]
) -> dict[bytes, int]:
    """Distinct rows not yet known, each with its smallest order code."""
    width = rows.shape[1]
    keys = np.ascontiguousarray(rows).view(np.dtype((np.void, width))).ravel()
    perm = np.lexsort((order, keys))
    keys, order = keys[perm], order[perm]
    first = np.ones(len(keys), dtype=bool)
    first[1:] = keys[1:] != keys[:-1]
    out = {}
    for k, o in zip(keys[first], order[first]):
        b = k.tobytes()
        if b not in known:
            out[b] = int(o)
    return out


def compound_closure(
    universe: Universe,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    size_cap: int = DEFAULT_SIZE_CAP,
    cap: int = DEFAULT_N,
) -> ClosureResult:
    """Breadth-first closure of ``{x, y, 0, 1}`` under the sixteen connectives.

    Round ``d`` applies every connective to every ordered pair of tables
    known after round ``d - 1``; only pairs involving a table first found in
    round ``d - 1`` can produce anything new, so only those are computed.
    New tables are ranked by (connective, left index, right index) of their
    first derivation, which fixes both their order and their provenance.
    """
    dom = Domain(universe, cap)
    ops = [dom.lookup(t) for t in BINARY_TABLES]
    seeds = _seeds(dom)
    arrays: list[np.ndarray] = []
    tables: list[OpTable] = []
    known: dict[bytes, int] = {}
    for arr, prov in seeds:
        if arr.tobytes() not in known:
            known[arr.tobytes()] = len(tables)
            arrays.append(arr)
            tables.append(OpTable(universe, tuple(int(v) for v in arr), prov, 0))
    counts = [len(tables)]
    frontier_start = 0
    saturated = False
    for depth in range(1, depth_cap + 1):
        total = len(arrays)
        stacked = np.stack(arrays)
        new_part = stacked[frontier_start:]
        old_part = stacked[:frontier_start]
        found: dict[bytes, int] = {}
        for op_idx, op in enumerate(ops):
            base = op_idx * total * total
            blocks = []
            # new tables on the left, anything on the right
            rows = op[new_part[:, None, :], stacked[None, :, :]].reshape(-1, stacked.shape[1])
            a = np.repeat(np.arange(frontier_start, total, dtype=np.int64), total)
            b = np.tile(np.arange(total, dtype=np.int64), total - frontier_start)
            blocks.append((rows, base + a * total + b))
            if frontier_start:
                rows = op[old_part[:, None, :], new_part[None, :, :]].reshape(-1, stacked.shape[1])
                a = np.repeat(np.arange(frontier_start, dtype=np.int64), total - frontier_start)
                b = np.tile(np.arange(frontier_start, total, dtype=np.int64), frontier_start)
                blocks.append((rows, base + a * total + b))
            for rows, order in blocks:
                for key, code in _first_new(rows, order, known).items():
                    if key not in found or code < found[key]:
                        found[key] = code
        frontier_start = total
        if not found:
            saturated = True
            counts.append(len(tables))
            break
        for key, code in sorted(found.items(), key=lambda kv: kv[1]):
            if len(tables) >= size_cap:
                break
            op_idx, rest = divmod(code, total * total)
            a, b = divmod(rest, total)
            prov = Apply(BINARY_TABLES[op_idx], (tables[a].provenance, tables[b].provenance))
            known[key] = len(tables)
            arrays.append(np.frombuffer(key, dtype=np.uint8).copy())
            tables.append(OpTable(universe, tuple(key), prov, depth))
        counts.append(len(tables))
        if len(tables) >= size_cap:
            break
    return ClosureResult(universe, tables, saturated, counts, basic_sixteen(universe, max(cap, DEFAULT_TABLE_CAP_N)), depth_cap, size_cap)


#: Peirce's law as a compound binary operation in ``x`` and ``y``.
PEIRCE = parse("((y -> x) -> y) -> y")
