"""Subset-tautology decision and bounded partition-tautology search.

A formula is a subset tautology iff it is a truth-table tautology, which is
decided by trying every valuation.  Partition tautology-hood quantifies over
every finite universe, so the best a finite search can say is that no
counterexample exists up to a size bound; the verdict names reflect that.
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .core import Partition, Universe, enumerate_partitions, enumeration_cap
from .errors import CapExceededError, PartitionLogicError, VariableCapError
from .formula import Assignment, CorpusEntry, Formula, eval_partition, eval_truth, parse_corpus, variables

DEFAULT_VARIABLE_CAP = 6
DEFAULT_MAX_N = 4


class VerdictKind(str, enum.Enum):
    SUBSET_TAUTOLOGY = "SubsetTautology"
    NOT_SUBSET_TAUTOLOGY = "NotSubsetTautology"
    PARTITION_REFUTED = "PartitionRefuted"
    NOT_REFUTED_UP_TO = "NotRefutedUpTo"


@dataclass(frozen=True)
class TautologyVerdict:
    kind: VerdictKind
    bound: int | None = None
    valuation: Mapping[str, bool] | None = None
    assignment: Assignment | None = None
    result: Partition | None = None

    @property
    def refuted(self) -> bool:
        return self.kind in (VerdictKind.NOT_SUBSET_TAUTOLOGY, VerdictKind.PARTITION_REFUTED)

    def summary(self) -> str:
        if self.kind is VerdictKind.NOT_REFUTED_UP_TO:
            return f"NotRefutedUpTo({self.bound})"
        if self.kind is VerdictKind.NOT_SUBSET_TAUTOLOGY:
            vals = ", ".join(f"{k}={'T' if v else 'F'}" for k, v in self.valuation.items())
            return f"NotSubsetTautology [{vals}]"
        if self.kind is VerdictKind.PARTITION_REFUTED:
            n = self.assignment.universe.size
            return f"PartitionRefuted n={n} [{self.assignment.describe()}] -> {self.result}"
        return self.kind.value

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.bound is not None:
            out["bound"] = self.bound
        if self.valuation is not None:
            out["witness"] = {"valuation": {k: ("T" if v else "F") for k, v in self.valuation.items()}}
        if self.assignment is not None:
            out["witness"] = {
                "universe": list(self.assignment.universe.names),
                "bindings": {k: str(v) for k, v in self.assignment.bindings.items()},
                "result": str(self.result),
            }
        return out


def _check_vars(names: Sequence[str], var_cap: int) -> None:
    if len(names) > var_cap:
        raise VariableCapError(f"formula has {len(names)} variables, cap is {var_cap}")


def check_subset_tautology(formula: Formula, var_cap: int = DEFAULT_VARIABLE_CAP) -> TautologyVerdict:
    names = variables(formula)
    _check_vars(names, var_cap)
    for values in itertools.product((True, False), repeat=len(names)):
        valuation = dict(zip(names, values))
        if not eval_truth(formula, valuation):
            return TautologyVerdict(VerdictKind.NOT_SUBSET_TAUTOLOGY, valuation=valuation)
    return TautologyVerdict(VerdictKind.SUBSET_TAUTOLOGY)


def _search(
    formula: Formula,
    names: Sequence[str],
    universe: Universe,
    candidates: Sequence[Partition],
    memo: dict | None,
) -> TautologyVerdict | None:
    for combo in itertools.product(candidates, repeat=len(names)):
        a = Assignment(universe, dict(zip(names, combo)))
        value = eval_partition(formula, a, "graph", memo)
        if not value.is_discrete():
            return TautologyVerdict(VerdictKind.PARTITION_REFUTED, assignment=a, result=value)
    return None


def check_partition_tautology(
    formula: Formula,
    max_n: int = DEFAULT_MAX_N,
    var_cap: int = DEFAULT_VARIABLE_CAP,
    cap: int | None = None,
    prefilter: bool = True,
    memo: bool = True,
) -> TautologyVerdict:
    """Search universes of size ``2..max_n`` for a refuting assignment.

    At each size the ``{0, 1}`` assignments are tried first, then every
    assignment in lexicographic rgs order with variables in order of first
    occurrence.  The first non-discrete result is returned as the witness.
    """
    limit = enumeration_cap() if cap is None else cap
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    if max_n > limit:
        raise CapExceededError(f"max_n={max_n} exceeds the enumeration cap {limit}")
    names = variables(formula)
    _check_vars(names, var_cap)
    cache: dict | None = {} if memo else None
    for n in range(2, max_n + 1):
        universe = Universe.letters(n)
        if prefilter:
            constants = (Partition.indiscrete(universe), Partition.discrete(universe))
            found = _search(formula, names, universe, constants, cache)
            if found:
                return found
        found = _search(formula, names, universe, list(enumerate_partitions(universe, limit)), cache)
        if found:
            return found
    return TautologyVerdict(VerdictKind.NOT_REFUTED_UP_TO, bound=max_n)


def boolean_image(valuation: Mapping[str, bool], universe: Universe) -> Assignment:
    """Map ``T`` to ``1`` and ``F`` to ``0``."""
    top, bottom = Partition.discrete(universe), Partition.indiscrete(universe)
    return Assignment(universe, {k: (top if v else bottom) for k, v in valuation.items()})


@dataclass
class CorpusRow:
    name: str
    text: str
    subset: TautologyVerdict | None = None
    partition: TautologyVerdict | None = None
    error: str | None = None

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "formula": self.text}
        if self.error is not None:
            out["error"] = self.error
            return out
        out["subset"] = self.subset.to_json()
        out["partition"] = self.partition.to_json()
        if self.partition.assignment is not None:
            out["witness"] = self.partition.to_json()["witness"]
        return out


def _check_entry(args) -> tuple[TautologyVerdict | None, TautologyVerdict | None, str | None]:
    formula, max_n = args
    try:
        return check_subset_tautology(formula), check_partition_tautology(formula, max_n), None
    except PartitionLogicError as exc:
        return None, None, f"{type(exc).__name__}: {exc}"


def check_corpus(entries: Iterable[CorpusEntry], max_n: int = DEFAULT_MAX_N, workers: int = 1) -> list[CorpusRow]:
    """Classify every entry; rows follow corpus order whatever ``workers`` is."""
    entries = list(entries)
    rows = [CorpusRow(e.name, e.text) for e in entries]
    jobs = [(i, (e.formula, max_n)) for i, e in enumerate(entries) if e.error is None]
    for row, e in zip(rows, entries):
        if e.error is not None:
            row.error = f"{type(e.error).__name__}: {e.error}"
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_entry, [job for _, job in jobs]))
    else:
        results = [_check_entry(job) for _, job in jobs]
    for (i, _), (subset, partition, error) in zip(jobs, results):
        rows[i].subset, rows[i].partition, rows[i].error = subset, partition, error
    return rows


def bundled_corpus_text() -> str:
    return resources.files("partlogic").joinpath("data/laws.taut").read_text(encoding="utf-8")


def bundled_corpus() -> list[CorpusEntry]:
    return parse_corpus(bundled_corpus_text())


def format_report(rows: Sequence[CorpusRow]) -> str:
    """Aligned text table, one row per corpus entry."""
    table = [("name", "subset", "partition", "witness")]
    for r in rows:
        if r.error is not None:
            table.append((r.name, "error", "error", r.error))
            continue
        witness = ""
        if r.partition.kind is VerdictKind.PARTITION_REFUTED:
            witness = f"n={r.partition.assignment.universe.size} {r.partition.assignment.describe()} => {r.partition.result}"
        partition = r.partition.kind.value
        if r.partition.bound is not None:
            partition += f"({r.partition.bound})"
        table.append((r.name, r.subset.kind.value, partition, witness))
    widths = [max(len(row[i]) for row in table) for i in range(3)]
    lines = []
    for row in table:
        cells = [c.ljust(w) for c, w in zip(row[:3], widths)] + [row[3]]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)
