import itertools

import pytest
from hypothesis import strategies as st

from partlogic.boolops import BINARY_TABLES, TruthTable
from partlogic.core import BinaryRelation, Partition, Universe, all_partitions
from partlogic.formula import Apply, ConstBottom, ConstTop, Var

ABCD = Universe.parse("a,b,c,d")

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, limit): acceptance criterion with a runtime bound in seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or not (report.when == "call" or report.failed):
        return
    detail = dict(report.user_properties).get("detail", "")
    _CRITERIA.append((mark.args[0], report.passed, report.duration, mark.args[1], detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, duration, limit, detail in sorted(_CRITERIA):
        status = "PASS" if passed else "FAIL"
        line = f"{status} criterion {number:>2}: {duration:7.2f}s (limit {limit}s)"
        terminalreporter.write_line(f"{line}  {detail}".rstrip())


@pytest.fixture
def abcd():
    return ABCD


@pytest.fixture
def example_pair():
    """The worked implication example on {a,b,c,d}."""
    sigma = Partition.parse("{a|b,c,d}", ABCD)
    pi = Partition.parse("{a,b|c,d}", ABCD)
    return sigma, pi


def partitions_upto(max_n):
    for n in range(1, max_n + 1):
        yield from all_partitions(Universe.letters(n))


def partition_pairs(ns):
    for n in ns:
        ps = all_partitions(Universe.letters(n))
        yield from itertools.product(ps, repeat=2)


@st.composite
def partitions(draw, n=None, min_n=1, max_n=5):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    labels = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    return Partition.from_labels(Universe.letters(n), labels)


@st.composite
def partition_tuples(draw, k, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(partitions(n=n)) for _ in range(k))


@st.composite
def relations(draw, n=None, max_n=5):
    if n is None:
        n = draw(st.integers(1, max_n))
    u = Universe.letters(n)
    pairs = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
    return BinaryRelation.from_pairs(u, pairs)


@st.composite
def truth_tables(draw, arity):
    return TruthTable(arity, tuple(draw(st.lists(st.booleans(), min_size=1 << arity, max_size=1 << arity))))


def formulas(names=("x", "y", "z"), max_depth=4, connectives=BINARY_TABLES, generic=True):
    leaves = st.one_of(st.sampled_from([Var(n) for n in names]), st.just(ConstTop()), st.just(ConstBottom()))

    def extend(children):
        binary = st.builds(lambda t, a, b: Apply(t, (a, b)), st.sampled_from(list(connectives)), children, children)
        if not generic:
            return binary
        other = st.integers(0, 3).flatmap(
            lambda k: st.builds(
                lambda t, args: Apply(t, tuple(args)),
                truth_tables(k),
                st.lists(children, min_size=k, max_size=k),
            )
        )
        return st.one_of(binary, other)

    return st.recursive(leaves, extend, max_leaves=2**max_depth).filter(lambda f: _depth(f) <= max_depth)


def _depth(f):
    if isinstance(f, Apply) and f.args:
        return 1 + max(_depth(a) for a in f.args)
    return 0
