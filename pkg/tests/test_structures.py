import itertools

import pytest

from partlogic.boolops import implication_blocks, join_blocks, meet_blocks
from partlogic.core import Partition, Universe, all_partitions, refines
from partlogic.errors import CapExceededError, NotInCoreError
from partlogic.structures import (
    boolean_core,
    check_powerset_embedding,
    core_negation,
    corelation_of,
    in_core,
    subset_of_corelation,
)

from .conftest import partitions_upto

BASES = list(partitions_upto(3))


class TestBooleanCore:
    def test_core_of_one(self):
        for n in range(1, 5):
            one = Partition.discrete(Universe.letters(n))
            assert boolean_core(one).members == (one,)

    def test_core_of_zero_n2(self):
        u = Universe.letters(2)
        zero, one = Partition.indiscrete(u), Partition.discrete(u)
        assert set(boolean_core(zero).members) == {zero, one}

    def test_core_of_empty_corelation(self):
        pi = corelation_of(Universe.letters(2), set()).partition
        core = boolean_core(pi)
        assert len(core) == 4
        assert set(core.members) == {corelation_of(Universe.letters(2), s).partition for s in [(), (0,), (1,), (0, 1)]}

    @pytest.mark.parametrize("pi", BASES, ids=str)
    def test_invariants(self, pi):
        core = boolean_core(pi)
        one = Partition.discrete(pi.universe)
        assert one in core and pi in core
        assert core.top == one and core.bottom == pi
        for tau in core.members:
            assert refines(pi, tau)
            assert in_core(tau, pi)
        others = [q for q in all_partitions(pi.universe) if q not in core.members]
        assert not any(in_core(q, pi) for q in others)

    @pytest.mark.parametrize("pi", BASES, ids=str)
    def test_closure_complements_distributivity(self, pi):
        core = boolean_core(pi)
        members = set(core.members)
        one = core.top
        for tau, rho in itertools.product(core.members, repeat=2):
            assert join_blocks(tau, rho) in members
            assert meet_blocks(tau, rho) in members
            assert implication_blocks(tau, rho) in members
        for tau in core.members:
            neg = core_negation(tau, pi)
            assert join_blocks(tau, neg) == one
            assert meet_blocks(tau, neg) == pi
            assert core_negation(neg, pi) == tau
        for tau, rho, chi in itertools.product(core.members, repeat=3):
            assert meet_blocks(tau, join_blocks(rho, chi)) == join_blocks(meet_blocks(tau, rho), meet_blocks(tau, chi))

    def test_negation_of_top_and_bottom(self):
        for pi in partitions_upto(4):
            one = Partition.discrete(pi.universe)
            assert core_negation(one, pi) == pi
            assert core_negation(pi, pi) == one

    def test_not_in_core(self):
        u = Universe.letters(3)
        pi = Partition.parse("{a,b|c}", u)
        with pytest.raises(NotInCoreError):
            core_negation(Partition.indiscrete(u), pi)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            boolean_core(Partition.discrete(Universe(11)))


class TestCorelation:
    U = Universe.parse("a,b")

    def test_empty_subset(self):
        c = corelation_of(self.U, set())
        assert str(c.partition) == "{a,a*|b,b*}"
        assert c.doubled_universe.size == 4

    def test_one_element(self):
        assert str(corelation_of(self.U, {0}).partition) == "{a|b,b*|a*}"

    def test_everything(self):
        assert corelation_of(self.U, {0, 1}).partition.is_discrete()

    def test_bad_index(self):
        with pytest.raises(IndexError):
            corelation_of(self.U, {2})

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_faithful(self, n):
        u = Universe.letters(n)
        subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]
        images = [corelation_of(u, s).partition for s in subsets]
        assert len(set(images)) == len(subsets)
        for s, img in zip(subsets, images):
            assert subset_of_corelation(img, u) == s


class TestEmbedding:
    @pytest.mark.parametrize("n,pairs", [(1, 4), (2, 16), (3, 64)])
    def test_all_laws_pass(self, n, pairs):
        report = check_powerset_embedding(Universe.letters(n))
        assert report.passed, [law for law in report.laws if not law.passed]
        assert len(report.members) == 2**n
        assert next(law for law in report.laws if law.name == "join is union").checked == pairs

    def test_cap(self):
        with pytest.raises(CapExceededError):
            check_powerset_embedding(Universe.letters(4))

    def test_json(self):
        data = check_powerset_embedding(Universe.letters(1)).to_json()
        assert data["passed"] is True
        assert len(data["members"]) == 2
