import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partlogic.boolops import AND, BINARY_TABLES, IMP, OR, XOR, apply
from partlogic.core import Partition, Universe, all_partitions
from partlogic.errors import (
    ArityError,
    FormulaSyntaxError,
    MethodUnsupportedError,
    UnboundVariableError,
    UniverseMismatchError,
)
from partlogic.formula import (
    Apply,
    Assignment,
    ConstBottom,
    ConstTop,
    Var,
    eval_partition,
    eval_truth,
    parse,
    parse_corpus,
    to_text,
    variables,
)

from .conftest import formulas

s, p, t = Var("s"), Var("p"), Var("t")
x, y = Var("x"), Var("y")

MODUS_PONENS = "(s & (s -> p)) -> p"
PEIRCE = "((s -> p) -> s) -> s"


class TestParse:
    def test_modus_ponens(self):
        assert parse(MODUS_PONENS) == Apply(IMP, (Apply(AND, (s, Apply(IMP, (s, p)))), p))

    def test_peirce(self):
        assert parse(PEIRCE) == Apply(IMP, (Apply(IMP, (Apply(IMP, (s, p)), s)), s))

    def test_arrow_is_right_associative(self):
        a, b, c = Var("a"), Var("b"), Var("c")
        assert parse("a -> b -> c") == Apply(IMP, (a, Apply(IMP, (b, c))))

    def test_generic_application(self):
        assert parse('op"FTTF"(x,y)') == Apply(XOR, (x, y))
        assert parse('op"FT"(x)').table.arity == 1
        assert parse('op"T"()') == Apply(parse('op"T"()').table, ())

    def test_precedence(self):
        a, b, c = Var("a"), Var("b"), Var("c")
        assert parse("a | b & c") == Apply(OR, (a, Apply(AND, (b, c))))
        assert parse("a & b -> c | a") == Apply(IMP, (Apply(AND, (a, b)), Apply(OR, (c, a))))
        assert parse("a + b + c") == Apply(XOR, (Apply(XOR, (a, b)), c))
        assert parse("a | b | c") == Apply(OR, (Apply(OR, (a, b)), c))

    def test_constants_and_unicode(self):
        assert parse("x ∨ 1") == Apply(OR, (x, ConstTop()))
        assert parse("x ∧ 0") == Apply(AND, (x, ConstBottom()))
        assert parse("x ⊕ y → x") == Apply(IMP, (Apply(XOR, (x, y)), x))

    def test_mixing_or_and_xor_is_rejected(self):
        with pytest.raises(FormulaSyntaxError) as exc:
            parse("a | b + c")
        assert exc.value.position == 6
        assert parse("(a | b) + c") == Apply(XOR, (Apply(OR, (Var("a"), Var("b"))), Var("c")))

    @pytest.mark.parametrize(
        "text,pos",
        [("a &", 3), ("(a | b", 6), ("a ! b", 2), ("a b", 2), ('op"TTX"(a,b)', 0), ("", 0), ("01", 0)],
    )
    def test_syntax_errors_carry_position(self, text, pos):
        with pytest.raises(FormulaSyntaxError) as exc:
            parse(text)
        assert exc.value.position == pos

    def test_generic_arity_error(self):
        with pytest.raises(ArityError):
            parse('op"TTTF"(a)')

    def test_no_negation_token(self):
        with pytest.raises(FormulaSyntaxError):
            parse("~a")

    def test_variables_in_first_occurrence_order(self):
        assert variables(parse("((p | s) & (p | t)) -> (p | (s & t))")) == ["p", "s", "t"]

    @settings(max_examples=300)
    @given(formulas(max_depth=6))
    def test_round_trip(self, f):
        assert parse(to_text(f)) == f

    def test_printer_is_fully_parenthesized(self):
        assert to_text(parse("a -> b -> c")) == "(a -> (b -> c))"
        assert to_text(parse('op"FT"(a)')) == 'op"FT"(a)'


class TestEvalTruth:
    def test_modus_ponens_all_valuations(self):
        f = parse(MODUS_PONENS)
        for vs, vp in itertools.product((True, False), repeat=2):
            assert eval_truth(f, {"s": vs, "p": vp})

    def test_xor_self(self):
        assert eval_truth(parse("s + s"), {"s": True}) is False

    def test_constants(self):
        assert eval_truth(parse("0 -> 1"), {}) is True

    def test_unbound(self):
        with pytest.raises(UnboundVariableError):
            eval_truth(parse("s -> p"), {"s": True})


@pytest.fixture
def example_assignment(abcd, example_pair):
    sigma, pi = example_pair
    return Assignment(abcd, {"s": sigma, "p": pi})


class TestEvalPartition:
    @pytest.mark.parametrize("method", ["graph", "closure", "blocks"])
    def test_worked_example(self, example_assignment, method):
        result = eval_partition(parse("s -> p"), example_assignment, method)
        assert str(result) == "{a,b|c|d}"

    def test_peirce_counterexample(self):
        u = Universe.letters(3)
        a = Assignment(u, {"s": Partition.parse("{a,b|c}", u), "p": Partition.indiscrete(u)})
        result = eval_partition(parse(PEIRCE), a)
        assert str(result) == "{a,b|c}"
        assert not result.is_discrete()

    def test_join_with_one(self):
        for n in range(1, 5):
            u = Universe.letters(n)
            for q in all_partitions(u):
                assert eval_partition(parse("x | 1"), Assignment(u, {"x": q})).is_discrete()

    def test_blocks_method_rejects_other_connectives(self, example_assignment):
        with pytest.raises(MethodUnsupportedError):
            eval_partition(parse("s + p"), example_assignment, "blocks")
        with pytest.raises(MethodUnsupportedError):
            eval_partition(parse('op"TTFT"(s, p)'), example_assignment, "blocks")

    def test_unbound(self, example_assignment):
        with pytest.raises(UnboundVariableError):
            eval_partition(parse("s -> q"), example_assignment)

    def test_assignment_universe_check(self, abcd):
        with pytest.raises(UniverseMismatchError):
            Assignment(abcd, {"s": Partition.discrete(Universe.letters(3))})

    def test_memo_does_not_change_results(self):
        u = Universe.letters(3)
        memo = {}
        f = parse(PEIRCE)
        for a, b in itertools.product(all_partitions(u), repeat=2):
            asg = Assignment(u, {"s": a, "p": b})
            assert eval_partition(f, asg, memo=memo) == eval_partition(f, asg)

    @settings(max_examples=60, deadline=None)
    @given(formulas(max_depth=4, generic=False))
    def test_methods_agree_on_n3(self, f):
        u = Universe.letters(3)
        names = variables(f)
        block_ok = all(
            str(sub.table) in {str(OR), str(AND), str(IMP)} for sub in _subs(f) if isinstance(sub, Apply)
        )
        memo_g, memo_c = {}, {}
        for combo in itertools.product(all_partitions(u), repeat=len(names)):
            a = Assignment(u, dict(zip(names, combo)))
            g = eval_partition(f, a, "graph", memo_g)
            assert g == eval_partition(f, a, "closure", memo_c)
            if block_ok:
                assert g == eval_partition(f, a, "blocks")

    @settings(max_examples=100)
    @given(formulas(max_depth=4), st.data())
    def test_compositionality(self, f, data):
        if not isinstance(f, Apply):
            return
        n = data.draw(st.integers(1, 4))
        u = Universe.letters(n)
        ps = all_partitions(u)
        a = Assignment(u, {v: data.draw(st.sampled_from(ps)) for v in variables(f)})
        args = [eval_partition(sub, a) for sub in f.args]
        assert eval_partition(f, a) == apply(f.table, args, "graph", u)

    @settings(max_examples=200)
    @given(formulas(max_depth=4), st.data())
    def test_two_element_restriction(self, f, data):
        u = Universe.letters(2)
        vals = {v: data.draw(st.booleans()) for v in variables(f)}
        image = {True: Partition.discrete(u), False: Partition.indiscrete(u)}
        a = Assignment(u, {k: image[v] for k, v in vals.items()})
        assert eval_partition(f, a) == image[eval_truth(f, vals)]


def _subs(f):
    yield f
    if isinstance(f, Apply):
        for a in f.args:
            yield from _subs(a)


class TestCorpus:
    def test_parse_corpus(self):
        entries = parse_corpus("# comment\n\nmp: (s & (s -> p)) -> p\nbad: s -> \nnocolon\n")
        assert [e.name for e in entries] == ["mp", "bad", "line5"]
        assert entries[0].formula == parse(MODUS_PONENS)
        assert isinstance(entries[1].error, FormulaSyntaxError)
        assert entries[2].error is not None

    def test_all_binary_connectives_print_and_parse(self):
        for tbl in BINARY_TABLES:
            f = Apply(tbl, (x, y))
            assert parse(to_text(f)) == f
