"""
関係式DSL（字句・構文解析、評価、定数当てはめ）のテスト
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exact import RatMatrix, WorkbenchError, anticommutator, commutator
from relalg import (FIXTURE_NAMES, NO_SOLUTION, SOLVED, UNDERDETERMINED, UNKNOWN, Assignment,
                    BinOp, Name, Neg, NonlinearFitError, Number, ParseError, Power,
                    UndeclaredIdentifierError, UnknownScalarError, check_central, evaluate,
                    evaluate_expression, evaluate_presentation, fit_constants, load_fixture, parse,
                    parse_expression, to_source, tokenize)

A = RatMatrix.diagonal([1, 2])
B = RatMatrix([[0, 1], [1, 0]])
IDENTITY = RatMatrix.identity(2)


def assignment(**scalars):
    return Assignment({"A": A, "B": B}, scalars)


class TestTokenize:
    def test_newline_after_operator_continues(self):
        kinds = [t.kind for t in tokenize("A +\nB = 0")]
        assert "newline" not in kinds

    def test_newline_inside_brackets_continues(self):
        kinds = [t.kind for t in tokenize("[A,\n B] = 0")]
        assert "newline" not in kinds

    def test_plain_newline_separates(self):
        kinds = [t.kind for t in tokenize("A = B\nB = A")]
        assert kinds.count("newline") == 1

    def test_comment_skipped(self):
        tokens = tokenize("A = B  # 注記\n")
        assert [t.text for t in tokens if t.kind != "eof"] == ["A", "=", "B"]

    def test_trailing_newline_not_emitted(self):
        tokens = tokenize("A = B\n\n")
        assert [t.kind for t in tokens][-2:] == ["name", "eof"]
        assert tokens[-1].line == 3

    def test_illegal_character_position(self):
        with pytest.raises(ParseError) as info:
            tokenize("A $ B")
        assert (info.value.line, info.value.column) == (1, 3)


class TestParse:
    def test_headers_and_labels(self):
        pres = parse("gens A B;\nscalars c\ncentral d\nr1: [A, B] = c A + d\nA B = B A")
        assert pres.generators == ("A", "B")
        assert pres.scalar_names == ("c", "d")
        assert pres.identifiers()["d"] == "central"
        assert pres.relation_labels() == ("r1", "r2")

    def test_continuation_lines(self):
        pres = parse("gens A B\nr: A +\n  B =\n  B + A")
        assert len(pres.relations) == 1

    def test_implicit_multiplication(self):
        node = parse_expression("2 A B", ["A", "B"])
        assert node == BinOp("*", BinOp("*", Number(Fraction(2)), Name("A")), Name("B"))

    def test_leading_minus_binds_first_term(self):
        node = parse_expression("-A + B", ["A", "B"])
        assert node == BinOp("+", Neg(Name("A")), Name("B"))

    def test_power_binds_tighter_than_product(self):
        node = parse_expression("A^2 B", ["A", "B"])
        assert node == BinOp("*", Power(Name("A"), 2), Name("B"))

    def test_undeclared_identifier_position(self):
        with pytest.raises(UndeclaredIdentifierError) as info:
            parse("gens A\nr: A = Q")
        assert (info.value.line, info.value.column) == (2, 8)
        assert "Q" in str(info.value)

    @pytest.mark.parametrize("source", [
        "gens A\nA = A^x",
        "gens A\nA = A^1/2",
        "gens A\nA + A",
        "gens A\nA = 3/0",
        "gens A\n[A A] = 0",
        "gens A\nr: A = A\nr: A = 0",
        "gens I",
        "gens A\nscalars A",
        "gens A\nA = A = A",
    ])
    def test_malformed_sources(self, source):
        with pytest.raises(ParseError):
            parse(source)

    def test_error_reports_line(self):
        with pytest.raises(ParseError) as info:
            parse("gens A\n\nA = (A + ")
        assert info.value.line == 3

    @pytest.mark.parametrize("name", FIXTURE_NAMES)
    def test_fixtures_reparse(self, name):
        pres = load_fixture(name)
        again = parse(pres.to_source())
        assert again.relations == pres.relations
        assert again.identifiers() == pres.identifiers()

    def test_unknown_fixture(self):
        with pytest.raises(KeyError):
            load_fixture("nope")


def expression_pairs():
    """(DSLテキスト, 期待される行列) を再帰的に生成"""
    leaves = st.one_of(
        st.sampled_from([("A", A), ("B", B), ("I", IDENTITY)]),
        st.tuples(st.integers(0, 5), st.integers(1, 4)).map(
            lambda nd: (f"{nd[0]}/{nd[1]}", RatMatrix.scalar(2, Fraction(nd[0], nd[1])))),
    )

    def combine(parts):
        op, (sx, mx), (sy, my) = parts
        if op == "+":
            return f"({sx} + {sy})", mx + my
        if op == "-":
            return f"({sx} - {sy})", mx - my
        if op == "*":
            return f"({sx} {sy})", mx @ my
        if op == "[]":
            return f"[{sx}, {sy}]", commutator(mx, my)
        return f"{{{sx}, {sy}}}", anticommutator(mx, my)

    return st.recursive(
        leaves,
        lambda children: st.tuples(st.sampled_from(["+", "-", "*", "[]", "{}"]), children, children).map(combine),
        max_leaves=8,
    )


def expression_texts():
    """べき・並置・先頭の単項マイナスを含む整形式の式テキストを生成"""
    atoms = st.one_of(
        st.sampled_from(["A", "B", "I", "c"]),
        st.tuples(st.integers(0, 12), st.integers(1, 6)).map(
            lambda nd: str(nd[0]) if nd[1] == 1 else f"{nd[0]}/{nd[1]}"),
    )

    def factors(atom):
        return st.tuples(atom, st.integers(0, 3)).map(lambda p: p[0] if p[1] == 0 else f"{p[0]}^{p[1]}")

    def expressions(inner):
        wrapped = st.one_of(
            atoms,
            st.tuples(inner, inner).map(lambda p: f"[{p[0]}, {p[1]}]"),
            st.tuples(inner, inner).map(lambda p: f"{{{p[0]}, {p[1]}}}"),
            inner.map(lambda s: f"({s})"),
        )
        term = st.lists(factors(wrapped), min_size=1, max_size=3).flatmap(
            lambda fs: st.lists(st.sampled_from([" ", " * "]), min_size=len(fs) - 1, max_size=len(fs) - 1).map(
                lambda seps: fs[0] + "".join(sep + f for sep, f in zip(seps, fs[1:]))))
        tail = st.lists(st.tuples(st.sampled_from([" + ", " - "]), term), max_size=2)
        return st.tuples(st.booleans(), term, tail).map(
            lambda p: ("-" if p[0] else "") + p[1] + "".join(op + t for op, t in p[2]))

    return st.recursive(atoms, expressions, max_leaves=10)


class TestRoundTrip:
    @settings(max_examples=150, deadline=None)
    @given(expression_texts())
    def test_print_then_parse_is_fixpoint(self, text):
        node = parse_expression(text, ["A", "B"], ["c"])
        printed = to_source(node)
        assert parse_expression(printed, ["A", "B"], ["c"]) == node
        assert to_source(parse_expression(printed, ["A", "B"], ["c"])) == printed

    def test_leading_minus_and_juxtaposition(self):
        node = parse_expression("-2 A^2 B + c", ["A", "B"], ["c"])
        assert to_source(node) == "-2 * A^2 * B + c"
        assert isinstance(node, BinOp) and isinstance(node.left, Neg)


class TestEvaluate:
    @settings(max_examples=60, deadline=None)
    @given(expression_pairs())
    def test_generated_expressions(self, pair):
        text, expected = pair
        node = parse_expression(text, ["A", "B"])
        assert evaluate_expression(node, assignment()) == expected

    def test_relation_residual(self):
        pres = parse("gens A B\nscalars c\nr: [A, B] = c A")
        residual = evaluate(pres.relations[0], assignment(c=0))
        assert residual == RatMatrix([[0, -1], [1, 0]])

    def test_unknown_scalar_rejected(self):
        pres = parse("gens A B\nscalars c\nr: [A, B] = c A")
        with pytest.raises(UnknownScalarError):
            evaluate(pres.relations[0], assignment(c=UNKNOWN))

    def test_missing_assignment(self):
        pres = parse("gens A B\nscalars c d\nr: A = c A + d B")
        with pytest.raises(WorkbenchError, match="d"):
            evaluate_presentation(pres, assignment(c=1))

    def test_presentation_residuals(self):
        pres = parse("gens A B\nscalars c\nsq: B^2 = c I\nanti: {A, B} = 3 B")
        residuals = evaluate_presentation(pres, assignment(c=1))
        assert all(m.is_zero() for m in residuals.values())


class TestFitConstants:
    def test_unique_solution(self):
        pres = parse("gens A B\nscalars x0 x4\nr: A B - B A = x0 B + x4 [B, A]")
        fit = fit_constants(pres, assignment(x0=UNKNOWN, x4=UNKNOWN))
        assert fit.status == SOLVED
        assert fit.values == {"x0": 0, "x4": -1}
        assert all(fit.residuals_zero.values())

    def test_known_scalar_kept(self):
        pres = parse("gens A B\nscalars c d\nr: {A, B} = c B + d A")
        fit = fit_constants(pres, assignment(c=UNKNOWN, d=0))
        assert fit.unknowns == ("c",)
        assert fit.values == {"c": 3}

    def test_inconsistent_has_witness(self):
        pres = parse("gens A B\nscalars c\nr: [A, B] = c A")
        fit = fit_constants(pres, assignment(c=UNKNOWN))
        assert fit.status == NO_SOLUTION
        assert not fit.solvable
        assert fit.witness["relation"] == "r"
        assert fit.witness["residual"] != "0"

    def test_no_unknowns_failing_relation(self):
        pres = parse("gens A B\nr: A B = B A")
        fit = fit_constants(pres, assignment())
        assert fit.status == NO_SOLUTION
        assert fit.witness["relation"] == "r"

    def test_underdetermined_free_direction(self):
        pres = parse("gens A B\nscalars p q\nr: A = p A + q A")
        fit = fit_constants(pres, assignment(p=UNKNOWN, q=UNKNOWN))
        assert fit.status == UNDERDETERMINED
        assert fit.solvable and not fit.unique
        assert fit.values["p"] + fit.values["q"] == 1
        (direction,) = fit.free_directions
        assert direction["p"] + direction["q"] == 0
        assert "free_directions" in fit.to_dict()

    @pytest.mark.parametrize("relation", ["r: p q A = A", "r: p^2 A = A", "r: (p A) (q B) = A"])
    def test_nonlinear_rejected(self, relation):
        pres = parse(f"gens A B\nscalars p q\n{relation}")
        with pytest.raises(NonlinearFitError):
            fit_constants(pres, assignment(p=UNKNOWN, q=UNKNOWN))

    def test_to_dict_formats_rationals(self):
        pres = parse("gens A B\nscalars c\nr: 2 c A = A")
        data = fit_constants(pres, assignment(c=UNKNOWN)).to_dict()
        assert data["status"] == "solved"
        assert data["values"] == {"c": "1/2"}


class TestCheckCentral:
    def test_scalar_matrix_is_central(self):
        entry = check_central(RatMatrix.scalar(2, 3), {"A": A, "B": B})
        assert entry.verdict == "pass"

    def test_non_central_witness(self):
        entry = check_central(A, {"A": A, "B": B}, suite="demo", check="casimir")
        assert entry.verdict == "fail"
        assert entry.witness["generator"] == "B"
        assert (entry.suite, entry.check) == ("demo", "casimir")

    def test_unnamed_generators(self):
        entry = check_central(B, [B, A])
        assert entry.witness["generator"] == "g2"
