"""Expression parsing, rendering round-trips, and evaluation."""

from __future__ import annotations

import random

import pytest

from icosym.chartab import IRREP_NAMES, default_table
from icosym.repexpr import (
    Atom,
    DimensionError,
    Dual,
    ParseError,
    Plus,
    Sym,
    Tensor,
    decompose_text,
    evaluate,
    parse,
    render,
)

TAB = default_table()


class TestParsing:
    def test_atom(self):
        assert parse("U") == Atom("U")

    @pytest.mark.parametrize("name", IRREP_NAMES)
    def test_all_names_parse(self, name):
        assert parse(name) == Atom(name)

    def test_primes_are_part_of_the_name(self):
        assert parse("X''") == Atom("X''")
        assert parse("W'") == Atom("W'")

    def test_sym(self):
        assert parse("sym^5(X')") == Sym(5, Atom("X'"))

    def test_dual(self):
        assert parse("dual(X2)") == Dual(Atom("X2"))

    def test_tensor_binds_tighter_than_plus(self):
        assert parse("U + V*W") == Plus(Atom("U"), Tensor(Atom("V"), Atom("W")))
        assert parse("U*V + W") == Plus(Tensor(Atom("U"), Atom("V")), Atom("W"))

    def test_left_associativity(self):
        assert parse("U + V + W") == Plus(Plus(Atom("U"), Atom("V")), Atom("W"))
        assert parse("U*V*W") == Tensor(Tensor(Atom("U"), Atom("V")), Atom("W"))

    def test_parens_override_precedence(self):
        assert parse("(U + V)*W") == Tensor(Plus(Atom("U"), Atom("V")), Atom("W"))

    def test_whitespace_is_free(self):
        assert parse(" sym^2( X' ) * V ") == parse("sym^2(X')*V")

    def test_nested(self):
        expr = parse("dual(sym^3(X'') + V)*X1")
        assert expr == Tensor(
            Dual(Plus(Sym(3, Atom("X''")), Atom("V"))), Atom("X1")
        )


class TestParseErrors:
    def test_unknown_name_is_reported_with_column(self):
        with pytest.raises(ParseError) as err:
            parse("U + Q")
        assert err.value.column == 5
        assert "unknown name 'Q'" in str(err.value)

    def test_line_numbers_in_multiline_input(self):
        with pytest.raises(ParseError) as err:
            parse("U +\n  Z2")
        assert err.value.line == 2
        assert err.value.column == 3

    def test_missing_paren(self):
        with pytest.raises(ParseError, match="expected '\\)'"):
            parse("sym^2(X'")

    def test_missing_power(self):
        with pytest.raises(ParseError, match="integer power"):
            parse("sym^(X')")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError, match="trailing"):
            parse("U V")

    def test_dangling_operator(self):
        with pytest.raises(ParseError, match="expected an expression"):
            parse("U +")

    def test_stray_character(self):
        with pytest.raises(ParseError, match="unexpected character"):
            parse("U & V")

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse("")


def random_expr(rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.3:
        return Atom(rng.choice(IRREP_NAMES))
    kind = rng.choice(["sym", "dual", "tensor", "plus"])
    if kind == "sym":
        # keep arguments 2-dimensional so the tree also evaluates
        base = Atom(rng.choice(["X'", "X''"]))
        return Sym(rng.randrange(0, 6), base)
    if kind == "dual":
        return Dual(random_expr(rng, depth - 1))
    left = random_expr(rng, depth - 1)
    right = random_expr(rng, depth - 1)
    return Tensor(left, right) if kind == "tensor" else Plus(left, right)


class TestRenderRoundTrip:
    @pytest.mark.parametrize(
        "text",
        [
            "U",
            "sym^5(X')",
            "dual(W')",
            "U + V*W",
            "(U + V)*W",
            "U*V*W + X1",
            "sym^2(X'')*sym^3(X')",
        ],
    )
    def test_parse_render_parse(self, text):
        expr = parse(text)
        assert parse(render(expr)) == expr

    def test_random_trees_round_trip(self):
        rng = random.Random(20260819)
        for _ in range(200):
            expr = random_expr(rng, 4)
            assert parse(render(expr)) == expr

    def test_right_nested_trees_keep_their_shape(self):
        expr = Plus(Atom("U"), Plus(Atom("V"), Atom("W")))
        assert render(expr) == "U + (V + W)"
        assert parse(render(expr)) == expr
        expr = Tensor(Atom("U"), Tensor(Atom("V"), Atom("W")))
        assert render(expr) == "U*(V*W)"
        assert parse(render(expr)) == expr


class TestEvaluation:
    def test_atom_evaluates_to_its_row(self):
        assert evaluate(parse("W'"), TAB) == TAB.row("W'")

    def test_spec_identity_sym5(self):
        assert evaluate(parse("sym^5(X')"), TAB) == TAB.row("W")

    def test_sum_and_product(self):
        f = evaluate(parse("X' * X''"), TAB)
        assert TAB.decompose(f) == {"X2": 1}
        g = evaluate(parse("X' * X'' + U"), TAB)
        assert TAB.decompose(g) == {"X2": 1, "U": 1}

    def test_dual_fixes_real_rows(self):
        for name in IRREP_NAMES:
            assert evaluate(parse(f"dual({name})"), TAB) == TAB.row(name)

    def test_sym_on_wrong_dimension_is_a_semantic_error(self):
        expr = parse("sym^2(W)")
        with pytest.raises(DimensionError, match="dimension 6"):
            evaluate(expr, TAB)

    def test_sym_accepts_composite_two_dimensional_arguments(self):
        f = evaluate(parse("sym^2(dual(X'))"), TAB)
        assert TAB.decompose(f) == {"W'": 1}

    def test_decompose_text(self):
        _, mults = decompose_text("sym^6(X')", TAB)
        assert mults == {"W''": 1, "X2": 1}

    def test_decompose_text_spec_example(self):
        _, mults = decompose_text("sym^5(X')", TAB)
        assert mults == {"W": 1}
