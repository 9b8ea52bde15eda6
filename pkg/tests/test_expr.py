"""Parsing and rendering of the expression language."""

import random
from fractions import Fraction

import pytest

from qsuper.algebra import (
    AlgebraElement, Monomial, canon_kexp, gen_e, gen_f, gen_k, scalar_element,
)
from qsuper.expr import ExpressionError, parse_expression, render_element
from qsuper.rootdata import build_root_datum
from qsuper.scalars import ONE, ZERO, Scalar

A10 = build_root_datum("A", (1, 0))
B01 = build_root_datum("B", (0, 1))
C2 = build_root_datum("C", (2,))
B11 = build_root_datum("B", (1, 1))
SAMPLE = [A10, B01, C2, B11]


def random_element(dat, rng, max_terms=2, max_len=2, kspan=1):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        f = tuple(rng.randrange(dat.rank) for _ in range(rng.randint(0, max_len)))
        e = tuple(rng.randrange(dat.rank) for _ in range(rng.randint(0, max_len)))
        k = tuple(rng.randint(-kspan, kspan) for _ in range(dat.rank))
        coeff = Scalar.v_power(rng.randint(-2, 2)) * Scalar.from_int(rng.choice([1, -1, 2]))
        m = Monomial((), canon_kexp(dat, k), ())
        el = AlgebraElement(dat, {m: coeff})
        word = AlgebraElement.unit(dat)
        for i in f:
            word = word * gen_f(dat, i)
        word = word * el
        for i in e:
            word = word * gen_e(dat, i)
        for mm, cc in word.terms.items():
            cur = terms.get(mm, ZERO) + cc
            if cur.is_zero():
                terms.pop(mm, None)
            else:
                terms[mm] = cur
    return AlgebraElement(dat, terms)


class TestParse:
    def test_commutator_display(self):
        q, qi = A10.q(1), A10.q(-1)
        got = parse_expression(A10, "E1*F1 - F1*E1")
        expect = (gen_k(A10, (1, 0)) - gen_k(A10, (-1, 0))).scale(
            ONE / (q - qi))
        assert got == expect

    def test_k_zero_is_unit(self):
        assert parse_expression(A10, "K[0,0]") == AlgebraElement.unit(A10)

    def test_dual_basis_vector(self):
        q, qi = A10.q(1), A10.q(-1)
        got = parse_expression(A10, "(q - q^-1)*F1*F2")
        assert got == (gen_f(A10, 0) * gen_f(A10, 1)).scale(q - qi)

    def test_parse_is_linear(self):
        a = parse_expression(C2, "E1*E2 - 2*F1")
        b = parse_expression(C2, "E1*E2") - parse_expression(C2, "F1").scale(
            Scalar.from_int(2))
        assert a == b

    def test_fractional_q_power(self):
        got = parse_expression(A10, "q^(1/2)*K[1,0]")
        assert got == gen_k(A10, (1, 0)).scale(A10.q(Fraction(1, 2)))

    def test_negative_q_power(self):
        assert parse_expression(B01, "q^-2") == scalar_element(B01, B01.q(-2))

    def test_division_by_scalar(self):
        assert parse_expression(A10, "(E1 + E1)/2") == gen_e(A10, 0)

    def test_k_negative_power(self):
        assert parse_expression(A10, "K[1,0]^-2") == gen_k(A10, (-2, 0))
        assert parse_expression(A10, "(2*K[1,2])^-1") == \
            gen_k(A10, (-1, -2)).scale(ONE / Scalar.from_int(2))

    def test_chained_powers(self):
        assert parse_expression(A10, "K[1,0]^2^3") == gen_k(A10, (6, 0))

    def test_unary_minus(self):
        assert parse_expression(A10, "-E1 + E1").is_zero()
        assert parse_expression(A10, "-2") == scalar_element(A10, -2)

    def test_isotropic_square_is_zero(self):
        assert parse_expression(A10, "E2^2").is_zero()
        assert not parse_expression(A10, "E1^2").is_zero()


class TestErrors:
    def test_unknown_generator_index(self):
        with pytest.raises(ExpressionError, match=r"position 0.*no generator 9"):
            parse_expression(A10, "E9")
        with pytest.raises(ExpressionError, match="no generator 3"):
            parse_expression(A10, "F1*F3")
        with pytest.raises(ExpressionError, match="no generator 0"):
            parse_expression(B01, "E0")

    def test_arity_mismatch(self):
        with pytest.raises(ExpressionError,
                           match="arity mismatch at position 0.*expected 2"):
            parse_expression(A10, "K[1]")
        with pytest.raises(ExpressionError, match="expected 1 entries, found 2"):
            parse_expression(B01, "K[1,2]")

    def test_bad_character_position(self):
        with pytest.raises(ExpressionError, match="position 3: unexpected '@'"):
            parse_expression(A10, "E1 @ E2")

    def test_unexpected_end(self):
        with pytest.raises(ExpressionError, match="unexpected end of input"):
            parse_expression(A10, "E1 +")
        with pytest.raises(ExpressionError, match="unexpected end of input"):
            parse_expression(A10, "(E1")

    def test_trailing_tokens(self):
        with pytest.raises(ExpressionError, match="position 3: unexpected 'E1'"):
            parse_expression(A10, "E2 E1")

    def test_nonscalar_divisor(self):
        with pytest.raises(ExpressionError, match="divisor must be a nonzero"):
            parse_expression(A10, "E1/F1")
        with pytest.raises(ExpressionError, match="divisor must be a nonzero"):
            parse_expression(A10, "E1/(q - q)")

    def test_negative_power_needs_invertible(self):
        with pytest.raises(ExpressionError, match="negative powers"):
            parse_expression(A10, "E1^-1")
        with pytest.raises(ExpressionError, match="negative powers"):
            parse_expression(A10, "(K[1,0] + K[0,0])^-1")

    def test_unrepresentable_q_power(self):
        with pytest.raises(ExpressionError, match="position 0"):
            parse_expression(A10, "q^(1/3)")

    def test_empty_input(self):
        with pytest.raises(ExpressionError, match="unexpected end of input"):
            parse_expression(A10, "")


class TestRender:
    def test_zero_and_unit(self):
        assert render_element(AlgebraElement.zero(A10)) == "0"
        assert render_element(AlgebraElement.unit(A10)) == "1"
        assert parse_expression(A10, "0").is_zero()

    def test_round_trip_examples(self):
        for text in ["E1*F1 - F1*E1", "K[0,0]", "(q - q^-1)*F1*F2",
                     "q^(1/2)*K[-1,3] - F2*E1"]:
            elem = parse_expression(A10, text)
            rendered = render_element(elem)
            assert parse_expression(A10, rendered) == elem
            assert render_element(parse_expression(A10, rendered)) == rendered

    @pytest.mark.parametrize("dat", SAMPLE, ids=lambda d: d.descriptor)
    def test_round_trip_random(self, dat):
        rng = random.Random(71)
        for _ in range(40):
            elem = random_element(dat, rng)
            rendered = render_element(elem)
            again = parse_expression(dat, rendered)
            assert again == elem
            assert render_element(again) == rendered
