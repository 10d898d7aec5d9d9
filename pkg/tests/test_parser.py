import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import elements
from cuntzcalc import Element, GaussianRational
from cuntzcalc.parser import ExprError, evaluate, parse
from cuntzcalc.theorems import random_element


def run(src: str, n: int = 2, env=None):
    return evaluate(parse(src, n), n, env)


def as_element(value, n: int = 2) -> Element:
    if isinstance(value, Element):
        return value
    return Element.unit(n).scale(value)


def err(src: str, n: int = 2) -> str:
    with pytest.raises(ExprError) as excinfo:
        run(src, n)
    return str(excinfo.value)


class TestExpressions:
    @pytest.mark.parametrize(
        "src, text",
        [
            ("S[1]", "S[1]"),
            ("S[1]S[2]'", "S[1]S[2]'"),
            ("S[1] S[2]'", "S[1]S[2]'"),  # juxtaposition with a space
            ("S[1]*S[2]'", "S[1]S[2]'"),  # explicit star is the same product
            ("(S[1]S[2])'", "S[1,2]'"),  # adjoint of the composite word
            ("-S[1]", "(-1)*S[1]"),
            ("2*S[1] - 3*S[2]", "(2)*S[1] + (-3)*S[2]"),
            ("S[1](S[1]'S[1])S[2]'", "S[1]S[2]'"),
            ("S[1,2,1]S[2,1]'", "S[1,2,1]S[2,1]'"),
            ("(3/5+4/5*i)*S[1,2]", "(3/5+4/5*i)*S[1,2]"),
        ],
    )
    def test_element_results(self, src, text):
        assert str(run(src)) == text

    @pytest.mark.parametrize(
        "src, text",
        [
            ("1/2 + 1/2", "1"),
            ("i i", "-1"),
            ("(1+i)'", "1-i"),
            ("phi(S[1]S[1]')", "1/2"),
            ("inner(S[1]+i*S[2], S[1])", "1"),
            ("inner(S[1], i*S[1])", "-i"),
        ],
    )
    def test_scalar_results(self, src, text):
        assert str(run(src)) == text

    def test_adjoint_binds_tighter_than_product(self):
        # S[1]S[2]' is S_1 * (S_2)!*, not (S_1 S_2)*
        assert run("S[1]S[2]'") != run("(S[1]S[2])'")

    def test_rank_is_honoured(self):
        assert str(run("S[3]", n=3)) == "S[3]"


class TestMapCalls:
    def test_builtin_maps(self):
        assert str(run("apply(Phi, S[1]S[1]')")) == "S[1,1]S[1,1]' + S[2,1]S[2,1]'"
        assert str(run("apply(Psi, S[1]S[1]')")) == "(1/2)*1"
        assert str(run("apply(id, S[1,2]')")) == "S[1,2]'"

    def test_compression(self):
        assert str(run("apply(ad(S[1]), 1)")) == "S[1]S[1]'"
        assert str(run("apply(ad(S[1]'), S[1]S[1]')")) == "1"

    def test_kraus(self):
        out = run("apply(kraus((1/2,S[1]),(1/2,S[2])), S[1]S[1]')")
        assert str(out) == "(1/2)*S[1,1]S[1,1]' + (1/2)*S[2,1]S[2,1]'"

    def test_hom(self):
        assert str(run("apply(hom(S[2],S[1]), S[1,2])")) == "S[2,1]"

    def test_compose_applies_right_map_first(self):
        out = run("apply(compose(Phi, ad(S[1]')), S[1]S[1]')")
        assert as_element(out).equals(Element.unit(2))

    def test_sum(self):
        out = run("apply(sum(ad(S[1]),ad(S[2])), S[2]S[2]')")
        assert str(out) == "S[1,2]S[1,2]' + S[2,2]S[2,2]'"

    def test_qfree(self):
        out = run("apply(qfree([[3/5,4/5],[-4/5,3/5]]), S[1])")
        assert str(out) == "(3/5)*S[1] + (-4/5)*S[2]"

    def test_nested_calls(self):
        assert str(run("phi(apply(Phi, S[2]S[2]'))")) == "1/2"


class TestErrors:
    @pytest.mark.parametrize(
        "src, message",
        [
            ("S[1]]", "line 1, col 5: unexpected ']' after expression"),
            ("2/0", "line 1, col 3: zero denominator"),
            ("(S[1]", "line 1, col 6: expected ')', got 'end of input'"),
            ("S[0]", "line 1, col 3: unknown generator index 0 for rank 2"),
            ("S[1,]", "line 1, col 5: expected a generator index, got ']'"),
            ("Phi", "line 1, col 1: 'Phi' is not valid here"),
            ("kraus((1/2,S[1]))", "line 1, col 1: 'kraus' is not valid here"),
            ("x", "line 1, col 1: unbound name 'x'"),
            ("1 +", "line 1, col 4: expected an expression, got 'end of input'"),
            ("apply(Phi)", "line 1, col 10: expected ',', got ')'"),
            ("inner(S[1])", "line 1, col 11: expected ',', got ')'"),
        ],
    )
    def test_positions_and_messages(self, src, message):
        assert err(src) == message

    def test_generator_index_respects_rank(self):
        assert "unknown generator index 3 for rank 2" in err("S[3]")
        assert str(run("S[3]", n=3)) == "S[3]"

    def test_map_construction_failures_carry_position(self):
        assert err("apply(kraus((-1,S[1])), 1)") == (
            "line 1, col 7: Kraus weights must be positive, got -1"
        )
        assert "col 7" in err("apply(qfree([[1,1],[0,1]]), S[1])")
        assert "col 7" in err("apply(hom(S[1],S[1]), S[1])")

    def test_unexpected_character(self):
        message = err("S[1] @ S[2]")
        assert "unexpected character" in message and "'@'" in message


class TestEnvironment:
    def test_bound_names_resolve(self):
        x = Element.generator(2, 1) + Element.generator(2, 2)
        out = run("phi(x x')", env={"x": x})
        assert str(out) == "1"

    def test_bindings_do_not_shadow_reserved(self):
        # S and phi stay grammar; a stray binding cannot repurpose them
        assert str(run("phi(S[1]S[1]')", env={"y": Element.unit(2)})) == "1/2"


class TestRoundTrip:
    @pytest.mark.parametrize(
        "src",
        [
            "S[1]",
            "S[1]S[2]'",
            "(1/2)*1",
            "(3/5+4/5*i)*S[1,2]",
            "S[1]S[1]' + S[2]S[2]'",
            "(-1)*S[1]",
            "(2)*S[1] + (-3)*S[2]",
        ],
    )
    def test_printed_form_is_stable(self, src):
        value = run(src)
        assert str(run(str(value))) == str(value)

    @given(elements(2, max_len=2))
    def test_str_parse_evaluate_is_identity(self, e):
        back = as_element(run(str(e)))
        assert back.equals(e)

    def test_seeded_random_elements_round_trip(self):
        rng = random.Random(2024)
        for _ in range(25):
            e = random_element(rng, 2, max_len=3, terms=4)
            back = as_element(run(str(e)))
            assert back.equals(e)
            assert str(back) == str(e)
