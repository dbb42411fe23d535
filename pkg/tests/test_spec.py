import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringaut.errors import InvalidSpec, NonMonicModulus, ParseError, SizeCapExceeded
from ringaut.spec import (PolyQuotient, Product, Zmod, characteristic, format_poly,
                          format_spec, parse_spec, quotient, spec_size, validate)


def test_parse_zmod():
    assert parse_spec("Z/4") == Zmod(4)


def test_parse_gf4():
    assert parse_spec("Z/2[x]/(x^2+x+1)") == PolyQuotient(Zmod(2), (1, 1, 1))


def test_parse_product_of_mixed_factors():
    assert parse_spec("Z/4 x Z/2[x]/(x^3)") == Product((Zmod(4), PolyQuotient(Zmod(2), (0, 0, 0, 1))))


def test_nested_products_and_iterated_quotients():
    s = parse_spec("(Z/2 x Z/3) x Z/2[x]/(x^2)[x]/(x^2+x)")
    inner = PolyQuotient(PolyQuotient(Zmod(2), (0, 0, 1)), (0, 1, 1))
    assert s == Product((Product((Zmod(2), Zmod(3))), inner))
    assert spec_size(s) == 6 * 16


def test_quotient_of_parenthesized_product():
    s = parse_spec("(Z/2 x Z/2)[x]/(x^2)")
    assert s == PolyQuotient(Product((Zmod(2), Zmod(2))), (0, 0, 1))
    assert format_spec(s) == "(Z/2 x Z/2)[x]/(x^2)"


@pytest.mark.parametrize("text,modulus", [
    ("Z/3[x]/( x^2 - 1 )", (2, 0, 1)),
    ("Z/3[x]/(-1+x^2)", (2, 0, 1)),
    ("Z/5[x]/(x^2+7x+3)", (3, 2, 1)),
    ("Z/5[x]/(x^2 + 2 * x + 13)", (3, 2, 1)),
    ("Z/4[x]/(5x^2+2)", (2, 0, 1)),      # 5 = 1 in Z/4
    ("Z/2[x]/(x+x+x^2+x^3+x^3)", (0, 0, 1)),
    ("Z/7[x]/(x)", (0, 1)),
])
def test_polynomial_coefficients_are_reduced(text, modulus):
    assert parse_spec(text).modulus == modulus


@pytest.mark.parametrize("text,pos", [
    ("", 0),
    ("Q/4", 0),
    ("Z/", 2),
    ("Z/1", 2),
    ("Z/4 y Z/2", 4),
    ("Z/4[x]/(x^2", 11),
    ("Z/4 x", 4),
    ("(Z/4 x Z/2", 10),
    ("Z/2[x]/(x^^2)", 10),
    ("Z/2[x]/(x 2)", 10),
])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_spec(text)
    assert info.value.position == pos


def test_product_separator_needs_whitespace():
    with pytest.raises(ParseError):
        parse_spec("Z/4xZ/2")


@pytest.mark.parametrize("text", ["Z/4[x]/(2x^2+1)", "Z/6[x]/(3x)", "Z/9[x]/(2x^3+x)"])
def test_non_monic_modulus_rejected(text):
    with pytest.raises(NonMonicModulus):
        parse_spec(text)


def test_monic_after_reduction_accepted():
    # 3 = 1 in Z/2
    assert parse_spec("Z/2[x]/(3x^2+1)") == PolyQuotient(Zmod(2), (1, 0, 1))


def test_degree_zero_modulus_rejected():
    with pytest.raises(InvalidSpec):
        parse_spec("Z/2[x]/(1)")
    with pytest.raises(InvalidSpec):
        parse_spec("Z/2[x]/(2x^2+1)")   # vanishes down to the constant 1


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        parse_spec("Z/2[x]/(x^13)")
    assert spec_size(parse_spec("Z/2[x]/(x^13)", max_size=8192)) == 8192
    with pytest.raises(SizeCapExceeded):
        parse_spec("Z/8 x Z/8", max_size=63)


def test_validate_structural_invariants():
    with pytest.raises(InvalidSpec):
        validate(Zmod(1))
    with pytest.raises(InvalidSpec):
        validate(Product((Zmod(2),)))
    with pytest.raises(NonMonicModulus):
        validate(PolyQuotient(Zmod(4), (1, 2)))
    with pytest.raises(InvalidSpec):
        validate(PolyQuotient(Zmod(4), (5, 1)))  # not reduced


def test_characteristic():
    assert characteristic(parse_spec("Z/4 x Z/6")) == 12
    assert characteristic(parse_spec("Z/9[x]/(x^2)")) == 9


def test_format_poly():
    assert format_poly((1, 1, 1)) == "x^2+x+1"
    assert format_poly((3, 0, 2, 1)) == "x^3+2*x^2+3"
    assert format_poly((0, 1)) == "x"


# -- round trips ------------------------------------------------------------------

def _modulus(base):
    char = characteristic(base)
    return st.integers(1, 3).flatmap(
        lambda d: st.lists(st.integers(0, char - 1), min_size=d, max_size=d)
        .map(lambda lo: quotient(base, lo + [1])))


zmods = st.integers(2, 12).map(Zmod)
leaves = st.one_of(zmods, zmods.flatmap(_modulus))
specs = st.recursive(
    leaves,
    lambda inner: st.one_of(
        st.lists(inner, min_size=2, max_size=3).map(lambda fs: Product(tuple(fs))),
        inner.flatmap(_modulus)),
    max_leaves=4)


@settings(max_examples=300, deadline=None)
@given(specs)
def test_format_then_parse_round_trips(spec):
    text = format_spec(spec)
    assert parse_spec(text, max_size=10 ** 100) == spec


@st.composite
def spaced_poly(draw, char):
    """A modulus written with random spacing, signs and coefficient forms,
    together with the coefficients it denotes."""
    deg = draw(st.integers(1, 3))
    lo = draw(st.lists(st.integers(-2 * char, 2 * char), min_size=deg, max_size=deg))
    terms = [(k, c) for k, c in enumerate(lo) if c != 0] + [(deg, 1 + char * draw(st.integers(0, 2)))]
    order = draw(st.permutations(terms))
    ws = st.sampled_from(["", " ", "  "])
    out = ""
    for n, (k, c) in enumerate(order):
        sign = "-" if c < 0 else "+"
        if n == 0 and sign == "+":
            sign = draw(st.sampled_from(["", "+"]))
        mag = abs(c)
        star = draw(st.sampled_from(["", "*"]))
        if k == 0:
            mono = str(mag)
        else:
            xk = "x" if k == 1 and draw(st.booleans()) else f"x{draw(ws)}^{draw(ws)}{k}"
            mono = xk if mag == 1 and draw(st.booleans()) else f"{mag}{draw(ws)}{star}{draw(ws)}{xk}"
        out += f"{draw(ws)}{sign}{draw(ws)}{mono}"
    coeffs = [0] * (deg + 1)
    for k, c in terms:
        coeffs[k] += c
    return out, tuple(c % char for c in coeffs)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), spaced_poly(n))))
def test_grammar_strings_parse_to_the_intended_modulus(case):
    n, (poly, coeffs) = case
    spec = parse_spec(f"Z/{n}[x]/({poly})", max_size=10 ** 9)
    assert spec == PolyQuotient(Zmod(n), coeffs)
    assert parse_spec(format_spec(spec), max_size=10 ** 9) == spec
