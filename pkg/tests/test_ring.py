import random

import numpy as np
import pytest

from oracles import OracleRing
from ringaut.catalog import EXTRA_EXAMPLES, catalog_specs
from ringaut.errors import IndexOutOfRange, LemmaViolation, SizeCapExceeded
from ringaut.ring import (FiniteRing, classify_element, construct_ring, nilradical,
                          ring_profile, verify_ring_axioms)
from ringaut.spec import Zmod, format_spec, parse_spec

SMALL = ["Z/2", "Z/6", "Z/8", "Z/12", "Z/2[x]/(x^2+x+1)", "Z/3[x]/(x^2+1)", "Z/2[x]/(x^3)",
         "Z/4[x]/(x^2)", "Z/3[x]/(x^2+2)", "Z/2 x Z/3", "Z/2 x Z/2 x Z/2", "Z/4 x Z/2[x]/(x^2)",
         "Z/2[x]/(x^2+x+1)[x]/(x^2)", "(Z/2 x Z/2)[x]/(x^2+1)", "Z/4[x]/(x^2+2*x+3)"]


def ring(text):
    return construct_ring(parse_spec(text))


@pytest.mark.parametrize("text", SMALL)
def test_tables_match_oracle_arithmetic(text):
    R = ring(text)
    O = OracleRing(R.spec)
    assert sorted(R.labels) == sorted(O.label(v) for v in O.elements)
    idx = [R.element(O.label(v)) for v in O.elements]
    for a, va in zip(idx, O.elements):
        for b, vb in zip(idx, O.elements):
            assert R.label(R.add(a, b)) == O.label(O.add(va, vb))
            assert R.label(R.mul(a, b)) == O.label(O.mul(va, vb))
    assert R.label(R.one) == O.label(O.one)
    assert R.label(R.zero) == O.label(O.zero)


@pytest.mark.parametrize("text", ["Z/2[x]/(x^12)", "Z/4 x Z/4[x]/(x^2) x Z/16",
                                  "Z/3[x]/(x^7+2x+1)", "Z/2[x]/(x^2+x+1)[x]/(x^6+x)"])
def test_large_tables_match_oracle_on_samples(text):
    R = ring(text)
    assert R.size > 1000
    O = OracleRing(R.spec)
    vals = {O.label(v): v for v in O.elements}
    rng = random.Random(7)
    for _ in range(3000):
        a, b = rng.randrange(R.size), rng.randrange(R.size)
        va, vb = vals[R.label(a)], vals[R.label(b)]
        assert R.label(R.add(a, b)) == O.label(O.add(va, vb))
        assert R.label(R.mul(a, b)) == O.label(O.mul(va, vb))


def test_zmod4_labels():
    R = ring("Z/4")
    assert R.size == 4 and R.labels == ("0", "1", "2", "3")


def test_gf4_is_a_field():
    R = ring("Z/2[x]/(x^2+x+1)")
    assert R.size == 4
    assert all(classify_element(R, a).is_unit for a in range(R.size) if a != R.zero)


def test_z4_eps_is_local_with_maximal_ideal_2_x():
    R = ring("Z/4[x]/(x^2)")
    assert R.size == 16
    prof = ring_profile(R)
    assert prof.is_local
    # the ideal (2, x): constant term even
    expected = {a for a in range(R.size) if int(R.label(a)[1:-1].split(",")[0]) % 2 == 0}
    nonunits = set(range(R.size)) - set(prof.units)
    assert nonunits == expected
    O = OracleRing(R.spec)
    (m,) = O.maximal_ideals()
    assert {R.element(O.label(v)) for v in m} == expected


def test_structured_labels():
    assert ring("Z/2[x]/(x^2)").labels == ("(0,0)", "(1,0)", "(0,1)", "(1,1)")
    assert ring("Z/2 x Z/3").labels[:4] == ("(0,0)", "(0,1)", "(0,2)", "(1,0)")
    assert ring("Z/2[x]/(x^2+x+1)[x]/(x^2)").label(5) == "((1,0),(1,0))"


def test_classify_examples():
    assert classify_element(ring("Z/4"), 3) == classify_element(ring("Z/4"), 3).__class__(3, True, False, None)
    p = classify_element(ring("Z/8"), 2)
    assert (p.is_unit, p.is_zero_divisor, p.nilpotency_index) == (False, True, 3)
    R = ring("Z/2 x Z/2")
    p = classify_element(R, R.element("(1,0)"))
    assert (p.is_unit, p.is_zero_divisor, p.nilpotency_index) == (False, True, None)


def test_classify_rejects_bad_index():
    R = ring("Z/4")
    for bad in (-1, 4, 1.5, "1"):
        with pytest.raises(IndexOutOfRange):
            classify_element(R, bad)
    with pytest.raises(IndexOutOfRange):
        R.element("7")


def test_profile_examples():
    p = ring_profile(ring("Z/8"))
    assert (p.is_local, p.is_d_ring, p.is_total_ring_of_fractions) == (True, True, True)
    assert p.nilradical == (0, 2, 4, 6)
    for text in ("Z/2 x Z/3", "Z/6"):
        p = ring_profile(ring(text))
        assert (p.is_local, p.is_d_ring, p.is_total_ring_of_fractions) == (False, False, True)


def test_nilradical_examples():
    assert nilradical(ring("Z/4")) == (0, 2)
    assert nilradical(ring("Z/2[x]/(x^2+x+1)")) == (0,)
    R = ring("Z/2[x]/(x^3)")
    assert {R.label(a) for a in nilradical(R)} == {"(0,0,0)", "(0,1,0)", "(0,0,1)", "(0,1,1)"}


def _profile_cases():
    out = [format_spec(s) for s in catalog_specs(32)] + list(EXTRA_EXAMPLES.values())
    return out + ["Z/2 x Z/4", "Z/3 x Z/3", "Z/2 x Z/2[x]/(x^2)", "Z/4[x]/(x^2+1)"]


@pytest.mark.parametrize("text", _profile_cases())
def test_profile_against_oracle_definitions(text):
    R = ring(text)
    O = OracleRing(R.spec)
    prof = ring_profile(R)
    by_index = {R.element(O.label(v)): v for v in O.elements}
    units = {a for a, v in by_index.items() if O.is_unit(v)}
    zds = {a for a, v in by_index.items() if O.is_zero_divisor(v)}
    nil = {a for a, v in by_index.items() if O.nilpotency_index(v) is not None}
    assert set(prof.units) == units
    assert set(prof.zero_divisors) == zds
    assert set(prof.nilradical) == nil
    # finite commutative partition
    assert units | zds == set(range(R.size)) and not units & zds
    assert prof.is_total_ring_of_fractions
    if R.size <= 32:
        assert prof.is_local == (len(O.maximal_ideals()) == 1)
    assert prof.is_d_ring == prof.is_local
    if prof.is_d_ring:
        assert all(a in units or a in nil for a in range(R.size))
        assert nil == set(range(R.size)) - units
    for a in range(R.size):
        e = classify_element(R, a)
        assert e.is_unit != e.is_zero_divisor
        assert e.nilpotency_index == O.nilpotency_index(by_index[a])
        if e.nilpotency_index is not None:
            assert e.is_zero_divisor


def test_construct_is_cached_and_immutable():
    R = ring("Z/9")
    assert R is ring("Z/9")
    with pytest.raises(ValueError):
        R.mul_table[0, 0] = 3


def test_size_cap_on_construct():
    with pytest.raises(SizeCapExceeded):
        construct_ring(Zmod(5000))
    assert construct_ring(Zmod(5000), max_size=5000).size == 5000


def test_axiom_checker_catches_corrupted_tables():
    R = ring("Z/6")
    mul = R.mul_table.copy()
    mul[2, 3] = mul[3, 2] = 1
    bad = FiniteRing(R.spec, R.add_table.copy(), mul, R.labels, R.one)
    with pytest.raises(LemmaViolation):
        verify_ring_axioms(bad)
    add = R.add_table.copy()
    add[1, 1] = 3
    bad = FiniteRing(R.spec, add, R.mul_table.copy(), R.labels, R.one)
    with pytest.raises(LemmaViolation):
        verify_ring_axioms(bad)


def test_power_neg_from_int():
    R = ring("Z/2[x]/(x^2+x+1)")
    x = R.element("(0,1)")
    assert R.power(x, 3) == R.one
    assert R.from_int(3) == R.one
    S = ring("Z/7")
    assert [S.neg(a) for a in range(7)] == [0, 6, 5, 4, 3, 2, 1]
    assert np.array_equal(R.add_table, R.add_table.T)
