import itertools
import random

import pytest

from oracles import cyclic_group, transformation_monoid_t2
from ringaut.errors import (CentralityViolation, ContextMismatch, EntrySignatureMismatch,
                            NotAnEndomorphism, NotAnInversePair)
from ringaut.homs import (MonoidHom, compose, enumerate_automorphisms, enumerate_homs,
                          identity_hom, trivial_hom)
from ringaut.matrix import (HomMatrix, ProductContext, enumerate_matrices, identity_matrix,
                            inverse_pair_check, inverse_relations, make_matrix, odot, psi,
                            psi_inv, unit_factor_check)
from ringaut.ring import construct_ring
from ringaut.spec import parse_spec


def M(text):
    return construct_ring(parse_spec(text)).monoid


def ctx(*texts):
    return ProductContext([M(t) for t in texts])


def swap_map(c):
    P = c.product
    return MonoidHom(P, P, [P.compose_tuple(reversed(P.decompose(x))) for x in range(P.size)])


@pytest.mark.parametrize("c", [
    lambda: ctx("Z/2", "Z/4"), lambda: ctx("Z/4", "Z/4"), lambda: ctx("Z/2", "Z/3", "Z/4"),
    lambda: ProductContext([transformation_monoid_t2(), cyclic_group(3)]),
])
def test_context_invariants(c):
    c = c()
    c.check_invariants()
    for i, p in enumerate(c.projections):
        for j, q in enumerate(c.injections):
            comp = compose(p, q)
            assert comp.is_identity if i == j else comp.is_trivial


def test_make_matrix_examples():
    c = ctx("Z/4", "Z/4")
    I = identity_matrix(c)
    assert make_matrix(c, I.entries) == I
    A = make_matrix(c, [[identity_hom(c.factors[0])] * 2, [trivial_hom(c.factors[0], c.factors[1])] * 2])
    assert not A.is_diagonal
    # commutative factors: every grid of homs is valid
    assert len(enumerate_matrices(c)) == 5 ** 4


def test_make_matrix_rejects_wrong_signatures():
    c = ctx("Z/2", "Z/4")
    Z2, Z4 = c.factors
    with pytest.raises(EntrySignatureMismatch):
        make_matrix(c, [[identity_hom(Z2), trivial_hom(Z2, Z2)],
                        [trivial_hom(Z2, Z4), identity_hom(Z4)]])
    with pytest.raises(EntrySignatureMismatch):
        make_matrix(c, [[identity_hom(Z2)]])


def test_row_centrality_enforced_for_noncommutative_factor():
    T = transformation_monoid_t2()
    c = ProductContext([T, T])
    idT, eeT = identity_hom(T), trivial_hom(T, T)
    with pytest.raises(CentralityViolation):
        make_matrix(c, [[idT, idT], [eeT, eeT]])
    # column-wise repetition is fine: the row condition is what is required
    A = make_matrix(c, [[idT, eeT], [idT, eeT]])
    assert psi(c, psi_inv(A)) == A
    valid = enumerate_matrices(c)
    End = enumerate_homs(c.product, c.product)
    assert len(valid) == len(End)
    assert {psi(c, t) for t in End} == set(valid)


def test_odot_identity_laws_and_associativity():
    c = ctx("Z/2", "Z/4")
    mats = enumerate_matrices(c)
    I = identity_matrix(c)
    for A in mats:
        assert odot(A, I) == A and odot(I, A) == A
    rng = random.Random(3)
    for _ in range(200):
        A, B, C = (rng.choice(mats) for _ in range(3))
        assert odot(odot(A, B), C) == odot(A, odot(B, C))


def test_odot_tracks_composition_on_random_pairs():
    c = ctx("Z/2", "Z/4")
    End = enumerate_homs(c.product, c.product)
    rng = random.Random(11)
    for _ in range(300):
        s, t = rng.choice(End), rng.choice(End)
        assert psi(c, compose(s, t)) == odot(psi(c, s), psi(c, t))


def test_odot_order_independent_noncommutative():
    c = ProductContext([transformation_monoid_t2(), cyclic_group(2), cyclic_group(3)])
    mats = enumerate_matrices(c)
    rng = random.Random(5)
    for _ in range(100):
        A, B = rng.choice(mats), rng.choice(mats)
        assert odot(A, B) == odot(A, B, order=[2, 1, 0]) == odot(A, B, order=[1, 0, 2])


def test_odot_context_mismatch():
    with pytest.raises(ContextMismatch):
        odot(identity_matrix(ctx("Z/2", "Z/4")), identity_matrix(ctx("Z/2", "Z/4")))


def test_psi_examples():
    c = ctx("Z/4", "Z/4")
    assert psi(c, identity_hom(c.product)) == identity_matrix(c)
    S = psi(c, swap_map(c))
    assert S[0, 0].is_trivial and S[1, 1].is_trivial
    assert S[0, 1].is_identity and S[1, 0].is_identity


def test_psi_rejects_non_endomorphisms():
    c = ctx("Z/2", "Z/4")
    with pytest.raises(NotAnEndomorphism):
        psi(c, identity_hom(M("Z/8")))
    bad = MonoidHom(c.product, c.product, [0] * c.product.size, check=False)
    with pytest.raises(NotAnEndomorphism):
        psi(c, bad)


def test_psi_inv_examples():
    c = ctx("Z/2", "Z/4", "Z/8")
    assert psi_inv(identity_matrix(c)).is_identity
    auts = [enumerate_automorphisms(F) for F in c.factors]
    P = c.product
    for diag in itertools.product(*auts):
        A = make_matrix(c, [[diag[i] if i == j else trivial_hom(c.factors[j], c.factors[i])
                             for j in range(3)] for i in range(3)])
        theta = psi_inv(A)
        for x in range(P.size):
            parts = P.decompose(x)
            assert P.decompose(theta(x)) == tuple(d(p) for d, p in zip(diag, parts))


def test_psi_round_trips_over_z2_z4():
    c = ctx("Z/2", "Z/4")
    for A in enumerate_matrices(c):
        assert psi(c, psi_inv(A)) == A
    for t in enumerate_homs(c.product, c.product):
        assert psi_inv(psi(c, t)) == t


def test_inverse_pair_examples():
    c = ctx("Z/4", "Z/4")
    I = identity_matrix(c)
    assert inverse_pair_check(I, I)
    S = psi(c, swap_map(c))
    assert inverse_pair_check(S, S)
    rel = inverse_relations(S, I)
    assert not rel["AB_diagonal_identity"] and not rel["AB_offdiagonal_trivial"]
    d = ctx("Z/2", "Z/4")
    for t in enumerate_automorphisms(d.product):
        assert inverse_pair_check(psi(d, t), psi(d, t.inverse()))


@pytest.mark.parametrize("factors", [("Z/2", "Z/2"), ("Z/2", "Z/3"), ("Z/2", "Z/4"), ("Z/3", "Z/3")])
def test_matrix_invertible_iff_endomorphism_bijective(factors):
    c = ctx(*factors)
    mats = enumerate_matrices(c)
    I = identity_matrix(c)
    for A in mats:
        has_inverse = any(odot(A, B) == I and odot(B, A) == I for B in mats)
        assert has_inverse == psi_inv(A).is_bijective


@pytest.mark.parametrize("factors", [("Z/2", "Z/4"), ("Z/4", "Z/4"), ("Z/2", "Z/2", "Z/3"),
                                     ("Z/2", "Z/4", "Z/8"), ("Z/3", "Z/3")])
def test_unit_factor_check_and_unit_valued_inverse_entries(factors):
    c = ctx(*factors)
    F = c.factors
    for t in enumerate_automorphisms(c.product):
        A, B = psi(c, t), psi(c, t.inverse())
        assert unit_factor_check(A, B)
        for i in range(c.n):
            if A[i, i].is_bijective:
                for j in range(c.n):
                    if j != i:
                        assert set(B[i, j].image) <= set(F[i].units)


def test_unit_factor_check_needs_inverse_pair():
    c = ctx("Z/4", "Z/4")
    with pytest.raises(NotAnInversePair):
        unit_factor_check(identity_matrix(c), psi(c, swap_map(c)))
    assert unit_factor_check(identity_matrix(c), identity_matrix(c))


def test_matrix_equality_and_hash():
    c = ctx("Z/2", "Z/4")
    A = identity_matrix(c)
    B = HomMatrix(c, A.entries)
    assert A == B and len({A, B}) == 1
    assert A != identity_matrix(ctx("Z/2", "Z/4"))
