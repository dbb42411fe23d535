"""Endomorphisms of a product monoid ``M_1 x ... x M_n`` as n-by-n matrices of
homomorphisms between the factors.

Entry ``(i, j)`` of a matrix is a homomorphism ``M_j -> M_i``.  The product of
two matrices is ``(A . B)_ij = *_k A_ik o B_kj``, where ``*_k`` multiplies
pointwise in ``M_i`` in increasing ``k``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, List, Sequence

from .errors import (CentralityViolation, ContextMismatch, EntrySignatureMismatch,
                     LemmaViolation, NotAHomomorphism, NotAnEndomorphism,
                     NotAnInversePair, SearchBudgetExceeded)
from .homs import DEFAULT_BUDGET, MonoidHom, compose, identity_hom, trivial_hom
from .monoid import FiniteMonoid, commuting_images, product_monoid
from .spec import DEFAULT_MAX_SIZE


class ProductContext:
    """Factors, their product, and the canonical injections and projections."""

    def __init__(self, factors: Sequence[FiniteMonoid], max_size=DEFAULT_MAX_SIZE, check=True):
        self.factors = tuple(factors)
        self.n = len(self.factors)
        self.product = P = product_monoid(self.factors, max_size=max_size)
        ids = [f.identity for f in self.factors]
        self.injections = []
        for j, f in enumerate(self.factors):
            img = [P.compose_tuple(ids[:j] + [m] + ids[j + 1:]) for m in range(f.size)]
            self.injections.append(MonoidHom(f, P, img, check=check))
        self.projections = [
            MonoidHom(P, f, [P.decompose(x)[i] for x in range(P.size)], check=check)
            for i, f in enumerate(self.factors)]
        if check:
            self.check_invariants()

    def __repr__(self):
        return f"ProductContext({self.product.name!r})"

    def check_invariants(self):
        for i, pi in enumerate(self.projections):
            for j, iota in enumerate(self.injections):
                c = compose(pi, iota)
                if (i == j and not c.is_identity) or (i != j and not c.is_trivial):
                    raise LemmaViolation(f"pi_{i} o iota_{j} has the wrong form")
        P = self.product
        for m in range(P.size):
            parts = [self.injections[l](self.projections[l](m)) for l in range(self.n)]
            if P.product(parts) != m:
                raise LemmaViolation(f"product of iota_l pi_l does not fix {m}")


class HomMatrix:
    """A validated element of the matrix monoid over a :class:`ProductContext`."""

    __slots__ = ("context", "n", "entries")

    def __init__(self, context: ProductContext, entries):
        self.context = context
        self.n = context.n
        self.entries = tuple(tuple(row) for row in entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def key(self):
        return tuple(tuple(e.image for e in row) for row in self.entries)

    def __eq__(self, other):
        return (isinstance(other, HomMatrix) and self.context is other.context
                and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"HomMatrix({[[list(e.image) for e in row] for row in self.entries]})"

    @property
    def is_diagonal(self):
        """Automorphisms on the diagonal, trivial maps elsewhere."""
        return all((e.is_bijective if i == j else e.is_trivial)
                   for i, row in enumerate(self.entries) for j, e in enumerate(row))

    def offdiagonal_trivial(self):
        return all(e.is_trivial for i, row in enumerate(self.entries)
                   for j, e in enumerate(row) if i != j)


def _central_row(Mi, row):
    """First pair ``(j1, j2)`` of entries in ``row`` whose images fail to
    commute in ``Mi``, or ``None``."""
    if Mi.is_commutative():
        return None
    images = [e.image_subset() for e in row]
    for j1, j2 in itertools.combinations(range(len(row)), 2):
        if not commuting_images(Mi, images[j1], images[j2]):
            return j1, j2
    return None


def _check_row_centrality(context, entries):
    for i, row in enumerate(entries):
        bad = _central_row(context.factors[i], row)
        if bad:
            raise CentralityViolation(
                f"images of entries ({i},{bad[0]}) and ({i},{bad[1]}) do not commute")


def make_matrix(context: ProductContext, entries) -> HomMatrix:
    entries = [list(row) for row in entries]
    if len(entries) != context.n or any(len(row) != context.n for row in entries):
        raise EntrySignatureMismatch(f"expected a {context.n}x{context.n} grid")
    for i, row in enumerate(entries):
        for j, e in enumerate(row):
            if e.source is not context.factors[j] or e.target is not context.factors[i]:
                raise EntrySignatureMismatch(f"entry ({i},{j}) must map factor {j} to factor {i}")
    _check_row_centrality(context, entries)
    return HomMatrix(context, entries)


def identity_matrix(context: ProductContext) -> HomMatrix:
    F = context.factors
    return HomMatrix(context, [[identity_hom(F[i]) if i == j else trivial_hom(F[j], F[i])
                                for j in range(context.n)] for i in range(context.n)])


def _odot_entry(A, B, i, j, order):
    Mi, Mj = A.context.factors[i], A.context.factors[j]
    op = Mi.op
    maps = [(A.entries[i][k].image, B.entries[k][j].image) for k in order]
    img = []
    for m in range(Mj.size):
        v = Mi.identity
        for a, b in maps:
            v = op(v, a[b[m]])
        img.append(v)
    return MonoidHom(Mj, Mi, img)


def odot(A: HomMatrix, B: HomMatrix, order: Iterable[int] = None) -> HomMatrix:
    """Matrix product.  ``order`` overrides the factor order used for the
    pointwise products (the result must not depend on it)."""
    if A.context is not B.context:
        raise ContextMismatch("matrices belong to different product contexts")
    order = list(range(A.n)) if order is None else list(order)
    entries = [[_odot_entry(A, B, i, j, order) for j in range(A.n)] for i in range(A.n)]
    return make_matrix(A.context, entries)


def psi(context: ProductContext, theta: MonoidHom) -> HomMatrix:
    """Matrix of an endomorphism: entry ``(i, j)`` is ``pi_i o theta o iota_j``."""
    P = context.product
    if theta.source is not P or theta.target is not P:
        raise NotAnEndomorphism("map is not a self-map of the product monoid")
    try:
        theta.verify()
    except NotAHomomorphism as exc:
        raise NotAnEndomorphism(str(exc)) from None
    # composites of verified homomorphisms need no re-check
    F, img = context.factors, theta.image
    cols = [[img[x] for x in iota.image] for iota in context.injections]
    entries = []
    for i, pi in enumerate(context.projections):
        p = pi.image
        entries.append([MonoidHom(F[j], F[i], [p[y] for y in col], check=False)
                        for j, col in enumerate(cols)])
    return make_matrix(context, entries)


def psi_inv(A: HomMatrix, check=True) -> MonoidHom:
    """The endomorphism ``m -> (*_k A_1k(m_k), ..., *_k A_nk(m_k))``."""
    ctx = A.context
    P, F = ctx.product, ctx.factors
    strides = P._strides
    rows = [(F[i].table, F[i].identity, [e.image for e in A.entries[i]], strides[i])
            for i in range(ctx.n)]
    img = []
    for parts in P.coordinates:
        x = 0
        for table, v, images, stride in rows:
            for image, p in zip(images, parts):
                v = table[v][image[p]]
            x += v * stride
        img.append(x)
    return MonoidHom(P, P, img, check=check)


def inverse_relations(A: HomMatrix, B: HomMatrix) -> dict:
    """The four relation families: diagonal/off-diagonal of ``A.B`` and ``B.A``."""
    if A.context is not B.context:
        raise ContextMismatch("matrices belong to different product contexts")
    out = {}
    for name, X in (("AB", odot(A, B)), ("BA", odot(B, A))):
        out[f"{name}_diagonal_identity"] = all(X.entries[i][i].is_identity for i in range(X.n))
        out[f"{name}_offdiagonal_trivial"] = X.offdiagonal_trivial()
    return out


def inverse_pair_check(A: HomMatrix, B: HomMatrix) -> bool:
    """True iff ``A.B = B.A = I``."""
    return all(inverse_relations(A, B).values())


def _unit_clause(A, B):
    F = A.context.factors
    n = A.n
    for i, j in itertools.permutations(range(n), 2):
        Mi = F[i]
        for m in range(F[j].size):
            terms = [A.entries[i][l].image[B.entries[l][j].image[m]] for l in range(n)]
            for k in range(n):
                if not Mi.is_unit(terms[k]):
                    return False
                rest = Mi.product(terms[l] for l in range(n) if l != k)
                if Mi.inverse(rest) != terms[k]:
                    return False
    return True


def unit_factor_check(A: HomMatrix, B: HomMatrix) -> bool:
    """For an inverse pair, every cross term ``A_ik(B_kj(m))`` (``i != j``) is a
    unit equal to the inverse of the product of the other terms, and likewise
    with ``A`` and ``B`` exchanged."""
    if not inverse_pair_check(A, B):
        raise NotAnInversePair("matrices are not mutually inverse")
    return _unit_clause(A, B) and _unit_clause(B, A)


def enumerate_matrices(context: ProductContext, hom_lists=None,
                       budget=DEFAULT_BUDGET) -> List[HomMatrix]:
    """Every valid matrix built from the given ``hom_lists[i][j]`` (all of
    ``Hom(M_j, M_i)`` by default), rows checked for centrality."""
    from .homs import enumerate_homs
    F, n = context.factors, context.n
    if hom_lists is None:
        hom_lists = [[enumerate_homs(F[j], F[i]) for j in range(n)] for i in range(n)]
    rows = []
    nodes = 0
    for i in range(n):
        valid = []
        for row in itertools.product(*hom_lists[i]):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            if _central_row(F[i], row) is None:
                valid.append(row)
        rows.append(valid)
    return [HomMatrix(context, combo) for combo in itertools.product(*rows)]
