"""Automorphisms of products of multiplicative monoids of finite rings.

:func:`verify_decomposition` computes ``Aut(R_1 x ... x R_n, *)`` twice, once by
direct search on the product monoid and once by assembling matrices from the
factor hom-sets, and compares the result with the set of diagonal matrices
(automorphisms on the diagonal, trivial maps elsewhere).  With local factors of
pairwise distinct sizes the two sets must coincide.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .errors import (HypothesisViolated, InvalidSpec, LemmaViolation, MethodDisagreement,
                     MonoidRingMismatch, NoIndexFound, NotAnInversePair,
                     SearchBudgetExceeded, SizeCapExceeded)
from .homs import (DEFAULT_AUT_LIMIT, DEFAULT_BUDGET, MonoidHom, compose,
                   enumerate_automorphisms, enumerate_homs)
from .matrix import (HomMatrix, ProductContext, _central_row, inverse_pair_check, odot,
                     psi, psi_inv)
from .ring import FiniteRing, construct_ring, ring_profile
from .spec import DEFAULT_MAX_SIZE, RingSpec, format_spec

DEFAULT_MAX_FACTORS = 4
DEFAULT_SAMPLE_PAIRS = 64


@dataclass(frozen=True)
class IndexAssignment:
    """For each factor ``r``, the zero-preserving indices ``c(r)`` and ``d(r)``
    (0-based)."""
    c: Tuple[int, ...]
    d: Tuple[int, ...]

    @property
    def injective(self):
        return len(set(self.c)) == len(self.c) and len(set(self.d)) == len(self.d)


@dataclass(frozen=True)
class OffDiagonalReport:
    offdiagonal_trivial: Tuple[Tuple[Optional[bool], ...], ...]
    diagonal_automorphism: Tuple[bool, ...]
    cross_terms_trivial: bool
    cross_term_failures: Tuple[Tuple[str, int, int, int], ...]


@dataclass
class AutomorphismRecord:
    theta: MonoidHom
    matrix: HomMatrix
    is_diagonal: bool
    indices: Optional[IndexAssignment]
    offdiagonal: OffDiagonalReport


@dataclass
class RigidityReport:
    factor_specs: List[RingSpec]
    cardinalities: List[int]
    distinct_cardinalities: bool
    factor_local: List[bool]
    factor_d_ring: List[bool]
    factor_total_ring_of_fractions: List[bool]
    aut_orders_per_factor: List[int]
    product_aut_order: int
    decomposition_holds: bool
    methods_agree: bool
    nondiagonal_witnesses: List[HomMatrix]
    per_automorphism: List[AutomorphismRecord]
    violations: List[str] = field(default_factory=list)

    @property
    def hypotheses_hold(self):
        return all(self.factor_d_ring) and all(self.factor_total_ring_of_fractions)

    @property
    def theorem_applies(self):
        return self.hypotheses_hold and self.distinct_cardinalities

    @property
    def diagonal_order(self):
        out = 1
        for k in self.aut_orders_per_factor:
            out *= k
        return out


def _check_rings(A: HomMatrix, rings: Sequence[FiniteRing]):
    F = A.context.factors
    if len(rings) != len(F) or any(R.monoid is not M for R, M in zip(rings, F)):
        raise MonoidRingMismatch("rings do not match the factors of the product context")


def _nonunit(R: FiniteRing, x):
    return not R.monoid.is_unit(x)


def locate_zero_indices(A: HomMatrix, B: HomMatrix, rings: Sequence[FiniteRing]) -> IndexAssignment:
    """Least indices ``c(r)``, ``d(r)`` whose cross terms at zero are non-units.

    ``A`` and ``B`` must be the matrices of an automorphism and of its inverse.
    """
    _check_rings(A, rings)
    for R in rings:
        prof = ring_profile(R)
        if not (prof.is_d_ring and prof.is_total_ring_of_fractions):
            raise HypothesisViolated(f"{R.name} is not a D-ring and total ring of fractions")
    if not inverse_pair_check(A, B):
        raise NotAnInversePair("matrices are not mutually inverse")
    n = A.n
    c, d = [], []
    for r, Rr in enumerate(rings):
        z = Rr.zero
        for X, Y, out in ((A, B, c), (B, A, d)):
            # c: A_{r,k}(B_{k,r}(0)) non-unit;  d: the same with A and B exchanged
            k = next((k for k in range(n)
                      if _nonunit(Rr, X.entries[r][k](Y.entries[k][r](z)))), None)
            if k is None:
                raise NoIndexFound(f"no zero-preserving index for factor {r}")
            if Y.entries[k][r](z) != rings[k].zero or X.entries[r][k](rings[k].zero) != z:
                raise LemmaViolation(f"index {k} for factor {r} does not preserve zero")
            out.append(k)
    assignment = IndexAssignment(tuple(c), tuple(d))
    if not assignment.injective:
        raise LemmaViolation(f"index maps are not injective: {assignment}")
    return assignment


def index_consequences(A: HomMatrix, B: HomMatrix, assignment: IndexAssignment) -> List[str]:
    """Check the structure forced by the index maps; returns failed statements."""
    bad = []
    n = A.n
    for X, Y, idx, tag in ((A, B, assignment.c, "c"), (B, A, assignment.d, "d")):
        for r in range(n):
            k = idx[r]
            if not compose(X.entries[r][k], Y.entries[k][r]).is_identity:
                bad.append(f"{tag}: entry ({r},{k}) composed with ({k},{r}) is not the identity")
            for i in range(n):
                if i == r:
                    continue
                if not X.entries[i][k].is_trivial:
                    bad.append(f"{tag}: entry ({i},{k}) should be trivial")
                if not Y.entries[k][i].is_trivial:
                    bad.append(f"{tag}: inverse entry ({k},{i}) should be trivial")
    return bad


def offdiagonal_report(A: HomMatrix, B: HomMatrix) -> OffDiagonalReport:
    if not inverse_pair_check(A, B):
        raise NotAnInversePair("matrices are not mutually inverse")
    n = A.n
    failures = []
    for X, Y, tag in ((A, B, "theta.theta^-1"), (B, A, "theta^-1.theta")):
        for i, j in itertools.permutations(range(n), 2):
            for k in range(n):
                if not compose(X.entries[i][k], Y.entries[k][j]).is_trivial:
                    failures.append((tag, i, k, j))
    return OffDiagonalReport(
        offdiagonal_trivial=tuple(tuple(None if i == j else A.entries[i][j].is_trivial
                                        for j in range(n)) for i in range(n)),
        diagonal_automorphism=tuple(A.entries[i][i].is_bijective for i in range(n)),
        cross_terms_trivial=not failures,
        cross_term_failures=tuple(failures),
    )


def automorphisms_by_matrices(context: ProductContext, budget=DEFAULT_BUDGET) -> List[HomMatrix]:
    """Automorphism matrices assembled from the factor hom-sets.

    A column ``j`` is kept only if ``m -> (A_1j(m), ..., A_nj(m))`` is injective
    and sends non-units to non-units, as the restriction of an automorphism to
    a factor must; a matrix must also fix the absorbing element.  Full
    matrices are kept when their endomorphism is bijective, and each survivor
    must then have a two-sided inverse among the survivors.
    """
    F, n, P = context.factors, context.n, context.product
    homs = [[enumerate_homs(F[j], F[i], budget=budget) for j in range(n)] for i in range(n)]
    nodes = 0
    columns = []
    for j in range(n):
        keep = []
        nonunits = [m for m in range(F[j].size) if not F[j].is_unit(m)]
        for col in itertools.product(*(homs[i][j] for i in range(n))):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            images = {tuple(h.image[m] for h in col) for m in range(F[j].size)}
            if len(images) != F[j].size:
                continue
            if any(all(F[i].is_unit(col[i].image[m]) for i in range(n)) for m in nonunits):
                continue
            keep.append(col)
        columns.append(keep)

    found = []
    for cols in itertools.product(*columns):
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(budget)
        rows = [[cols[j][i] for j in range(n)] for i in range(n)]
        if P.absorbing is not None and any(
                F[i].product(rows[i][k](F[k].absorbing) for k in range(n)) != F[i].absorbing
                for i in range(n)):
            continue  # an automorphism fixes the absorbing element
        if any(_central_row(F[i], rows[i]) is not None for i in range(n)):
            continue
        A = HomMatrix(context, rows)
        if psi_inv(A, check=False).is_bijective:
            found.append(A)

    by_key = {A.key(): A for A in found}
    for A in found:
        if not any(inverse_pair_check(A, B) for B in by_key.values()):
            raise LemmaViolation(f"bijective matrix without a matrix inverse: {A!r}")
    return sorted(found, key=lambda A: psi_inv(A, check=False).image)


def diagonal_matrices(context: ProductContext, factor_auts) -> List[HomMatrix]:
    """Every matrix with factor automorphisms on the diagonal and trivial maps
    elsewhere."""
    F, n = context.factors, context.n
    from .homs import trivial_hom
    out = []
    for diag in itertools.product(*factor_auts):
        out.append(HomMatrix(context, [[diag[i] if i == j else trivial_hom(F[j], F[i])
                                        for j in range(n)] for i in range(n)]))
    return out


def verify_decomposition(specs: Sequence[RingSpec], max_size=DEFAULT_MAX_SIZE,
                         budget=DEFAULT_BUDGET, aut_limit=DEFAULT_AUT_LIMIT,
                         max_factors=DEFAULT_MAX_FACTORS, seed=0,
                         sample_pairs=DEFAULT_SAMPLE_PAIRS) -> RigidityReport:
    specs = list(specs)
    if len(specs) < 2:
        raise InvalidSpec("need at least two factor rings")
    if len(specs) > max_factors:
        raise SizeCapExceeded(len(specs), max_factors, "factor count")
    rings = [construct_ring(s, max_size=max_size) for s in specs]
    size = 1
    for R in rings:
        size *= R.size
    if size > aut_limit:
        raise SizeCapExceeded(size, aut_limit, "product monoid")
    profiles = [ring_profile(R) for R in rings]
    monoids = [R.monoid for R in rings]
    context = ProductContext(monoids, max_size=aut_limit)
    P = context.product

    factor_auts = [enumerate_automorphisms(M, budget=budget, max_size=aut_limit) for M in monoids]
    direct = enumerate_automorphisms(P, budget=budget, max_size=aut_limit)
    assembled = automorphisms_by_matrices(context, budget=budget)

    direct_images = [t.image for t in direct]
    assembled_images = [psi_inv(A).image for A in assembled]
    if sorted(direct_images) != sorted(assembled_images):
        raise MethodDisagreement(
            f"direct search found {len(direct)} automorphisms, matrix assembly {len(assembled)}")

    violations = []
    matrices = [psi(context, t) for t in direct]
    if set(matrices) != set(assembled):
        violations.append("matrix of a directly found automorphism differs from the assembled one")
    diag = set(diagonal_matrices(context, factor_auts))
    if not diag <= set(matrices):
        violations.append("a diagonal matrix is not an automorphism")
    holds = set(matrices) == diag

    cards = [R.size for R in rings]
    distinct = len(set(cards)) == len(cards)
    hypotheses = all(p.is_d_ring and p.is_total_ring_of_fractions for p in profiles)

    records = []
    for theta, A in zip(direct, matrices):
        B = psi(context, theta.inverse())
        off = offdiagonal_report(A, B)
        if not off.cross_terms_trivial:
            violations.append(f"cross terms not trivial for {list(theta.image)}")
        indices = None
        if hypotheses:
            indices = locate_zero_indices(A, B, rings)
            violations.extend(index_consequences(A, B, indices))
        if hypotheses and distinct:
            if any(A.entries[i][i].is_trivial or B.entries[i][i].is_trivial for i in range(A.n)):
                violations.append(f"trivial diagonal entry for {list(theta.image)}")
        records.append(AutomorphismRecord(theta, A, A.is_diagonal, indices, off))

    if hypotheses and distinct and not holds:
        violations.append("distinct-cardinality local factors but the decomposition fails")
    violations.extend(_sampled_psi_checks(context, direct, matrices, seed, sample_pairs))

    return RigidityReport(
        factor_specs=specs,
        cardinalities=cards,
        distinct_cardinalities=distinct,
        factor_local=[p.is_local for p in profiles],
        factor_d_ring=[p.is_d_ring for p in profiles],
        factor_total_ring_of_fractions=[p.is_total_ring_of_fractions for p in profiles],
        aut_orders_per_factor=[len(a) for a in factor_auts],
        product_aut_order=len(direct),
        decomposition_holds=holds,
        methods_agree=True,
        nondiagonal_witnesses=[A for A in matrices if not A.offdiagonal_trivial()],
        per_automorphism=records,
        violations=violations,
    )


def _sampled_psi_checks(context, auts, matrices, seed, pairs):
    """Seeded spot checks that matrix multiplication tracks composition and
    does not depend on the factor order."""
    rng = random.Random(seed)
    bad = []
    idx = range(len(auts))
    for _ in range(pairs):
        a, b = rng.choice(idx), rng.choice(idx)
        prod = odot(matrices[a], matrices[b])
        if prod != psi(context, compose(auts[a], auts[b])):
            bad.append(f"matrix product disagrees with composition for pair ({a},{b})")
        if odot(matrices[a], matrices[b], order=reversed(range(context.n))) != prod:
            bad.append(f"matrix product depends on factor order for pair ({a},{b})")
    return bad


def find_nondiagonal_automorphisms(specs: Sequence[RingSpec], **kwargs) -> List[HomMatrix]:
    return verify_decomposition(specs, **kwargs).nondiagonal_witnesses


def describe_factors(specs):
    return [format_spec(s) for s in specs]
