"""Finite commutative rings with materialized addition/multiplication tables.

Elements are integer indices.  The encoding is structural:

* ``Z/n``: the residue itself.
* ``B[x]/(f)`` of degree ``d``: coefficient digits ``(c_0, ..., c_{d-1})`` over
  the indices of ``B``, index ``sum(c_k * |B|**k)``.  For prime ``p`` this makes
  the index of an element of ``Z/p[x]/(f)`` its value at ``x = p``.
* products: mixed radix over the factor indices, first factor most significant.

The zero element is always index 0.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import IndexOutOfRange, InvalidSpec, LemmaViolation
from .spec import (DEFAULT_MAX_SIZE, PolyQuotient, Product, RingSpec, Zmod,
                   characteristic, format_spec, validate)

# rings up to this size get an exhaustive axiom check; larger ones are sampled
DEFAULT_VERIFY_LIMIT = 256
_SAMPLE_TRIPLES = 20000
# elements per temporary (rows x n x n) block in vectorized checks
_BLOCK = 1 << 22


class FiniteRing:
    """A finite commutative ring with identity.

    Use :func:`construct_ring` rather than instantiating this directly.
    """

    def __init__(self, spec, add_table, mul_table, labels, one,
                 base=None, factors=None):
        self.spec = spec
        self.size = len(labels)
        self.zero = 0
        self.one = int(one)
        self.labels = tuple(labels)
        self.add_table = add_table
        self.mul_table = mul_table
        self.base = base
        self.factors = tuple(factors) if factors else ()
        add_table.setflags(write=False)
        mul_table.setflags(write=False)
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    def __repr__(self):
        return f"FiniteRing({format_spec(self.spec)!r}, size={self.size})"

    @property
    def name(self):
        return format_spec(self.spec)

    @property
    def characteristic(self):
        return characteristic(self.spec)

    def check_index(self, a):
        if not (isinstance(a, (int, np.integer)) and 0 <= a < self.size):
            raise IndexOutOfRange(f"{a!r} is not an element index of {self.name}")

    def add(self, a, b):
        return int(self.add_table[a, b])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        return int(self._neg[a])

    def power(self, a, k):
        r = self.one
        for _ in range(k):
            r = self.mul(r, a)
        return r

    def from_int(self, c):
        """The element ``c * 1``."""
        c %= self.characteristic
        r = self.zero
        for _ in range(c):
            r = self.add(r, self.one)
        return r

    def label(self, a):
        return self.labels[a]

    def element(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise IndexOutOfRange(f"no element labelled {label!r} in {self.name}") from None

    @functools.cached_property
    def _neg(self):
        return np.argmax(self.add_table == self.zero, axis=1)

    @functools.cached_property
    def monoid(self):
        from .monoid import _build_mul_monoid
        return _build_mul_monoid(self)


# -- construction -------------------------------------------------------------

def _zmod_tables(n):
    r = np.arange(n, dtype=np.int64)
    add = ((r[:, None] + r[None, :]) % n).astype(np.int32)
    mul = ((r[:, None] * r[None, :]) % n).astype(np.int32)
    return add, mul, [str(i) for i in range(n)], 1


def _row_blocks(n, width):
    step = max(1, _BLOCK // max(1, width))
    for start in range(0, n, step):
        yield slice(start, min(n, start + step))


def _poly_tables(base: FiniteRing, modulus):
    b, d = base.size, len(modulus) - 1
    n = b ** d
    badd, bmul, bneg = base.add_table, base.mul_table, base._neg
    idx = np.arange(n, dtype=np.int64)
    digits = np.stack([(idx // b ** k) % b for k in range(d)], axis=1)
    weights = np.array([b ** k for k in range(d)], dtype=np.int64)
    neg_mod = [int(bneg[base.from_int(c)]) for c in modulus[:-1]]

    # Rows for the monomials c*x^k by direct polynomial arithmetic; every other
    # row follows from a = rest + c*x^k (top digit split off) and bilinearity.
    monos = np.array([c * b ** k for k in range(d) for c in range(1, b)], dtype=np.int64)
    dm = digits[monos]
    mono_add = np.zeros((len(monos), n), dtype=np.int64)
    for k in range(d):
        mono_add += badd[dm[:, k][:, None], digits[:, k][None, :]] * weights[k]
    conv = [np.full((len(monos), n), base.zero, dtype=np.int64) for _ in range(2 * d - 1)]
    for i in range(d):
        for j in range(d):
            conv[i + j] = badd[conv[i + j], bmul[dm[:, i][:, None], digits[:, j][None, :]]]
    # x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
    for t in range(2 * d - 2, d - 1, -1):
        for i, nm in enumerate(neg_mod):
            conv[t - d + i] = badd[conv[t - d + i], bmul[conv[t], nm]]
    mono_mul = sum(conv[k] * weights[k] for k in range(d))

    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    add[0] = idx
    mul[0] = 0
    add[monos] = mono_add
    mul[monos] = mono_mul
    for k in range(d):
        block = np.arange(b ** k, b ** (k + 1))
        mono = (block // b ** k) * b ** k
        rest = block - mono
        add[block] = add[rest[:, None], add[mono]]
    for k in range(d):
        block = np.arange(b ** k, b ** (k + 1))
        mono = (block // b ** k) * b ** k
        rest = block - mono
        mul[block] = add[mul[rest], mul[mono]]

    labels = ["(" + ",".join(base.labels[int(c)] for c in row) + ")" for row in digits]
    one = base.one  # digits (1_B, 0, ..., 0)
    return add, mul, labels, one


def _product_tables(factors):
    sizes = [f.size for f in factors]
    n = math.prod(sizes)
    strides = [math.prod(sizes[k + 1:]) for k in range(len(sizes))]
    idx = np.arange(n, dtype=np.int64)
    digits = np.stack([(idx // s) % m for s, m in zip(strides, sizes)], axis=1)
    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    for rows in _row_blocks(n, n * len(sizes)):
        da = digits[rows]
        sa = np.zeros((da.shape[0], n), dtype=np.int64)
        sm = np.zeros_like(sa)
        for k, (f, s) in enumerate(zip(factors, strides)):
            sa += f.add_table[da[:, k][:, None], digits[:, k][None, :]] * s
            sm += f.mul_table[da[:, k][:, None], digits[:, k][None, :]] * s
        add[rows] = sa
        mul[rows] = sm
    labels = ["(" + ",".join(f.labels[int(c)] for f, c in zip(factors, row)) + ")"
              for row in digits]
    one = sum(f.one * s for f, s in zip(factors, strides))
    return add, mul, labels, one


@functools.lru_cache(maxsize=256)
def _construct(spec, verify_limit, seed):
    if isinstance(spec, Zmod):
        add, mul, labels, one = _zmod_tables(spec.n)
        ring = FiniteRing(spec, add, mul, labels, one)
    elif isinstance(spec, PolyQuotient):
        base = _construct(spec.base, verify_limit, seed)
        add, mul, labels, one = _poly_tables(base, spec.modulus)
        ring = FiniteRing(spec, add, mul, labels, one, base=base)
    elif isinstance(spec, Product):
        factors = [_construct(f, verify_limit, seed) for f in spec.factors]
        add, mul, labels, one = _product_tables(factors)
        ring = FiniteRing(spec, add, mul, labels, one, factors=factors)
    else:
        raise InvalidSpec(f"not a ring spec: {spec!r}")
    verify_ring_axioms(ring, exhaustive_limit=verify_limit, seed=seed)
    return ring


def construct_ring(spec: RingSpec, max_size: int = DEFAULT_MAX_SIZE,
                   verify_limit: int = DEFAULT_VERIFY_LIMIT, seed: int = 0) -> FiniteRing:
    """Build (and self-check) the ring described by ``spec``.

    Equal specs return the same cached object.
    """
    validate(spec, max_size)
    return _construct(spec, verify_limit, seed)


def _failed(name):
    raise LemmaViolation(f"ring axiom failed: {name}")


def verify_ring_axioms(ring: FiniteRing, exhaustive_limit=DEFAULT_VERIFY_LIMIT, seed=0):
    """Check the commutative-ring axioms on every triple, or on a random sample
    of triples when the ring is larger than ``exhaustive_limit``."""
    n = ring.size
    A, M = ring.add_table.astype(np.int64), ring.mul_table.astype(np.int64)
    r = np.arange(n)
    if ring.zero == ring.one:
        _failed("0 != 1")
    if not (np.array_equal(A[ring.zero], r) and np.array_equal(M[ring.one], r)):
        _failed("identities")
    if not (np.array_equal(A, A.T) and np.array_equal(M, M.T)):
        _failed("commutativity")
    if not (A == ring.zero).any(axis=1).all():
        _failed("additive inverses")
    if n <= exhaustive_limit:
        for rows in _row_blocks(n, n * n):
            Ar, Mr = A[rows], M[rows]
            if not np.array_equal(A[Ar], Ar[:, A]):
                _failed("additive associativity")
            if not np.array_equal(M[Mr], Mr[:, M]):
                _failed("multiplicative associativity")
            if not np.array_equal(Mr[:, A], A[Mr[:, :, None], Mr[:, None, :]]):
                _failed("distributivity")
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, _SAMPLE_TRIPLES))
        if not np.array_equal(A[A[a, b], c], A[a, A[b, c]]):
            _failed("additive associativity")
        if not np.array_equal(M[M[a, b], c], M[a, M[b, c]]):
            _failed("multiplicative associativity")
        if not np.array_equal(M[a, A[b, c]], A[M[a, b], M[a, c]]):
            _failed("distributivity")


# -- classification -----------------------------------------------------------

@dataclass(frozen=True)
class ElementProfile:
    element: int
    is_unit: bool
    is_zero_divisor: bool
    nilpotency_index: Optional[int]


@dataclass(frozen=True)
class RingProfile:
    is_local: bool
    is_d_ring: bool
    is_total_ring_of_fractions: bool
    nilradical: Tuple[int, ...]
    units: Tuple[int, ...]
    zero_divisors: Tuple[int, ...]


def classify_element(R: FiniteRing, a) -> ElementProfile:
    R.check_index(a)
    a = int(a)
    row = R.mul_table[a]
    is_unit = bool((row == R.one).any())
    is_zd = bool(any(row[t] == R.zero for t in range(R.size) if t != R.zero))
    nil = None
    p = a
    for k in range(1, R.size + 1):
        if p == R.zero:
            nil = k
            break
        p = R.mul(p, a)
    return ElementProfile(a, is_unit, is_zd, nil)


def _nilpotency_indices(R: FiniteRing):
    """Vectorized least ``k <= |R|`` with ``a**k == 0`` per element, else -1."""
    idx = np.full(R.size, -1)
    r = np.arange(R.size)
    p = r.copy()
    for k in range(1, R.size + 1):
        hit = (p == R.zero) & (idx < 0)
        idx[hit] = k
        if (idx >= 0).all():
            break
        p = R.mul_table[p, r]
    return idx


@functools.lru_cache(maxsize=512)
def ring_profile(R: FiniteRing) -> RingProfile:
    M, A = R.mul_table, R.add_table
    units = (M == R.one).any(axis=1)
    nonzero = np.arange(R.size) != R.zero
    zd = (M[:, nonzero] == R.zero).any(axis=1)
    nil = _nilpotency_indices(R) >= 0
    nonunits = np.flatnonzero(~units)
    is_local = bool((~units[A[np.ix_(nonunits, nonunits)]]).all())
    return RingProfile(
        is_local=is_local,
        is_d_ring=bool(nil[zd].all()),
        is_total_ring_of_fractions=bool(units[~zd].all()),
        nilradical=tuple(int(x) for x in np.flatnonzero(nil)),
        units=tuple(int(x) for x in np.flatnonzero(units)),
        zero_divisors=tuple(int(x) for x in np.flatnonzero(zd)),
    )


def nilradical(R: FiniteRing):
    return ring_profile(R).nilradical
