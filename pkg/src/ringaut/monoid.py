"""Finite monoids given by a Cayley table (or a structured product rule)."""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidSpec, SizeCapExceeded, SubsetParentMismatch
from .spec import DEFAULT_MAX_SIZE

# Cayley tables are materialized only up to this many elements
TABLE_LIMIT = 1024


class FiniteMonoid:
    """A finite monoid on the indices ``0 .. size-1``.

    ``table[a][b]`` is ``a * b``.  For products larger than ``TABLE_LIMIT`` the
    table is not stored and :meth:`op` works through the factors instead.
    """

    def __init__(self, size, identity, table=None, absorbing=None, labels=None,
                 ring=None, factors=None, name=None):
        self.size = size
        self.identity = identity
        self.absorbing = absorbing
        self.labels = tuple(labels) if labels is not None else tuple(map(str, range(size)))
        self.ring = ring
        self.factors = tuple(factors) if factors else ()
        self.name = name or f"M{size}"
        self._table = table
        if self.factors:
            sizes = [f.size for f in self.factors]
            self._strides = tuple(math.prod(sizes[k + 1:]) for k in range(len(sizes)))

    def __repr__(self):
        return f"FiniteMonoid({self.name!r}, size={self.size})"

    @classmethod
    def from_table(cls, table, labels=None, name=None):
        """Build a monoid from an explicit table, locating the identity and any
        absorbing element and checking associativity."""
        n = len(table)
        table = tuple(tuple(int(x) for x in row) for row in table)
        if any(len(row) != n for row in table) or any(not 0 <= x < n for row in table for x in row):
            raise InvalidSpec("Cayley table must be square with entries in range")
        ids = [e for e in range(n)
               if all(table[e][x] == x and table[x][e] == x for x in range(n))]
        if not ids:
            raise InvalidSpec("table has no two-sided identity")
        zeros = [z for z in range(n)
                 if all(table[z][x] == z and table[x][z] == z for x in range(n))]
        m = cls(n, ids[0], table=table, absorbing=zeros[0] if zeros else None,
                labels=labels, name=name)
        if not m.is_associative():
            raise InvalidSpec("table is not associative")
        return m

    @property
    def table(self):
        if self._table is None:
            if self.size > TABLE_LIMIT:
                raise SizeCapExceeded(self.size, TABLE_LIMIT, "Cayley table")
            self._table = tuple(tuple(self.op(a, b) for b in range(self.size))
                                for a in range(self.size))
        return self._table

    @functools.cached_property
    def array(self) -> np.ndarray:
        """The Cayley table as an integer array (read-only)."""
        a = np.array(self.table, dtype=np.int64).reshape(self.size, self.size)
        a.flags.writeable = False
        return a

    @property
    def has_table(self):
        return self._table is not None or self.size <= TABLE_LIMIT

    def op(self, a, b):
        if self._table is not None:
            return self._table[a][b]
        if self.ring is not None:
            return int(self.ring.mul_table[a, b])
        ca, cb = self.decompose(a), self.decompose(b)
        return self.compose_tuple(f.op(x, y) for f, x, y in zip(self.factors, ca, cb))

    def product(self, elements, start=None):
        """Left-to-right product of ``elements`` (identity if empty)."""
        r = self.identity if start is None else start
        for x in elements:
            r = self.op(r, x)
        return r

    def power(self, a, k):
        r = self.identity
        for _ in range(k):
            r = self.op(r, a)
        return r

    def elements(self):
        return range(self.size)

    # product coordinates
    def decompose(self, a):
        return self.coordinates[a]

    @functools.cached_property
    def coordinates(self):
        return tuple(tuple((a // s) % f.size for s, f in zip(self._strides, self.factors))
                     for a in range(self.size))

    def compose_tuple(self, parts):
        return sum(p * s for p, s in zip(parts, self._strides))

    def is_associative(self):
        t = self.table
        r = range(self.size)
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a in r for b in r for c in r)

    def is_commutative(self):
        return len(self.center.members) == self.size

    @functools.cached_property
    def units(self) -> "SubsetHandle":
        e, op = self.identity, self.op
        if self.ring is not None:
            t = self.ring.mul_table
            members = np.flatnonzero(((t == e) & (t.T == e)).any(axis=1)).tolist()
        else:
            members = [x for x in range(self.size)
                       if any(op(x, y) == e and op(y, x) == e for y in range(self.size))]
        return SubsetHandle(self, tuple(members))

    @functools.cached_property
    def center(self) -> "SubsetHandle":
        op = self.op
        if self.ring is not None:
            t = self.ring.mul_table
            members = np.flatnonzero((t == t.T).all(axis=1)).tolist()
        else:
            members = [m for m in range(self.size)
                       if all(op(m, x) == op(x, m) for x in range(self.size))]
        return SubsetHandle(self, tuple(members))

    @functools.cached_property
    def _inverses(self):
        e, op = self.identity, self.op
        inv = {}
        for x in self.units.members:
            for y in self.units.members:
                if op(x, y) == e and op(y, x) == e:
                    inv[x] = y
                    break
        return inv

    def inverse(self, u) -> Optional[int]:
        """Two-sided inverse of ``u`` or ``None`` when ``u`` is not a unit."""
        return self._inverses.get(u)

    def is_unit(self, x):
        return x in self._inverses

    def subset(self, members) -> "SubsetHandle":
        return SubsetHandle(self, tuple(sorted(set(members))))


@dataclass(frozen=True)
class SubsetHandle:
    parent: FiniteMonoid
    members: Tuple[int, ...]

    def __post_init__(self):
        m = self.members
        if any(not 0 <= x < self.parent.size for x in m) or any(a >= b for a, b in zip(m, m[1:])):
            raise ValueError("subset members must be sorted, distinct, valid indices")

    def __contains__(self, x):
        return x in self._set

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @functools.cached_property
    def _set(self):
        return frozenset(self.members)


def mul_monoid_of(R) -> FiniteMonoid:
    """The multiplicative monoid ``(R, *)`` with identity ``1`` and absorbing ``0``.

    The monoid is cached on the ring, so repeated calls return the same object.
    """
    return R.monoid


def _build_mul_monoid(R):
    table = None
    if R.size <= TABLE_LIMIT:
        table = tuple(tuple(int(x) for x in row) for row in R.mul_table.tolist())
    return FiniteMonoid(R.size, R.one, table=table, absorbing=R.zero, labels=R.labels,
                        ring=R, name=f"({R.name},*)")


def product_monoid(factors: Sequence[FiniteMonoid], max_size=DEFAULT_MAX_SIZE) -> FiniteMonoid:
    """Direct product with componentwise operation, first factor most significant."""
    factors = tuple(factors)
    if len(factors) < 2:
        raise InvalidSpec("a product monoid needs at least two factors")
    size = math.prod(f.size for f in factors)
    if size > max_size:
        raise SizeCapExceeded(size, max_size)
    sizes = [f.size for f in factors]
    strides = [math.prod(sizes[k + 1:]) for k in range(len(sizes))]

    def pack(parts):
        return sum(p * s for p, s in zip(parts, strides))

    identity = pack(f.identity for f in factors)
    absorbing = None
    if all(f.absorbing is not None for f in factors):
        absorbing = pack(f.absorbing for f in factors)
    coords = list(itertools.product(*(range(n) for n in sizes)))
    labels = ["(" + ",".join(f.labels[c] for f, c in zip(factors, cs)) + ")" for cs in coords]
    table = None
    if size <= TABLE_LIMIT:
        ftabs = [f.table for f in factors]
        table = tuple(
            tuple(pack(t[x][y] for t, x, y in zip(ftabs, ca, cb)) for cb in coords)
            for ca in coords)
    name = " x ".join(f.name for f in factors)
    return FiniteMonoid(size, identity, table=table, absorbing=absorbing, labels=labels,
                        factors=factors, name=name)


def units_center_absorbing(M: FiniteMonoid):
    return M.units, M.center, M.absorbing


def commuting_images(M: FiniteMonoid, A: SubsetHandle, B: SubsetHandle) -> bool:
    """True iff every element of ``A`` commutes with every element of ``B``."""
    if A.parent is not M or B.parent is not M:
        raise SubsetParentMismatch("subsets do not belong to this monoid")
    center = M.center
    op = M.op
    for a in A.members:
        if a in center:
            continue
        for b in B.members:
            if op(a, b) != op(b, a):
                return False
    return True


def closure(M: FiniteMonoid, gens) -> set:
    """Submonoid generated by ``gens``."""
    gens = list(gens)
    seen = {M.identity}
    frontier = [M.identity]
    op = M.op
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = op(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def generating_set(M: FiniteMonoid) -> list:
    """A generating set: greedily add the smallest element outside the current
    closure, then drop generators the others already produce."""
    gens = []
    span = {M.identity}
    for x in range(M.size):
        if x not in span:
            gens.append(x)
            span = closure(M, gens)
    for g in list(gens):
        rest = [h for h in gens if h != g]
        if len(closure(M, rest)) == M.size:
            gens = rest
    return gens
