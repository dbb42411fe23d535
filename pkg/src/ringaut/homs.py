"""Monoid homomorphisms: representation, composition, enumeration, and the
zero-divisor classification of homomorphisms between multiplicative monoids."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .errors import (CompositionMismatch, LemmaViolation, MonoidRingMismatch,
                     NotAHomomorphism, SearchBudgetExceeded, SizeCapExceeded)
from .monoid import FiniteMonoid, generating_set
from .ring import FiniteRing, ring_profile

DEFAULT_BUDGET = 10 ** 7
DEFAULT_HOM_LIMIT = 64
DEFAULT_AUT_LIMIT = 128


class MonoidHom:
    """A map ``source -> target`` stored as its image vector.

    Two homomorphisms are equal iff they share source and target objects and
    have the same image vector.
    """

    __slots__ = ("source", "target", "image", "__weakref__")

    def __init__(self, source: FiniteMonoid, target: FiniteMonoid, image, check=True):
        self.source = source
        self.target = target
        self.image = img = tuple(map(int, image))
        if len(img) != source.size or (img and (min(img) < 0 or max(img) >= target.size)):
            raise NotAHomomorphism("image vector has the wrong length or out-of-range values")
        if check:
            self.verify()

    def __call__(self, x):
        return self.image[x]

    def __eq__(self, other):
        return (isinstance(other, MonoidHom) and self.source is other.source
                and self.target is other.target and self.image == other.image)

    def __hash__(self):
        return hash(self.image)

    def __lt__(self, other):
        return self.image < other.image

    def __repr__(self):
        return f"MonoidHom({self.source.name} -> {self.target.name}, {list(self.image)})"

    def verify(self):
        s, t, img = self.source, self.target, self.image
        if img[s.identity] != t.identity:
            raise NotAHomomorphism("identity is not preserved")
        if s.has_table and t.has_table:
            v = np.array(img, dtype=np.int64)
            bad = v[s.array] != t.array[v[:, None], v[None, :]]
            if bad.any():
                x, y = np.argwhere(bad)[0]
                raise NotAHomomorphism(f"h({x}*{y}) != h({x})*h({y})")
            return self
        sop, top = s.op, t.op
        for x in range(s.size):
            hx = img[x]
            for y in range(s.size):
                if img[sop(x, y)] != top(hx, img[y]):
                    raise NotAHomomorphism(f"h({x}*{y}) != h({x})*h({y})")
        return self

    @property
    def is_trivial(self):
        e = self.target.identity
        return all(v == e for v in self.image)

    @property
    def is_identity(self):
        return self.source is self.target and self.image == tuple(range(self.source.size))

    @property
    def is_bijective(self):
        return self.source.size == self.target.size and len(set(self.image)) == self.source.size

    def image_subset(self):
        return self.target.subset(self.image)

    def inverse(self) -> "MonoidHom":
        if not self.is_bijective:
            raise NotAHomomorphism("map is not bijective")
        inv = [0] * self.source.size
        for x, v in enumerate(self.image):
            inv[v] = x
        return MonoidHom(self.target, self.source, inv)


def trivial_hom(M: FiniteMonoid, N: FiniteMonoid) -> MonoidHom:
    return MonoidHom(M, N, [N.identity] * M.size, check=False)


def identity_hom(M: FiniteMonoid) -> MonoidHom:
    return MonoidHom(M, M, range(M.size), check=False)


def canonical_homs(M: FiniteMonoid, N: FiniteMonoid) -> Tuple[MonoidHom, Optional[MonoidHom]]:
    """The trivial map ``M -> N`` and, when ``M is N``, the identity."""
    return trivial_hom(M, N), identity_hom(M) if M is N else None


def compose(g: MonoidHom, f: MonoidHom, check=False) -> MonoidHom:
    """``g o f`` (apply ``f`` first)."""
    if f.target is not g.source:
        raise CompositionMismatch(f"cannot compose {g!r} after {f!r}")
    gi = g.image
    return MonoidHom(f.source, g.target, [gi[v] for v in f.image], check=check)


# -- search -------------------------------------------------------------------

def element_signature(M: FiniteMonoid, x):
    """Isomorphism-invariant data about ``x``; automorphisms preserve it."""
    op, n = M.op, M.size
    seen = {}
    p, k = M.identity, 0
    while p not in seen:
        seen[p] = k
        p, k = op(p, x), k + 1
    index, period = seen[p], k - seen[p]
    return (
        M.is_unit(x),
        x == M.absorbing,
        index,
        period,
        len({op(x, y) for y in range(n)}),
        len({op(y, x) for y in range(n)}),
        sum(op(y, y) == x for y in range(n)),
        sum(op(x, y) == x for y in range(n)),
        sum(op(y, x) == x for y in range(n)),
    )


class _Search:
    """Depth-first assignment of generator images with forced propagation.

    Each generator's image is chosen in turn; the submonoid generated so far is
    extended breadth-first, and every relation ``h(y*g) = h(y)*h(g)`` inside it
    is checked as soon as both sides are known.  When all generators are placed
    this set of relations implies that ``h`` is a homomorphism.
    """

    def __init__(self, M, N, candidates, injective, budget):
        self.M, self.N = M, N
        self.gens = generating_set(M)
        self.candidates = candidates
        self.injective = injective
        self.budget = budget
        self.nodes = 0
        self.h = [-1] * M.size
        self.used = set()
        self.found = []

    def run(self):
        self.h[self.M.identity] = self.N.identity
        self.used.add(self.N.identity)
        self.closure = [self.M.identity]
        self._level(0)
        return self.found

    def _level(self, i):
        if i == len(self.gens):
            self.found.append(tuple(self.h))
            return
        g = self.gens[i]
        if self.h[g] != -1:
            choices = [None]  # already forced by earlier generators
        else:
            choices = self.candidates(g)
        for v in choices:
            if v is not None:
                self.nodes += 1
                if self.nodes > self.budget:
                    raise SearchBudgetExceeded(self.budget)
                if self.injective and v in self.used:
                    continue
            added = self._extend(i, v)
            if added is not None:
                self.closure.extend(added)
                self._level(i + 1)
                del self.closure[len(self.closure) - len(added):]
                self._undo(added)

    def _assign(self, z, val, added):
        if self.injective:
            if val in self.used:
                return False
            self.used.add(val)
        self.h[z] = val
        added.append(z)
        return True

    def _extend(self, i, v):
        """Grow the closure by generator ``i``; return the newly assigned
        elements, or ``None`` (with nothing left assigned) on a conflict."""
        mop, nop, h = self.M.op, self.N.op, self.h
        gens = self.gens[: i + 1]
        g = self.gens[i]
        added = []
        edges = [(y, g) for y in self.closure]
        if v is not None:
            self._assign(g, v, added)
            edges.extend((g, gj) for gj in gens)
        k = 0
        while k < len(edges):
            y, gj = edges[k]
            k += 1
            z = mop(y, gj)
            val = nop(h[y], h[gj])
            if h[z] == -1:
                if not self._assign(z, val, added):
                    self._undo(added)
                    return None
                edges.extend((z, gk) for gk in gens)
            elif h[z] != val:
                self._undo(added)
                return None
        return added

    def _undo(self, added):
        for z in added:
            if self.injective:
                self.used.discard(self.h[z])
            self.h[z] = -1


def enumerate_homs(M: FiniteMonoid, N: FiniteMonoid, budget=DEFAULT_BUDGET,
                   max_size=DEFAULT_HOM_LIMIT, verify=True) -> List[MonoidHom]:
    """All homomorphisms ``M -> N`` sorted by image vector."""
    for X in (M, N):
        if X.size > max_size:
            raise SizeCapExceeded(X.size, max_size, "hom-search monoid")
    targets = range(N.size)
    found = _Search(M, N, lambda g: targets, False, budget).run()
    return [MonoidHom(M, N, img, check=verify) for img in sorted(found)]


def enumerate_automorphisms(M: FiniteMonoid, budget=DEFAULT_BUDGET,
                            max_size=DEFAULT_AUT_LIMIT, verify=True) -> List[MonoidHom]:
    """All automorphisms of ``M`` sorted by image vector.

    Generator images are restricted to elements with the same
    :func:`element_signature` (so units go to units and the absorbing element
    is fixed), and partial maps must stay injective.
    """
    if M.size > max_size:
        raise SizeCapExceeded(M.size, max_size, "automorphism-search monoid")
    sigs = [element_signature(M, x) for x in range(M.size)]
    by_sig = {}
    for x, s in enumerate(sigs):
        by_sig.setdefault(s, []).append(x)
    found = _Search(M, M, lambda g: by_sig[sigs[g]], True, budget).run()
    auts = []
    for img in sorted(found):
        theta = MonoidHom(M, M, img, check=verify)
        if not theta.is_bijective:
            raise LemmaViolation(f"injective search produced a non-bijection {img}")
        if verify:
            theta.inverse()  # verifies the inverse is a homomorphism too
        auts.append(theta)
    return auts


# -- zero-divisor classification ------------------------------------------------

@dataclass(frozen=True)
class Prop21Verdict:
    is_trivial: bool
    value_at_zero: int
    image_has_zero_divisor: bool
    maps_zero_to_zero: bool
    maps_zerodivisors_into_zerodivisors: bool


def prop21_violations(v: Prop21Verdict, source: FiniteRing, target: FiniteRing) -> List[str]:
    """Names of the equivalences that fail for this verdict (empty when all hold).

    When ``target`` is a D-ring, nontriviality, a zero divisor in the image and
    h(0)=0 are equivalent. The zero-divisor preservation leg joins that chain only
    when ``source`` is a D-ring too: otherwise a non-nilpotent zero divisor may map
    to a unit (x -> x mod 2 on Z/6 sends 3 to 1), so only its implication towards
    nontriviality is checked.
    """
    prof = ring_profile(target)
    zd = set(prof.zero_divisors)
    bad = []
    if not (v.is_trivial == (v.value_at_zero == target.one) == (not v.image_has_zero_divisor)):
        bad.append("trivial <=> h(0)=1 <=> image free of zero divisors")
    if (not v.is_trivial) != (v.value_at_zero in zd):
        bad.append("nontrivial <=> h(0) is a zero divisor")
    if v.maps_zerodivisors_into_zerodivisors and v.is_trivial:
        bad.append("h(Z_R) in Z_S => nontrivial")
    if prof.is_d_ring:
        chain = [not v.is_trivial, v.image_has_zero_divisor, v.maps_zero_to_zero]
        if ring_profile(source).is_d_ring:
            chain.append(v.maps_zerodivisors_into_zerodivisors)
        if len(set(chain)) != 1:
            bad.append("D-ring target: nontrivial <=> zero divisor in image <=> h(0)=0"
                       + (" <=> h(Z_R) in Z_S" if len(chain) == 4 else ""))
    return bad


def prop21_classify(h: MonoidHom, source_ring: FiniteRing, target_ring: FiniteRing) -> Prop21Verdict:
    """Classify a multiplicative homomorphism by its behaviour on zero divisors."""
    if h.source.ring is not source_ring or h.target.ring is not target_ring:
        raise MonoidRingMismatch("homomorphism is not between these rings' multiplicative monoids")
    szd = ring_profile(source_ring).zero_divisors
    tzd = set(ring_profile(target_ring).zero_divisors)
    img = h.image
    verdict = Prop21Verdict(
        is_trivial=all(v == target_ring.one for v in img),
        value_at_zero=img[source_ring.zero],
        image_has_zero_divisor=any(v in tzd for v in img),
        maps_zero_to_zero=img[source_ring.zero] == target_ring.zero,
        maps_zerodivisors_into_zerodivisors=all(img[z] in tzd for z in szd),
    )
    bad = prop21_violations(verdict, source_ring, target_ring)
    if bad:
        raise LemmaViolation(f"{h!r}: {'; '.join(bad)}")
    return verdict
