"""Ring specifications: a tiny AST, a canonical printer and a parser.

Grammar accepted by :func:`parse_spec`::

    ring  := term ( " x " term )*
    term  := atom ( "[x]/(" poly ")" )*
    atom  := "Z/" INT | "(" ring ")"
    poly  := ["-"] mono ( ("+" | "-") mono )*
    mono  := INT ["*"] "x" ["^" INT] | "x" ["^" INT] | INT

The product separator must be a standalone ``x`` surrounded by whitespace.
Whitespace inside a polynomial is ignored.  Integer coefficients are read as
multiples of the base ring's identity and reduced modulo its characteristic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union

from .errors import InvalidSpec, NonMonicModulus, ParseError, SizeCapExceeded

DEFAULT_MAX_SIZE = 4096


@dataclass(frozen=True)
class Zmod:
    n: int


@dataclass(frozen=True)
class PolyQuotient:
    base: "RingSpec"
    # lowest degree first, leading coefficient last
    modulus: Tuple[int, ...]

    @property
    def degree(self):
        return len(self.modulus) - 1


@dataclass(frozen=True)
class Product:
    factors: Tuple["RingSpec", ...]


RingSpec = Union[Zmod, PolyQuotient, Product]


def characteristic(spec: RingSpec) -> int:
    if isinstance(spec, Zmod):
        return spec.n
    if isinstance(spec, PolyQuotient):
        return characteristic(spec.base)
    if isinstance(spec, Product):
        return math.lcm(*(characteristic(f) for f in spec.factors))
    raise InvalidSpec(f"not a ring spec: {spec!r}")


def spec_size(spec: RingSpec) -> int:
    if isinstance(spec, Zmod):
        return spec.n
    if isinstance(spec, PolyQuotient):
        return spec_size(spec.base) ** spec.degree
    if isinstance(spec, Product):
        return math.prod(spec_size(f) for f in spec.factors)
    raise InvalidSpec(f"not a ring spec: {spec!r}")


def normalize_modulus(base: RingSpec, coeffs) -> Tuple[int, ...]:
    """Reduce integer coefficients into ``base`` and strip vanishing top terms."""
    char = characteristic(base)
    reduced = [c % char for c in coeffs]
    while reduced and reduced[-1] == 0:
        reduced.pop()
    if len(reduced) < 2:
        raise InvalidSpec("modulus must have degree at least 1 after reduction")
    if reduced[-1] != 1 % char:
        raise NonMonicModulus(
            f"leading coefficient {reduced[-1]} is not 1 in characteristic {char}")
    return tuple(reduced)


def quotient(base: RingSpec, coeffs) -> PolyQuotient:
    """Build ``base[x]/(coeffs)`` with the modulus normalized."""
    return PolyQuotient(base, normalize_modulus(base, coeffs))


def validate(spec: RingSpec, max_size: int = DEFAULT_MAX_SIZE) -> None:
    """Raise unless ``spec`` satisfies the structural invariants and the size cap."""
    if isinstance(spec, Zmod):
        if not isinstance(spec.n, int) or spec.n < 2:
            raise InvalidSpec(f"Z/n needs n >= 2, got {spec.n!r}")
    elif isinstance(spec, PolyQuotient):
        validate(spec.base, max_size)
        if spec.degree < 1:
            raise InvalidSpec("modulus must have degree >= 1")
        if normalize_modulus(spec.base, spec.modulus) != tuple(spec.modulus):
            raise InvalidSpec(f"modulus {spec.modulus} is not in normal form")
    elif isinstance(spec, Product):
        if len(spec.factors) < 2:
            raise InvalidSpec("a product needs at least two factors")
        for f in spec.factors:
            validate(f, max_size)
    else:
        raise InvalidSpec(f"not a ring spec: {spec!r}")
    size = spec_size(spec)
    if size > max_size:
        raise SizeCapExceeded(size, max_size)


# -- printing ---------------------------------------------------------------

def format_poly(coeffs) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
            continue
        mono = "x" if k == 1 else f"x^{k}"
        parts.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(parts) if parts else "0"


def format_spec(spec: RingSpec) -> str:
    """Canonical string form; ``parse_spec(format_spec(s)) == s``."""
    if isinstance(spec, Zmod):
        return f"Z/{spec.n}"
    if isinstance(spec, PolyQuotient):
        base = format_spec(spec.base)
        if isinstance(spec.base, Product):
            base = f"({base})"
        return f"{base}[x]/({format_poly(spec.modulus)})"
    if isinstance(spec, Product):
        return " x ".join(
            f"({format_spec(f)})" if isinstance(f, Product) else format_spec(f)
            for f in spec.factors)
    raise InvalidSpec(f"not a ring spec: {spec!r}")


# -- parsing ----------------------------------------------------------------

class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        return ParseError(message, self.text, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s):
        return self.text.startswith(s, self.pos)

    def expect(self, s):
        if not self.peek(s):
            raise self.error(f"expected {s!r}")
        self.pos += len(s)

    def integer(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def at_product_sep(self):
        # " x " : whitespace, literal x, whitespace
        i = self.pos
        if i == 0 or not self.text[i - 1].isspace():
            return False
        return (self.text.startswith("x", i) and i + 1 < len(self.text)
                and self.text[i + 1].isspace())

    def ring(self):
        factors = [self.term()]
        while True:
            save = self.pos
            self.skip_ws()
            if self.at_product_sep():
                self.pos += 1
                self.skip_ws()
                factors.append(self.term())
            else:
                self.pos = save
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def term(self):
        spec = self.atom()
        while True:
            save = self.pos
            self.skip_ws()
            if not self.peek("["):
                self.pos = save
                return spec
            self.expect("[x]/(")
            start = self.pos
            depth = 0
            while self.pos < len(self.text):
                ch = self.text[self.pos]
                if ch == ")" and depth == 0:
                    break
                depth += ch == "("
                depth -= ch == ")"
                self.pos += 1
            else:
                raise self.error("unterminated modulus")
            coeffs = _parse_poly(self.text, start, self.pos)
            self.pos += 1
            try:
                spec = quotient(spec, coeffs)
            except InvalidSpec as exc:
                if isinstance(exc, NonMonicModulus):
                    raise NonMonicModulus(f"{exc} (modulus at position {start})") from None
                raise self.error(str(exc), start) from None

    def atom(self):
        self.skip_ws()
        if self.peek("("):
            self.pos += 1
            spec = self.ring()
            self.skip_ws()
            self.expect(")")
            return spec
        if self.peek("Z/"):
            self.pos += 2
            start = self.pos
            n = self.integer()
            if n < 2:
                raise self.error("Z/n needs n >= 2", start)
            return Zmod(n)
        raise self.error("expected 'Z/' or '('")


def _parse_poly(text, start, end):
    """Parse ``text[start:end]`` into a lowest-degree-first integer list."""
    # (char, original position) pairs, whitespace dropped
    toks = [(ch, i) for i, ch in enumerate(text[start:end], start) if not ch.isspace()]
    toks.append(("", end))
    i = 0
    coeffs = {}

    def err(msg):
        return ParseError(msg, text, toks[i][1])

    def number():
        nonlocal i
        j = i
        while toks[i][0].isdigit():
            i += 1
        if i == j:
            raise err("expected an integer")
        return int("".join(ch for ch, _ in toks[j:i]))

    if toks[0][0] == "":
        raise err("empty polynomial")
    first = True
    while toks[i][0] != "":
        sign = 1
        if toks[i][0] in "+-":
            sign = -1 if toks[i][0] == "-" else 1
            i += 1
        elif not first:
            raise err("expected '+' or '-'")
        first = False
        coeff = 1
        has_coeff = False
        if toks[i][0].isdigit():
            coeff = number()
            has_coeff = True
            if toks[i][0] == "*":
                i += 1
                if toks[i][0] != "x":
                    raise err("expected 'x' after '*'")
        deg = 0
        if toks[i][0] == "x":
            i += 1
            deg = 1
            if toks[i][0] == "^":
                i += 1
                deg = number()
        elif not has_coeff:
            raise err("expected a monomial")
        coeffs[deg] = coeffs.get(deg, 0) + sign * coeff
    top = max(coeffs)
    return [coeffs.get(k, 0) for k in range(top + 1)]


def parse_spec(text: str, max_size: int = DEFAULT_MAX_SIZE) -> RingSpec:
    """Parse a ring description such as ``"Z/4 x Z/2[x]/(x^3)"``."""
    if not text or not text.strip():
        raise ParseError("empty ring description", text, 0)
    p = _Parser(text)
    spec = p.ring()
    p.skip_ws()
    if p.pos != len(text):
        raise p.error("unexpected trailing input")
    validate(spec, max_size)
    return spec
