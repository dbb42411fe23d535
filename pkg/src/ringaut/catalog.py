"""Built-in families of small rings."""

from __future__ import annotations

from .ring import construct_ring, ring_profile
from .spec import DEFAULT_MAX_SIZE, Zmod, format_spec, quotient

PRIMES = (2, 3, 5, 7)

# named rings used by the test-suite alongside the generated families
EXTRA_EXAMPLES = {
    "GF(4)": "Z/2[x]/(x^2+x+1)",
    "GF(8)": "Z/2[x]/(x^3+x+1)",
    "GF(9)": "Z/3[x]/(x^2+1)",
    "Z/4[x]/(x^2)": "Z/4[x]/(x^2)",
    "GF(4)[x]/(x^2)": "Z/2[x]/(x^2+x+1)[x]/(x^2)",
    "Z/2[x]/(x^2+1)": "Z/2[x]/(x^2+1)",
    "Z/3[x]/(x^2-1)": "Z/3[x]/(x^2+2)",
    "Z/2[x]/(x^2+x)": "Z/2[x]/(x^2+x)",
}


def quotient_templates(max_order):
    """``Z/p^n`` and ``Z/p[x]/(x^n)`` for primes ``p <= 7``, ``n <= 3``."""
    out = []
    for p in PRIMES:
        for n in range(1, 4):
            if p ** n > max_order:
                break
            out.append(Zmod(p ** n))
            out.append(quotient(Zmod(p), [0] * n + [1]))
    return out


def catalog_specs(max_order=32):
    """Every ``Z/n`` with ``2 <= n <= max_order`` followed by the quotient
    templates, without repeats."""
    seen = []
    for spec in [Zmod(n) for n in range(2, max_order + 1)] + quotient_templates(max_order):
        if spec not in seen:
            seen.append(spec)
    return seen


def catalog_rows(max_order=32, max_size=DEFAULT_MAX_SIZE):
    """Profile every catalog ring; ``agree`` compares the D-ring and local flags."""
    rows = []
    for spec in catalog_specs(max_order):
        R = construct_ring(spec, max_size=max_size)
        prof = ring_profile(R)
        rows.append({
            "ring": format_spec(spec),
            "size": R.size,
            "local": prof.is_local,
            "d_ring": prof.is_d_ring,
            "total_ring_of_fractions": prof.is_total_ring_of_fractions,
            "agree": prof.is_local == prof.is_d_ring,
        })
    return rows
