"""Plain-data and text renderings of library results.

Every ``*_data`` function returns JSON-ready dicts and lists in a canonical
order; :func:`to_json` serializes them with sorted keys so the output is
byte-stable.  Element values are written as the ring's labels.
"""

from __future__ import annotations

import json
from typing import List

from .homs import MonoidHom
from .matrix import HomMatrix
from .ring import FiniteRing, classify_element, ring_profile
from .rigidity import RigidityReport
from .spec import format_spec


def to_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _yn(flag):
    return "yes" if flag else "no"


def _set(M, members):
    return "{" + ", ".join(M.labels[x] for x in members) + "}"


def image_labels(h: MonoidHom) -> List[str]:
    labels = h.target.labels
    return [labels[v] for v in h.image]


def entry_data(h: MonoidHom) -> dict:
    if h.is_trivial:
        kind = "ee"
    elif h.is_identity:
        kind = "id"
    else:
        kind = "hom"
    return {"kind": kind, "image": image_labels(h)}


def entry_text(h: MonoidHom) -> str:
    if h.is_trivial:
        return "ee"
    if h.is_identity:
        return "id"
    return "[" + " ".join(image_labels(h)) + "]"


def matrix_data(A: HomMatrix) -> list:
    return [[entry_data(e) for e in row] for row in A.entries]


def matrix_lines(A: HomMatrix, indent="    ") -> List[str]:
    cells = [[entry_text(e) for e in row] for row in A.entries]
    width = max(len(c) for row in cells for c in row)
    return [indent + "| " + "  ".join(c.ljust(width) for c in row) + " |" for row in cells]


# -- classify -------------------------------------------------------------------

def classify_data(R: FiniteRing) -> dict:
    prof = ring_profile(R)
    elements = []
    for a in range(R.size):
        e = classify_element(R, a)
        elements.append({"element": R.label(a), "unit": e.is_unit,
                         "zero_divisor": e.is_zero_divisor,
                         "nilpotency_index": e.nilpotency_index})
    lab = R.labels
    return {
        "ring": R.name,
        "size": R.size,
        "local": prof.is_local,
        "d_ring": prof.is_d_ring,
        "total_ring_of_fractions": prof.is_total_ring_of_fractions,
        "units": [lab[x] for x in prof.units],
        "zero_divisors": [lab[x] for x in prof.zero_divisors],
        "nilradical": [lab[x] for x in prof.nilradical],
        "elements": elements,
    }


def classify_text(R: FiniteRing) -> str:
    d = classify_data(R)
    lines = [
        f"ring: {d['ring']}",
        f"size: {d['size']}",
        f"local: {str(d['local']).lower()}",
        f"D-ring: {str(d['d_ring']).lower()}",
        f"total ring of fractions: {str(d['total_ring_of_fractions']).lower()}",
        "units: {" + ", ".join(d["units"]) + "}",
        "zero divisors: {" + ", ".join(d["zero_divisors"]) + "}",
        "nilradical: {" + ", ".join(d["nilradical"]) + "}",
        "",
    ]
    w = max(len("element"), *(len(e["element"]) for e in d["elements"]))
    lines.append(f"{'element'.ljust(w)}  unit  zero-divisor  nilpotency")
    for e in d["elements"]:
        nil = "-" if e["nilpotency_index"] is None else str(e["nilpotency_index"])
        lines.append(f"{e['element'].ljust(w)}  {_yn(e['unit']).ljust(4)}  "
                     f"{_yn(e['zero_divisor']).ljust(12)}  {nil}")
    return "\n".join(lines) + "\n"


# -- homs / aut -------------------------------------------------------------------

def homs_data(R: FiniteRing, S: FiniteRing, homs: List[MonoidHom]) -> dict:
    return {
        "source": R.name,
        "target": S.name,
        "source_elements": list(R.labels),
        "count": len(homs),
        "homs": [image_labels(h) for h in homs],
    }


def homs_text(R: FiniteRing, S: FiniteRing, homs: List[MonoidHom]) -> str:
    lines = [f"source: {R.name}", f"target: {S.name}", f"|Hom|: {len(homs)}",
             "images of: " + " ".join(R.labels)]
    for k, h in enumerate(homs):
        lines.append(f"  h{k}: " + " ".join(image_labels(h)))
    return "\n".join(lines) + "\n"


def aut_data(R: FiniteRing, auts: List[MonoidHom]) -> dict:
    return {
        "ring": R.name,
        "elements": list(R.labels),
        "order": len(auts),
        "automorphisms": [image_labels(h) for h in auts],
    }


def aut_text(R: FiniteRing, auts: List[MonoidHom]) -> str:
    lines = [f"ring: {R.name}", f"|Aut|: {len(auts)}", "images of: " + " ".join(R.labels)]
    for k, h in enumerate(auts):
        lines.append(f"  a{k}: " + " ".join(image_labels(h)))
    return "\n".join(lines) + "\n"


# -- verify -----------------------------------------------------------------------

def rigidity_data(rep: RigidityReport) -> dict:
    autos = []
    for rec in rep.per_automorphism:
        autos.append({
            "image": image_labels(rec.theta),
            "diagonal": rec.is_diagonal,
            "c": None if rec.indices is None else list(rec.indices.c),
            "d": None if rec.indices is None else list(rec.indices.d),
            "cross_terms_trivial": rec.offdiagonal.cross_terms_trivial,
            "matrix": matrix_data(rec.matrix),
        })
    return {
        "factors": [format_spec(s) for s in rep.factor_specs],
        "cardinalities": rep.cardinalities,
        "distinct_cardinalities": rep.distinct_cardinalities,
        "factor_local": rep.factor_local,
        "factor_d_ring": rep.factor_d_ring,
        "factor_total_ring_of_fractions": rep.factor_total_ring_of_fractions,
        "hypotheses_hold": rep.hypotheses_hold,
        "theorem_applies": rep.theorem_applies,
        "aut_orders_per_factor": rep.aut_orders_per_factor,
        "diagonal_order": rep.diagonal_order,
        "product_aut_order": rep.product_aut_order,
        "methods_agree": rep.methods_agree,
        "decomposition_holds": rep.decomposition_holds,
        "nondiagonal_witnesses": [matrix_data(A) for A in rep.nondiagonal_witnesses],
        "automorphisms": autos,
        "violations": list(rep.violations),
    }


def rigidity_text(rep: RigidityReport) -> str:
    d = rigidity_data(rep)
    names = d["factors"]
    lines = [
        "factors: " + ", ".join(names),
        "cardinalities: " + ", ".join(map(str, d["cardinalities"]))
        + f" (pairwise distinct: {_yn(d['distinct_cardinalities'])})",
        "factor hypotheses (local / D-ring / total ring of fractions):",
    ]
    for k, name in enumerate(names):
        lines.append(f"  {name}: {_yn(d['factor_local'][k])} / {_yn(d['factor_d_ring'][k])}"
                     f" / {_yn(d['factor_total_ring_of_fractions'][k])}")
    lines += [
        "|Aut| per factor: " + ", ".join(map(str, d["aut_orders_per_factor"]))
        + f" (product {d['diagonal_order']})",
        f"|Aut(product)|: {d['product_aut_order']}",
        f"methods agree: {_yn(d['methods_agree'])}",
        f"decomposition holds: {_yn(d['decomposition_holds'])}",
        f"non-diagonal automorphisms: {len(rep.nondiagonal_witnesses)}",
    ]
    for k, A in enumerate(rep.nondiagonal_witnesses):
        lines.append(f"  witness {k}:")
        lines += matrix_lines(A)
    lines.append("automorphisms:")
    for k, rec in enumerate(rep.per_automorphism):
        head = f"  #{k} {'diagonal' if rec.is_diagonal else 'non-diagonal'}"
        if rec.indices is not None:
            head += (f"  c=({','.join(map(str, rec.indices.c))})"
                     f" d=({','.join(map(str, rec.indices.d))})")
        head += f"  cross terms trivial: {_yn(rec.offdiagonal.cross_terms_trivial)}"
        lines.append(head)
        lines += matrix_lines(rec.matrix)
    if rep.violations:
        lines.append("violations:")
        lines += ["  " + v for v in rep.violations]
    else:
        lines.append("violations: none")
    return "\n".join(lines) + "\n"


# -- catalog ----------------------------------------------------------------------

def catalog_data(rows) -> dict:
    return {
        "rings": rows,
        "count": len(rows),
        "agreeing": sum(r["agree"] for r in rows),
    }


def catalog_text(rows) -> str:
    w = max(len("ring"), *(len(r["ring"]) for r in rows)) if rows else 4
    lines = [f"{'ring'.ljust(w)}  size  local  D-ring  total  agree"]
    for r in rows:
        lines.append(f"{r['ring'].ljust(w)}  {str(r['size']).rjust(4)}  {_yn(r['local']).ljust(5)}"
                     f"  {_yn(r['d_ring']).ljust(6)}  {_yn(r['total_ring_of_fractions']).ljust(5)}"
                     f"  {_yn(r['agree'])}")
    agree = sum(r["agree"] for r in rows)
    lines.append(f"D-ring <=> local agreement: {agree}/{len(rows)}")
    return "\n".join(lines) + "\n"
