"""Catalog of all family instances up to a group-order bound.

Enumeration policy: every spec whose constraints hold and whose group order
is at most max_order, ordered by (order, case, n, m, k).  Polyhedral product
families are built with the polyhedral factor on the left (so the pure
left-acting rows read off the framing value 0), diagonal families with their
circle factor on the left.
"""

import csv
import io
import json
from dataclasses import dataclass
from math import gcd

from .classify import classify
from .errors import CapExceeded
from .families import FamilySpec, build_family, family_order
from .spingroups import DEFAULT_CAP
from .topology import contact_verdicts

_CSV_COLUMNS = [
    "family", "order", "case", "n", "m", "k", "swapped", "index",
    "h1", "modulus", "framing_plus", "framing_minus",
    "plus", "minus", "euler_trivial",
]


@dataclass(frozen=True)
class CatalogRow:
    spec: FamilySpec
    order: int
    case: str
    n: int
    m: int
    k: int
    swapped: bool
    index: int
    h1: tuple
    modulus: int
    framing_plus: int | None
    framing_minus: int | None
    plus_exists: bool
    minus_exists: bool
    euler_trivial: str

    def sort_key(self):
        return (self.order, self.case, self.n, self.m, self.k, self.spec.family)

    def to_json(self):
        return {
            "family": self.spec.label(),
            "spec": self.spec.to_json(),
            "order": self.order,
            "case": self.case,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "swapped": self.swapped,
            "index": self.index,
            "h1": list(self.h1),
            "modulus": self.modulus,
            "framing_plus": self.framing_plus,
            "framing_minus": self.framing_minus,
            "plus": "Exists" if self.plus_exists else "NotExists",
            "minus": "Exists" if self.minus_exists else "NotExists",
            "euler_trivial": self.euler_trivial,
        }

    def to_csv_fields(self):
        j = self.to_json()
        return [
            j["family"], str(self.order), self.case,
            str(self.n), str(self.m), str(self.k),
            str(self.swapped).lower(), str(self.index),
            ";".join(str(f) for f in self.h1) or "-",
            str(self.modulus),
            "∅" if self.framing_plus is None else str(self.framing_plus),
            "∅" if self.framing_minus is None else str(self.framing_minus),
            j["plus"], j["minus"], self.euler_trivial,
        ]


def _odd_coprime(limit, base):
    m = 1
    while m <= limit:
        if gcd(m, base) == 1:
            yield m
        m += 2


def enumerate_specs(max_order):
    """Deterministic list of family specs with |G| <= max_order."""
    specs = []
    for n in range(1, max_order + 1):
        specs.append(FamilySpec("Cyclic", n=n, side="left"))
    n = 2
    while 4 * n <= max_order:
        for m in _odd_coprime(max_order // (4 * n), 4 * n):
            specs.append(FamilySpec("Quaternionic", n=n, m=m, side="left"))
        n += 1
    for fam, size in (("BinT", 24), ("BinO", 48), ("BinI", 120)):
        if size > max_order:
            continue
        for m in _odd_coprime(max_order // size, size):
            specs.append(FamilySpec(fam, m=m, side="left"))
    k = 3
    while (2 ** k) * 3 <= max_order:
        for m in _odd_coprime(max_order // (3 * 2 ** k), 2):
            n = 3
            while (2 ** k) * m * n <= max_order:
                if gcd(m, n) == 1:
                    specs.append(FamilySpec("DiagonalQ", n=n, m=m, k=k))
                n += 2
        k += 1
    k = 2
    while 8 * (3 ** k) <= max_order:
        for m in _odd_coprime(max_order // (8 * 3 ** k), 6):
            specs.append(FamilySpec("DiagonalT", m=m, k=k))
        k += 1
    return specs


def build_catalog(max_order, cap=DEFAULT_CAP):
    rows = []
    for spec in enumerate_specs(max_order):
        if family_order(spec) > cap // 2:
            raise CapExceeded(
                f"spec {spec.label()} exceeds the configured cap {cap}"
            )
        group = build_family(spec, cap=cap)
        res = classify(group)
        rep = contact_verdicts(group)
        rows.append(CatalogRow(
            spec=spec,
            order=group.order,
            case=res.case,
            n=res.n,
            m=res.m,
            k=res.k,
            swapped=res.swapped,
            index=res.index,
            h1=rep.h1.invariant_factors,
            modulus=rep.framing_plus.modulus,
            framing_plus=rep.framing_plus.value,
            framing_minus=rep.framing_minus.value,
            plus_exists=rep.plus_orientation.exists,
            minus_exists=rep.minus_orientation.exists,
            euler_trivial=rep.euler_trivial_coorientable,
        ))
    rows.sort(key=CatalogRow.sort_key)
    return rows


def catalog_json_bytes(rows, max_order, seed):
    doc = {
        "max_order": max_order,
        "seed": seed,
        "rows": [r.to_json() for r in rows],
    }
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def catalog_csv_bytes(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for r in rows:
        writer.writerow(r.to_csv_fields())
    return buf.getvalue().encode("utf-8")


def emit_catalog(max_order, out_base, seed=42, cap=DEFAULT_CAP):
    """Write {out_base}.csv and {out_base}.json; byte-deterministic."""
    rows = build_catalog(max_order, cap=cap)
    json_path = f"{out_base}.json"
    csv_path = f"{out_base}.csv"
    with open(json_path, "wb") as fh:
        fh.write(catalog_json_bytes(rows, max_order, seed))
    with open(csv_path, "wb") as fh:
        fh.write(catalog_csv_bytes(rows))
    return rows, json_path, csv_path
