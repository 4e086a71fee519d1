"""Regenerate the shipped covering certificates.

Each certificate is built greedily from a fixed pair order and then extended
with the published dominance facts for that field, every one re-proved here.
Run from the repository root:  python3 tools/build_certificates.py
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction
from pathlib import Path

from qeuclid.covering import serialize_certificate, verify
from qeuclid.field import builtin_field
from qeuclid.regions import annotate_claim, build_certificate

H = Fraction(1, 2)
OUT = Path(__file__).resolve().parent.parent / "src" / "qeuclid" / "certificates"

ORDER = {
    2: [(0, 0)],
    3: [(0, 0), (-1, 0)],
    6: [(0, 0), (1, 0), (-2, -1)],
    7: [(0, 0), (1, 0), (-2, -1), (-4, 1)],
    11: [(0, 0), (1, 0), (-6, -2), (-2, -1), (-5, 1), (5, -2), (25, -8)],
    19: [(0, 0), (1, 0), (-2, 0), (2, -1), (-7, 1), (-3, -1), (7, -2), (-6, 1),
         (991, 227), (-19, 4), (-80, 18), (-430, -99), (90, -21)],
}

# (kind, lhs, rhs, interval); interval None means "between crossings"
PUBLISHED = {
    6: [
        ("geq", (1, 0, 1, -1), (0, 0, 1, -1), (0, H)),
        ("geq", (0, 0, 1, -1), (1, 0, 1, 1), (0, Fraction(1, 4))),
        ("leqc", (1, 0, 1, 1), H, (0, H)),
        ("geq", (-2, -1, -1, 1), (0, 0, 1, -1), (Fraction(1, 4), H)),
    ],
    7: [
        ("geq", (1, 0, 1, -1), (0, 0, 1, -1), (0, Fraction(1, 7))),
        ("leqc", (1, 0, 1, 1), H, None),
        ("geq", (-4, 1, 1, -1), (1, 0, 1, -1), None),
        ("leqc", (-4, 1, 1, 1), H, None),
        ("geq", (1, 0, 1, 1), (-2, -1, -1, -1), (0, H)),
    ],
    11: [
        ("leqc", (1, 0, 1, 1), H, None),
        ("geq", (-6, -2, -1, 1), (1, 0, 1, 1), None),
        ("geq", (1, 0, 1, 1), (-6, -2, -1, -1), None),
        ("geq", (-2, -1, -1, 1), (1, 0, 1, -1), (0, H)),
        ("geq", (1, 0, 1, -1), (-2, -1, -1, -1), (0, H)),
        ("geq", (-5, 1, 1, -1), (-2, -1, -1, 1), None),
        ("geq", (-2, -1, -1, 1), (-5, 1, 1, 1), None),
        ("leqc", (-5, 1, 1, 1), H, None),
        ("geq", (5, -2, -1, 1), (-5, 1, 1, 1), None),
        ("geq", (-5, 1, 1, 1), (5, -2, -1, -1), None),
        ("geq", (25, -8, -1, 1), (5, -2, -1, -1), None),
        ("geq", (5, -2, -1, 1), (25, -8, -1, -1), None),
    ],
    19: [
        ("geq", (1, 0, 1, -1), (0, 0, 1, -1), (0, H)),
        ("geq", (-2, 0, 1, -1), (1, 0, 1, -1), (Fraction(173, 1026), H)),
        ("geq", (1, 0, 1, -1), (-2, 0, 1, 1), (Fraction(173, 1026), H)),
        ("leqc", (-2, 0, 1, 1), H, None),
        ("geq", (2, -1, -1, 1), (-2, 0, 1, -1), (0, H)),
        ("geq", (-2, 0, 1, -1), (2, -1, -1, -1), (0, H)),
        ("leqc", (2, -1, -1, -1), H, None),
        ("geqc", (-7, 1, 1, -1), H, None),
        ("geq", (-7, 1, 1, -1), (2, -1, -1, 1), (0, H)),
        ("geq", (2, -1, -1, 1), (-7, 1, 1, 1), (0, H)),
        ("geq", (-3, -1, -1, 1), (1, 0, 1, -1), (0, H)),
        ("geq", (1, 0, 1, -1), (-3, -1, -1, -1), (0, H)),
        ("geq", (7, -2, -1, 1), (-2, 0, 1, 1), (0, Fraction(2, 5))),
        ("geq", (-2, 0, 1, 1), (7, -2, -1, -1), (0, Fraction(2, 5))),
        ("geq", (-6, 1, 1, -1), (7, -2, -1, -1), (0, Fraction(2, 5))),
        ("geq", (7, -2, -1, -1), (-6, 1, 1, 1), (0, Fraction(2, 5))),
        ("geq", (991, 227, 1, -1), (-3, -1, -1, 1), None),
        ("geq", (-3, -1, -1, 1), (991, 227, 1, 1), None),
        ("geq", (-19, 4, 1, -1), (-6, 1, 1, 1), (0, Fraction(2, 5))),
        ("geq", (-6, 1, 1, 1), (-19, 4, 1, 1), (0, Fraction(2, 5))),
        ("geq", (-80, 18, 1, -1), (-19, 4, 1, 1), (0, Fraction(2, 5))),
        ("geq", (-19, 4, 1, 1), (-80, 18, 1, 1), (0, Fraction(2, 5))),
        ("geq", (-430, -99, -1, 1), (991, 227, 1, -1), (0, Fraction(2, 5))),
        ("geq", (991, 227, 1, -1), (-430, -99, -1, -1), (0, Fraction(2, 5))),
        ("geq", (90, -21, -1, 1), (-80, 18, 1, 1), (0, Fraction(2, 5))),
        ("geq", (-80, 18, 1, 1), (90, -21, -1, -1), (0, Fraction(2, 5))),
        ("geq", (90, -21, -1, 1), (-430, -99, -1, 1), None),
        ("geq", (-430, -99, -1, 1), (90, -21, -1, -1), (0, Fraction(2, 5))),
    ],
}


def build(m: int) -> str:
    F = builtin_field(m)
    res = build_certificate(F, ORDER[m])
    if not res.complete:
        raise SystemExit(f"m={m}: greedy construction incomplete: {res.failures}")
    cert = res.certificate
    have = {(c.kind, c.lhs, c.rhs, c.lo, c.hi) for c in cert.claims}
    for kind, lhs, rhs, iv in PUBLISHED.get(m, []):
        n = len(cert.claims)
        claim = annotate_claim(cert, kind, lhs, rhs, iv)
        if (claim.kind, claim.lhs, claim.rhs, claim.lo, claim.hi) in have:
            del cert.claims[n:]
    report = verify(cert)
    if not report.ok:
        raise SystemExit(f"m={m}: generated certificate rejected\n{report.render()}")
    header = (f"# Covering of [0,1/2]^2 for Q(sqrt({m})), M1 = {F.M1}.\n"
              f"# Generated by tools/build_certificates.py; check with `qeuclid verify`.\n")
    return header + serialize_certificate(cert)


def main(argv) -> None:
    ms = [int(a) for a in argv] or sorted(ORDER)
    OUT.mkdir(parents=True, exist_ok=True)
    for m in ms:
        t = time.perf_counter()
        (OUT / f"m{m}.cert").write_text(build(m), encoding="utf-8")
        print(f"m={m}: written in {time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main(sys.argv[1:])
