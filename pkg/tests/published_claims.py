"""Dominance claims published with the covering proofs, used as oracles.

Each entry: (m, kind, lhs, rhs, interval, poly, case).  ``kind`` is ``geq``
(lhs >= rhs), ``geqc`` (branch >= constant) or ``leqc`` (branch <= constant).
Intervals given as ``None`` have an endpoint at a named intersection point; for
those only the polynomial is checked.
"""

from fractions import Fraction

H = Fraction(1, 2)

CLAIMS = [
    # m = 6
    (6, "geq", (1, 0, 1, -1), (0, 0, 1, -1), (0, H), "2a+1", None),
    (6, "geq", (0, 0, 1, -1), (1, 0, 1, 1), (0, Fraction(1, 4)), "1-4a", None),
    (6, "geqc", (1, 0, 1, -1), H, (0, H), "4a^2+8a+1", "a2"),
    (6, "leqc", (1, 0, 1, 1), H, (0, H), "4a^2+8a-5", "b"),
    (6, "geq", (-2, -1, -1, 1), (0, 0, 1, -1), (Fraction(1, 4), H), "-32a^2+112a-23", "b"),
    (6, "geq", (0, 0, 1, -1), (-2, -1, -1, -1), (Fraction(1, 4), H), "4a^2-8a+7", "minus"),
    # m = 7
    (7, "geq", (1, 0, 1, -1), (0, 0, 1, -1), (0, Fraction(1, 7)), "2a+1", None),
    (7, "geq", (0, 0, 1, -1), (1, 0, 1, 1), (0, Fraction(1, 7)), "1-7a", None),
    (7, "geqc", (1, 0, 1, -1), H, None, "28a^2+56a-3", "a2"),
    (7, "leqc", (1, 0, 1, 1), H, None, "28a^2+56a-39", "b"),
    (7, "geq", (-4, 1, 1, -1), (1, 0, 1, -1), None, "4a^2-12a+1", None),
    (7, "geq", (1, 0, 1, -1), (-4, 1, 1, 1), None, "-392a^2+1036a+5", None),
    (7, "geqc", (-4, 1, 1, -1), H, None, "28a^2-224a+25", "a1"),
    (7, "leqc", (-4, 1, 1, 1), H, None, "28a^2-224a-11", "b"),
    (7, "geq", (-2, -1, -1, 1), (1, 0, 1, 1), (0, H), "4a^2-4a+3", "minus"),
    (7, "geq", (1, 0, 1, 1), (-2, -1, -1, -1), (0, H), "-392a^2+1148a+129", "b"),
    (7, "geq", (0, 0, 1, -1), (-2, -1, -1, -1), (0, H), "4a^2-8a+3", "a1"),
    # m = 11
    (11, "geqc", (1, 0, 1, -1), H, None, "44a^2+88a-39", "a2"),
    (11, "leqc", (1, 0, 1, 1), H, None, "44a^2+88a-115", "b"),
    (11, "geq", (-6, -2, -1, 1), (1, 0, 1, 1), None, "20a^2-100a+57", "a1"),
    (11, "geq", (1, 0, 1, 1), (-6, -2, -1, -1), None, "-605a^2+4488a-874", "b"),
    (11, "geq", (-2, -1, -1, 1), (1, 0, 1, -1), (0, H), "-968a^2+3476a+1527", "b"),
    (11, "geq", (1, 0, 1, -1), (-2, -1, -1, -1), (0, H), "4a^2-4a+9", "minus"),
    (11, "geq", (-5, 1, 1, -1), (-2, -1, -1, 1), None, "4235a^2-29018a+3009", "a1"),
    (11, "geq", (-2, -1, -1, 1), (-5, 1, 1, 1), None, "-140a^2+980a-23", "b"),
    (11, "geqc", (-5, 1, 1, -1), H, None, "44a^2-440a+49", "a1"),
    (11, "leqc", (-5, 1, 1, 1), H, None, "44a^2-440a-27", "b"),
    (11, "geq", (5, -2, -1, 1), (-5, 1, 1, 1), None, "4a^2+243", "minus"),
    (11, "geq", (-5, 1, 1, 1), (5, -2, -1, -1), None, "-242a^2-4180a+5809", "b"),
    (11, "geq", (25, -8, -1, 1), (5, -2, -1, -1), None, "-1936a^2-41360a+6503", "b"),
    (11, "geq", (5, -2, -1, 1), (25, -8, -1, -1), None, "1936a^2+74800a+495097", "a2"),
    # m = 19
    (19, "geq", (1, 0, 1, -1), (0, 0, 1, -1), (0, H), "2a+1", None),
    (19, "geq", (-2, 0, 1, -1), (1, 0, 1, -1), (Fraction(173, 1026), H), "-2a+1", None),
    (19, "geq", (1, 0, 1, -1), (-2, 0, 1, 1), (Fraction(173, 1026), H), "1026a-173", None),
    (19, "geqc", (-2, 0, 1, -1), H, None, "684a^2-2736a+167", "a1"),
    (19, "leqc", (-2, 0, 1, 1), H, None, "684a^2-2736a-1193", "b"),
    (19, "geq", (2, -1, -1, 1), (-2, 0, 1, -1), (0, H), "-350892a^2-930240a+1782337", "b"),
    (19, "geq", (-2, 0, 1, -1), (2, -1, -1, -1), (0, H), "108a^2+167", "minus"),
    (19, "geqc", (2, -1, -1, 1), H, None, "-684a^2-2736a+1193", "b"),
    (19, "leqc", (2, -1, -1, -1), H, None, "-684a^2-2736a-167", "a2"),
    (19, "geqc", (-7, 1, 1, -1), H, None, "684a^2-9576a+4955", "a1"),
    (19, "leqc", (-7, 1, 1, 1), H, None, "684a^2-9576a+3595", "b"),
    (19, "geq", (-7, 1, 1, -1), (2, -1, -1, 1), (0, H), "-116964a^2+1003428a+421651", "b"),
    (19, "geq", (2, -1, -1, 1), (-7, 1, 1, 1), (0, H), "36a^2-180a+85", "a1"),
    (19, "geq", (-3, -1, -1, 1), (1, 0, 1, -1), (0, H), "-350892a^2+1632024a+501205", "b"),
    (19, "geq", (1, 0, 1, -1), (-3, -1, -1, -1), (0, H), "108a^2-216a+275", "minus"),
    (19, "geq", (7, -2, -1, 1), (-2, 0, 1, 1), (0, Fraction(2, 5)), "36a^2+180a+85", "a2"),
    (19, "geq", (-2, 0, 1, 1), (7, -2, -1, -1), (0, Fraction(2, 5)), "-116964a^2-1003428a+421651", "b"),
    (19, "geq", (-6, 1, 1, -1), (7, -2, -1, -1), (0, Fraction(2, 5)), "2a^2+2a+85", "minus"),
    (19, "geq", (7, -2, -1, -1), (-6, 1, 1, 1), (0, Fraction(2, 5)), "-58482a^2+697338a+2892295", "b"),
    (19, "geq", (991, 227, 1, -1), (-3, -1, -1, 1), None, "-29241a^2-29060082a+480767", "b"),
    (19, "geq", (-3, -1, -1, 1), (991, 227, 1, 1), None, "a^2+988a", "a2"),
    (19, "geq", (-19, 4, 1, -1), (-6, 1, 1, 1), (0, Fraction(2, 5)), "-58482a^2+706230a+2838943", "b"),
    (19, "geq", (-6, 1, 1, 1), (-19, 4, 1, 1), (0, Fraction(2, 5)), "2a^2-50a+57", "a1"),
    (19, "geq", (-80, 18, 1, -1), (-19, 4, 1, 1), (0, Fraction(2, 5)), "-350892a^2+20552148a+169237849", "b"),
    (19, "geq", (-19, 4, 1, 1), (-80, 18, 1, 1), (0, Fraction(2, 5)), "108a^2-10692a+30799", "a1"),
    (19, "geq", (-430, -99, -1, 1), (991, 227, 1, -1), (0, Fraction(2, 5)), "-350892a^2+133617348a+242222193409", "b"),
    (19, "geq", (991, 227, 1, -1), (-430, -99, -1, -1), (0, Fraction(2, 5)), "108a^2+60588a+26245559", "minus"),
    (19, "geq", (90, -21, -1, 1), (-80, 18, 1, 1), (0, Fraction(2, 5)), "4a^2+40a+86121", "minus"),
    (19, "geq", (-80, 18, 1, 1), (90, -21, -1, -1), (0, Fraction(2, 5)), "-116964a^2-40704840a+644319959", "b"),
    (19, "geq", (90, -21, -1, 1), (-430, -99, -1, 1), None, "229a^2-77860a+399", "a1"),
    (19, "geq", (-430, -99, -1, 1), (90, -21, -1, -1), (0, Fraction(2, 5)), "-1131655941a^2+384755461740a+153230834", "b"),
]
