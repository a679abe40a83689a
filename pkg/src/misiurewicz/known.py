"""Known 2-adic valuations of tr(P_{m,p}) used as regression data.

Each entry is (m, p, v2(tr P_{m,p})).  Rows with v > m + p are the
exceedances of the sharper bound v <= m + p.
"""

KNOWN_TRACE_VALUATIONS = (
    (10, 509, 512), (10, 503, 511), (10, 499, 509), (10, 491, 496),
    (10, 487, 500), (10, 479, 486), (10, 467, 473), (10, 463, 470),
    (10, 461, 470), (10, 457, 465), (9, 251, 256), (9, 241, 249),
    (9, 239, 245), (9, 233, 240), (9, 229, 237), (9, 227, 236),
    (9, 223, 230), (9, 211, 219), (9, 199, 206), (9, 197, 202),
    (8, 113, 120), (8, 109, 112), (8, 107, 112), (8, 103, 109),
    (8, 101, 105), (8, 97, 102), (8, 89, 96), (8, 83, 91),
    (8, 79, 86), (8, 73, 78), (7, 61, 64), (7, 59, 65),
    (7, 53, 56), (7, 47, 54), (7, 43, 50), (7, 41, 45),
    (7, 37, 43), (7, 31, 32), (7, 29, 33), (7, 23, 31),
    (6, 29, 32), (6, 23, 30), (6, 19, 24), (6, 17, 21),
    (6, 13, 19), (6, 11, 16), (6, 7, 9), (6, 5, 9),
    (6, 3, 6), (6, 2, 6), (5, 13, 18), (5, 11, 15),
    (5, 7, 8), (5, 5, 8), (5, 3, 5), (5, 2, 5),
    (4, 5, 7), (4, 3, 4), (4, 2, 4), (3, 2, 3),
)


def exceeds(m: int, p: int, v: int) -> bool:
    return v > m + p


KNOWN_EXCEEDANCES = tuple((m, p) for m, p, v in KNOWN_TRACE_VALUATIONS if exceeds(m, p, v))
