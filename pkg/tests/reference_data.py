"""Published reference values used by the test-suite.

Weight pairs are (nu, nuhat).  ``*_RAYS`` tables are in fundamental-weight
coordinates; ``*_EPS`` tables are in epsilon coordinates with nuhat written
as a partition of length 2n-1.
"""

import re

SL3_G2_RAYS = [(0, 0, 1, 0), (0, 1, 1, 0), (0, 1, 0, 1), (1, 0, 1, 0), (1, 0, 0, 1), (1, 1, 0, 1)]

G2_SPIN7_RAYS = [
    (1, 0, 1, 0, 0),
    (1, 0, 0, 1, 0),
    (0, 1, 0, 1, 0),
    (0, 0, 0, 0, 1),
    (1, 0, 0, 0, 1),
    (0, 1, 1, 0, 1),
    (0, 1, 1, 1, 0),
]
# primitive ray generators in the sublattice where the last coordinate is even
SO7_RAY_GENERATORS = [
    (1, 0, 1, 0, 0),
    (1, 0, 0, 1, 0),
    (0, 1, 0, 1, 0),
    (0, 0, 0, 0, 2),
    (2, 0, 0, 0, 2),
    (0, 2, 2, 0, 2),
    (0, 1, 1, 1, 0),
]
SO7_EXTRA = [(1, 0, 0, 0, 2), (0, 1, 1, 0, 2), (1, 1, 1, 0, 2)]

SPIN9_F4_RAYS = [
    (0, 0, 0, 0, 0, 0, 0, 1),
    (0, 1, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 1),
    (0, 1, 0, 1, 0, 1, 0, 0),
    (0, 0, 0, 1, 0, 0, 1, 0),
    (0, 1, 1, 0, 0, 1, 0, 1),
    (0, 0, 0, 1, 1, 0, 0, 0),
    (1, 0, 0, 0, 0, 0, 0, 1),
    (0, 0, 1, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 1, 0, 0),
    (1, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 1, 0, 1, 0, 0, 1),
    (1, 0, 0, 1, 0, 1, 0, 0),
    (0, 0, 1, 0, 1, 0, 1, 0),
    (1, 0, 1, 0, 0, 1, 0, 0),
    (0, 1, 0, 0, 0, 0, 1, 0),
    (1, 0, 1, 0, 1, 0, 1, 0),
    (0, 1, 0, 0, 0, 1, 0, 0),
    (1, 0, 1, 0, 1, 1, 0, 0),
]

F4_E6_RAYS = [
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 1, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 1, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 1, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 1, 0, 1, 0),
    (0, 0, 1, 0, 0, 1, 0, 0, 0, 1),
    (0, 0, 1, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 1, 1, 0, 0, 0),
    (0, 0, 1, 0, 1, 0, 0, 0, 0, 1),
    (0, 0, 1, 0, 1, 1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 0, 1, 0, 0),
    (0, 1, 0, 0, 0, 0, 0, 1, 1, 0),
    (0, 1, 0, 0, 0, 0, 1, 0, 0, 1),
    (0, 1, 0, 0, 0, 0, 1, 0, 1, 0),
    (0, 1, 0, 0, 0, 0, 1, 1, 0, 0),
    (0, 1, 0, 0, 0, 1, 0, 0, 1, 0),
    (0, 1, 0, 0, 0, 1, 0, 1, 0, 0),
    (0, 1, 0, 0, 0, 1, 1, 0, 0, 0),
    (0, 1, 0, 0, 0, 1, 1, 0, 1, 0),
    (0, 1, 0, 0, 1, 0, 0, 0, 1, 0),
    (0, 1, 0, 0, 1, 1, 0, 0, 0, 1),
    (0, 1, 0, 1, 0, 0, 0, 2, 0, 0),
    (0, 1, 0, 1, 0, 0, 1, 0, 1, 0),
    (1, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    (1, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    (1, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    (1, 0, 0, 1, 0, 0, 0, 1, 0, 0),
    (1, 0, 1, 0, 0, 0, 0, 1, 0, 1),
    (1, 0, 1, 0, 1, 0, 0, 1, 0, 0),
    (1, 1, 0, 0, 1, 0, 0, 1, 0, 1),
]

SP6_RAYS_EPS = [
    (0, 0, 0, 1, 1, 1, 1, 0),
    (1, 1, 1, 3, 2, 2, 1, 1),
    (0, 1, 0, 2, 1, 1, 0, 0),
    (0, 0, 0, 1, 1, 0, 0, 0),
    (1, 1, 0, 1, 1, 1, 1, 0),
    (1, 0, 0, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1, 0, 0),
    (1, 1, 0, 2, 2, 2, 1, 1),
    (1, 0, 0, 1, 1, 1, 0, 0),
    (1, 1, 1, 2, 2, 1, 1, 1),
    (1, 1, 0, 1, 1, 0, 0, 0),
    (1, 0, 0, 1, 0, 0, 0, 0),
    (1, 1, 1, 2, 1, 1, 1, 0),
    (1, 1, 0, 2, 1, 1, 1, 1),
    (2, 1, 1, 2, 2, 1, 1, 0),
]

SP8_FACE_RAYS_EPS = [
    (0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0),
    (1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0),
    (1, 1, 0, 0, 1, 1, 1, 1, 1, 1, 0),
    (1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0),
    (1, 1, 1, 1, 2, 2, 1, 1, 1, 1, 0),
]

SP8_HIGHLIGHTED_EPS = [
    (1, 1, 1, 1, 2, 2, 2, 1, 1, 0, 0),
    (2, 2, 2, 0, 3, 3, 2, 2, 1, 1, 0),
    (2, 2, 1, 1, 3, 3, 2, 2, 2, 0, 0),
    (2, 2, 1, 1, 3, 3, 3, 1, 1, 1, 0),
]

SP4_FACETS = [
    "N1-N2+N3 <= n1+n2",
    "n1+n2 <= N1+N2-N3",
    "-N1+N2+N3 <= n1-n2",
    "N1-N2-N3 <= n1-n2",
    "n1-n2 <= N1-N2+N3",
]

SP6_FACETS = [
    "N1-N2 <= n1", "N3-N4 <= n1", "N5 <= n1", "n1 <= N1",
    "n2 <= N1-N5", "n2 <= N2",
    "n3 <= N1-N4", "n3 <= N2-N5", "n3 <= N3",
    "N1-N2+N3-N4+N5 <= n1+n2+n3", "n1+n2+n3 <= N1+N2+N3-N4-N5",
    "-N1-N2+N3+N4+N5 <= n1-n2-n3", "N1-N2-N3-N4+N5 <= n1-n2-n3",
    "-N1+N2-N3+N4-N5 <= n1-n2-n3", "n1-n2-n3 <= N1-N2+N3-N4+N5",
    "-N1+N2-N3+N4+N5 <= n1-n2+n3", "N1-N2-N3+N4-N5 <= n1-n2+n3",
    "-N1+N2+N3-N4-N5 <= n1-n2+n3", "n1-n2+n3 <= N1-N2+N3+N4-N5",
    "n1-n2+n3 <= N1+N2-N3-N4+N5",
    "N1-N2-N3+N4+N5 <= n1+n2-n3", "-N1+N2+N3-N4+N5 <= n1+n2-n3",
    "N1-N2+N3-N4-N5 <= n1+n2-n3", "n1+n2-n3 <= N1+N2-N3+N4-N5",
    "n2 <= n1", "n3 <= n2", "0 <= n3",
    "N2 <= N1", "N3 <= N2", "N4 <= N3", "N5 <= N4", "0 <= N5",
]

SP8_REDUNDANT = "-N1+N2-N3+N4-N5+N6-N7 <= n1-n2+n3-n4"

# counts
SPIN9_F4_COUNTS = {"candidates": 36, "movable": 28, "facets": 36, "rays": 20}
SP8_MOVABLE = [14, 47, 53]
SP10_MOVABLE = 534


def parse_inequality(text, n, nhat):
    """'lhs <= rhs' over n1..nn, N1..Nnhat into a row r with r . x <= 0."""
    lhs, rhs = text.split("<=")
    row = [0] * (n + nhat)

    def add(side, sign):
        for s, var, idx in re.findall(r"([+-]?)\s*([nN])(\d+)", side):
            k = int(idx) - 1 + (0 if var == "n" else n)
            row[k] += sign * (-1 if s == "-" else 1)

    add(lhs, 1)
    add(rhs, -1)
    return tuple(row)


def spin_chain_basis(n):
    """Hilbert basis elements of Spin(2n-1) in Spin(2n) as eps vectors (nu, nuhat).

    Interleaved sequences nuhat1 >= nu1 >= nuhat2 >= ... >= nu_{n-1} >= |nuhat_n|.
    """
    from fractions import Fraction

    length = 2 * n - 1
    seqs = [[1] * k + [0] * (length - k) for k in range(1, length - 1)]
    half = Fraction(1, 2)
    seqs.append([half] * length)
    seqs.append([half] * (length - 1) + [-half])
    out = []
    for s in seqs:
        nuhat = [s[2 * i] for i in range(n)]
        nu = [s[2 * i + 1] for i in range(n - 1)]
        out.append((tuple(nu), tuple(nuhat)))
    return out
