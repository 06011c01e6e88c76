"""Known worked examples, used by the test-suite and the ``verify tables`` command."""

# Box-ball evolution under T^{1,inf}, n = 4, "." is an empty box.
BOXBALL_STATES = (
    ".332...42...4.................",
    "....332..42..4................",
    ".......332.42.4...............",
    "..........33.4242.............",
    "............33.2.442..........",
    "..............3.32..442.......",
    "...............3..32...442....",
    "................3...32....442.",
)
BOXBALL_SOLITONS = ((3,), (3, 2), (4, 4, 2))

# Combinatorial R on B^{2,2} (x) B^{3,3}, n = 5.
R_LEFT = ((2, 2), (3, 4))
R_RIGHT = ((1, 1, 3), (2, 3, 4), (4, 5, 5))
R_PRODUCT = ((1, 1, 2, 2, 4), (2, 3, 3, 3), (4, 4, 5), (5,))
R_IMAGE = (((1, 2, 2), (3, 3, 4), (4, 4, 5)), ((1, 3), (2, 5)))
R_ENERGY = 1

# The bijection on [2] (x) [2,4] (x) [3], n = 4, after every letter.
# Each entry: (nu0 rows in path order, {a: strings as (length, vacancy, rigging)}).
PHI_PATH = ((2,), (2, 4), (3,))
PHI_STEPS = (
    ((1,), {1: ((1, -1, -1),), 2: (), 3: ()}),
    ((1, 1), {1: ((1, -1, -1), (1, -1, -1)), 2: ((1, 1, 1),), 3: ((1, -1, -1),)}),
    ((1, 2), {1: ((2, -2, -2), (1, -1, -1)), 2: ((1, 1, 1),), 3: ((1, -1, -1),)}),
    ((1, 2, 1), {1: ((2, -2, -2), (2, -2, -2)), 2: ((2, 1, 1),), 3: ((1, -1, -1),)}),
)

# Rigged configuration crystal operators, n = 4.
RC_EXAMPLE = dict(
    n=4,
    nu0=(3, 2, 2, 1, 1),
    strings={1: ((2, 1), (2, 0), (1, 0)), 2: ((2, 0), (1, 0)), 3: ((1, 0),)},
)
RC_EXAMPLE_PATH = ((1, 1, 1), (2, 2), (1, 3), (4,), (3,))
RC_F1 = {1: ((2, 1), (3, -1), (1, 0)), 2: ((2, 0), (1, 0)), 3: ((1, 0),)}
RC_F3 = {1: ((2, 1), (2, 0), (1, 0)), 2: ((2, 1), (1, 0)), 3: ((2, -1),)}


def _words(counts):
    return tuple(
        tuple(letter for letter, k in enumerate(factor, start=1) for _ in range(k))
        for factor in counts
    )


def table_path_n3(a, b, c, d, e, f, g, h, i):
    return _words(((a, b, c), (d, e, f), (g, h, i)))


def table_path_n4(*v):
    return _words((v[0:4], v[4:8], v[8:12], v[12:16]))


# n = 3, m = 3. Rows c = 0..7: ((nu1_1, J), (nu1_2, J), (nu2_1, J)).
TABLE_N3_FAMILY1 = lambda c: table_path_n3(0, 1, c, 2, 3, 1, 3, 3, 4)  # noqa: E731
TABLE_N3_ROWS1 = (
    ((8, -5), (4, -4), (5, -1)),
    ((8, -5), (5, -4), (6, -2)),
    ((8, -5), (6, -4), (7, -3)),
    ((9, -5), (6, -3), (8, -4)),
    ((10, -5), (6, -2), (9, -5)),
    ((11, -5), (6, -1), (10, -6)),
    ((12, -5), (6, -1), (11, -7)),
    ((13, -5), (6, -1), (12, -8)),
)
TABLE_N3_FAMILY2 = lambda c: table_path_n3(2, 1, c, 3, 1, 1, 0, 1, 2)  # noqa: E731
TABLE_N3_ROWS2 = (
    ((4, 1), (2, -1), (3, -1)),
    ((4, 1), (3, -1), (4, -2)),
    ((4, -1), (4, -1), (5, -3)),
    ((5, -1), (4, -1), (6, -4)),
    ((6, -1), (4, -1), (7, -5)),
    ((7, -1), (4, -1), (8, -6)),
    ((8, -1), (4, -1), (9, -7)),
    ((9, -1), (4, -1), (10, -8)),
)

# n = 4, m = 4. Rows c = 0..7:
# (nu1_1, nu1_2, nu1_3, nu2_1, nu2_2, nu3_1) as (length, rigging).
TABLE_N4_FAMILY = lambda c: table_path_n4(3, 2, c, 3, 3, 3, 1, 0, 0, 3, 0, 2, 1, 0, 3, 3)  # noqa: E731
TABLE_N4_ROWS = (
    ((8, -2), (8, -2), (4, -1), (8, 4), (4, 0), (8, -7)),
    ((9, -2), (8, -1), (4, -1), (8, 2), (5, -1), (8, -6)),
    ((10, -2), (8, 0), (4, -1), (8, 0), (6, -2), (8, -5)),
    ((11, -2), (8, 1), (4, -1), (8, -2), (7, -3), (8, -4)),
    ((12, -2), (8, 2), (4, -1), (8, -4), (8, -4), (8, -3)),
    ((13, -2), (8, 2), (4, -1), (9, -5), (8, -4), (8, -3)),
    ((14, -2), (8, 2), (4, -1), (10, -6), (8, -4), (8, -3)),
    ((15, -2), (8, 2), (4, -1), (11, -7), (8, -4), (8, -3)),
)
TABLE_N4_LEVELS = (1, 1, 1, 2, 2, 3)

# Ribbon shapes lambda(s, r): (s, n, m) -> shapes.
LAMBDA_SHAPES = {
    (2, 6, 7): ((4, 4, 4, 4, 4, 4, 4), (4, 4, 4, 4, 3, 3), (4, 4, 4, 2, 2), (4, 4, 1, 1), (4,), ()),
    (3, 6, 3): ((3, 3, 3), (2, 2), (1,), ()),
    (1, 3, 3): ((2, 2, 2), (2, 1), ()),
    (2, 4, 4): ((2, 2, 2, 2), (2, 1, 1), ()),
}

# Loop polynomials, written as lists of monomials of (beam, color) with colors mod n.
E2_N2_M3 = [[(1, 1), (2, 0)], [(2, 1), (3, 0)], [(1, 1), (3, 0)]]
E3_N2_M3 = [[(1, 1), (2, 0), (3, 1)]]
SCHUR_21_N3 = [
    [(1, 1), (1, 0), (2, 2)],
    [(1, 1), (2, 0), (2, 2)],
    [(1, 1), (2, 0), (3, 2)],
    [(1, 1), (3, 0), (2, 2)],
    [(1, 1), (1, 0), (3, 2)],
    [(2, 1), (2, 0), (3, 2)],
    [(1, 1), (3, 0), (3, 2)],
    [(2, 1), (3, 0), (3, 2)],
]
CYL_SCHUR_21_N3 = [mono for k, mono in enumerate(SCHUR_21_N3) if k != 3]
CYL_SCHUR_111_N3 = [[(1, 0), (2, 1), (3, 2)]]
KAPPA1_N4 = [
    [(1, 2), (1, 3), (1, 0)],
    [(2, 2), (1, 3), (1, 0)],
    [(2, 2), (2, 3), (1, 0)],
    [(2, 2), (2, 3), (2, 0)],
]
CYL_SCHUR_2211_N4_COUNT = 14
