"""Frozen instances.

Each was found by random search against predicates written independently of
the package (float angle sort for the radial order, a plain sign test for
the signature, a sign test for "below a line") and then frozen.  Points are
listed in radial order, so list position equals radial label.
"""

# 9-set, word +--+-+, p1 above l(3,4), p6 below l(2,5), p8 below l(5,7)
NINE_PMMPMP = [(11, 0), (4, 52), (14, 14), (24, 41), (38, 50), (42, 49), (53, 57), (49, 39), (57, 22)]
NINE_PMMPMP_QUADS = [(2, 3, 4, 5), (2, 5, 6, 7), (0, 2, 7, 8)]

# 11-set, word +-+--+++, p8 below l(4,7)
ELEVEN_PMPMMPPP = [(19, 5), (22, 58), (28, 30), (42, 59), (30, 25), (42, 38), (52, 41), (47, 35), (41, 18),
                   (43, 16), (54, 14)]
ELEVEN_PMPMMPPP_QUADS = [(0, 2, 3, 4), (4, 5, 6, 7), (6, 9, 8, 7), (0, 4, 7, 8)]

# 9-set with signs at positions 4, 5 both '-', neighbours not '-', and p2 below l(3,6)
EVEN_MINUS_K1 = [(37, 2), (0, 42), (1, 52), (10, 48), (19, 49), (24, 47), (30, 38), (55, 17), (49, 4)]

# 11-set with word +------+
ELEVEN_PMMMMMMP = [(18, 8), (2, 34), (24, 29), (33, 52), (38, 61), (51, 74), (66, 78), (79, 68), (58, 42),
                   (32, 19), (50, 17)]

# 9-set whose signs at positions 4..7 are all '+'
NINE_PLUS4 = [(72, 9), (7, 32), (56, 15), (0, 75), (8, 68), (25, 64), (47, 62), (53, 63), (51, 78)]

# 9-set whose signs at positions 3..7 are all '-'
NINE_MINUS5 = [(21, 16), (10, 28), (17, 28), (18, 34), (34, 55), (35, 56), (44, 56), (51, 34), (49, 22)]

# p0 below a parabola: every sign is '+'
PARABOLA = [(0, 0)] + [(7 * x, 300 + x * x) for x in range(-5, 6)]

# two clusters of four, far apart horizontally (not in radial order)
TWO_CLUSTERS = [(0, 0), (10, 3), (3, 11), (12, 14), (100, 1), (111, 4), (103, 12), (113, 16)]
