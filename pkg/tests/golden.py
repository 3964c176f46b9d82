"""Regression targets for the constants table.

Columns: m, n, sigma_inv, y_inf, y_sphere. Tolerances: 5e-4 absolute on
sigma_inv and y_sphere, 5e-3 absolute on y_inf.
"""

GOLDEN_TABLE = [
    (2, 2, 2.41877, 59.40481, 61.56239),
    (2, 3, 3.87947, 75.39687, 78.99686),
    (3, 2, 2.11360, 78.18644, 78.99686),
    (2, 4, 5.66408, 91.68339, 96.29728),
    (3, 3, 3.19925, 94.71444, 96.29728),
    (4, 2, 1.90282, 95.87367, 96.29728),
    (2, 5, 7.71937, 108.1625, 113.5272),
    (3, 4, 4.53960, 111.2934, 113.5272),
    (4, 3, 2.75810, 112.6214, 113.5272),
    (5, 2, 1.75469, 113.2670, 113.5272),
    (2, 6, 10.0021, 124.7747, 130.7157),
    (3, 5, 6.10843, 127.9414, 130.7157),
    (4, 4, 3.81586, 129.3551, 130.7157),
    (5, 3, 2.45567, 130.1272, 130.7157),
    (6, 2, 1.64650, 130.5398, 130.7157),
    (2, 7, 12.4764, 141.4740, 147.8778),
    (3, 6, 7.88171, 144.6521, 147.8778),
    (4, 5, 5.06274, 146.1089, 147.8778),
    (5, 4, 3.32083, 146.9519, 147.8778),
    (6, 3, 2.23778, 147.4615, 147.8778),
    (7, 2, 1.56455, 147.7507, 147.8778),
]

SIGMA_TOL = 5e-4
Y_INF_TOL = 5e-3
Y_SPHERE_TOL = 5e-4

# anchors quoted to extra precision elsewhere
ALPHA0_22 = 2.2062
SIGMA_INV_22 = 2.41877
TESTFN_BOUND_22 = 2.427458
