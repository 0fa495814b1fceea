"""Reference values used as regression anchors by verify.run_all and the tests.

Every number here is independently checkable inside this package: the r_k
prefix is OEIS A000716 and is reproduced by three separate routes; the
delta rows and expansion coefficients are pinned down by the exact residual
check (substituting the expansion back into theta must cancel every
resolved power of q) and corroborated by the Newton root-finder.
"""

# r_1 .. r_20 of OEIS A000716 (r_0 = 1)
RK_FIRST_20 = (
    3, 9, 22, 51, 108, 221, 429, 810, 1479, 2640,
    4599, 7868, 13209, 21843, 35581, 57222, 90882, 142769, 221910, 341649,
)

# first ten coefficients of delta_j for j = 1, 2, 3
DELTA_ROWS = {
    1: (1, -1, -1, -1, -2, -4, -10, -25, -66, -178),
    2: (1, 0, 0, 1, 3, 9, 24, 66, 180, 498),
    3: (1, 0, 0, 0, 0, 0, -1, -3, -9, -22),
}

# first six expansion coefficients (g_0 .. g_5) of the fourth zero, and the
# stabilized sextuple shared by every zero from the fifth on
SEXTUPLE_J4 = (1, 3, 9, 22, 51, 107)
SEXTUPLE_STABLE = (1, 3, 9, 22, 51, 108)

# the first zero is the lone exception to stabilization: its g_1 is 2, not r_1 = 3
J1_SECOND_COEFF = 2
