"""Reference parameter tables of the 3-class scheme on the 66 blocks of W11.

These are the expected values that computed objects are compared against;
nothing in the pipeline is derived from them.
"""
from fractions import Fraction as F

from .ratmath import RatMatrix

# (L_i)[k][j] = p[i][j][k]
L1 = ((0, 30, 0, 0), (1, 15, 10, 4), (0, 15, 6, 9), (0, 8, 12, 10))
L2 = ((0, 0, 20, 0), (0, 10, 4, 6), (1, 6, 10, 3), (0, 12, 4, 4))
L3 = ((0, 0, 0, 15), (0, 4, 6, 5), (0, 9, 3, 3), (1, 10, 4, 0))
L0 = tuple(tuple(int(j == k) for j in range(4)) for k in range(4))
L_MATRICES = (L0, L1, L2, L3)

P = RatMatrix.from_rows([
    [1, 30, 20, 15],
    [1, 8, -2, -7],
    [1, -1, -2, 2],
    [1, -6, 8, -3],
])
Q = RatMatrix.from_rows([
    [1, 10, 44, 11],
    [1, F(8, 3), F(-22, 15), F(-11, 5)],
    [1, -1, F(-22, 5), F(22, 5)],
    [1, F(-14, 3), F(88, 15), F(-11, 5)],
])
MULTIPLICITIES = (1, 10, 44, 11)
VALENCIES = (1, 30, 20, 15)
SRG_R2 = (66, 20, 10, 4)

ALPHA1, ALPHA2, ALPHA3 = F(4, 15), F(-1, 10), F(-7, 15)
ANGLES = (ALPHA1, ALPHA2, ALPHA3)

# rows of V2 = C V1, with C = (1/3) * C_INT
C_INT = (
    (0, 1, 1, 1, 1, 1, 1, 0, -1, -1, -1),
    (0, 1, 1, 1, 1, -1, -1, -1, 1, 1, 0),
    (0, 1, 1, 0, -1, 1, -1, 1, 1, -1, 1),
    (0, 1, 1, -1, 0, -1, 1, 1, -1, 1, 1),
    (0, 1, -1, 1, -1, 1, 1, -1, 0, 1, 1),
    (0, 1, -1, -1, 1, 1, 0, 1, 1, 1, -1),
    (0, 0, -1, 1, 1, -1, 1, 1, 1, -1, 1),
    (0, -1, 1, 1, -1, 0, 1, 1, 1, 1, -1),
    (0, -1, 1, -1, 1, 1, 1, -1, 1, 0, 1),
    (0, -1, 0, 1, 1, 1, -1, 1, -1, 1, 1),
)
C_MATRIX = RatMatrix.from_rows([[F(x, 3) for x in r] for r in C_INT])

COUNTS = {"solutions": 5040, "y1": 840, "cliques10": 30240, "y_before_removal": 4620,
          "y": 4610, "z": 90, "z1": 45, "z2": 45}
