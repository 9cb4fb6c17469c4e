"""Published values the verification suites check against.

Symbolic entries are written with the generators ``A`` and ``B``.
"""

from .exact import A, B

# Hankel transform of C(n+k), rows k = 0..6, columns n = 0..5
SHIFTED_TABLE = [
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1],
    [2, 3, 4, 5, 6, 7],
    [5, 14, 30, 55, 91, 140],
    [14, 84, 330, 1001, 2548, 5712],
    [42, 594, 4719, 26026, 111384, 395352],
    [132, 4719, 81796, 884884, 6852768, 41314284],
]

# Hankel transform of C(n+k) + C(n+k+1), rows k = 0..6
PAIR_TABLE = [
    [2, 5, 13, 34, 89, 233],
    [3, 8, 21, 55, 144, 377],
    [7, 31, 115, 390, 1254, 3893],
    [19, 170, 1075, 5580, 25529, 107036],
    [56, 1140, 13915, 124579, 906472, 5687928],
    [174, 8745, 225511, 3813082, 48173784, 491753934],
    [561, 73931, 4316598, 148118620, 3489574428, 62113595742],
]

# numerators of 1 + x*g(x) over (1-x)^e, shift k = 0..6
SHIFTED_GF_EXPONENTS = [1, 1, 2, 4, 7, 11, 16]
SHIFTED_GF_NUMERATORS = [
    (1,),
    (1,),
    (1,),
    (1, 1),
    (1, 7, 7, 1),
    (1, 31, 187, 330, 187, 31, 1),
    (1, 116, 2727, 21572, 70328, 103376, 70328, 21572, 2727, 116, 1),
]

# numerators over (1-3x+x^2)^d, shift k = 0..4
PAIR_GF_EXPONENTS = [1, 1, 2, 4, 7]
PAIR_GF_NUMERATORS = [
    (1, -1),
    (1,),
    (1, 1),
    (1, 7, 0, -7, -1),
    (1, 35, 160, -120, -371, 371, 120, -160, -35, -1),
]

# 2 C(n+5) + 3 C(n+6): known leading and trailing numerator coefficients
ABM_M5_A2_B3 = {"exponent": 11, "degree": 16, "head": (1, 392, 26818), "tail": (1874923848, 43046721)}

# 5x5 truncations of T(n, k, m), m = 2..5
T_TRUNCATIONS = {
    2: [[2, 1, 0, 0, 0], [3, 4, 1, 0, 0], [4, 10, 6, 1, 0], [5, 20, 21, 8, 1], [6, 35, 56, 36, 10]],
    3: [[5, 2, 0, 0, 0], [14, 14, 3, 0, 0], [30, 54, 27, 4, 0], [55, 154, 132, 44, 5], [91, 364, 468, 260, 65]],
    4: [[14, 5, 0, 0, 0], [84, 72, 14, 0, 0], [330, 495, 220, 30, 0], [1001, 2288, 1716, 520, 55],
        [2548, 8190, 9100, 4550, 1050]],
    5: [[42, 14, 0, 0, 0], [594, 462, 84, 0, 0], [4719, 6292, 2574, 330, 0], [26026, 52052, 35490, 10010, 1001],
        [111384, 309400, 309400, 142800, 30940]],
}

# 1 on top of T(., ., 4), 7x7
M4_CLOSING_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0],
    [14, 5, 0, 0, 0, 0, 0],
    [84, 72, 14, 0, 0, 0, 0],
    [330, 495, 220, 30, 0, 0, 0],
    [1001, 2288, 1716, 520, 55, 0, 0],
    [2548, 8190, 9100, 4550, 1050, 91, 0],
    [5712, 24480, 37400, 27200, 10200, 1904, 140],
]

# ((1+8x+8x^2+x^3)/(1-x)^7, x/(1-x)^2), 6x6
L2_MATRIX = [
    [1, 0, 0, 0, 0, 0],
    [15, 1, 0, 0, 0, 0],
    [92, 17, 1, 0, 0, 0],
    [365, 125, 19, 1, 0, 0],
    [1113, 598, 162, 21, 1, 0],
    [2842, 2184, 903, 203, 23, 1],
]

# transfer array ((1+x)(1+7x+x^2)/((1-x)^5(1-x+x^2)), x/(1-x)^2), 6x6
TRANSFER_MATRIX = [
    [1, 0, 0, 0, 0, 0],
    [14, 1, 0, 0, 0, 0],
    [76, 16, 1, 0, 0, 0],
    [258, 107, 18, 1, 0, 0],
    [657, 456, 142, 20, 1, 0],
    [1380, 1462, 722, 181, 22, 1],
]

TRANSFER_DENOMINATOR = (1, -6, 16, -25, 25, -16, 6, -1)

# M H(r) M^t differences: Mt H(r) Mt^t - M H(r-1) M^t is Hankel of these
CONSECUTIVE_RESIDUALS = {
    1: [B],
    2: [A + 3 * B, B],
    3: [3 * A + 9 * B, A + 5 * B, B],
    4: [9 * A + 28 * B, 5 * A + 20 * B, A + 7 * B, B],
}

# displayed banded interiors: shift -> (top row, interior bands at distance 0..shift)
BANDED_DISPLAYS = {
    0: ([A + B, B], [A + 2 * B, B]),
    1: ([A + 2 * B, B], [A + 2 * B, B]),
    2: ([2 * A + 5 * B, A + 4 * B, B], [2 * A + 6 * B, A + 4 * B, B]),
    3: ([5 * A + 14 * B, 4 * A + 14 * B, A + 6 * B, B], [6 * A + 20 * B, 4 * A + 15 * B, A + 6 * B, B]),
    4: ([14 * A + 42 * B, 14 * A + 48 * B, 6 * A + 27 * B, A + 8 * B, B],
        [20 * A + 70 * B, 15 * A + 56 * B, 6 * A + 28 * B, A + 8 * B, B]),
}

# residual array rows (row r: a*C(2r, r-2-n) + b*C(2r+2, r-1-n))
RESIDUAL_ARRAY = [
    [0],
    [B],
    [A + 6 * B, B],
    [6 * A + 28 * B, A + 8 * B, B],
    [28 * A + 120 * B, 8 * A + 45 * B, A + 10 * B, B],
    [120 * A + 495 * B, 45 * A + 220 * B, 10 * A + 66 * B, A + 12 * B, B],
    [495 * A + 2002 * B, 220 * A + 1001 * B, 66 * A + 364 * B, 12 * A + 91 * B, A + 14 * B, B],
    [2002 * A + 8008 * B, 1001 * A + 4368 * B, 364 * A + 1820 * B, 91 * A + 560 * B, 14 * A + 120 * B,
     A + 16 * B, B],
]

# degree-9 numerator over (1-(a+2b)x+b^2x^2)^7 for shift 4
_E = -7 * A**2 * B**2 - 91 * A * B**3 - 273 * B**4
_D = A**3 + 12 * A**2 * B + 6 * A * B**2 - 139 * B**3
_C = 7 * A**2 + 56 * A * B + 97 * B**2
_B = 7 * A + 28 * B
SEC7_NUMERATOR = (1, _B, _C, _D, _E, -_E * B, -_D * B**3, -_C * B**5, -_B * B**7, -(B**9))

# production-matrix worked example, 2 C(n+1) + 3 C(n+2)
PRODUCTION_EXAMPLE = {
    "sequence": [8, 19, 52, 154, 480, 1551, 5148],
    "L": [[1, 0, 0, 0, 0], [8, 3, 0, 0, 0], [73, 48, 9, 0, 0], [728, 630, 216, 27, 0], [7714, 7872, 3699, 864, 81]],
    "L_rescaled": [[1, 0, 0, 0, 0], [8, 1, 0, 0, 0], [73, 16, 1, 0, 0], [728, 210, 24, 1, 0], [7714, 2624, 411, 32, 1]],
    "inverse": [[1, 0, 0, 0, 0], [-8, 1, 0, 0, 0], [55, -16, 1, 0, 0], [-368, 174, -24, 1, 0],
                [2449, -1616, 357, -32, 1]],
    "transform": [8, 55, 368, 2449],
}

JFRAC_EXAMPLE = {
    "alphas": ["19/7", "489/217", "1511/713", "618/299", "5549/2717", "1650954/813637", "92763259/45894577"],
    "betas": ["31/49", "805/961", "2418/2645", "4807/5070", "253045/262086", "14783406/15155449"],
    "minors": ["19/7", "170/31", "1075/115", "5580/390", "25529/1254", "107036/3893", "421035/11789"],
}
