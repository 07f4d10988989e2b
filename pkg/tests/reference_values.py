"""Published reference values used as test oracles."""

# face layers f^0..f^4 of S in t2, t3 (type vector -> C_m)
HC_TABLE = {
    (): 1,
    (1,): 1, (0, 1): 1,
    (2,): 2, (1, 1): 5, (0, 2): 3,
    (3,): 5, (2, 1): 21, (1, 2): 28, (0, 3): 12,
    (4,): 14, (3, 1): 84, (2, 2): 180, (1, 3): 165, (0, 4): 55,
}

GEODE_FIGURES = {(1, 1): 16, (1, 0, 1): 23, (1, 0, 0, 1): 31, (2, 1): 70, (1, 2): 110, (3, 1): 288}

GEODE_RECURRENCE = {
    (2, 2, 2): 669123,
    (2, 3, 2): 8754130, (3, 3, 1): 2580200, (3, 2, 2): 5826660, (3, 3, 2): 88952776,
    (3, 3, 0, 1): 3836840, (3, 2, 1, 1): 16990113, (4, 3): 259350, (4, 2, 1): 1230250,
    (4, 3, 1): 18907196, (4, 1, 2): 1896650, (4, 2, 2): 43560528, (4, 3, 2): 762192600,
    (4, 2, 0, 1): 1872850, (4, 3, 0, 1): 28713476, (4, 1, 1, 1): 5648272,
    (4, 2, 1, 1): 129754776,
}

SCHROEDER = [1, 1, 3, 11, 45, 197, 903, 4279, 20793]
RIORDAN_DISPLAYED = [1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 602]
RIORDAN_A005043 = [1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603]
CAYLEY_ROWS = {
    1: [1],
    2: [1, 2],
    3: [1, 5, 5],
    4: [1, 9, 21, 14],
    5: [1, 14, 56, 84, 42],
    6: [1, 20, 120, 300, 330, 132],
    7: [1, 27, 225, 825, 1485, 1287, 429],
}
GEODE_SCHROEDER = [1, 2, 8, 34, 152, 706]
GEODE_RIORDAN = [1, 0, 2, 3, 9, 21, 55, 141]
GEODE_CAYLEY_ROWS = {
    1: [2],
    2: [3, 5],
    3: [4, 16, 14],
    4: [5, 35, 70, 42],
    5: [6, 64, 216, 288, 132],
}
JUMBO_RIORDAN_DISPLAYED = [1, 1, 3, 9, 28, 85, 271]
TUTRANK_CATALAN = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786]
TUTRANK_RIORDAN = [0, 1, 1, 3, 6, 15, 36, 91, 232, 603, 1585]

# Jumbo Geode face layers, degree <= 4 (base-1 type vector -> J_k)
JUMBO_LAYERS = {
    (): 1,
    (1,): 1, (0, 1): 2, (0, 0, 1): 3, (0, 0, 0, 1): 4,
    (2,): 1, (1, 1): 5, (0, 2): 5, (1, 0, 1): 9, (0, 1, 1): 16, (1, 0, 0, 1): 14,
    (0, 0, 2): 12, (0, 1, 0, 1): 23, (0, 0, 1, 1): 33, (0, 0, 0, 2): 22,
    (3,): 1, (2, 1): 9, (1, 2): 21, (2, 0, 1): 19, (0, 3): 14, (1, 1, 1): 77,
    (2, 0, 0, 1): 34, (0, 2, 1): 70, (1, 0, 2): 65, (1, 1, 0, 1): 125, (0, 1, 2): 110,
    (0, 2, 0, 1): 106, (1, 0, 1, 1): 199, (0, 0, 3): 55, (0, 1, 1, 1): 319,
    (1, 0, 0, 2): 146, (0, 0, 2, 1): 231, (0, 1, 0, 2): 224, (0, 0, 1, 2): 315,
    (0, 0, 0, 3): 140,
    (4,): 1, (3, 1): 14, (0, 0, 0, 4): 969, (1, 0, 0, 3): 1411, (0, 4): 42,
    (0, 0, 0, 5): 7084, (1, 0, 0, 4): 13265, (0, 0, 5): 1428,
}

# cubic 1 - 6x + 8x^3
K_1_6_0_8 = (6835, 39366)
K_1_6_0_8_DECIMAL = "0.1736269877559315"
SHIFT_CONSTANT = "0.000254210047999921"
FIRST_INCREMENT_FROM_MINUS_ONE = "0.06028066015200691"
SIN_10 = "0.17364817766693033"
SIN_50 = "0.766044443118978"
SIN_MINUS_70 = "-0.9396926207859083"
SECOND_ITERATE_FROM_MINUS_ONE = "-0.9396926207858974"
