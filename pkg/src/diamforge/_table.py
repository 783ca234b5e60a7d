"""Transcribed optimal (labels, layout) pairs for the small orders
with no parametric construction.  Each row expands to a good linear
sequence whose dual diameter meets the n-vertex optimum; the test
suite re-checks every row.
"""

SMALL_ROWS: dict[int, tuple[list[int], list[int]]] = {
    # n = 3: diameter 0
    3: (
        [0, 1, 2],
        [],
    ),
    # n = 4: diameter 1
    4: (
        [0, 1, 2, 3],
        [0],
    ),
    # n = 5: diameter 3
    5: (
        [0, 1, 2, 3, 4, 0],
        [0, 0, 0],
    ),
    # n = 6: diameter 5
    6: (
        [0, 1, 2, 3, 4, 0, 5, 1],
        [0, 0, 0, 0, 1],
    ),
    # n = 7: diameter 9
    7: (
        [0, 1, 2, 3, 4, 5, 0, 6, 4, 1, 5, 2],
        [0, 0, 0, 1, 1, 0, 0, 1, 1],
    ),
    # n = 8: diameter 12
    8: (
        [0, 1, 2, 3, 4, 0, 5, 6, 2, 7, 3, 5, 1, 4, 6],
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0],
    ),
    # n = 9: diameter 16
    9: (
        [0, 1, 2, 3, 4, 0, 5, 6, 1, 7, 4, 8, 6, 2, 5, 7, 3, 8, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1],
    ),
    # n = 10: diameter 21
    10: (
        [
            0, 1, 2, 3, 4, 0, 5, 6, 2, 7, 8, 9, 0, 7, 4, 1, 6, 8, 3, 9, 5, 7,
            1, 8
        ],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1],
    ),
    # n = 11: diameter 26
    11: (
        [
            0, 1, 2, 3, 4, 0, 5, 6, 1, 7, 4, 8, 6, 9, 10, 1, 8, 0, 10, 7, 2, 6,
            3, 5, 8, 2, 9, 7, 3
        ],
        [
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0,
            0, 1, 1, 0
        ],
    ),
    # n = 12: diameter 31
    12: (
        [
            0, 1, 2, 3, 4, 0, 5, 6, 1, 4, 7, 8, 0, 9, 10, 1, 8, 11, 2, 5, 7, 9,
            6, 2, 10, 11, 4, 9, 3, 7, 10, 5, 8, 6
        ],
        [
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            1, 0, 0, 1, 1, 0, 1, 1, 1
        ],
    ),
    # n = 13: diameter 37
    13: (
        [
            0, 1, 3, 7, 8, 10, 1, 2, 4, 8, 9, 11, 2, 3, 5, 9, 10, 12, 3, 4, 6,
            10, 11, 0, 4, 5, 7, 11, 12, 1, 5, 6, 8, 12, 0, 2, 6, 7, 9, 0
        ],
        [
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0
        ],
    ),
    # n = 14: diameter 44
    14: (
        [
            0, 1, 2, 3, 4, 5, 6, 0, 3, 7, 8, 1, 4, 9, 0, 8, 10, 2, 5, 7, 9, 6,
            10, 1, 11, 4, 7, 12, 13, 0, 11, 5, 1, 13, 8, 11, 6, 12, 2, 13, 9,
            11, 3, 12, 10, 13, 7
        ],
        [
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            1, 0, 0, 1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0
        ],
    ),
    # n = 15: diameter 51
    15: (
        [
            0, 1, 3, 4, 6, 7, 9, 10, 12, 0, 2, 3, 5, 6, 8, 9, 11, 12, 1, 2, 4,
            5, 7, 8, 13, 0, 5, 10, 2, 9, 3, 11, 4, 12, 6, 1, 14, 9, 4, 10, 3,
            8, 1, 7, 11, 0, 6, 14, 5, 12, 7, 2, 8, 0
        ],
        [
            1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0,
            1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0,
            1, 1, 0, 1, 1, 1, 1
        ],
    ),
    # n = 16: diameter 58
    16: (
        [
            0, 1, 3, 4, 6, 7, 9, 10, 12, 0, 2, 3, 5, 6, 8, 9, 11, 12, 1, 2, 4,
            5, 7, 8, 13, 0, 5, 10, 1, 6, 11, 3, 9, 2, 14, 4, 12, 15, 5, 14, 11,
            7, 12, 6, 0, 15, 8, 2, 10, 7, 15, 3, 14, 8, 1, 9, 15, 4, 11, 10, 0
        ],
        [
            1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0,
            1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0,
            0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0
        ],
    ),
    # n = 18: diameter 75
    18: (
        [
            0, 1, 3, 4, 6, 7, 9, 10, 12, 0, 2, 3, 5, 6, 8, 9, 11, 12, 1, 2, 4,
            5, 7, 8, 10, 11, 0, 5, 13, 6, 14, 7, 15, 8, 16, 17, 1, 6, 11, 3, 9,
            2, 7, 12, 4, 10, 13, 14, 5, 15, 11, 17, 12, 6, 15, 2, 10, 1, 9, 14,
            8, 2, 13, 3, 17, 10, 14, 15, 12, 13, 4, 11, 14, 17, 9, 13, 7, 1
        ],
        [
            1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0,
            1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
            1, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0,
            0, 1, 0, 0, 1, 1, 0, 1, 0
        ],
    ),
    # n = 19: diameter 84
    19: (
        [
            0, 3, 7, 15, 1, 5, 13, 16, 3, 11, 14, 1, 9, 12, 16, 7, 10, 14, 5,
            8, 12, 3, 6, 10, 1, 4, 8, 16, 2, 6, 14, 0, 4, 12, 15, 2, 10, 13, 0,
            8, 11, 15, 6, 9, 13, 4, 7, 11, 2, 17, 5, 9, 10, 12, 13, 18, 14, 15,
            17, 0, 16, 18, 1, 17, 14, 12, 18, 10, 8, 6, 7, 9, 3, 4, 18, 6, 5,
            2, 3, 1, 0, 9, 18, 8, 7, 5, 0
        ],
        [
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1,
            1, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1
        ],
    ),
    # n = 22: diameter 114
    22: (
        [
            0, 3, 8, 11, 16, 2, 7, 10, 15, 1, 6, 9, 14, 0, 5, 8, 13, 16, 4, 7,
            12, 15, 3, 6, 11, 14, 2, 5, 10, 13, 1, 4, 9, 12, 0, 17, 18, 7, 14,
            4, 11, 1, 8, 15, 5, 12, 2, 9, 16, 6, 13, 3, 10, 19, 20, 21, 6, 2,
            19, 4, 5, 7, 8, 10, 17, 9, 11, 12, 14, 20, 0, 21, 1, 2, 4, 3, 17,
            15, 20, 11, 13, 0, 16, 19, 1, 3, 20, 12, 21, 14, 17, 1, 5, 20, 9,
            13, 21, 17, 4, 8, 20, 17, 7, 11, 19, 21, 15, 14, 13, 12, 8, 9, 7,
            3, 21, 5, 19
        ],
        [
            1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0,
            1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1,
            1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1,
            1, 1, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1,
            0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 1,
            0, 0, 0, 1
        ],
    ),
    # n = 26: diameter 161
    26: (
        [
            0, 4, 11, 19, 2, 9, 17, 0, 7, 15, 19, 5, 13, 17, 3, 11, 15, 1, 9,
            13, 20, 7, 11, 18, 5, 9, 16, 3, 7, 14, 1, 5, 12, 20, 3, 10, 18, 1,
            8, 16, 20, 6, 14, 18, 4, 12, 16, 2, 10, 14, 0, 8, 12, 19, 6, 10,
            17, 4, 8, 15, 2, 6, 13, 0, 21, 22, 5, 10, 15, 20, 4, 9, 14, 19, 3,
            8, 13, 18, 2, 7, 12, 17, 1, 6, 11, 16, 23, 24, 25, 1, 2, 3, 0, 16,
            13, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 17, 18, 19, 20, 21, 1, 0,
            2, 23, 17, 25, 18, 0, 19, 23, 1, 3, 4, 6, 21, 5, 25, 2, 4, 21, 7,
            23, 5, 8, 6, 9, 25, 7, 10, 8, 11, 21, 9, 12, 15, 25, 23, 10, 12,
            13, 25, 14, 16, 17, 21, 19, 16, 18, 15, 23, 13, 11, 14
        ],
        [
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1,
            1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1,
            1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1,
            1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0,
            1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0,
            0, 1, 0, 0, 0, 0, 1
        ],
    ),
    # n = 30: diameter 216
    30: (
        [
            0, 3, 10, 15, 21, 24, 6, 11, 17, 20, 2, 7, 13, 16, 23, 3, 9, 12,
            19, 24, 5, 8, 15, 20, 1, 4, 11, 16, 22, 0, 7, 12, 18, 21, 3, 8, 14,
            17, 24, 4, 10, 13, 20, 0, 6, 9, 16, 21, 2, 5, 12, 17, 23, 1, 8, 13,
            19, 22, 4, 9, 15, 18, 0, 5, 11, 14, 21, 1, 7, 10, 17, 22, 3, 6, 13,
            18, 24, 2, 9, 14, 20, 23, 5, 10, 16, 19, 1, 6, 12, 15, 22, 2, 8,
            11, 18, 23, 4, 7, 14, 19, 0, 25, 26, 8, 16, 24, 7, 15, 23, 6, 14,
            22, 5, 13, 21, 4, 12, 20, 3, 11, 19, 2, 10, 18, 1, 9, 17, 27, 28,
            29, 2, 4, 5, 1, 0, 17, 13, 9, 7, 3, 19, 15, 11, 10, 6, 8, 12, 14,
            16, 18, 20, 21, 22, 23, 24, 25, 27, 1, 2, 3, 4, 6, 5, 7, 8, 9, 10,
            12, 11, 13, 14, 15, 16, 17, 18, 22, 20, 27, 19, 21, 17, 28, 15, 13,
            27, 12, 16, 28, 20, 24, 22, 1, 3, 28, 5, 27, 9, 11, 28, 7, 6, 27,
            2, 23, 0, 21, 25, 28, 19, 18, 14, 27, 10, 8, 28, 4, 0, 27, 24
        ],
        [
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1,
            1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 1,
            1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
            0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0,
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0
        ],
    ),
}
