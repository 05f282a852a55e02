"""Reference data for the G31 section, transcribed verbatim from the source
tables (including the known misprint in entry 24)."""

SEXTUPLE_POINTS = [
    ("0", "0", "1"), ("0", "1", "0"), ("0", "9", "5"), ("1", "0", "0"),
    ("9", "0", "2"), ("5", "-2", "0"), ("10", "10", "7"), ("8", "8", "7"),
    ("-10", "10", "3"), ("-8", "8", "3"),
    ("4", "7", "4"), ("6", "7", "6"), ("-4", "11", "4"), ("-6", "11", "6"),
    ("4", "1", "1"),
    ("14", "-1", "1"), ("4", "3", "3"), ("14", "-3", "3"),
    ("9-i", "1+9i", "2+5i"), ("9+i", "-1+9i", "2+5i"),
    ("9-i", "-1-9i", "2-5i"), ("9+i", "1-9i", "2-5i"),
    ("5+i", "-2+9i", "-1+5i"), ("5-i", "-2+9i", "-1+5i"),
    ("5+i", "-2-9i", "1-5i"), ("5-i", "-2-9i", "-1-5i"),
    ("-5+9i", "2-i", "1+2i"), ("5-9i", "-2-i", "1-2i"),
    ("5+9i", "-2+i", "1+2i"), ("-5-9i", "2+i", "1-2i"),
]

# entry 24 with the sign of the real part of z flipped
MISPRINT_FIX = {24: ("5-i", "-2+9i", "1+5i")}

COLLINEAR_TRIPLES = [
    {1, 2, 3}, {1, 4, 5}, {1, 7, 8}, {1, 9, 10}, {1, 19, 20}, {1, 21, 22},
    {2, 4, 6}, {2, 11, 12}, {2, 13, 14}, {2, 23, 24}, {2, 25, 26}, {3, 5, 6},
    {3, 15, 16}, {3, 17, 18}, {3, 27, 29}, {3, 28, 30}, {4, 15, 17}, {4, 16, 18},
    {4, 27, 28}, {4, 29, 30}, {5, 11, 13}, {5, 12, 14}, {5, 23, 25}, {5, 24, 26},
    {6, 7, 9}, {6, 8, 10}, {6, 19, 21}, {6, 20, 22}, {7, 11, 18}, {7, 14, 15},
    {7, 24, 30}, {7, 25, 27}, {8, 12, 16}, {8, 13, 17}, {8, 23, 29}, {8, 26, 28},
    {9, 12, 17}, {9, 13, 16}, {9, 23, 28}, {9, 26, 29}, {10, 11, 15}, {10, 14, 18},
    {10, 24, 27}, {10, 25, 30}, {11, 20, 28}, {11, 21, 29}, {12, 19, 27}, {12, 22, 30},
    {13, 19, 30}, {13, 22, 27}, {14, 20, 29}, {14, 21, 28}, {15, 19, 26}, {15, 22, 23},
    {16, 20, 24}, {16, 21, 25}, {17, 20, 25}, {17, 21, 24}, {18, 19, 23}, {18, 22, 26},
]

CONIC_SETS = [
    {1, 2, 5, 6, 7, 10, 11, 14, 20, 21, 24, 25},
    {1, 2, 5, 6, 8, 9, 12, 13, 19, 22, 23, 26},
    {1, 3, 4, 6, 7, 10, 15, 18, 19, 22, 27, 30},
    {1, 3, 4, 6, 8, 9, 16, 17, 20, 21, 28, 29},
    {2, 3, 4, 5, 11, 14, 15, 18, 23, 26, 28, 29},
    {2, 3, 4, 5, 12, 13, 16, 17, 24, 25, 27, 30},
    {7, 8, 9, 10, 11, 12, 13, 14, 27, 28, 29, 30},
    {7, 8, 9, 10, 15, 16, 17, 18, 23, 24, 25, 26},
    {11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22},
    {19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30},
]


def as_sorted_lists(sets):
    return sorted(sorted(s) for s in sets)
