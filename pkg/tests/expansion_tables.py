"""Frozen reference expansions of the type-sum symmetric functions.

Coefficients are listed in the canonical reverse-lexicographic partition
order produced by ``partitions_of(n)``; values are exact rational strings.
These tables are the golden values for the r=1 and r=2 families, n = 0..6,
in all five bases, and every acceptance run compares against them verbatim.
"""

from fractions import Fraction

from stirlingsym.partitions import partitions_of

# (r, n, basis) -> coefficient strings in partitions_of(n) order
RAW = {
    (1, 0): {"m": ["1"], "e": ["1"], "h": ["1"], "s": ["1"], "p": ["1"]},
    (1, 1): {"m": ["1"], "e": ["1"], "h": ["1"], "s": ["1"], "p": ["1"]},
    (1, 2): {
        "m": ["1", "3"],
        "e": ["1", "1"],
        "h": ["-1", "2"],
        "s": ["1", "2"],
        "p": ["-1/2", "3/2"],
    },
    (1, 3): {
        "m": ["1", "7", "19"],
        "e": ["1", "4", "1"],
        "h": ["1", "-6", "6"],
        "s": ["1", "6", "6"],
        "p": ["1/3", "-5/2", "19/6"],
    },
    (1, 4): {
        "m": ["1", "15", "33", "83", "211"],
        "e": ["1", "6", "5", "11", "1"],
        "h": ["-1", "8", "6", "-36", "24"],
        "s": ["1", "14", "18", "36", "24"],
        "p": ["-1/4", "7/3", "11/8", "-45/4", "211/24"],
    },
    (1, 5): {
        "m": ["1", "31", "131", "311", "621", "1501", "3651"],
        "e": ["1", "8", "18", "23", "43", "26", "1"],
        "h": ["1", "-10", "-20", "60", "90", "-240", "120"],
        "s": ["1", "30", "100", "150", "210", "240", "120"],
        "p": ["1/5", "-9/4", "-19/6", "27/2", "131/8", "-649/12", "1217/40"],
    },
    (1, 6): {
        "m": ["1", "63", "473", "1075", "883", "3755", "8727", "7015",
              "16417", "38559", "90921"],
        "e": ["1", "10", "28", "39", "19", "202", "72", "61", "230", "57", "1"],
        "h": ["-1", "12", "30", "-90", "20", "-360", "480", "-90", "1080",
              "-1800", "720"],
        "s": ["1", "62", "410", "540", "410", "1860", "1560", "990", "2160",
              "1800", "720"],
        "p": ["-1/6", "11/5", "29/8", "-127/8", "13/6", "-93/2", "475/6",
              "-451/48", "2353/16", "-4601/16", "30307/240"],
    },
    (2, 0): {"m": ["1"], "e": ["1"], "h": ["1"], "s": ["1"], "p": ["1"]},
    (2, 1): {"m": ["1"], "e": ["1"], "h": ["1"], "s": ["1"], "p": ["1"]},
    (2, 2): {
        "m": ["2", "5"],
        "e": ["1", "2"],
        "h": ["-1", "3"],
        "s": ["2", "3"],
        "p": ["-1/2", "5/2"],
    },
    (2, 3): {
        "m": ["6", "26", "61"],
        "e": ["1", "8", "6"],
        "h": ["1", "-10", "15"],
        "s": ["6", "20", "15"],
        "p": ["1/3", "-9/2", "61/6"],
    },
    (2, 4): {
        "m": ["24", "154", "269", "609", "1379"],
        "e": ["1", "13", "9", "58", "24"],
        "h": ["-1", "15", "10", "-105", "105"],
        "s": ["24", "130", "115", "210", "105"],
        "p": ["-1/4", "14/3", "19/8", "-161/4", "1379/24"],
    },
    (2, 5): {
        "m": ["120", "1044", "2724", "6028", "10193", "22562", "49946"],
        "e": ["1", "19", "33", "136", "192", "444", "120"],
        "h": ["1", "-21", "-35", "210", "280", "-1260", "945"],
        "s": ["120", "924", "1680", "2380", "2485", "2520", "945"],
        "p": ["1/5", "-5", "-17/3", "172/3", "235/4", "-2411/6", "24973/60"],
    },
    (2, 6): {
        "m": ["720", "8028", "28636", "62376", "42881", "154629", "336909",
              "255982", "557787", "1215507", "2648967"],
        "e": ["1", "26", "54", "269", "34", "958", "1396", "225", "3004",
              "3708", "720"],
        "h": ["-1", "28", "56", "-378", "35", "-1260", "3150", "-280", "6300",
              "-17325", "10395"],
        "s": ["720", "7308", "20608", "26432", "14245", "57400", "44100",
              "23345", "47880", "34650", "10395"],
        "p": ["-1/6", "27/5", "55/8", "-645/8", "23/6", "-369/2", "4391/6",
              "-1513/48", "18087/16", "-72651/16", "882989/240"],
    },
}

BASES = ("m", "e", "h", "s", "p")


def expected_terms(r: int, n: int, basis: str) -> dict:
    """Partition -> Fraction for one table row."""
    values = RAW[(r, n)][basis]
    parts = partitions_of(n)
    assert len(values) == len(parts)
    return {lam: Fraction(v) for lam, v in zip(parts, values)}


# statistics and types for every doubled-letter word on three values,
# keyed by word: (des, asc, pla, AA, DA, TN, IN)
STATS_TABLE_N3 = {
    "112233": (1, 3, 3, (3,), (1, 1, 1), (1, 1, 1), (1, 1, 1)),
    "113322": (2, 2, 3, (2, 1), (2, 1), (1, 1, 1), (1, 1, 1)),
    "221133": (2, 2, 3, (2, 1), (2, 1), (1, 1, 1), (1, 1, 1)),
    "223311": (2, 2, 3, (2, 1), (2, 1), (1, 1, 1), (1, 1, 1)),
    "331122": (2, 2, 3, (2, 1), (2, 1), (1, 1, 1), (1, 1, 1)),
    "122331": (2, 3, 2, (2, 1), (1, 1, 1), (2, 1), (2, 1)),
    "112332": (2, 3, 2, (2, 1), (1, 1, 1), (2, 1), (2, 1)),
    "133122": (2, 3, 2, (2, 1), (1, 1, 1), (2, 1), (2, 1)),
    "122133": (2, 3, 2, (2, 1), (1, 1, 1), (2, 1), (2, 1)),
    "133221": (3, 2, 2, (1, 1, 1), (2, 1), (2, 1), (2, 1)),
    "221331": (3, 2, 2, (1, 1, 1), (2, 1), (2, 1), (2, 1)),
    "233211": (3, 2, 2, (1, 1, 1), (2, 1), (2, 1), (2, 1)),
    "331221": (3, 2, 2, (1, 1, 1), (2, 1), (2, 1), (2, 1)),
    "123321": (3, 3, 1, (1, 1, 1), (1, 1, 1), (3,), (3,)),
    "332211": (3, 1, 3, (1, 1, 1), (3,), (1, 1, 1), (1, 1, 1)),
}
