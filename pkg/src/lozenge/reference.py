"""Published ground truth, embedded so verification runs offline."""

from __future__ import annotations

from dataclasses import dataclass

# L_{n,l} for l = 0..11 as published; rows stop where the table stops.
TABLE = {
    1: (1,),
    2: (1, 3),
    3: (1, 9, 24, 18),
    4: (1, 18, 126, 434, 762, 630, 187),
    5: (1, 30, 387, 2814, 12699, 36894, 69242, 81936, 57672, 21432, 3135),
    6: (1, 45, 915, 11127, 90270, 515970, 2139120, 6523428,
        14683401, 24256853, 28975770, 24383838),
    7: (1, 63, 1845, 33365, 417435, 3836439, 26841853, 146208393,
        628823088, 2153224090, 5892984618, 12892017948),
    8: (1, 84, 3339, 83568, 1478160, 19662060, 204334715, 1701554868,
        11554013295, 64766667704, 302315092020, 1181998895448),
    9: (1, 108, 5586, 184254, 4354497, 78536358, 1124301411, 13119112488,
        127156871457, 1038068322606, 7212713283360, 42993319234518),
    10: (1, 135, 8802, 369254, 11203269, 261985815, 4914087052, 75970268748,
         987147811836, 10940096605816, 104581114754595, 869988063985737),
    11: (1, 165, 13230, 686952, 25970895, 762098799, 18070041680, 355864850838,
         5938169156829, 85230974965513, 1064629166358066, 11681266282861098),
    12: (1, 198, 19140, 1203930, 55414395, 1990014156, 58055896449, 1414611219018,
         29375579984238, 527873999198830, 8307168403048731, 115585010198220444),
    13: (1, 234, 26829, 2009018, 110505120, 4761037260, 167316709165, 4931688363498,
         124419130905960, 2728420121843584, 52640100670770348, 902231390539173210),
    14: (1, 273, 36621, 3217749, 208300257, 10594451901, 440911546295, 15439933756251,
         464317587238419, 12178604171344167, 282021772415608164, 5822744874311864316),
    15: (1, 315, 48867, 4977219, 374375664, 22178743326, 1077784772922, 44182928710470,
         1559497806005040, 48137813623437500, 1315457502665712336, 32139701729335767774),
}

# sum_l L_{n,l} for n = 1..6
ROW_SUMS = (1, 4, 52, 2158, 286242, 121479420)

# count at the largest possible l, n = 1..10
MAXIMAL_TILINGS = (1, 3, 18, 187, 3135, 81462, 3198404, 186498819,
                   15952438877, 1983341709785)


@dataclass(frozen=True)
class Entry:
    n: int
    l: int
    count: int
    source: str


def entries() -> list[Entry]:
    """Every published (n, l, count) triple of the main table."""
    return [Entry(n, l, c, "table") for n, row in TABLE.items() for l, c in enumerate(row)]


def row_sum_entries() -> list[Entry]:
    # l is unused for row sums; -1 marks "all l"
    return [Entry(n, -1, c, "row-sums") for n, c in enumerate(ROW_SUMS, start=1)]


def maximal_entries() -> list[Entry]:
    return [Entry(n, -1, c, "maximal") for n, c in enumerate(MAXIMAL_TILINGS, start=1)]
