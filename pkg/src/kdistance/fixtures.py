"""Published numeric tables, embedded verbatim for hermetic verification.

``INDEX_TABLES[family][quantity]`` lists values for p = 2..10.  LSO entries
are the printed two-decimal strings turned into floats.  Partition tables
hold each class frequency as polynomial coefficients ``(c0, c1, c2)`` in p.
"""

from __future__ import annotations

from dataclasses import dataclass

FIXTURE_P = range(2, 11)

INDEX_TABLES: dict[str, dict[str, tuple]] = {
    "zigzag": {
        # Table 3
        "lm1": (148, 231, 314, 397, 480, 563, 646, 729, 812),
        "lm2": (273, 446, 619, 792, 965, 1138, 1311, 1484, 1657),
        "hlm1": (1068, 1777, 2486, 3195, 3904, 4613, 5322, 6031, 6740),
        "hlm2": (4417, 7754, 11091, 14428, 17765, 21102, 24439, 27776, 31113),
        # Table 4
        "lso": (55.21, 83.9, 112.59, 141.28, 169.97, 198.66, 227.35, 256.04, 284.73),
        "lf": (572, 935, 1298, 1661, 2024, 2387, 2750, 3113, 3476),
        "hlf": (19438, 33891, 48344, 62797, 77250, 91703, 106156, 120609, 135062),
        "ly": (2380, 4035, 5640, 7345, 9000, 10655, 12310, 13965, 15620),
        "lyco": (-1808, -6200, -13176, -22736, -34880, -49608, -66920, -86816, -109296),
    },
    "rhombic": {
        # Table 5
        "lm1": (140, 328, 588, 920, 1324, 1800, 2348, 2968, 3660),
        "lm2": (270, 746, 1438, 2346, 3470, 4810, 6366, 8138, 10126),
        "hlm1": (1108, 3028, 5812, 9460, 13972, 19348, 25588, 32692, 40660),
        "hlm2": (5058, 18482, 39682, 68658, 105410, 149938, 202242, 262322, 330178),
        # Table 6
        "lso": (51.11, 110.62, 190.91, 291.23, 413.83, 556.46, 719.87, 904.06, 1109.04),
        "lf": (568, 1536, 2936, 4768, 7032, 9728, 12856, 16416, 20408),
        "hlf": (22324, 77620, 164020, 281524, 430132, 609844, 820660, 1062580, 1335604),
        "ly": (2528, 7696, 15456, 25808, 38752, 54288, 72416, 93136, 116448),
        "lyco": (15400, 46160, 100920, 186160, 308360, 474000, 689560, 961520, 1296360),
    },
}

TABLE_SOURCE = {
    ("zigzag", "partition"): "Table 1",
    ("rhombic", "partition"): "Table 2",
    **{("zigzag", q): "Table 3" for q in ("lm1", "lm2", "hlm1", "hlm2")},
    **{("zigzag", q): "Table 4" for q in ("lso", "lf", "hlf", "ly", "lyco")},
    **{("rhombic", q): "Table 5" for q in ("lm1", "lm2", "hlm1", "hlm2")},
    **{("rhombic", q): "Table 6" for q in ("lso", "lf", "hlf", "ly", "lyco")},
}

PARTITION_TABLES: dict[str, dict[tuple[int, int], tuple[int, int, int]]] = {
    "zigzag": {
        (2, 2): (2, 0, 0),
        (2, 3): (4, 0, 0),
        (3, 3): (-2, 2, 0),
        (3, 4): (4, 0, 0),
        (3, 5): (-4, 4, 0),
        (4, 5): (0, 1, 0),
        (5, 5): (-3, 3, 0),
    },
    "rhombic": {
        (2, 3): (4, 0, 0),
        (3, 3): (2, 0, 0),
        (3, 4): (8, 0, 0),
        (4, 4): (-16, 8, 0),
        (4, 6): (-4, 4, 0),
        # (p-1)^2 + 2(p-1)(p-2)
        (6, 6): (5, -8, 3),
    },
}


@dataclass(frozen=True)
class Fixture:
    family: str
    p: int
    quantity: str
    value: int | float | dict
    source: str


def index_fixture(family: str, p: int, quantity: str) -> Fixture | None:
    column = INDEX_TABLES.get(family, {}).get(quantity)
    if column is None or p not in FIXTURE_P:
        return None
    return Fixture(family, p, quantity, column[p - 2], TABLE_SOURCE[(family, quantity)])


def partition_fixture(family: str, p: int) -> Fixture | None:
    table = PARTITION_TABLES.get(family)
    if table is None or p not in FIXTURE_P:
        return None
    classes = {}
    for key, (c0, c1, c2) in table.items():
        f = c0 + c1 * p + c2 * p * p
        if f:
            classes[key] = f
    return Fixture(family, p, "partition", classes, TABLE_SOURCE[(family, "partition")])


def all_fixtures() -> list[Fixture]:
    out = []
    for family, columns in INDEX_TABLES.items():
        for p in FIXTURE_P:
            for quantity in columns:
                out.append(index_fixture(family, p, quantity))
            out.append(partition_fixture(family, p))
    return out
