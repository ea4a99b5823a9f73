"""Published reference data.

Rational moment tables, numerator coefficient arrays, a 20-node quadrature
table and several closed rational functions of ``k``.  Everything here is
transcribed data used as an oracle; nothing is computed.
"""

from .exact import mpq, parse_rational

# <|rho^PT|^n> for generic real two-qubit states, n = 1..13
_REBIT_PT = [
    ("-1/858", "-0.0011655"),
    ("27/2489344", "0.0000108462"),
    ("-8363/66216550400", "-1.26298e-7"),
    ("21859/10443295948800", "2.09311e-9"),
    ("-23071/539633583390720", "-4.27531e-11"),
    ("3317321/3253917653076541440", "1.01949e-12"),
    ("-419856257/15366774022001834065920", "-2.73223e-14"),
    ("16945249/21117403549591928832000", "8.02431e-16"),
    ("-6102620963/240565904621616585139814400", "-2.53678e-17"),
    ("87816716413/103068223454742370906999357440", "8.52025e-19"),
    ("-7685831825319/255310031843279606667374504181760", "-3.01039e-20"),
    ("23559692226221/21217623285399369347467109090721792", "1.11038e-21"),
    ("-31283325154283/736092406055063912488279599166259200", "-4.24992e-23"),
]

# <(|rho| |rho^PT|)^n>, same ensemble
_REBIT_PRODUCT = [
    ("0", "0"),
    ("7/5696343244800", "1.22886e-12"),
    ("1/677899511057612800", "1.47514e-18"),
    ("1/45973294808920227840000", "2.17518e-23"),
    ("1/11662680803407302839532257280", "8.57436e-29"),
    ("3929/4158654163938276392103553381781471232", "9.44777e-34"),
    ("1/158158366213274948625327048295175946240", "6.32278e-39"),
    ("71527/1091771390479438557169317171313498708778365747200", "6.55146e-44"),
    ("4847/8524774835462825812953111833131999123882778862551040", "5.68578e-49"),
    ("2637/441859421690475898778224458156196857558486829112995348480", "5.96796e-54"),
    ("1/16833241044745336849504728327369136893812113975649318731776", "5.94063e-59"),
    ("66838003/103562821755098721107694750210986399334006111231977898090691403395891200", "6.45386e-64"),
    ("55601/7991978474394124344137676945763648296251134760058623476703807122125619200", "6.9571e-69"),
]

# <|rho^PT|^n> over real states with at least one zero eigenvalue, n = 1..10
_REBIT_BOUNDARY_PT = [
    ("-5/2376", "-0.00210438"),
    ("7/380160", "0.0000184133"),
    ("-9/34777600", "-2.58787e-7"),
    ("443/89942261760", "4.92538e-9"),
    ("-461/4032782401536", "-1.14313e-10"),
    ("5455/1785064543223808", "3.05591e-12"),
    ("-631/6948198442598400", "-9.08149e-14"),
    ("474017/161763811601154048000", "2.9303e-15"),
    ("-4003573/39645007353595350220800", "-1.00986e-16"),
    ("3397/924892257224239349760", "3.67286e-18"),
]

TABLES = {
    "rebit-pt": _REBIT_PT,
    "rebit-product": _REBIT_PRODUCT,
    "rebit-boundary-pt": _REBIT_BOUNDARY_PT,
}


def table_ids():
    return sorted(TABLES)


def table_lookup(table: str, n: int):
    """Stored exact value of row ``n`` (1-based) of a reference table."""
    try:
        rows = TABLES[table]
    except KeyError:
        raise KeyError(f"unknown table {table!r}; choose from {table_ids()}") from None
    if not 1 <= n <= len(rows):
        raise IndexError(f"table {table!r} has rows 1..{len(rows)}, not {n}")
    return parse_rational(rows[n - 1][0])


def table_decimal(table: str, n: int) -> float:
    """The rounded decimal printed next to row ``n``."""
    table_lookup(table, n)
    return float(TABLES[table][n - 1][1])


def table_rows(table: str) -> list:
    return [(i + 1, table_lookup(table, i + 1)) for i in range(len(TABLES[table]))]


# Ascending numerator coefficients of <|rho^PT|^n |rho|^k>/<|rho|^k>, n = 1..6
REBIT_NUMERATORS = {
    1: [-16, 5, 9, 2],
    2: [4860, 2940, 709, 368, 203, 48, 4],
    3: [-3612816, -2516616, -401334, 136801, 84291, 29493, 8559, 1674, 180, 8],
    4: [6610161600, 5496485760, 1636873812, 166748972, 6212189, 13904508, 7805462,
        2389416, 525681, 84496, 9112, 576, 16],
    5: [-23680812672000, -21644930613600, -7755993054000, -1199508017652, -4378482660,
        29246867605, 7876634465, 2649513956, 883461210, 219916945, 40679505, 5660714,
        575800, 40000, 1680, 32],
    6: [147885533254368000, 144374531813568000, 58524043784903280, 11977854861441312,
        1052189083196640, -30302414250528, -6899036908859, 3583820785224, 1632448582425,
        477741210624, 118164517947, 23817008856, 3786901675, 469728096, 44685468,
        3143808, 153360, 4608, 64],
}

# complex counterpart, n = 1..4
QUBIT_NUMERATORS = {
    1: [-42, -1, 6, 1],
    2: [10944, 4260, 220, 45, 67, 15, 1],
    3: [-6929280, -3684384, -456948, 80168, 27783, 5373, 1458, 282, 27, 1],
    4: [9247219200, 6039653760, 1342859616, 64072440, -13235252, 1080858, 1160375,
        278478, 50991, 7542, 749, 42, 1],
}

# 20-node Gauss rule for the moments of 16|rho^PT| (real case), 3-4 digits
QUADRATURE_NODES_20 = [
    -0.9501, -0.9081, -0.8587, -0.8024, -0.7402,
    -0.6734, -0.6032, -0.5309, -0.4581, -0.3860,
    -0.3160, -0.2495, -0.1877, -0.1317, -0.08248,
    -0.04104, -0.008293, 0.01040, 0.02973, 0.04698,
]
QUADRATURE_WEIGHTS_20 = [
    0.2714e-10, 0.1397e-8, 0.2416e-7, 0.2337e-6, 0.1553e-5,
    0.7908e-5, 0.3293e-4, 0.1171e-3, 0.3669e-3, 0.1034e-2,
    0.2671e-2, 0.6408e-2, 0.1446e-1, 0.3111e-1, 0.6499e-1,
    0.1372, 0.3467, 0.3440, 0.4894e-1, 0.1994e-2,
]

# threshold probabilities read off 30-node rules
QUADRATURE_TAIL_30 = {"ptdet": 0.42924, "product": 0.46129}
QUADRATURE_POSITIVE_ZEROS_30 = {"ptdet": 4, "product": 17}


def _p(desc, k):
    acc = mpq(0)
    for c in desc:
        acc = acc * k + c
    return acc


def _rebit_den(n, k):
    from .exact import rising
    return mpq(128) ** n * rising(k + 3, n) * rising(2 * k + mpq(11, 2), 2 * n)


def _rf_rebit_1(k):
    return (k - 1) * (k * (2 * k + 11) + 16) / (32 * (k + 3) * (4 * k + 11) * (4 * k + 13))


def _rf_rebit_2(k):
    num = k * (k * (k * (k * (4 * k * (k + 12) + 203) + 368) + 709) + 2940) + 4860
    return num / (1024 * (k + 3) * (k + 4) * (4 * k + 11) * (4 * k + 13) * (4 * k + 15) * (4 * k + 17))


def _rf_rebit_3(k):
    num = _p([8, 180, 1674, 8559, 29493, 84291, 136801, -401334, -2516616, -3612816], k)
    den = 32768 * (k + 3) * (k + 4) * (k + 5)
    for c in (11, 13, 15, 17, 19, 21):
        den *= 4 * k + c
    return num / den


def _rf_rebit_4(k):
    num = _p([16, 576, 9112, 84496, 525681, 2389416, 7805462, 13904508, 6212189,
              166748972, 1636873812, 5496485760, 6610161600], k)
    return num / _rebit_den(4, k)


def _rf_qubit_1(k):
    return (k * (k * (k + 6) - 1) - 42) / (8 * (2 * k + 9) * (4 * k + 17) * (4 * k + 19))


def _rf_qubit_2(k):
    num = k * (k * (k * (k * (k * (k + 15) + 67) + 45) + 220) + 4260) + 10944
    den = 64 * (2 * k + 9) * (2 * k + 11) * (4 * k + 17) * (4 * k + 19) * (4 * k + 21) * (4 * k + 23)
    return num / den


def _rf_unit_1(k):
    return 8 * (k * (k * (34 * k + 297) + 867) + 842) / (17 * (k + 3) * (4 * k + 11) * (4 * k + 13))


def _rf_unit_2(k):
    num = k * (k * (k * (k * (68 * k * (17 * k + 348) + 200835) + 904492) + 2279781) + 3048904) + 1689900
    den = 289 * (k + 3) * (k + 4) * (4 * k + 11) * (4 * k + 13) * (4 * k + 15) * (4 * k + 17)
    return 64 * num / den


def _rf_central_1(k):
    return mpq(-1) / (16 * (4 * k + 13) * (k + 3))


def _rf_central_2(k):
    return (k + 12) * (2 * k + 7) / (256 * (k + 3) * (k + 4) * (4 * k + 11) * (4 * k + 13) * (4 * k + 17))


# Published rational functions of k.  Keys name (family, quantity, n).
RATIONAL_FUNCTIONS = {
    ("rebit", "f1", 1): _rf_rebit_1,
    ("rebit", "f1", 2): _rf_rebit_2,
    ("rebit", "f1", 3): _rf_rebit_3,
    ("rebit", "f1", 4): _rf_rebit_4,
    ("qubit", "f1", 1): _rf_qubit_1,
    ("qubit", "f1", 2): _rf_qubit_2,
    ("rebit", "unit", 1): _rf_unit_1,
    ("rebit", "unit", 2): _rf_unit_2,
    ("rebit", "f2", 1): _rf_central_1,
    ("rebit", "f2", 2): _rf_central_2,
}


def rational_function(family: str, quantity: str, n: int, k):
    """Evaluate a published rational function exactly at ``k``."""
    return RATIONAL_FUNCTIONS[(family, quantity, n)](mpq(k))
