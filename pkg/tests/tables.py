"""Published f-vectors of CRY_n, entries indexed from dimension -1."""

CRY_F = {
    1: (1, 1),
    2: (1, 2, 1),
    3: (1, 4, 6, 4, 1),
    4: (1, 8, 26, 45, 45, 26, 8, 1),
    5: (1, 16, 98, 327, 681, 944, 897, 588, 262, 76, 13, 1),
    6: (1, 32, 342, 1943, 6982, 17326, 31236, 42198, 43521, 34601, 21249, 10020, 3571,
        933, 169, 19, 1),
    7: (1, 64, 1138, 10275, 58093, 228396, 664200, 1486921, 2633161, 3759650, 4386239,
        4218971, 3363558, 2227042, 1222927, 554147, 205256, 61206, 14351, 2550, 323, 26, 1),
    8: (1, 128, 3670, 50403, 424214, 2468235, 10653629, 35711651, 95967645, 211567734,
        389268482, 605593465, 804533944, 919531124, 909049826, 780149435, 582376682,
        378321185, 213630918, 104570683, 44165758, 15985336, 4910781, 1263620, 267378,
        45321, 5918, 559, 34, 1),
}

CRY_PRIMITIVE = {
    1: (0, 1),
    2: (0, 1, 1),
    3: (0, 1, 4, 4, 1),
    4: (0, 1, 11, 33, 42, 26, 8, 1),
    5: (0, 1, 26, 171, 507, 840, 865, 584, 262, 76, 13, 1),
    6: (0, 1, 57, 718, 4017, 12866, 26831, 39268, 42211, 34221, 21184, 10015, 3571, 933,
        169, 19, 1),
    7: (0, 1, 120, 2682, 25531, 138080, 490079, 1242533, 2375965, 3553184, 4258940,
        4158866, 3342132, 2221444, 1221913, 554033, 205250, 61206, 14351, 2550, 323, 26, 1),
    8: (0, 1, 247, 9327, 141904, 1201179, 6629070, 26168817, 78440289, 185974145, 359010583,
        576271053, 781064029, 903961423, 900492886, 776270805, 580939911, 377892743,
        213530461, 104552833, 44163497, 15985154, 4910774, 1263620, 267378, 45321, 5918,
        559, 34, 1),
}


def entry(row, d):
    """Entry of a table row at dimension ``d`` (row index ``d + 1``)."""
    return row[d + 1]
