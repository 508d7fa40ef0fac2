"""Published values used by ``stiefeldeg verify``."""

# deg St(k, n) for 1 <= k <= n <= 10
KNOWN_DEGREES = {
    1: [2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
    2: [4, 8, 8, 8, 8, 8, 8, 8, 8],
    3: [16, 40, 64, 64, 64, 64, 64, 64],
    4: [80, 384, 704, 1024, 1024, 1024, 1024],
    5: [768, 4768, 14848, 23808, 32768, 32768],
    6: [9536, 111616, 420736, 1064960, 1581056],
    7: [223232, 3433600, 22429696, 66082816],
    8: [6867200, 196968448, 1604859904],
    9: [393936896, 14994641408],
    10: [29989282816],
}


def known_degree(k: int, n: int) -> int:
    return KNOWN_DEGREES[k][n - k]


# Omega_{k,n} for k+1 <= n <= 2k-1, n <= 10 (and the seam n = 2k-1)
KNOWN_OMEGAS = {
    (2, 3): (1,),
    (3, 4): (1, 0), (3, 5): (1, 1),
    (4, 5): (2, 1), (4, 6): (1, 1, 0), (4, 7): (1, 1, 1),
    (5, 6): (2, 1, 0), (5, 7): (2, 2, 1), (5, 8): (1, 1, 1, 0), (5, 9): (1, 1, 1, 1),
    (6, 7): (3, 2, 1), (6, 8): (2, 2, 1, 0), (6, 9): (2, 2, 2, 1), (6, 10): (1, 1, 1, 1, 0),
    (7, 8): (3, 2, 1, 0), (7, 9): (3, 3, 2, 1), (7, 10): (2, 2, 2, 1, 0),
    (8, 9): (4, 3, 2, 1), (8, 10): (3, 3, 2, 1, 0),
    (9, 10): (4, 3, 2, 1, 0),
}
