#!/usr/bin/env python3
"""Independent brute-force oracle for the frozen constants in the C++ tests.

Run: python3 tests/oracle/compute_golden.py
Nothing here imports or calls the C++ library.
"""
import itertools
import math


def p(m, x):
    return (m - 2) * x * (x - 1) // 2 + x


def values(m, bound, naturals=False):
    out = set()
    k = 0
    while True:
        pos, neg = p(m, k), p(m, -k)
        if pos > bound and (naturals or neg > bound):
            break
        if pos <= bound:
            out.add(pos)
        if not naturals and neg <= bound:
            out.add(neg)
        k += 1
    return sorted(out)


def first_failure(terms, bound, naturals=False):
    """terms: list of (coef, order). Least n <= bound not represented, else None."""
    tables = [[c * v for v in values(m, bound, naturals) if c * v <= bound] for c, m in terms]
    reach = {0}
    for t in tables:
        reach = {a + b for a in reach for b in t if a + b <= bound}
    for n in range(bound + 1):
        if n not in reach:
            return n
    return None


def excluded(form, bound):
    a, b, c = form
    rep = set()
    for x in range(math.isqrt(bound // a) + 1):
        for y in range(math.isqrt(bound // b) + 1):
            for z in range(math.isqrt(bound // c) + 1):
                v = a * x * x + b * y * y + c * z * z
                if v <= bound:
                    rep.add(v)
    return [n for n in range(bound + 1) if n not in rep]


def canonical(form, n, preds):
    """Lexicographically least (|x|,|y|,|z|, signs with + first)."""
    a, b, c = form
    for ax in range(math.isqrt(n // a) + 1):
        for ay in range(math.isqrt(n // b) + 1):
            for az in range(math.isqrt(n // c) + 1):
                if a * ax * ax + b * ay * ay + c * az * az != n:
                    continue
                for sx, sy, sz in itertools.product((1, -1), repeat=3):
                    t = (sx * ax, sy * ay, sz * az)
                    if all(pr(v) for pr, v in zip(preds, t)):
                        return t
    return None


if __name__ == "__main__":
    print("excluded (1,1,3) <=100:", excluded((1, 1, 3), 100))
    print("excluded (1,2,3) <=50:", excluded((1, 2, 3), 50))
    print("excluded (1,3,3) <=30:", excluded((1, 3, 3), 30))
    cop6 = lambda t: t % 2 != 0 and t % 3 != 0
    anyp = lambda t: True
    print("represent (1,1,3) 29 coprime6:", canonical((1, 1, 3), 29, [cop6] * 3))
    print("represent (1,2,3) 6 coprime6:", canonical((1, 2, 3), 6, [cop6] * 3))
    print("represent (1,1,3) 6:", canonical((1, 1, 3), 6, [anyp] * 3))

    survivors, counter = [], {}
    for b in range(1, 11):
        for c in range(b, 11):
            f = first_failure([(1, 5), (b, 5), (c, 5)], 10**4)
            if f is None:
                survivors.append((b, c))
            else:
                counter[(b, c)] = f
    print("survivors:", len(survivors), survivors)
    print("counterexamples:", counter)
    spots = {
        "p4+p4+p4": [(1, 4)] * 3,
        "p7+p7+p7": [(1, 7)] * 3,
        "p8+p8+p8": [(1, 8)] * 3,
        "2p5+2p5+2p5": [(2, 5)] * 3,
        "p5+p5+7p5": [(1, 5), (1, 5), (7, 5)],
        "p3+p5+p11 over N": None,
    }
    for name, t in spots.items():
        if t is not None:
            print(name, first_failure(t, 10**4))
    print("p3+p5+p11 over N", first_failure([(1, 3), (1, 5), (1, 11)], 10**4, True))
    print("3p3+p5+p7 over N", first_failure([(3, 3), (1, 5), (1, 7)], 10**4, True))
    print("p5+p5+p5 over N", first_failure([(1, 5)] * 3, 10**4, True))
    # canonical three odd squares (nonincreasing triples) for 8n+3
    for n in (0, 1, 3):
        T = 8 * n + 3
        best = min(t for t in itertools.product(range(1, 12, 2), repeat=3)
                   if sum(v * v for v in t) == T and t[0] >= t[1] >= t[2])
        print("three odd squares", T, best)
