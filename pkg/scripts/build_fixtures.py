#!/usr/bin/env python3
"""Regenerate the embedded OEIS fixtures from first principles.

Every sequence is computed by a route that does not touch the package's
transform or continued-fraction code: permutation enumeration, lattice-path
dynamic programming, closed binomial formulas, or quadratic fixed points in
plain integer arithmetic.  A129775 and A111961 are entered by hand from
their published terms.

Usage: python scripts/build_fixtures.py [outdir]
"""

from __future__ import annotations

import sys
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from pathlib import Path

TERMS = 10


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def motzkin(n):
    return sum(comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def riordan_numbers(count):
    # a(n) = (n-1)(2a(n-1) + 3a(n-2))/(n+1)
    a = [1, 0]
    for n in range(2, count):
        a.append((n - 1) * (2 * a[n - 1] + 3 * a[n - 2]) // (n + 1))
    return a[:count]


def stirling2(n, k):
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


def fubini(n):
    return sum(factorial(k) * stirling2(n, k) for k in range(n + 1))


def large_schroeder(n):
    return sum(comb(n + k, 2 * k) * catalan(k) for k in range(n + 1))


def little_schroeder(n):
    return 1 if n == 0 else large_schroeder(n) // 2


def cyclic_ordered_partitions(n):
    # EGF e^x / (2 - e^x): binomial convolution of 1 with Fubini
    return sum(comb(n, k) * fubini(k) for k in range(n + 1))


def _poly_mul(a, b, n):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return out


def springer(count):
    # EGF 1/(cos x - sin x); reciprocal in exact rationals
    d = []
    for n in range(count):
        if n % 2 == 0:
            d.append(Fraction((-1) ** (n // 2), factorial(n)))
        else:
            d.append(Fraction(-((-1) ** (n // 2)), factorial(n)))
    r = [Fraction(1)]
    for n in range(1, count):
        r.append(-sum(d[k] * r[n - k] for k in range(1, n + 1)))
    return [int(c * factorial(n)) for n, c in enumerate(r)]


def a052709(count):
    # u = x + (1 + x) u^2, u = sum a(n) x^n with a(0) = 0
    u = [0] * count
    for _ in range(count):
        sq = _poly_mul(u, u, count)
        nxt = [0] * count
        nxt[1] = 1
        for i in range(count):
            nxt[i] += sq[i]
            if i + 1 < count:
                nxt[i + 1] += sq[i]
        u = nxt
    return u


def a064641(count):
    """Paths (0,0) -> (n,n) with steps (1,0), (0,1), (1,1), (2,1), never above y = x."""
    size = count
    ways = [[0] * size for _ in range(size)]
    ways[0][0] = 1
    for i in range(size):
        for j in range(min(i, size - 1) + 1):
            if i == 0 and j == 0:
                continue
            total = 0
            if i >= 1 and j <= i - 1:
                total += ways[i - 1][j]
            if j >= 1:
                total += ways[i][j - 1]
            if i >= 1 and j >= 1:
                total += ways[i - 1][j - 1]
            if i >= 2 and j >= 1 and j - 1 <= i - 2:
                total += ways[i - 2][j - 1]
            ways[i][j] = total
    return [ways[n][n] for n in range(count)]


def count_perms(n, pred):
    return sum(1 for p in permutations(range(n)) if pred(p))


def no_double_falls(p):
    return not any(p[i] > p[i + 1] > p[i + 2] for i in range(len(p) - 2))


def no_singleton_runs(p):
    if not p:
        return True
    run = 1
    for i in range(1, len(p)):
        if p[i] > p[i - 1]:
            run += 1
        else:
            if run == 1:
                return False
            run = 1
    return run != 1


def no_strong_fixed_points(p):
    n = len(p)
    prefix_max = -1
    suffix_min = [n] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(suffix_min[i + 1], p[i])
    for k in range(n):
        if p[k] == k and prefix_max < k and suffix_min[k + 1] > k:
            return False
        prefix_max = max(prefix_max, p[k])
    return True


SEQUENCES = {
    "A000108": ("ogf", "Catalan numbers", lambda: [catalan(n) for n in range(TERMS)]),
    "A000142": ("egf", "Factorial numbers n!", lambda: [factorial(n) for n in range(TERMS)]),
    "A001006": ("ogf", "Motzkin numbers", lambda: [motzkin(n) for n in range(TERMS)]),
    "A005043": ("ogf", "Riordan numbers (Motzkin sums)", lambda: riordan_numbers(TERMS)),
    "A000670": ("egf", "Fubini numbers (ordered set partitions)", lambda: [fubini(n) for n in range(TERMS)]),
    "A001003": ("ogf", "Little Schroeder numbers", lambda: [little_schroeder(n) for n in range(TERMS)]),
    "A000629": ("egf", "Cyclically ordered partitions", lambda: [cyclic_ordered_partitions(n) for n in range(TERMS)]),
    "A006318": ("ogf", "Large Schroeder numbers", lambda: [large_schroeder(n) for n in range(TERMS)]),
    "A001586": ("egf", "Springer numbers", lambda: springer(TERMS)),
    "A052709": ("ogf", "Expansion of (1-sqrt(1-4x-4x^2))/(2(1+x))", lambda: a052709(TERMS + 1)),
    "A049774": ("egf", "Permutations without double falls", lambda: [count_perms(n, no_double_falls) for n in range(TERMS)]),
    "A097899": ("egf", "Permutations with no runs of length 1", lambda: [count_perms(n, no_singleton_runs) for n in range(TERMS)]),
    "A052186": ("egf", "Permutations with no strong fixed points", lambda: [count_perms(n, no_strong_fixed_points) for n in range(TERMS)]),
    "A129775": ("egf", "Maximally clustered permutations", lambda: [1, 1, 2, 6, 21, 78, 298, 1157, 4539, 17936]),
    "A064641": ("ogf", "Paths with steps (1,0),(0,1),(1,1),(2,1) below y=x", lambda: a064641(TERMS)),
    "A111961": ("ogf", "Expansion of 1/(sqrt(1-2x-3x^2)-x)", lambda: [1, 2, 6, 18, 56, 176, 558, 1778, 5686, 18230]),
}

OFFSETS = {"A129775": 1}


def write_bfile(path: Path, oeis_id: str, kind: str, desc: str, terms, offset: int) -> None:
    lines = [f"# {oeis_id} {desc}", f"# kind: {kind}"]
    lines += [f"{offset + i} {t}" for i, t in enumerate(terms)]
    path.write_text("\n".join(lines) + "\n")


def main(argv):
    root = Path(__file__).resolve().parents[1]
    out = Path(argv[1]) if len(argv) > 1 else root / "src" / "riordan_moments" / "data" / "bfiles"
    out.mkdir(parents=True, exist_ok=True)
    for oeis_id, (kind, desc, fn) in SEQUENCES.items():
        terms = fn()
        write_bfile(out / f"b{oeis_id[1:]}.txt", oeis_id, kind, desc, terms, OFFSETS.get(oeis_id, 0))
        print(oeis_id, terms)


if __name__ == "__main__":
    main(sys.argv)
