"""Brute-force oracle for the quotient X = Z^k / L and its S_k orbits.

L is the solution lattice of the congruences
    l0 * ((s_1 + ... + s_k) * (2c + d) * r0 - s_i * d) == 0 (mod n),  i = 1..k.
The class of t is identified with the residue vector A t mod n (the kernel of
t -> A t mod n is exactly L), so no lattice reduction is involved.
"""
import itertools
import math
import sys
from math import comb, gcd


def residues(n, c, d, r, k, l0, t):
    r0 = r // k
    total = sum(t)
    return tuple((l0 * (total * (2 * c + d) * r0 - ti * d)) % n for ti in t)


def xlambda(n, c, d, r, k, l0):
    classes = {}
    for t in itertools.product(range(n), repeat=k):
        classes.setdefault(residues(n, c, d, r, k, l0, t), t)
    perms = list(itertools.permutations(range(k)))
    orbit_keys = set()
    for t in classes.values():
        orbit_keys.add(min(residues(n, c, d, r, k, l0, tuple(t[p[i]] for i in range(k))) for p in perms))
    return len(classes), len(orbit_keys)


def derived(n, c, d, r, k, l0):
    r0 = r // k
    n0 = n // math.gcd(math.gcd(n, (2 * c + d) * r0 * l0), d * l0)
    d0 = n // math.gcd(n, l0 * (2 * c * r + d * r - d))
    return r0, n0, d0


def closed(kind, n0, d0, k):
    if kind == "kp":
        num = comb(k + n0 - 1, k) * d0
        assert num % n0 == 0
        return num // n0
    return comb(k + n0 - 1, k)


def sweep():
    for n in range(1, 11):
        divs = [l for l in range(1, n + 1) if n % l == 0]
        for k in range(1, 5):
            for l0 in divs:
                for c in range(n):
                    for m in (1, 2, 3, 4):
                        yield ("kp", n, c, 1, m * k, k, l0)
                for m in (1, 2):
                    yield ("savin", n, -1, 2, m * k, k, l0)


if __name__ == "__main__":
    if len(sys.argv) > 1 and sys.argv[1] == "sweep":
        bad = 0
        rows = 0
        for kind, n, c, d, r, k, l0 in sweep():
            r0, n0, d0 = derived(n, c, d, r, k, l0)
            order, orbits = xlambda(n, c, d, r, k, l0)
            expect_order = n0 ** (k - 1) * d0 if kind == "kp" else n0 ** k
            cl = closed(kind, n0, d0, k)
            rows += 1
            if order != expect_order or orbits != cl:
                bad += 1
                print("MISMATCH", kind, n, c, r, k, l0, n0, d0, order, expect_order, orbits, cl)
            if kind == "kp":
                q = n0 // d0
                if q != gcd(n // l0, 2 * c * r + r - 1) or gcd(q, k) != 1:
                    bad += 1
                    print("LEMMA", kind, n, c, r, k, l0)
        print("rows", rows, "bad", bad)
    elif len(sys.argv) > 1 and sys.argv[1] == "csv":
        # Frozen as oracle_sweep.csv; rows in the CLI's sweep order.
        rows = []
        for kind, n, c, d, r, k, l0 in sweep():
            r0, n0, d0 = derived(n, c, d, r, k, l0)
            order, orbits = xlambda(n, c, d, r, k, l0)
            rows.append((kind, n, c, d, r, k, l0, r0, n0, d0, order, orbits))
        rows.sort(key=lambda row: row[:7])
        print("kind,n,c,d,r,k,l0,r0,n0,d0,x_order,orbit_count")
        for row in rows:
            print(",".join(str(x) for x in row))
    else:
        for args in [("kp", 4, 0, 1, 2, 2, 1), ("kp", 4, 0, 1, 3, 3, 1), ("savin", 4, -1, 2, 2, 2, 1)]:
            kind, *p = args
            print(args, derived(*p), xlambda(*p))
