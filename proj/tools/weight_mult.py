#!/usr/bin/env python3
"""Exact weight multiplicities dim V(Lambda)_{Lambda - beta} via Freudenthal.

Independent of the C++ engine: only the Cartan matrix, the highest weight
and beta go in, and the multiplicity of the weight Lambda - beta in the
irreducible highest-weight module comes out.  Finite type only (the root
system is generated by reflection closure and must be finite).

Usage:
  weight_mult.py --matrix '[[2,-1],[-1,2]]' --weight '[1,0]' --beta '[1,1]'
  weight_mult.py ... --beta '[1,1]' --beta '[2,1]'   # one line per beta
"""

import argparse
import json
import sys
from fractions import Fraction
from functools import lru_cache


def symmetrizers(A):
    rank = len(A)
    d = [None] * rank
    for start in range(rank):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(rank):
                if A[i][j] != 0 and d[j] is None:
                    # d_i a_ij = d_j a_ji
                    d[j] = d[i] * A[i][j] / A[j][i]
                    stack.append(j)
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // __import__("math").gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in d]
    g = 0
    for x in ints:
        g = __import__("math").gcd(g, x)
    return [x // g for x in ints]


def positive_roots(A):
    """Reflection closure of the simple roots; raises for infinite type."""
    rank = len(A)
    simples = [tuple(1 if j == i else 0 for j in range(rank))
               for i in range(rank)]
    roots = set(simples)
    frontier = set(simples)
    while frontier:
        new = set()
        for r in frontier:
            for i in range(rank):
                pairing = sum(A[i][j] * r[j] for j in range(rank))
                s = list(r)
                s[i] -= pairing
                s = tuple(s)
                if s not in roots:
                    new.add(s)
        roots |= new
        frontier = new
        if any(abs(c) > 64 for r in roots for c in r):
            raise SystemExit("error: root system is not finite")
    return sorted(r for r in roots if all(c >= 0 for c in r) and any(r))


def multiplicity(A, ell, beta):
    rank = len(A)
    d = symmetrizers(A)

    def bl(u, v):  # (sum u_i a_i | sum v_j a_j)
        return sum(d[i] * A[i][j] * u[i] * v[j]
                   for i in range(rank) for j in range(rank))

    def lam_rho_dot(b):  # (Lambda + rho | b) for b in root coordinates
        return sum(d[j] * (ell[j] + 1) * b[j] for j in range(rank))

    pos = positive_roots(A)

    @lru_cache(maxsize=None)
    def mult(b):
        if any(c < 0 for c in b):
            return 0
        if not any(b):
            return 1
        denom = 2 * lam_rho_dot(b) - bl(b, b)
        if denom <= 0:
            return 0
        acc = Fraction(0)
        for a in pos:
            k = 1
            while True:
                up = tuple(b[j] - k * a[j] for j in range(rank))
                if any(c < 0 for c in up):
                    break
                m = mult(up)
                if m:
                    # (mu + k alpha | alpha) with mu = Lambda - b + k alpha
                    acc += m * (lam_rho_dot(a) - sum(d[j] * a[j] for j in range(rank))
                                - bl(b, a) + k * bl(a, a))
                k += 1
        val = 2 * acc / denom
        if val.denominator != 1 or val < 0:
            raise SystemExit("error: Freudenthal recursion left the integers")
        return int(val)

    return mult(tuple(beta))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--matrix", required=True, help="Cartan matrix as JSON")
    ap.add_argument("--weight", required=True,
                    help="highest-weight multiplicities as JSON list")
    ap.add_argument("--beta", action="append", required=True,
                    help="root-lattice coordinates as JSON list (repeatable)")
    args = ap.parse_args()
    A = json.loads(args.matrix)
    ell = json.loads(args.weight)
    for braw in args.beta:
        beta = json.loads(braw)
        print(multiplicity(A, ell, beta))


if __name__ == "__main__":
    main()
