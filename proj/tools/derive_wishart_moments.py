#!/usr/bin/env python3
"""Derive the exact Wishart trace-moment identities used by the a4 estimator.

For W ~ W_p(n, Sigma) (W = sum of n outer products of N(0, Sigma) vectors)
every expectation of a degree-k product of traces of powers of W is a linear
combination of the degree-k monomials in t_i = tr Sigma^i, with coefficients
that are integer polynomials in n and do not depend on p or Sigma.

This script computes those coefficients exactly for degrees 2, 3 and 4 by
Wick enumeration: columns of the p x n Gaussian data matrix are independent,
so summing over column-index tuples reduces to a sum over set partitions of
the column slots, each weighted by a falling factorial in n.  Row sums are
enumerated directly for a symbolic diagonal Sigma.

Output: the 5x5 matrix A(n) with

  E[ trW^4, trW^3 trW, (trW^2)^2, trW^2 (trW)^2, (trW)^4 ]'
      = A(n) [ t4, t3 t1, t2^2, t2 t1^2, t1^4 ]'

which src/spectral.cpp inverts at runtime to obtain an unbiased estimator of
tr Sigma^4.  Several independent checks run before anything is printed:

  * degree-2 identities reproduce the unbiasedness of the classical
    tr(Sigma^2) estimator,
  * degree-3 identities reproduce the classical combination
    E[n^2 trW^3 - 3n trW^2 trW + 2 (trW)^3] = n(n+4)(n+2)(n-1)(n-2) t3,
  * every row of A(n) sums to n(n+2)(n+4)(n+6)   (p = 1 collapse, where
    every monomial equals E[(chi^2_n)^4] sigma^8),
  * the (trW)^4 row matches the cumulant expansion of a weighted chi-square.
"""

import itertools
from fractions import Fraction

import sympy as sp

n = sp.Symbol("n")


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def falling(m):
    out = sp.Integer(1)
    for i in range(m):
        out *= n - i
    return sp.expand(out)


def double_factorial(m):
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def expected_trace_monomial(factors, col_slots, d):
    """E[ prod z_{r_f, k_{c_f}} ] summed over all row and column indices.

    factors: list of (row_var, col_slot) pairs; row_var indexes an abstract
    row variable, col_slot indexes one of `col_slots` column variables.
    d: list of per-row variances (symbolic), length p.
    Returns an exact polynomial in n.
    """
    p = len(d)
    row_vars = sorted({r for r, _ in factors})
    total = sp.Integer(0)
    partitions = list(set_partitions(list(range(col_slots))))
    for assign in itertools.product(range(p), repeat=len(row_vars)):
        row_of = dict(zip(row_vars, assign))
        for part in partitions:
            prod = sp.Integer(1)
            ok = True
            for block in part:
                counts = {}
                for r, c in factors:
                    if c in block:
                        counts[row_of[r]] = counts.get(row_of[r], 0) + 1
                for row, m in counts.items():
                    if m % 2 == 1:
                        ok = False
                        break
                    prod *= double_factorial(m - 1) * d[row] ** (m // 2)
                if not ok:
                    break
            if ok:
                total += falling(len(part)) * prod
    return sp.expand(total)


# Trace monomials as factor lists.  Row variables are small ints; column
# slots likewise.  trW^k contributes a closed cycle of 2k factors.
def cycle(rows, cols):
    out = []
    k = len(rows)
    for i in range(k):
        out.append((rows[i], cols[i]))
        out.append((rows[(i + 1) % k], cols[i]))
    return out


MONOMIALS4 = {
    "trW4": cycle([0, 1, 2, 3], [0, 1, 2, 3]),
    "trW3_trW": cycle([0, 1, 2], [0, 1, 2]) + cycle([3], [3]),
    "trW2_sq": cycle([0, 1], [0, 1]) + cycle([2, 3], [2, 3]),
    "trW2_trW_sq": cycle([0, 1], [0, 1]) + cycle([2], [2]) + cycle([3], [3]),
    "trW_4th": cycle([0], [0]) + cycle([1], [1]) + cycle([2], [2]) + cycle([3], [3]),
}

MONOMIALS3 = {
    "trW3": cycle([0, 1, 2], [0, 1, 2]),
    "trW2_trW": cycle([0, 1], [0, 1]) + cycle([2], [2]),
    "trW_3rd": cycle([0], [0]) + cycle([1], [1]) + cycle([2], [2]),
}

MONOMIALS2 = {
    "trW2": cycle([0, 1], [0, 1]),
    "trW_sq": cycle([0], [0]) + cycle([1], [1]),
}


def sigma_monomials(d, degree):
    t = [None] + [sum(x**i for x in d) for i in range(1, 5)]
    if degree == 2:
        return [t[2], t[1] ** 2]
    if degree == 3:
        return [t[3], t[2] * t[1], t[1] ** 3]
    return [t[4], t[3] * t[1], t[2] ** 2, t[2] * t[1] ** 2, t[1] ** 4]


def solve_coefficients(monomials, degree, col_slots, diagonals):
    """Return {name: [coeff poly in n per sigma-monomial]} solved exactly."""
    m = {2: 2, 3: 3, 4: 5}[degree]
    rows = []
    for d in diagonals:
        rows.append(sigma_monomials([sp.Integer(x) for x in d], degree))
    M = sp.Matrix(rows[:m])
    assert M.det() != 0, "diagonal choices are degenerate"
    out = {}
    for name, factors in monomials.items():
        rhs = sp.Matrix(
            [expected_trace_monomial(factors, col_slots, [sp.Integer(x) for x in d]) for d in diagonals[:m]]
        )
        sol = M.solve(rhs)
        out[name] = [sp.expand(sp.nsimplify(s)) for s in sol]
    return out


def main():
    diag2 = [(1, 2), (1, 3), (2, 5)]
    diag3 = [(1, 2, 4), (1, 3, 5), (2, 3, 7), (1, 2, 9)]
    diag4 = [(1, 2, 4, 8), (1, 3, 5, 7), (2, 3, 5, 11), (1, 2, 3, 13), (3, 5, 7, 11)]

    deg2 = solve_coefficients(MONOMIALS2, 2, 2, diag2)
    print("degree 2:")
    for k, v in deg2.items():
        print(f"  E[{k}] = {v[0]} * t2 + {v[1]} * t1^2")
    combo = sp.expand(sp.Matrix(deg2["trW2"]) - sp.Matrix(deg2["trW_sq"]) / n)
    assert sp.simplify(combo[0] - (n + 2) * (n - 1)) == 0, combo
    assert sp.simplify(combo[1]) == 0, combo
    print("  check: E[trW^2 - (trW)^2/n] = (n+2)(n-1) t2   OK")

    deg3 = solve_coefficients(MONOMIALS3, 3, 3, diag3)
    print("degree 3:")
    for k, v in deg3.items():
        print(f"  E[{k}] = {v[0]} * t3 + {v[1]} * t2 t1 + {v[2]} * t1^3")
    combo = sp.expand(
        n**2 * sp.Matrix(deg3["trW3"]) - 3 * n * sp.Matrix(deg3["trW2_trW"]) + 2 * sp.Matrix(deg3["trW_3rd"])
    )
    target = sp.expand(n * (n + 4) * (n + 2) * (n - 1) * (n - 2))
    assert sp.simplify(combo[0] - target) == 0, combo
    assert sp.simplify(combo[1]) == 0 and sp.simplify(combo[2]) == 0, combo
    print("  check: E[n^2 trW^3 - 3n trW^2 trW + 2(trW)^3] = n(n+4)(n+2)(n-1)(n-2) t3   OK")

    deg4 = solve_coefficients(MONOMIALS4, 4, 4, diag4)
    order = ["trW4", "trW3_trW", "trW2_sq", "trW2_trW_sq", "trW_4th"]
    chi4 = sp.expand(n * (n + 2) * (n + 4) * (n + 6))
    print("degree 4:  (columns: t4, t3 t1, t2^2, t2 t1^2, t1^4)")
    for name in order:
        coeffs = deg4[name]
        rowsum = sp.expand(sum(coeffs))
        assert sp.simplify(rowsum - chi4) == 0, (name, rowsum)
        print(f"  E[{name}] row: {[sp.factor(c) for c in coeffs]}")
    # weighted chi-square cumulant check for (trW)^4
    expect = [48 * n, 32 * n**2, 12 * n**2, 12 * n**3, n**4]
    for got, want in zip(deg4["trW_4th"], expect):
        assert sp.simplify(got - want) == 0, (got, want)
    print("  check: (trW)^4 row matches chi-square cumulant expansion   OK")
    print("  check: every row sums to n(n+2)(n+4)(n+6)   OK")

    print("\nC++ table (row-major, coefficients of n^0..n^4 per entry):")
    cols = ["t4", "t3*t1", "t2^2", "t2*t1^2", "t1^4"]
    for name in order:
        for c, col in zip(deg4[name], cols):
            poly = sp.Poly(c, n)
            coeffs = [0] * 5
            for power, coef in zip(poly.monoms(), poly.coeffs()):
                coeffs[power[0]] = int(coef)
            print(f"    {{{', '.join(str(x) for x in coeffs)}}},  // {name} <- {col}")


if __name__ == "__main__":
    main()
