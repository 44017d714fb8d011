"""Slow, independent reference computations used as test oracles.

Nothing here imports the library's arithmetic: polynomials over GF(p) are
plain coefficient lists and field elements are multiplied by schoolbook
polynomial multiplication.
"""

import itertools
from math import prod


def poly_mul_mod_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def monic_polys(p, deg):
    """Monic polynomials of degree ``deg``, constant term first, in
    lexicographic order of the coefficient tuple."""
    for low in itertools.product(range(p), repeat=deg):
        yield tuple(low) + (1,)


def irreducible_by_products(p, k):
    """Monic degree-k irreducibles: everything not a product of two monic
    polynomials of smaller positive degree."""
    reducible = set()
    for d1 in range(1, k // 2 + 1):
        for a in monic_polys(p, d1):
            for b in monic_polys(p, k - d1):
                reducible.add(tuple(poly_mul_mod_p(a, b, p)))
    return [f for f in monic_polys(p, k) if f not in reducible]


def digits(x, p, k):
    return [(x // p**i) % p for i in range(k)]


def undigits(ds, p):
    return sum(c * p**i for i, c in enumerate(ds))


def field_mul(a, b, p, k, modulus):
    """Multiply element indices ``a, b`` of GF(p^k) by long division."""
    prod_ = poly_mul_mod_p(digits(a, p, k), digits(b, p, k), p)
    for top in range(len(prod_) - 1, k - 1, -1):
        c = prod_[top]
        if c:
            for i, mc in enumerate(modulus):
                prod_[top - k + i] = (prod_[top - k + i] - c * mc) % p
    return undigits(prod_[:k], p)


def field_add(a, b, p, k):
    return undigits([(x + y) % p for x, y in zip(digits(a, p, k), digits(b, p, k))], p)


def footprint(e, q):
    return prod(q - c for c in e)


def box(q, m):
    return list(itertools.product(range(q), repeat=m))


def hyp(q, m, d):
    return {e for e in box(q, m) if footprint(e, q) >= d}


def rm(q, m, s):
    return {e for e in box(q, m) if sum(e) <= s}


def cube(q, m, s):
    return {e for e in box(q, m) if max(e, default=0) <= s}


def sums(H, i, m):
    out = {(0,) * m}
    for _ in range(i):
        out = {tuple(a + b for a, b in zip(u, v)) for u in out for v in H}
    return out


def reduce_exp(e, q):
    return tuple(c if c < q else (c - 1) % (q - 1) + 1 for c in e)


def l_set_definition(q, m, d, r, i, mode="strict"):
    """``{a : a + iH inside H_r}`` straight from the definition."""
    H = hyp(q, m, d)
    Hr = hyp(q, m, r + 1)
    S = sums(H, i, m)
    out = set()
    for a in box(q, m):
        ok = True
        for s in S:
            v = tuple(x + y for x, y in zip(a, s))
            if mode == "reduced":
                v = reduce_exp(v, q)
            if v not in Hr:  # also fails when v leaves the box
                ok = False
                break
        if ok:
            out.add(a)
    return out
