"""Independent oracles the test suite checks library output against.

Everything here recomputes results along a different route than the
library takes: schoolbook multiplication, criteria-free pair
completion, combinatorial membership for monomial ideals, brute-force
staircase dimension.  Expected values frozen into the tests were
produced by these.
"""

from __future__ import annotations

import itertools

from genmat.groebner import normal_form, spolynomial
from genmat.polyring import Polynomial, mon_divides


def naive_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Schoolbook product, written independently of Polynomial.__mul__."""
    p = a.ring.field.p
    acc: dict = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            mon = tuple(x + y for x, y in zip(m1, m2))
            acc[mon] = (acc.get(mon, 0) + c1 * c2) % p
    return Polynomial(a.ring, acc)


def naive_buchberger(ring, gens, order):
    """Criteria-free pair completion with its own reduction bookkeeping.

    Processes every pair in FIFO order with no skipping, then
    minimalizes and tail-reduces with explicit loops.  Returns the
    reduced basis as a set of polynomials.
    """
    basis = [g.monic(order) for g in gens if not g.is_zero]
    queue = list(itertools.combinations(range(len(basis)), 2))
    while queue:
        i, j = queue.pop(0)
        r = normal_form(spolynomial(basis[i], basis[j], order), basis, order)
        if r.is_zero:
            continue
        r = r.monic(order)
        new = len(basis)
        basis.append(r)
        queue.extend((k, new) for k in range(new))
    # Minimalize: drop any element whose leading monomial another divides.
    keep: list[int] = []
    lms = [g.leading_monomial(order) for g in basis]
    for i in range(len(basis)):
        drop = False
        for j in range(len(basis)):
            if i == j:
                continue
            if mon_divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i):
                drop = True
                break
        if not drop:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    stable = False
    while not stable:
        stable = True
        for i in range(len(minimal)):
            rest = minimal[:i] + minimal[i + 1 :]
            r = normal_form(minimal[i], rest, order).monic(order)
            if r.terms != minimal[i].terms:
                minimal[i] = r
                stable = False
    return set(minimal)


def monomials_of_degree(nvars: int, degree: int):
    """All exponent tuples in nvars variables of the given total degree."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def monomial_ideal_members(generator_monomials, nvars: int, degree: int) -> set:
    """Degree-d monomials inside the monomial ideal the generators span."""
    gens = [tuple(g) for g in generator_monomials]
    out = set()
    for mon in monomials_of_degree(nvars, degree):
        if any(all(a <= b for a, b in zip(g, mon)) for g in gens):
            out.add(mon)
    return out


def product_monomials(gens_a, gens_b) -> set:
    """Pairwise sums of exponent tuples: generators of a monomial ideal product."""
    return {tuple(x + y for x, y in zip(a, b)) for a in gens_a for b in gens_b}


def brute_dimension(leading_monomials, nvars: int) -> int:
    """Largest variable subset meeting no leading-term support."""
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leading_monomials]
    if any(not s for s in supports):
        return -1
    best = 0
    for size in range(nvars, 0, -1):
        for subset in itertools.combinations(range(nvars), size):
            chosen = set(subset)
            if all(not s <= chosen for s in supports):
                return size
    return best


def random_poly(ring, rng, max_degree=3, terms=4):
    """Seeded random polynomial with small support."""
    out: dict = {}
    p = ring.field.p
    n = ring.nvars
    for _ in range(rng.randrange(1, terms + 1)):
        mon = [0] * n
        for _ in range(rng.randrange(0, max_degree + 1)):
            mon[rng.randrange(n)] += 1
        out[tuple(mon)] = (out.get(tuple(mon), 0) + rng.randrange(p)) % p
    return Polynomial(ring, out)


def random_homogeneous(ring, rng, degree: int, terms=4):
    """Seeded random homogeneous polynomial of the given total degree."""
    out: dict = {}
    p = ring.field.p
    n = ring.nvars
    for _ in range(terms):
        mon = [0] * n
        for _ in range(degree):
            mon[rng.randrange(n)] += 1
        out[tuple(mon)] = (out.get(tuple(mon), 0) + rng.randrange(1, p)) % p
    poly = Polynomial(ring, out)
    if poly.is_zero:
        # Retry; vanishing is a measure-zero accident of the draw.
        return random_homogeneous(ring, rng, degree, terms)
    return poly
