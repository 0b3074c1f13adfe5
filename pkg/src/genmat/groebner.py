"""Groebner bases over F_p and the decision procedures built on them.

Buchberger's algorithm with the normal pair-selection strategy
(smallest lcm degree first) and both classical pair criteria: coprime
leading monomials are skipped outright, and a pair is dropped when a
third leading monomial divides its lcm and both companion pairs have
already left the queue.  Output is the reduced basis (monic, no term
of any element divisible by another leading monomial), which is unique
per ideal and order, so results are canonical.

Everything downstream is a consequence of normal forms: membership,
ideal equality, elimination through a block order, kernels of algebra
maps via T_i - f_i, and Krull dimension read off the leading-term
staircase.  The dimension search is exhaustive over variable subsets
and capped at MAX_DIMENSION_VARS variables.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from .polyring import (
    GREVLEX,
    MonomialOrder,
    PolyRing,
    Polynomial,
    RingMismatchError,
    elimination_order,
    mon_div,
    mon_divides,
    mon_lcm,
    mon_mul,
)

# Subset search over variables is exponential; keep it honest but bounded.
MAX_DIMENSION_VARS = 10


@dataclass(frozen=True)
class IdealSpec:
    """An ideal given by generators in a fixed ambient ring."""

    ring: PolyRing
    generators: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        kept = []
        for g in self.generators:
            if not isinstance(g, Polynomial):
                raise ValueError("generators must be polynomials")
            if g.ring != self.ring:
                raise RingMismatchError("generator outside the ambient ring")
            if not g.is_zero:
                kept.append(g)
        object.__setattr__(self, "generators", tuple(kept))


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis together with its ring and order."""

    ring: PolyRing
    order: MonomialOrder
    basis: tuple[Polynomial, ...]

    def leading_monomials(self) -> tuple:
        return tuple(g.leading_monomial(self.order) for g in self.basis)

    def contains_one(self) -> bool:
        return any(g.degree() == 0 for g in self.basis)


def spolynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """S-polynomial: cancel the leading terms against their lcm."""
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mon_lcm(mf, mg)
    field = f.ring.field
    return f.scale_monomial(mon_div(lcm, mf), field.inv(cf)) - g.scale_monomial(
        mon_div(lcm, mg), field.inv(cg)
    )


def normal_form(f: Polynomial, basis, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of f under full division by ``basis``.

    No term of the result is divisible by any basis leading monomial,
    which makes the map idempotent and, for a Groebner basis, a
    canonical representative of f modulo the ideal.
    """
    if isinstance(basis, GroebnerBasis):
        order = basis.order
        basis = basis.basis
    divisors = [
        (g.leading_monomial(order), f.ring.field.inv(g.leading_term(order)[1]), g)
        for g in basis
        if not g.is_zero
    ]
    p = f.ring.field.p
    work = dict(f.terms)
    remainder: dict = {}
    key = order.key
    while work:
        mon = max(work, key=key)
        coeff = work.pop(mon)
        hit = None
        for lm, cinv, g in divisors:
            if mon_divides(lm, mon):
                hit = (lm, cinv, g)
                break
        if hit is None:
            remainder[mon] = coeff
            continue
        lm, cinv, g = hit
        shift = mon_div(mon, lm)
        scale = coeff * cinv % p
        for m2, c2 in g.terms.items():
            if m2 == lm:
                continue
            m = mon_mul(m2, shift)
            s = (work.get(m, 0) - scale * c2) % p
            if s:
                work[m] = s
            elif m in work:
                del work[m]
    return Polynomial._raw(f.ring, remainder)


def _interreduce(polys: list[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    # Minimal set first: drop anything whose LM another LM divides.
    polys = [g.monic(order) for g in polys if not g.is_zero]
    lms = [g.leading_monomial(order) for g in polys]
    keep: list[int] = []
    for i, lm in enumerate(lms):
        redundant = False
        for j, other in enumerate(lms):
            if i == j:
                continue
            if mon_divides(other, lm) and (other != lm or j < i):
                redundant = True
                break
        if redundant:
            continue
        keep.append(i)
    minimal = [polys[i] for i in keep]
    # Tail-reduce each element against the others until stable.
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            rest = minimal[:i] + minimal[i + 1 :]
            r = normal_form(minimal[i], rest, order).monic(order)
            if r.terms != minimal[i].terms:
                minimal[i] = r
                changed = True
    minimal.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return tuple(minimal)


def buchberger(ideal: IdealSpec, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` under ``order``."""
    basis: list[Polynomial] = []
    lms: list = []
    seen = set()
    for g in ideal.generators:
        g = g.monic(order)
        k = frozenset(g.terms.items())
        if k not in seen:
            seen.add(k)
            basis.append(g)
            lms.append(g.leading_monomial(order))
    if not basis:
        return GroebnerBasis(ideal.ring, order, ())

    pending: set[tuple[int, int]] = set()
    heap: list = []

    def push(i: int, j: int) -> None:
        pair = (i, j) if i < j else (j, i)
        pending.add(pair)
        lcm = mon_lcm(lms[pair[0]], lms[pair[1]])
        heapq.heappush(heap, (sum(lcm), pair))

    for i, j in itertools.combinations(range(len(basis)), 2):
        push(i, j)

    while heap:
        _, pair = heapq.heappop(heap)
        if pair not in pending:
            continue
        pending.discard(pair)
        i, j = pair
        lcm = mon_lcm(lms[i], lms[j])
        if lcm == mon_mul(lms[i], lms[j]):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if mon_divides(lms[k], lcm):
                pik = (i, k) if i < k else (k, i)
                pjk = (j, k) if j < k else (k, j)
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        r = normal_form(spolynomial(basis[i], basis[j], order), basis, order)
        if r.is_zero:
            continue
        r = r.monic(order)
        basis.append(r)
        lms.append(r.leading_monomial(order))
        new = len(basis) - 1
        for k in range(new):
            push(k, new)

    return GroebnerBasis(ideal.ring, order, _interreduce(basis, order))


def verify_groebner(gb: GroebnerBasis) -> bool:
    """Exhaustive check: every S-polynomial reduces to zero."""
    for f, g in itertools.combinations(gb.basis, 2):
        if not normal_form(spolynomial(f, g, gb.order), gb).is_zero:
            return False
    return True


def _as_gb(ideal, order: MonomialOrder) -> GroebnerBasis:
    if isinstance(ideal, GroebnerBasis):
        return ideal
    return buchberger(ideal, order)


def ideal_membership(f: Polynomial, ideal, order: MonomialOrder = GREVLEX) -> bool:
    """Is f in the ideal?  Accepts an IdealSpec or a precomputed basis."""
    return normal_form(f, _as_gb(ideal, order)).is_zero


def ideal_equal(a, b, order: MonomialOrder = GREVLEX) -> bool:
    """Mutual containment of two ideals in one ambient ring."""
    ga = _as_gb(a, order)
    gb = _as_gb(b, order)
    if ga.ring != gb.ring:
        raise RingMismatchError("ideal comparison across rings")
    return all(normal_form(g, gb).is_zero for g in ga.basis) and all(
        normal_form(g, ga).is_zero for g in gb.basis
    )


def _restrict(f: Polynomial, ring: PolyRing, positions: list[int]) -> Polynomial:
    terms = {}
    for mon, c in f.terms.items():
        terms[tuple(mon[i] for i in positions)] = c
    return Polynomial._raw(ring, terms)


def _extend(f: Polynomial, ring: PolyRing, positions: list[int]) -> Polynomial:
    terms = {}
    for mon, c in f.terms.items():
        big = [0] * ring.nvars
        for pos, e in zip(positions, mon):
            big[pos] = e
        terms[tuple(big)] = c
    return Polynomial._raw(ring, terms)


def elimination_ideal(ideal: IdealSpec, keep) -> IdealSpec:
    """Generators of (ideal) intersected with F_p[keep].

    The result lives in the subring on the kept variables, in their
    original ring order.
    """
    ring = ideal.ring
    keep_set = set(keep)
    unknown = keep_set - set(ring.names)
    if unknown:
        raise ValueError(f"unknown variables {sorted(unknown)}")
    kept = [n for n in ring.names if n in keep_set]
    dropped = [n for n in ring.names if n not in keep_set]
    if not kept:
        raise ValueError("must keep at least one variable")
    if not dropped:
        return IdealSpec(ring, buchberger(ideal).basis)
    # Reorder so the eliminated block comes first, then run a block order.
    shuffled = PolyRing(ring.field, tuple(dropped + kept))
    to_shuffled = [ring.index(n) for n in shuffled.names]
    moved = [
        Polynomial._raw(shuffled, {tuple(m[i] for i in to_shuffled): c for m, c in g.terms.items()})
        for g in ideal.generators
    ]
    gb = buchberger(IdealSpec(shuffled, tuple(moved)), elimination_order(len(dropped)))
    small = PolyRing(ring.field, tuple(kept))
    nd = len(dropped)
    out = []
    for g in gb.basis:
        if all(all(e == 0 for e in mon[:nd]) for mon in g.terms):
            out.append(_restrict(g, small, list(range(nd, shuffled.nvars))))
    return IdealSpec(small, tuple(out))


def kernel_of_map(targets, relations: IdealSpec | None = None, names=None) -> IdealSpec:
    """Presentation ideal of the subalgebra generated by ``targets``.

    Given f_1..f_s in R = F_p[x]/relations, returns the kernel of
    F_p[T_1..T_s] -> R, T_i -> f_i, computed by eliminating the x
    variables from relations + (T_i - f_i).  ``names`` overrides the
    default T1..Ts variable names.
    """
    targets = list(targets)
    if not targets:
        raise ValueError("kernel of a map needs at least one target")
    src = targets[0].ring
    for f in targets:
        if f.ring != src:
            raise RingMismatchError("targets span several rings")
    if relations is not None and relations.ring != src:
        raise RingMismatchError("relations outside the source ring")
    if names is None:
        names = [f"T{i + 1}" for i in range(len(targets))]
    names = list(names)
    if len(names) != len(targets):
        raise ValueError("need one name per target")
    clash = set(names) & set(src.names)
    if clash:
        raise ValueError(f"target names collide with source variables: {sorted(clash)}")
    big = PolyRing(src.field, src.names + tuple(names))
    ns = src.nvars
    src_positions = list(range(ns))
    gens: list[Polynomial] = []
    if relations is not None:
        gens.extend(_extend(g, big, src_positions) for g in relations.generators)
    for i, f in enumerate(targets):
        t = big.var(names[i])
        gens.append(t - _extend(f, big, src_positions))
    gb = buchberger(IdealSpec(big, tuple(gens)), elimination_order(ns))
    small = PolyRing(src.field, tuple(names))
    out = []
    for g in gb.basis:
        if all(all(e == 0 for e in mon[:ns]) for mon in g.terms):
            out.append(_restrict(g, small, list(range(ns, big.nvars))))
    return IdealSpec(small, tuple(out))


def _staircase_supports(gb: GroebnerBasis) -> list[frozenset[int]]:
    return [
        frozenset(i for i, e in enumerate(mon) if e) for mon in gb.leading_monomials()
    ]


def krull_dimension(ideal, order: MonomialOrder = GREVLEX) -> int:
    """Krull dimension of ring/ideal.

    Largest number of variables meeting no leading-term support, found
    by exhaustive subset search.  Returns -1 for the unit ideal (the
    zero ring).  Ambients beyond MAX_DIMENSION_VARS variables are
    refused.
    """
    gb = _as_gb(ideal, order)
    n = gb.ring.nvars
    if n > MAX_DIMENSION_VARS:
        raise ValueError(
            f"dimension search is exhaustive and limited to {MAX_DIMENSION_VARS} "
            f"variables; this ring has {n}"
        )
    supports = _staircase_supports(gb)
    if any(not s for s in supports):
        return -1
    for size in range(n, 0, -1):
        for subset in itertools.combinations(range(n), size):
            chosen = set(subset)
            if all(not s <= chosen for s in supports):
                return size
    return 0


def is_zero_dimensional(ideal, order: MonomialOrder = GREVLEX) -> bool:
    """Does every variable occur as a pure power among the leading terms?

    Equivalent to dimension 0 for proper ideals; the unit ideal returns
    True (the zero ring is vacuously finite-dimensional over F_p).
    """
    gb = _as_gb(ideal, order)
    if gb.contains_one():
        return True
    lms = gb.leading_monomials()
    n = gb.ring.nvars
    for i in range(n):
        if not any(mon[i] > 0 and all(e == 0 for j, e in enumerate(mon) if j != i) for mon in lms):
            return False
    return True
