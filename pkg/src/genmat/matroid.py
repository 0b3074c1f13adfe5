"""Generic matroids: basis oracles, handles, and randomized exchange.

An instance packages a ground description, a deterministic basis
oracle, and a family of named handles.  Each handle plays the role of a
target matroid: it knows which ground elements its carrier holds and
how to sample random candidates from it.  The exchange axiom is
realized by rejection sampling: draw a candidate from the handle,
splice it into the basis in place of the removed element, and let the
basis oracle decide.  Over a large prime field the bad candidates form
a proper closed subset, so acceptance takes O(1) expected attempts and
the bad set itself is never computed.

Failure stays loud.  Exhausting the retry budget raises
ExchangeExhausted carrying every rejected sample, and an inconclusive
underlying verdict propagates as an exception instead of posing as a
rejection.

Ground elements may be anything hashable with a readable str(); the
concrete instances use polynomials, coefficient tuples, and plain
labels.  A basis is an ordered tuple whose order is bookkeeping only.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping, Sequence

Element = Hashable

TOPOLOGIES = (
    "discrete",
    "subspace-arrangement-complement",
    "zariski-complement",
    "ideal-union-complement",
)

DEFAULT_MAX_TRIES = 64
MAX_AXIOM_GROUND = 20
_SEED_BITS = 32


def _draw_seed() -> int:
    return random.SystemRandom().getrandbits(_SEED_BITS)


@dataclass(frozen=True)
class MatroidHandle:
    """Named target matroid: a membership test plus a candidate sampler.

    ``contains`` answers whether a ground element lies in the handle's
    carrier; ``sample`` draws one candidate using only the supplied
    RNG, so equal seeds give equal draws.  ``elements`` enumerates the
    carrier when it is finite, enabling exhaustive exchange.
    """

    name: str
    contains: Callable[[Element], bool]
    sample: Callable[[random.Random], Element]
    description: str = ""
    elements: tuple[Element, ...] | None = None


class GenericMatroidInstance:
    """Immutable bundle of ground data, basis oracle, and handles.

    The oracle must be deterministic; verdicts are cached per element
    set.  Candidate tuples with repeats never reach the oracle: a basis
    has no duplicate elements.  ``traps`` holds named known-bad
    candidates that regression tests force-inject to confirm rejection.
    ``topology`` is carried as metadata only.
    """

    def __init__(
        self,
        name: str,
        ground: str,
        rank: int,
        topology: str,
        oracle: Callable[[tuple], bool],
        handles: Mapping[str, MatroidHandle],
        traps: Mapping[str, Element] | None = None,
        oracle_name: str = "basis-oracle",
    ):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        if topology not in TOPOLOGIES:
            raise ValueError(f"unknown topology {topology!r}")
        if not handles:
            raise ValueError("instance needs at least one handle")
        self.name = name
        self.ground = ground
        self.rank = int(rank)
        self.topology = topology
        self.handles = dict(handles)
        self.traps = dict(traps or {})
        self.oracle_name = oracle_name
        self._oracle = oracle
        self._cache: dict[frozenset, bool] = {}

    def is_basis(self, elements: Sequence[Element]) -> bool:
        tup = tuple(elements)
        if len(set(tup)) != len(tup):
            return False
        key = frozenset(tup)
        hit = self._cache.get(key)
        if hit is None:
            hit = bool(self._oracle(tup))
            self._cache[key] = hit
        return hit

    def verify(self, elements: Sequence[Element]) -> bool:
        """Uncached oracle call, for independent re-verification."""
        tup = tuple(elements)
        return len(set(tup)) == len(tup) and bool(self._oracle(tup))

    def handle(self, ref) -> MatroidHandle:
        if isinstance(ref, MatroidHandle):
            return ref
        try:
            return self.handles[ref]
        except KeyError:
            raise ValueError(
                f"unknown handle {ref!r}; available: {sorted(self.handles)}"
            ) from None

    def __repr__(self):
        return (
            f"GenericMatroidInstance({self.name!r}, rank={self.rank}, "
            f"handles={sorted(self.handles)})"
        )


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of the exhaustive axiom check.

    On failure ``violation`` is (B, B', b): the pair of bases and the
    removed element that admits no replacement; b is None when the
    failure is structural (empty family, containment between bases).
    """

    ok: bool
    reason: str = "ok"
    violation: tuple | None = None


def check_matroid_axioms(ground: Iterable, bases: Iterable) -> AxiomCheck:
    """Exhaustively test a finite family: nonempty, antichain, exchange.

    Classical matroid axioms, checked by brute force in the caller's
    order, so the first violation reported is deterministic in the
    input.  Ground sets above 20 elements are refused.
    """
    ground_set = set(ground)
    if len(ground_set) > MAX_AXIOM_GROUND:
        raise ValueError(
            f"exhaustive check limited to {MAX_AXIOM_GROUND} ground elements"
        )
    family: list[tuple] = []
    members: set[frozenset] = set()
    for b in bases:
        tup = tuple(b)
        fs = frozenset(tup)
        if len(fs) != len(tup):
            raise ValueError(f"duplicate elements inside basis {tuple(map(str, tup))}")
        if not fs <= ground_set:
            raise ValueError(f"basis {tuple(map(str, tup))} leaves the ground set")
        if fs not in members:
            members.add(fs)
            family.append(tup)
    if not family:
        return AxiomCheck(False, "empty basis family")
    for B in family:
        for Bp in family:
            if frozenset(B) < frozenset(Bp):
                return AxiomCheck(False, "containment between bases", (B, Bp, None))
    for B in family:
        rest = frozenset(B)
        for Bp in family:
            for b in B:
                if not any((rest - {b}) | {c} in members for c in Bp):
                    return AxiomCheck(False, "exchange fails", (B, Bp, b))
    return AxiomCheck(True)


@dataclass(frozen=True)
class ExchangeCertificate:
    """Record of one successful replacement.

    The resulting basis has been re-verified by an uncached oracle
    call; ``transcript`` names the verifying oracle, ``rejected`` lists
    the candidates turned down on the way.
    """

    instance: str
    handle: str
    removed: Element
    inserted: Element
    attempts: int
    seed: int
    transcript: str
    basis_before: tuple
    basis_after: tuple
    rejected: tuple = ()


class ExchangeExhausted(RuntimeError):
    """Retry budget spent without an accepted replacement.

    Carries every rejected sample, the seed, and — when raised from a
    path — the certificates of the steps that did succeed.
    """

    def __init__(self, message, *, rejected, attempts, seed, partial_path=()):
        super().__init__(message)
        self.rejected = tuple(rejected)
        self.attempts = int(attempts)
        self.seed = seed
        self.partial_path = tuple(partial_path)


def exchange_step(
    inst: GenericMatroidInstance,
    basis: Sequence[Element],
    removed: Element,
    handle,
    seed: int | None = None,
    max_tries: int = DEFAULT_MAX_TRIES,
    forced: Sequence[Element] = (),
    exhaustive: bool = False,
) -> ExchangeCertificate:
    """Replace one basis element by a candidate from the handle.

    Candidates are tried in order: the ``forced`` list first (each try
    counts against the budget), then random samples, or the handle's
    full enumeration when ``exhaustive`` is set.  A candidate outside
    the handle's carrier or rejected by the basis oracle is recorded
    and the next one drawn.  Deterministic given the seed; a fresh
    seed is generated (and recorded in the certificate) when none is
    passed.
    """
    handle = inst.handle(handle)
    basis = tuple(basis)
    if removed not in basis:
        raise ValueError("element to remove is not in the basis")
    if not inst.is_basis(basis):
        raise ValueError("starting set fails the basis oracle")
    if max_tries < 1:
        raise ValueError("max_tries must be at least 1")
    if seed is None:
        seed = _draw_seed()
    rng = random.Random(seed)
    position = basis.index(removed)

    def candidates():
        yield from forced
        if exhaustive:
            if handle.elements is None:
                raise ValueError(f"handle {handle.name!r} has no finite enumeration")
            yield from handle.elements
        else:
            while True:
                yield handle.sample(rng)

    rejected = []
    attempts = 0
    for cand in candidates():
        attempts += 1
        new = basis[:position] + (cand,) + basis[position + 1 :]
        if handle.contains(cand) and inst.is_basis(new):
            if not inst.verify(new):
                raise RuntimeError("oracle accepted a set and then rejected it")
            return ExchangeCertificate(
                instance=inst.name,
                handle=handle.name,
                removed=removed,
                inserted=cand,
                attempts=attempts,
                seed=seed,
                transcript=inst.oracle_name,
                basis_before=basis,
                basis_after=new,
                rejected=tuple(rejected),
            )
        rejected.append(cand)
        if not exhaustive and attempts >= max_tries:
            break
    raise ExchangeExhausted(
        f"no replacement for {removed} from handle {handle.name!r} "
        f"in {attempts} tries",
        rejected=rejected,
        attempts=attempts,
        seed=seed,
    )


@dataclass(frozen=True)
class ExchangePath:
    """Chain of exchange steps carrying a basis into a handle."""

    instance: str
    handle: str
    start: tuple
    final: tuple
    seed: int
    steps: tuple[ExchangeCertificate, ...]


def exchange_path(
    inst: GenericMatroidInstance,
    basis: Sequence[Element],
    handle,
    seed: int | None = None,
    max_tries: int = DEFAULT_MAX_TRIES,
) -> ExchangePath:
    """Exchange elements one at a time until the basis sits in the handle.

    Elements already inside the carrier are kept, so the path has at
    most one step per basis element.  Each step gets its own seed drawn
    from the path RNG.  A failed step raises ExchangeExhausted with the
    partial path attached.
    """
    handle = inst.handle(handle)
    basis = tuple(basis)
    if not inst.is_basis(basis):
        raise ValueError("starting set fails the basis oracle")
    if seed is None:
        seed = _draw_seed()
    master = random.Random(seed)
    steps: list[ExchangeCertificate] = []
    current = basis
    while True:
        stale = next((e for e in current if not handle.contains(e)), None)
        if stale is None:
            break
        if len(steps) >= len(basis):
            raise RuntimeError("exchange path exceeded the basis size")
        step_seed = master.getrandbits(_SEED_BITS)
        try:
            cert = exchange_step(
                inst, current, stale, handle, seed=step_seed, max_tries=max_tries
            )
        except ExchangeExhausted as stuck:
            raise ExchangeExhausted(
                f"path stalled after {len(steps)} steps: {stuck}",
                rejected=stuck.rejected,
                attempts=stuck.attempts,
                seed=seed,
                partial_path=steps,
            ) from stuck
        steps.append(cert)
        current = cert.basis_after
    if not inst.verify(current):
        raise RuntimeError("path ended on a set the oracle rejects")
    return ExchangePath(
        instance=inst.name,
        handle=handle.name,
        start=basis,
        final=current,
        seed=seed,
        steps=tuple(steps),
    )


def check_equicardinality(inst: GenericMatroidInstance, bases: Iterable) -> bool:
    """All sampled bases share one cardinality.  Needs at least two."""
    counted = [tuple(b) for b in bases]
    if len(counted) < 2:
        raise ValueError("need at least two bases")
    return len({len(b) for b in counted}) == 1


def check_generic_exchange_statistical(
    inst: GenericMatroidInstance,
    basis: Sequence[Element],
    removed: Element,
    handle,
    trials: int,
    seed: int | None = None,
) -> float:
    """Fraction of handle samples that complete the punctured basis.

    One draw per trial, no retries; the rate estimates how much of the
    carrier the bad set eats.  Deterministic given the seed.
    """
    handle = inst.handle(handle)
    basis = tuple(basis)
    if removed not in basis:
        raise ValueError("element to remove is not in the basis")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if seed is None:
        seed = _draw_seed()
    rng = random.Random(seed)
    position = basis.index(removed)
    successes = 0
    for _ in range(trials):
        cand = handle.sample(rng)
        new = basis[:position] + (cand,) + basis[position + 1 :]
        if inst.is_basis(new):
            successes += 1
    return successes / trials
