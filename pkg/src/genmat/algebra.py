"""Graded algebra presentations and the verification oracles.

An algebra is presented as F_p[x_1..x_m] / relations with an
N^n-multidegree attached to every variable; the relations must be
multihomogeneous and no variable may sit in degree zero.  All oracles
reduce to Groebner computations in the ambient ring:

* homogeneous systems of parameters, via graded Nakayama: S is
  module-finite over F_p[y] iff S/(y) is finite-dimensional, i.e. the
  ideal relations + (y) is zero-dimensional;
* reductions J of I, via the power criterion I^(N+1) = J * I^N,
  reported as a three-valued verdict (the bound N_max keeps it
  honest), with the fiber-ring module-finiteness test supplying
  definitive negatives;
* analytic spread, as the dimension of the subalgebra generated by the
  ideal's degree-delta piece;
* complete reductions of N^n-graded algebras through the diagonal
  subalgebra S^D = F_p[S_(1,..,1)], and of ideal tuples through
  columnwise products, with a correspondence check tying the two.

Ideals here are equigenerated and homogeneous: every generator shares
one total degree delta.  That restriction makes the degree-delta piece
the F_p-span of the generators, so minimal generation is plain linear
independence and fiber rings are subalgebras presented by
kernel_of_map.

Presentations memoize their Groebner output; the cache is append-only
derived data, so sharing presentations across threads stays safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .groebner import (
    GroebnerBasis,
    IdealSpec,
    buchberger,
    is_zero_dimensional,
    kernel_of_map,
    krull_dimension,
    normal_form,
)
from .polyring import (
    GREVLEX,
    MultiDegree,
    PolyRing,
    Polynomial,
    RingMismatchError,
    mon_one,
    multidegree,
)

MAX_DIAGONAL_GENERATORS = 64
DEFAULT_POWER_BOUND = 10


class InconclusiveError(RuntimeError):
    """A verdict that must be decisive came back inconclusive."""

    def __init__(self, verdict: "ReductionVerdict"):
        super().__init__(
            f"reduction test inconclusive after power bound {verdict.n_max}"
        )
        self.verdict = verdict


def _unit(n: int, i: int) -> MultiDegree:
    return tuple(1 if j == i else 0 for j in range(n))


class GradedAlgebraPresentation:
    """F_p[x]/relations with an N^n-multidegree per variable."""

    def __init__(self, ring: PolyRing, degrees, relations=()):
        degrees = tuple(tuple(int(x) for x in d) for d in degrees)
        if len(degrees) != ring.nvars:
            raise ValueError("need one multidegree per variable")
        if not degrees:
            raise ValueError("presentation needs at least one variable")
        n = len(degrees[0])
        if n < 1 or any(len(d) != n for d in degrees):
            raise ValueError("multidegrees must share one positive length")
        for name, d in zip(ring.names, degrees):
            if any(x < 0 for x in d):
                raise ValueError(f"variable {name} has a negative degree entry")
            if all(x == 0 for x in d):
                raise ValueError(f"variable {name} sits in degree zero")
        if isinstance(relations, IdealSpec):
            if relations.ring != ring:
                raise RingMismatchError("relations outside the ambient ring")
            relations = relations.generators
        rels = []
        for g in relations:
            if g.ring != ring:
                raise RingMismatchError("relation outside the ambient ring")
            if g.is_zero:
                continue
            if multidegree(g, degrees) is None:
                raise ValueError(f"relation {g} is not multihomogeneous")
            rels.append(g)
        self.ring = ring
        self.degrees = degrees
        self.relations = IdealSpec(ring, tuple(rels))
        self._cache: dict = {}

    @property
    def components(self) -> int:
        return len(self.degrees[0])

    @property
    def is_standard(self) -> bool:
        n = self.components
        units = {_unit(n, i) for i in range(n)}
        return all(d in units for d in self.degrees)

    def _memo(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def groebner(self) -> GroebnerBasis:
        return self._memo(("gb",), lambda: buchberger(self.relations, GREVLEX))

    def quotient_groebner(self, extra=()) -> GroebnerBasis:
        """Reduced basis of relations + extra, memoized per generator list."""
        extra = tuple(extra)
        key = ("qgb", tuple(str(g) for g in extra))
        return self._memo(
            key,
            lambda: buchberger(
                IdealSpec(self.ring, self.relations.generators + extra), GREVLEX
            ),
        )

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.groebner())

    def is_zero(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero

    def element_degree(self, f: Polynomial) -> MultiDegree | None:
        return multidegree(f, self.degrees)

    def standard_monomials(self, target: MultiDegree) -> tuple[Polynomial, ...]:
        """Monomial basis of the quotient's ``target`` graded piece.

        Requires a standard multigrading; enumerates the monomials of
        multidegree ``target`` and keeps those outside the leading-term
        staircase of the relations.
        """
        target = tuple(int(x) for x in target)
        return self._memo(("std", target), lambda: self._standard_monomials(target))

    def _standard_monomials(self, target: MultiDegree) -> tuple[Polynomial, ...]:
        if not self.is_standard:
            raise ValueError("monomial bases need a standard multigrading")
        n = self.components
        if len(target) != n:
            raise ValueError("degree vector length mismatch")
        by_component: list[list[int]] = [[] for _ in range(n)]
        for v, d in enumerate(self.degrees):
            by_component[d.index(1)].append(v)
        choices_per_component = []
        for i in range(n):
            picks = list(
                itertools.combinations_with_replacement(by_component[i], target[i])
            )
            if not picks:
                return ()
            choices_per_component.append(picks)
        lms = self.groebner().leading_monomials()
        nv = self.ring.nvars
        out = []
        for combo in itertools.product(*choices_per_component):
            e = [0] * nv
            for picks in combo:
                for v in picks:
                    e[v] += 1
            mon = tuple(e)
            if any(all(a <= b for a, b in zip(lm, mon)) for lm in lms):
                continue
            out.append(self.ring.monomial(mon))
        return tuple(out)

    def coordinates(self, f: Polynomial, target: MultiDegree) -> tuple[int, ...]:
        """Coordinate vector of f's normal form in the ``target`` piece."""
        basis = self.standard_monomials(tuple(target))
        index = {next(iter(m.terms)): i for i, m in enumerate(basis)}
        nf = self.normal_form(f)
        coords = [0] * len(basis)
        for mon, c in nf.terms.items():
            if mon not in index:
                raise ValueError(
                    f"{f} does not lie in the degree-{tuple(target)} piece"
                )
            coords[index[mon]] = c
        return tuple(coords)

    def dimension(self) -> int:
        return self._memo(("dim",), lambda: krull_dimension(self.relations))


def graded_algebra(ring: PolyRing, degrees, relations=()) -> GradedAlgebraPresentation:
    return GradedAlgebraPresentation(ring, degrees, relations)


def standard_graded_algebra(ring: PolyRing, relations=()) -> GradedAlgebraPresentation:
    """Standard N-graded presentation: every variable in degree 1."""
    return GradedAlgebraPresentation(ring, ((1,),) * ring.nvars, relations)


def _same_algebra(a: GradedAlgebraPresentation, b: GradedAlgebraPresentation) -> bool:
    return (
        a is b
        or (
            a.ring == b.ring
            and a.degrees == b.degrees
            and a.relations.generators == b.relations.generators
        )
    )


def algebra_dimension(algebra: GradedAlgebraPresentation) -> int:
    """Krull dimension of the presented quotient."""
    return algebra.dimension()


def is_hsop(algebra: GradedAlgebraPresentation, elements) -> bool:
    """Is ``elements`` a homogeneous system of parameters?

    The count must equal the algebra's dimension and every element must
    be multihomogeneous of positive degree; then S is module-finite
    over F_p[elements] iff the quotient by them is zero-dimensional.
    """
    elements = tuple(elements)
    for f in elements:
        if f.ring != algebra.ring:
            raise RingMismatchError("element outside the ambient ring")
        d = algebra.element_degree(f)
        if f.is_zero or d is None or sum(d) <= 0:
            raise ValueError(f"{f} is not homogeneous of positive degree")
    want = algebra.dimension()
    if len(elements) != want:
        raise ValueError(
            f"system of parameters for this algebra needs {want} elements, "
            f"got {len(elements)}"
        )
    return is_zero_dimensional(algebra.quotient_groebner(elements))


def is_noether_normalization(algebra: GradedAlgebraPresentation, elements) -> bool:
    """Degree-one homogeneous system of parameters of a standard graded algebra."""
    if algebra.components != 1 or not algebra.is_standard:
        raise ValueError("Noether normalizations live in standard N-graded algebras")
    elements = tuple(elements)
    for f in elements:
        if f.ring != algebra.ring or algebra.element_degree(f) != (1,):
            raise ValueError(f"{f} is not linear in the ambient grading")
    return is_hsop(algebra, elements)


@dataclass(frozen=True)
class EquigeneratedIdeal:
    """Homogeneous ideal whose generators share one total degree."""

    algebra: GradedAlgebraPresentation
    generators: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if self.algebra.components != 1 or not self.algebra.is_standard:
            raise ValueError("equigenerated ideals live in standard N-graded algebras")
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("ideal needs at least one generator")
        degs = set()
        for g in gens:
            if g.ring != self.algebra.ring:
                raise RingMismatchError("generator outside the ambient ring")
            d = self.algebra.element_degree(g)
            if g.is_zero or d is None:
                raise ValueError(f"generator {g} is not homogeneous")
            degs.add(d[0])
        if len(degs) != 1:
            raise ValueError(f"generators mix degrees {sorted(degs)}")
        if min(degs) < 1:
            raise ValueError("generators must have positive degree")
        object.__setattr__(self, "generators", gens)

    @property
    def degree(self) -> int:
        return self.algebra.element_degree(self.generators[0])[0]

    def key(self) -> tuple:
        return tuple(str(g) for g in self.generators)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.algebra.quotient_groebner(self.generators)).is_zero

    def __eq__(self, other):
        if not isinstance(other, EquigeneratedIdeal):
            return NotImplemented
        return _same_algebra(self.algebra, other.algebra) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)


def equigenerated_ideal(algebra, generators) -> EquigeneratedIdeal:
    return EquigeneratedIdeal(algebra, tuple(generators))


def _dedupe(polys) -> tuple[Polynomial, ...]:
    seen = set()
    out = []
    for g in polys:
        k = frozenset(g.terms.items())
        if k not in seen and not g.is_zero:
            seen.add(k)
            out.append(g)
    return tuple(out)


def ideal_product(a: EquigeneratedIdeal, b: EquigeneratedIdeal) -> EquigeneratedIdeal:
    if not _same_algebra(a.algebra, b.algebra):
        raise ValueError("ideal product across different algebras")
    gens = _dedupe(f * g for f in a.generators for g in b.generators)
    return EquigeneratedIdeal(a.algebra, gens)


def ideal_power(a: EquigeneratedIdeal, n: int) -> EquigeneratedIdeal:
    if n < 1:
        raise ValueError("ideal powers start at 1")
    key = ("pow", a.key(), n)
    def compute():
        gens = _dedupe(
            _product_of(a, picks) for picks in
            itertools.combinations_with_replacement(range(len(a.generators)), n)
        )
        return EquigeneratedIdeal(a.algebra, gens)
    return a.algebra._memo(key, compute)


def _product_of(a: EquigeneratedIdeal, picks) -> Polynomial:
    out = a.algebra.ring.one()
    for i in picks:
        out = out * a.generators[i]
    return out


@dataclass(frozen=True)
class ReductionVerdict:
    """Outcome of a reduction test: yes (with the least power), no, or
    inconclusive up to the power bound.  ``witness`` is a transcript of
    the checks that produced the verdict."""

    status: str
    power: int | None = None
    n_max: int | None = None
    witness: tuple = ()

    @property
    def is_yes(self) -> bool:
        return self.status == "yes"

    @property
    def is_no(self) -> bool:
        return self.status == "no"

    @property
    def is_inconclusive(self) -> bool:
        return self.status == "inconclusive"

    def describe(self) -> str:
        if self.is_yes:
            return f"yes (power {self.power})"
        if self.is_no:
            return "no"
        return f"inconclusive (power bound {self.n_max})"


def _check_contained(J: EquigeneratedIdeal, I: EquigeneratedIdeal) -> None:
    gb = I.algebra.quotient_groebner(I.generators)
    for idx, g in enumerate(J.generators):
        if not normal_form(g, gb).is_zero:
            raise ValueError(
                f"generator {idx} of the candidate ({g}) does not lie in the ideal"
            )


def _fresh_names(taken, count: int, prefix: str = "T") -> list[str]:
    for pre in (prefix, prefix * 2, f"{prefix}v"):
        names = [f"{pre}{i + 1}" for i in range(count)]
        if not set(names) & set(taken):
            return names
    raise ValueError("could not pick fresh variable names")


def fiber_algebra(I: EquigeneratedIdeal):
    """Presentation of the subalgebra generated by I's degree-delta piece.

    Returns (presentation, T-variable names); T_i maps to the i-th
    generator.  For an equigenerated ideal this subalgebra is the fiber
    ring of I, so its dimension is the analytic spread.
    """
    def compute():
        names = _fresh_names(I.algebra.ring.names, len(I.generators))
        ker = kernel_of_map(
            list(I.generators), relations=I.algebra.relations, names=names
        )
        pres = standard_graded_algebra(ker.ring, ker)
        return pres, tuple(names)

    return I.algebra._memo(("fiber", I.key()), compute)


def fiber_image(I: EquigeneratedIdeal, f: Polynomial) -> Polynomial:
    """Image of a degree-delta element of I as a linear form in the fiber."""
    pres, _ = fiber_algebra(I)
    target = (I.degree,)
    rows = [I.algebra.coordinates(g, target) for g in I.generators]
    coords = linalg.solve_coords(rows, I.algebra.coordinates(f, target), I.algebra.ring.field.p)
    if coords is None:
        raise ValueError(f"{f} is not an F_p-combination of the ideal's generators")
    out = pres.ring.zero()
    for c, name in zip(coords, pres.ring.names):
        if c:
            out = out + pres.ring.var(name).scale_monomial(mon_one(pres.ring.nvars), c)
    return out


def analytic_spread(I: EquigeneratedIdeal) -> int:
    """Dimension of the fiber ring of I."""
    def compute():
        pres, _ = fiber_algebra(I)
        return pres.dimension()

    return I.algebra._memo(("spread", I.key()), compute)


def fiber_reduction_test(J: EquigeneratedIdeal, I: EquigeneratedIdeal) -> bool | None:
    """Module-finiteness of the fiber of I over the image of J.

    Decisive for equigenerated J ⊆ I of the same degree: True iff J is
    a reduction of I.  Returns None when the degrees differ and the
    test does not apply.
    """
    if J.degree != I.degree:
        return None
    pres, _ = fiber_algebra(I)
    forms = [fiber_image(I, g) for g in J.generators]
    gens = pres.relations.generators + tuple(f for f in forms if not f.is_zero)
    return is_zero_dimensional(IdealSpec(pres.ring, gens))


def is_reduction(
    J: EquigeneratedIdeal,
    I: EquigeneratedIdeal,
    n_max: int = DEFAULT_POWER_BOUND,
    use_fiber: bool = True,
) -> ReductionVerdict:
    """Power-criterion reduction test with a bounded exponent.

    Checks I^(N+1) = J * I^N for N = 1..n_max; the reverse inclusion
    is automatic once J ⊆ I (verified first, ValueError otherwise), so
    only the forward containment is tested.  The fiber test settles
    definite negatives, and a negative there makes every power check
    futile, so it runs as a screen before the loop; a positive still
    has to exhibit a concrete power, or the verdict stays inconclusive
    at the bound.
    """
    if not _same_algebra(J.algebra, I.algebra):
        raise ValueError("candidate and ideal live in different algebras")
    if n_max < 1:
        raise ValueError("power bound must be at least 1")
    _check_contained(J, I)
    transcript = []
    algebra = J.algebra
    if use_fiber:
        finite = fiber_reduction_test(J, I)
        if finite is not None:
            transcript.append(("fiber", finite))
        if finite is False:
            return ReductionVerdict("no", n_max=n_max, witness=tuple(transcript))
    for n in range(1, n_max + 1):
        big = ideal_power(I, n + 1)
        rhs = ideal_product(J, ideal_power(I, n))
        gb = algebra.quotient_groebner(rhs.generators)
        failing = None
        for g in big.generators:
            if not normal_form(g, gb).is_zero:
                failing = g
                break
        transcript.append(("power", n, failing is None, None if failing is None else str(failing)))
        if failing is None:
            return ReductionVerdict("yes", power=n, n_max=n_max, witness=tuple(transcript))
    return ReductionVerdict("inconclusive", n_max=n_max, witness=tuple(transcript))


def is_minimal_reduction(
    J: EquigeneratedIdeal,
    I: EquigeneratedIdeal,
    n_max: int = DEFAULT_POWER_BOUND,
) -> bool:
    """Reduction + minimal generation + generator count = analytic spread.

    An inconclusive reduction verdict raises InconclusiveError rather
    than passing for false.
    """
    if not _same_algebra(J.algebra, I.algebra):
        raise ValueError("candidate and ideal live in different algebras")
    if len(J.generators) != analytic_spread(I):
        return False
    target = (J.degree,)
    rows = [J.algebra.coordinates(g, target) for g in J.generators]
    if not linalg.independent(rows, J.algebra.ring.field.p):
        return False
    verdict = is_reduction(J, I, n_max=n_max)
    if verdict.is_inconclusive:
        raise InconclusiveError(verdict)
    return verdict.is_yes


@dataclass(frozen=True)
class DiagonalSubring:
    """F_p[S_(1,..,1)] inside a standard N^n-graded S, with its own
    standard N-graded presentation on fresh variables."""

    parent: GradedAlgebraPresentation
    generators: tuple[Polynomial, ...]
    presentation: GradedAlgebraPresentation

    def dimension(self) -> int:
        return self.presentation.dimension()

    def embed(self, f: Polynomial) -> Polynomial:
        """Rewrite a multidegree-(1,..,1) element as a linear form."""
        ones = (1,) * self.parent.components
        coords = self.parent.coordinates(f, ones)
        ring = self.presentation.ring
        out = ring.zero()
        for c, name in zip(coords, ring.names):
            if c:
                out = out + ring.var(name).scale_monomial(mon_one(ring.nvars), c)
        return out


def diagonal_subring(algebra: GradedAlgebraPresentation) -> DiagonalSubring:
    """Diagonal subalgebra generated by the (1,..,1) graded piece.

    The monomial basis of that piece becomes the generator list (capped
    at MAX_DIAGONAL_GENERATORS) and the presentation ideal comes from
    kernel_of_map.
    """
    def compute():
        if not algebra.is_standard:
            raise ValueError("diagonal subrings need a standard multigrading")
        ones = (1,) * algebra.components
        mons = algebra.standard_monomials(ones)
        if not mons:
            raise ValueError("the (1,..,1) graded piece is zero")
        if len(mons) > MAX_DIAGONAL_GENERATORS:
            raise ValueError(
                f"diagonal piece has {len(mons)} monomials, over the cap of "
                f"{MAX_DIAGONAL_GENERATORS}"
            )
        names = _fresh_names(algebra.ring.names, len(mons), prefix="u")
        ker = kernel_of_map(list(mons), relations=algebra.relations, names=names)
        pres = standard_graded_algebra(ker.ring, ker)
        return DiagonalSubring(algebra, mons, pres)

    return algebra._memo(("diag",), compute)


def _as_matrix(rows) -> tuple[tuple[Polynomial, ...], ...]:
    mat = tuple(tuple(row) for row in rows)
    if not mat or not mat[0]:
        raise ValueError("empty matrix")
    width = len(mat[0])
    if any(len(row) != width for row in mat):
        raise ValueError("ragged matrix")
    return mat


def is_complete_reduction_ring(algebra: GradedAlgebraPresentation, rows) -> bool:
    """Complete reduction test for a standard N^n-graded algebra.

    ``rows`` is an n x r matrix whose row i holds multidegree-e_i
    elements, with r equal to the diagonal dimension.  The columnwise
    products X_j land in the (1,..,1) piece, and the verdict is whether
    the diagonal subalgebra is module-finite over F_p[X_1..X_r].
    """
    mat = _as_matrix(rows)
    n = algebra.components
    if len(mat) != n:
        raise ValueError(f"matrix needs {n} rows, one per grading component")
    for i, row in enumerate(mat):
        for j, entry in enumerate(row):
            if entry.ring != algebra.ring:
                raise RingMismatchError(f"entry ({i},{j}) outside the ambient ring")
            if algebra.element_degree(entry) != _unit(n, i):
                raise ValueError(
                    f"entry ({i},{j}) is not homogeneous of the component-{i} "
                    "unit degree"
                )
    diag = diagonal_subring(algebra)
    r = len(mat[0])
    want = diag.dimension()
    if r != want:
        raise ValueError(
            f"complete reduction of this algebra needs {want} columns, got {r}"
        )
    forms = []
    for j in range(r):
        prod = algebra.ring.one()
        for i in range(n):
            prod = prod * mat[i][j]
        forms.append(diag.embed(prod))
    gens = diag.presentation.relations.generators + tuple(
        f for f in forms if not f.is_zero
    )
    return is_zero_dimensional(IdealSpec(diag.presentation.ring, gens))


def _product_ideal(ideals) -> EquigeneratedIdeal:
    out = ideals[0]
    for nxt in ideals[1:]:
        out = ideal_product(out, nxt)
    return out


def is_complete_reduction_ideals(
    ideals,
    rows,
    n_max: int = DEFAULT_POWER_BOUND,
) -> ReductionVerdict:
    """Complete reduction test for a tuple of equigenerated ideals.

    Row i of the matrix holds degree-delta_i elements of I_i; the
    columnwise products b_j must then be a reduction of the product
    ideal I_1 * .. * I_n, tested with the power criterion.  The column
    count must equal the product's analytic spread.
    """
    ideals = tuple(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    algebra = ideals[0].algebra
    for I in ideals:
        if not _same_algebra(I.algebra, algebra):
            raise ValueError("ideals live in different algebras")
    mat = _as_matrix(rows)
    if len(mat) != len(ideals):
        raise ValueError(f"matrix needs {len(ideals)} rows, one per ideal")
    for i, (row, I) in enumerate(zip(mat, ideals)):
        for j, entry in enumerate(row):
            if entry.ring != algebra.ring:
                raise RingMismatchError(f"entry ({i},{j}) outside the ambient ring")
            if algebra.element_degree(entry) != (I.degree,):
                raise ValueError(
                    f"entry ({i},{j}) is not homogeneous of degree {I.degree}"
                )
            if not I.contains(entry):
                raise ValueError(f"entry ({i},{j}) does not lie in ideal {i}")
    product = _product_ideal(ideals)
    r = len(mat[0])
    want = analytic_spread(product)
    if r != want:
        raise ValueError(
            f"complete reduction of this ideal tuple needs {want} columns, got {r}"
        )
    columns = []
    for j in range(r):
        prod = algebra.ring.one()
        for i in range(len(ideals)):
            prod = prod * mat[i][j]
        columns.append(prod)
    J = EquigeneratedIdeal(algebra, _dedupe(columns))
    return is_reduction(J, product, n_max=n_max)


def multigraded_fiber_algebra(ideals):
    """Fiber presentation of an ideal tuple, graded by source ideal.

    Builds the subalgebra of R[t_1..t_n] generated by g * t_i for each
    generator g of I_i; the t-markers keep the N^n-grading faithful, so
    the presentation ideal is multihomogeneous with the block of I_i's
    T-variables in degree e_i.  Returns (presentation, name blocks).
    """
    ideals = tuple(ideals)
    algebra = ideals[0].algebra
    key = ("mfiber", tuple(I.key() for I in ideals))

    def compute():
        n = len(ideals)
        ring = algebra.ring
        markers = _fresh_names(ring.names, n, prefix="t")
        big = PolyRing(ring.field, ring.names + tuple(markers))

        def lift(f: Polynomial) -> Polynomial:
            terms = {}
            for mon, c in f.terms.items():
                terms[mon + (0,) * n] = c
            return Polynomial._raw(big, terms)

        targets = []
        names = []
        blocks = []
        for i, I in enumerate(ideals):
            t = big.var(markers[i])
            block = []
            for s, g in enumerate(I.generators):
                targets.append(lift(g) * t)
                block.append(f"T{i + 1}_{s + 1}")
            names.extend(block)
            blocks.append(tuple(block))
        relations = IdealSpec(big, tuple(lift(g) for g in algebra.relations.generators))
        ker = kernel_of_map(targets, relations=relations, names=names)
        degrees = []
        for i, I in enumerate(ideals):
            degrees.extend([_unit(n, i)] * len(I.generators))
        pres = GradedAlgebraPresentation(ker.ring, tuple(degrees), ker)
        return pres, tuple(blocks)

    return algebra._memo(key, compute)


def lemma_correspondence_check(
    ideals,
    rows,
    n_max: int = DEFAULT_POWER_BOUND,
) -> bool | None:
    """Do the ideal-level and ring-level verdicts agree?

    The matrix is judged once as a candidate complete reduction of the
    ideal tuple and once, after mapping entries into the multigraded
    fiber algebra, as a candidate complete reduction of that algebra.
    Returns True/False for agreement, or None when the ideal side is
    inconclusive and nothing can be compared.
    """
    ideals = tuple(ideals)
    ideal_verdict = is_complete_reduction_ideals(ideals, rows, n_max=n_max)
    if ideal_verdict.is_inconclusive:
        return None
    mat = _as_matrix(rows)
    pres, blocks = multigraded_fiber_algebra(ideals)
    p = pres.ring.field.p
    lifted_rows = []
    for i, (row, I) in enumerate(zip(mat, ideals)):
        target = (I.degree,)
        gen_rows = [I.algebra.coordinates(g, target) for g in I.generators]
        lifted = []
        for entry in row:
            coords = linalg.solve_coords(
                gen_rows, I.algebra.coordinates(entry, target), p
            )
            if coords is None:
                raise ValueError("matrix entry escapes the span of its ideal's generators")
            form = pres.ring.zero()
            for c, name in zip(coords, blocks[i]):
                if c:
                    form = form + pres.ring.var(name).scale_monomial(
                        mon_one(pres.ring.nvars), c
                    )
            lifted.append(form)
        lifted_rows.append(tuple(lifted))
    ring_verdict = is_complete_reduction_ring(pres, tuple(lifted_rows))
    return ring_verdict == ideal_verdict.is_yes
