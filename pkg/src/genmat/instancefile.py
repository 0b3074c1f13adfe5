"""Instance documents: JSON descriptions of rings, ideals, and tasks.

A document is one JSON object:

    {"field": {"prime": 32003},
     "ring": {"vars": [{"name": "x", "multidegree": [1]}, ...],
              "relations": ["x*y - z*w"]},
     "ideals": [{"name": "m", "generators": ["x", "y", "z", "w"]}],
     "check": {...},
     "exchange": {...}}

"field" may be omitted; the prime then comes from the GENMAT_PRIME
environment variable or the library default.  "multidegree" defaults
to [1].  Polynomials are strings in the parser grammar.  Errors carry
a dotted location path into the document, e.g. "ring.relations[0]".

The "check" section supplies the inputs of one verification task:
"candidate" (list of polynomials) for nn/hsop, "ideal" plus
"candidate" for the reduction tasks, "matrix" (rows of polynomials)
for complete-reduction-ring, "ideals" plus "matrix" for
complete-reduction-ideals.  An ideal reference is either the name of
an entry under "ideals" or an inline generator list.

The "exchange" section names a kind (nn, minred,
complete-reduction-ring, complete-reduction-ideals), a "start" basis,
"handles" (spans of forms, or per-component blocks for the column
kinds), and optional "traps".  For the column kinds a basis element is
a column: a list with one entry per grading component or ideal.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Mapping

from .algebra import (
    EquigeneratedIdeal,
    GradedAlgebraPresentation,
    InconclusiveError,
    equigenerated_ideal,
    graded_algebra,
    is_complete_reduction_ideals,
    is_complete_reduction_ring,
    is_hsop,
    is_minimal_reduction,
    is_noether_normalization,
    is_reduction,
)
from .instances import complete_reduction_instance, minred_instance, nn_instance
from .matroid import GenericMatroidInstance
from .polyring import (
    DEFAULT_PRIME,
    PolyRing,
    Polynomial,
    multidegree,
    polynomial_ring,
)

ENV_PRIME = "GENMAT_PRIME"

CHECK_TASKS = (
    "nn",
    "hsop",
    "reduction",
    "minimal-reduction",
    "complete-reduction-ring",
    "complete-reduction-ideals",
)

EXCHANGE_KINDS = (
    "nn",
    "minred",
    "complete-reduction-ring",
    "complete-reduction-ideals",
)


class InstanceFileError(ValueError):
    """Document problem, tagged with a dotted location path."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


def load_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as bad:
        raise InstanceFileError("$", f"not valid JSON ({bad})") from bad
    if not isinstance(doc, dict):
        raise InstanceFileError("$", "document must be a JSON object")
    return doc


def resolve_prime(doc: dict, env: Mapping[str, str] | None = None) -> int:
    """field.prime if present, else GENMAT_PRIME, else the default."""
    section = doc.get("field", {})
    if not isinstance(section, dict):
        raise InstanceFileError("field", "must be an object")
    if "prime" in section:
        p = section["prime"]
        if not isinstance(p, int):
            raise InstanceFileError("field.prime", "must be an integer")
        return p
    env = os.environ if env is None else env
    raw = env.get(ENV_PRIME)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            raise InstanceFileError(
                "field.prime", f"{ENV_PRIME}={raw!r} is not an integer"
            ) from None
    return DEFAULT_PRIME


def _parse_poly(ring: PolyRing, text, location: str) -> Polynomial:
    if not isinstance(text, str):
        raise InstanceFileError(location, "polynomial must be a string")
    try:
        return ring.parse(text)
    except ValueError as bad:
        raise InstanceFileError(location, str(bad)) from bad


def _poly_list(ring: PolyRing, items, location: str) -> tuple[Polynomial, ...]:
    if not isinstance(items, list):
        raise InstanceFileError(location, "must be a list of polynomial strings")
    return tuple(
        _parse_poly(ring, item, f"{location}[{i}]") for i, item in enumerate(items)
    )


@dataclass(frozen=True)
class InstanceContext:
    """Parsed document: field, ambient presentation, named ideals."""

    document: dict
    prime: int
    algebra: GradedAlgebraPresentation
    ideals: dict = field(default_factory=dict)

    @property
    def ring(self) -> PolyRing:
        return self.algebra.ring


def build_context(doc: dict, env: Mapping[str, str] | None = None) -> InstanceContext:
    prime = resolve_prime(doc, env)
    # Bake the resolved prime into the stored document so a report's
    # echo replays identically even when the prime came from the
    # environment.
    doc = {**doc, "field": {**doc.get("field", {}), "prime": prime}}
    ring_section = doc.get("ring")
    if not isinstance(ring_section, dict):
        raise InstanceFileError("ring", "missing or not an object")
    var_specs = ring_section.get("vars")
    if not isinstance(var_specs, list) or not var_specs:
        raise InstanceFileError("ring.vars", "must be a nonempty list")
    names, degrees = [], []
    for i, spec in enumerate(var_specs):
        loc = f"ring.vars[{i}]"
        if not isinstance(spec, dict) or "name" not in spec:
            raise InstanceFileError(loc, "must be an object with a name")
        names.append(spec["name"])
        deg = spec.get("multidegree", [1])
        if not isinstance(deg, list) or not all(isinstance(x, int) for x in deg):
            raise InstanceFileError(f"{loc}.multidegree", "must be a list of integers")
        degrees.append(tuple(deg))
    try:
        ring = polynomial_ring(prime, names)
    except ValueError as bad:
        raise InstanceFileError("ring.vars", str(bad)) from bad
    relations = _poly_list(ring, ring_section.get("relations", []), "ring.relations")
    for i, rel in enumerate(relations):
        if multidegree(rel, degrees) is None:
            raise InstanceFileError(
                f"ring.relations[{i}]", "not homogeneous in the declared grading"
            )
    try:
        algebra = graded_algebra(ring, degrees, relations)
    except ValueError as bad:
        raise InstanceFileError("ring", str(bad)) from bad

    ideals: dict[str, EquigeneratedIdeal] = {}
    ideal_specs = doc.get("ideals", [])
    if not isinstance(ideal_specs, list):
        raise InstanceFileError("ideals", "must be a list")
    for i, spec in enumerate(ideal_specs):
        loc = f"ideals[{i}]"
        if not isinstance(spec, dict) or "name" not in spec or "generators" not in spec:
            raise InstanceFileError(loc, "must be an object with name and generators")
        if spec["name"] in ideals:
            raise InstanceFileError(f"{loc}.name", f"duplicate ideal {spec['name']!r}")
        gens = _poly_list(ring, spec["generators"], f"{loc}.generators")
        try:
            ideals[spec["name"]] = equigenerated_ideal(algebra, gens)
        except ValueError as bad:
            raise InstanceFileError(f"{loc}.generators", str(bad)) from bad
    return InstanceContext(doc, prime, algebra, ideals)


def resolve_ideal(ctx: InstanceContext, ref, location: str) -> EquigeneratedIdeal:
    if isinstance(ref, str):
        try:
            return ctx.ideals[ref]
        except KeyError:
            raise InstanceFileError(
                location, f"unknown ideal {ref!r}; defined: {sorted(ctx.ideals)}"
            ) from None
    if isinstance(ref, list):
        gens = _poly_list(ctx.ring, ref, location)
        try:
            return equigenerated_ideal(ctx.algebra, gens)
        except ValueError as bad:
            raise InstanceFileError(location, str(bad)) from bad
    raise InstanceFileError(location, "ideal reference must be a name or a list")


def _matrix(ctx: InstanceContext, rows, location: str):
    if not isinstance(rows, list) or not rows:
        raise InstanceFileError(location, "must be a nonempty list of rows")
    return tuple(
        _poly_list(ctx.ring, row, f"{location}[{i}]") for i, row in enumerate(rows)
    )


@dataclass(frozen=True)
class CheckOutcome:
    """Oracle verdict plus a serializable detail payload."""

    status: str  # "true" | "false" | "inconclusive"
    detail: dict

    @property
    def exit_code(self) -> int:
        return {"true": 0, "false": 1, "inconclusive": 2}[self.status]


def _bool_outcome(value: bool, detail: dict) -> CheckOutcome:
    return CheckOutcome("true" if value else "false", detail)


def _verdict_outcome(verdict, detail: dict) -> CheckOutcome:
    detail = dict(detail)
    detail["verdict"] = verdict.describe()
    if verdict.is_yes:
        detail["power"] = verdict.power
        return CheckOutcome("true", detail)
    if verdict.is_no:
        return CheckOutcome("false", detail)
    detail["n_max"] = verdict.n_max
    return CheckOutcome("inconclusive", detail)


def run_check(ctx: InstanceContext, task: str, n_max: int | None = None) -> CheckOutcome:
    """Dispatch one verification task from the document's check section.

    Raises InstanceFileError for anything malformed, including
    candidates the strict oracles reject as ill-typed (wrong degree,
    wrong count, outside the ideal): a wrong answer is a verdict, a
    wrong question is an input error.
    """
    if task not in CHECK_TASKS:
        raise InstanceFileError("check", f"unknown task {task!r}; have {CHECK_TASKS}")
    section = ctx.document.get("check")
    if not isinstance(section, dict):
        raise InstanceFileError("check", "missing or not an object")
    bound = n_max if n_max is not None else section.get("n_max", 10)
    if not isinstance(bound, int) or bound < 1:
        raise InstanceFileError("check.n_max", "must be a positive integer")

    def candidate():
        if "candidate" not in section:
            raise InstanceFileError("check.candidate", "missing")
        return _poly_list(ctx.ring, section["candidate"], "check.candidate")

    try:
        if task == "nn":
            cand = candidate()
            return _bool_outcome(
                is_noether_normalization(ctx.algebra, cand),
                {"candidate": [str(f) for f in cand]},
            )
        if task == "hsop":
            cand = candidate()
            return _bool_outcome(
                is_hsop(ctx.algebra, cand), {"candidate": [str(f) for f in cand]}
            )
        if task in ("reduction", "minimal-reduction"):
            if "ideal" not in section:
                raise InstanceFileError("check.ideal", "missing")
            I = resolve_ideal(ctx, section["ideal"], "check.ideal")
            cand = candidate()
            J = equigenerated_ideal(ctx.algebra, cand)
            detail = {"candidate": [str(f) for f in cand]}
            if task == "reduction":
                return _verdict_outcome(is_reduction(J, I, n_max=bound), detail)
            try:
                return _bool_outcome(is_minimal_reduction(J, I, n_max=bound), detail)
            except InconclusiveError as open_verdict:
                detail["verdict"] = str(open_verdict)
                return CheckOutcome("inconclusive", detail)
        if task == "complete-reduction-ring":
            rows = _matrix(ctx, section.get("matrix"), "check.matrix")
            return _bool_outcome(
                is_complete_reduction_ring(ctx.algebra, rows),
                {"matrix": [[str(f) for f in row] for row in rows]},
            )
        refs = section.get("ideals")
        if not isinstance(refs, list) or not refs:
            raise InstanceFileError("check.ideals", "must be a nonempty list")
        ideals = tuple(
            resolve_ideal(ctx, ref, f"check.ideals[{i}]") for i, ref in enumerate(refs)
        )
        rows = _matrix(ctx, section.get("matrix"), "check.matrix")
        return _verdict_outcome(
            is_complete_reduction_ideals(ideals, rows, n_max=bound),
            {"matrix": [[str(f) for f in row] for row in rows]},
        )
    except InstanceFileError:
        raise
    except ValueError as bad:
        raise InstanceFileError("check", str(bad)) from bad


@dataclass(frozen=True)
class ExchangeSetup:
    """Instance plus the start basis and trap names from the document."""

    instance: GenericMatroidInstance
    kind: str
    start: tuple
    handle_names: tuple[str, ...]

    def default_handle(self) -> str:
        if len(self.handle_names) == 1:
            return self.handle_names[0]
        if "target" in self.handle_names:
            return "target"
        raise InstanceFileError(
            "exchange.handles", f"several handles {self.handle_names}; pass --from"
        )


def _column(ctx: InstanceContext, raw, location: str) -> tuple[Polynomial, ...]:
    if not isinstance(raw, list):
        raise InstanceFileError(location, "column must be a list of polynomials")
    return _poly_list(ctx.ring, raw, location)


def build_exchange(
    ctx: InstanceContext, variant: str = "vector", n_max: int | None = None
) -> ExchangeSetup:
    section = ctx.document.get("exchange")
    if not isinstance(section, dict):
        raise InstanceFileError("exchange", "missing or not an object")
    kind = section.get("kind")
    if kind not in EXCHANGE_KINDS:
        raise InstanceFileError(
            "exchange.kind", f"must be one of {EXCHANGE_KINDS}, got {kind!r}"
        )
    handle_specs = section.get("handles")
    if not isinstance(handle_specs, list) or not handle_specs:
        raise InstanceFileError("exchange.handles", "must be a nonempty list")
    start_raw = section.get("start")
    if not isinstance(start_raw, list) or not start_raw:
        raise InstanceFileError("exchange.start", "must be a nonempty list")
    traps_raw = section.get("traps", {})
    if not isinstance(traps_raw, dict):
        raise InstanceFileError("exchange.traps", "must be an object")
    bound = n_max if n_max is not None else section.get("n_max", 10)

    columnar = kind in ("complete-reduction-ring", "complete-reduction-ideals")
    handles = {}
    for i, spec in enumerate(handle_specs):
        loc = f"exchange.handles[{i}]"
        if not isinstance(spec, dict) or "name" not in spec:
            raise InstanceFileError(loc, "must be an object with a name")
        hname = spec["name"]
        if hname in handles:
            raise InstanceFileError(f"{loc}.name", f"duplicate handle {hname!r}")
        if columnar:
            blocks = spec.get("blocks")
            if not isinstance(blocks, list) or not blocks:
                raise InstanceFileError(f"{loc}.blocks", "must be a nonempty list")
            handles[hname] = tuple(
                _poly_list(ctx.ring, b, f"{loc}.blocks[{j}]")
                for j, b in enumerate(blocks)
            )
        else:
            handles[hname] = _poly_list(ctx.ring, spec.get("forms"), f"{loc}.forms")

    if columnar:
        start = tuple(
            _column(ctx, col, f"exchange.start[{i}]") for i, col in enumerate(start_raw)
        )
        traps = {
            tname: _column(ctx, col, f"exchange.traps.{tname}")
            for tname, col in traps_raw.items()
        }
    else:
        start = _poly_list(ctx.ring, start_raw, "exchange.start")
        traps = {
            tname: _parse_poly(ctx.ring, text, f"exchange.traps.{tname}")
            for tname, text in traps_raw.items()
        }

    try:
        if kind == "nn":
            inst = nn_instance(ctx.algebra, handles=handles, traps=traps)
        elif kind == "minred":
            if "ideal" not in section:
                raise InstanceFileError("exchange.ideal", "missing")
            I = resolve_ideal(ctx, section["ideal"], "exchange.ideal")
            inst = minred_instance(I, n_max=bound, handles=handles, traps=traps)
        elif kind == "complete-reduction-ring":
            inst = complete_reduction_instance(
                ctx.algebra, variant=variant, handles=handles, traps=traps
            )
        else:
            refs = section.get("ideals")
            if not isinstance(refs, list) or not refs:
                raise InstanceFileError("exchange.ideals", "must be a nonempty list")
            ideals = tuple(
                resolve_ideal(ctx, ref, f"exchange.ideals[{i}]")
                for i, ref in enumerate(refs)
            )
            inst = complete_reduction_instance(
                ideals, variant=variant, handles=handles, traps=traps
            )
    except InstanceFileError:
        raise
    except ValueError as bad:
        raise InstanceFileError("exchange", str(bad)) from bad

    if not inst.is_basis(start):
        raise InstanceFileError("exchange.start", "start set fails the basis oracle")
    return ExchangeSetup(inst, kind, start, tuple(handles))


def resolve_removed(setup: ExchangeSetup, ctx: InstanceContext, flag: str):
    """Map the --remove flag to a start-basis element.

    Column kinds take a zero-based column index; the element kinds take
    polynomial text compared up to parsing.
    """
    if setup.kind in ("complete-reduction-ring", "complete-reduction-ideals"):
        try:
            index = int(flag)
        except ValueError:
            raise InstanceFileError(
                "--remove", "column kinds take a column index"
            ) from None
        if not 0 <= index < len(setup.start):
            raise InstanceFileError(
                "--remove", f"index {index} outside 0..{len(setup.start) - 1}"
            )
        return setup.start[index]
    target = _parse_poly(ctx.ring, flag, "--remove")
    for el in setup.start:
        if el == target:
            return el
    raise InstanceFileError("--remove", f"{flag!r} is not in the start basis")
