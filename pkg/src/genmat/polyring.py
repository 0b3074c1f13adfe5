"""Multivariate polynomial arithmetic over a prime field.

A polynomial is stored sparsely as a map from exponent vectors to
nonzero coefficients.  Exponent vectors are plain tuples of ints, one
slot per ring variable; coefficients are ints reduced to [0, p).  The
field F_p with p large (default 32003) stands in for an infinite
field: every genericity statement downstream becomes "fails for at
most O(1/p) of the samples".

Monomial orders are value objects exposing a sort key: ``lex``,
``grevlex``, and the block elimination order (grevlex on the first
``split`` variables, ties broken by grevlex on the rest).  The block
order ranks any monomial touching the first block above every monomial
free of it, which is the property elimination needs.

Text form, used by the CLI and the tests: ``2*x^2*y - z*w + 5``.
ASCII only, ``^`` for powers, ``*`` for products, integer
coefficients, no parentheses.  Parsing and printing round-trip.

Everything here is immutable after construction, and all randomness
flows through an explicit ``random.Random`` handle, so values can be
shared freely across threads.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

DEFAULT_PRIME = 32003

# Exponent vector of a monomial: one entry per ring variable.
Monomial = tuple[int, ...]

# Degree vector of a multigrading with n components.
MultiDegree = tuple[int, ...]


class RingMismatchError(ValueError):
    """Operands live in different ambient rings."""


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; the witness set covers well past 2^64.
    if n < 2:
        return False
    witnesses = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in witnesses:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p.  Elements are ints reduced to [0, p)."""

    p: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"field modulus must be prime, got {self.p}")

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def sample(self, rng: random.Random) -> int:
        """Uniform element of F_p drawn from an explicit RNG state."""
        return rng.randrange(self.p)


def mon_one(nvars: int) -> Monomial:
    return (0,) * nvars


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mon_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_degree(a: Monomial) -> int:
    return sum(a)


def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


_ORDER_KINDS = ("lex", "grevlex", "elim")


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative well-ordering on monomials, as a sort key.

    ``key(m)`` is comparable and strictly monotone: larger monomial,
    larger key, and key comparisons are preserved by multiplying both
    sides by a common monomial.  1 is the minimum for every kind.
    """

    kind: str = "grevlex"
    split: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim":
            if self.split is None or self.split < 1:
                raise ValueError("elimination order needs a positive split")
        elif self.split is not None:
            raise ValueError(f"{self.kind} order takes no split")

    def key(self, m: Monomial):
        if self.kind == "grevlex":
            return _grevlex_key(m)
        if self.kind == "lex":
            return m
        s = self.split
        return (_grevlex_key(m[:s]), _grevlex_key(m[s:]))

    def max(self, monomials):
        return max(monomials, key=self.key)

    def sorted_desc(self, monomials) -> list[Monomial]:
        return sorted(monomials, key=self.key, reverse=True)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination_order(split: int) -> MonomialOrder:
    """Block order eliminating the first ``split`` ring variables."""
    return MonomialOrder("elim", split)


def _valid_name(name: str) -> bool:
    return name.isidentifier() and name.isascii()


@dataclass(frozen=True)
class PolyRing:
    """Ambient polynomial ring F_p[names]."""

    field: PrimeField
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.names:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        for n in self.names:
            if not _valid_name(n):
                raise ValueError(f"invalid variable name {n!r}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"no variable {name!r} in {self.names}") from None

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: int) -> "Polynomial":
        c %= self.field.p
        if c == 0:
            return Polynomial._raw(self, {})
        return Polynomial._raw(self, {mon_one(self.nvars): c})

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial._raw(self, {tuple(e): 1})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(n) for n in self.names)

    def monomial(self, exponents, coeff: int = 1) -> "Polynomial":
        e = tuple(int(x) for x in exponents)
        if len(e) != self.nvars or any(x < 0 for x in e):
            raise ValueError(f"bad exponent vector {exponents!r}")
        c = coeff % self.field.p
        if c == 0:
            return Polynomial._raw(self, {})
        return Polynomial._raw(self, {e: c})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)


def polynomial_ring(p: int, names) -> PolyRing:
    """Convenience constructor: ``polynomial_ring(32003, "x y z")``."""
    if isinstance(names, str):
        names = names.split()
    return PolyRing(PrimeField(p), tuple(names))


class Polynomial:
    """Immutable sparse polynomial over a PolyRing.

    ``terms`` maps exponent tuples to coefficients in [1, p); treat it
    as read-only.  Arithmetic between polynomials of different rings
    raises RingMismatchError; ints coerce to constants.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        clean: dict = {}
        p = ring.field.p
        n = ring.nvars
        for mon, c in terms.items():
            mon = tuple(int(e) for e in mon)
            if len(mon) != n or any(e < 0 for e in mon):
                raise ValueError(f"bad exponent vector {mon!r}")
            c = int(c) % p
            if c:
                clean[mon] = c
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> "Polynomial":
        # Internal fast path: terms already canonical (nonzero, reduced).
        self = object.__new__(cls)
        self.ring = ring
        self.terms = terms
        self._hash = None
        return self

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def leading_term(self, order: MonomialOrder = GREVLEX) -> tuple[Monomial, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = order.max(self.terms)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        if c == 1:
            return self
        inv = self.ring.field.inv(c)
        p = self.ring.field.p
        return Polynomial._raw(self.ring, {m: a * inv % p for m, a in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"mixed rings {self.ring.names} and {other.ring.names}"
                )
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ring.field.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = (out.get(m, 0) + c) % p
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial._raw(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ring.field.p
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = (out.get(m, 0) + c1 * c2) % p
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take a nonnegative int")
        result = self.ring.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale_monomial(self, mon: Monomial, coeff: int) -> "Polynomial":
        """self * coeff * x^mon, the inner step of division loops."""
        p = self.ring.field.p
        coeff %= p
        if coeff == 0:
            return self.ring.zero()
        out = {}
        for m, c in self.terms.items():
            out[tuple(a + b for a, b in zip(m, mon))] = c * coeff % p
        return Polynomial._raw(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == self.ring.const(other).terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self) -> str:
        return poly_to_str(self)

    def __repr__(self) -> str:
        return f"Polynomial({poly_to_str(self)!r})"


def multidegree(f: Polynomial, var_degrees) -> MultiDegree | None:
    """Common multidegree of f's terms under the given grading.

    ``var_degrees`` assigns one MultiDegree per ring variable.  Returns
    None when the terms disagree or f is zero; a nonzero homogeneous f
    gets the shared degree vector.
    """
    degs = [tuple(int(x) for x in d) for d in var_degrees]
    if len(degs) != f.ring.nvars:
        raise ValueError("grading must assign a degree to every variable")
    ncomp = len(degs[0]) if degs else 0
    if any(len(d) != ncomp for d in degs):
        raise ValueError("grading components have mixed lengths")
    common: tuple | None = None
    for mon in f.terms:
        total = [0] * ncomp
        for e, d in zip(mon, degs):
            if e:
                for i in range(ncomp):
                    total[i] += e * d[i]
        total = tuple(total)
        if common is None:
            common = total
        elif common != total:
            return None
    return common


def random_linear_combination(basis, rng: random.Random, var_degrees=None):
    """Uniform F_p-combination of ``basis``; returns (poly, coefficients).

    Coefficients are i.i.d. uniform in F_p, drawn from the supplied RNG
    only, so equal seeds give equal output.  When a grading is passed,
    all basis elements must share one multidegree, keeping the result
    homogeneous of that degree.
    """
    basis = list(basis)
    if not basis:
        raise ValueError("empty basis")
    ring = basis[0].ring
    for b in basis:
        if b.ring != ring:
            raise RingMismatchError("basis spans several rings")
    if var_degrees is not None:
        degs = {multidegree(b, var_degrees) for b in basis}
        if len(degs) != 1 or None in degs:
            raise ValueError("basis elements must share a multidegree")
    coeffs = tuple(ring.field.sample(rng) for _ in basis)
    out = ring.zero()
    for c, b in zip(coeffs, basis):
        out = out + b.scale_monomial(mon_one(ring.nvars), c)
    return out, coeffs


def substitute(f: Polynomial, images, target: PolyRing) -> Polynomial:
    """Evaluate f at variable -> polynomial images inside ``target``.

    ``images`` is one target-ring polynomial per variable of f's ring,
    in variable order.
    """
    images = list(images)
    if len(images) != f.ring.nvars:
        raise ValueError("need one image per variable")
    for g in images:
        if g.ring != target:
            raise RingMismatchError("image outside the target ring")
    out = target.zero()
    powers: list[dict[int, Polynomial]] = [{0: target.one()} for _ in images]

    def power(i: int, e: int) -> Polynomial:
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i]
        return cache[e]

    for mon, c in f.terms.items():
        term = target.const(c)
        for i, e in enumerate(mon):
            if e:
                term = term * power(i, e)
        out = out + term
    return out


# --- text form -------------------------------------------------------------

def poly_to_str(f: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text form, terms descending in ``order``.

    Coefficients print as the symmetric representative in
    (-p/2, p/2], so small negatives stay readable; parse() inverts
    this exactly.
    """
    if f.is_zero:
        return "0"
    p = f.ring.field.p
    names = f.ring.names
    pieces: list[str] = []
    for mon in order.sorted_desc(f.terms):
        c = f.terms[mon]
        if c > p // 2:
            sign, mag = "-", p - c
        else:
            sign, mag = "+", c
        factors = []
        for name, e in zip(names, mon):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f"{'+' if sign == '+' else '-'} {body}")
    return " ".join(pieces)


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ValueError(f"polynomial syntax error at column {self.pos + 1}: {msg}")

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def take_name(self) -> str:
        start = self.pos
        ch = self.text[self.pos]
        if not (ch.isalpha() or ch == "_"):
            self.error("expected a variable name")
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch.isalnum() or ch == "_":
                self.pos += 1
            else:
                break
        return self.text[start : self.pos]


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse the ``2*x^2*y - z*w + 5`` grammar into ``ring``.

    poly   := [sign] term { sign term }
    term   := factor { "*" factor }
    factor := INT | NAME [ "^" INT ]

    Unknown variable names and stray characters raise ValueError with a
    column position.
    """
    if not isinstance(text, str):
        raise ValueError(f"polynomial text must be a string, got {type(text).__name__}")
    tok = _Tokenizer(text)
    p = ring.field.p
    n = ring.nvars
    acc: dict = {}

    def read_term(sign: int) -> None:
        coeff = sign
        expo = [0] * n
        while True:
            ch = tok.peek()
            if ch is None:
                tok.error("unexpected end of input")
            if ch.isdigit():
                coeff = coeff * tok.take_int() % p
            elif ch.isalpha() or ch == "_":
                name = tok.take_name()
                try:
                    i = ring.index(name)
                except ValueError:
                    tok.error(f"unknown variable {name!r}")
                e = 1
                if tok.peek() == "^":
                    tok.pos += 1
                    if tok.peek() is None or not tok.peek().isdigit():
                        tok.error("expected an exponent after '^'")
                    e = tok.take_int()
                expo[i] += e
            else:
                tok.error(f"unexpected character {ch!r}")
            nxt = tok.peek()
            if nxt == "*":
                tok.pos += 1
                continue
            break
        mon = tuple(expo)
        s = (acc.get(mon, 0) + coeff) % p
        if s:
            acc[mon] = s
        elif mon in acc:
            del acc[mon]

    first = tok.peek()
    if first is None:
        raise ValueError("empty polynomial text")
    sign = 1
    if first in "+-":
        sign = -1 if first == "-" else 1
        tok.pos += 1
    read_term(sign % p)
    while True:
        ch = tok.peek()
        if ch is None:
            break
        if ch == "+":
            sign = 1
        elif ch == "-":
            sign = p - 1
        else:
            tok.error(f"expected '+' or '-', found {ch!r}")
        tok.pos += 1
        read_term(sign)
    return Polynomial._raw(ring, acc)
