"""Exact base rings: integers, modular integers, and polynomial rings.

Three families are supported.  Elements are plain immutable payloads and
the ring object supplies all arithmetic:

* integers -- payload ``int``
* modular integers Z/n -- payload ``int`` in ``[0, n)``
* polynomials over Q or F_p -- payload: tuple of ``(exponents, coeff)``
  terms sorted descending in the ring's monomial order, no zero
  coefficients

Payload equality is semantic equality because every constructor
canonicalizes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import MixedRings, ParseError, UnsupportedRing

MONOMIAL_ORDERS = ("lex", "grlex", "grevlex")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# coefficient fields


@dataclass(frozen=True)
class RationalField:
    """Exact rational coefficients."""

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, k: int):
        return Fraction(k)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def fraction(self, p: int, q: int):
        if q == 0:
            raise ParseError("zero denominator")
        return Fraction(p, q)

    def fmt(self, a) -> str:
        return str(a)

    def to_json(self):
        return "Q"

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """Coefficients in F_p for a prime p; payload int in [0, p)."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise UnsupportedRing(f"{self.p} is not prime")

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k: int):
        return k % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def fraction(self, p: int, q: int):
        return self.mul(self.from_int(p), self.inv(self.from_int(q)))

    def fmt(self, a) -> str:
        return str(a)

    def to_json(self):
        return {"Fp": self.p}

    def __str__(self):
        return f"F{self.p}"


# ---------------------------------------------------------------------------
# monomial orders


def order_key(order: str, exps: tuple[int, ...]):
    """Sort key: larger key <=> larger monomial in the given order."""
    if order == "lex":
        return exps
    d = sum(exps)
    if order == "grlex":
        return (d, exps)
    if order == "grevlex":
        return (d, tuple(-e for e in reversed(exps)))
    raise UnsupportedRing(f"unknown monomial order {order!r}")


def mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))

def mono_div(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# rings


class Ring:
    """Common surface shared by the three ring families."""

    kind = "?"

    def require_same(self, other: "Ring"):
        if self != other:
            raise MixedRings(f"elements of {self} and {other} cannot mix")

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def power(self, a, k: int):
        if k < 0:
            raise UnsupportedRing("negative powers are not ring operations")
        result = self.one()
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def cardinality(self) -> int | None:
        return None

    def elements(self):
        raise UnsupportedRing(f"{self} is not enumerable")


@dataclass(frozen=True)
class IntegerRing(Ring):
    kind = "Z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k: int):
        return int(k)

    def canon(self, a):
        return int(a)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def parse(self, s: str):
        try:
            return int(s.strip())
        except ValueError:
            raise ParseError(f"not an integer: {s!r}") from None

    def fmt(self, a) -> str:
        return str(a)

    def to_json(self):
        return {"kind": "Z"}

    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class ModularRing(Ring):
    """Z/n for n >= 2; composite n is allowed."""

    modulus: int
    kind = "Zmod"

    def __post_init__(self):
        if self.modulus < 2:
            raise UnsupportedRing("modulus must be >= 2")

    def zero(self):
        return 0

    def one(self):
        return 1 % self.modulus

    def from_int(self, k: int):
        return k % self.modulus

    def canon(self, a):
        return int(a) % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def parse(self, s: str):
        try:
            return int(s.strip()) % self.modulus
        except ValueError:
            raise ParseError(f"not an integer: {s!r}") from None

    def fmt(self, a) -> str:
        return str(a)

    def cardinality(self):
        return self.modulus

    def elements(self):
        return range(self.modulus)

    def to_json(self):
        return {"kind": "Zmod", "n": self.modulus}

    def __str__(self):
        return f"Z/{self.modulus}"


@dataclass(frozen=True)
class PolynomialRing(Ring):
    """Multivariate polynomials over Q or F_p with a total monomial order."""

    field: RationalField | PrimeField
    variables: tuple[str, ...]
    order: str = "grevlex"
    kind = "poly"

    def __post_init__(self):
        if not self.variables:
            raise UnsupportedRing("at least one variable required")
        if len(set(self.variables)) != len(self.variables):
            raise UnsupportedRing("variable names must be distinct")
        if any(not v for v in self.variables):
            raise UnsupportedRing("variable names must be nonempty")
        if self.order not in MONOMIAL_ORDERS:
            raise UnsupportedRing(f"unknown monomial order {self.order!r}")

    # -- payload helpers ----------------------------------------------------

    def term_key(self, exps: tuple[int, ...]):
        return order_key(self.order, exps)

    def _canon_dict(self, d: dict) -> tuple:
        items = [(m, c) for m, c in d.items() if c != self.field.zero()]
        items.sort(key=lambda mc: self.term_key(mc[0]), reverse=True)
        return tuple(items)

    def zero(self):
        return ()

    def one(self):
        return ((tuple(0 for _ in self.variables), self.field.one()),)

    def from_int(self, k: int):
        c = self.field.from_int(k)
        if c == self.field.zero():
            return ()
        return ((tuple(0 for _ in self.variables), c),)

    def canon(self, a):
        return self._canon_dict(dict(a))

    def monomial(self, exps: tuple[int, ...], coeff=None):
        c = self.field.one() if coeff is None else coeff
        if c == self.field.zero():
            return ()
        return ((tuple(exps), c),)

    def variable(self, name: str):
        i = self.variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(self.variables)))
        return self.monomial(exps)

    def add(self, a, b):
        d = dict(a)
        z = self.field.zero()
        for m, c in b:
            s = self.field.add(d.get(m, z), c)
            if s == z:
                d.pop(m, None)
            else:
                d[m] = s
        return self._canon_dict(d)

    def neg(self, a):
        return tuple((m, self.field.neg(c)) for m, c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        d: dict = {}
        z = self.field.zero()
        for m1, c1 in a:
            for m2, c2 in b:
                m = mono_mul(m1, m2)
                s = self.field.add(d.get(m, z), self.field.mul(c1, c2))
                if s == z:
                    d.pop(m, None)
                else:
                    d[m] = s
        return self._canon_dict(d)

    def term_times(self, a, exps: tuple[int, ...], coeff):
        """Multiply polynomial ``a`` by the single term coeff*x^exps."""
        if coeff == self.field.zero() or not a:
            return ()
        return tuple((mono_mul(m, exps), self.field.mul(c, coeff)) for m, c in a)

    def lead(self, a):
        """Lead (exps, coeff) in the ring's order, or None for zero."""
        return a[0] if a else None

    def monic(self, a):
        if not a:
            return a
        inv = self.field.inv(a[0][1])
        return tuple((m, self.field.mul(c, inv)) for m, c in a)

    # -- text ----------------------------------------------------------------

    def parse(self, s: str):
        return _parse_poly(self, s)

    def fmt(self, a) -> str:
        return _format_poly(self, a)

    def to_json(self):
        return {
            "kind": "poly",
            "coeff": self.field.to_json(),
            "vars": list(self.variables),
            "order": self.order,
        }

    def __str__(self):
        return f"{self.field}[{','.join(self.variables)}]"


# ---------------------------------------------------------------------------
# element text syntax: terms `c*x^a*y^b` joined by + / -, rationals `p/q`

_TOKEN_RE = re.compile(r"\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|[+\-*/^]")


def _tokenize(s: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(s, pos)
        if not m:
            raise ParseError(f"unexpected character {s[pos]!r} at offset {pos}")
        tok = m.group()
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


def _parse_poly(ring: PolynomialRing, s: str):
    toks = _tokenize(s)
    if not toks:
        raise ParseError("empty element string")
    i = 0

    def peek():
        return toks[i] if i < len(toks) else None

    def take():
        nonlocal i
        t = peek()
        i += 1
        return t

    def parse_factor():
        t = take()
        if t is None:
            raise ParseError("unexpected end of input")
        if t.isdigit():
            num = int(t)
            if peek() == "/":
                take()
                den = take()
                if den is None or not den.isdigit():
                    raise ParseError("expected integer denominator")
                return (ring.from_int(1), ring.field.fraction(num, int(den)))
            return (ring.from_int(1), ring.field.from_int(num))
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", t):
            if t not in ring.variables:
                raise ParseError(f"unknown variable {t!r} in {ring}")
            exp = 1
            if peek() == "^":
                take()
                e = take()
                if e is None or not e.isdigit():
                    raise ParseError("expected integer exponent")
                exp = int(e)
            idx = ring.variables.index(t)
            exps = tuple(exp if j == idx else 0 for j in range(len(ring.variables)))
            return (ring.monomial(exps), ring.field.one())
        raise ParseError(f"unexpected token {t!r}")

    def parse_term():
        mono, coeff = parse_factor()
        while peek() == "*":
            take()
            m2, c2 = parse_factor()
            mono = ring.mul(mono, m2)
            coeff = ring.field.mul(coeff, c2)
        return ring.term_times(mono, tuple(0 for _ in ring.variables), coeff)

    total = ring.zero()
    sign = 1
    if peek() in ("+", "-"):
        sign = -1 if take() == "-" else 1
    while True:
        term = parse_term()
        if sign < 0:
            term = ring.neg(term)
        total = ring.add(total, term)
        nxt = peek()
        if nxt is None:
            break
        if nxt not in ("+", "-"):
            raise ParseError(f"unexpected token {nxt!r}")
        sign = -1 if take() == "-" else 1
    return total


def _format_poly(ring: PolynomialRing, a) -> str:
    if not a:
        return "0"
    pieces = []
    for idx, (exps, coeff) in enumerate(a):
        mono = "*".join(
            v if e == 1 else f"{v}^{e}"
            for v, e in zip(ring.variables, exps)
            if e
        )
        neg = isinstance(coeff, (int, Fraction)) and coeff < 0
        mag = -coeff if neg else coeff
        cs = ring.field.fmt(mag)
        if mono and cs == "1":
            body = mono
        elif mono:
            body = f"{cs}*{mono}"
        else:
            body = cs
        if idx == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# descriptors


def ring_to_json(ring: Ring) -> dict:
    return ring.to_json()


def ring_from_json(d: dict) -> Ring:
    try:
        kind = d["kind"]
    except (TypeError, KeyError):
        raise ParseError("ring descriptor must be an object with a 'kind'") from None
    if kind == "Z":
        return IntegerRing()
    if kind == "Zmod":
        return ModularRing(int(d["n"]))
    if kind == "poly":
        coeff = d.get("coeff", "Q")
        if coeff == "Q":
            field = RationalField()
        elif isinstance(coeff, dict) and "Fp" in coeff:
            field = PrimeField(int(coeff["Fp"]))
        else:
            raise ParseError(f"unknown coefficient field {coeff!r}")
        return PolynomialRing(field, tuple(d["vars"]), d.get("order", "grevlex"))
    raise ParseError(f"unknown ring kind {kind!r}")


_RING_SPEC_RE = re.compile(
    r"^\s*(?:(Z)\s*(?:/\s*(\d+))?|(Q|F(\d+))\s*\[\s*([A-Za-z_0-9,\s]+)\s*\])\s*$"
)


def parse_ring_spec(spec: str, order: str = "grevlex") -> Ring:
    """Parse shorthand like ``Z``, ``Z/6``, ``Q[x,y]`` or ``F5[x,y]``."""
    m = _RING_SPEC_RE.match(spec)
    if not m:
        raise ParseError(f"cannot parse ring spec {spec!r}")
    if m.group(1):
        if m.group(2):
            return ModularRing(int(m.group(2)))
        return IntegerRing()
    field = RationalField() if m.group(3) == "Q" else PrimeField(int(m.group(4)))
    names = tuple(v.strip() for v in m.group(5).split(",") if v.strip())
    return PolynomialRing(field, names, order)
