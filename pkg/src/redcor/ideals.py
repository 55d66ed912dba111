"""Ideals with completed normal-form bases.

Over Z and Z/n an ideal is principal and the basis is the single
canonical generator (a gcd, folding in the modulus).  Over polynomial
rings the basis is the unique reduced Groebner basis for the ring's
monomial order.  The zero ideal has an empty basis.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import gcd

from .errors import MixedRings, UnsupportedRing
from .grobner import module_groebner, vec_normal_form
from .rings import IntegerRing, ModularRing, PolynomialRing, Ring


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    generators: tuple
    basis: tuple

    def __str__(self):
        gens = ", ".join(self.ring.fmt(g) for g in self.generators)
        return f"({gens})"


def ideal(ring: Ring, generators) -> Ideal:
    """Build an ideal from generators (payloads, ints, or element strings)."""
    gens = []
    for g in generators:
        if isinstance(g, int):
            gens.append(ring.from_int(g))
        elif isinstance(g, str):
            gens.append(ring.parse(g))
        else:
            gens.append(ring.canon(g))
    if not gens:
        gens = [ring.zero()]
    return Ideal(ring, tuple(gens), _completed_basis(ring, tuple(gens)))


def groebner_basis(ring: Ring, generators) -> Ideal:
    """Complete generators to a normal-form basis (gcd over the PIRs,
    reduced Groebner basis over polynomial rings)."""
    return ideal(ring, generators)


@functools.lru_cache(maxsize=None)
def _completed_basis(ring: Ring, gens: tuple) -> tuple:
    nonzero = [g for g in gens if not ring.is_zero(g)]
    if not nonzero:
        return ()
    if isinstance(ring, IntegerRing):
        g = 0
        for x in nonzero:
            g = gcd(g, x)
        return (g,)
    if isinstance(ring, ModularRing):
        g = ring.modulus
        for x in nonzero:
            g = gcd(g, x)
        return () if g == ring.modulus else (g % ring.modulus,)
    if isinstance(ring, PolynomialRing):
        gb = module_groebner(ring, [(g,) for g in nonzero], 1)
        return tuple(v[0] for v in gb)
    raise UnsupportedRing(f"no ideal arithmetic over {ring}")


def _require_same(a, b):
    if a.ring != b.ring:
        raise MixedRings("ideal operands live over different rings")


def normal_form(ring: Ring, f, ideal_: Ideal):
    """Unique remainder of f modulo the ideal; zero iff f is a member."""
    if ring != ideal_.ring:
        raise MixedRings("element and ideal live over different rings")
    basis = ideal_.basis
    if isinstance(ring, (IntegerRing, ModularRing)):
        if not basis:
            return ring.canon(f)
        return f % basis[0]
    if isinstance(ring, PolynomialRing):
        if not basis:
            return ring.canon(f)
        return vec_normal_form(ring, (f,), [(b,) for b in basis])[0]
    raise UnsupportedRing(f"no normal forms over {ring}")


def ideal_contains(ideal_: Ideal, f) -> bool:
    return ideal_.ring.is_zero(normal_form(ideal_.ring, f, ideal_))


def ideal_leq(a: Ideal, b: Ideal) -> bool:
    _require_same(a, b)
    return all(ideal_contains(b, g) for g in a.generators)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    return ideal_leq(a, b) and ideal_leq(b, a)


@functools.lru_cache(maxsize=None)
def ideal_power(ideal_: Ideal, k: int) -> Ideal:
    """I^k, generated by all k-fold products of the generators."""
    if k < 1:
        raise UnsupportedRing("ideal powers need k >= 1")
    ring = ideal_.ring
    prods = []
    for combo in itertools.combinations_with_replacement(ideal_.generators, k):
        p = ring.one()
        for x in combo:
            p = ring.mul(p, x)
        prods.append(p)
    return ideal(ring, prods)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    _require_same(a, b)
    ring = a.ring
    prods = [ring.mul(x, y) for x in a.generators for y in b.generators]
    return ideal(ring, prods)


def is_zero_ideal(a: Ideal) -> bool:
    return not a.basis


def is_unit_ideal(a: Ideal) -> bool:
    return ideal_contains(a, a.ring.one())
