"""Seeded instance generators for the verification suites and reports."""

from __future__ import annotations

import random

from .ideals import Ideal, ideal
from .modules import ModuleMap, Presentation, hom_module, presentation
from .rings import IntegerRing, ModularRing, Ring


def random_presentation(rng: random.Random, ring: Ring, max_gens: int = 3,
                        max_rows: int = 3, entry_bound: int = 12) -> Presentation:
    gens = rng.randint(1, max_gens)
    rows = rng.randint(0, max_rows)
    if isinstance(ring, ModularRing):
        entries = lambda: rng.randrange(ring.modulus)
    else:
        entries = lambda: rng.randint(-entry_bound, entry_bound)
    matrix = [[entries() for _ in range(gens)] for _ in range(rows)]
    return presentation(ring, gens, matrix)


def random_cyclic_ideal(rng: random.Random, ring: Ring,
                        entry_bound: int = 12) -> Ideal:
    if isinstance(ring, ModularRing):
        return ideal(ring, [rng.randrange(ring.modulus)])
    return ideal(ring, [rng.randint(1, entry_bound)])


def random_map(rng: random.Random, source: Presentation,
               target: Presentation) -> ModuleMap:
    """A random well-defined map, drawn as a combination of Hom generators."""
    h = hom_module(source, target)
    ring = source.ring
    if isinstance(ring, ModularRing):
        coeffs = [rng.randrange(ring.modulus) for _ in range(h.module.gens)]
    else:
        coeffs = [rng.randint(-3, 3) for _ in range(h.module.gens)]
    return h.combination_map([ring.from_int(c) for c in coeffs])


def finite_abelian_groups(max_order: int):
    """All finite abelian groups of order <= max_order, as invariant-factor
    chains d_1 | d_2 | ... with every d_i >= 2."""
    out = [()]

    def walk(chain, product):
        if chain:
            out.append(tuple(chain))
        last = chain[-1] if chain else 2
        for d in range(last, max_order + 1):
            if chain and d % chain[-1]:
                continue
            if product * d > max_order:
                continue
            walk(chain + [d], product * d)

    walk([], 1)
    return sorted(set(out), key=lambda c: (len(c), c))


def group_presentation(ring: IntegerRing, chain) -> Presentation:
    g = len(chain)
    rows = [[chain[i] if i == j else 0 for j in range(g)] for i in range(g)]
    return presentation(ring, g, rows)
