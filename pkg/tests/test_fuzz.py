"""Deterministic robustness smoke: randomly drawn operations must either
answer or raise one of their declared errors across the whole ring tower."""

import random

from redcor.complexes import (cohomology, free_resolution, koszul_complex,
                              tor)
from redcor.duality import (matlis_transfer_check, mgm_check,
                            semigroup_table_check)
from redcor.errors import (InfiniteModule, PredicateFailed, TooLarge,
                           UnsupportedQuery, UnsupportedRing)
from redcor.ideals import ideal
from redcor.modules import (colon_annihilator, hom_module, map_analyze,
                            presentation, scalar_submodule,
                            tensor_hom_currying, tensor_product)
from redcor.rings import (IntegerRing, ModularRing, PolynomialRing,
                          PrimeField, RationalField)
from redcor.torsion import (completion, is_coreduced, is_reduced,
                            representability_report, torsion_part)

DECLARED = (PredicateFailed, UnsupportedQuery, UnsupportedRing, TooLarge,
            InfiniteModule)


def _element(rng, ring):
    if isinstance(ring, PolynomialRing):
        f = ring.zero()
        for _ in range(rng.randint(0, 3)):
            exps = tuple(rng.randint(0, 2) for _ in ring.variables)
            f = ring.add(f, ring.monomial(
                exps, ring.field.from_int(rng.randint(-3, 3))))
        return f
    return ring.from_int(rng.randint(-12, 12))


def _module(rng, ring, max_gens=3):
    g = rng.randint(0, max_gens)
    rows = rng.randint(0, 3)
    return presentation(ring, g, [[_element(rng, ring) for _ in range(g)]
                                  for _ in range(rows)])


def test_random_operations_answer_or_raise_declared_errors():
    rng = random.Random(31337)
    rings = [IntegerRing(), ModularRing(4), ModularRing(12), ModularRing(30),
             PolynomialRing(RationalField(), ("x",)),
             PolynomialRing(PrimeField(3), ("x", "y"))]
    for trial in range(240):
        ring = rings[trial % len(rings)]
        poly = isinstance(ring, PolynomialRing)
        m = _module(rng, ring)
        n = _module(rng, ring)
        i = ideal(ring, [_element(rng, ring) for _ in range(rng.randint(1, 2))])
        op = rng.randrange(14)
        try:
            if op == 0:
                hom_module(m, n)
            elif op == 1:
                tensor_product(m, n)
            elif op == 2:
                colon_annihilator(m, i)
            elif op == 3:
                scalar_submodule(m, i)
            elif op == 4:
                torsion_part(m, i, bound=16)
            elif op == 5:
                completion(m, i, bound=6)
            elif op == 6:
                is_reduced(m, i)
                is_coreduced(m, i)
            elif op == 7:
                representability_report(m, i, 16)
            elif op == 8:
                semigroup_table_check(m, i)
            elif op == 9:
                small = 2 if poly else 3
                chi, *_ = tensor_hom_currying(
                    _module(rng, ring, small), _module(rng, ring, small),
                    _module(rng, ring, small))
                map_analyze(chi)
            elif op == 10:
                seq = [_element(rng, ring) for _ in range(rng.randint(1, 2))]
                k = koszul_complex(ring, seq)
                cohomology(k, rng.randint(k.lo, k.hi))
            elif op == 11:
                free_resolution(m, 2)
            elif op == 12 and not poly:
                tor(m, n, rng.randint(0, 2))
                mgm_check(m, i, bound=8)
            elif op == 13 and not poly:
                matlis_transfer_check(m, i)
        except DECLARED:
            pass
