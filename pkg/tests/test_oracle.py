import random

import pytest

from redcor.errors import InfiniteModule, TooLarge, UnsupportedQuery
from redcor.ideals import ideal
from redcor.modules import (free_module, hom_module, module_order,
                            presentation, zero_module)
from redcor.oracle import (brute_force_homs, coreduced_ring_is_reduced_check,
                           elementwise_coreduced_check,
                           elementwise_reduced_check, enumerate_module,
                           ideal_residues)
from redcor.torsion import is_coreduced, is_reduced
from redcor.rings import IntegerRing, ModularRing


def test_enumerate_module_sizes(zz, z6):
    assert enumerate_module(presentation(zz, 1, [[6]])).size == 6
    assert enumerate_module(presentation(zz, 2, [[2, 0], [0, 2]])).size == 4
    assert enumerate_module(free_module(z6, 1)).size == 6
    assert enumerate_module(zero_module(zz)).size == 1
    with pytest.raises(InfiniteModule):
        enumerate_module(free_module(zz, 1))
    with pytest.raises(TooLarge):
        enumerate_module(presentation(zz, 2, [[100, 0], [0, 100]]), 4096)


def test_table_arithmetic_round_trip(zz):
    m = presentation(zz, 2, [[4, 2], [0, 3]])
    table = enumerate_module(m)
    for e in table.elements:
        back = table.to_coords(table.from_coords(e))
        assert back == e


def test_elementwise_checks_examples(z8, z6, z4):
    m8 = free_module(z8, 1)
    assert not elementwise_reduced_check(m8, ideal(z8, [2]))
    m6 = free_module(z6, 1)
    assert elementwise_reduced_check(m6, ideal(z6, [2]))
    assert elementwise_reduced_check(m6, ideal(z6, [0]))
    m4 = free_module(z4, 1)
    assert not elementwise_coreduced_check(m4, ideal(z4, [2]))
    assert elementwise_coreduced_check(m6, ideal(z6, [3]))
    assert elementwise_coreduced_check(m4, ideal(z4, [0]))


def test_elementwise_checks_over_z(zz):
    m = presentation(zz, 1, [[6]])
    assert elementwise_reduced_check(m, ideal(zz, [2]))
    assert not elementwise_reduced_check(presentation(zz, 1, [[4]]),
                                         ideal(zz, [2]))


def test_oracle_agrees_with_engine_randomly():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(2, 16)
        ring = ModularRing(n)
        g = rng.randint(1, 2)
        m = presentation(ring, g, [[rng.randrange(n) for _ in range(g)]
                                   for _ in range(rng.randint(0, 2))])
        i = ideal(ring, [rng.randrange(n)])
        assert is_reduced(m, i) == elementwise_reduced_check(m, i)
        assert is_coreduced(m, i) == elementwise_coreduced_check(m, i)


def test_brute_force_homs_examples(zz):
    maps = brute_force_homs(presentation(zz, 1, [[4]]),
                            presentation(zz, 1, [[6]]))
    assert len(maps) == 2
    assert len(brute_force_homs(zero_module(zz),
                                presentation(zz, 1, [[5]]))) == 1
    maps = brute_force_homs(presentation(zz, 1, [[2]]),
                            presentation(zz, 1, [[2]]))
    assert len(maps) == 2


def test_brute_force_hom_count_matches_hom_module(zz):
    rng = random.Random(17)
    for _ in range(10):
        dm = [rng.randint(1, 6) for _ in range(rng.randint(1, 2))]
        dn = [rng.randint(1, 6) for _ in range(rng.randint(1, 2))]
        m = presentation(zz, len(dm),
                         [[dm[i] if i == j else 0 for j in range(len(dm))]
                          for i in range(len(dm))])
        n = presentation(zz, len(dn),
                         [[dn[i] if i == j else 0 for j in range(len(dn))]
                          for i in range(len(dn))])
        assert module_order(hom_module(m, n).module) == \
            len(brute_force_homs(m, n, 8192))


def test_ideal_residues():
    assert ideal_residues(ideal(IntegerRing(), [2]), 6) == [0, 2, 4]
    assert ideal_residues(ideal(ModularRing(6), [3]), 6) == [0, 3]
    assert ideal_residues(ideal(IntegerRing(), [0]), 4) == [0]


def test_coreduced_ring_is_reduced():
    for n in range(2, 40):
        assert coreduced_ring_is_reduced_check(ModularRing(n))
    with pytest.raises(UnsupportedQuery):
        coreduced_ring_is_reduced_check(IntegerRing())


def test_all_elements_mode_is_strictly_stronger():
    # Walking every ideal element is stronger than walking the canonical
    # generator: over Z/12 at the idempotent ideal (3), the cyclic module
    # of order 4 satisfies the annihilator and scalar submodule
    # conditions, yet the scalar 6 in (3) has a degenerate square
    # (6^2 = 0), so its kernel jumps and its image collapses.
    ring = ModularRing(12)
    m = presentation(ring, 1, [[4]])
    i = ideal(ring, [3])
    assert is_reduced(m, i) and is_coreduced(m, i)
    assert elementwise_reduced_check(m, i)
    assert elementwise_coreduced_check(m, i)
    assert not elementwise_reduced_check(m, i, all_elements=True)
    assert not elementwise_coreduced_check(m, i, all_elements=True)


def test_all_elements_mode_agrees_on_squarefree_moduli():
    rng = random.Random(12)
    for n in (2, 3, 5, 6, 10, 14, 15, 21, 30):
        ring = ModularRing(n)
        for _ in range(6):
            g = rng.randint(1, 2)
            m = presentation(ring, g, [[rng.randrange(n) for _ in range(g)]
                                       for _ in range(rng.randint(0, 2))])
            i = ideal(ring, [rng.randrange(n)])
            assert elementwise_reduced_check(m, i, all_elements=True) == \
                is_reduced(m, i)
            assert elementwise_coreduced_check(m, i, all_elements=True) == \
                is_coreduced(m, i)


def test_colon_and_scalar_images_match_set_computation(zz):
    from redcor.modules import colon_annihilator, scalar_submodule
    rng = random.Random(23)
    for _ in range(12):
        n = rng.randint(2, 12)
        ring = ModularRing(n)
        g = rng.randint(1, 2)
        m = presentation(ring, g, [[rng.randrange(n) for _ in range(g)]
                                   for _ in range(rng.randint(0, 2))])
        i = ideal(ring, [rng.randrange(n)])
        table = enumerate_module(m)
        residues = ideal_residues(i, n)
        killed = {x for x in table.elements
                  if all(not any(table.scale(a, x)) for a in residues)}
        scaled = {table.scale(a, x) for a in residues for x in table.elements}
        # close the scalar image under addition
        frontier = list(scaled)
        while frontier:
            u = frontier.pop()
            for v in list(scaled):
                w = table.add(u, v)
                if w not in scaled:
                    scaled.add(w)
                    frontier.append(w)
        colon = colon_annihilator(m, i)
        colon_set = _span_set(table, colon.gen_rows)
        assert colon_set == killed
        sub = scalar_submodule(m, i)
        assert _span_set(table, sub.submodule.gen_rows) == scaled


def _span_set(table, rows):
    coords = [table.to_coords(r) for r in rows]
    span = {table.zero()}
    frontier = [table.zero()]
    while frontier:
        base = frontier.pop()
        for c in coords:
            for k in range(1, 13):
                nxt = table.add(base, table.scale(k, c))
                if nxt not in span:
                    span.add(nxt)
                    frontier.append(nxt)
    return span
