"""Brute-force ground truth on finite modules.

Exhaustive element enumeration, independent of the syzygy/Groebner
engine: modules are enumerated through their diagonalized coordinates,
ideals through closure of residues, and every check walks actual
elements.  Shipped in the library (not just the test suite) so users can
cross-check their own instances.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd

from .errors import InfiniteModule, TooLarge, UnsupportedQuery
from .ideals import Ideal
from .intlinalg import mat_mul_int
from .modules import ModuleMap, Presentation, smith_invariants
from .rings import IntegerRing, ModularRing


@dataclass(frozen=True)
class FiniteModuleTable:
    """All elements of a finite module in diagonalized coordinates.

    ``elements`` are tuples (x_1, ..., x_g) with 0 <= x_i < d_i; ambient
    row vectors convert through the Smith transforms.
    """

    presentation: Presentation
    diagonal: tuple
    elements: tuple
    _v: tuple
    _vinv: tuple

    @property
    def size(self) -> int:
        return len(self.elements)

    def to_coords(self, ambient_row) -> tuple:
        lifted = [int(x) for x in ambient_row]
        prod = mat_mul_int([lifted], [list(r) for r in self._v])[0]
        return tuple(x % d for x, d in zip(prod, self.diagonal))

    def from_coords(self, coords) -> tuple:
        ring = self.presentation.ring
        prod = mat_mul_int([list(coords)], [list(r) for r in self._vinv])[0]
        return tuple(ring.from_int(x) for x in prod)

    def add(self, a, b) -> tuple:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.diagonal))

    def scale(self, k: int, a) -> tuple:
        return tuple((k * x) % d for x, d in zip(a, self.diagonal))

    def zero(self) -> tuple:
        return tuple(0 for _ in self.diagonal)


def enumerate_module(m: Presentation, size_cap: int = 4096) -> FiniteModuleTable:
    """Exhaustive element table; requires a finite module over Z or Z/n."""
    return _enumerate_cached(m, size_cap)


@functools.lru_cache(maxsize=None)
def _enumerate_cached(m: Presentation, size_cap: int) -> FiniteModuleTable:
    ring = m.ring
    if not isinstance(ring, (IntegerRing, ModularRing)):
        raise UnsupportedQuery("enumeration needs a Z or Z/n base ring")
    sf = smith_invariants(m)
    diag = [sf.d[i][i] if i < len(sf.d) else 0 for i in range(m.gens)]
    if any(d == 0 for d in diag):
        raise InfiniteModule("module has a free part")
    size = 1
    for d in diag:
        size *= d
        if size > size_cap:
            raise TooLarge(f"module order exceeds cap {size_cap}")
    elements = [()]
    for d in diag:
        elements = [e + (x,) for e in elements for x in range(d)]
    from .intlinalg import int_matrix_inverse
    vinv = int_matrix_inverse([list(r) for r in sf.v])
    return FiniteModuleTable(m, tuple(diag), tuple(elements),
                             sf.v, tuple(tuple(r) for r in vinv))


def _module_exponent(table: FiniteModuleTable) -> int:
    e = 1
    for d in table.diagonal:
        e = e * d // gcd(e, d)
    return max(e, 1)


def ideal_residues(i: Ideal, modulus: int) -> list[int]:
    """All residues of ideal elements modulo ``modulus`` (the scalar
    actions of the ideal on any module of that exponent)."""
    seed = {int(g) % modulus for g in i.generators}
    out = {0}
    frontier = list(seed)
    while frontier:
        a = frontier.pop()
        for b in list(out):
            s = (a + b) % modulus
            if s not in out:
                out.add(s)
                frontier.append(s)
        for r in range(modulus):
            p = (r * a) % modulus
            if p not in out:
                out.add(p)
                frontier.append(p)
    return sorted(out)


def _scalar_actions(m: Presentation, i: Ideal, table: FiniteModuleTable,
                    all_elements: bool):
    """Scalars to test, reduced through the module exponent (every
    distinct action appears exactly once).

    The default walks the ideal's completed basis: for the principal
    ideals of the supported finite rings this makes the element-wise
    kernel/image conditions provably match the annihilator/scalar
    submodule conditions.  ``all_elements`` enumerates the full ideal
    closure instead -- a strictly stronger test that can reject modules
    the submodule conditions accept (e.g. the cyclic module of order 4
    over Z/12 at the idempotent ideal (3), where the scalar 6 has a
    degenerate square).
    """
    modulus = _module_exponent(table)
    if all_elements:
        return modulus, ideal_residues(i, modulus)
    return modulus, sorted({int(g) % modulus for g in i.basis} or {0})


def elementwise_reduced_check(m: Presentation, i: Ideal,
                              size_cap: int = 4096,
                              all_elements: bool = False) -> bool:
    """Scalar by scalar: {x : ax = 0} equals {x : a^2 x = 0}, decided by
    walking every module element."""
    table = enumerate_module(m, size_cap)
    modulus, actions = _scalar_actions(m, i, table, all_elements)
    for a in actions:
        a2 = (a * a) % modulus
        for x in table.elements:
            killed_by_a = not any(table.scale(a, x))
            killed_by_a2 = not any(table.scale(a2, x))
            if killed_by_a and not killed_by_a2:
                raise AssertionError("kernel tower failed to ascend")
            if killed_by_a2 and not killed_by_a:
                return False
    return True


def elementwise_coreduced_check(m: Presentation, i: Ideal,
                                size_cap: int = 4096,
                                all_elements: bool = False) -> bool:
    """Scalar by scalar: aM equals a^2 M as element sets."""
    table = enumerate_module(m, size_cap)
    modulus, actions = _scalar_actions(m, i, table, all_elements)
    for a in actions:
        a2 = (a * a) % modulus
        image_a = {table.scale(a, x) for x in table.elements}
        image_a2 = {table.scale(a2, x) for x in table.elements}
        if image_a != image_a2:
            return False
    return True


def brute_force_homs(m: Presentation, n: Presentation,
                     size_cap: int = 4096) -> list[ModuleMap]:
    """All module maps M -> N found by trying every generator assignment."""
    table = enumerate_module(n, size_cap)
    total = table.size ** m.gens
    if total > size_cap * 16:
        raise TooLarge(f"{total} assignments exceed the search cap")
    ring = m.ring
    assignments = [()]
    for _ in range(m.gens):
        assignments = [a + (e,) for a in assignments for e in table.elements]
    maps = []
    for assign in assignments:
        ok = True
        for rel in m.relations:
            acc = table.zero()
            for coeff, target in zip(rel, assign):
                acc = table.add(acc, table.scale(int(coeff), target))
            if any(acc):
                ok = False
                break
        if ok:
            rows = tuple(table.from_coords(e) for e in assign)
            maps.append(ModuleMap(m, n, rows))
    return maps


def coreduced_ring_is_reduced_check(ring) -> bool:
    """On a finite ring: if every cyclic ideal satisfies aR = a^2 R, then
    there must be no nonzero a with a^2 = 0."""
    if not isinstance(ring, ModularRing):
        raise UnsupportedQuery("ring enumeration needs Z/n")
    n = ring.modulus
    coreduced = all(
        {(a * x) % n for x in range(n)} == {(a * a * x) % n for x in range(n)}
        for a in range(n))
    if not coreduced:
        return True
    return not any(a and (a * a) % n == 0 for a in range(n))
