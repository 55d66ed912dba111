"""Finitely presented modules and their morphisms.

A module is presented as ``R^g / rowspan(A)`` for a relation matrix
``A``; elements are generator row vectors taken modulo the row span.
Everything reduces to two primitives on row spans -- membership with
certificate and left kernel -- provided by an integer echelon basis for
Z and Z/n (composite moduli lift to Z and adjoin ``n`` times the unit
rows) and by an augmented module Groebner basis for polynomial rings.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import IllFormed, MixedRings, TooLarge, UnsupportedQuery, UnsupportedRing
from .grobner import PolyRowOps
from .ideals import Ideal
from .intlinalg import ZRowBasis, smith_form
from .rings import IntegerRing, ModularRing, PolynomialRing, Ring


# ---------------------------------------------------------------------------
# row-span operations, uniform over the ring tower


class _ZRowOps:
    def __init__(self, ring, rows, width):
        self.ring = ring
        self.width = width
        self.nrows = len(rows)
        lifted = [list(r) for r in rows]
        if isinstance(ring, ModularRing):
            n = ring.modulus
            for j in range(width):
                lifted.append([n if k == j else 0 for k in range(width)])
        self.total_rows = len(lifted)
        aug = [row + [1 if j == i else 0 for j in range(self.total_rows)]
               for i, row in enumerate(lifted)]
        self.basis = ZRowBasis(width, aug)

    def _canon(self, row):
        return tuple(self.ring.canon(x) for x in row)

    def reduce(self, row):
        return self._canon(self.basis.reduce_left(list(row)))

    def contains(self, row):
        return not any(self.reduce(row))

    def certificate(self, row):
        cert = self.basis.certificate(list(row), self.total_rows)
        if cert is None:
            return None
        return self._canon(cert[: self.nrows])

    def kernel(self):
        out = []
        seen = set()
        for v in self.basis.kernel():
            row = self._canon(v[: self.nrows])
            if any(row) and row not in seen:
                seen.add(row)
                out.append(row)
        return tuple(out)


class _PolyOpsAdapter:
    def __init__(self, ring, rows, width):
        self.ops = PolyRowOps(ring, rows, width)

    def reduce(self, row):
        return self.ops.reduce(row)

    def contains(self, row):
        return self.ops.contains(row)

    def certificate(self, row):
        return self.ops.certificate(row)

    def kernel(self):
        out = []
        seen = set()
        for row in self.ops.kernel():
            if any(p for p in row) and row not in seen:
                seen.add(row)
                out.append(row)
        return tuple(out)


@functools.lru_cache(maxsize=None)
def _rowops_cached(ring, rows, width):
    if isinstance(ring, PolynomialRing):
        return _PolyOpsAdapter(ring, rows, width)
    return _ZRowOps(ring, rows, width)


def rowspan_ops(ring: Ring, rows, width: int):
    rows = tuple(tuple(r) for r in rows)
    return _rowops_cached(ring, rows, width)


def syzygies(ring: Ring, rows, width: int):
    """Rows generating {v : v * A = 0} for the matrix A with the given rows."""
    return rowspan_ops(ring, rows, width).kernel()


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    """A finitely presented module R^gens / rowspan(relations)."""

    ring: Ring
    gens: int
    relations: tuple

    def __post_init__(self):
        for row in self.relations:
            if len(row) != self.gens:
                raise IllFormed("relation row width disagrees with ambient rank")

    @property
    def span(self):
        return rowspan_ops(self.ring, self.relations, self.gens)


def presentation(ring: Ring, gens: int, rows=()) -> Presentation:
    """Build a presentation, canonicalizing entries (ints and strings allowed)."""
    canon_rows = []
    for row in rows:
        canon = []
        for x in row:
            if isinstance(x, int):
                canon.append(ring.from_int(x))
            elif isinstance(x, str):
                canon.append(ring.parse(x))
            else:
                canon.append(ring.canon(x))
        canon_rows.append(tuple(canon))
    return Presentation(ring, gens, tuple(canon_rows))


def free_module(ring: Ring, rank: int) -> Presentation:
    return Presentation(ring, rank, ())


def zero_module(ring: Ring) -> Presentation:
    return Presentation(ring, 0, ())


def cyclic_module(ring: Ring, annihilator) -> Presentation:
    """R / (a) for a ring element, int, or element string."""
    return presentation(ring, 1, [[annihilator]])


def quotient_by_ideal(ring: Ring, ideal: Ideal) -> Presentation:
    """R / I presented by the ideal's completed basis."""
    return Presentation(ring, 1, tuple((g,) for g in ideal.basis))


def is_zero_module(m: Presentation) -> bool:
    if m.gens == 0:
        return True
    ops = m.span
    unit = [m.ring.zero()] * m.gens
    for i in range(m.gens):
        unit[i] = m.ring.one()
        if not ops.contains(tuple(unit)):
            return False
        unit[i] = m.ring.zero()
    return True


def prune_if_zero(m: Presentation) -> Presentation:
    return zero_module(m.ring) if m.gens and is_zero_module(m) else m


def _require_same_ring(*objs):
    rings = {o.ring for o in objs}
    if len(rings) > 1:
        raise MixedRings("operands live over different rings")


# ---------------------------------------------------------------------------
# matrices over a ring (lists of payload rows)


def mat_identity(ring, n):
    return tuple(tuple(ring.one() if i == j else ring.zero() for j in range(n))
                 for i in range(n))


def mat_zero(ring, r, c):
    return tuple(tuple(ring.zero() for _ in range(c)) for _ in range(r))


def mat_mul(ring, a, b):
    if a and b and len(a[0]) != len(b):
        raise IllFormed("matrix dimensions disagree")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ring.zero()] * cols
        for k, x in enumerate(row):
            if ring.is_zero(x):
                continue
            brow = b[k]
            for j in range(cols):
                acc[j] = ring.add(acc[j], ring.mul(x, brow[j]))
        out.append(tuple(acc))
    return tuple(out)


def mat_add(ring, a, b):
    return tuple(tuple(ring.add(x, y) for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def mat_scale(ring, c, a):
    return tuple(tuple(ring.mul(c, x) for x in row) for row in a)


def row_mul(ring, row, matrix):
    return mat_mul(ring, (tuple(row),), matrix)[0]


# ---------------------------------------------------------------------------
# module maps


@dataclass(frozen=True)
class ModuleMap:
    """Morphism of presentations given by a generator matrix.

    ``matrix`` has one row per source generator; the i-th row is the
    image of the i-th generator, written in the target's ambient
    coordinates.
    """

    source: Presentation
    target: Presentation
    matrix: tuple

    def __post_init__(self):
        if len(self.matrix) != self.source.gens:
            raise IllFormed("map matrix must have one row per source generator")
        for row in self.matrix:
            if len(row) != self.target.gens:
                raise IllFormed("map matrix row width disagrees with target rank")

    def __call__(self, row):
        """Image of an element (source ambient row) as a target ambient row."""
        return row_mul(self.source.ring, row, self.matrix) if self.matrix \
            else tuple(self.target.ring.zero() for _ in range(self.target.gens))


def module_map(source: Presentation, target: Presentation, rows) -> ModuleMap:
    _require_same_ring(source, target)
    ring = source.ring
    canon = []
    for row in rows:
        canon.append(tuple(
            ring.from_int(x) if isinstance(x, int)
            else ring.parse(x) if isinstance(x, str)
            else ring.canon(x)
            for x in row))
    return ModuleMap(source, target, tuple(canon))


def identity_map(m: Presentation) -> ModuleMap:
    return ModuleMap(m, m, mat_identity(m.ring, m.gens))


def zero_map(m: Presentation, n: Presentation) -> ModuleMap:
    return ModuleMap(m, n, mat_zero(m.ring, m.gens, n.gens))


def scalar_map(m: Presentation, a) -> ModuleMap:
    """Multiplication by the ring element a, as an endomorphism of M."""
    a = m.ring.canon(a) if not isinstance(a, int) else m.ring.from_int(a)
    return ModuleMap(m, m, mat_scale(m.ring, a, mat_identity(m.ring, m.gens)))


def compose(f: ModuleMap, g: ModuleMap) -> ModuleMap:
    """g after f (apply f first)."""
    if f.target is not g.source and f.target != g.source:
        raise IllFormed("maps do not compose: target of first != source of second")
    if f.target.gens == 0:
        return zero_map(f.source, g.target)
    return ModuleMap(f.source, g.target, mat_mul(f.source.ring, f.matrix, g.matrix))


def well_definedness_certificate(f: ModuleMap):
    """Matrix X with A_src * P = X * A_tgt, or None if f is ill-defined."""
    ops = f.target.span
    certs = []
    for row in f.source.relations:
        image = f(row)
        cert = ops.certificate(image)
        if cert is None:
            return None
        certs.append(cert)
    return tuple(certs)


@dataclass(frozen=True)
class MapAnalysis:
    well_defined: bool
    injective: bool
    surjective: bool

    @property
    def iso(self):
        return self.well_defined and self.injective and self.surjective


@functools.lru_cache(maxsize=None)
def map_analyze(f: ModuleMap) -> MapAnalysis:
    """Decide well-definedness, injectivity and surjectivity of a map."""
    wd = well_definedness_certificate(f) is not None
    if not wd:
        return MapAnalysis(False, False, False)
    ring = f.source.ring
    # kernel: {u : u*P in rowspan(A_tgt)} modulo rowspan(A_src)
    stacked = f.matrix + f.target.relations
    src_ops = f.source.span
    injective = True
    for v in syzygies(ring, stacked, f.target.gens):
        if not src_ops.contains(v[: f.source.gens]):
            injective = False
            break
    # surjectivity: every target generator reachable modulo relations
    reach = rowspan_ops(ring, f.matrix + f.target.relations, f.target.gens)
    surjective = True
    unit = [ring.zero()] * f.target.gens
    for j in range(f.target.gens):
        unit[j] = ring.one()
        if not reach.contains(tuple(unit)):
            surjective = False
            break
        unit[j] = ring.zero()
    return MapAnalysis(True, injective, surjective)


def is_zero_map(f: ModuleMap) -> bool:
    ops = f.target.span
    return all(ops.contains(row) for row in f.matrix)


def maps_equal(f: ModuleMap, g: ModuleMap) -> bool:
    if f.source != g.source or f.target != g.target:
        return False
    ring = f.source.ring
    ops = f.target.span
    return all(
        ops.contains(tuple(ring.sub(x, y) for x, y in zip(rf, rg)))
        for rf, rg in zip(f.matrix, g.matrix))


def invert_iso(f: ModuleMap) -> ModuleMap:
    """Inverse of an isomorphism (raises IllFormed if f is not one)."""
    if not map_analyze(f).iso:
        raise IllFormed("map is not an isomorphism")
    ring = f.source.ring
    ops = rowspan_ops(ring, f.matrix + f.target.relations, f.target.gens)
    rows = []
    unit = [ring.zero()] * f.target.gens
    for j in range(f.target.gens):
        unit[j] = ring.one()
        cert = ops.certificate(tuple(unit))
        unit[j] = ring.zero()
        rows.append(tuple(cert[: f.source.gens]))
    return ModuleMap(f.target, f.source, tuple(rows))


# ---------------------------------------------------------------------------
# submodules and subquotients


@dataclass(frozen=True)
class Submodule:
    """A submodule of ``ambient`` presented abstractly, with generator rows
    and the inclusion map."""

    ambient: Presentation
    module: Presentation
    gen_rows: tuple

    @property
    def include(self) -> ModuleMap:
        return ModuleMap(self.module, self.ambient, self.gen_rows)

    def coordinates(self, row):
        """Express an ambient row over the generators, modulo ambient
        relations; None when the element is outside the submodule."""
        ring = self.ambient.ring
        ops = rowspan_ops(ring, self.gen_rows + self.ambient.relations,
                          self.ambient.gens)
        cert = ops.certificate(tuple(row))
        if cert is None:
            return None
        return tuple(cert[: len(self.gen_rows)])

    def contains_rows(self, rows) -> bool:
        ops = rowspan_ops(self.ambient.ring,
                          self.gen_rows + self.ambient.relations,
                          self.ambient.gens)
        return all(ops.contains(tuple(r)) for r in rows)


def submodule_from_rows(ambient: Presentation, rows) -> Submodule:
    """The submodule of ``ambient`` generated by the given ambient rows."""
    ring = ambient.ring
    rows = tuple(ambient.span.reduce(tuple(r)) for r in rows)
    rows = tuple(r for r in rows if any(not ring.is_zero(x) for x in r))
    stacked = rows + ambient.relations
    rels = []
    for v in syzygies(ring, stacked, ambient.gens):
        head = v[: len(rows)]
        if any(not ring.is_zero(x) for x in head):
            rels.append(head)
    module = Presentation(ring, len(rows), tuple(rels))
    return Submodule(ambient, module, rows)


def kernel_rows_of_map(f: ModuleMap) -> tuple:
    """Generating rows (in the source ambient) of the kernel of f."""
    ring = f.source.ring
    stacked = f.matrix + f.target.relations
    rows = (v[: f.source.gens] for v in syzygies(ring, stacked, f.target.gens))
    return tuple(r for r in rows if any(not ring.is_zero(x) for x in r))


def kernel_of_map(f: ModuleMap) -> Submodule:
    """Kernel of f as a submodule of its source."""
    return submodule_from_rows(f.source, kernel_rows_of_map(f))


def image_of_map(f: ModuleMap) -> Submodule:
    return submodule_from_rows(f.target, f.matrix)


def cokernel_of_map(f: ModuleMap) -> Presentation:
    return Presentation(f.target.ring, f.target.gens,
                        f.target.relations + f.matrix)


def subquotient(ambient: Presentation, numer_rows, denom_rows):
    """Presentation of span(numer)/span(denom) inside ambient, plus the
    representative rows used as its generators."""
    ring = ambient.ring
    numer = tuple(tuple(r) for r in numer_rows)
    denom = tuple(tuple(r) for r in denom_rows) + ambient.relations
    rels = []
    for v in syzygies(ring, numer + denom, ambient.gens):
        head = v[: len(numer)]
        if any(not ring.is_zero(x) for x in head):
            rels.append(head)
    return Presentation(ring, len(numer), tuple(rels)), numer


def submodule_leq(ambient: Presentation, rows_a, rows_b) -> bool:
    """span(rows_a) <= span(rows_b) inside the ambient module."""
    ops = rowspan_ops(ambient.ring,
                      tuple(tuple(r) for r in rows_b) + ambient.relations,
                      ambient.gens)
    return all(ops.contains(tuple(r)) for r in rows_a)


def submodules_equal(ambient: Presentation, rows_a, rows_b) -> bool:
    return (submodule_leq(ambient, rows_a, rows_b)
            and submodule_leq(ambient, rows_b, rows_a))


# ---------------------------------------------------------------------------
# hom, tensor, direct sum


@dataclass(frozen=True)
class HomModule:
    """Hom_R(M, N) as a finitely presented module.

    Generators are flattened g_M x g_N matrices (``gen_rows``); realize
    turns a generator index into an explicit well-defined ModuleMap, and
    coordinates writes an arbitrary well-defined map over the generators.
    """

    source: Presentation
    target: Presentation
    module: Presentation
    gen_rows: tuple

    def realize(self, index: int) -> ModuleMap:
        return self.element_map(self.gen_rows[index])

    def element_map(self, flat_row) -> ModuleMap:
        g_m, g_n = self.source.gens, self.target.gens
        matrix = tuple(tuple(flat_row[i * g_n + j] for j in range(g_n))
                       for i in range(g_m))
        return ModuleMap(self.source, self.target, matrix)

    def combination_map(self, coeffs) -> ModuleMap:
        ring = self.source.ring
        width = self.source.gens * self.target.gens
        flat = [ring.zero()] * width
        for c, row in zip(coeffs, self.gen_rows):
            if ring.is_zero(c):
                continue
            for k in range(width):
                flat[k] = ring.add(flat[k], ring.mul(c, row[k]))
        return self.element_map(tuple(flat))

    def coordinates(self, f: ModuleMap):
        """Coordinates of a well-defined map f: M -> N in this Hom module."""
        ring = self.source.ring
        flat = tuple(x for row in f.matrix for x in row)
        ambient_rels = _block_diag_relations(self.target, self.source.gens)
        ops = rowspan_ops(ring, self.gen_rows + ambient_rels,
                          self.source.gens * self.target.gens)
        cert = ops.certificate(flat)
        if cert is None:
            raise IllFormed("map is not in the computed Hom module")
        return tuple(cert[: len(self.gen_rows)])


def _block_diag_relations(n: Presentation, copies: int) -> tuple:
    """Relations of N^copies with flattened index (i, j) -> i*g_N + j."""
    ring = n.ring
    g = n.gens
    rows = []
    for i in range(copies):
        for rel in n.relations:
            row = [ring.zero()] * (copies * g)
            for j, x in enumerate(rel):
                row[i * g + j] = x
            rows.append(tuple(row))
    return tuple(rows)


def hom_module(m: Presentation, n: Presentation) -> HomModule:
    """Hom_R(M, N) computed as the kernel of N^{g_M} -> N^{r_M}."""
    _require_same_ring(m, n)
    ring = m.ring
    g_m, g_n = m.gens, n.gens
    r_m = len(m.relations)
    width_src = g_m * g_n
    width_tgt = r_m * g_n
    # the ambient map sends a flattened P to the flattening of A_M * P
    f_rows = []
    for i in range(g_m):
        for j in range(g_n):
            row = [ring.zero()] * width_tgt
            for k in range(r_m):
                row[k * g_n + j] = m.relations[k][i]
            f_rows.append(tuple(row))
    target_rels = _block_diag_relations(n, r_m)
    stacked = tuple(f_rows) + target_rels
    gen_rows = []
    ambient_ops = rowspan_ops(ring, _block_diag_relations(n, g_m), width_src)
    seen = set()
    for v in syzygies(ring, stacked, width_tgt):
        head = ambient_ops.reduce(v[:width_src])
        if any(not ring.is_zero(x) for x in head) and head not in seen:
            seen.add(head)
            gen_rows.append(head)
    gen_rows = tuple(gen_rows)
    rels = []
    for v in syzygies(ring, gen_rows + _block_diag_relations(n, g_m), width_src):
        head = v[: len(gen_rows)]
        if any(not ring.is_zero(x) for x in head):
            rels.append(head)
    module = Presentation(ring, len(gen_rows), tuple(rels))
    return HomModule(m, n, module, gen_rows)


def tensor_product(m: Presentation, n: Presentation) -> Presentation:
    """M (x) N with ambient index (i, j) -> i*g_N + j."""
    _require_same_ring(m, n)
    ring = m.ring
    g_m, g_n = m.gens, n.gens
    rows = []
    for rel in m.relations:            # A_M (x) id
        for j in range(g_n):
            row = [ring.zero()] * (g_m * g_n)
            for i, x in enumerate(rel):
                row[i * g_n + j] = x
            rows.append(tuple(row))
    rows.extend(_block_diag_relations(n, g_m))   # id (x) A_N
    return prune_if_zero(Presentation(ring, g_m * g_n, tuple(rows)))


def direct_sum(m: Presentation, n: Presentation) -> Presentation:
    _require_same_ring(m, n)
    ring = m.ring
    g = m.gens + n.gens
    rows = []
    for rel in m.relations:
        rows.append(tuple(rel) + tuple(ring.zero() for _ in range(n.gens)))
    for rel in n.relations:
        rows.append(tuple(ring.zero() for _ in range(m.gens)) + tuple(rel))
    return Presentation(ring, g, tuple(rows))


# ---------------------------------------------------------------------------
# colon annihilators and scalar submodules


def _colon_map(m: Presentation, ideal: Ideal) -> ModuleMap | None:
    """The map x -> (a_1 x, ..., a_s x) over the ideal's completed basis,
    or None for the zero ideal (whose annihilator is all of M)."""
    _require_same_ring(m, ideal)
    ring = m.ring
    basis = ideal.basis
    if not basis:
        return None
    g = m.gens
    f_rows = []
    for i in range(g):
        row = [ring.zero()] * (len(basis) * g)
        for k, a in enumerate(basis):
            row[k * g + i] = a
        f_rows.append(tuple(row))
    target = Presentation(ring, len(basis) * g,
                          _block_diag_relations(m, len(basis)))
    return ModuleMap(m, target, tuple(f_rows))


def colon_rows(m: Presentation, ideal: Ideal) -> tuple:
    """Generating rows of (0 :_M I) without building its presentation."""
    f = _colon_map(m, ideal)
    if f is None:
        return mat_identity(m.ring, m.gens)
    return kernel_rows_of_map(f)


def colon_annihilator(m: Presentation, ideal: Ideal) -> Submodule:
    """(0 :_M I) = {x : a*x = 0 for all a in I}, via the kernel of
    x -> (a_1 x, ..., a_s x) over the ideal's completed basis."""
    f = _colon_map(m, ideal)
    if f is None:
        return submodule_from_rows(m, mat_identity(m.ring, m.gens))
    return kernel_of_map(f)


@dataclass(frozen=True)
class ScalarSubmodule:
    submodule: Submodule          # IM with its inclusion into M
    quotient: Presentation        # M / IM
    project: ModuleMap            # canonical surjection M -> M/IM


def scalar_rows(m: Presentation, ideal: Ideal) -> tuple:
    """Generating rows a*e_i of IM over the ideal's completed basis."""
    _require_same_ring(m, ideal)
    ring = m.ring
    rows = []
    for a in ideal.basis:
        for i in range(m.gens):
            row = [ring.zero()] * m.gens
            row[i] = a
            rows.append(tuple(row))
    return tuple(rows)


def scalar_submodule(m: Presentation, ideal: Ideal) -> ScalarSubmodule:
    """IM together with the quotient M/IM and the canonical projection."""
    rows = scalar_rows(m, ideal)
    sub = submodule_from_rows(m, rows)
    quotient = Presentation(m.ring, m.gens, m.relations + rows)
    project = ModuleMap(m, quotient, mat_identity(m.ring, m.gens))
    return ScalarSubmodule(sub, quotient, project)


# ---------------------------------------------------------------------------
# Smith normal form over the PIR bases


@dataclass(frozen=True)
class SmithForm:
    """U * A * V = D for the (lifted) relation matrix of a module over Z
    or Z/n.  ``lifted`` is the integer matrix actually diagonalized: the
    relations themselves over Z, with n times the unit rows adjoined
    over Z/n."""

    lifted: tuple
    u: tuple
    d: tuple
    v: tuple
    invariants: tuple      # nonzero diagonal entries, divisibility chain
    free_rank: int


@functools.lru_cache(maxsize=None)
def smith_invariants(m: Presentation) -> SmithForm:
    ring = m.ring
    if isinstance(ring, IntegerRing):
        lifted = [list(row) for row in m.relations]
    elif isinstance(ring, ModularRing):
        n = ring.modulus
        lifted = [list(row) for row in m.relations]
        for j in range(m.gens):
            lifted.append([n if k == j else 0 for k in range(m.gens)])
    else:
        raise UnsupportedRing("Smith form requires a Z or Z/n base ring")
    u, d, v = smith_form([row[:] for row in lifted])
    diag = [d[i][i] for i in range(min(len(lifted), m.gens))]
    invariants = tuple(x for x in diag if x)
    if isinstance(ring, ModularRing):
        free_rank = sum(1 for x in invariants if x == ring.modulus)
    else:
        free_rank = m.gens - len(invariants)
    return SmithForm(
        tuple(tuple(r) for r in lifted),
        tuple(tuple(r) for r in u),
        tuple(tuple(r) for r in d),
        tuple(tuple(r) for r in v),
        invariants,
        free_rank,
    )


def iso_invariants(m: Presentation):
    """(nontrivial invariant factors, free rank): the isomorphism type of
    a module over Z or Z/n."""
    ring = m.ring
    sf = smith_invariants(m)
    factors = tuple(x for x in sf.invariants if x != 1)
    if isinstance(ring, ModularRing):
        return factors, 0
    return factors, sf.free_rank


def same_iso_class(m: Presentation, n: Presentation) -> bool:
    _require_same_ring(m, n)
    return iso_invariants(m) == iso_invariants(n)


def module_order(m: Presentation) -> int | None:
    """Number of elements for a finite module over Z or Z/n, else None."""
    factors, free = iso_invariants(m)
    if free:
        return None
    out = 1
    for x in factors:
        out *= x
    return out


def describe_module(m: Presentation) -> str:
    """Short human-readable isomorphism description where decidable."""
    ring = m.ring
    if isinstance(ring, (IntegerRing, ModularRing)):
        factors, free = iso_invariants(m)
        parts = [f"Z/{d}" for d in factors]
        if free == 1:
            parts.append("Z" if isinstance(ring, IntegerRing) else f"Z/{ring.modulus}")
        elif free > 1:
            base = "Z" if isinstance(ring, IntegerRing) else f"Z/{ring.modulus}"
            parts.append(f"{base}^{free}")
        return " + ".join(parts) if parts else "0"
    if is_zero_module(m):
        return "0"
    try:
        dim = len(monomial_basis(m, cap=512))
    except (UnsupportedQuery, TooLarge):
        return (f"module with {m.gens} generators and "
                f"{len(m.relations)} relations over {ring}")
    return f"{ring.field}-vector space of dimension {dim} over {ring}"


def monomial_basis(m: Presentation, cap: int = 4096):
    """Monomials (position, exponents) spanning a finite-dimensional
    module over its coefficient field; UnsupportedQuery when infinite."""
    ring = m.ring
    if not isinstance(ring, PolynomialRing):
        raise UnsupportedQuery("monomial bases exist over polynomial rings only")
    from .grobner import vec_lead
    from .rings import mono_divides
    nvars = len(ring.variables)
    leads: list[list] = [[] for _ in range(m.gens)]
    for vec in m.span.ops.reducers:
        pos, exps, _ = vec_lead(vec)
        leads[pos].append(exps)
    for pos in range(m.gens):
        for v in range(nvars):
            if not any(all(e == 0 for k, e in enumerate(exp) if k != v)
                       and exp[v] > 0 for exp in leads[pos]):
                raise UnsupportedQuery(
                    "module is not finite-dimensional over the coefficients")
    basis = []
    for pos in range(m.gens):
        frontier = [tuple(0 for _ in range(nvars))]
        seen = set(frontier)
        while frontier:
            mono = frontier.pop()
            if any(mono_divides(l, mono) for l in leads[pos]):
                continue
            basis.append((pos, mono))
            if len(basis) > cap:
                raise TooLarge(f"monomial basis exceeds cap {cap}")
            for v in range(nvars):
                child = tuple(e + (1 if k == v else 0)
                              for k, e in enumerate(mono))
                if child not in seen:
                    seen.add(child)
                    frontier.append(child)
    basis.sort(key=lambda pm: (pm[0], ring.term_key(pm[1])))
    return tuple(basis)


# ---------------------------------------------------------------------------
# tensor-hom currying


def tensor_hom_currying(a: Presentation, b: Presentation, c: Presentation):
    """The currying isomorphism Hom(A (x) B, C) -> Hom(A, Hom(B, C)),
    returned as an explicit ModuleMap between the computed Hom modules
    together with the two HomModule records."""
    _require_same_ring(a, b, c)
    ring = a.ring
    t = Presentation(ring, a.gens * b.gens, _tensor_relations(a, b))
    left = hom_module(t, c)
    h_bc = hom_module(b, c)
    right = hom_module(a, h_bc.module)
    rows = []
    for flat in left.gen_rows:
        f = left.element_map(flat)     # map T -> C
        curried = []
        for i in range(a.gens):
            block = tuple(f.matrix[i * b.gens + j] for j in range(b.gens))
            inner = ModuleMap(b, c, block)
            curried.append(h_bc.coordinates(inner))
        fhat = ModuleMap(a, h_bc.module, tuple(curried))
        rows.append(right.coordinates(fhat))
    chi = ModuleMap(left.module, right.module, tuple(rows))
    return chi, left, right, h_bc


def _tensor_relations(m: Presentation, n: Presentation) -> tuple:
    ring = m.ring
    g_m, g_n = m.gens, n.gens
    rows = []
    for rel in m.relations:
        for j in range(g_n):
            row = [ring.zero()] * (g_m * g_n)
            for i, x in enumerate(rel):
                row[i * g_n + j] = x
            rows.append(tuple(row))
    rows.extend(_block_diag_relations(n, g_m))
    return tuple(rows)
