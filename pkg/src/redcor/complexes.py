"""Chain complexes, Koszul complexes, cohomology, resolutions and Tor.

Complexes are cohomologically indexed on an integer interval with
differentials raising the degree by one; the Koszul complex of a length
n sequence lives in degrees -n..0.  Every constructor asserts that
consecutive differentials compose to zero and that chain-map squares
commute -- these are checks, not assumptions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (BadExponents, EmptySequence, IllFormed, MixedRings,
                     OutOfRange)
from .ideals import Ideal, ideal_equal, ideal_power
from .modules import (
    ModuleMap,
    Presentation,
    free_module,
    is_zero_map,
    is_zero_module,
    map_analyze,
    quotient_by_ideal,
    row_mul,
    rowspan_ops,
    subquotient,
    syzygies,
    _block_diag_relations,
)
from .rings import Ring


@dataclass(frozen=True)
class ChainComplex:
    """Terms indexed lo..hi with differentials d_p : term(p) -> term(p+1)."""

    lo: int
    hi: int
    terms: tuple          # Presentation per degree lo..hi
    diffs: tuple          # ModuleMap per degree lo..hi-1

    def __post_init__(self):
        if len(self.terms) != self.hi - self.lo + 1:
            raise IllFormed("term count disagrees with the degree interval")
        if len(self.diffs) != max(0, self.hi - self.lo):
            raise IllFormed("differential count disagrees with the interval")
        for k in range(len(self.diffs) - 1):
            composite = ModuleMap(
                self.diffs[k].source,
                self.diffs[k + 1].target,
                _matmul(self.diffs[k].source.ring,
                        self.diffs[k].matrix, self.diffs[k + 1].matrix),
            )
            if not is_zero_map(composite):
                raise IllFormed("differentials do not compose to zero")

    def term(self, p: int) -> Presentation:
        if not self.lo <= p <= self.hi:
            raise OutOfRange(f"degree {p} outside [{self.lo}, {self.hi}]")
        return self.terms[p - self.lo]

    def diff(self, p: int) -> ModuleMap | None:
        """d_p, or None when either endpoint is outside the interval."""
        if self.lo <= p < self.hi:
            return self.diffs[p - self.lo]
        return None


def _matmul(ring, a, b):
    if not a:
        return ()
    if not b:
        return tuple(() for _ in a)
    cols = len(b[0])
    out = []
    for row in a:
        acc = [ring.zero()] * cols
        for k, x in enumerate(row):
            if ring.is_zero(x):
                continue
            for j in range(cols):
                acc[j] = ring.add(acc[j], ring.mul(x, b[k][j]))
        out.append(tuple(acc))
    return tuple(out)


@dataclass(frozen=True)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    components: tuple     # ModuleMap per shared degree lo..hi

    def __post_init__(self):
        if (self.source.lo, self.source.hi) != (self.target.lo, self.target.hi):
            raise IllFormed("chain map needs complexes on the same interval")
        for p in range(self.source.lo, self.source.hi):
            idx = p - self.source.lo
            f_then_d = _matmul(
                self.components[idx].source.ring,
                self.components[idx].matrix, self.target.diffs[idx].matrix)
            d_then_f = _matmul(
                self.components[idx].source.ring,
                self.source.diffs[idx].matrix, self.components[idx + 1].matrix)
            probe = ModuleMap(self.source.terms[idx],
                              self.target.terms[idx + 1],
                              tuple(tuple(a) for a in _sub_rows(
                                  self.components[idx].source.ring,
                                  f_then_d, d_then_f)))
            if not is_zero_map(probe):
                raise IllFormed("chain map square does not commute")

    def component(self, p: int) -> ModuleMap:
        return self.components[p - self.source.lo]


def _sub_rows(ring, a, b):
    return [tuple(ring.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)]


# ---------------------------------------------------------------------------
# Koszul complexes


def _subsets(n: int, size: int):
    """Size-``size`` subsets of range(n) in lexicographic order."""
    import itertools
    return list(itertools.combinations(range(n), size))


def koszul_complex(ring: Ring, elements) -> ChainComplex:
    """Exterior-algebra complex on a finite sequence, degrees -n..0.

    d(e_S) = sum over t in S of (-1)^{#(s in S : s < t)} r_t e_{S - t}.
    """
    elements = [ring.canon(x) if not isinstance(x, int) else ring.from_int(x)
                for x in elements]
    n = len(elements)
    if n == 0:
        raise EmptySequence("a Koszul complex needs at least one element")
    terms = []
    for p in range(n, -1, -1):        # degree -p
        terms.append(free_module(ring, _binom(n, p)))
    diffs = []
    for p in range(n, 0, -1):         # d_{-p} : degree -p -> degree -(p-1)
        src_sets = _subsets(n, p)
        tgt_sets = {s: k for k, s in enumerate(_subsets(n, p - 1))}
        rows = []
        for s in src_sets:
            row = [ring.zero()] * len(tgt_sets)
            for pos, t in enumerate(s):
                rest = tuple(x for x in s if x != t)
                sign = -1 if pos % 2 else 1
                entry = elements[t] if sign > 0 else ring.neg(elements[t])
                col = tgt_sets[rest]
                row[col] = ring.add(row[col], entry)
            rows.append(tuple(row))
        diffs.append(ModuleMap(terms[n - p], terms[n - p + 1], tuple(rows)))
    return ChainComplex(-n, 0, tuple(terms), tuple(diffs))


def _binom(n: int, k: int) -> int:
    from math import comb
    return comb(n, k)


def koszul_transition(ring: Ring, elements, i: int, j: int) -> ChainMap:
    """The chain map K(R; r^j) -> K(R; r^i) for exponents j >= i >= 1:
    on the basis vector e_S it multiplies by prod_{t in S} r_t^{j-i}."""
    if not (1 <= i <= j):
        raise BadExponents("need j >= i >= 1")
    elements = [ring.canon(x) if not isinstance(x, int) else ring.from_int(x)
                for x in elements]
    n = len(elements)
    src = koszul_complex(ring, [ring.power(r, j) for r in elements])
    tgt = koszul_complex(ring, [ring.power(r, i) for r in elements])
    comps = []
    for p in range(n, -1, -1):
        sets = _subsets(n, p)
        rows = []
        for a, s in enumerate(sets):
            row = [ring.zero()] * len(sets)
            factor = ring.one()
            for t in s:
                factor = ring.mul(factor, ring.power(elements[t], j - i))
            row[a] = factor
            rows.append(tuple(row))
        comps.append(ModuleMap(src.terms[n - p], tgt.terms[n - p], tuple(rows)))
    return ChainMap(src, tgt, tuple(comps))


# ---------------------------------------------------------------------------
# cohomology


@dataclass(frozen=True)
class Cohomology:
    module: Presentation
    representatives: tuple   # rows in the ambient of the degree-p term


def cohomology(complex_: ChainComplex, p: int) -> Cohomology:
    """H^p = ker(d_p) / im(d_{p-1}) as a subquotient of the degree-p term."""
    if not complex_.lo <= p <= complex_.hi:
        raise OutOfRange(f"degree {p} outside [{complex_.lo}, {complex_.hi}]")
    term = complex_.term(p)
    ring = term.ring
    out = complex_.diff(p)
    if out is None:
        kernel_rows = tuple(
            tuple(ring.one() if k == idx else ring.zero()
                  for k in range(term.gens))
            for idx in range(term.gens))
    else:
        stacked = out.matrix + out.target.relations
        kernel_rows = tuple(
            v[: term.gens]
            for v in syzygies(ring, stacked, out.target.gens))
        kernel_rows = tuple(r for r in kernel_rows
                            if any(not ring.is_zero(x) for x in r))
    incoming = complex_.diff(p - 1)
    denom = incoming.matrix if incoming is not None else ()
    module, reps = subquotient(term, kernel_rows, denom)
    return Cohomology(module, reps)


def induced_cohomology_map(chain_map: ChainMap, p: int) -> ModuleMap:
    """The map H^p(source) -> H^p(target) induced by a chain map."""
    h_src = cohomology(chain_map.source, p)
    h_tgt = cohomology(chain_map.target, p)
    comp = chain_map.component(p)
    ring = comp.source.ring
    tgt_term = chain_map.target.term(p)
    incoming = chain_map.target.diff(p - 1)
    denom = (incoming.matrix if incoming is not None else ()) + tgt_term.relations
    ops = rowspan_ops(ring, tuple(h_tgt.representatives) + tuple(denom),
                      tgt_term.gens)
    rows = []
    for rep in h_src.representatives:
        image = row_mul(ring, rep, comp.matrix) if comp.matrix else \
            tuple(ring.zero() for _ in range(tgt_term.gens))
        cert = ops.certificate(image)
        if cert is None:
            raise IllFormed("image of a cocycle is not a cocycle")
        rows.append(tuple(cert[: len(h_tgt.representatives)]))
    phi = ModuleMap(h_src.module, h_tgt.module, tuple(rows))
    if not map_analyze(phi).well_defined:
        raise IllFormed("induced cohomology map is ill-defined")
    return phi


# ---------------------------------------------------------------------------
# pro-zero towers / weak proregularity


@dataclass(frozen=True)
class ProZeroVerdict:
    pro_zero: bool
    i_bound: int
    j_bound: int
    witnesses: tuple          # ((i, p, j), ...) with zero transition at j
    failure: tuple | None     # (i, p, j_bound) for the first missing witness

    def witness_for(self, i: int, p: int):
        for (wi, wp, wj) in self.witnesses:
            if (wi, wp) == (i, p):
                return wj
        return None


def weak_proregularity_check(ring: Ring, elements, i_bound: int = 4,
                             j_bound: int = 8) -> ProZeroVerdict:
    """Bounded pro-zero check of the negative Koszul cohomology towers.

    For each degree p < 0 and each i <= i_bound, search j in [i, j_bound]
    making the induced map H^p(K(r^j)) -> H^p(K(r^i)) zero.  A failure
    is reported as inconclusive, never as a disproof.
    """
    elements = [ring.canon(x) if not isinstance(x, int) else ring.from_int(x)
                for x in elements]
    n = len(elements)
    if n == 0:
        raise EmptySequence("a Koszul complex needs at least one element")
    witnesses = []
    for p in range(-n, 0):
        for i in range(1, i_bound + 1):
            target_h = cohomology(
                koszul_complex(ring, [ring.power(r, i) for r in elements]), p)
            if is_zero_module(target_h.module):
                witnesses.append((i, p, i))
                continue
            found = None
            for j in range(i, j_bound + 1):
                phi = induced_cohomology_map(
                    koszul_transition(ring, elements, i, j), p)
                if is_zero_map(phi):
                    found = j
                    break
            if found is None:
                return ProZeroVerdict(False, i_bound, j_bound,
                                      tuple(witnesses), (i, p, j_bound))
            witnesses.append((i, p, found))
    return ProZeroVerdict(True, i_bound, j_bound, tuple(witnesses), None)


# ---------------------------------------------------------------------------
# free resolutions and Tor


def free_resolution(m: Presentation, length: int) -> ChainComplex:
    """F_length -> ... -> F_1 -> F_0 with F_0 = R^g and F_1 the relation
    matrix, continued by iterated syzygies; stored in degrees -length..0."""
    ring = m.ring
    terms = [free_module(ring, m.gens)]
    mats = []
    current = m.relations
    width = m.gens
    for _ in range(length):
        current = tuple(tuple(r) for r in current)
        terms.append(free_module(ring, len(current)))
        mats.append(current)
        nxt = syzygies(ring, current, width) if current else ()
        width = len(current)
        current = nxt
    terms.reverse()
    diffs = []
    for k, mat in enumerate(reversed(mats)):
        diffs.append(ModuleMap(terms[k], terms[k + 1], mat))
    return ChainComplex(-length, 0, tuple(terms), tuple(diffs))


def _tensor_with(complex_: ChainComplex, n: Presentation) -> ChainComplex:
    """Tensor a complex of free modules with N, degreewise."""
    ring = n.ring
    terms = []
    for t in complex_.terms:
        terms.append(Presentation(ring, t.gens * n.gens,
                                  _block_diag_relations(n, t.gens)))
    diffs = []
    for k, d in enumerate(complex_.diffs):
        g_src, g_tgt = d.source.gens, d.target.gens
        rows = []
        for i in range(g_src):
            for j in range(n.gens):
                row = [ring.zero()] * (g_tgt * n.gens)
                for t in range(g_tgt):
                    row[t * n.gens + j] = d.matrix[i][t]
                rows.append(tuple(row))
        diffs.append(ModuleMap(terms[k], terms[k + 1], tuple(rows)))
    return ChainComplex(complex_.lo, complex_.hi, tuple(terms), tuple(diffs))


def tor(m: Presentation, n: Presentation, index: int) -> Presentation:
    """Tor_i(M, N) as the degree -i cohomology of a free resolution of M
    tensored with N."""
    if m.ring != n.ring:
        raise MixedRings("Tor needs both modules over one ring")
    if index < 0:
        raise OutOfRange("Tor index must be nonnegative")
    resolution = free_resolution(m, index + 1)
    tensored = _tensor_with(resolution, n)
    return cohomology(tensored, -index).module


# ---------------------------------------------------------------------------
# strong idempotency


@dataclass(frozen=True)
class StrongIdempotencyVerdict:
    holds: bool
    bound: int
    fails_at: int | None = None
    witness_invariants: tuple | None = None


def strongly_idempotent_check(i: Ideal, i_bound: int = 4) -> StrongIdempotencyVerdict:
    """Tor_k(R/I, R/I) = 0 for 1 <= k <= i_bound (bounded verification)."""
    if i_bound < 1:
        raise OutOfRange("bound must be at least 1")
    r_mod_i = quotient_by_ideal(i.ring, i)
    for k in range(1, i_bound + 1):
        t = tor(r_mod_i, r_mod_i, k)
        if not is_zero_module(t):
            return StrongIdempotencyVerdict(False, i_bound, fails_at=k,
                                            witness_invariants=(t.gens,
                                                                len(t.relations)))
    return StrongIdempotencyVerdict(True, i_bound)


def idempotent(i: Ideal) -> bool:
    return ideal_equal(i, ideal_power(i, 2))
