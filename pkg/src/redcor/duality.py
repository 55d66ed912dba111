"""Verification harnesses: the adjunction between completion and torsion
on coreduced/reduced modules, the induced equivalence on the classes
torsion+reduced and complete+coreduced, Matlis-duality transfer laws,
the Hom/tensor semigroup table, and the Yoneda evaluation of natural
transformations out of the torsion functor.

Every isomorphism verdict is the analysis of an explicitly constructed
canonical map; over Z and Z/n the reports also carry invariant factors
as corroboration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IllFormed, MixedRings, PredicateFailed, UnsupportedQuery
from .ideals import Ideal
from .modules import (
    HomModule,
    MapAnalysis,
    ModuleMap,
    Presentation,
    compose,
    hom_module,
    invert_iso,
    is_zero_module,
    iso_invariants,
    map_analyze,
    mat_identity,
    monomial_basis,
    quotient_by_ideal,
    row_mul,
    smith_invariants,
    submodule_from_rows,
    tensor_hom_currying,
    tensor_product,
)
from .rings import IntegerRing, ModularRing, PolynomialRing
from .torsion import (
    completion,
    cyclic_ideals,
    is_complete,
    is_coreduced,
    is_reduced,
    is_torsion,
    torsion_part,
)


def _invariants_or_none(m: Presentation):
    if isinstance(m.ring, (IntegerRing, ModularRing)):
        return iso_invariants(m)
    return None


# ---------------------------------------------------------------------------
# adjunction between completion and torsion


@dataclass(frozen=True)
class AdjunctionReport:
    reduced_target: bool
    coreduced_source: bool
    left: Presentation          # Hom(completion(M), N)
    right: Presentation         # Hom(M, torsion(N))
    analysis: MapAnalysis
    left_invariants: tuple | None
    right_invariants: tuple | None

    @property
    def conclusion(self) -> bool:
        return self.analysis.iso


def gm_adjunction_check(m: Presentation, n: Presentation, i: Ideal) -> AdjunctionReport:
    """Verify Hom(completion(M), N) = Hom(M, torsion(N)) through the
    explicit tensor-hom currying map, for coreduced M and reduced N."""
    if m.ring != n.ring or m.ring != i.ring:
        raise MixedRings("adjunction data must live over one ring")
    coreduced_source = is_coreduced(m, i)
    reduced_target = is_reduced(n, i)
    if not (coreduced_source and reduced_target):
        raise PredicateFailed(
            "adjunction requires a coreduced source and a reduced target")
    r_mod_i = quotient_by_ideal(m.ring, i)
    chi, left, right, _ = tensor_hom_currying(m, r_mod_i, n)
    analysis = map_analyze(chi)
    return AdjunctionReport(
        reduced_target, coreduced_source,
        left.module, right.module, analysis,
        _invariants_or_none(left.module), _invariants_or_none(right.module))


def hom_functor_map(h_src: HomModule, h_tgt: HomModule,
                    pre: ModuleMap | None = None,
                    post: ModuleMap | None = None) -> ModuleMap:
    """Hom(pre, post): Hom(A, B) -> Hom(A', B'), f -> post o f o pre."""
    rows = []
    for flat in h_src.gen_rows:
        f = h_src.element_map(flat)
        matrix = f.matrix
        if pre is not None:
            matrix = _matmul(f.source.ring, pre.matrix, matrix)
        if post is not None:
            matrix = _matmul(f.source.ring, matrix, post.matrix)
        composed = ModuleMap(h_tgt.source, h_tgt.target, matrix)
        rows.append(h_tgt.coordinates(composed))
    return ModuleMap(h_src.module, h_tgt.module, tuple(rows))


def _matmul(ring, a, b):
    if not a:
        return ()
    if not b:
        return tuple(() for _ in a)
    cols = len(b[0])
    return tuple(
        tuple(
            _dot(ring, row, b, j) for j in range(cols))
        for row in a)


def _dot(ring, row, b, j):
    acc = ring.zero()
    for k, x in enumerate(row):
        if not ring.is_zero(x):
            acc = ring.add(acc, ring.mul(x, b[k][j]))
    return acc


def gm_naturality_square(i: Ideal, u: ModuleMap, v: ModuleMap) -> bool:
    """Commutation of the adjunction with maps u: M' -> M on the
    coreduced side and v: N -> N' on the reduced side."""
    ring = i.ring
    r_mod_i = quotient_by_ideal(ring, i)
    m_prime, m = u.source, u.target
    n, n_prime = v.source, v.target
    chi, left, right, h_bc = tensor_hom_currying(m, r_mod_i, n)
    chi2, left2, right2, h_bc2 = tensor_hom_currying(m_prime, r_mod_i, n_prime)
    # completion(u): same matrix on the quotient ambients
    lam_u = ModuleMap(left2.source, left.source, u.matrix)
    alpha = hom_functor_map(left, left2, pre=lam_u, post=v)
    # torsion(v) on the representable side: Hom(R/I, v)
    gamma_v = hom_functor_map(h_bc, h_bc2, post=v)
    beta = hom_functor_map(right, right2, pre=u, post=gamma_v)
    lhs = compose(chi, beta)
    rhs = compose(alpha, chi2)
    from .modules import maps_equal
    return maps_equal(lhs, rhs)


# ---------------------------------------------------------------------------
# the equivalence on torsion+reduced and complete+coreduced classes


@dataclass(frozen=True)
class MgmClause:
    name: str
    checked: bool
    verdict: bool | None = None
    detail: str = ""


@dataclass(frozen=True)
class MgmReport:
    reduced: bool
    coreduced: bool
    torsion: bool
    complete: str
    clauses: tuple

    @property
    def in_torsion_reduced_class(self):
        return self.torsion and self.reduced

    @property
    def in_complete_coreduced_class(self):
        return self.complete == "true" and self.coreduced

    @property
    def conclusion(self) -> bool:
        return all(c.verdict for c in self.clauses if c.checked)


def mgm_check(m: Presentation, i: Ideal, bound: int = 64) -> MgmReport:
    """Membership and round-trip checks for the torsion/completion
    equivalence.  Clauses that do not apply are reported as skipped."""
    reduced = is_reduced(m, i)
    coreduced = is_coreduced(m, i)
    torsion = is_torsion(m, i, bound)
    complete = is_complete(m, i, bound).status
    clauses = []

    if reduced:
        g = torsion_part(m, i, bound)
        ok = (is_complete(g.module, i, bound).status == "true"
              and is_coreduced(g.module, i))
        clauses.append(MgmClause(
            "torsion part of a reduced module is complete and coreduced",
            True, ok))
    else:
        clauses.append(MgmClause(
            "torsion part of a reduced module is complete and coreduced",
            False))

    if coreduced:
        c = completion(m, i, bound)
        ok = (c.stabilized and is_torsion(c.module, i, bound)
              and is_reduced(c.module, i))
        clauses.append(MgmClause(
            "completion of a coreduced module is torsion and reduced",
            True, ok))
    else:
        clauses.append(MgmClause(
            "completion of a coreduced module is torsion and reduced",
            False))

    if torsion and reduced:
        g = torsion_part(m, i, bound)
        include_ok = map_analyze(g.include).iso
        c = completion(g.module, i, bound)
        round_ok = c.stabilized and map_analyze(c.project).iso
        detail = ""
        if include_ok and round_ok:
            # composite completion(torsion(M)) -> M through the two isos
            composite = compose(invert_iso(c.project), g.include)
            round_ok = map_analyze(composite).iso
            detail = "composite canonical map analyzed"
        clauses.append(MgmClause(
            "round trip completion(torsion(M)) = M on the torsion+reduced class",
            True, include_ok and round_ok, detail))
    else:
        clauses.append(MgmClause(
            "round trip completion(torsion(M)) = M on the torsion+reduced class",
            False))

    if complete == "true" and coreduced:
        c = completion(m, i, bound)
        project_ok = c.stabilized and map_analyze(c.project).iso
        g = torsion_part(c.module, i, bound)
        include_ok = map_analyze(g.include).iso
        detail = ""
        if project_ok and include_ok:
            composite = compose(c.project, invert_iso(g.include))
            include_ok = map_analyze(composite).iso
            detail = "composite canonical map analyzed"
        clauses.append(MgmClause(
            "round trip torsion(completion(M)) = M on the complete+coreduced class",
            True, project_ok and include_ok, detail))
    else:
        clauses.append(MgmClause(
            "round trip torsion(completion(M)) = M on the complete+coreduced class",
            False))

    return MgmReport(reduced, coreduced, torsion, complete, tuple(clauses))


# ---------------------------------------------------------------------------
# Matlis duals on finite-length modules


@dataclass(frozen=True)
class MatlisDual:
    module: Presentation
    dual: Presentation
    kind: str                 # "pir" or "algebra"
    data: tuple


def matlis_dual(m: Presentation, cap: int = 4096) -> MatlisDual:
    """The computable dual: the character dual for finite modules over Z
    or Z/n, the coefficient-field linear dual for finite-dimensional
    modules over a polynomial ring."""
    ring = m.ring
    if isinstance(ring, (IntegerRing, ModularRing)):
        sf = smith_invariants(m)
        if isinstance(ring, IntegerRing) and sf.free_rank:
            raise UnsupportedQuery("dual needs a finite-length module")
        diag = _full_diagonal(m, sf)
        rows = tuple(
            tuple(ring.from_int(diag[i]) if i == j else ring.zero()
                  for j in range(m.gens))
            for i in range(m.gens))
        dual = Presentation(ring, m.gens, rows)
        from .intlinalg import int_matrix_inverse
        v = sf.v
        vinv = tuple(tuple(r) for r in int_matrix_inverse([list(r) for r in v]))
        return MatlisDual(m, dual, "pir", (tuple(diag), v, vinv))
    if isinstance(ring, PolynomialRing):
        basis = monomial_basis(m, cap)
        t = len(basis)
        action = [_action_matrix(m, basis, vidx)
                  for vidx in range(len(ring.variables))]
        rows = []
        for vidx, x_mat in enumerate(action):
            var_poly = ring.variable(ring.variables[vidx])
            for b in range(t):
                # dual action is the transpose: x * delta_b expands over
                # the coefficients of basis_b in x * basis_c
                row = [ring.zero()] * t
                row[b] = ring.add(row[b], var_poly)
                for c in range(t):
                    coeff = x_mat[c][b]
                    if coeff != ring.field.zero():
                        const = ring.monomial(
                            tuple(0 for _ in ring.variables),
                            ring.field.neg(coeff))
                        row[c] = ring.add(row[c], const)
                rows.append(tuple(row))
        dual = Presentation(ring, t, tuple(rows))
        return MatlisDual(m, dual, "algebra", (tuple(basis),))
    raise UnsupportedQuery(f"no computable dual over {ring}")


def _full_diagonal(m: Presentation, sf) -> list[int]:
    diag = [sf.d[i][i] if i < len(sf.d) else 0 for i in range(m.gens)]
    if any(x == 0 for x in diag):
        raise UnsupportedQuery("dual needs a finite-length module")
    return diag


def _expand_in_basis(m: Presentation, basis, row):
    """Coefficients of an ambient row over the monomial basis."""
    ring = m.ring
    index = {pm: k for k, pm in enumerate(basis)}
    nf = m.span.reduce(tuple(row))
    coeffs = [ring.field.zero()] * len(basis)
    for pos, poly in enumerate(nf):
        for exps, c in poly:
            k = index.get((pos, exps))
            if k is None:
                raise IllFormed("normal form escaped the monomial basis")
            coeffs[k] = ring.field.add(coeffs[k], c)
    return coeffs


def _action_matrix(m: Presentation, basis, vidx: int):
    ring = m.ring
    rows = []
    for (pos, exps) in basis:
        shifted = tuple(e + (1 if k == vidx else 0) for k, e in enumerate(exps))
        row = [ring.zero()] * m.gens
        row[pos] = ring.monomial(shifted)
        rows.append(_expand_in_basis(m, basis, row))
    return rows


def dual_map(psi: ModuleMap, d_src: MatlisDual, d_tgt: MatlisDual) -> ModuleMap:
    """Contravariant transport: for psi: A -> B return D(psi): D(B) -> D(A)."""
    if psi.source != d_src.module or psi.target != d_tgt.module:
        raise IllFormed("dual data does not match the map's endpoints")
    ring = psi.source.ring
    if d_src.kind == "pir":
        d_a, _, vinv_a = d_src.data
        e_b, v_b, _ = d_tgt.data
        from .intlinalg import mat_mul_int
        p_int = [[int(x) for x in row] for row in psi.matrix]
        p_std = mat_mul_int(mat_mul_int(
            [list(r) for r in vinv_a], p_int), [list(r) for r in v_b])
        rows = []
        for j in range(len(e_b)):
            row = []
            for i in range(len(d_a)):
                x = d_a[i] * p_std[i][j]
                if x % e_b[j]:
                    raise IllFormed("map is not well-defined in standard form")
                row.append(ring.from_int((x // e_b[j]) % d_a[i] if d_a[i] else 0))
            rows.append(tuple(row))
        return ModuleMap(d_tgt.dual, d_src.dual, tuple(rows))
    if d_src.kind == "algebra":
        basis_a = d_src.data[0]
        basis_b = d_tgt.data[0]
        psi_field = []
        for (pos, exps) in basis_a:
            row = [ring.zero()] * psi.source.gens
            row[pos] = ring.monomial(exps)
            image = row_mul(ring, row, psi.matrix) if psi.matrix else \
                tuple(ring.zero() for _ in range(psi.target.gens))
            psi_field.append(_expand_in_basis(psi.target, basis_b, image))
        rows = []
        zero_exps = tuple(0 for _ in ring.variables)
        for j in range(len(basis_b)):
            rows.append(tuple(
                ring.monomial(zero_exps, psi_field[b][j])
                for b in range(len(basis_a))))
        return ModuleMap(d_tgt.dual, d_src.dual, tuple(rows))
    raise IllFormed(f"unknown dual kind {d_src.kind}")


# ---------------------------------------------------------------------------
# transfer and commuting squares


@dataclass(frozen=True)
class TransferReport:
    reduced_matches: bool
    coreduced_matches: bool
    global_checked: bool
    global_matches: bool | None

    @property
    def conclusion(self):
        ok = self.reduced_matches and self.coreduced_matches
        if self.global_checked:
            ok = ok and bool(self.global_matches)
        return ok


def matlis_transfer_check(m: Presentation, i: Ideal,
                          global_ideals=None) -> TransferReport:
    """Reducedness of M must match coreducedness of the dual and vice
    versa; over a finite base ring the same is checked for every cyclic
    ideal (or for a supplied ideal list)."""
    d = matlis_dual(m).dual
    reduced_matches = is_reduced(m, i) == is_coreduced(d, i)
    coreduced_matches = is_coreduced(m, i) == is_reduced(d, i)
    global_checked = False
    global_matches = None
    ideals = global_ideals
    if ideals is None and isinstance(m.ring, ModularRing):
        ideals = cyclic_ideals(m.ring)
    if ideals is not None:
        global_checked = True
        global_matches = all(
            is_reduced(m, j) == is_coreduced(d, j)
            and is_coreduced(m, j) == is_reduced(d, j)
            for j in ideals)
    return TransferReport(reduced_matches, coreduced_matches,
                          global_checked, global_matches)


@dataclass(frozen=True)
class SquareReport:
    name: str
    checked: bool
    analysis: MapAnalysis | None = None
    left_invariants: tuple | None = None
    right_invariants: tuple | None = None

    @property
    def verdict(self):
        return bool(self.checked and self.analysis and self.analysis.iso)


@dataclass(frozen=True)
class SquaresReport:
    torsion_square: SquareReport
    completion_square: SquareReport

    @property
    def conclusion(self):
        ok = True
        for s in (self.torsion_square, self.completion_square):
            if s.checked:
                ok = ok and s.verdict
        return ok


def duality_square_check(m: Presentation, i: Ideal, bound: int = 64) -> SquaresReport:
    """Torsion of the dual against the dual of the completion, and
    completion of the dual against the dual of the torsion part; each is
    verified through a canonical map built from the dual transport."""
    coreduced = is_coreduced(m, i)
    reduced = is_reduced(m, i)
    if not (coreduced or reduced):
        raise PredicateFailed(
            "square checks need a reduced or coreduced module")
    d_m = matlis_dual(m)

    torsion_square = SquareReport("torsion(D(M)) = D(completion(M))", False)
    if coreduced:
        c = completion(m, i, bound)
        d_lam = matlis_dual(c.module)
        dproj = dual_map(c.project, d_m, d_lam)      # D(completion) -> D(M)
        g = torsion_part(d_m.dual, i, bound)
        sub = submodule_from_rows(d_m.dual, g.submodule.gen_rows)
        rows = []
        for row in dproj.matrix:
            coords = sub.coordinates(row)
            if coords is None:
                raise IllFormed("dual of the projection escaped the torsion part")
            rows.append(coords)
        phi = ModuleMap(d_lam.dual, g.module, tuple(rows))
        torsion_square = SquareReport(
            "torsion(D(M)) = D(completion(M))", True, map_analyze(phi),
            _invariants_or_none(g.module), _invariants_or_none(d_lam.dual))

    completion_square = SquareReport("completion(D(M)) = D(torsion(M))", False)
    if reduced:
        g = torsion_part(m, i, bound)
        d_gamma = matlis_dual(g.module)
        dinc = dual_map(g.include, d_gamma, d_m)     # D(M) -> D(torsion)
        c = completion(d_m.dual, i, bound)
        if not c.stabilized:
            raise IllFormed("completion tower of a finite dual did not stabilize")
        phi = ModuleMap(c.module, d_gamma.dual, dinc.matrix)
        completion_square = SquareReport(
            "completion(D(M)) = D(torsion(M))", True, map_analyze(phi),
            _invariants_or_none(c.module), _invariants_or_none(d_gamma.dual))

    return SquaresReport(torsion_square, completion_square)


# ---------------------------------------------------------------------------
# the Hom/tensor semigroup table


@dataclass(frozen=True)
class SemigroupCell:
    name: str
    analysis: MapAnalysis

    @property
    def verdict(self):
        return self.analysis.iso


@dataclass(frozen=True)
class SemigroupReport:
    hom_value: Presentation
    tensor_value: Presentation
    cells: tuple

    @property
    def conclusion(self):
        return all(c.verdict for c in self.cells)


def semigroup_table_check(m: Presentation, i: Ideal) -> SemigroupReport:
    """The four composites of H = Hom(R/I, -) and T = R/I (x) - on M,
    each verified through its canonical map: H.H = H and T.H = H via
    inclusion/projection into H(M), H.T = T and T.T = T likewise on T(M)."""
    ring = m.ring
    r_mod_i = quotient_by_ideal(ring, i)
    h = hom_module(r_mod_i, m)
    t = tensor_product(r_mod_i, m)
    cells = []

    h2 = hom_module(r_mod_i, h.module)
    inc = ModuleMap(h2.module, h.module, h2.gen_rows)
    cells.append(SemigroupCell("H.H = H (inclusion of the double Hom)",
                               map_analyze(inc)))

    th = tensor_product(r_mod_i, h.module)
    proj = _quotient_projection(h.module, th)
    cells.append(SemigroupCell("T.H = H (projection onto the tensor)",
                               map_analyze(proj)))

    ht = hom_module(r_mod_i, t)
    inc2 = ModuleMap(ht.module, t, ht.gen_rows)
    cells.append(SemigroupCell("H.T = T (inclusion of the Hom into the tensor)",
                               map_analyze(inc2)))

    tt = tensor_product(r_mod_i, t)
    proj2 = _quotient_projection(t, tt)
    cells.append(SemigroupCell("T.T = T (projection onto the double tensor)",
                               map_analyze(proj2)))

    return SemigroupReport(h.module, t, tuple(cells))


def _quotient_projection(src: Presentation, tgt: Presentation) -> ModuleMap:
    """Projection onto a tensor with R/I, which shares the source ambient
    (or was pruned to zero)."""
    ring = src.ring
    if tgt.gens == 0:
        return ModuleMap(src, tgt, tuple(tuple() for _ in range(src.gens)))
    if tgt.gens != src.gens:
        raise IllFormed("quotient does not share the source ambient")
    return ModuleMap(src, tgt, mat_identity(ring, src.gens))


# ---------------------------------------------------------------------------
# Yoneda evaluation


@dataclass(frozen=True)
class YonedaReport:
    value: Presentation          # torsion part of R/I, the Yoneda value
    unit_analysis: MapAnalysis   # canonical R/I -> torsion(R/I)
    companion_zero: bool         # I * (R/I) is the zero value

    @property
    def conclusion(self):
        return self.unit_analysis.iso and self.companion_zero


def yoneda_value(i: Ideal, bound: int = 64) -> YonedaReport:
    """Evaluate natural transformations out of the torsion functor by the
    Yoneda lemma: the endomorphism value is torsion(R/I) (canonically
    R/I itself), and the value on the functor I (x) - is I*(R/I) = 0."""
    r_mod_i = quotient_by_ideal(i.ring, i)
    g = torsion_part(r_mod_i, i, bound)
    coords = g.submodule.coordinates(
        tuple(i.ring.one() for _ in range(1)))
    if coords is None:
        raise IllFormed("generator of R/I escaped its own torsion part")
    unit = ModuleMap(r_mod_i, g.module, (coords,))
    from .modules import scalar_submodule
    companion = scalar_submodule(r_mod_i, i).submodule.module
    return YonedaReport(g.module, map_analyze(unit),
                        is_zero_module(companion))
