"""Torsion and adic-completion functors as stabilizing towers.

For an ideal I the torsion part of M is the union of the annihilator
submodules (0 :_M I^k); over the supported Noetherian rings the
ascending tower stabilizes and the functor is computed exactly.  Dually
the completion is the limit of M/I^kM, computed only when the
descending tower I^kM stabilizes -- otherwise a NotStabilized verdict is
returned rather than an approximation, since the honest limit (the
p-adics, say) is not finitely presented.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExceeded, PredicateFailed, UnsupportedQuery
from .ideals import Ideal, ideal, ideal_power
from .modules import (
    ModuleMap,
    Presentation,
    Submodule,
    colon_annihilator,
    colon_rows,
    hom_module,
    iso_invariants,
    map_analyze,
    quotient_by_ideal,
    scalar_rows,
    scalar_submodule,
    submodule_leq,
    tensor_product,
)
from .rings import IntegerRing, ModularRing

DEFAULT_BOUND = 64


@dataclass(frozen=True)
class TowerStage:
    exponent: int
    summary: tuple


def _stage_summary(m: Presentation) -> tuple:
    if isinstance(m.ring, (IntegerRing, ModularRing)):
        factors, free = iso_invariants(m)
        return ("invariants", factors, free)
    return ("presentation", m.gens, len(m.relations))


@dataclass(frozen=True)
class TorsionResult:
    """The stabilized annihilator submodule, with its tower history."""

    submodule: Submodule
    exponent: int
    tower: tuple

    @property
    def module(self) -> Presentation:
        return self.submodule.module

    @property
    def include(self) -> ModuleMap:
        return self.submodule.include


@dataclass(frozen=True)
class CompletionResult:
    stabilized: bool
    bound: int
    tower: tuple
    exponent: int | None = None
    module: Presentation | None = None
    project: ModuleMap | None = None


def torsion_part(m: Presentation, i: Ideal, bound: int = DEFAULT_BOUND) -> TorsionResult:
    """Stabilized (0 :_M I^k); the include map realizes it inside M."""
    tower = []
    current = colon_annihilator(m, i)
    for k in range(1, bound + 1):
        tower.append(TowerStage(k, _stage_summary(current.module)))
        nxt = colon_annihilator(m, ideal_power(i, k + 1))
        # the tower ascends, so one containment decides equality
        if submodule_leq(m, nxt.gen_rows, current.gen_rows):
            return TorsionResult(current, k, tuple(tower))
        current = nxt
    raise BoundExceeded(
        f"annihilator tower for {i} did not stabilize within {bound} steps")


def completion(m: Presentation, i: Ideal, bound: int = DEFAULT_BOUND) -> CompletionResult:
    """M/I^kM when the scalar tower I^kM stabilizes; verdict otherwise."""
    tower = []
    current = scalar_submodule(m, i)
    for k in range(1, bound + 1):
        tower.append(TowerStage(k, _stage_summary(current.quotient)))
        nxt = scalar_submodule(m, ideal_power(i, k + 1))
        # the tower descends, so one containment decides equality
        if submodule_leq(m, current.submodule.gen_rows, nxt.submodule.gen_rows):
            return CompletionResult(
                stabilized=True,
                bound=bound,
                tower=tuple(tower),
                exponent=k,
                module=current.quotient,
                project=current.project,
            )
        current = nxt
    return CompletionResult(stabilized=False, bound=bound, tower=tuple(tower))


def is_reduced(m: Presentation, i: Ideal) -> bool:
    """(0 :_M I) = (0 :_M I^2) as submodules of M.  The annihilator tower
    ascends, so only the downward containment is checked."""
    first = colon_rows(m, i)
    second = colon_rows(m, ideal_power(i, 2))
    return submodule_leq(m, second, first)


def is_coreduced(m: Presentation, i: Ideal) -> bool:
    """IM = I^2 M as submodules of M.  The scalar tower descends, so only
    the upward containment is checked."""
    first = scalar_rows(m, i)
    second = scalar_rows(m, ideal_power(i, 2))
    return submodule_leq(m, first, second)


def is_torsion(m: Presentation, i: Ideal, bound: int = DEFAULT_BOUND) -> bool:
    """The stabilized annihilator submodule is all of M."""
    result = torsion_part(m, i, bound)
    return map_analyze(result.include).surjective


@dataclass(frozen=True)
class CompletenessVerdict:
    status: str            # "true" | "false" | "unknown"
    bound: int

    def __bool__(self):
        return self.status == "true"


def is_complete(m: Presentation, i: Ideal, bound: int = DEFAULT_BOUND) -> CompletenessVerdict:
    """M -> lim M/I^kM an isomorphism; unknown if the tower keeps moving."""
    result = completion(m, i, bound)
    if not result.stabilized:
        return CompletenessVerdict("unknown", bound)
    stage = scalar_submodule(m, ideal_power(i, result.exponent))
    vanished = not any(
        any(not m.ring.is_zero(x) for x in m.span.reduce(row))
        for row in stage.submodule.gen_rows)
    return CompletenessVerdict("true" if vanished else "false", bound)


def cyclic_ideals(ring, extra_bound: int | None = None):
    """All cyclic ideals of a finite ring (one per divisor), or (d) for
    d up to a bound over Z."""
    if isinstance(ring, ModularRing):
        seen = {}
        for a in range(ring.modulus):
            i = ideal(ring, [a])
            seen.setdefault(i.basis, i)
        return list(seen.values())
    if isinstance(ring, IntegerRing) and extra_bound:
        return [ideal(ring, [d]) for d in range(extra_bound + 1)]
    raise UnsupportedQuery(
        "global reduced/coreduced checks need a finite ring or an ideal list")


def is_reduced_all(m: Presentation, ideals=None) -> bool:
    """Reduced with respect to every supplied ideal (all cyclic ideals of
    a finite base ring when none are given)."""
    if ideals is None:
        ideals = cyclic_ideals(m.ring)
    return all(is_reduced(m, i) for i in ideals)


def is_coreduced_all(m: Presentation, ideals=None) -> bool:
    if ideals is None:
        ideals = cyclic_ideals(m.ring)
    return all(is_coreduced(m, i) for i in ideals)


# ---------------------------------------------------------------------------
# representability


@dataclass(frozen=True)
class SideReport:
    checked: bool
    analysis: object | None = None
    left_desc: tuple | None = None
    right_desc: tuple | None = None

    @property
    def iso(self):
        return bool(self.checked and self.analysis and self.analysis.iso)


@dataclass(frozen=True)
class RepresentabilityReport:
    reduced: bool
    coreduced: bool
    torsion_side: SideReport
    completion_side: SideReport

    @property
    def verdict(self):
        ok = True
        if self.torsion_side.checked:
            ok = ok and self.torsion_side.iso
        if self.completion_side.checked:
            ok = ok and self.completion_side.iso
        return ok


def torsion_representability_map(m: Presentation, i: Ideal,
                                 bound: int = DEFAULT_BOUND) -> ModuleMap:
    """Canonical map Hom(R/I, M) -> torsion part, each hom to its value
    at the generator of R/I."""
    h = hom_module(quotient_by_ideal(m.ring, i), m)
    t = torsion_part(m, i, bound)
    rows = []
    for flat in h.gen_rows:
        coords = t.submodule.coordinates(flat)
        if coords is None:
            raise BoundExceeded("hom image escaped the torsion part")
        rows.append(coords)
    return ModuleMap(h.module, t.module, tuple(rows))


def completion_representability_map(m: Presentation, i: Ideal,
                                    bound: int = DEFAULT_BOUND) -> ModuleMap:
    """Canonical map R/I (x) M -> completion quotient (the identity on
    ambient generators)."""
    t = tensor_product(quotient_by_ideal(m.ring, i), m)
    result = completion(m, i, bound)
    if not result.stabilized:
        raise PredicateFailed("completion tower did not stabilize")
    if t.gens == 0:
        # tensor was pruned to zero; the quotient must be zero too
        return ModuleMap(t, result.module,
                         tuple(() for _ in range(0)))
    return ModuleMap(t, result.module, tuple(
        tuple(m.ring.one() if k == j else m.ring.zero()
              for k in range(result.module.gens))
        for j in range(t.gens)))


def representability_report(m: Presentation, i: Ideal,
                            bound: int = DEFAULT_BOUND) -> RepresentabilityReport:
    reduced = is_reduced(m, i)
    coreduced = is_coreduced(m, i)
    if not reduced and not coreduced:
        raise PredicateFailed(
            "module is neither reduced nor coreduced for this ideal")
    torsion_side = SideReport(checked=False)
    completion_side = SideReport(checked=False)
    if reduced:
        phi = torsion_representability_map(m, i, bound)
        torsion_side = SideReport(
            checked=True,
            analysis=map_analyze(phi),
            left_desc=_stage_summary(phi.source),
            right_desc=_stage_summary(phi.target),
        )
    if coreduced:
        phi = completion_representability_map(m, i, bound)
        completion_side = SideReport(
            checked=True,
            analysis=map_analyze(phi),
            left_desc=_stage_summary(phi.source),
            right_desc=_stage_summary(phi.target),
        )
    return RepresentabilityReport(reduced, coreduced, torsion_side, completion_side)
