"""Buchberger engine for submodules of free modules over polynomial rings.

Vectors are tuples of polynomial payloads.  The term order is
position-over-term with earlier positions dominant, so the augmented
constructions in :mod:`redcor.modules` are elimination orders for free:
a Groebner basis of the rows ``(A_i | e_i)`` simultaneously yields
normal forms, membership certificates and the left kernel (syzygies).

Pair elimination follows Gebauer-Moller.  The coprime-lead-term
shortcut is applied only to rank-one modules (ideals): it is not valid
for vectors of rank greater than one.
"""

from __future__ import annotations

from .rings import PolynomialRing, mono_div, mono_divides, mono_lcm, mono_mul


def vec_zero(ring: PolynomialRing, width: int) -> tuple:
    return tuple(ring.zero() for _ in range(width))


def vec_is_zero(v: tuple) -> bool:
    return all(not p for p in v)


def vec_lead(v: tuple):
    """Lead term ``(pos, exps, coeff)`` under POT, or None for zero."""
    for pos, p in enumerate(v):
        if p:
            exps, coeff = p[0]
            return pos, exps, coeff
    return None


def vec_add(ring, v, w):
    return tuple(ring.add(a, b) for a, b in zip(v, w))


def vec_sub_term_mul(ring, v, w, exps, coeff):
    """v - coeff * x^exps * w."""
    c = ring.field.neg(coeff)
    return tuple(ring.add(a, ring.term_times(b, exps, c)) for a, b in zip(v, w))


def vec_monic(ring, v):
    lead = vec_lead(v)
    if lead is None:
        return v
    inv = ring.field.inv(lead[2])
    zero_exps = tuple(0 for _ in ring.variables)
    return tuple(ring.term_times(p, zero_exps, inv) for p in v)


def _term_sort_key(ring, term):
    pos, exps, _ = term
    return (-pos, ring.term_key(exps))


def vec_normal_form(ring, v, basis):
    """Full normal form of ``v`` against ``basis`` (every term reduced)."""
    width = len(v)
    rem = list(v)
    out = [ring.zero()] * width
    by_pos: dict[int, list] = {}
    for b in basis:
        lead = vec_lead(b)
        if lead is not None:
            by_pos.setdefault(lead[0], []).append((lead, b))
    pos = 0
    while pos < width:
        p = rem[pos]
        if not p:
            pos += 1
            continue
        exps, coeff = p[0]
        hit = None
        for lead, b in by_pos.get(pos, ()):
            if mono_divides(lead[1], exps):
                hit = (lead, b)
                break
        if hit is None:
            out[pos] = ring.add(out[pos], ring.monomial(exps, coeff))
            rem[pos] = tuple(p[1:])
            continue
        (_, lexps, lcoeff), b = hit
        factor = ring.field.mul(coeff, ring.field.inv(lcoeff))
        shift = mono_div(exps, lexps)
        red = vec_sub_term_mul(ring, tuple(rem), b, shift, factor)
        rem = list(red)
        # positions before the lead of b are zero in b, so rem[:pos] is intact
    return tuple(out)


def _spair(ring, f, g):
    """S-vector of two basis elements with lead terms at the same position."""
    pf, ef, cf = vec_lead(f)
    pg, eg, cg = vec_lead(g)
    lcm = mono_lcm(ef, eg)
    a = vec_sub_term_mul(
        ring,
        tuple(ring.term_times(p, mono_div(lcm, ef), ring.field.inv(cf)) for p in f),
        g,
        mono_div(lcm, eg),
        ring.field.inv(cg),
    )
    return a


def module_groebner(ring: PolynomialRing, vectors, width: int) -> tuple:
    """Reduced Groebner basis of the submodule of R^width spanned by vectors."""
    G: list = []
    for v in vectors:
        if not vec_is_zero(v):
            G.append(vec_monic(ring, v))

    pairs: set[tuple[int, int]] = set()

    def lead(i):
        return vec_lead(G[i])

    def lcm_of(i, j):
        li, lj = lead(i), lead(j)
        return mono_lcm(li[1], lj[1])

    def update_pairs(t):
        """Gebauer-Moller update after appending element index t."""
        lt = lead(t)
        fresh = []
        for i in range(t):
            li = lead(i)
            if li[0] == lt[0]:
                fresh.append(i)
        # M criterion: drop (i, t) when another (j, t) has a properly
        # smaller lcm dividing it
        lcms = {i: mono_lcm(lead(i)[1], lt[1]) for i in fresh}
        keep = []
        for i in fresh:
            dominated = False
            for j in fresh:
                if j == i:
                    continue
                if lcms[j] != lcms[i] and mono_divides(lcms[j], lcms[i]):
                    dominated = True
                    break
            if not dominated:
                keep.append(i)
        # F criterion: among equal lcms keep one representative
        seen = {}
        filtered = []
        for i in keep:
            key = lcms[i]
            if key in seen:
                continue
            seen[key] = i
            filtered.append(i)
        # product criterion, valid only for ideals (width-1 vectors)
        if width == 1:
            filtered = [
                i for i in filtered
                if mono_lcm(lead(i)[1], lt[1]) != mono_mul(lead(i)[1], lt[1])
            ]
        # B criterion on old pairs
        for (i, j) in list(pairs):
            li, lj = lead(i), lead(j)
            if li[0] != lt[0]:
                continue
            lcm_ij = mono_lcm(li[1], lj[1])
            if (mono_divides(lt[1], lcm_ij)
                    and mono_lcm(li[1], lt[1]) != lcm_ij
                    and mono_lcm(lj[1], lt[1]) != lcm_ij):
                pairs.discard((i, j))
        for i in filtered:
            pairs.add((i, t))

    for t in range(len(G)):
        update_pairs(t)

    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (lead(ij[0])[0],) + tuple(ring.term_key(lcm_of(*ij))),
        )
        pairs.discard((i, j))
        s = _spair(ring, G[i], G[j])
        r = vec_normal_form(ring, s, G)
        if not vec_is_zero(r):
            G.append(vec_monic(ring, r))
            update_pairs(len(G) - 1)

    return _autoreduce(ring, G)


def _autoreduce(ring, G):
    # drop elements whose lead term is divisible by another lead
    kept = []
    for i, g in enumerate(G):
        li = vec_lead(g)
        redundant = False
        for j, h in enumerate(G):
            if i == j:
                continue
            lj = vec_lead(h)
            if lj[0] == li[0] and mono_divides(lj[1], li[1]):
                if mono_divides(li[1], lj[1]) and li[1] == lj[1] and j > i:
                    continue  # exact tie: keep the earlier one
                redundant = True
                break
        if not redundant:
            kept.append(g)
    # tail-reduce each element against the others until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1:]
            nf = vec_normal_form(ring, kept[i], others)
            nf = vec_monic(ring, nf)
            if nf != kept[i]:
                changed = True
                if vec_is_zero(nf):
                    kept.pop(i)
                else:
                    kept[i] = nf
                break
    kept.sort(key=lambda g: _term_sort_key(ring, vec_lead(g)), reverse=True)
    return tuple(kept)


class PolyRowOps:
    """Membership, canonical reduction, certificates and left kernel for
    the row span of a polynomial matrix, via one augmented Groebner basis."""

    def __init__(self, ring: PolynomialRing, rows, width: int):
        self.ring = ring
        self.width = width
        self.nrows = len(rows)
        aug = []
        for i, row in enumerate(rows):
            unit = tuple(ring.one() if j == i else ring.zero()
                         for j in range(self.nrows))
            aug.append(tuple(row) + unit)
        self.basis = module_groebner(ring, aug, width + self.nrows)
        self.reducers = tuple(b for b in self.basis if vec_lead(b)[0] < width)
        self.syzygies = tuple(b[width:] for b in self.basis
                              if vec_lead(b)[0] >= width)

    def _nf(self, row):
        v = tuple(row) + tuple(self.ring.zero() for _ in range(self.nrows))
        return vec_normal_form(self.ring, v, self.basis)

    def reduce(self, row):
        return self._nf(row)[: self.width]

    def contains(self, row) -> bool:
        return vec_is_zero(self._nf(row)[: self.width])

    def certificate(self, row):
        nf = self._nf(row)
        if not vec_is_zero(nf[: self.width]):
            return None
        return tuple(self.ring.neg(p) for p in nf[self.width:])

    def kernel(self):
        return self.syzygies
