"""Standard bases over local (and mixed block) orders via Mora's normal form.

Everything here works on sparse vectors over the polynomial ring:
a vector is a dict mapping (component, monomial) to a nonzero Fraction.
A ring element is the rank-one case.  The same completion loop serves
ordinary standard bases and syzygy extraction; syzygies come from the
classical augmented-module trick, where each input column is stacked on
a unit vector recording how it was combined, and the module order makes
every "record" component smaller than every ambient component.

Termination of a single reduction is Mora's ecart argument: a reducer is
picked among those with minimal ecart, and the partial remainder itself
joins the reducer pool whenever every available reducer has strictly
larger ecart.  A global step cap converts pathological inputs into a
clean ResourceLimitError.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ResourceLimitError
from .poly import mono_deg, mono_div, mono_divides, mono_lcm, mono_mul

DEFAULT_STEP_CAP = 10 ** 6


class StepCounter:
    """Shared reduction-step budget for one top-level computation."""

    __slots__ = ("cap", "steps")

    def __init__(self, cap=None):
        self.cap = DEFAULT_STEP_CAP if cap is None else cap
        self.steps = 0

    def tick(self, n=1):
        self.steps += n
        if self.steps > self.cap:
            raise ResourceLimitError(
                f"reduction step cap of {self.cap} exceeded")


# ---------------------------------------------------------------------------
# Module orders.  A module monomial is (component, monomial); keys compare
# like monomial-order keys (bigger key = bigger term).
# ---------------------------------------------------------------------------

class ModuleOrder:
    """Key-comparable module order; keys are memoized, they are recomputed
    heavily during reductions and Schreyer keys recurse through the whole
    resolution history."""

    def __init__(self):
        self._key_cache = {}

    def key(self, comp, mono):
        k = (comp, mono)
        v = self._key_cache.get(k)
        if v is None:
            v = self._key(comp, mono)
            self._key_cache[k] = v
        return v

    def _key(self, comp, mono):
        raise NotImplementedError

    def shift(self, comp):
        """Degree shift of a component, used by the ecart."""
        return 0


class TermOverPosition(ModuleOrder):
    """Compare by the ring order first, earlier components win ties."""

    def __init__(self, ring_order):
        super().__init__()
        self.ring_order = ring_order

    def _key(self, comp, mono):
        return (self.ring_order.key(mono), -comp)


class PositionOverTerm(ModuleOrder):
    """Earlier components dominate outright; ring order breaks ties."""

    def __init__(self, ring_order):
        super().__init__()
        self.ring_order = ring_order

    def _key(self, comp, mono):
        return (-comp, self.ring_order.key(mono))


class SchreyerOrder(ModuleOrder):
    """Order induced by the leading terms of the previous differential.

    (comp, mono) is weighted by mono * lm(base column comp) in the base
    module's order; position breaks ties.
    """

    def __init__(self, base_order, base_lts):
        super().__init__()
        self.base_order = base_order
        self.base_lts = list(base_lts)          # [(comp, mono)] per column
        self._shifts = [mono_deg(m) for _, m in self.base_lts]

    def _key(self, comp, mono):
        bc, bm = self.base_lts[comp]
        return (self.base_order.key(bc, mono_mul(mono, bm)), -comp)

    def shift(self, comp):
        return self._shifts[comp]


class SplitOrder(ModuleOrder):
    """Components below the split compare by top_order and dominate the rest."""

    def __init__(self, split, top_order, bottom_order):
        super().__init__()
        self.split = split
        self.top_order = top_order
        self.bottom_order = bottom_order

    def _key(self, comp, mono):
        if comp < self.split:
            return (1, self.top_order.key(comp, mono))
        return (0, self.bottom_order.key(comp - self.split, mono))

    def shift(self, comp):
        if comp < self.split:
            return self.top_order.shift(comp)
        return self.bottom_order.shift(comp - self.split)


# ---------------------------------------------------------------------------
# Sparse vector helpers.
# ---------------------------------------------------------------------------

def vec_is_zero(v):
    return not v


def vec_add_scaled(v, w, coeff, mono):
    """v + coeff * x^mono * w, in place on a copy of v."""
    out = dict(v)
    for (c, m), x in w.items():
        key = (c, mono_mul(m, mono))
        s = out.get(key, 0) + coeff * x
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def vec_scale(v, coeff):
    if not coeff:
        return {}
    return {k: coeff * x for k, x in v.items()}


def vec_from_poly(poly, comp=0):
    return {(comp, m): c for m, c in poly.terms.items()}


def vec_leading(v, order):
    comp, mono = max(v, key=lambda key: order.key(*key))
    return comp, mono, v[(comp, mono)]


def vec_ecart(v, order, lt_key=None):
    """Max shifted degree minus shifted degree of the leading term."""
    if lt_key is None:
        comp, mono, _ = vec_leading(v, order)
    else:
        comp, mono = lt_key
    top = mono_deg(mono) + order.shift(comp)
    mx = max(mono_deg(m) + order.shift(c) for c, m in v)
    return mx - top


class SBElement:
    """A reducer with cached leading data."""

    __slots__ = ("vec", "comp", "mono", "coeff", "ecart", "index", "helper")

    def __init__(self, vec, order, index, helper=False):
        self.vec = vec
        self.comp, self.mono, self.coeff = vec_leading(vec, order)
        self.ecart = vec_ecart(vec, order, (self.comp, self.mono))
        self.index = index
        self.helper = helper


def make_monic(vec, order):
    _, _, c = vec_leading(vec, order)
    if c == 1:
        return vec
    inv = Fraction(1) / c
    return vec_scale(vec, inv)


def mora_reduce(vec, reducers, order, counter, pool_by_comp=None):
    """Mora weak normal form of vec against the reducer list.

    Returns a vector whose leading term is divisible by no reducer's
    leading term.  Reducers are never mutated; partial remainders join a
    local extension of the pool, which is what makes local orders
    terminate.  pool_by_comp, when supplied, must map leading components
    to the reducers with that leading component (a shared index that
    avoids rescanning the pool on every step); it is never mutated.
    """
    if pool_by_comp is None:
        pool_by_comp = {}
        for g in reducers:
            pool_by_comp.setdefault(g.comp, []).append(g)
    local = {}
    h = dict(vec)
    npool = sum(len(v) for v in pool_by_comp.values())
    while h:
        comp, mono, coeff = vec_leading(h, order)
        best = None
        for g in pool_by_comp.get(comp, ()):
            if mono_divides(g.mono, mono):
                if best is None or (g.ecart, g.index) < (best.ecart, best.index):
                    best = g
        for g in local.get(comp, ()):
            if mono_divides(g.mono, mono):
                if best is None or (g.ecart, g.index) < (best.ecart, best.index):
                    best = g
        if best is None:
            break
        if best.ecart > vec_ecart(h, order, (comp, mono)):
            stashed = SBElement(dict(h), order, npool)
            npool += 1
            local.setdefault(stashed.comp, []).append(stashed)
        counter.tick()
        h = vec_add_scaled(h, best.vec, -coeff / best.coeff,
                           mono_div(mono, best.mono))
    return h


def spair(g1, g2, order):
    """S-vector of two elements with the same leading component."""
    lcm = mono_lcm(g1.mono, g2.mono)
    v = vec_add_scaled({}, g1.vec, Fraction(1) / g1.coeff, mono_div(lcm, g1.mono))
    return vec_add_scaled(v, g2.vec, Fraction(-1) / g2.coeff, mono_div(lcm, g2.mono))


def _invert_key(k):
    """Negate a nested int tuple so min-selection picks the largest key."""
    if isinstance(k, tuple):
        return tuple(_invert_key(x) for x in k)
    return -k


def standard_basis_vectors(vectors, order, counter, syz_split=None,
                           helper_flags=None):
    """Complete the given vectors to a standard basis (Mora + Buchberger).

    With syz_split = r, components >= r are treated as syzygy bookkeeping:
    pairs whose leading components both lie in the bookkeeping block are
    skipped, which is sound because those elements are only ever read off
    as generators, never used as a confluent basis.

    helper_flags marks input vectors that are known to be mutually
    confluent (in this package: standard-basis elements of the relation
    ideal times a free basis vector); pairs between two helpers are
    skipped because their s-vectors reduce to zero by construction.

    Returns the list of SBElement, monic, in deterministic order.
    """
    basis = []
    by_comp = {}

    def insert(el):
        basis.append(el)
        by_comp.setdefault(el.comp, []).append(el)

    for pos, v in enumerate(vectors):
        if not vec_is_zero(v):
            helper = bool(helper_flags and helper_flags[pos])
            insert(SBElement(make_monic(dict(v), order), order,
                             len(basis), helper=helper))

    def is_bookkeeping(el):
        return syz_split is not None and el.comp >= syz_split

    def pair_entry(i, j):
        lcm = mono_lcm(basis[i].mono, basis[j].mono)
        # largest order key first = lowest degree first under local orders
        return (_invert_key(order.key(basis[i].comp, lcm)), i, j)

    pairs = []
    for j in range(len(basis)):
        if is_bookkeeping(basis[j]):
            continue
        for i in range(j):
            if basis[i].comp != basis[j].comp:
                continue
            if basis[i].helper and basis[j].helper:
                continue
            pairs.append(pair_entry(i, j))

    while pairs:
        pairs.sort()
        _, i, j = pairs.pop(0)
        s = spair(basis[i], basis[j], order)
        if vec_is_zero(s):
            continue
        h = mora_reduce(s, basis, order, counter, pool_by_comp=by_comp)
        if vec_is_zero(h):
            continue
        el = SBElement(make_monic(h, order), order, len(basis))
        insert(el)
        if not is_bookkeeping(el):
            for k in range(len(basis) - 1):
                if basis[k].comp == el.comp:
                    pairs.append(pair_entry(k, len(basis) - 1))
    return basis


def minimalize_basis(basis):
    """Drop elements whose leading term is divisible by another's."""
    kept = []
    for el in basis:
        dominated = False
        for other in basis:
            if other is el:
                continue
            if other.comp == el.comp and mono_divides(other.mono, el.mono):
                if other.mono == el.mono:
                    if other.index < el.index:
                        dominated = True
                        break
                else:
                    dominated = True
                    break
        if not dominated:
            kept.append(el)
    return kept


def syzygy_generators(columns, ncomps, top_order, counter, helpers=()):
    """Generators of the syzygy module of the given columns, modulo helpers.

    columns: vectors living in components 0..ncomps-1.  Each column k is
    augmented with a unit in bookkeeping component ncomps + k; elements of
    the completed basis supported entirely in the bookkeeping block are
    syzygies of the columns modulo the helper span, and they generate all
    of them over the local ring.  Helpers (typically relation-ideal
    standard-basis elements times free basis vectors) carry no bookkeeping,
    so working modulo them computes syzygies over the quotient ring.

    The bookkeeping block carries a Schreyer order induced by the columns
    so that s-pair syzygies surface with predictable leading terms.
    """
    cols = list(columns)
    if not cols:
        return []
    lead = [vec_leading(c, top_order)[:2] for c in cols]
    bottom = SchreyerOrder(top_order, lead)
    order = SplitOrder(ncomps, top_order, bottom)
    unit = (0,) * _guess_nvars(cols)
    augmented = []
    flags = []
    for k, c in enumerate(cols):
        v = dict(c)
        v[(ncomps + k, unit)] = Fraction(1)
        augmented.append(v)
        flags.append(False)
    for h in helpers:
        augmented.append(dict(h))
        flags.append(True)
    basis = standard_basis_vectors(augmented, order, counter,
                                   syz_split=ncomps, helper_flags=flags)
    syz = []
    for el in basis:
        if el.comp >= ncomps:
            syz.append({(c - ncomps, m): x for (c, m), x in el.vec.items()})
    return syz


def _guess_nvars(cols):
    for c in cols:
        for (_, m) in c:
            return len(m)
    raise ValueError("cannot infer variable count from zero columns")
