"""Minimal free resolutions over a germ's local algebra, truncated at a bound.

The engine iterates syzygy steps over the localized polynomial ring,
carrying the relation ideal along as helper columns so that everything
happens over the quotient.  Non-minimal generators surface as unit
entries of the next differential and are pivoted out immediately; the
rank in the top requested degree is certified minimal by running one
extra syzygy step whose output is discarded.

Matrices are column-major: a differential is a list of columns, each a
list of polynomials of length nrows.  Column j of d_i is the image of
the j-th basis vector of F_i inside F_(i-1).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import mora
from .errors import InternalCheckError, PreconditionError
from .germs import krull_dim
from .ideals import normal_form
from .mora import StepCounter, TermOverPosition
from .poly import Polynomial
from .series import TruncatedSeries


@dataclass(frozen=True)
class BettiTable:
    """Ranks of a truncated minimal free resolution."""

    betas: tuple
    truncation: int

    def __getitem__(self, i):
        return self.betas[i]

    def poincare(self):
        return TruncatedSeries(self.betas, self.truncation)

    def __str__(self):
        head = "i: " + " ".join(str(i) for i in range(self.truncation + 1))
        body = "b: " + " ".join(str(b) for b in self.betas)
        return head + "\n" + body


class PresentedModule:
    """A cokernel presentation of a module over a germ's algebra."""

    __slots__ = ("germ", "columns", "nrows")

    def __init__(self, germ, columns, nrows):
        self.germ = germ
        self.nrows = nrows
        sb = germ.relations_sb()
        cleaned = []
        for col in columns:
            if len(col) != nrows:
                raise PreconditionError("ragged presentation matrix")
            red = [normal_form(e, sb, germ.order) for e in col]
            if any(not e.is_zero() for e in red):
                cleaned.append(red)
        self.columns = cleaned

    @staticmethod
    def cyclic(germ, ideal_generators):
        """O/I as the cokernel of a one-row matrix."""
        cols = [[g] for g in ideal_generators]
        return PresentedModule(germ, cols, 1)


class MinimalResolution:
    """Truncated minimal free resolution with verified structure.

    rank0 is the rank of F_0; the differentials run d_1 .. d_m with
    m <= truncation (shorter only when the resolution stops, which is
    recorded by a trailing empty differential).
    """

    def __init__(self, germ, rank0, differentials, truncation, counter=None):
        self.germ = germ
        self.rank0 = rank0
        self.differentials = differentials
        self.truncation = truncation
        self._verify(counter)

    @property
    def ranks(self):
        return [self.rank0] + [len(d) for d in self.differentials]

    @property
    def betti(self):
        betas = list(self.ranks)
        while len(betas) < self.truncation + 1:
            betas.append(0)
        return BettiTable(tuple(betas[: self.truncation + 1]), self.truncation)

    def _verify(self, counter=None):
        """Complex property and minimality; runs on every construction."""
        sb = self.germ.relations_sb(counter)
        order = self.germ.order
        for d in self.differentials:
            for col in d:
                for e in col:
                    if e.constant_term():
                        raise InternalCheckError(
                            "non-minimal differential entry (unit) survived")
        for da, db in zip(self.differentials, self.differentials[1:]):
            if not da:
                if db:
                    raise InternalCheckError("differential after a zero module")
                continue
            for col in db:
                acc = [Polynomial.zero(self.germ.nvars)
                       for _ in range(len(da[0]))]
                for j, coeff in enumerate(col):
                    if coeff.is_zero():
                        continue
                    target = da[j]
                    for r in range(len(acc)):
                        acc[r] = acc[r] + target[r] * coeff
                for e in acc:
                    if not normal_form(e, sb, order, counter).is_zero():
                        raise InternalCheckError("d o d != 0 modulo relations")


def minimal_free_resolution(germ, module, truncation, counter=None,
                            certify_last=True):
    """Resolve the cokernel of the presentation up to the truncation bound."""
    if truncation < 0:
        raise PreconditionError("truncation bound must be >= 0")
    counter = counter or StepCounter()
    sb = germ.relations_sb(counter)
    order = germ.order

    d1 = [list(col) for col in module.columns]
    nrows = module.nrows
    d1, nrows = _self_cancel(d1, nrows, sb, order, counter)
    diffs = [d1]
    levels = truncation + (1 if certify_last else 0)
    while len(diffs) < levels:
        if not diffs[-1]:
            break
        syz_cols = _syzygy_step(germ, diffs, sb, counter)
        diffs.append(syz_cols)
        if not syz_cols:
            break
        _cancel_between(diffs[-2], diffs[-1], sb, order, counter)
        if not diffs[-2]:
            diffs.pop()
            break
    if certify_last and len(diffs) > truncation:
        diffs = diffs[:truncation]
    return MinimalResolution(germ, nrows, diffs, truncation, counter)


def _module_order_chain(germ, diffs):
    """F_0 order, then Schreyer orders induced by each stored differential."""
    orders = [TermOverPosition(germ.order)]
    for d in diffs:
        base = orders[-1]
        lts = []
        for col in d:
            vec = _col_to_vec(col)
            comp, mono, _ = mora.vec_leading(vec, base)
            lts.append((comp, mono))
        orders.append(mora.SchreyerOrder(base, lts))
    return orders


def _col_to_vec(col):
    vec = {}
    for c, poly in enumerate(col):
        for m, x in poly.terms.items():
            vec[(c, m)] = x
    return vec


def _vec_to_col(vec, nrows, nvars):
    col = [Polynomial.zero(nvars) for _ in range(nrows)]
    buckets = {}
    for (c, m), x in vec.items():
        buckets.setdefault(c, {})[m] = x
    for c, terms in buckets.items():
        col[c] = Polynomial(terms, nvars)
    return col


def _relation_helpers(sb, nrows):
    helpers = []
    for g in sb:
        for c in range(nrows):
            helpers.append({(c, m): x for m, x in g.terms.items()})
    return helpers


def _syzygy_step(germ, diffs, sb, counter):
    """Columns of the next differential: syzygies over the quotient ring."""
    prev = diffs[-1]
    nrows = len(prev[0])
    top_order = _module_order_chain(germ, diffs[:-1])[-1]
    cols = [_col_to_vec(c) for c in prev]
    raw = mora.syzygy_generators(cols, nrows, top_order, counter,
                                 helpers=_relation_helpers(sb, nrows))
    out = []
    for vec in raw:
        col = _vec_to_col(vec, len(prev), germ.nvars)
        col = [normal_form(e, sb, germ.order, counter) for e in col]
        if any(not e.is_zero() for e in col):
            out.append(col)
    return out


def _find_unit(matrix):
    for b, col in enumerate(matrix):
        for a, e in enumerate(col):
            if e.constant_term():
                return a, b
    return None


def _drop_zero_columns(matrix):
    matrix[:] = [col for col in matrix
                 if any(not e.is_zero() for e in col)]


def _self_cancel(matrix, nrows, sb, order, counter):
    """Pivot unit entries out of a presentation matrix."""
    matrix = [[normal_form(e, sb, order, counter) for e in col]
              for col in matrix]
    _drop_zero_columns(matrix)
    while True:
        hit = _find_unit(matrix)
        if hit is None:
            break
        a, b = hit
        u = matrix[a][b]
        pivot_col = matrix[b]
        for j, col in enumerate(matrix):
            if j == b or col[a].is_zero():
                continue
            f = col[a]
            matrix[j] = [normal_form(u * x - f * y, sb, order, counter)
                         for x, y in zip(col, pivot_col)]
        del matrix[b]
        for col in matrix:
            del col[a]
        nrows -= 1
        _drop_zero_columns(matrix)
    return matrix, nrows


def _cancel_between(left, right, sb, order, counter):
    """Pivot unit entries out of `right`, deleting matched columns of `left`.

    A unit at (a, b) of right means column a of left is redundant; the
    trivial free summand is split off by unit-scaled column operations,
    which keeps left o right = 0 and all entries polynomial.
    """
    while True:
        hit = _find_unit(right)
        if hit is None:
            break
        a, b = hit
        u = right[a][b]
        pivot_col = right[b]
        for j, col in enumerate(right):
            if j == b or col[a].is_zero():
                continue
            f = col[a]
            right[j] = [normal_form(u * x - f * y, sb, order, counter)
                        for x, y in zip(col, pivot_col)]
        del right[b]
        for col in right:
            del col[a]
        del left[a]
        _drop_zero_columns(right)


# ---------------------------------------------------------------------------
# Betti numbers and Poincare series of subspaces.
# ---------------------------------------------------------------------------

def betti_numbers(germ, sub, truncation, counter=None):
    """Betti table of the cyclic module O/I(sub) over the germ's algebra."""
    if sub.ambient is not germ:
        raise PreconditionError("subspace does not live in the given germ")
    key = ("betti", _matrix_key(sub.ideal.generators), truncation)
    if key not in germ._cache:
        module = PresentedModule.cyclic(germ, list(sub.ideal.generators))
        res = minimal_free_resolution(germ, module, truncation, counter)
        germ._cache[key] = res.betti
    return germ._cache[key]


def residue_betti(germ, truncation, counter=None):
    """Betti table of the residue field (the origin subspace)."""
    from .germs import origin_subspace
    return betti_numbers(germ, origin_subspace(germ), truncation, counter)


def poincare_series_direct(germ, sub, truncation, counter=None):
    return betti_numbers(germ, sub, truncation, counter).poincare()


def _matrix_key(polys):
    return tuple(tuple(sorted(p.terms.items())) for p in polys)


# ---------------------------------------------------------------------------
# Depth, Cohen-Macaulay, type and Gorenstein via Ext into the ring.
# ---------------------------------------------------------------------------

def _transpose(columns, nrows):
    """Columns of the transposed matrix (the rows of the given one)."""
    return [[col[a] for col in columns] for a in range(nrows)]


def _unit_col(j, nrows, nvars):
    col = [Polynomial.zero(nvars) for _ in range(nrows)]
    col[j] = Polynomial.constant(1, nvars)
    return col


def _syz_over_quotient(germ, columns, nrows, sb, counter):
    """Syzygies over O of the given columns (column-major, length nrows).

    Columns that vanish modulo the relations contribute their unit
    syzygy, which matters when the columns present a map whose kernel is
    being computed.
    """
    top = TermOverPosition(germ.order)
    vecs = []
    keep = []
    for j, col in enumerate(columns):
        red = [normal_form(e, sb, germ.order, counter) for e in col]
        v = _col_to_vec(red)
        if v:
            vecs.append(v)
            keep.append(j)
    out = []
    if vecs:
        raw = mora.syzygy_generators(vecs, nrows, top, counter,
                                     helpers=_relation_helpers(sb, nrows))
        for vec in raw:
            col = _vec_to_col(vec, len(vecs), germ.nvars)
            col = [normal_form(e, sb, germ.order, counter) for e in col]
            full = [Polynomial.zero(germ.nvars) for _ in range(len(columns))]
            for slot, j in enumerate(keep):
                full[j] = col[slot]
            out.append(full)
    for j in range(len(columns)):
        if j not in keep:
            out.append(_unit_col(j, len(columns), germ.nvars))
    return out


def _ext_dimension(germ, i, res, counter):
    """dim_k Ext^i(k, O) read off a resolution of the residue field.

    Ext^i is ker(transpose d_(i+1)) / im(transpose d_i); it is a vector
    space over the residue field, so its dimension equals the number of
    generators of a minimal presentation of that subquotient.
    """
    sb = germ.relations_sb(counter)
    order = germ.order
    diffs = res.differentials
    ranks = res.ranks

    def rank_of(level):
        if level < len(ranks):
            return ranks[level]
        if diffs and not diffs[-1]:
            return 0
        raise PreconditionError("resolution too short for this Ext degree")

    rank_i = rank_of(i)
    if rank_i == 0:
        return 0
    if i < len(diffs) and diffs[i]:
        t_cols = _transpose(diffs[i], rank_i)
        kern = _syz_over_quotient(germ, t_cols, len(t_cols[0]), sb, counter)
        kern = [c for c in kern if any(not e.is_zero() for e in c)]
    else:
        rank_of(i + 1)                         # raises if merely truncated
        kern = [_unit_col(j, rank_i, germ.nvars) for j in range(rank_i)]
    if not kern:
        return 0
    if i == 0:
        image_cols = []
    else:
        image_cols = _transpose(diffs[i - 1], ranks[i - 1]) if diffs[i - 1] else []
    p = len(kern)
    lifts = _syz_over_quotient(germ, kern + image_cols, rank_i, sb, counter)
    relations = []
    for vec in lifts:
        head = vec[:p]
        if any(not e.is_zero() for e in head):
            relations.append(list(head))
    _, p_min = _self_cancel(relations, p, sb, order, counter)
    return p_min


def _residue_resolution(germ, levels, counter):
    key = ("kres", levels)
    if key not in germ._cache:
        from .germs import origin_subspace
        module = PresentedModule.cyclic(
            germ, list(origin_subspace(germ).ideal.generators))
        germ._cache[key] = minimal_free_resolution(
            germ, module, levels, counter, certify_last=False)
    return germ._cache[key]


def depth(germ, counter=None):
    """min { i : Ext^i(k, O) != 0 }; lies between 0 and the Krull dimension."""
    counter = counter or StepCounter()
    dim = krull_dim(germ, counter)
    res = _residue_resolution(germ, dim + 1, counter)
    for i in range(dim + 1):
        if _ext_dimension(germ, i, res, counter) > 0:
            return i
    raise InternalCheckError("no nonvanishing Ext up to the dimension")


def cm_type(germ, counter=None):
    """dim_k Ext^depth(k, O), the Cohen-Macaulay type."""
    counter = counter or StepCounter()
    dim = krull_dim(germ, counter)
    res = _residue_resolution(germ, dim + 1, counter)
    for i in range(dim + 1):
        d = _ext_dimension(germ, i, res, counter)
        if d > 0:
            return d
    raise InternalCheckError("no nonvanishing Ext up to the dimension")


def is_cohen_macaulay(germ, counter=None):
    return depth(germ, counter) == krull_dim(germ, counter)


def is_gorenstein_direct(germ, counter=None):
    return is_cohen_macaulay(germ, counter) and cm_type(germ, counter) == 1
