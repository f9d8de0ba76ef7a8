"""Ideal-level operations: standard bases, membership, intersection,
elimination kernels of ring maps, and the dimension of a leading ideal.

All localization happens through the monomial order: a local order on a
variable block makes computations take place in the localization of the
polynomial ring at the origin, which is how germs are presented.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import mora
from .errors import InternalCheckError, PreconditionError
from .linalg import rank, rref
from .mora import StepCounter, TermOverPosition
from .poly import MonomialOrder, Polynomial, mono_deg


def _ring_order(order):
    return TermOverPosition(order)


def _to_vec(poly):
    return mora.vec_from_poly(poly)


def _to_poly(vec, nvars):
    return Polynomial({m: c for (_, m), c in vec.items()}, nvars)


class Ideal:
    """A finite generating set with an order; the standard basis is cached."""

    __slots__ = ("generators", "order", "_sb")

    def __init__(self, generators, order):
        self.generators = tuple(g for g in generators if not g.is_zero())
        self.order = order
        self._sb = None

    @property
    def nvars(self):
        return self.order.nvars

    def standard_basis(self, counter=None):
        if self._sb is None:
            self._sb = compute_standard_basis(self.generators, self.order, counter)
        return self._sb

    def __repr__(self):
        return f"Ideal({len(self.generators)} gens, {self.order.nvars} vars)"


def compute_standard_basis(generators, order, counter=None):
    """Minimal monic standard basis of the generated (localized) ideal."""
    counter = counter or StepCounter()
    vecs = [_to_vec(g) for g in generators if not g.is_zero()]
    if not vecs:
        return []
    module_order = _ring_order(order)
    basis = mora.standard_basis_vectors(vecs, module_order, counter)
    basis = mora.minimalize_basis(basis)
    nvars = order.nvars
    polys = [_to_poly(el.vec, nvars) for el in basis]
    polys.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
    return polys


def normal_form(f, basis, order, counter=None):
    """Mora weak normal form of f against a list of polynomials."""
    if f.is_zero() or not basis:
        return f
    counter = counter or StepCounter()
    module_order = _ring_order(order)
    reducers = [mora.SBElement(_to_vec(g), module_order, i)
                for i, g in enumerate(basis) if not g.is_zero()]
    h = mora.mora_reduce(_to_vec(f), reducers, module_order, counter)
    return _to_poly(h, f.nvars)


def mora_normal_form(f, generators, order, counter=None):
    """Weak normal form against the raw generator list (no completion)."""
    return normal_form(f, list(generators), order, counter)


def ideal_membership(f, ideal, counter=None):
    """Is f in the localized ideal?  Decided via the standard basis."""
    return normal_form(f, ideal.standard_basis(counter), ideal.order, counter).is_zero()


def spoly(f, g, order):
    """Ring-level s-polynomial, exposed for the confluence test suite."""
    module_order = _ring_order(order)
    a = mora.SBElement(_to_vec(f), module_order, 0)
    b = mora.SBElement(_to_vec(g), module_order, 1)
    return _to_poly(mora.spair(a, b, module_order), f.nvars)


# ---------------------------------------------------------------------------
# Elimination.
# ---------------------------------------------------------------------------

def eliminate(generators, order, keep_positions, counter=None):
    """Standard-basis elimination: intersect with the subring on keep_positions.

    The order must make the discarded variables an elimination block
    (global on that block); only then does the contraction to the kept
    local block equal dropping every basis element that touches a
    discarded variable.
    """
    sb = compute_standard_basis(generators, order, counter)
    keep = list(keep_positions)
    keepset = set(keep)
    kept = []
    for g in sb:
        if g.support_variables() <= keepset:
            kept.append(g.restrict(keep))
    return kept


def ideal_intersection(I, J, counter=None):
    """Generators of I cap J via the tag-variable trick t*I + (1-t)*J."""
    if I.nvars != J.nvars:
        raise PreconditionError("intersection requires a common ambient ring")
    n = I.nvars
    big = MonomialOrder.elimination(1, n)
    positions = list(range(1, n + 1))
    t = Polynomial.variable(0, n + 1)
    one = Polynomial.constant(1, n + 1)
    gens = []
    for g in I.generators:
        gens.append(t * g.embed(positions, n + 1))
    for g in J.generators:
        gens.append((one - t) * g.embed(positions, n + 1))
    result = eliminate(gens, big, positions, counter)
    return Ideal(result, I.order)


# ---------------------------------------------------------------------------
# Kernels of local ring maps.
# ---------------------------------------------------------------------------

def map_kernel(source_nvars, target_relations, images, source_order=None,
               counter=None, jet_check_degree=None):
    """Kernel of k[s]_loc -> k[z]_loc / target_relations, s_i -> images[i].

    Computed from the graph ideal by eliminating the target block
    (global) over the local source block.  Images must vanish at the
    origin so the map is local.

    jet_check_degree, when set and the map is surjective, cross-checks
    the computed kernel against an exact truncated-jet kernel and raises
    InternalCheckError on any gap; see verify_kernel_jets.
    """
    nz = target_relations.order.nvars
    for img in images:
        if img.nvars != nz:
            raise PreconditionError("images must live in the target ring")
        if img.constant_term():
            raise PreconditionError("images of a local map must vanish at the origin")
    if len(images) != source_nvars:
        raise PreconditionError("one image required per source variable")
    big = MonomialOrder(((nz, "degrevlex"), (source_nvars, "negdegrevlex")),
                        nz + source_nvars)
    zpos = list(range(nz))
    spos = list(range(nz, nz + source_nvars))
    gens = [g.embed(zpos, big.nvars) for g in target_relations.generators]
    for i, img in enumerate(images):
        gens.append(Polynomial.variable(spos[i], big.nvars)
                    - img.embed(zpos, big.nvars))
    kept = eliminate(gens, big, spos, counter)
    order = source_order or MonomialOrder.local(source_nvars)
    kernel = Ideal(kept, order)
    for g in kernel.generators:
        image = g.substitute(images) if source_nvars else Polynomial.zero(nz)
        if not normal_form(image, target_relations.standard_basis(counter),
                           target_relations.order, counter).is_zero():
            raise InternalCheckError("kernel generator does not map to zero")
    if jet_check_degree:
        verify_kernel_jets(kernel, target_relations, images, jet_check_degree,
                           counter)
    return kernel


# ---------------------------------------------------------------------------
# Truncated jets: exact finite-dimensional snapshots of local algebras.
# ---------------------------------------------------------------------------

def monomials_up_to(nvars, maxdeg, include_constant=False):
    """All exponent tuples of total degree <= maxdeg, deterministic order."""
    monos = []
    lo = 0 if include_constant else 1
    for d in range(lo, maxdeg + 1):
        monos.extend(_monomials_of_degree(nvars, d))
    return monos


def _monomials_of_degree(nvars, d):
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in _monomials_of_degree(nvars - 1, d - first):
            out.append((first,) + rest)
    return out


class JetSpace:
    """The quotient k[x]/(I + m^(D+1)) on the degree-1..D monomial basis."""

    def __init__(self, relations_sb, nvars, degree):
        self.nvars = nvars
        self.degree = degree
        self.monos = monomials_up_to(nvars, degree)
        self.index = {m: i for i, m in enumerate(self.monos)}
        rows = []
        for g in relations_sb:
            val = g.order_valuation()
            if val is None:
                continue
            for m in monomials_up_to(nvars, degree - val, include_constant=True):
                rows.append(self.vectorize(g.mul_term(m, Fraction(1))))
        self.ideal_rows, self.ideal_pivots = rref(rows)

    def vectorize(self, poly):
        row = [Fraction(0)] * len(self.monos)
        for m, c in poly.terms.items():
            deg = mono_deg(m)
            if deg == 0:
                raise ValueError("jet space holds the maximal ideal only")
            if deg <= self.degree:
                row[self.index[m]] = c
        return row

    def reduce(self, row):
        v = list(row)
        for r, p in zip(self.ideal_rows, self.ideal_pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, r)]
        return v

    def quotient_dimension(self):
        return len(self.monos) - len(self.ideal_pivots)


def map_jet_matrix(source_nvars, jet, images):
    """Rows: reduced jets of the images of all source monomials of deg 1..D."""
    smonos = monomials_up_to(source_nvars, jet.degree)
    rows = []
    for m in smonos:
        img = Polynomial.constant(1, jet.nvars)
        for i, e in enumerate(m):
            for _ in range(e):
                img = (img * images[i]).truncate(jet.degree)
        rows.append(jet.reduce(jet.vectorize(img)))
    return smonos, rows


def verify_kernel_jets(kernel, target_relations, images, degree, counter=None):
    """Exact completeness check for kernels of surjective local maps.

    For a surjective local map the degree-D jet of the true kernel equals
    the kernel of the induced map on degree-D jets.  Comparing dimensions
    against the jets of the computed kernel certifies that no kernel
    element of degree <= D was missed by elimination.
    """
    source_nvars = kernel.nvars
    jet = JetSpace(target_relations.standard_basis(counter),
                   target_relations.nvars, degree)
    smonos, rows = map_jet_matrix(source_nvars, jet, images)
    true_dim = len(smonos) - rank(rows) if rows else 0
    computed = JetSpace(kernel.standard_basis(counter), source_nvars, degree)
    computed_dim = len(computed.ideal_pivots)
    if computed_dim != true_dim:
        raise InternalCheckError(
            f"kernel incomplete at jet degree {degree}: "
            f"elimination found dimension {computed_dim}, jets give {true_dim}")


# ---------------------------------------------------------------------------
# Dimension of the leading ideal.
# ---------------------------------------------------------------------------

def leading_ideal_dimension(ideal, counter=None):
    """Krull dimension of the localized quotient ring.

    Equals the combinatorial dimension of the monomial leading ideal:
    the largest set of variables meeting the support of no leading
    monomial of the standard basis.
    """
    sb = ideal.standard_basis(counter)
    n = ideal.nvars
    supports = []
    for g in sb:
        lm = g.leading_monomial(ideal.order)
        if mono_deg(lm) == 0:
            raise PreconditionError("ideal contains a unit; not a germ ideal")
        supports.append(frozenset(i for i, e in enumerate(lm) if e))
    supports = set(supports)
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            sset = set(subset)
            if all(not s <= sset for s in supports):
                return size
    return 0
