"""Germs of analytic spaces as local polynomial quotient presentations.

A germ is the data (variables, relation ideal, local order) standing in
for the analytic local ring at the origin.  Subspaces are given by
larger ideals in the same ambient; morphisms are given by images of the
source variables and are certified surjective before anything downstream
relies on them.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (InternalCheckError, NotAGermError, PreconditionError)
from .ideals import (Ideal, JetSpace, compute_standard_basis,
                     leading_ideal_dimension, map_jet_matrix, map_kernel,
                     normal_form)
from .linalg import rank
from .mora import StepCounter
from .poly import MonomialOrder, Polynomial, parse_polynomial

SURJECTIVITY_JET_DEGREE = 3
KERNEL_JET_DEGREE = 3


class AnalyticGerm:
    """A local algebra presentation k[vars]_loc / relations."""

    __slots__ = ("name", "var_names", "relations", "order", "_cache")

    def __init__(self, name, var_names, relation_polys):
        self.name = name
        self.var_names = tuple(var_names)
        n = len(self.var_names)
        if len(set(self.var_names)) != n:
            raise NotAGermError(f"duplicate variable names in germ {name!r}")
        self.order = MonomialOrder.local(n)
        polys = []
        for p in relation_polys:
            if p.nvars != n:
                raise NotAGermError("relation in the wrong ambient ring")
            if p.constant_term():
                raise NotAGermError(
                    f"relation of germ {name!r} does not vanish at the base point")
            if not p.is_zero():
                polys.append(p)
        self.relations = Ideal(polys, self.order)
        self._cache = {}

    @property
    def nvars(self):
        return len(self.var_names)

    def relations_sb(self, counter=None):
        return self.relations.standard_basis(counter)

    def variable(self, name):
        return Polynomial.variable(self.var_names.index(name), self.nvars)

    def parse(self, text):
        return parse_polynomial(text, self.var_names)

    def reduce(self, poly, counter=None):
        """Normal form modulo the relations; canonical class representative."""
        return normal_form(poly, self.relations_sb(counter), self.order, counter)

    def is_point(self):
        return embedding_dim(self) == 0

    def jet_space(self, degree, counter=None):
        key = ("jet", degree)
        if key not in self._cache:
            self._cache[key] = JetSpace(self.relations_sb(counter),
                                        self.nvars, degree)
        return self._cache[key]

    def __repr__(self):
        return f"AnalyticGerm({self.name!r}, vars={list(self.var_names)})"


def make_germ(name, var_names, relations):
    """Build a germ; relations may be polynomials or grammar strings."""
    polys = []
    for r in relations:
        if isinstance(r, str):
            polys.append(parse_polynomial(r, var_names))
        else:
            polys.append(r)
    return AnalyticGerm(name, var_names, polys)


class Subspace:
    """A closed subspace of a germ: the ambient relations plus extra generators."""

    __slots__ = ("name", "ambient", "extra_generators", "_ideal")

    def __init__(self, ambient, extra_generators, name=None):
        self.ambient = ambient
        extras = []
        for p in extra_generators:
            if isinstance(p, str):
                p = ambient.parse(p)
            if p.nvars != ambient.nvars:
                raise PreconditionError("subspace generator in the wrong ambient")
            if p.constant_term():
                raise PreconditionError(
                    "subspace generator does not vanish at the base point")
            if not p.is_zero():
                extras.append(p)
        self.extra_generators = tuple(extras)
        self.name = name or f"sub({ambient.name})"
        self._ideal = None

    @property
    def ideal(self):
        if self._ideal is None:
            gens = list(self.ambient.relations.generators) + list(self.extra_generators)
            self._ideal = Ideal(gens, self.ambient.order)
        return self._ideal

    def is_full(self, counter=None):
        """Does the subspace equal the whole germ (ideal = relations)?"""
        sb = self.ambient.relations_sb(counter)
        return all(normal_form(g, sb, self.ambient.order, counter).is_zero()
                   for g in self.extra_generators)

    def __repr__(self):
        return f"Subspace({self.name!r} in {self.ambient.name!r})"


def origin_subspace(germ, name=None):
    """The reduced point at the origin: ideal generated by all variables."""
    gens = [Polynomial.variable(i, germ.nvars) for i in range(germ.nvars)]
    return Subspace(germ, gens, name=name or f"origin({germ.name})")


def full_subspace(germ, name=None):
    return Subspace(germ, [], name=name or f"full({germ.name})")


# ---------------------------------------------------------------------------
# Numerical invariants.
# ---------------------------------------------------------------------------

def embedding_dim(germ):
    """dim m/m^2 = #vars minus the rank of the relations' linear parts."""
    rows = [g.linear_coefficients() for g in germ.relations.generators]
    rows = [r for r in rows if any(r)]
    return germ.nvars - (rank(rows) if rows else 0)


def krull_dim(germ, counter=None):
    if not germ.relations.generators:
        return germ.nvars
    return leading_ideal_dimension(germ.relations, counter)


def is_smooth(germ, counter=None):
    return embedding_dim(germ) == krull_dim(germ, counter)


# ---------------------------------------------------------------------------
# Surjections between germs.
# ---------------------------------------------------------------------------

class GermSurjection:
    """A local homomorphism given by one image per source variable.

    Construction validates shape, locality and that source relations map
    into target relations.  Surjectivity is computed on demand and
    cached; operations that need it call require_surjective().
    """

    __slots__ = ("name", "source", "target", "images", "_surjective", "_kernel")

    def __init__(self, source, target, images, name=None):
        self.name = name or f"{source.name}->{target.name}"
        self.source = source
        self.target = target
        imgs = []
        for img in images:
            if isinstance(img, str):
                img = target.parse(img)
            if img.nvars != target.nvars:
                raise PreconditionError("map image outside the target ring")
            if img.constant_term():
                raise PreconditionError(
                    f"map {self.name!r} is not local: image has a constant term")
            imgs.append(img)
        if len(imgs) != source.nvars:
            raise PreconditionError("one image required per source variable")
        self.images = tuple(imgs)
        sb = target.relations_sb()
        for rel in source.relations.generators:
            image = rel.substitute(self.images) if source.nvars else \
                Polynomial.zero(target.nvars)
            if not normal_form(image, sb, target.order).is_zero():
                raise PreconditionError(
                    f"map {self.name!r} does not send source relations into "
                    "target relations")
        self._surjective = None
        self._kernel = None

    def apply(self, poly, counter=None):
        """Image of a source polynomial, reduced modulo target relations."""
        if self.source.nvars:
            img = poly.substitute(self.images)
        else:
            img = Polynomial.constant(poly.constant_term(), self.target.nvars)
        return self.target.reduce(img, counter)

    def require_surjective(self):
        if not check_surjective(self):
            raise PreconditionError(f"map {self.name!r} is not surjective")

    def kernel_ideal(self, counter=None):
        """Kernel of the map as an ideal of the source ring (cached)."""
        self.require_surjective()
        if self._kernel is None:
            self._kernel = map_kernel(
                self.source.nvars, self.target.relations, list(self.images),
                source_order=self.source.order, counter=counter,
                jet_check_degree=KERNEL_JET_DEGREE)
        return self._kernel

    def __repr__(self):
        return f"GermSurjection({self.name!r})"


def check_surjective(m, jet_degree=None, counter=None):
    """Is the map surjective onto its target algebra?

    Two independent checks must agree: the rank test on cotangent spaces
    (sufficient and necessary for analytic algebras by Nakayama) and a
    lifting test on truncated jets.  Disagreement indicates a bug and
    raises InternalCheckError.
    """
    if m._surjective is not None and jet_degree is None:
        return m._surjective
    degree = jet_degree or SURJECTIVITY_JET_DEGREE
    ell = m.target.nvars
    rows = [img.linear_coefficients() for img in m.images]
    rows += [g.linear_coefficients() for g in m.target.relations.generators]
    rows = [r for r in rows if any(r)]
    cotangent_ok = (rank(rows) if rows else 0) == ell

    jet = m.target.jet_space(degree, counter)
    quotient_dim = jet.quotient_dimension()
    if m.source.nvars and ell:
        _, image_rows = map_jet_matrix(m.source.nvars, jet, list(m.images))
        image_rows = [r for r in image_rows if any(r)]
        jets_ok = (rank(image_rows) if image_rows else 0) == quotient_dim
    else:
        jets_ok = quotient_dim == 0

    if cotangent_ok != jets_ok:
        raise InternalCheckError(
            f"surjectivity checks disagree for {m.name!r}: "
            f"cotangent {cotangent_ok}, degree-{degree} jets {jets_ok}")
    if jet_degree is None:
        m._surjective = cotangent_ok
    return cotangent_ok


def kernel_subspace(m, counter=None):
    """The subspace of the source cut out by the kernel of the map."""
    kern = m.kernel_ideal(counter)
    return Subspace(m.source, list(kern.generators),
                    name=f"ker({m.name})")


def transport_subspace(sub, m, counter=None):
    """Preimage of a subspace of the target, as a subspace of the source."""
    if sub.ambient is not m.target:
        raise PreconditionError("subspace does not live in the map's target")
    m.require_surjective()
    enlarged = Ideal(list(sub.ideal.generators), m.target.order)
    preimage = map_kernel(
        m.source.nvars, enlarged, list(m.images),
        source_order=m.source.order, counter=counter,
        jet_check_degree=KERNEL_JET_DEGREE)
    return Subspace(m.source, list(preimage.generators),
                    name=f"preimage({sub.name})")


def quotient_surjection(germ, sub, quotient_name=None, map_name=None):
    """The quotient germ by a subspace ideal and the canonical surjection.

    The quotient reuses the ambient variables; the surjection sends each
    variable to itself.
    """
    q = AnalyticGerm(quotient_name or f"{germ.name}/{sub.name}",
                     germ.var_names, list(sub.ideal.generators))
    images = [Polynomial.variable(i, germ.nvars) for i in range(germ.nvars)]
    return q, GermSurjection(germ, q, images, name=map_name)


# ---------------------------------------------------------------------------
# Minimal presentations.
# ---------------------------------------------------------------------------

def minimalize_presentation(germ, name=None, counter=None):
    """Eliminate variables carrying unit linear relations.

    Returns (minimal_germ, kept_names).  The minimal germ presents the
    same analytic algebra and every relation lies in the square of the
    maximal ideal, so its variable count equals the embedding dimension.
    """
    current = germ
    while True:
        pivot = _linear_pivot(current, counter)
        if pivot is None:
            break
        keep = [i for i in range(current.nvars) if i != pivot]
        target_ideal = current.relations
        images = [Polynomial.variable(i, current.nvars) for i in keep]
        kernel = map_kernel(len(keep), target_ideal, images,
                            counter=counter,
                            jet_check_degree=KERNEL_JET_DEGREE)
        names = [current.var_names[i] for i in keep]
        current = AnalyticGerm(name or f"{germ.name}~", names,
                               list(kernel.generators))
    if name:
        current = AnalyticGerm(name, current.var_names,
                               list(current.relations.generators))
    assert current.nvars == embedding_dim(current)
    return current


def _linear_pivot(germ, counter=None):
    """Index of a variable eliminable by a unit linear relation, or None."""
    for g in germ.relations_sb(counter):
        lin = g.linear_coefficients()
        for i, c in enumerate(lin):
            if c:
                return i
    return None
