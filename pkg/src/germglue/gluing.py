"""Gluing of germs along a common subspace via fiber-product presentations.

Given surjections alpha: O_X -> O_Z and beta: O_Y -> O_Z, the glued germ
is presented by one generator per element of

    {(x_i, q_i)} u {(p_j, y_j)} u {(k_t, 0)},

where q_i lifts alpha(x_i) through beta, p_j lifts beta(y_j) through
alpha, and the k_t generate ker(alpha).  Its relation ideal is the
intersection of the kernels of the two componentwise substitution maps,
and the two projections send a generator to its components.  The
presentation is then minimalized so that the variable count equals the
embedding dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (DegenerateGluingError, InternalCheckError, LiftError,
                     PreconditionError)
from .germs import (AnalyticGerm, GermSurjection, Subspace, check_surjective,
                    kernel_subspace, krull_dim, minimalize_presentation,
                    quotient_surjection, transport_subspace)
from .ideals import (Ideal, compute_standard_basis, ideal_intersection,
                     map_kernel, normal_form)
from .germs import KERNEL_JET_DEGREE
from .mora import StepCounter
from .poly import MonomialOrder, Polynomial


@dataclass
class GluingDatum:
    """The input of a gluing: three germs and two certified surjections."""

    X: AnalyticGerm
    Y: AnalyticGerm
    Z: AnalyticGerm
    alpha: GermSurjection
    beta: GermSurjection
    is_self_glue: bool = False

    def __post_init__(self):
        if self.alpha.source is not self.X or self.alpha.target is not self.Z:
            raise PreconditionError("alpha must map X onto Z")
        if self.beta.source is not self.Y or self.beta.target is not self.Z:
            raise PreconditionError("beta must map Y onto Z")
        self.alpha.require_surjective()
        self.beta.require_surjective()
        for m, factor in ((self.alpha, "X"), (self.beta, "Y")):
            if not _has_nonzero_kernel(m):
                raise DegenerateGluingError(
                    f"the surjection from {factor} is an isomorphism onto Z; "
                    "gluing requires both algebras to differ from the target")

    def z_is_point(self):
        from .germs import embedding_dim
        return embedding_dim(self.Z) == 0


def _has_nonzero_kernel(m, counter=None):
    sb = m.source.relations_sb(counter)
    for g in m.kernel_ideal(counter).generators:
        if not normal_form(g, sb, m.source.order, counter).is_zero():
            return True
    return False


class GluedGerm:
    """A presented fiber product with its two projections."""

    def __init__(self, presentation, pi1, pi2, datum, counter=None):
        self.presentation = presentation
        self.pi1 = pi1
        self.pi2 = pi2
        self.datum = datum
        self._check_commutativity(counter)

    def _check_commutativity(self, counter=None):
        alpha, beta = self.datum.alpha, self.datum.beta
        for g1, g2 in zip(self.pi1.images, self.pi2.images):
            left = alpha.apply(g1, counter)
            right = beta.apply(g2, counter)
            if left != right:
                raise InternalCheckError(
                    "projections do not commute with the gluing data")

    def dim(self, counter=None):
        return krull_dim(self.presentation, counter)

    def __repr__(self):
        return (f"GluedGerm({self.presentation.name!r}, "
                f"{self.presentation.nvars} vars)")


def lift_through(m, element, counter=None):
    """A polynomial preimage of a target element under a surjection.

    Rewrites the element modulo the graph ideal of the map with the
    target block eliminated; fails with LiftError when no polynomial
    representative in the source variables alone is reached (an analytic
    preimage always exists, but it need not be polynomial).
    """
    m.require_surjective()
    nz = m.target.nvars
    ns = m.source.nvars
    if element.is_zero():
        return Polynomial.zero(ns)
    big = MonomialOrder(((nz, "degrevlex"), (ns, "negdegrevlex")), nz + ns)
    zpos = list(range(nz))
    spos = list(range(nz, nz + ns))
    gens = [g.embed(zpos, big.nvars) for g in m.target.relations.generators]
    for i, img in enumerate(m.images):
        gens.append(Polynomial.variable(spos[i], big.nvars)
                    - img.embed(zpos, big.nvars))
    sb = compute_standard_basis(gens, big, counter)
    nf = normal_form(element.embed(zpos, big.nvars), sb, big, counter)
    if not nf.support_variables() <= set(spos):
        raise LiftError(
            f"no polynomial lift through {m.name!r}; normal form still "
            "involves target variables")
    lift = nf.restrict(spos)
    if lift.constant_term():
        raise InternalCheckError("lift of a maximal-ideal element has a unit part")
    return lift


def fiber_product_presentation(datum, name=None, lift_strategy="normal_form",
                               counter=None):
    """Construct the glued germ for a valid datum.

    lift_strategy "normal_form" takes the canonical reduced lift;
    "shifted" adds a kernel element of beta to every lift of an
    alpha-image, which changes the presentation but not the isomorphism
    class (the test suite exploits this).
    """
    counter = counter or StepCounter()
    X, Y, Z = datum.X, datum.Y, datum.Z
    alpha, beta = datum.alpha, datum.beta
    name = name or f"{X.name}+{Y.name}_along_{Z.name}"

    q = [lift_through(beta, alpha.images[i], counter) for i in range(X.nvars)]
    if lift_strategy == "shifted":
        shift = _first_kernel_element(beta, counter)
        q = [qi + shift for qi in q]
    elif lift_strategy != "normal_form":
        raise PreconditionError(f"unknown lift strategy {lift_strategy!r}")
    p = [lift_through(alpha, beta.images[j], counter) for j in range(Y.nvars)]
    kx = []
    sbx = X.relations_sb(counter)
    for g in alpha.kernel_ideal(counter).generators:
        g = normal_form(g, sbx, X.order, counter)
        if not g.is_zero():
            kx.append(g)

    first = [X.variable(v) for v in X.var_names] + p + kx
    second = q + [Y.variable(v) for v in Y.var_names] \
        + [Polynomial.zero(Y.nvars)] * len(kx)
    gen_names = ([f"u{i + 1}" for i in range(X.nvars)]
                 + [f"w{j + 1}" for j in range(Y.nvars)]
                 + [f"k{t + 1}" for t in range(len(kx))])

    ka = map_kernel(len(gen_names), X.relations, first,
                    counter=counter, jet_check_degree=KERNEL_JET_DEGREE)
    kb = map_kernel(len(gen_names), Y.relations, second,
                    counter=counter, jet_check_degree=KERNEL_JET_DEGREE)
    relations = ideal_intersection(ka, kb, counter)

    raw = AnalyticGerm(name, gen_names, list(relations.generators))
    presentation = minimalize_presentation(raw, name=name, counter=counter)
    kept = [gen_names.index(v) for v in presentation.var_names]
    pi1 = GermSurjection(presentation, X, [first[i] for i in kept],
                         name=f"pi1({name})")
    pi2 = GermSurjection(presentation, Y, [second[i] for i in kept],
                         name=f"pi2({name})")
    pi1.require_surjective()
    pi2.require_surjective()
    return GluedGerm(presentation, pi1, pi2, datum, counter)


def _first_kernel_element(m, counter=None):
    sb = m.source.relations_sb(counter)
    for g in m.kernel_ideal(counter).generators:
        g = normal_form(g, sb, m.source.order, counter)
        if not g.is_zero():
            return g
    raise DegenerateGluingError("surjection has zero kernel")


def self_glue(X, sub, name=None, counter=None):
    """Glue a germ to itself along a subspace: both maps are the quotient."""
    quotient, proj = quotient_surjection(
        X, sub, quotient_name=f"{X.name}/{sub.name}")
    datum = GluingDatum(X, X, quotient, proj, proj, is_self_glue=True)
    return fiber_product_presentation(
        datum, name=name or f"{X.name}self_{sub.name}", counter=counter)


def glued_dim(glued, counter=None):
    """Dimension of the gluing plus the max-law verification flag."""
    value = glued.dim(counter)
    expected = max(krull_dim(glued.datum.X, counter),
                   krull_dim(glued.datum.Y, counter))
    return value, value == expected


def transport_to_glued(glued, sub, counter=None):
    """Preimage of a subspace of either factor inside the presentation."""
    if sub.ambient is glued.datum.X:
        return transport_subspace(sub, glued.pi1, counter)
    if sub.ambient is glued.datum.Y:
        return transport_subspace(sub, glued.pi2, counter)
    raise PreconditionError("subspace must live in one of the glued factors")


def factor_subspace_x(glued, counter=None):
    """The first factor as a subspace of the presentation (kernel of pi1)."""
    return kernel_subspace(glued.pi1, counter)


def factor_subspace_y(glued, counter=None):
    return kernel_subspace(glued.pi2, counter)


def z_as_subspace_of(m, counter=None):
    """The common subspace Z seen inside the source of a gluing surjection."""
    return kernel_subspace(m, counter)
