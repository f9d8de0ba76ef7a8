"""Numerical structure criteria for glued germs and their direct cross-checks.

Every criterion is hypothesis-gated: it reports not-applicable outside
its stated hypotheses, and otherwise both the formula verdict and the
direct computation it predicts, with a provenance flag that surfaces any
disagreement instead of hiding it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError
from .germs import embedding_dim, is_smooth, krull_dim
from .largeness import GluingData
from .resolution import (cm_type, depth, is_cohen_macaulay,
                         is_gorenstein_direct, residue_betti)


@dataclass
class CriterionResult:
    name: str
    applicable: bool
    predicted: object = None
    direct: object = None
    details: dict = field(default_factory=dict)

    @property
    def provenance(self):
        if not self.applicable:
            return "not-applicable"
        if self.direct is None:
            return "formula"
        if self.predicted is None:
            return "direct"
        return "both-agree" if self.predicted == self.direct else "DISAGREE"

    @property
    def ok(self):
        return self.provenance in ("both-agree", "formula", "direct",
                                   "not-applicable")

    def as_dict(self):
        return {
            "name": self.name,
            "applicable": self.applicable,
            "predicted": _plain(self.predicted),
            "direct": _plain(self.direct),
            "provenance": self.provenance,
            "details": {k: _plain(v) for k, v in self.details.items()},
        }


def _plain(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    return value


@dataclass
class StructureReport:
    germ_name: str
    edim: int
    dim: int
    depth: int
    cm_type: int
    smooth: bool
    singular: bool
    hypersurface: bool
    complete_intersection: bool
    gorenstein: bool
    cohen_macaulay: bool

    def as_dict(self):
        return {
            "germ": self.germ_name,
            "edim": self.edim, "dim": self.dim, "depth": self.depth,
            "type": self.cm_type,
            "flags": {
                "smooth": self.smooth, "singular": self.singular,
                "hypersurface": self.hypersurface,
                "complete_intersection": self.complete_intersection,
                "gorenstein": self.gorenstein,
                "cohen_macaulay": self.cohen_macaulay,
            },
        }


def structure_report(germ, counter=None):
    """All direct invariants and flags of one germ."""
    e = embedding_dim(germ)
    d = krull_dim(germ, counter)
    dep = depth(germ, counter)
    typ = cm_type(germ, counter)
    smooth = e == d
    cm = dep == d
    report = StructureReport(
        germ_name=germ.name,
        edim=e, dim=d, depth=dep, cm_type=typ,
        smooth=smooth,
        singular=not smooth,
        hypersurface=(not smooth) and cm and (e - dep == 1),
        complete_intersection=ci_criterion_direct(germ, counter),
        gorenstein=cm and typ == 1,
        cohen_macaulay=cm,
    )
    _check_flag_chain(report)
    return report


def _check_flag_chain(report):
    chain = [report.smooth, report.complete_intersection,
             report.gorenstein, report.cohen_macaulay]
    for a, b in zip(chain, chain[1:]):
        if a and not b:
            raise PreconditionError(
                f"implication chain smooth => ci => gorenstein => cm broken "
                f"for {report.germ_name!r}")


# ---------------------------------------------------------------------------
# Embedding dimension formulas.
# ---------------------------------------------------------------------------

def edim_formula(glued, variant, data=None, counter=None):
    """Formula value of edim(V) against the minimal presentation."""
    data = data or GluingData(glued, counter=counter)
    direct = data.edim_v
    if variant == "strong":
        value = data.betti_x_z[1] + data.edim_y
        return CriterionResult("edim (strong)", True, value, direct)
    if variant == "large":
        bz = data.betti_x_z
        by = data.betti_v_y
        b1z = Fraction(bz[1])
        value = (Fraction(by[1]) * (data.edim_x * b1z - bz[2]) / b1z
                 + by[2]) / b1z
        result = CriterionResult("edim (large)", True, value, Fraction(direct))
        if value.denominator != 1:
            result.details["non_integral"] = True
        return result
    raise PreconditionError(f"unknown edim variant {variant!r}")


# ---------------------------------------------------------------------------
# Singularity and smoothness.
# ---------------------------------------------------------------------------

def singularity_theorem(glued, data=None, counter=None):
    """Strongly large gluings with dim V = dim Y are singular; verified directly."""
    data = data or GluingData(glued, counter=counter)
    applicable = data.dim_v == data.dim_y
    result = CriterionResult("singular (theorem)", applicable)
    if not applicable:
        result.details["reason"] = "dim V != dim Y"
        return result
    result.predicted = True
    result.direct = data.edim_v > data.dim_v
    result.details["edim_v"] = data.edim_v
    result.details["dim_v"] = data.dim_v
    return result


def smooth_criterion_large(glued, data=None, counter=None):
    """Smoothness of a large gluing by the displayed Betti equality.

    The third Betti summand is read as beta_2^V(Y); the statement's
    symbol for it is otherwise undefined, which the report flags.
    """
    data = data or GluingData(glued, counter=counter)
    applicable = data.dim_v == data.dim_x
    result = CriterionResult("smooth (large criterion)", applicable)
    result.details["beta2_third_factor_read_as"] = "beta_2^V(Y)"
    if not applicable:
        result.details["reason"] = "dim V != dim X"
        return result
    bz = data.betti_x_z
    by = data.betti_v_y
    lhs = bz[1] * (by[1] * data.edim_x - data.dim_x * bz[1] + by[2])
    rhs = by[1] * bz[2]
    result.predicted = lhs == rhs
    result.direct = is_smooth(glued.presentation, data.counter)
    result.details["lhs"] = lhs
    result.details["rhs"] = rhs
    return result


# ---------------------------------------------------------------------------
# Hypersurface.
# ---------------------------------------------------------------------------

def hypersurface_criterion(glued, data=None, counter=None):
    """Cohen-Macaulay gluing is a hypersurface iff Y is smooth and b_1^X(Z)=1.

    Stated, like the rest of the structure theorem, under dim V = dim Y.
    """
    data = data or GluingData(glued, counter=counter)
    if data.dim_v != data.dim_y:
        result = CriterionResult("hypersurface", False)
        result.details["reason"] = "dim V != dim Y"
        return result
    cm = is_cohen_macaulay(glued.presentation, data.counter)
    result = CriterionResult("hypersurface", cm)
    if not cm:
        result.details["reason"] = "glued germ is not Cohen-Macaulay"
        return result
    result.predicted = (is_smooth(glued.datum.Y, data.counter)
                        and data.betti_x_z[1] == 1)
    e = data.edim_v
    dep = depth(glued.presentation, data.counter)
    result.direct = (e - dep == 1)
    result.details["edim_v"] = e
    result.details["depth_v"] = dep
    return result


# ---------------------------------------------------------------------------
# Complete intersections.
# ---------------------------------------------------------------------------

def ci_criterion_direct(germ, counter=None):
    """Deviation test on the residue field: b_2 = C(b_1, 2) + b_1 - dim."""
    betas = residue_betti(germ, 2, counter)
    b1, b2 = betas[1], betas[2]
    return b2 == math.comb(b1, 2) + b1 - krull_dim(germ, counter)


def ci_criterion_strong(glued, data=None, counter=None):
    """CI test for strongly large gluings with X a complete intersection.

    Stated under dim V = dim Y like the rest of the structure theorem.
    """
    data = data or GluingData(glued, counter=counter)
    if data.dim_v != data.dim_y:
        result = CriterionResult("complete intersection (strong)", False)
        result.details["reason"] = "dim V != dim Y"
        return result
    x_ci = ci_criterion_direct(glued.datum.X, data.counter)
    result = CriterionResult("complete intersection (strong)", x_ci)
    if not x_ci:
        result.details["reason"] = "X is not a complete intersection"
        return result
    b1z = data.betti_x_z[1]
    b2z = data.betti_x_z[2]
    b1zy = data.betti_y_z[1]
    denominator = b1z * b1zy + b2z
    ratio = Fraction(b1z * b1z + b1z, denominator)
    result.predicted = ratio == 2
    result.direct = ci_criterion_direct(glued.presentation, data.counter)
    result.details["ratio"] = ratio
    return result


def ci_criterion_selfglue(betti_x_z, x_is_ci=True):
    """Self-gluing CI test: b_1^X(Z) = 1 and b_2^X(Z) = 0."""
    result = CriterionResult("complete intersection (self-gluing)", x_is_ci)
    if not x_is_ci:
        result.details["reason"] = "X is not a complete intersection"
        return result
    result.predicted = betti_x_z[1] == 1 and betti_x_z[2] == 0
    result.details["b1"] = betti_x_z[1]
    result.details["b2"] = betti_x_z[2]
    return result


def ci_criterion_p44(glued, data=None, counter=None):
    """CI test under b_2^X(Z) = 0 and b_2^V(Y) = b_1^X(Z).

    The statement contains a summand whose inner symbol collapses under
    the hypothesis; both readings (the summand vanishes, or it equals
    b_2^X(Z)) are evaluated and reported, and they coincide here because
    the hypothesis forces b_2^X(Z) = 0.
    """
    data = data or GluingData(glued, counter=counter)
    bz = data.betti_x_z
    by = data.betti_v_y
    gate = bz[2] == 0 and by[2] == bz[1]
    result = CriterionResult("complete intersection (hypothesis-gated)", gate)
    if not gate:
        result.details["reason"] = "b_2^X(Z) = 0 and b_2^V(Y) = b_1^X(Z) required"
        return result
    m = Fraction(bz[1])
    ell = (3 - m) / (2 * m)
    lhs = Fraction(data.edim_x + data.dim_x)
    rhs_zero = (data.edim_x * by[1] * ell - by[3] - 0 * by[1]) / m
    rhs_b2 = (data.edim_x * by[1] * ell - by[3] - bz[2] * by[1]) / m
    result.predicted = lhs == rhs_zero
    result.direct = ci_criterion_direct(glued.presentation, data.counter)
    result.details["lhs"] = lhs
    result.details["rhs_reading_zero"] = rhs_zero
    result.details["rhs_reading_b2xz"] = rhs_b2
    result.details["readings_agree"] = rhs_zero == rhs_b2
    return result


# ---------------------------------------------------------------------------
# Gorenstein.
# ---------------------------------------------------------------------------

def gorenstein_criterion(glued, witness_subspaces=None, data=None,
                         counter=None):
    """Gorenstein iff Y smooth, given CM and a witness b_1^V(W) <= b_0^V(W).

    The witness is searched among subspaces of Y; without one the
    criterion reports not-applicable but still carries the direct type
    computation in its details.
    """
    data = data or GluingData(glued, counter=counter)
    result = CriterionResult("gorenstein", False)
    direct = is_gorenstein_direct(glued.presentation, data.counter)
    result.details["direct_gorenstein"] = direct
    result.details["type"] = cm_type(glued.presentation, data.counter)
    if data.dim_v != data.dim_y:
        result.details["reason"] = "dim V != dim Y"
        return result
    cm = is_cohen_macaulay(glued.presentation, data.counter)
    if not cm:
        result.details["reason"] = "glued germ is not Cohen-Macaulay"
        return result
    candidates = witness_subspaces or data.default_y_subspaces()
    witness = None
    for sub in candidates:
        betas = data.betti_v(sub, 1)
        if betas[1] <= betas[0]:
            witness = sub
            break
    if witness is None:
        result.details["reason"] = "no witness subspace with b_1 <= b_0"
        return result
    result.applicable = True
    result.predicted = is_smooth(glued.datum.Y, data.counter)
    result.direct = direct
    result.details["witness"] = witness.name
    return result
