"""Truncated power series over Q and the Poincare-series formulas.

A TruncatedSeries knows its coefficients through t^truncation and never
pretends to know more: arithmetic propagates the tightest valid bound,
and division by a series of positive valuation shortens it accordingly.
Coefficients are exact Fractions; genuinely integral results can be
asserted by callers via is_integral().
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, SeriesQuotientError


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple
    truncation: int

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.truncation + 1:
            raise PreconditionError("coefficient count does not match truncation")
        object.__setattr__(self, "coeffs", coeffs)

    @staticmethod
    def from_coefficients(values, truncation):
        values = list(values)[: truncation + 1]
        values += [0] * (truncation + 1 - len(values))
        return TruncatedSeries(tuple(values), truncation)

    @staticmethod
    def one(truncation):
        return TruncatedSeries.from_coefficients([1], truncation)

    @staticmethod
    def constant(c, truncation):
        return TruncatedSeries.from_coefficients([c], truncation)

    def __getitem__(self, i):
        return self.coeffs[i]

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def integer_coefficients(self):
        if not self.is_integral():
            raise PreconditionError("series has non-integer coefficients")
        return tuple(int(c) for c in self.coeffs)

    def restrict(self, truncation):
        if truncation > self.truncation:
            raise PreconditionError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: truncation + 1], truncation)

    def __add__(self, other):
        other = _coerce(other, self.truncation)
        n = min(self.truncation, other.truncation)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))[: n + 1], n)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.truncation)

    def __sub__(self, other):
        return self + (-_coerce(other, self.truncation))

    def __rsub__(self, other):
        return _coerce(other, self.truncation) - self

    def __mul__(self, other):
        other = _coerce(other, self.truncation)
        n = min(self.truncation, other.truncation)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n + 1 - i]):
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out), n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Series quotient with valuation cancellation.

        If the divisor has valuation v, the dividend must too, and the
        result is exact through t^(n - v) with n the common truncation.
        """
        other = _coerce(other, self.truncation)
        n = min(self.truncation, other.truncation)
        v = other.valuation()
        if v is None:
            raise SeriesQuotientError("division by the zero series")
        av = self.valuation()
        if av is not None and av < v:
            raise SeriesQuotientError(
                f"dividend valuation {av} below divisor valuation {v}")
        m = n - v
        num = list(self.coeffs[v: n + 1]) + [Fraction(0)] * v
        den = list(other.coeffs[v: n + 1])
        out = [Fraction(0)] * (m + 1)
        lead = den[0]
        for i in range(m + 1):
            acc = num[i]
            for j in range(1, i + 1):
                acc -= den[j] * out[i - j] if j < len(den) else 0
            out[i] = acc / lead
        return TruncatedSeries(tuple(out), m)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return (self.truncation == other.truncation
                    and self.coeffs == other.coeffs)
        return NotImplemented

    def __str__(self):
        return format_series(self)


def _coerce(value, truncation):
    if isinstance(value, TruncatedSeries):
        return value
    return TruncatedSeries.constant(value, truncation)


def format_series(series, var="t"):
    pieces = []
    for i, c in enumerate(series.coeffs):
        if not c:
            continue
        if i == 0:
            pieces.append(str(c))
        else:
            mon = var if i == 1 else f"{var}^{i}"
            body = mon if c == 1 else f"{c}*{mon}"
            if c < 0:
                body = f"({c})*{mon}"
            pieces.append(body)
    if not pieces:
        pieces = ["0"]
    return " + ".join(pieces) + f" + O({var}^{series.truncation + 1})"


def series_add(a, b, truncation):
    return (a + b).restrict(min(truncation, min(a.truncation, b.truncation)))


def series_mul(a, b, truncation):
    return (a * b).restrict(min(truncation, min(a.truncation, b.truncation)))


def series_div(a, b, truncation):
    q = a / b
    return q.restrict(min(truncation, q.truncation))


# ---------------------------------------------------------------------------
# Poincare-series formulas for glued germs.
# ---------------------------------------------------------------------------

def _require_poincare(series, who):
    if series.coeffs[0] != 1:
        raise PreconditionError(f"{who} must have constant term 1")


def weakly_large_formula(p_v_y, p_x_z, truncation):
    """Series of the first factor inside the gluing: (1 - P^V_Y)/(1 - P^X_Z).

    Both numerator and denominator vanish at t = 0; the common factor t
    cancels, so the result is exact through t^(truncation - 1).
    """
    _require_poincare(p_v_y, "P^V_Y")
    _require_poincare(p_x_z, "P^X_Z")
    if p_x_z.truncation >= 1 and p_x_z[1] == 0:
        raise PreconditionError(
            "P^X_Z has zero linear coefficient; the first Betti number of a "
            "proper subspace never vanishes")
    one = TruncatedSeries.one(truncation)
    return (one - p_v_y.restrict(truncation)) / (one - p_x_z.restrict(truncation))


def large_subspace_formula(p_x_w, p_v_y, p_x_z, truncation):
    """P^V_W = P^X_W (1 - P^V_Y)/(1 - P^X_Z) for a subspace W of the first factor."""
    _require_poincare(p_x_w, "P^X_W")
    quot = weakly_large_formula(p_v_y, p_x_z, truncation)
    return p_x_w.restrict(quot.truncation) * quot


def strongly_large_formula(p_y_w, p_x_z, p_y_z, truncation):
    """P^V_W = P^Y_W P^X_Z / (P^X_Z + P^Y_Z - P^X_Z P^Y_Z), W inside the second factor."""
    for s, who in ((p_y_w, "P^Y_W"), (p_x_z, "P^X_Z"), (p_y_z, "P^Y_Z")):
        _require_poincare(s, who)
    a = p_x_z.restrict(truncation)
    b = p_y_z.restrict(truncation)
    den = a + b - a * b
    return (p_y_w.restrict(truncation) * a) / den


def self_glue_formula(p_x_w, p_x_z, truncation):
    """P over the self-gluing: P^X_W / (2 - P^X_Z)."""
    _require_poincare(p_x_w, "P^X_W")
    _require_poincare(p_x_z, "P^X_Z")
    den = TruncatedSeries.constant(2, truncation) - p_x_z.restrict(truncation)
    return p_x_w.restrict(truncation) / den


def betti_formula_large(j, betas_x_w, betas_x_z, betas_v_y):
    """Betti number of a subspace of the first factor over the gluing.

    Exact rational value; integrality is the caller's assertion.  Needs
    beta^X(W) up to j, beta^X(Z) up to 3 and beta^V(Y) up to 3.
    """
    bw = betas_x_w
    bz = betas_x_z
    by = betas_v_y
    b1z = Fraction(bz[1])
    if b1z == 0:
        raise PreconditionError("first Betti number of Z over X vanishes")
    if j == 0:
        return Fraction(bw[0]) * by[1] / b1z
    if j == 1:
        inner = Fraction(by[1]) * (bw[1] * b1z - bw[0] * bz[2]) / b1z
        return (inner + bw[0] * by[2]) / b1z
    if j == 2:
        k = Fraction(bz[2]) / b1z
        part0 = Fraction(bw[0]) / b1z * (
            by[3] + Fraction(by[1]) / b1z * (bz[2] * k - bz[3]) - k * by[2])
        part1 = Fraction(bw[1]) / b1z * (by[2] - k * by[1])
        part2 = Fraction(bw[2]) * by[1] / b1z
        return part0 + part1 + part2
    raise PreconditionError("formula stated only for j in {0, 1, 2}")


def betti_formula_strong(j, betas_y_w, betas_x_z, betas_y_z):
    """Betti number of a subspace of the second factor over the gluing."""
    bw = betas_y_w
    bxz = betas_x_z
    byz = betas_y_z
    if j == 0:
        return bw[0]
    if j == 1:
        return bw[0] * bxz[1] + bw[1]
    if j == 2:
        return bw[0] * byz[1] * bxz[1] + bw[0] * bxz[2] + bw[1] * bxz[1] + bw[2]
    raise PreconditionError("formula stated only for j in {0, 1, 2}")
