"""Sparse multivariate polynomials over Q with local and global monomial orders.

Monomials are plain exponent tuples.  A polynomial is a mapping from
monomials to nonzero Fractions together with the number of ambient
variables; variable names live one level up, in the germ layer.

The two base orders are degrevlex (global, ``x > 1``) and negdegrevlex
(local, ``1 > x``); block orders concatenate them and compare the first
block first, which is what elimination needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DimensionMismatchError, PolynomialParseError

Monomial = "tuple[int, ...]"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """Does x^a divide x^b?"""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    """Exponent vector of x^b / x^a; caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def _revlex_tail(exps):
    # Shared degrevlex tie-break: later variables count against a monomial.
    return tuple(-e for e in reversed(exps))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given as a sequence of (block length, kind) pairs.

    kind is "degrevlex" (global) or "negdegrevlex" (local).  Keys compare
    so that larger key means larger monomial; block keys are concatenated,
    so the first block is an elimination block when it is global.
    """

    blocks: tuple
    nvars: int

    def __post_init__(self):
        object.__setattr__(self, "_key_cache", {})

    @staticmethod
    def local(nvars):
        return MonomialOrder(((nvars, "negdegrevlex"),), nvars)

    @staticmethod
    def global_(nvars):
        return MonomialOrder(((nvars, "degrevlex"),), nvars)

    @staticmethod
    def elimination(nelim, nrest, inner="negdegrevlex"):
        """Eliminate the first nelim variables: global block, then inner order."""
        return MonomialOrder(((nelim, "degrevlex"), (nrest, inner)), nelim + nrest)

    @property
    def is_local(self):
        return all(kind == "negdegrevlex" for _, kind in self.blocks)

    def key(self, mono):
        cached = self._key_cache.get(mono)
        if cached is not None:
            return cached
        parts = []
        pos = 0
        for length, kind in self.blocks:
            exps = mono[pos:pos + length]
            deg = sum(exps)
            parts.append(deg if kind == "degrevlex" else -deg)
            parts.extend(_revlex_tail(exps))
            pos += length
        key = tuple(parts)
        self._key_cache[mono] = key
        return key

    def compare(self, m1, m2):
        """-1, 0 or 1 according to the order; monomial lengths must match."""
        if len(m1) != self.nvars or len(m2) != self.nvars:
            raise DimensionMismatchError(
                f"monomials of length {len(m1)}, {len(m2)} in a {self.nvars}-variable order")
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)


class Polynomial:
    """Immutable-by-convention sparse polynomial over Q."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms, nvars):
        self.terms = {m: c for m, c in terms.items() if c}
        self.nvars = nvars

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nvars):
        return Polynomial({}, nvars)

    @staticmethod
    def constant(c, nvars):
        c = Fraction(c)
        if not c:
            return Polynomial.zero(nvars)
        return Polynomial({(0,) * nvars: c}, nvars)

    @staticmethod
    def variable(i, nvars):
        e = [0] * nvars
        e[i] = 1
        return Polynomial({tuple(e): Fraction(1)}, nvars)

    # -- queries -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self):
        """Maximal total degree; -1 for the zero polynomial."""
        return max((mono_deg(m) for m in self.terms), default=-1)

    def order_valuation(self):
        """Minimal total degree of a term; None for the zero polynomial."""
        return min((mono_deg(m) for m in self.terms), default=None)

    def linear_coefficients(self):
        """Coefficients of the degree-1 terms, one slot per variable."""
        row = [Fraction(0)] * self.nvars
        for m, c in self.terms.items():
            if mono_deg(m) == 1:
                row[m.index(1)] = c
        return row

    def leading_monomial(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order):
        return self.terms[self.leading_monomial(order)]

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms \
            and self.nvars == other.nvars

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(terms, self.nvars)

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial(terms, self.nvars)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial({m: c * x for m, x in self.terms.items()}, self.nvars)

    def mul_term(self, mono, coeff):
        return Polynomial({mono_mul(m, mono): c * coeff for m, c in self.terms.items()},
                          self.nvars)

    def truncate(self, maxdeg):
        """Drop terms of total degree above maxdeg."""
        return Polynomial({m: c for m, c in self.terms.items() if mono_deg(m) <= maxdeg},
                          self.nvars)

    def substitute(self, images):
        """Evaluate at images, a list with one Polynomial per variable.

        All images must share an ambient; the result lives there.
        """
        if len(images) != self.nvars:
            raise DimensionMismatchError("one image required per variable")
        if images:
            nv = images[0].nvars
        else:
            nv = 0
        result = Polynomial.zero(nv)
        for m, c in self.terms.items():
            term = Polynomial.constant(c, nv)
            for i, e in enumerate(m):
                for _ in range(e):
                    term = term * images[i]
            result = result + term
        return result

    def embed(self, positions, nvars):
        """Relabel variables: old variable i becomes variable positions[i]."""
        terms = {}
        for m, c in self.terms.items():
            e = [0] * nvars
            for i, x in enumerate(m):
                e[positions[i]] = x
            terms[tuple(e)] = c
        return Polynomial(terms, nvars)

    def restrict(self, positions):
        """Inverse of embed: keep only the listed variable slots.

        Every term must be supported on the listed positions.
        """
        keep = set(positions)
        terms = {}
        for m, c in self.terms.items():
            if any(e and i not in keep for i, e in enumerate(m)):
                raise ValueError("polynomial not supported on the kept variables")
            terms[tuple(m[i] for i in positions)] = c
        return Polynomial(terms, len(positions))

    def support_variables(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    def _check(self, other):
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                f"polynomials in {self.nvars} and {other.nvars} variables")

    # -- text form -------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({format_polynomial(self, [f'x{i+1}' for i in range(self.nvars)])!r})"


# ---------------------------------------------------------------------------
# Text grammar: terms joined by + or -, a term is an optional rational
# coefficient (integer or a/b) and variable^exponent factors joined by *.
# ---------------------------------------------------------------------------

def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == "/":
                k = j + 1
                while k < len(text) and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise PolynomialParseError(f"bad rational near {text[i:k]!r}")
                tokens.append(text[i:k])
                i = k
            else:
                tokens.append(text[i:j])
                i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise PolynomialParseError(f"unexpected character {ch!r} in {text!r}")
    return tokens


def parse_polynomial(text, var_names):
    """Parse the package-wide polynomial grammar, e.g. "x2^2 - x1^3"."""
    index = {name: i for i, name in enumerate(var_names)}
    nvars = len(var_names)
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialParseError("empty polynomial text")
    result = Polynomial.zero(nvars)
    pos = 0
    sign = Fraction(1)
    first = True
    while pos < len(tokens):
        tok = tokens[pos]
        if tok in "+-":
            sign = Fraction(1) if tok == "+" else Fraction(-1)
            pos += 1
            first = False
            if pos >= len(tokens):
                raise PolynomialParseError(f"dangling {tok!r} in {text!r}")
        elif not first:
            raise PolynomialParseError(f"missing operator before {tok!r} in {text!r}")
        coeff = Fraction(1)
        exps = [0] * nvars
        saw_factor = False
        expect_factor = True
        while pos < len(tokens):
            tok = tokens[pos]
            if tok in "+-" and not expect_factor:
                break
            if tok == "*":
                if expect_factor:
                    raise PolynomialParseError(f"misplaced '*' in {text!r}")
                expect_factor = True
                pos += 1
                continue
            if not expect_factor:
                # implicit product such as "2x" or "x y"
                pass
            if tok[0].isdigit():
                coeff *= Fraction(tok)
                pos += 1
                saw_factor = True
                expect_factor = False
            elif tok[0].isalpha() or tok[0] == "_":
                if tok not in index:
                    raise PolynomialParseError(f"unknown variable {tok!r} in {text!r}")
                power = 1
                pos += 1
                if pos < len(tokens) and tokens[pos] == "^":
                    pos += 1
                    if pos >= len(tokens) or not tokens[pos].isdigit():
                        raise PolynomialParseError(f"bad exponent in {text!r}")
                    power = int(tokens[pos])
                    pos += 1
                exps[index[tok]] += power
                saw_factor = True
                expect_factor = False
            else:
                raise PolynomialParseError(f"unexpected token {tok!r} in {text!r}")
        if not saw_factor:
            raise PolynomialParseError(f"empty term in {text!r}")
        term = Polynomial({tuple(exps): sign * coeff}, nvars)
        result = result + term
        sign = Fraction(1)
        first = False
    return result


def format_polynomial(poly, var_names, order=None):
    """Canonical text form: terms descending in the active order."""
    if poly.is_zero():
        return "0"
    if order is None:
        order = MonomialOrder.local(poly.nvars)
    monos = sorted(poly.terms, key=order.key, reverse=True)
    pieces = []
    for m in monos:
        c = poly.terms[m]
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(var_names[i])
            elif e > 1:
                factors.append(f"{var_names[i]}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)
