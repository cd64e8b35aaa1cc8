"""Socles, catalecticants and apolar ideals.

A socle is a nonzero degree-d form in the dual variables y0..yn with
rational coefficients, stored as a coefficient map on exponent tuples.
The pairing between operators (polynomials in x) and dual forms is the
coefficient shift

    x^a . g  =  sum_c  coeff_{c+a}(g) * y^c,

a contraction with no factorial weights, so integer inputs stay integer.
It is diagonally equivalent to the differentiation pairing, hence yields
the same ranks, kernels, Hilbert functions and betti tables.

Under the shift pairing the d-th power of the point v = (v0 : ... : vn)
is the form whose y^b coefficient is v^b; it is the unique family with
f . v^d = f(v) * v^(d-e), which gives power sums their classical span
and annihilation behaviour (rank-one catalecticants, trapezoid Hilbert
functions, point-ideal containment).  ``synth_power_sum`` builds powers
in these coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DegenerateInputError, ParseError
from .linalg import (
    Matrix,
    Monomial,
    kernel_basis,
    monomial_basis,
    monomial_mul,
    monomial_str,
    rank,
    term_order_key,
)

Form = dict[Monomial, Fraction]


def form_degree(f: Mapping[Monomial, Fraction]) -> int:
    degs = {sum(m) for m, c in f.items() if c}
    if not degs:
        raise ValueError("zero form has no degree")
    if len(degs) > 1:
        raise ValueError("form is not homogeneous")
    return degs.pop()


class Socle:
    """A nonzero homogeneous form of degree d in n+1 dual variables."""

    __slots__ = ("n", "d", "coeffs")

    def __init__(self, n: int, d: int, coeffs: Mapping[Monomial, Fraction | int]):
        if n < 0 or d < 0:
            raise ValueError("n and d must be non-negative")
        clean: Form = {}
        for mono, c in coeffs.items():
            c = Fraction(c)
            if not c:
                continue
            if len(mono) != n + 1 or any(e < 0 for e in mono) or sum(mono) != d:
                raise ValueError(f"monomial {mono} is not degree {d} in {n + 1} variables")
            clean[tuple(mono)] = c
        if not clean:
            raise DegenerateInputError("zero socle: the projective space has no zero point")
        self.n = n
        self.d = d
        self.coeffs = clean

    def coeff(self, mono: Monomial) -> Fraction:
        return self.coeffs.get(mono, Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Socle)
            and (self.n, self.d) == (other.n, other.d)
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, self.d, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"Socle({self.text()!r}, n={self.n})"

    def scaled(self, factor) -> "Socle":
        factor = Fraction(factor)
        if not factor:
            raise DegenerateInputError("cannot scale a socle by zero")
        return Socle(self.n, self.d, {m: c * factor for m, c in self.coeffs.items()})

    def text(self) -> str:
        return format_form(self.coeffs, var="y")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Socle":
        coeffs, seen_n = parse_form(text, var="y")
        if not any(coeffs.values()):
            raise DegenerateInputError("zero socle: the projective space has no zero point")
        d = form_degree(coeffs)
        if n is None:
            n = seen_n
        elif n < seen_n:
            raise ParseError(f"socle uses y{seen_n} but n={n} was requested")
        coeffs = {m + (0,) * (n - seen_n): c for m, c in coeffs.items()}
        return cls(n, d, coeffs)


# ---------------------------------------------------------------------------
# contraction and catalecticants


def contract(mono: Monomial, g: Socle) -> Form:
    """Apply the shift of an operator monomial of degree e to g.

    The result is a dual form of degree d - e; e > d violates the pairing
    contract and raises.
    """
    e = sum(mono)
    if e > g.d:
        raise ValueError(f"contraction degree {e} exceeds socle degree {g.d}")
    out: Form = {}
    for target, c in g.coeffs.items():
        shifted = tuple(t - m for t, m in zip(target, mono))
        if min(shifted) >= 0:
            out[shifted] = c
    return out


def catalecticant(g: Socle, e: int) -> Matrix:
    """Matrix of the pairing S_e x S_(d-e) -> k determined by g.

    Rows are indexed by monomial_basis(n, d-e), columns by
    monomial_basis(n, e); the (row, col) entry is the coefficient of
    row+col in g.  Transposing swaps e and d-e.
    """
    if not 0 <= e <= g.d:
        raise ValueError(f"catalecticant degree {e} outside 0..{g.d}")
    row_basis = monomial_basis(g.n, g.d - e)
    col_basis = monomial_basis(g.n, e)
    return Matrix(
        [[g.coeff(monomial_mul(r, c)) for c in col_basis] for r in row_basis],
        ncols=len(col_basis),
    )


def hilbert_function(g: Socle) -> tuple[int, ...]:
    """The vector (h_0, ..., h_d) of catalecticant ranks.

    Always palindromic with h_0 = h_d = 1: the rank of a matrix equals the
    rank of its transpose, and g is nonzero.
    """
    return tuple(rank(catalecticant(g, e)) for e in range(g.d + 1))


def apolar_piece(g: Socle, e: int) -> list[list[int]]:
    """Basis of the degree-e piece of the annihilator ideal.

    Vectors are integer coordinate rows over monomial_basis(n, e); the
    count is dim S_e - h_e.
    """
    return kernel_basis(catalecticant(g, e))


@dataclass(frozen=True)
class ApolarIdeal:
    """All graded pieces of the annihilator up to degree d."""

    socle: Socle
    pieces: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def of(cls, g: Socle) -> "ApolarIdeal":
        return cls(
            g,
            tuple(
                tuple(tuple(v) for v in apolar_piece(g, e)) for e in range(g.d + 1)
            ),
        )


def annihilates(f: Mapping[Monomial, Fraction], g: Socle) -> bool:
    """True when the homogeneous operator f kills g under the shift pairing."""
    nonzero = {m: Fraction(c) for m, c in f.items() if c}
    if not nonzero:
        return True
    e = form_degree(nonzero)
    if e > g.d:
        raise ValueError("operator degree exceeds socle degree")
    acc: Form = {}
    for mono, c in nonzero.items():
        for target, val in contract(mono, g).items():
            acc[target] = acc.get(target, Fraction(0)) + c * val
    return all(v == 0 for v in acc.values())


def factors_through_ideal(g: Socle, gens: Sequence[Mapping[Monomial, Fraction]]) -> bool:
    """Degreewise containment of the ideal generated by gens in Ann(g).

    Checks, for every degree e <= d, that each product (monomial * gen) of
    degree e annihilates g.  Callers must pass generators of a saturated
    ideal up to degree d; no saturation is performed here.
    """
    for f in gens:
        nonzero = {m: Fraction(c) for m, c in f.items() if c}
        if not nonzero:
            continue
        e0 = form_degree(nonzero)
        for e in range(e0, g.d + 1):
            for mono in monomial_basis(g.n, e - e0):
                shifted = {monomial_mul(mono, m): c for m, c in nonzero.items()}
                if not annihilates(shifted, g):
                    return False
    return True


# ---------------------------------------------------------------------------
# power sums


def point_power(point: Sequence[Fraction | int], d: int) -> Form:
    """The d-th power of a point in the coordinates of the shift pairing."""
    vals = [Fraction(x) for x in point]
    if not any(vals):
        raise DegenerateInputError("zero vector has no power")
    n = len(vals) - 1
    out: Form = {}
    for mono in monomial_basis(n, d):
        c = Fraction(1)
        for v, e in zip(vals, mono):
            if e:
                c *= v**e
        if c:
            out[mono] = c
    return out


def synth_power_sum(
    forms: Sequence[Mapping[Monomial, Fraction] | Sequence],
    weights: Sequence[Fraction | int],
    d: int,
) -> Socle:
    """Weighted sum of d-th powers of linear forms (dual points).

    Each entry of ``forms`` is either a linear form as a coefficient map
    on degree-1 monomials or a bare coefficient vector.  Weights must be
    nonzero and the total must be a nonzero form.
    """
    if not forms or len(forms) != len(weights):
        raise DegenerateInputError("need equally many forms and weights, at least one")
    points: list[list[Fraction]] = []
    n = None
    for f in forms:
        if isinstance(f, Mapping):
            nonzero = {m: Fraction(c) for m, c in f.items() if c}
            if not nonzero:
                raise DegenerateInputError("zero linear form")
            if form_degree(nonzero) != 1:
                raise DegenerateInputError("power-sum inputs must be linear forms")
            size = len(next(iter(nonzero)))
            vec = [Fraction(0)] * size
            for mono, c in nonzero.items():
                vec[mono.index(1)] = c
        else:
            vec = [Fraction(x) for x in f]
            if not any(vec):
                raise DegenerateInputError("zero linear form")
        if n is None:
            n = len(vec) - 1
        elif len(vec) - 1 != n:
            raise DegenerateInputError("forms live in different variable counts")
        points.append(vec)
    total: Form = {}
    for vec, w in zip(points, weights):
        w = Fraction(w)
        if not w:
            raise DegenerateInputError("zero weight")
        for mono, c in point_power(vec, d).items():
            total[mono] = total.get(mono, Fraction(0)) + w * c
    if not any(total.values()):
        raise DegenerateInputError("power sum collapsed to zero")
    assert n is not None
    return Socle(n, d, total)


# ---------------------------------------------------------------------------
# diagnostics


@dataclass(frozen=True)
class GorensteinDiagnostics:
    socle_dimension_ok: bool
    palindromic: bool
    catalecticant_transpose_ok: bool
    hilbert_function: tuple[int, ...]

    @property
    def all_ok(self) -> bool:
        return self.socle_dimension_ok and self.palindromic and self.catalecticant_transpose_ok


def gorenstein_check(g: Socle) -> GorensteinDiagnostics:
    """Confirm the perfect-pairing fingerprints of the apolar quotient.

    Every nonzero socle passes all three checks; they are exposed as a
    diagnostic record so callers can surface them in reports.
    """
    h = hilbert_function(g)
    palindromic = all(h[e] == h[g.d - e] for e in range(g.d + 1))
    transpose_ok = all(
        catalecticant(g, e) == catalecticant(g, g.d - e).transpose()
        for e in range(g.d + 1)
    )
    return GorensteinDiagnostics(h[g.d] == 1, palindromic, transpose_ok, h)


# ---------------------------------------------------------------------------
# polynomial text grammar (shared with the CLI)
#
#   form   := term (('+' | '-') term)*
#   term   := [coeff '*'] factor ('*' factor)*   |   coeff
#   factor := VAR INDEX ['^' EXponent]
#   coeff  := INT ['/' INT]
#
# Whitespace is insignificant.  Example inputs: "y0^3 + y1^3",
# "1/2*y0^2*y1 - y2^3".

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<var>[A-Za-z])(?P<idx>\d+)|(?P<op>[-+*/^]))"
)


def parse_form(text: str, var: str = "y") -> tuple[Form, int]:
    """Parse the polynomial grammar; returns (coefficients, max index).

    Raises ParseError with 1-based line and column information.
    """

    def err(msg: str, pos: int) -> ParseError:
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        return ParseError(msg, line, col)

    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise err(f"unexpected character {text[bad]!r}", bad)
            break
        if m.group("num"):
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.group("var"):
            if m.group("var") != var:
                raise err(f"unknown variable {m.group('var')!r}", m.start("var"))
            tokens.append(("var", m.group("idx"), m.start("var")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()

    coeffs: dict[tuple, Fraction] = {}
    max_index = 0
    i = 0
    if not tokens:
        raise err("empty polynomial", 0)

    def peek(kind: str, value: str | None = None) -> bool:
        if i >= len(tokens):
            return False
        k, v, _ = tokens[i]
        return k == kind and (value is None or v == value)

    term_index = 0
    while i < len(tokens):
        sign = 1
        saw_sign = False
        while peek("op", "+") or peek("op", "-"):
            saw_sign = True
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise err("dangling sign", tokens[-1][2])
        if tokens[i][0] == "op":
            raise err(f"unexpected {tokens[i][1]!r}", tokens[i][2])
        if term_index > 0 and not saw_sign:
            raise err("expected '+' or '-' between terms", tokens[i][2])
        coeff = Fraction(1)
        exponents: dict[int, int] = {}
        expect_factor = True
        while expect_factor:
            if peek("num"):
                value = int(tokens[i][1])
                i += 1
                if peek("op", "/"):
                    i += 1
                    if not peek("num"):
                        raise err("expected denominator", tokens[i - 1][2])
                    den = int(tokens[i][1])
                    if den == 0:
                        raise err("zero denominator", tokens[i][2])
                    i += 1
                    coeff *= Fraction(value, den)
                else:
                    coeff *= value
            elif peek("var"):
                idx = int(tokens[i][1])
                i += 1
                power = 1
                if peek("op", "^"):
                    i += 1
                    if not peek("num"):
                        raise err("expected exponent", tokens[i - 1][2])
                    power = int(tokens[i][1])
                    i += 1
                exponents[idx] = exponents.get(idx, 0) + power
                max_index = max(max_index, idx)
            else:
                raise err("expected a coefficient or variable", tokens[i][2])
            if peek("op", "*"):
                i += 1
                expect_factor = True
            else:
                expect_factor = False
        packed = tuple(sorted(exponents.items()))
        coeffs.setdefault(packed, Fraction(0))
        coeffs[packed] += coeff * sign
        term_index += 1

    width = max_index + 1
    out: Form = {}
    for packed, c in coeffs.items():
        mono = [0] * width
        for idx, e in packed:
            mono[idx] = e
        if c:
            out[tuple(mono)] = c
    return out, max_index


def format_form(coeffs: Mapping[Monomial, Fraction], var: str = "y") -> str:
    """Canonical text: terms in decreasing term order, rational p/q coeffs."""
    items = [(m, Fraction(c)) for m, c in coeffs.items() if c]
    if not items:
        return "0"
    items.sort(key=lambda mc: term_order_key(mc[0]))
    parts: list[str] = []
    for k, (mono, c) in enumerate(items):
        mag = abs(c)
        body = monomial_str(mono, var=var)
        if body == "1":
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if k == 0:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(parts)


def parse_operator(text: str) -> Form:
    """Parse an operator polynomial in the x variables (same grammar)."""
    coeffs, _ = parse_form(text, var="x")
    return coeffs


def random_socle(rng, n: int, d: int, lo: int = -9, hi: int = 9) -> Socle:
    """Socle with integer coefficients drawn uniformly from [lo, hi]."""
    basis = monomial_basis(n, d)
    while True:
        coeffs = {m: rng.randint(lo, hi) for m in basis}
        if any(coeffs.values()):
            return Socle(n, d, {m: Fraction(c) for m, c in coeffs.items()})
