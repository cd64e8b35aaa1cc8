"""Stratum catalogs, socle classification and charge diagrams.

Classification is a pure function of computed invariants: Hilbert
function first, then (where a Hilbert function is shared by two strata)
the interior square of the betti table.  Nothing is ever force-fitted:
a socle matching no catalog entry comes back unclassified.

The diagram data reproduces the node sets of the worked low-degree
pictures: candidate nodes are charge values of possible kernel objects
(black when a stratum realizes them, red when rejected), reference nodes
are the fixed landmarks (structure sheaf twists, a point's class, the
socle source).  Red reasons come in three kinds:

  1. the argument drops below the structure sheaf's ray, so no object of
     the window category has that charge (tested by compare_arg);
  2. the value exceeds every rank's semistable maximum, so only torsion
     sheaves could carry it and none maps to the source (tested against
     the discriminant bound);
  3. an annotated forced factorization, recorded in the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from .apolarity import (
    Form,
    Socle,
    apolar_piece,
    factors_through_ideal,
    form_degree,
    hilbert_function,
    point_power,
    synth_power_sum,
)
from .charge import ChargePoint, TwistComplex, charge, compare_arg
from .errors import EnvelopeError
from .exceptional import realizable_by_sheaf
from .linalg import Monomial, monomial_basis, rref
from .resolution import interior_square, koszul_betti

Fingerprint = tuple[tuple[int, int], ...]


def parity_point(d: int) -> Fraction:
    """Evaluation point of the central charge: 0 for even d, -1/2 for odd."""
    return Fraction(0) if d % 2 == 0 else Fraction(-1, 2)


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    n: int
    d: int
    hilbert_function: tuple[int, ...]
    kernel_object: str
    chain: str
    dimension: int
    charge_node: ChargePoint
    status: str = "black"
    reason: str | None = None
    betti_fingerprint: Fingerprint | None = None
    witness_ideal: tuple[str, ...] | None = None  # operator polynomials in x


@dataclass(frozen=True)
class DiagramNode:
    name: str
    point: ChargePoint
    status: str  # "black" | "red"
    reason: str | None
    kind: str  # "candidate" | "reference"


# ---------------------------------------------------------------------------
# catalog data


def _Z(n: int, d: int, cls: TwistComplex) -> ChargePoint:
    return charge(cls, parity_point(d))


def _O(n: int, e: int) -> TwistComplex:
    return TwistComplex.line_bundle(n, e)


def _I(n: int, count: int, twist: int) -> TwistComplex:
    return TwistComplex.ideal_of_points(n, count, twist)


def _cone_class(n: int, e: int) -> TwistComplex:
    """[O(e)] - [omega(-e)[n]] (the even-case cone)."""
    omega = TwistComplex.canonical_twist(n, e)
    return _O(n, e) + omega.shift(1)


def _binary_entries(d: int) -> list[CatalogEntry]:
    entries = []
    top = d // 2 + 1
    for a in range(1, top + 1):
        e = (d + 1) // 2
        if d % 2 == 0 and a == top:
            kernel_object, node = "none (semistable)", _Z(1, d, _cone_class(1, d // 2))
            chain = f"O({d // 2}) -> omega({-d // 2})[1] injective"
        else:
            kernel_object = f"O({e - a})"
            node = _Z(1, d, _O(1, e - a))
            chain = f"O({e}) -> O_Z({e}) -> omega({1 - e if d % 2 else -e})[1], len Z = {a}"
        hf = tuple(min(s + 1, d - s + 1, a) for s in range(d + 1))
        entries.append(
            CatalogEntry(
                label=f"binary-span-a{a}",
                n=1,
                d=d,
                hilbert_function=hf,
                kernel_object=kernel_object,
                chain=chain,
                dimension=min(2 * a - 1, d),
                charge_node=node,
            )
        )
    return entries


def _plane_d1() -> list[CatalogEntry]:
    return [
        CatalogEntry(
            label="linear-form",
            n=2,
            d=1,
            hilbert_function=(1, 1),
            kernel_object="I_p(1)",
            chain="O(1) -> O_p(1) -> omega(0)[2]",
            dimension=2,
            charge_node=_Z(2, 1, _I(2, 1, 1)),
            witness_ideal=("x1", "x2"),
        )
    ]


def _plane_d2() -> list[CatalogEntry]:
    return [
        CatalogEntry(
            label="rank-1",
            n=2,
            d=2,
            hilbert_function=(1, 1, 1),
            kernel_object="I_p(1)",
            chain="O(1) -> O_p(1) -> omega(-1)[2]",
            dimension=2,
            charge_node=_Z(2, 2, _I(2, 1, 1)),
            witness_ideal=("x1", "x2"),
        ),
        CatalogEntry(
            label="rank-2",
            n=2,
            d=2,
            hilbert_function=(1, 2, 1),
            kernel_object="O",
            chain="O(1) -> O_l(1) -> omega(-1)[2]",
            dimension=4,
            charge_node=_Z(2, 2, _O(2, 0)),
            witness_ideal=("x2",),
        ),
        CatalogEntry(
            label="rank-3",
            n=2,
            d=2,
            hilbert_function=(1, 3, 1),
            kernel_object="none (semistable)",
            chain="O(1) -> omega(-1)[2] injective",
            dimension=5,
            charge_node=_Z(2, 2, _cone_class(2, 1)),
        ),
    ]


def _plane_d3() -> list[CatalogEntry]:
    return [
        CatalogEntry(
            label="veronese",
            n=2,
            d=3,
            hilbert_function=(1, 1, 1, 1),
            kernel_object="I_p(2)",
            chain="O(2) -> O_p(2) -> omega(-1)[2]",
            dimension=2,
            charge_node=_Z(2, 3, _I(2, 1, 2)),
            witness_ideal=("x1", "x2"),
        ),
        CatalogEntry(
            label="secant-lines",
            n=2,
            d=3,
            hilbert_function=(1, 2, 2, 1),
            kernel_object="I_pq(2)",
            chain="O(2) -> O_pq(2) -> omega(-1)[2]",
            dimension=5,
            charge_node=_Z(2, 3, _I(2, 2, 2)),
            witness_ideal=("x2", "x0*x1"),
        ),
        CatalogEntry(
            label="three-points",
            n=2,
            d=3,
            hilbert_function=(1, 3, 3, 1),
            kernel_object="I_pqr(2)",
            chain="O(2) -> O_pqr(2) -> omega(-1)[2]",
            dimension=8,
            charge_node=_Z(2, 3, _I(2, 3, 2)),
            betti_fingerprint=((0, 0), (3, 2), (2, 3), (0, 0)),
            witness_ideal=("x0*x1", "x0*x2", "x1*x2"),
        ),
        CatalogEntry(
            label="open-semistable",
            n=2,
            d=3,
            hilbert_function=(1, 3, 3, 1),
            kernel_object="O^3",
            chain="O^3 -> O(2), no intermediary",
            dimension=9,
            charge_node=_Z(2, 3, _O(2, 0).scale(3)),
            betti_fingerprint=((0, 0), (3, 0), (0, 3), (0, 0)),
        ),
    ]


def _plane_d4() -> list[CatalogEntry]:
    return [
        CatalogEntry(
            label="veronese",
            n=2,
            d=4,
            hilbert_function=(1, 1, 1, 1, 1),
            kernel_object="I_p(2)",
            chain="O(2) -> O_p -> omega(-2)[2]",
            dimension=2,
            charge_node=_Z(2, 4, _I(2, 1, 2)),
            witness_ideal=("x1", "x2"),
        ),
        CatalogEntry(
            label="secant-lines",
            n=2,
            d=4,
            hilbert_function=(1, 2, 2, 2, 1),
            kernel_object="I_pq(2)",
            chain="O(2) -> O_l(2) -> O_pq -> omega(-2)[2]",
            dimension=5,
            charge_node=_Z(2, 4, _I(2, 2, 2)),
            witness_ideal=("x2", "x0*x1"),
        ),
        CatalogEntry(
            label="line-quartics",
            n=2,
            d=4,
            hilbert_function=(1, 2, 3, 2, 1),
            kernel_object="O(1)",
            chain="O(2) -> O_l(2) -> omega(-2)[2]",
            dimension=6,
            charge_node=_Z(2, 4, _O(2, 1)),
            witness_ideal=("x2",),
        ),
        CatalogEntry(
            label="three-points",
            n=2,
            d=4,
            hilbert_function=(1, 3, 3, 3, 1),
            kernel_object="I_pqr(2)",
            chain="O(2) -> O_pqr -> omega(-2)[2]",
            dimension=8,
            charge_node=_Z(2, 4, _I(2, 3, 2)),
            witness_ideal=("x0*x1", "x0*x2", "x1*x2"),
        ),
        CatalogEntry(
            label="quartic-line-plus-point",
            n=2,
            d=4,
            hilbert_function=(1, 3, 4, 3, 1),
            kernel_object="I_{l+p}(2)",
            chain="O(2) -> O_{l+p}(2) -> omega(-2)[2]",
            dimension=9,
            charge_node=ChargePoint(Fraction(5, 2), Fraction(2)),
            betti_fingerprint=((0, 0), (2, 1), (2, 2), (1, 2), (0, 0)),
            witness_ideal=("x0*x2", "x1*x2"),
        ),
        CatalogEntry(
            label="conic-pencil-base",
            n=2,
            d=4,
            hilbert_function=(1, 3, 4, 3, 1),
            kernel_object="O^2",
            chain="O(2) -> O(2)/O^2 -> omega(-2)[2]",
            dimension=11,
            charge_node=_Z(2, 4, _O(2, 0).scale(2)),
            betti_fingerprint=((0, 0), (2, 0), (1, 1), (0, 2), (0, 0)),
        ),
        CatalogEntry(
            label="single-conic",
            n=2,
            d=4,
            hilbert_function=(1, 3, 5, 3, 1),
            kernel_object="O",
            chain="O(2) -> O_C(2) -> omega(-2)[2]",
            dimension=13,
            charge_node=_Z(2, 4, _O(2, 0)),
            witness_ideal=("x0*x1 - x2^2",),
        ),
        CatalogEntry(
            label="open-semistable",
            n=2,
            d=4,
            hilbert_function=(1, 3, 6, 3, 1),
            kernel_object="none (semistable)",
            chain="[O(-2)^7 -> O(-1)^7], corank one",
            dimension=14,
            charge_node=_Z(2, 4, _cone_class(2, 2)),
        ),
    ]


_PLANE_CATALOGS: dict[int, Callable[[], list[CatalogEntry]]] = {
    1: _plane_d1,
    2: _plane_d2,
    3: _plane_d3,
    4: _plane_d4,
}


def catalog(n: int, d: int) -> list[CatalogEntry]:
    """The stratum catalog for the supported (n, d) pairs.

    Binary forms are cataloged up to d = 12 (classification there needs
    only Hilbert functions, not betti tables); the plane cases cover
    d = 1..4.
    """
    if n == 1 and 1 <= d <= 12:
        return _binary_entries(d)
    if n == 2 and d in _PLANE_CATALOGS:
        return _PLANE_CATALOGS[d]()
    raise EnvelopeError(f"no stratum catalog for (n={n}, d={d})")


def catalog_supported(n: int, d: int) -> bool:
    return (n == 1 and 1 <= d <= 12) or (n == 2 and d in _PLANE_CATALOGS)


# ---------------------------------------------------------------------------
# classification


def classify(g: Socle) -> CatalogEntry | None:
    """Match a socle to its stratum; None means unclassified, never a guess."""
    entries = catalog(g.n, g.d)
    hf = hilbert_function(g)
    matches = [e for e in entries if e.hilbert_function == hf]
    if not matches:
        return None
    if len(matches) == 1:
        return matches[0]
    square = interior_square(koszul_betti(g))
    narrowed = [e for e in matches if e.betti_fingerprint == square]
    if len(narrowed) == 1:
        return narrowed[0]
    return None


def quadric_rank(g: Socle) -> tuple[int, CatalogEntry | None]:
    """Rank of the degree-1 catalecticant and the matching rank stratum."""
    if g.d != 2:
        raise ValueError("quadric rank needs a degree-2 socle")
    from .apolarity import catalecticant
    from .linalg import rank as matrix_rank

    r = matrix_rank(catalecticant(g, 1))
    entry = None
    if catalog_supported(g.n, 2):
        for e in catalog(g.n, 2):
            if e.hilbert_function == (1, r, 1):
                entry = e
    return r, entry


# ---------------------------------------------------------------------------
# binary forms: apolar pairs and Waring decomposition


def _vector_to_form(vec: Sequence[int], basis: list[Monomial]) -> Form:
    return {m: Fraction(c) for m, c in zip(basis, vec) if c}


def binary_apolar_pair(g: Socle) -> tuple[Form, Form]:
    """The two generators (F_a, F_b) of a binary apolar ideal, a + b = d + 2.

    F_a spans the first nonzero piece of the annihilator; F_b is a
    degree-b element outside S_(b-a) * F_a, chosen deterministically from
    echelon bases.  When a = b the pair is the echelon basis of the
    degree-a piece.
    """
    if g.n != 1:
        raise ValueError("apolar pairs are a binary-form computation")
    d = g.d
    if d == 0:
        # the annihilator is the irrelevant ideal: two linear generators
        return {(1, 0): Fraction(1)}, {(0, 1): Fraction(1)}
    a = None
    first: list[list[int]] = []
    for e in range(d + 1):
        piece = apolar_piece(g, e)
        if piece:
            a, first = e, piece
            break
    assert a is not None  # I_d has dimension d > 0
    b = d + 2 - a
    basis_a = monomial_basis(1, a)
    f_a = _vector_to_form(first[0], basis_a)
    if a == b:
        return f_a, _vector_to_form(first[1], basis_a)

    basis_b = monomial_basis(1, b)
    if b <= d:
        piece_b = [list(v) for v in apolar_piece(g, b)]
    else:
        piece_b = [
            [1 if k == i else 0 for k in range(len(basis_b))]
            for i in range(len(basis_b))
        ]
    # span of S_(b-a) * F_a inside S_b, as an echelon form
    mult_rows = []
    for m in monomial_basis(1, b - a):
        row = [Fraction(0)] * len(basis_b)
        for mono, c in f_a.items():
            target = tuple(x + y for x, y in zip(m, mono))
            row[basis_b.index(target)] += c
        mult_rows.append(row)
    reduced, pivots = rref(mult_rows, len(basis_b))
    pivot_of = dict(zip(pivots, reduced))
    for vec in piece_b:
        work = [Fraction(v) for v in vec]
        for p, row in pivot_of.items():
            if work[p]:
                factor = work[p]
                work = [w - factor * x for w, x in zip(work, row)]
        if any(work):
            mult = 1
            for w in work:
                mult = mult * w.denominator // gcd(mult, w.denominator)
            ints = [int(w * mult) for w in work]
            g_ = 0
            for v in ints:
                g_ = gcd(g_, v)
            if g_ > 1:
                ints = [v // g_ for v in ints]
            if next(v for v in ints if v) < 0:
                ints = [-v for v in ints]
            return f_a, _vector_to_form(ints, basis_b)
    raise AssertionError("no independent cogenerator found")


def _binary_roots(f: Form) -> tuple[list[tuple[int, int]], Form]:
    """Rational roots (as projective points in y) of a binary x-form.

    Returns (roots with multiplicity, remaining rootless factor).  The
    point (p : q) is a root when the linear operator q*x0 - p*x1 divides;
    the factor x1 corresponds to (1 : 0).
    """
    deg = form_degree(f)
    coeffs = [Fraction(0)] * (deg + 1)
    for mono, c in f.items():
        coeffs[mono[1]] = Fraction(c)  # exponent of x1
    # coeffs[k] multiplies x0^(deg-k) x1^k; as a polynomial in t = x1/x0
    # the roots t = -p/q of sum coeffs[k] t^k give operators q x0 + p x1,
    # which kill the point (p : -q) ... handled below via direct division.
    roots: list[tuple[int, int]] = []

    def divide_linear(cs: list[Fraction], q: int, p: int) -> list[Fraction] | None:
        # divide sum cs[k] x0^(m-k) x1^k by (q x0 - p x1) exactly
        m = len(cs) - 1
        if m < 1:
            return None
        out = [Fraction(0)] * m
        rem = list(cs)
        if q == 0:
            # factor x1: requires cs[0] == 0
            if rem[0] != 0:
                return None
            return [c / (-p) for c in rem[1:]]
        for k in range(m):
            out[k] = rem[k] / q
            rem[k + 1] += out[k] * p
        if rem[m] != 0:
            return None
        return out

    work = coeffs
    candidates: list[tuple[int, int]] = [(1, 0), (0, 1)]
    # rational root candidates (p : q): p divides the x1^deg coefficient,
    # q divides the x0^deg coefficient, taken over the integer content
    def divisors(v: int) -> list[int]:
        v = abs(v)
        out = [k for k in range(1, v + 1) if v % k == 0]
        return out or [1]

    mult = 1
    for c in work:
        mult = mult * c.denominator // gcd(mult, c.denominator)
    ints = [int(c * mult) for c in work]
    # as a polynomial in t = x1/x0 the trailing/leading coefficients bound
    # the numerators and denominators of rational roots q/p, i.e. points (p : q)
    trailing = next((v for v in ints if v), 0)
    leading = next((v for v in reversed(ints) if v), 0)
    for p in divisors(leading):
        for q in divisors(trailing):
            if gcd(p, q) == 1:
                candidates.extend([(p, q), (-p, q)])

    for p, q in candidates:
        while True:
            divided = divide_linear(work, q, p)
            if divided is None:
                break
            work = divided
            roots.append((p, q))
            if len(work) == 1:
                break
        if len(work) == 1:
            break
    rest: Form = {}
    m = len(work) - 1
    for k, c in enumerate(work):
        if c:
            rest[(m - k, k)] = c
    if not rest:
        rest = {(0, 0): work[0]} if work and work[0] else {}
    return roots, rest


def _form_gcd_is_one(f: Form) -> bool:
    """Squarefree certificate: gcd of the dehomogenization and its derivative.

    The coefficient of x0^(deg-k) x1^k becomes the t^k coefficient after
    setting x0 = 1; a repeated factor at (1 : 0) is a repeated x1 factor
    and is checked separately since dehomogenizing hides it.
    """
    deg = form_degree(f)
    p = [Fraction(0)] * (deg + 1)
    for mono, c in f.items():
        p[mono[1]] = Fraction(c)
    if deg >= 2 and p[0] == 0 and p[1] == 0:
        return False

    def poly_gcd(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
        u, v = list(u), list(v)
        while True:
            while v and v[-1] == 0:
                v.pop()
            if not v:
                break
            while len(u) >= len(v):
                if u[-1] == 0:
                    u.pop()
                    continue
                factor = u[-1] / v[-1]
                shift = len(u) - len(v)
                for k in range(len(v)):
                    u[shift + k] -= factor * v[k]
                u.pop()
            u, v = v, u
        while u and u[-1] == 0:
            u.pop()
        return u

    dp = [k * p[k] for k in range(1, deg + 1)]
    return len(poly_gcd(p, dp)) <= 1


@dataclass(frozen=True)
class WaringReport:
    kind: str  # "points" | "irrational" | "tangential" | "nonunique"
    apolar_degree: int
    apolar_form: Form
    points: tuple[tuple[int, int], ...] = ()
    weights: tuple[Fraction, ...] = ()
    partition: tuple[int, ...] = ()
    note: str = ""


def binary_waring(g: Socle) -> WaringReport:
    """Waring data of a binary form, exact over the rationals.

    In the uniqueness regime 2a <= d the degree-a apolar generator is
    unique; its rational roots are the points of the decomposition and an
    exact linear solve recovers the weights.  Squarefree generators with
    irrational roots return the generator itself with a squarefree
    certificate; non-squarefree generators return their multiplicity
    partition (tangential spans).  Outside the regime a nonunique marker
    is returned.
    """
    if g.n != 1:
        raise ValueError("Waring reports are a binary-form computation")
    f_a, _ = binary_apolar_pair(g)
    a = form_degree(f_a)
    # uniqueness holds for spans of length-a schemes with 2(a - 1) < d
    if 2 * a > g.d + 1:
        return WaringReport(
            kind="nonunique",
            apolar_degree=a,
            apolar_form=f_a,
            note=f"2(a-1) = {2 * (a - 1)} reaches d = {g.d}: decomposition not unique",
        )
    if not _form_gcd_is_one(f_a):
        roots, rest = _binary_roots(f_a)
        counts: dict[tuple[int, int], int] = {}
        for r in roots:
            counts[r] = counts.get(r, 0) + 1
        partition = tuple(sorted(counts.values(), reverse=True)) if roots else ()
        pts = tuple(sorted(counts, key=lambda r: counts[r], reverse=True))
        return WaringReport(
            kind="tangential",
            apolar_degree=a,
            apolar_form=f_a,
            points=pts,
            partition=partition or (a,),
            note="apolar generator is not squarefree: span of a non-reduced scheme",
        )
    roots, rest = _binary_roots(f_a)
    if len(roots) < a:
        return WaringReport(
            kind="irrational",
            apolar_degree=a,
            apolar_form=f_a,
            points=tuple(roots),
            note="squarefree apolar generator with irrational roots",
        )
    # exact weights: solve sum_i w_i * point_power(v_i, d) = g
    basis = monomial_basis(1, g.d)
    rows = []
    rhs = []
    powers = [point_power([Fraction(p), Fraction(q)], g.d) for p, q in roots]
    for mono in basis:
        rows.append([pw.get(mono, Fraction(0)) for pw in powers])
        rhs.append(g.coeff(mono))
    aug = [row + [val] for row, val in zip(rows, rhs)]
    reduced, pivots = rref(aug, len(roots) + 1)
    if len(roots) in pivots:
        raise AssertionError("inconsistent Waring system")
    weights = [Fraction(0)] * len(roots)
    for k, p in enumerate(pivots):
        weights[p] = reduced[k][-1]
    return WaringReport(
        kind="points",
        apolar_degree=a,
        apolar_form=f_a,
        points=tuple(roots),
        weights=tuple(weights),
    )


# ---------------------------------------------------------------------------
# witnesses


_E0, _E1, _E2 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
_CONIC_POINTS = [(1, 0, 0), (0, 1, 0), (1, 1, 1), (1, 4, 2), (1, 4, -2)]


def witness_socles(n: int, d: int) -> dict[str, Socle]:
    """One constructive witness socle per catalog entry."""
    import random

    if n == 1:
        pts = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (1, -2), (1, 3)]
        return {
            f"binary-span-a{a}": synth_power_sum(pts[:a], [1] * a, d)
            for a in range(1, d // 2 + 2)
        }
    if n == 2 and d == 1:
        return {"linear-form": Socle.parse("y0", n=2)}
    if n == 2 and d == 2:
        return {
            "rank-1": synth_power_sum([_E0], [1], 2),
            "rank-2": synth_power_sum([_E0, _E1], [1, 1], 2),
            "rank-3": synth_power_sum([_E0, _E1, _E2], [1, 1, 1], 2),
        }
    if n == 2 and d == 3:
        rng = random.Random(1203)
        from .apolarity import random_socle

        while True:
            open_witness = random_socle(rng, 2, 3)
            if hilbert_function(open_witness) == (1, 3, 3, 1):
                t = koszul_betti(open_witness)
                if t.b(1, 3) == 0:
                    break
        return {
            "veronese": synth_power_sum([_E0], [1], 3),
            "secant-lines": synth_power_sum([_E0, _E1], [1, 1], 3),
            "three-points": synth_power_sum([_E0, _E1, _E2], [1, 1, 1], 3),
            "open-semistable": open_witness,
        }
    if n == 2 and d == 4:
        rng = random.Random(1204)
        from .apolarity import random_socle

        while True:
            open_witness = random_socle(rng, 2, 4)
            if hilbert_function(open_witness) == (1, 3, 6, 3, 1):
                break
        return {
            "veronese": synth_power_sum([_E0], [1], 4),
            "secant-lines": synth_power_sum([_E0, _E1], [1, 1], 4),
            "line-quartics": synth_power_sum([_E0, _E1, (1, 1, 0)], [1, 1, 1], 4),
            "three-points": synth_power_sum([_E0, _E1, _E2], [1, 1, 1], 4),
            "quartic-line-plus-point": synth_power_sum(
                [_E0, _E1, (1, 1, 0), _E2], [1, 1, 1, 1], 4
            ),
            "conic-pencil-base": synth_power_sum(
                [_E0, _E1, _E2, (1, 1, 1)], [1, 1, 1, 1], 4
            ),
            "single-conic": synth_power_sum(_CONIC_POINTS, [1] * 5, 4),
            "open-semistable": open_witness,
        }
    raise EnvelopeError(f"no witnesses for (n={n}, d={d})")


def verify_factorization_witness(g: Socle, entry: CatalogEntry) -> bool:
    """Apolarity containment of the entry's stored witness ideal.

    Entries whose destabilizing chain is not ideal-theoretic carry no
    witness ideal and are rejected.
    """
    if entry.witness_ideal is None:
        raise ValueError(f"entry {entry.label!r} has no ideal-theoretic witness")
    from .apolarity import parse_operator

    gens = [parse_operator(text) for text in entry.witness_ideal]
    gens = [
        {m + (0,) * (g.n + 1 - len(m)): c for m, c in f.items()} for f in gens
    ]
    return factors_through_ideal(g, gens)


# ---------------------------------------------------------------------------
# charge diagrams


def _rule_red(
    name: str, point: ChargePoint, n: int, s: Fraction
) -> tuple[bool, str | None]:
    """Apply the two computational rejection rules to a candidate node."""
    origin = charge(TwistComplex.line_bundle(n, 0), s)
    if compare_arg(point, origin) < 0:
        return True, (
            "argument below the structure sheaf ray: outside the window category"
        )
    if n == 2 and not realizable_by_sheaf(point.x, point.y, s):
        return True, (
            "value above every rank's semistable maximum: torsion sheaves only"
        )
    return False, None


def diagram_rule_status(node: DiagramNode, n: int, d: int) -> str:
    """Status predicted by rules 1 and 2 alone (candidates only)."""
    red, _ = _rule_red(node.name, node.point, n, parity_point(d))
    return "red" if red else "black"


def _node(
    n: int,
    d: int,
    name: str,
    cls: TwistComplex,
    kind: str,
    status: str = "black",
    reason: str | None = None,
) -> DiagramNode:
    return DiagramNode(name, _Z(n, d, cls), status, reason, kind)


_FACTORIZATION_NOTES = {
    (2, 1, "O^2"): "every map O^2 -> O(1) factors through I_p(1)",
    (2, 1, "O"): "every kernel contains O^2, so O alone is never maximal",
    (2, 3, "T(-1)"): "every map T(-1) -> O(2) factors through I_pqr(2): c2(T) = 3",
}


def zdiagram(n: int, d: int) -> list[DiagramNode]:
    """Named nodes of the charge diagram with exact coordinates.

    Candidate nodes reproduce their catalog status; red reasons are the
    computational rules 1 and 2 where they apply and the annotated
    factorization notes otherwise.
    """
    s = parity_point(d)
    nodes: list[DiagramNode] = []
    if n == 1:
        if not 1 <= d <= 12:
            raise EnvelopeError(f"diagram envelope is d <= 12 for n = 1, got {d}")
        e = (d + 1) // 2
        nodes.append(_node(1, d, "O(-1)[1]", _O(1, -1).shift(1), "reference"))
        nodes.append(_node(1, d, "C_p", TwistComplex.point(1), "reference"))
        if d % 2 == 0:
            nodes.append(_node(1, d, "E(sigma)", _cone_class(1, e), "reference"))
        else:
            omega = TwistComplex.canonical_twist(1, e - 1)
            nodes.append(_node(1, d, "E(sigma)", _O(1, e) + omega.shift(1), "reference"))
        for k in range(e):
            nodes.append(_node(1, d, f"O({k})" if k else "O", _O(1, k), "candidate"))
        nodes.append(_node(1, d, f"O({e})", _O(1, e), "reference"))
        return nodes
    if n != 2 or d not in (1, 2, 3, 4):
        raise EnvelopeError(f"no charge diagram for (n={n}, d={d})")

    nodes.append(_node(2, d, "O(-1)[1]", _O(2, -1).shift(1), "reference"))
    nodes.append(_node(2, d, "O(-2)[2]", _O(2, -2).shift(2), "reference"))
    nodes.append(_node(2, d, "C_p", TwistComplex.point(2), "reference"))
    if d == 1:
        candidates = [
            ("O", _O(2, 0), "red"),
            ("O^2", _O(2, 0).scale(2), "red"),
            ("I_p(1)", _I(2, 1, 1), "black"),
        ]
        nodes.append(_node(2, d, "O(1)", _O(2, 1), "reference"))
    elif d == 2:
        candidates = [
            ("O", _O(2, 0), "black"),
            ("I_p(1)", _I(2, 1, 1), "black"),
            ("I_pq(1)", _I(2, 2, 1), "red"),
        ]
        nodes.append(_node(2, d, "O(1)", _O(2, 1), "reference"))
    elif d == 3:
        candidates = [
            ("O(1)", _O(2, 1), "black"),
            ("I_p(2)", _I(2, 1, 2), "black"),
            ("I_pq(2)", _I(2, 2, 2), "black"),
            ("I_pqr(2)", _I(2, 3, 2), "black"),
            ("O^3", _O(2, 0).scale(3), "black"),
            ("T(-1)", TwistComplex(2, ((0, 0, 3), (1, 1, 1))), "red"),
        ]
        nodes.append(_node(2, d, "O(2)", _O(2, 2), "reference"))
    else:
        candidates = [
            ("O", _O(2, 0), "black"),
            ("O(1)", _O(2, 1), "black"),
            ("O^2", _O(2, 0).scale(2), "black"),
            ("I_p(2)", _I(2, 1, 2), "black"),
            ("I_pq(2)", _I(2, 2, 2), "black"),
            ("I_pqr(2)", _I(2, 3, 2), "black"),
        ]
        nodes.append(_node(2, d, "O(2)", _O(2, 2), "reference"))

    for name, cls, status in candidates:
        point = _Z(2, d, cls)
        reason = None
        if status == "red":
            fired, rule_reason = _rule_red(name, point, 2, s)
            if fired:
                reason = rule_reason
            else:
                reason = _FACTORIZATION_NOTES[(2, d, name)]
        nodes.append(DiagramNode(name, point, status, reason, "candidate"))
    return nodes


def zdiagram_json(nodes: Sequence[DiagramNode]) -> list[dict]:
    return [
        {
            "name": node.name,
            "x": str(node.point.x),
            "y": str(node.point.y),
            "status": node.status,
            "reason": node.reason,
            "kind": node.kind,
        }
        for node in nodes
    ]


def zdiagram_svg(nodes: Sequence[DiagramNode], size: int = 480) -> str:
    """A labeled rendering of the diagram: arrows, black and red bullets."""
    xs = [float(n.point.x) for n in nodes] + [0.0]
    ys = [float(n.point.y) for n in nodes] + [0.0]
    span_x = max(xs) - min(xs) or 1.0
    span_y = max(ys) - min(ys) or 1.0
    pad = 0.15 * max(span_x, span_y)
    lo_x, hi_x = min(xs) - pad, max(xs) + pad
    lo_y, hi_y = min(ys) - pad, max(ys) + pad
    scale = size / max(hi_x - lo_x, hi_y - lo_y)

    def sx(v: float) -> float:
        return (v - lo_x) * scale

    def sy(v: float) -> float:
        return size - (v - lo_y) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<line x1="{sx(lo_x):.1f}" y1="{sy(0):.1f}" x2="{sx(hi_x):.1f}" '
        f'y2="{sy(0):.1f}" stroke="#999" stroke-width="1"/>',
        f'<line x1="{sx(0):.1f}" y1="{sy(lo_y):.1f}" x2="{sx(0):.1f}" '
        f'y2="{sy(hi_y):.1f}" stroke="#999" stroke-width="1"/>',
    ]
    for node in nodes:
        x, y = sx(float(node.point.x)), sy(float(node.point.y))
        color = "#c00" if node.status == "red" else "#000"
        parts.append(
            f'<line x1="{sx(0):.1f}" y1="{sy(0):.1f}" x2="{x:.1f}" y2="{y:.1f}" '
            f'stroke="#bbb" stroke-width="1"/>'
        )
        if node.kind == "candidate":
            parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="4" fill="{color}"/>')
        parts.append(
            f'<text x="{x + 6:.1f}" y="{y - 4:.1f}" font-size="11" '
            f'fill="{color}">{node.name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
