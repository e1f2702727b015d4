"""Dynamical Belyi polynomials over Q and their morphisms to the other sites.

A dynamical Belyi polynomial fixes 0 and 1 and ramifies only over {0, 1, inf};
the predicate is decided exactly: every irreducible factor of the derivative
must divide P(P-1), i.e. squarefree_part(P') | P(P-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from . import conway
from .bigpicture import PIC_ONE, PicClass, hyperdistance
from .dessins import Passport, _parts
from .ratpoly import PolyQ, multiplicity_counts, root_multiplicity, squarefree_part


def is_dynamical_belyi(p: PolyQ) -> bool:
    if p.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    if p(Fraction(0)) != 0 or p(Fraction(1)) != 1:
        return False
    if p.degree == 1:
        return True
    crit = squarefree_part(p.derivative())
    return crit.divides(p * (p - PolyQ.const(1)))


@dataclass(frozen=True)
class BelyiPoly:
    poly: PolyQ

    def __post_init__(self):
        if not is_dynamical_belyi(self.poly):
            raise ValueError("not a dynamical Belyi polynomial")

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __str__(self):
        from .ratpoly import format_poly

        return format_poly(self.poly)


def b_dk(d: int, k: int) -> BelyiPoly:
    """The degree-d family member with 0 of valency d-k and 1 of valency k+1."""
    if d < 2 or not 0 <= k < d:
        raise ValueError(f"need d >= 2 and 0 <= k < d, got d={d}, k={k}")
    c = Fraction(1)
    for j in range(k + 1):
        c *= d - j
    for j in range(2, k + 1):
        c /= j
    inner = [Fraction((-1) ** (k - i) * comb(k, i), d - i) for i in range(k + 1)]
    inner.reverse()  # a_k + ... + a_0 x^k, lowest degree first
    poly = PolyQ.monomial(c, d - k) * PolyQ(inner)
    return BelyiPoly(poly)


def compose(p: BelyiPoly, p2: BelyiPoly) -> BelyiPoly:
    return BelyiPoly(p.poly.compose(p2.poly))


def black_count(p: BelyiPoly) -> int:
    return squarefree_part(p.poly).degree


def white_count(p: BelyiPoly) -> int:
    return squarefree_part(p.poly - PolyQ.const(1)).degree


def valency_at(p: BelyiPoly, r: int) -> int:
    if r not in (0, 1):
        raise ValueError("valency is defined at 0 and 1")
    f = p.poly if r == 0 else p.poly - PolyQ.const(1)
    return root_multiplicity(f, r)


def poly_passport(p: BelyiPoly) -> Passport:
    """Exact multiplicity passport of (P, P-1); matches passport(D(P))."""
    black = []
    for m, cnt in multiplicity_counts(p.poly).items():
        black += [m] * cnt
    white = []
    for m, cnt in multiplicity_counts(p.poly - PolyQ.const(1)).items():
        white += [m] * cnt
    return Passport(_parts(black), _parts(white))


def compose_count_check(p: BelyiPoly, p2: BelyiPoly) -> bool:
    """Black count of the composition versus deg(P2)(#P^-1(0)-1) + #(P2)^-1(0)."""
    left = black_count(compose(p, p2))
    right = p2.degree * (black_count(p) - 1) + black_count(p2)
    return left == right


def degree_morphism(p: BelyiPoly) -> int:
    return p.degree


def beta_morphism(p: BelyiPoly) -> PicClass:
    """The class (1/d, (b-1)/d) with d = deg P and b the black count."""
    d = p.degree
    b = black_count(p)
    assert 0 <= b - 1 < d  # tree dessins never wrap the offset mod 1
    return PicClass(Fraction(1, d), Fraction(b - 1, d))


def beta_word(p: BelyiPoly) -> conway.Word:
    w = conway.class_to_word(beta_morphism(p))
    if not conway.is_free(w):
        raise AssertionError("beta image left the free-letter submonoid")
    return w


def triangle_check(p: BelyiPoly) -> bool:
    return hyperdistance(PIC_ONE, beta_morphism(p)) == p.degree


def involution_poly(p: BelyiPoly) -> BelyiPoly:
    """1 - P(1 - x); swaps the roles of 0 and 1."""
    one_minus_x = PolyQ((1, -1))
    return BelyiPoly(PolyQ.const(1) - p.poly.compose(one_minus_x))


def free_check(generators: list[BelyiPoly], maxlen: int) -> bool:
    """Distinct words over the generators give distinct composites, up to maxlen."""
    if len(set(g.poly for g in generators)) != len(generators):
        raise ValueError("generators must be pairwise distinct")
    seen: dict[tuple, tuple] = {}
    for n in range(1, maxlen + 1):
        for word in product(range(len(generators)), repeat=n):
            f = generators[word[0]].poly
            for idx in word[1:]:
                f = f.compose(generators[idx].poly)
            key = f.coeffs
            if key in seen and seen[key] != word:
                return False
            seen[key] = word
    return True
