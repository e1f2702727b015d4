"""Bost-Connes data: the Q/Z instance, axiom checks, and the lattice presheaf.

Elements of Q/Z are reduced Fractions in [0, 1).  The concrete datum is
sigma_n(x) = nx mod 1 with section s_n(x) = x/n and kernel {i/n}; other data
can be plugged in through the same small interface, as long as they expose
enumeration of the n-torsion.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

from .conway import Letter, Word, is_normal, split_normal


def qz(x) -> Fraction:
    """Reduce into [0, 1)."""
    x = Fraction(x)
    return x - floor(x)


class QZDatum:
    """The group Q/Z with multiplication endomorphisms and division sections."""

    def sigma(self, n: int, x: Fraction) -> Fraction:
        return qz(n * x)

    def section(self, n: int, x: Fraction) -> Fraction:
        return qz(x / n)

    def kernel(self, n: int) -> list[Fraction]:
        return [Fraction(i, n) for i in range(n)]

    def torsion(self, n: int) -> list[Fraction]:
        """All x with n.x = 0, i.e. (1/n)Z/Z."""
        return [Fraction(i, n) for i in range(n)]


QZ = QZDatum()


def check_condition3(n: int, datum=QZ) -> bool:
    """Kernel of sigma_n is cyclic of order n."""
    if n < 1:
        raise ValueError("need n >= 1")
    ker = [x for x in datum.torsion(n) if datum.sigma(n, x) == 0]
    if len(ker) != n:
        return False
    gen = datum.kernel(n)[1] if n > 1 else ker[0]
    cyc = set()
    x = gen * 0
    for _ in range(n):
        cyc.add(qz(x))
        x = x + gen
    return cyc == set(ker)


def check_condition4(n: int, m: int, datum=QZ) -> bool:
    """Unique decomposition x = x_{k,n} + s_n(y) over the (1/(n*m))-torsion.

    Existence and uniqueness for every element amount to the n*m candidate
    sums being pairwise distinct and exhausting the torsion level.
    """
    if n < 1 or m < 1:
        raise ValueError("need n, m >= 1")
    ker = datum.kernel(n)
    pieces = [datum.section(n, y) for y in datum.torsion(m)]
    sums = [qz(k + s) for k in ker for s in pieces]
    return len(set(sums)) == n * m and set(sums) == set(datum.torsion(n * m))


def check_condition5(p: int, q: int, datum=QZ) -> bool:
    """Section/kernel compatibility mirroring the meta-commutation indices."""
    if p == q:
        raise ValueError("need distinct primes")
    kp = datum.kernel(p)
    kq = datum.kernel(q)
    for i in range(p):
        for j in range(q):
            v = i * q + j
            l, k = divmod(v, p)
            lhs = qz(datum.section(p, kq[j]) + kp[i])
            rhs = qz(datum.section(q, kp[k]) + kq[l])
            if lhs != rhs:
                return False
            if datum.sigma(p, kq[j]) != kq[p * j % q]:
                return False
    return True


def operator(l: Letter, x: Fraction, datum=QZ) -> Fraction:
    """The free-letter map s_p(x) + x_{i,p}; the power letter acts as sigma_p."""
    if l.is_power:
        return datum.sigma(l.p, x)
    return qz(datum.section(l.p, x) + datum.kernel(l.p)[l.i])


def rho(p: int, x: Fraction, datum=QZ) -> set[Fraction]:
    """The sigma_p-preimage set of x, as the orbit of the free-letter operators."""
    return {operator(Letter(p, i), x, datum) for i in range(p)}


def sigma_fiber(p: int, x: Fraction) -> set[Fraction]:
    """Brute-force preimages of x under multiplication by p inside (1/(p*b))Z/Z."""
    b = x.denominator
    return {Fraction(a, p * b) for a in range(p * b) if qz(Fraction(a, p * b) * p) == x}


def presheaf_value(w: Word, level: int, datum=QZ) -> set[Fraction]:
    """Value of the lattice presheaf on a normal word, truncated at (1/level)Z/Z.

    The power part only fixes the source torsion group, which for Q/Z is all
    of (1/level)Z/Z since sigma is surjective; the free prefix acts by the
    operator chain.  Operators may refine the level: results live in
    (1/(level * prod p))Z/Z.
    """
    if level < 1:
        raise ValueError("need level >= 1")
    if not is_normal(w):
        raise ValueError("word is not in normal form")
    free, _power = split_normal(w)
    vals = set(datum.torsion(level))
    for l in reversed(free):
        vals = {operator(l, x, datum) for x in vals}
    return vals
