"""Supernatural numbers with a cofinite default exponent.

A supernatural number is a formal product prod_p p^(e_p) with exponents in
N u {inf}.  We represent exactly the finitely-described ones: finitely many
exceptional primes plus one default exponent applied to every other prime,
so both prod_p p and prod_p p^inf are representable.  The full semigroup is
uncountable; everything else is out of reach by construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .primes import factorize, is_prime

INF = float("inf")


def _exp_ok(e) -> bool:
    return e == INF or (isinstance(e, int) and e >= 0)


@dataclass(frozen=True)
class Supernatural:
    """exceptions: sorted tuple of (prime, exponent); default applies elsewhere."""

    exceptions: tuple[tuple[int, object], ...] = ()
    default: object = 0

    def __post_init__(self):
        if not _exp_ok(self.default):
            raise ValueError(f"bad default exponent {self.default!r}")
        seen = set()
        for p, e in self.exceptions:
            if not is_prime(p):
                raise ValueError(f"exception key {p} is not prime")
            if not _exp_ok(e):
                raise ValueError(f"bad exponent {e!r} at prime {p}")
            if e == self.default:
                raise ValueError(f"non-canonical exception {p}^{e} equal to default")
            if p in seen:
                raise ValueError(f"duplicate prime {p}")
            seen.add(p)
        object.__setattr__(self, "exceptions", tuple(sorted(self.exceptions)))

    # -- constructors

    @classmethod
    def from_factors(cls, factors: dict[int, object], default=0) -> "Supernatural":
        exc = tuple((p, e) for p, e in factors.items() if e != default)
        return cls(exc, default)

    @classmethod
    def from_int(cls, n: int) -> "Supernatural":
        if n < 1:
            raise ValueError("need n >= 1")
        return cls.from_factors({p: e for p, e in factorize(n).items()})

    # -- access

    def exponent(self, p: int):
        for q, e in self.exceptions:
            if q == p:
                return e
        return self.default

    def _primes(self) -> set[int]:
        return {p for p, _ in self.exceptions}

    def is_finite(self) -> bool:
        return self.default == 0 and all(e != INF for _, e in self.exceptions)

    def __str__(self) -> str:
        return format_supernatural(self)


ONE = Supernatural()


def _merge(s: Supernatural, t: Supernatural, op) -> Supernatural:
    default = op(s.default, t.default)
    factors = {}
    for p in s._primes() | t._primes():
        factors[p] = op(s.exponent(p), t.exponent(p))
    return Supernatural.from_factors(factors, default)


def mul(s: Supernatural, t: Supernatural) -> Supernatural:
    """Exponent-wise sum; inf absorbs."""
    return _merge(s, t, lambda a, b: INF if INF in (a, b) else a + b)


def lcm(s: Supernatural, t: Supernatural) -> Supernatural:
    return _merge(s, t, max)


def divides(n, s: Supernatural) -> bool:
    """n | s exponent-wise; n may be a positive int or a Supernatural."""
    if isinstance(n, int):
        n = Supernatural.from_int(n)
    if n.default > s.default:
        return False
    return all(n.exponent(p) <= s.exponent(p) for p in n._primes() | s._primes())


def in_open(s: Supernatural, generators: list[int]) -> bool:
    """Membership in the basic localic open spanned by the generators."""
    if not generators:
        raise ValueError("need at least one generator")
    return any(divides(n, s) for n in generators)


def adele_class_equiv(s: Supernatural, t: Supernatural) -> bool:
    """True when finite multiples can match s and t (n.s = m.t solvable)."""
    if s.default != t.default:
        return False
    for p in s._primes() | t._primes():
        a, b = s.exponent(p), t.exponent(p)
        if a != b and (a == INF or b == INF):
            return False
    return True


stable_iso = adele_class_equiv


def from_chain(chain: list[int], limit: bool = False) -> Supernatural:
    """Exponent-wise supremum of a divisibility chain.

    A finite chain can never produce an infinite exponent.  With limit=True
    the chain is extended periodically by the ratio of its last two entries,
    sending every prime of that ratio to exponent inf.
    """
    if not chain:
        raise ValueError("empty chain")
    for a, b in zip(chain, chain[1:]):
        if a < 1 or b % a != 0:
            raise ValueError(f"chain divisibility violation: {a} does not divide {b}")
    if chain[0] < 1:
        raise ValueError("chain entries must be positive")
    factors: dict[int, object] = dict(factorize(chain[-1]))
    if limit:
        if len(chain) < 2:
            raise ValueError("limit extension needs at least two entries")
        ratio = chain[-1] // chain[-2]
        for p in factorize(ratio):
            factors[p] = INF
    return Supernatural.from_factors(factors)


# ---------------------------------------------------------------------------
# Text format: 2^inf*3^2*[default=0]
# ---------------------------------------------------------------------------

_FACTOR_RE = re.compile(r"^(\d+)(?:\^(\d+|inf))?$")
_DEFAULT_RE = re.compile(r"^\[default=(\d+|inf)\]$")


def format_supernatural(s: Supernatural) -> str:
    parts = []
    for p, e in s.exceptions:
        if e == INF:
            parts.append(f"{p}^inf")
        elif e == 1:
            parts.append(str(p))
        else:
            parts.append(f"{p}^{e}")
    d = "inf" if s.default == INF else str(s.default)
    parts.append(f"[default={d}]")
    return "*".join(parts)


def parse_supernatural(text: str) -> Supernatural:
    s = text.replace(" ", "")
    if re.fullmatch(r"\d+", s):
        return Supernatural.from_int(int(s))
    factors: dict[int, object] = {}
    default: object = 0
    for tok in s.split("*"):
        m = _DEFAULT_RE.match(tok)
        if m:
            default = INF if m.group(1) == "inf" else int(m.group(1))
            continue
        m = _FACTOR_RE.match(tok)
        if not m:
            raise ValueError(f"bad supernatural token {tok!r}")
        p = int(m.group(1))
        if p == 1 and m.group(2) is None:
            continue
        e = m.group(2)
        exp = INF if e == "inf" else (int(e) if e else 1)
        factors[p] = exp
    return Supernatural.from_factors(factors, default)
