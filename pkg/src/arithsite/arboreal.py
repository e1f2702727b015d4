"""Truncated preimage trees for sequences of degree-d dynamical Belyi maps.

Level k of the tree holds the d^k complex roots of B_1 o ... o B_k - alpha.
Distinctness of the roots is certified exactly (gcd with the derivative over
Q) before any floating point runs; the numeric side then solves the degree-d
preimage polynomial under each parent and Newton-polishes every level against
the full composition chain.  Parenthood is assigned by nearest-image matching
with an explicit ambiguity guard, so the reported tree shape is a checked
output, not an artifact of the solver.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .belyi import BelyiPoly
from .ratpoly import PolyQ, poly_gcd

MAX_LEAVES = 2000


def _check_gens(gens: list[BelyiPoly]) -> int:
    if not gens:
        raise ValueError("need at least one generator")
    d = gens[0].degree
    if any(g.degree != d for g in gens):
        raise ValueError("generators must share one degree")
    return d


def _factor(gens: list[BelyiPoly], k: int) -> BelyiPoly:
    """The level-k map B_{i_k}; periodic sequences extend cyclically."""
    return gens[(k - 1) % len(gens)]


def genericity_check(gens: list[BelyiPoly], alpha: Fraction) -> bool:
    """True when no generator maps alpha to 0 or 1."""
    _check_gens(gens)
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    return all(g.poly(alpha) not in (0, 1) for g in gens)


def composite(gens: list[BelyiPoly], n: int) -> PolyQ:
    """B_{i_1} o ... o B_{i_n} with exact coefficients."""
    _check_gens(gens)
    f = PolyQ.x()
    for k in range(n, 0, -1):
        f = _factor(gens, k).poly.compose(f)
    return f


def squarefree_level(gens: list[BelyiPoly], alpha: Fraction, n: int) -> bool:
    """Exact certificate that the level-n composite minus alpha has simple roots."""
    if n < 1:
        raise ValueError("need n >= 1")
    f = composite(gens, n) - PolyQ.const(Fraction(alpha))
    return poly_gcd(f, f.derivative()).degree == 0


@dataclass(frozen=True)
class ArborealTree:
    degree: int
    alpha: Fraction
    tol: float
    # per level: list of (re, im, parent index at previous level)
    levels: tuple[tuple[tuple[float, float, int], ...], ...]
    max_residual: float

    def leaves(self) -> int:
        return len(self.levels[-1])


def build_tree(gens: list[BelyiPoly], alpha, n: int, tol: float = 1e-9) -> ArborealTree:
    d = _check_gens(gens)
    alpha = Fraction(alpha)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if d**n > MAX_LEAVES:
        raise ValueError(f"refusing d^n = {d**n} > {MAX_LEAVES} leaves")
    if not genericity_check(gens, alpha):
        raise ValueError("alpha is not generic for the generators")
    for k in range(1, n + 1):
        if not squarefree_level(gens, alpha, k):
            raise ValueError(f"level {k} composite is not squarefree at alpha")

    levels = [((float(alpha), 0.0, -1),)]
    values = [np.array([complex(alpha)], dtype=np.complex128)]
    chain_rows: list[np.ndarray] = []
    max_residual = 0.0
    for k in range(1, n + 1):
        fk = _factor(gens, k).poly
        row = np.array([complex(c) for c in fk.coeffs], dtype=np.complex128)
        chain_rows.append(row)
        parents = values[k - 1]
        batch = np.tile(row, (len(parents), 1))
        batch[:, 0] -= parents
        roots = kernels.dk_batch(batch).reshape(-1)
        chain = np.vstack(chain_rows)
        roots = kernels.newton_chain(chain, roots, complex(alpha), iters=8)

        gap = kernels.min_pairwise_gap(roots)
        if gap <= 2 * tol:
            raise ValueError(f"tolerance collision at level {k}: min root gap {gap:.3e}")
        images = kernels.chain_values(row[None, :], roots)
        dist = np.abs(images[:, None] - parents[None, :])
        nearest = np.argmin(dist, axis=1)
        best = dist[np.arange(len(roots)), nearest]
        dist[np.arange(len(roots)), nearest] = np.inf
        second = dist.min(axis=1) if len(parents) > 1 else np.full(len(roots), np.inf)
        if np.any(best >= tol):
            raise ValueError(f"matching ambiguity at level {k}: image off by {best.max():.3e}")
        if np.any(second <= 10 * tol):
            raise ValueError(f"matching ambiguity at level {k}: parents too close")

        # group by parent, sort siblings by (re, im)
        order = []
        for pidx in range(len(parents)):
            sibs = [t for t in range(len(roots)) if nearest[t] == pidx]
            if len(sibs) != d:
                raise ValueError(f"matching ambiguity at level {k}: sibling group != {d}")
            sibs.sort(key=lambda t: (roots[t].real, roots[t].imag))
            order.extend(sibs)
        roots = roots[order]
        parent_of = np.repeat(np.arange(len(parents)), d)

        residuals = np.abs(kernels.chain_values(chain, roots) - complex(alpha))
        scale = tol * (1.0 + float(np.max(np.abs(roots))) ** d)
        if np.any(residuals > scale):
            raise ValueError(f"polish failed at level {k}: residual {residuals.max():.3e}")
        max_residual = max(max_residual, float(residuals.max()))
        values.append(roots)
        levels.append(tuple((float(r.real), float(r.imag), int(p)) for r, p in zip(roots, parent_of)))
    return ArborealTree(d, alpha, tol, tuple(levels), max_residual)


def tree_dot(t: ArborealTree) -> str:
    lines = ["digraph arboreal {", '  rankdir=BT;']
    for k, level in enumerate(t.levels):
        for idx, (re, im, parent) in enumerate(level):
            label = f"{re:.6g}{im:+.6g}i"
            lines.append(f'  n{k}_{idx} [label="{label}"];')
            if parent >= 0:
                lines.append(f"  n{k}_{idx} -> n{k - 1}_{parent};")
    lines.append("}")
    return "\n".join(lines)


def tree_json(t: ArborealTree) -> str:
    return json.dumps(
        {
            "degree": t.degree,
            "alpha": str(t.alpha),
            "tol": t.tol,
            "max_residual": t.max_residual,
            "levels": [
                [{"value": [re, im], "parent": parent} for re, im, parent in level]
                for level in t.levels
            ],
        }
    )
