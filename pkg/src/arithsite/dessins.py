"""Framed bicolored plane trees as permutation pairs.

A dessin on n edges is a pair of permutations of {0..n-1}: alpha gives the
counterclockwise order of edges around black vertices, beta around white
vertices.  Tree + polynomial type means #cycles(alpha) + #cycles(beta) = n+1
and alpha followed by beta is a single n-cycle.  The framing marks one black
vertex 0 and one white vertex 1 by naming an edge of each cycle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

Perm = tuple[int, ...]


def perm_cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for s in range(len(p)):
        if seen[s]:
            continue
        cyc = []
        e = s
        while not seen[e]:
            seen[e] = True
            cyc.append(e)
            e = p[e]
        out.append(tuple(cyc))
    return out


def _cycle_index(cycles: list[tuple[int, ...]], e: int) -> int:
    for k, c in enumerate(cycles):
        if e in c:
            return k
    raise ValueError(f"edge {e} out of range")


class Passport(NamedTuple):
    black: tuple[int, ...]
    white: tuple[int, ...]


def _parts(vals) -> tuple[int, ...]:
    return tuple(sorted(vals, reverse=True))


@dataclass(frozen=True)
class FramedDessin:
    n: int
    alpha: Perm
    beta: Perm
    frame_black: int
    frame_white: int


def validate(d: FramedDessin) -> None:
    n = d.n
    if n < 1:
        raise ValueError("dessin needs at least one edge")
    for p in (d.alpha, d.beta):
        if sorted(p) != list(range(n)):
            raise ValueError("not a permutation of the edges")
    if not (0 <= d.frame_black < n and 0 <= d.frame_white < n):
        raise ValueError("frame edge out of range")
    nb = len(perm_cycles(d.alpha))
    nw = len(perm_cycles(d.beta))
    if nb + nw != n + 1:
        raise ValueError("not a tree")
    prod = tuple(d.beta[d.alpha[e]] for e in range(n))
    if len(perm_cycles(prod)) != 1:
        raise ValueError("not of polynomial type")


def is_valid(d: FramedDessin) -> bool:
    try:
        validate(d)
        return True
    except ValueError:
        return False


def passport(d: FramedDessin) -> Passport:
    return Passport(
        _parts(len(c) for c in perm_cycles(d.alpha)),
        _parts(len(c) for c in perm_cycles(d.beta)),
    )


UNIT = FramedDessin(1, (0,), (0,), 0, 0)


def e_dessin(d: int, k: int) -> FramedDessin:
    """The star-of-stars tree: vertex 0 of valency d-k, vertex 1 of valency k+1.

    Edge 0 is the spine; edges 1..d-k-1 run from vertex 0 to white leaves and
    edges d-k..d-1 from vertex 1 to black leaves.
    """
    if d < 1 or not 0 <= k < d:
        raise ValueError(f"need 0 <= k < d, got d={d}, k={k}")
    alpha = list(range(d))
    beta = list(range(d))
    black_cycle = list(range(d - k))
    for t, e in enumerate(black_cycle):
        alpha[e] = black_cycle[(t + 1) % len(black_cycle)]
    white_cycle = [0] + list(range(d - k, d))
    for t, e in enumerate(white_cycle):
        beta[e] = white_cycle[(t + 1) % len(white_cycle)]
    return FramedDessin(d, tuple(alpha), tuple(beta), 0, 0)


# ---------------------------------------------------------------------------
# Anatomy: spine, head, body, tail
# ---------------------------------------------------------------------------


class Anatomy(NamedTuple):
    spine: tuple[int, ...]
    head: Passport
    body: Passport
    tail: Passport
    valency0: int
    valency1: int


def _vertex_maps(d: FramedDessin):
    bc = perm_cycles(d.alpha)
    wc = perm_cycles(d.beta)
    bv = [0] * d.n
    wv = [0] * d.n
    for k, c in enumerate(bc):
        for e in c:
            bv[e] = k
    for k, c in enumerate(wc):
        for e in c:
            wv[e] = k
    return bc, wc, bv, wv


def anatomy(d: FramedDessin) -> Anatomy:
    validate(d)
    bc, wc, bv, wv = _vertex_maps(d)
    v0 = ("b", bv[d.frame_black])
    v1 = ("w", wv[d.frame_white])

    def vertex_edges(v):
        return bc[v[1]] if v[0] == "b" else wc[v[1]]

    def other_end(v, e):
        return ("w", wv[e]) if v[0] == "b" else ("b", bv[e])

    # spine: unique path v0 -> v1
    parent = {v0: (None, None)}
    queue = [v0]
    while queue:
        v = queue.pop(0)
        if v == v1:
            break
        for e in vertex_edges(v):
            w = other_end(v, e)
            if w not in parent:
                parent[w] = (v, e)
                queue.append(w)
    spine = []
    v = v1
    while v != v0:
        pv, pe = parent[v]
        spine.append(pe)
        v = pv
    spine.reverse()
    spine_set = set(spine)
    spine_vertices = [v0]
    v = v0
    for e in spine:
        v = other_end(v, e)
        spine_vertices.append(v)

    # components of the forest obtained by deleting the spine edges
    comp: dict[tuple, int] = {}

    def fill(start, label):
        stack = [start]
        comp[start] = label
        while stack:
            v = stack.pop()
            for e in vertex_edges(v):
                if e in spine_set:
                    continue
                w = other_end(v, e)
                if w not in comp:
                    comp[w] = label
                    stack.append(w)

    for idx, sv in enumerate(spine_vertices):
        fill(sv, idx)

    def valencies(pred):
        blacks = []
        whites = []
        for v, label in comp.items():
            if not pred(v, label):
                continue
            (blacks if v[0] == "b" else whites).append(len(vertex_edges(v)))
        return Passport(_parts(blacks), _parts(whites))

    last = len(spine_vertices) - 1
    head = valencies(lambda v, lab: lab == 0 and v != v0)
    tail = valencies(lambda v, lab: lab == last and v != v1)
    body = valencies(lambda v, lab: 0 < lab < last)
    return Anatomy(tuple(spine), head, body, tail, len(vertex_edges(v0)), len(vertex_edges(v1)))


# ---------------------------------------------------------------------------
# Composition
# ---------------------------------------------------------------------------


def compose(t: FramedDessin, t2: FramedDessin) -> FramedDessin:
    """The dessin of the composed covering; t is outer, t2 inner.

    Edges are pairs (e, f), flattened as e*t2.n + f.  The black cyclic orders
    advance the inner coordinate exactly at t's spine edge at vertex 0, the
    white ones at t's spine edge at vertex 1; the framing comes from t2.
    """
    spine = anatomy(t).spine
    e0, e1 = spine[0], spine[-1]
    s2 = anatomy(t2).spine
    f0, f1 = s2[0], s2[-1]
    m = t2.n
    n = t.n * m
    alpha = [0] * n
    beta = [0] * n
    for e in range(t.n):
        for f in range(m):
            fa = t2.alpha[f] if e == e0 else f
            alpha[e * m + f] = t.alpha[e] * m + fa
            fb = t2.beta[f] if e == e1 else f
            beta[e * m + f] = t.beta[e] * m + fb
    out = FramedDessin(n, tuple(alpha), tuple(beta), e0 * m + f0, e1 * m + f1)
    validate(out)
    return out


def passport_compose_predict(anat: Anatomy, p2: Passport, d2: int) -> Passport:
    """Predicted passport of compose(T, T2) from T's anatomy and T2's passport."""
    black = list(anat.head.black + anat.body.black + anat.tail.black) * d2
    black += [anat.valency0 * part for part in p2.black]
    white = list(anat.head.white + anat.body.white + anat.tail.white) * d2
    white += [anat.valency1 * part for part in p2.white]
    return Passport(_parts(black), _parts(white))


# ---------------------------------------------------------------------------
# Automorphisms and monodromy
# ---------------------------------------------------------------------------


def automorphisms(d: FramedDessin) -> list[Perm]:
    """All edge permutations commuting with alpha and beta (identity included)."""
    validate(d)
    out = []
    for target in range(d.n):
        g = [-1] * d.n
        g[0] = target
        queue = [0]
        ok = True
        while queue and ok:
            e = queue.pop()
            for nxt, img in ((d.alpha[e], d.alpha[g[e]]), (d.beta[e], d.beta[g[e]])):
                if g[nxt] == -1:
                    g[nxt] = img
                    queue.append(nxt)
                elif g[nxt] != img:
                    ok = False
                    break
        if ok and sorted(g) == list(range(d.n)):
            out.append(tuple(g))
    return out


def monodromy_order(d: FramedDessin, cap: int = 100000) -> int | None:
    """|<alpha, beta>| by closure enumeration; None when the cap is exceeded."""
    validate(d)
    gens = [d.alpha, d.beta]
    ident = tuple(range(d.n))
    seen = {ident}
    queue = [ident]
    while queue:
        g = queue.pop()
        for h in gens:
            gh = tuple(h[g[e]] for e in range(d.n))
            if gh not in seen:
                if len(seen) >= cap:
                    return None
                seen.add(gh)
                queue.append(gh)
    return len(seen)


# ---------------------------------------------------------------------------
# Involution, canonical form, isomorphism
# ---------------------------------------------------------------------------


def involution(d: FramedDessin) -> FramedDessin:
    """Swap colours and the 0/1 marks; the 180-degree turn keeps orientations."""
    return FramedDessin(d.n, d.beta, d.alpha, d.frame_white, d.frame_black)


def _encode_from(d: FramedDessin, start: int):
    lab = [-1] * d.n
    lab[start] = 0
    order = [start]
    qi = 0
    while qi < len(order):
        e = order[qi]
        qi += 1
        for nxt in (d.alpha[e], d.beta[e]):
            if lab[nxt] == -1:
                lab[nxt] = len(order)
                order.append(nxt)
    a2 = [0] * d.n
    b2 = [0] * d.n
    for e in range(d.n):
        a2[lab[e]] = lab[d.alpha[e]]
        b2[lab[e]] = lab[d.beta[e]]
    return (tuple(a2), tuple(b2)), lab


def _framed_key(d: FramedDessin):
    bc = perm_cycles(d.alpha)
    black_cycle = bc[_cycle_index(bc, d.frame_black)]
    wc = perm_cycles(d.beta)
    white_cycle = wc[_cycle_index(wc, d.frame_white)]
    best = None
    for start in black_cycle:
        (a2, b2), lab = _encode_from(d, start)
        key = (a2, b2, min(lab[e] for e in white_cycle))
        if best is None or key < best:
            best = key
    return best


def _unframed_key(d: FramedDessin):
    return min(_encode_from(d, start)[0] for start in range(d.n))


def canonical_form(d: FramedDessin) -> FramedDessin:
    """Frame-anchored canonical relabeling; equal outputs mean framed isomorphism."""
    validate(d)
    a2, b2, wf = _framed_key(d)
    return FramedDessin(d.n, a2, b2, 0, wf)


def framed_iso(d1: FramedDessin, d2: FramedDessin) -> bool:
    validate(d1)
    validate(d2)
    return d1.n == d2.n and _framed_key(d1) == _framed_key(d2)


def combinatorial_equiv(d1: FramedDessin, d2: FramedDessin) -> bool:
    """Colour- and orientation-preserving equivalence, frames ignored."""
    validate(d1)
    validate(d2)
    return d1.n == d2.n and _unframed_key(d1) == _unframed_key(d2)


# ---------------------------------------------------------------------------
# Random trees (for property sweeps), JSON, DOT
# ---------------------------------------------------------------------------


def random_tree_dessin(n_edges: int, rng) -> FramedDessin:
    """Uniform-ish random framed plane tree grown edge by edge."""
    if n_edges < 1:
        raise ValueError("need at least one edge")
    black = [[0]]
    white = [[0]]
    for e in range(1, n_edges):
        if rng.random() < 0.5:
            v = black[rng.randrange(len(black))]
            v.insert(rng.randrange(len(v) + 1), e)
            white.append([e])
        else:
            v = white[rng.randrange(len(white))]
            v.insert(rng.randrange(len(v) + 1), e)
            black.append([e])
    alpha = [0] * n_edges
    beta = [0] * n_edges
    for cycles, perm in ((black, alpha), (white, beta)):
        for c in cycles:
            for t, e in enumerate(c):
                perm[e] = c[(t + 1) % len(c)]
    d = FramedDessin(
        n_edges,
        tuple(alpha),
        tuple(beta),
        black[rng.randrange(len(black))][0],
        white[rng.randrange(len(white))][0],
    )
    validate(d)
    return d


def to_json(d: FramedDessin) -> str:
    return json.dumps(
        {
            "n": d.n,
            "alpha": list(d.alpha),
            "beta": list(d.beta),
            "frame_black": d.frame_black,
            "frame_white": d.frame_white,
        }
    )


def from_json(text: str) -> FramedDessin:
    obj = json.loads(text)
    d = FramedDessin(
        int(obj["n"]),
        tuple(int(v) for v in obj["alpha"]),
        tuple(int(v) for v in obj["beta"]),
        int(obj["frame_black"]),
        int(obj["frame_white"]),
    )
    validate(d)
    return d


def to_dot(d: FramedDessin) -> str:
    validate(d)
    bc, wc, bv, wv = _vertex_maps(d)
    v0 = bv[d.frame_black]
    v1 = wv[d.frame_white]
    lines = ["graph dessin {"]
    for k in range(len(bc)):
        label = "0" if k == v0 else ""
        lines.append(
            f'  b{k} [shape=circle, style=filled, fillcolor=black, '
            f'fontcolor=white, label="{label}"];'
        )
    for k in range(len(wc)):
        label = "1" if k == v1 else ""
        lines.append(f'  w{k} [shape=circle, label="{label}"];')
    for e in range(d.n):
        lines.append(f'  b{bv[e]} -- w{wv[e]} [label="{e}"];')
    lines.append("}")
    return "\n".join(lines)
