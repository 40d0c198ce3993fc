"""Seeded random expressions for the rule-coherence checks.

All generators take a ``random.Random`` so runs are reproducible. The
decompositions they build are combinatorially consistent (strata partition
the space, covers restrict correctly); the engine trusts such assertions,
so the checks compare independent evaluation routes on the same data.
"""

from __future__ import annotations

import random

from .dsl import (
    Affine,
    ClosedOpenPair,
    DisjointUnion,
    Gm,
    MayerVietoris,
    Point,
    PointedQuotient,
    Product,
    Projective,
    PushoutCone,
    Smash,
    SpaceExpr,
    Stratified,
    TateTwist,
    ThomTrivial,
    Torus,
    TorusSlice,
)


def atom(rng: random.Random) -> SpaceExpr:
    """A small unpointed space with a known value."""
    k = rng.randrange(6)
    if k == 0:
        return Point()
    if k == 1:
        return Affine(rng.randrange(4))
    if k == 2:
        return Gm()
    if k == 3:
        return Torus(rng.randrange(1, 4))
    if k == 4:
        return Projective(rng.randrange(4))
    return TorusSlice(rng.randrange(3), Affine(rng.randrange(3)))


def cells(rng: random.Random, lo: int = 1, hi: int = 5) -> list[tuple[SpaceExpr, int]]:
    """Strata for a stratified space, ordered from closed to open."""
    n = rng.randint(lo, hi)
    out = [(atom(rng), rng.randrange(5)) for _ in range(n - 1)]
    out.append((atom(rng), 0))
    return out


def stratified(rng: random.Random) -> Stratified:
    return Stratified(tuple(cells(rng)))


def iterated_closed_open(s: Stratified) -> SpaceExpr:
    """Peel strata off one at a time, first stratum closed in the rest.

    X_k = strata k..n; X_k = ClosedOpenPair(X_k, X_{k+1}, S_k, c_k), bottoming
    out at the last (open) stratum.
    """
    strata = list(s.strata)
    if not strata:
        return s
    last, c = strata[-1]
    cur = last if c == 0 else ClosedOpenPair(Stratified(((last, c),)), Stratified(()), last, c)
    for k in range(len(strata) - 2, -1, -1):
        z, c = strata[k]
        cur = ClosedOpenPair(Stratified(tuple(strata[k:])), cur, z, c)
    return cur


def mv_cover(rng: random.Random):
    """A stratified X with open U and a two-set open cover.

    Returns (mv_expression, x, u) where x and u are the Stratified
    expressions of X and U, so chi(X/U) can also be read off directly.
    """
    strata = cells(rng, 1, 6)
    # 0: only in X1, 1: only in X2, 2: in both
    where = [rng.randrange(3) for _ in strata]
    in_u = [rng.random() < 0.5 for _ in strata]

    def pick(pred):
        return Stratified(tuple(s for s, w, u in zip(strata, where, in_u) if pred(w, u)))

    x = pick(lambda w, u: True)
    u = pick(lambda w, u: u)
    mv = MayerVietoris(
        pick(lambda w, u: w in (0, 2)),
        pick(lambda w, u: w in (1, 2)),
        pick(lambda w, u: w == 2),
        pick(lambda w, u: w in (0, 2) and u),
        pick(lambda w, u: w in (1, 2) and u),
        pick(lambda w, u: w == 2 and u),
    )
    return mv, x, u


def product_stratification(a: Stratified, b: Stratified) -> Stratified:
    """Strata S_i x T_j of codimension c_i + d_j."""
    return Stratified(tuple((Product(s, t), c + d) for s, c in a.strata for t, d in b.strata))


def unpointed(rng: random.Random, depth: int = 3) -> SpaceExpr:
    if depth <= 0:
        return atom(rng)
    k = rng.randrange(6)
    if k == 0:
        return atom(rng)
    if k == 1:
        return Product(unpointed(rng, depth - 1), unpointed(rng, depth - 1))
    if k == 2:
        return DisjointUnion(unpointed(rng, depth - 1), unpointed(rng, depth - 1))
    if k == 3:
        return Stratified(tuple((unpointed(rng, depth - 1), rng.randrange(4)) for _ in range(rng.randint(1, 3))))
    if k == 4:
        z = unpointed(rng, depth - 1)
        return ClosedOpenPair(atom(rng), unpointed(rng, depth - 1), z, rng.randrange(4))
    return TorusSlice(rng.randrange(3), unpointed(rng, depth - 1))


def pointed(rng: random.Random, depth: int = 3) -> SpaceExpr:
    k = rng.randrange(5)
    if k == 0 or depth <= 0:
        return TateTwist() if k % 2 == 0 else ThomTrivial(rng.randrange(4), atom(rng))
    if k == 1:
        return Smash(pointed(rng, depth - 1), pointed(rng, depth - 1))
    if k == 2:
        return PointedQuotient(atom(rng), atom(rng), unpointed(rng, depth - 1), rng.randrange(4))
    if k == 3:
        return PushoutCone(unpointed(rng, depth - 1), unpointed(rng, depth - 1))
    return mv_cover(rng)[0]


def any_expr(rng: random.Random, depth: int = 3) -> SpaceExpr:
    return pointed(rng, depth) if rng.random() < 0.4 else unpointed(rng, depth)
