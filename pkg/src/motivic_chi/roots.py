"""Root systems, Weyl group enumeration and Bruhat-cell Euler characteristics.

Weyl groups are generated as integer matrices (the simple reflections acting
on the root lattice in the basis of simple roots) by breadth-first search
from the identity, so the BFS depth of an element is its Coxeter length.
Enumeration is capped at |W| <= 60000, which admits A1-A7, B2-B6, C2-C6,
D3-D6, G2, F4 and E6.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .dsl import CartanType
from .gw import FieldModel, GwElement, GwValue, gw_pow_twist, normal_form

__all__ = [
    "ORDER_CAP",
    "RootSystem",
    "SUPPORTED_TYPES",
    "UnsupportedCartanType",
    "WeylData",
    "build_root_system",
    "check_supported",
    "chi_flag",
    "chi_g_mod_normalizer",
    "chi_g_mod_t",
    "weyl_enumerate",
]

ORDER_CAP = 60_000

SUPPORTED_TYPES: tuple[CartanType, ...] = (
    *(CartanType("A", n) for n in range(1, 8)),
    *(CartanType("B", n) for n in range(2, 7)),
    *(CartanType("C", n) for n in range(2, 7)),
    *(CartanType("D", n) for n in range(3, 7)),
    CartanType("G", 2),
    CartanType("F", 4),
    CartanType("E", 6),
)


class UnsupportedCartanType(ValueError):
    pass


def check_supported(ct: CartanType) -> None:
    problems = ct.problems()
    if problems:
        raise UnsupportedCartanType(problems[0])
    if ct not in SUPPORTED_TYPES:
        raise UnsupportedCartanType(f"{ct} exceeds the Weyl enumeration cap |W| <= {ORDER_CAP}")


def _e(i, n, scale=1):
    v = [0] * n
    v[i] = scale
    return v


def _simple_roots(ct: CartanType) -> list[list[int]]:
    # Bourbaki numbering; F4 and E6 are scaled by 2 to stay integral, which
    # leaves every Cartan integer unchanged
    f, n = ct.family, ct.rank
    if f == "A":
        return [[a - b for a, b in zip(_e(i, n + 1), _e(i + 1, n + 1))] for i in range(n)]
    chain = [[a - b for a, b in zip(_e(i, n), _e(i + 1, n))] for i in range(n - 1)]
    if f == "B":
        return chain + [_e(n - 1, n)]
    if f == "C":
        return chain + [_e(n - 1, n, 2)]
    if f == "D":
        return chain + [[a + b for a, b in zip(_e(n - 2, n), _e(n - 1, n))]]
    if f == "G":
        return [[1, -1, 0], [-2, 1, 1]]
    if f == "F":
        return [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]]
    if f == "E" and n == 6:
        return [
            [1, -1, -1, -1, -1, -1, -1, 1],
            [2, 2, 0, 0, 0, 0, 0, 0],
            [-2, 2, 0, 0, 0, 0, 0, 0],
            [0, -2, 2, 0, 0, 0, 0, 0],
            [0, 0, -2, 2, 0, 0, 0, 0],
            [0, 0, 0, -2, 2, 0, 0, 0],
        ]
    raise UnsupportedCartanType(f"no realization for {ct}")


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanType
    simple_roots: tuple[tuple[int, ...], ...]
    cartan_matrix: np.ndarray
    positive_roots: tuple[tuple[int, ...], ...]  # in the simple-root basis

    @property
    def positive_root_count(self) -> int:
        return len(self.positive_roots)

    @property
    def dimension_flag(self) -> int:
        """dim G/B, the number of positive roots."""
        return len(self.positive_roots)

    def reflections(self) -> list[np.ndarray]:
        """Simple reflections s_i as integer matrices on simple-root coordinates.

        s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i.
        """
        n = self.cartan.rank
        gens = []
        for i in range(n):
            s = np.eye(n, dtype=np.int64)
            s[i, :] -= self.cartan_matrix[:, i]
            gens.append(s)
        return gens


@lru_cache(maxsize=None)
def build_root_system(ct: CartanType) -> RootSystem:
    check_supported(ct)
    simple = np.array(_simple_roots(ct), dtype=np.int64)
    gram = simple @ simple.T
    # A[i, j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j); column j holds
    # the pairings with the coroot alpha_j^vee
    cm = 2 * gram // np.diag(gram)[None, :]
    assert np.array_equal(cm * np.diag(gram)[None, :], 2 * gram)
    rs = RootSystem(ct, tuple(map(tuple, simple.tolist())), cm, ())
    gens = rs.reflections()

    # orbit of the simple roots under the simple reflections
    seen = {tuple(r) for r in np.eye(ct.rank, dtype=np.int64).tolist()}
    frontier = list(seen)
    while frontier:
        nxt = []
        for r in frontier:
            v = np.array(r, dtype=np.int64)
            for s in gens:
                w = tuple((s @ v).tolist())
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    positive = tuple(sorted(r for r in seen if all(c >= 0 for c in r)))
    assert 2 * len(positive) == len(seen)
    return RootSystem(ct, rs.simple_roots, cm, positive)


@dataclass(frozen=True)
class WeylData:
    cartan: CartanType
    order: int
    length_counts: tuple[int, ...]  # indexed by length 0..N

    @property
    def longest_length(self) -> int:
        return len(self.length_counts) - 1

    def to_json(self) -> list[int]:
        return list(self.length_counts)


@lru_cache(maxsize=None)
def _enumerate(ct: CartanType) -> WeylData:
    rs = build_root_system(ct)
    n = ct.rank
    gens = rs.reflections()
    ident = np.eye(n, dtype=np.int64)
    seen = {ident.tobytes()}
    frontier = [ident]
    counts = [1]
    while frontier:
        if len(seen) > ORDER_CAP:
            raise UnsupportedCartanType(f"{ct}: Weyl group exceeds {ORDER_CAP} elements")
        stack = np.stack(frontier)
        nxt = []
        for s in gens:
            for w in s @ stack:
                key = w.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(w)
        if nxt:
            counts.append(len(nxt))
        frontier = nxt
    return WeylData(ct, len(seen), tuple(counts))


def weyl_enumerate(rs: RootSystem | CartanType) -> WeylData:
    ct = rs.cartan if isinstance(rs, RootSystem) else rs
    check_supported(ct)
    return _enumerate(ct)


def chi_flag(ct: CartanType, m: FieldModel) -> GwValue:
    """Sum over Bruhat cells: each w gives an affine cell of codimension N - l(w)."""
    wd = weyl_enumerate(ct)
    N = wd.longest_length
    total = normal_form(0, 0, m)
    for length, count in enumerate(wd.length_counts):
        total = total + count * gw_pow_twist(N - length, m)
    return GwValue(total)


def chi_g_mod_t(ct: CartanType, m: FieldModel) -> GwValue:
    """G/T -> G/B has affine-space fibres B/T = A^N, so the value is chi_flag."""
    return chi_flag(ct, m)


def chi_g_mod_normalizer(ct: CartanType, m: FieldModel) -> GwValue:
    """Localize to the single T-fixed point eN(T) of G/N(T).

    Exact 1 when <-1> = <1>. Otherwise only the congruence class of 1 mod
    (1 - <-1>) is determined; that class has rank 1 and the value is a unit.
    """
    check_supported(ct)
    one: GwElement = normal_form(1, 0, m)
    if m.has_sqrt_minus_one:
        return GwValue(one)
    return GwValue.congruence(one, unit_known=True)
