"""Rewrite-based evaluation of motivic Euler characteristics.

Each node kind of the DSL has exactly one applicable rule, so evaluation is
structural recursion. Every rule is a pure function of its parameters and
its children's values, which is what :func:`replay` re-runs to check a
:class:`Derivation` bottom-up.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

from . import dsl
from .dsl import SpaceExpr, pretty_print, validate
from .gw import FieldModel, GwValue, gw_pow_twist, normal_form
from .roots import check_supported, weyl_enumerate

__all__ = [
    "CITATIONS",
    "Derivation",
    "DerivationMismatch",
    "ValidationError",
    "eval_chi",
    "evaluate",
    "replay",
    "verify_derivation",
]


class ValidationError(ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(map(str, self.diagnostics)))


class DerivationMismatch(AssertionError):
    pass


CITATIONS: dict[str, str] = {
    "atom_affine": "A1-contractibility: chi(A^n) = chi(pt) = 1",
    "atom_gm_torus": "split torus of rank n: chi(T) = (1 - <-1>)^n",
    "tate": "trace of the Tate sphere T = (P^1, infinity) is <-1>",
    "product_smash": "multiplicativity of the pre-transfer and trace",
    "disjoint": "additivity for a pushout with empty intersection",
    "closed_open": "closed/open additivity: chi(X) = chi(U) + <-1>^c chi(Z), chi(X/U) = chi(Th N) = <-1>^c chi(Z)",
    "stratified": "additivity over a stratification: chi(X) = sum <-1>^c_a chi(S_a)",
    "mv": "Mayer-Vietoris for the trace of X/U over an open cover",
    "pushout_cone": "additivity for a cofiber sequence: chi(cone) = chi(F1) - chi(F3)",
    "torus_slice": "torus slice decomposition (T/Gamma) x Y with multiplicativity",
    "torus_fixed": "torus localization: chi(X) - chi(X^T) lies in the ideal (1 - <-1>)",
    "projective": "stratification of P^n into affine cells",
    "flag": "stratification of G/B into Bruhat cells A^l(w)",
    "g_mod_t": "G/T -> G/B is an affine-space bundle with fibre B/T = A^N",
    "g_mod_normalizer": "G/N(T) has a single T-fixed point; localize to it",
}


@dataclass(frozen=True)
class Derivation:
    rule: str
    citation: str
    expr: str
    value: GwValue
    children: tuple[Derivation, ...] = ()
    params: tuple[int, ...] = ()
    assumptions: tuple[str, ...] = ()

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def to_json(self) -> dict:
        d = {
            "rule": self.rule,
            "citation": self.citation,
            "expr": self.expr,
            "value": self.value.to_json(),
        }
        if self.params:
            d["params"] = list(self.params)
        if self.assumptions:
            d["assumptions"] = list(self.assumptions)
        d["children"] = [c.to_json() for c in self.children]
        return d

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)

    @classmethod
    def from_json(cls, obj) -> Derivation:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            rule=obj["rule"],
            citation=obj["citation"],
            expr=obj["expr"],
            value=GwValue.from_json(obj["value"]),
            children=tuple(cls.from_json(c) for c in obj.get("children", [])),
            params=tuple(obj.get("params", ())),
            assumptions=tuple(obj.get("assumptions", ())),
        )

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}{self.expr} = {self.value}   [{self.rule}: {self.citation}]"]
        for a in self.assumptions:
            lines.append(f"{pad}  assuming: {a}")
        for c in self.children:
            lines.append(c.render(indent + 1))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# rule arithmetic, shared by evaluation and replay

Combine = Callable[[Sequence[int], Sequence[GwValue], FieldModel], GwValue]


def _one(m):
    return normal_form(1, 0, m)


def _torus_value(n, m):
    return normal_form(1, -1, m) ** n


def _stratified(params, vals, m):
    total = GwValue(normal_form(0, 0, m))
    for c, v in zip(params, vals):
        total = total + gw_pow_twist(c, m) * v
    return total


def _closed_open(params, vals, m):
    (c,) = params
    if len(vals) == 2:
        u, z = vals
        return u + gw_pow_twist(c, m) * z
    (z,) = vals
    return gw_pow_twist(c, m) * z


def _mv(params, vals, m):
    x1, u1, x2, u2, x12, u12 = vals
    return (x1 - u1) + (x2 - u2) - (x12 - u12)


def _torus_fixed(params, vals, m):
    (v,) = vals
    if m.has_sqrt_minus_one:
        return v
    return GwValue.congruence(v.representative)


def _flag(params, vals, m):
    N, counts = params[0], params[1:]
    total = GwValue(normal_form(0, 0, m))
    for length, (count, v) in enumerate(zip(counts, vals)):
        total = total + count * gw_pow_twist(N - length, m) * v
    return total


def _g_mod_normalizer(params, vals, m):
    (v,) = vals
    if m.has_sqrt_minus_one or not v.representative == _one(m):
        return v
    # rank 1, so a unit: the fundamental ideal is nilpotent away from real
    # fields, and over real-closed fields the signature is 1 as well
    return GwValue.congruence(v.representative, unit_known=True)


ATOM_RULES = ("atom_affine", "atom_gm_torus", "tate")

RULES: dict[str, Combine] = {
    "atom_affine": lambda p, v, m: GwValue(_one(m)),
    "atom_gm_torus": lambda p, v, m: GwValue(_torus_value(p[0], m)),
    "tate": lambda p, v, m: GwValue(gw_pow_twist(1, m)),
    "product_smash": lambda p, v, m: v[0] * v[1],
    "disjoint": lambda p, v, m: v[0] + v[1],
    "closed_open": _closed_open,
    "stratified": _stratified,
    "mv": _mv,
    "pushout_cone": lambda p, v, m: v[0] - v[1],
    "torus_slice": lambda p, v, m: GwValue(_torus_value(p[0], m)) * v[0],
    "torus_fixed": _torus_fixed,
    "projective": lambda p, v, m: v[0],
    "flag": _flag,
    "g_mod_t": lambda p, v, m: v[0],
    "g_mod_normalizer": _g_mod_normalizer,
}


def _node(rule, expr, m, children=(), params=(), assumptions=()) -> Derivation:
    children = tuple(children)
    params = tuple(params)
    value = RULES[rule](params, [c.value for c in children], m)
    text = expr if isinstance(expr, str) else pretty_print(expr)
    return Derivation(rule, CITATIONS[rule], text, value, children, params, tuple(assumptions))


# ---------------------------------------------------------------------------
# evaluation


def eval_chi(e: SpaceExpr, m: FieldModel) -> tuple[GwValue, Derivation]:
    """chi_mot of ``e`` in model ``m`` together with its derivation tree.

    For a pointed expression P this is the trace of P; for an unpointed X it
    is the trace of X_+.
    """
    diags = validate(e)
    if diags:
        raise ValidationError(diags)
    d = _eval(e, m)
    return d.value, d


def evaluate(text: str, m: FieldModel) -> GwValue:
    return eval_chi(dsl.parse(text), m)[0]


def _eval(e: SpaceExpr, m: FieldModel) -> Derivation:
    if isinstance(e, dsl.Point):
        return _node("atom_affine", e, m, params=(0,))
    if isinstance(e, dsl.Affine):
        return _node("atom_affine", e, m, params=(e.n,))
    if isinstance(e, dsl.Gm):
        return _node("atom_gm_torus", e, m, params=(1,))
    if isinstance(e, dsl.Torus):
        return _node("atom_gm_torus", e, m, params=(e.n,))
    if isinstance(e, dsl.TateTwist):
        return _node("tate", e, m)
    if isinstance(e, (dsl.Product, dsl.Smash)):
        return _node("product_smash", e, m, [_eval(e.left, m), _eval(e.right, m)])
    if isinstance(e, dsl.DisjointUnion):
        return _node("disjoint", e, m, [_eval(e.left, m), _eval(e.right, m)])
    if isinstance(e, dsl.ClosedOpenPair):
        return _node(
            "closed_open", e, m, [_eval(e.u, m), _eval(e.z, m)], (e.codim,),
            [f"{pretty_print(e.z)} is closed in {pretty_print(e.x)} with open complement "
             f"{pretty_print(e.u)} and trivial normal bundle of rank {e.codim}"],
        )
    if isinstance(e, dsl.PointedQuotient):
        return _node(
            "closed_open", e, m, [_eval(e.z, m)], (e.codim,),
            [f"X/U is the Thom space of a trivial rank-{e.codim} bundle over {pretty_print(e.z)}"],
        )
    if isinstance(e, dsl.ThomTrivial):
        return _node("closed_open", e, m, [_eval(e.z, m)], (e.codim,))
    if isinstance(e, dsl.Stratified):
        return _node(
            "stratified", e, m, [_eval(s, m) for s, _ in e.strata], [c for _, c in e.strata],
            ["strata are smooth, locally closed and partition X"] if e.strata else [],
        )
    if isinstance(e, dsl.MayerVietoris):
        kids = [e.x1, e.u1, e.x2, e.u2, e.x12, e.u12]
        return _node(
            "mv", e, m, [_eval(k, m) for k in kids],
            assumptions=["X1, X2 form a Zariski open cover of X and U_i = U n X_i"],
        )
    if isinstance(e, dsl.PushoutCone):
        return _node("pushout_cone", e, m, [_eval(e.f1, m), _eval(e.f3, m)])
    if isinstance(e, dsl.TorusSlice):
        return _node("torus_slice", e, m, [_eval(e.y, m)], (e.corank,))
    if isinstance(e, dsl.TorusFixed):
        return _node(
            "torus_fixed", e, m, [_eval(e.fixed, m)],
            assumptions=[f"{pretty_print(e.fixed)} is the fixed locus of a split torus acting on {pretty_print(e.x)}"],
        )
    if isinstance(e, dsl.Projective):
        cells = dsl.Stratified(tuple((dsl.Affine(i), e.n - i) for i in range(e.n, -1, -1)))
        return _node("projective", e, m, [_eval(cells, m)])
    if isinstance(e, dsl.Flag):
        return _flag_node(e.cartan, m, e)
    if isinstance(e, dsl.GModT):
        return _node(
            "g_mod_t", e, m, [_flag_node(e.cartan, m)],
            assumptions=["G/T -> G/B is Zariski-locally trivial with fibre B/T = A^N"],
        )
    if isinstance(e, dsl.GModN):
        return _g_mod_n_node(e, m)
    raise TypeError(f"no rule for {type(e).__name__}")


def _flag_node(ct, m, expr=None) -> Derivation:
    wd = weyl_enumerate(ct)
    N = wd.longest_length
    cells = [_node("atom_affine", dsl.Affine(length), m, params=(length,)) for length in range(N + 1)]
    return _node(
        "flag", expr or dsl.Flag(ct), m, cells, (N, *wd.length_counts),
        [f"Bruhat cells of {ct}: {wd.order} cells, length counts {list(wd.length_counts)}"],
    )


def _g_mod_n_node(e: dsl.GModN, m) -> Derivation:
    check_supported(e.cartan)
    point = _eval(dsl.Point(), m)
    fixed = _node(
        "torus_fixed", dsl.TorusFixed(e, dsl.Point()), m, [point],
        assumptions=["(G/N(T))^T = {eN(T)} = Spec k"],
    )
    return _node(
        "g_mod_normalizer", e, m, [fixed],
        assumptions=[
            "G/N_G(T) = G0/N_G0(T): every conjugate of T lies in the identity component",
            "G/N_G(T) = G_red/N(T) after quotienting by the unipotent radical",
            "T acts on G/N(T) by left translation",
        ],
    )


# ---------------------------------------------------------------------------
# replay


def replay(d: Derivation, m: FieldModel | None = None) -> GwValue:
    """Recompute ``d``'s value bottom-up from its leaves, ignoring stored values."""
    m = m or d.value.model
    vals = [replay(c, m) for c in d.children]
    return RULES[d.rule](d.params, vals, m)


def verify_derivation(d: Derivation, m: FieldModel | None = None) -> GwValue:
    """Replay and check every node against its stored value; raise on mismatch."""
    m = m or d.value.model
    vals = [verify_derivation(c, m) for c in d.children]
    if d.rule not in RULES:
        raise DerivationMismatch(f"unknown rule {d.rule!r} at {d.expr}")
    # the empty stratification (the empty scheme) is the one non-atom leaf
    empty = d.rule == "stratified" and not d.params
    if not d.children and d.rule not in ATOM_RULES and not empty:
        raise DerivationMismatch(f"leaf {d.expr} is not an atom rule")
    v = RULES[d.rule](d.params, vals, m)
    if v != d.value:
        raise DerivationMismatch(f"{d.expr}: stored {d.value}, replayed {v}")
    return v
