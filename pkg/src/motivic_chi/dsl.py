"""Expression language for motivic spaces and their decompositions.

Grammar (whitespace-insensitive, ``#`` starts a line comment)::

    expr  := IDENT | IDENT "(" args ")" | "Stratified" "[" [pair ("," pair)*] "]"
    args  := arg ("," arg)*
    arg   := expr | INT | FAMILY
    pair  := "(" expr "," INT ")"

Integers are non-negative; a leading minus sign is a syntax error. Nodes are
immutable and compare structurally, so ``parse(pretty_print(e)) == e``.

Pointed nodes: TateTwist, Smash, PointedQuotient, ThomTrivial,
MayerVietoris, PushoutCone. Everything else is an unpointed scheme.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, fields
from typing import ClassVar, Iterator

__all__ = [
    "Affine",
    "ArityError",
    "CartanType",
    "ClosedOpenPair",
    "Diagnostic",
    "DisjointUnion",
    "DslError",
    "Flag",
    "GModN",
    "GModT",
    "Gm",
    "MayerVietoris",
    "Point",
    "PointedQuotient",
    "Product",
    "Projective",
    "PushoutCone",
    "Smash",
    "SpaceExpr",
    "Stratified",
    "TateTwist",
    "ThomTrivial",
    "Torus",
    "TorusFixed",
    "TorusSlice",
    "UnknownConstructorError",
    "parse",
    "parse_file",
    "pretty_print",
    "validate",
]

FAMILIES = "ABCDEFG"


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> CartanType:
        """Parse ``"A,2"`` (also accepts ``"A2"``)."""
        m = re.fullmatch(r"\s*([A-G])\s*,?\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"bad Cartan type {text!r}; expected e.g. 'A,2'")
        return cls(m.group(1), int(m.group(2)))

    def problems(self) -> list[str]:
        f, n = self.family, self.rank
        if f not in FAMILIES:
            return [f"unknown Cartan family {f!r}"]
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "G": n == 2,
            "F": n == 4,
            "E": n == 6,
        }[f]
        return [] if ok else [f"invalid Cartan type {f}{n}"]


# ---------------------------------------------------------------------------
# AST


class SpaceExpr:
    """Base class of all AST nodes."""

    pointed: ClassVar[bool] = False
    # argument kinds, in order: "expr", "int" or "cartan"
    signature: ClassVar[tuple[str, ...]] = ()

    def args(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))

    def children(self) -> Iterator[SpaceExpr]:
        for a in self.args():
            if isinstance(a, SpaceExpr):
                yield a

    def __str__(self):
        return pretty_print(self)


@dataclass(frozen=True)
class Point(SpaceExpr):
    pass


@dataclass(frozen=True)
class Gm(SpaceExpr):
    pass


@dataclass(frozen=True)
class TateTwist(SpaceExpr):
    """P^1 pointed at infinity."""

    pointed: ClassVar[bool] = True


@dataclass(frozen=True)
class Affine(SpaceExpr):
    n: int
    signature = ("int",)


@dataclass(frozen=True)
class Torus(SpaceExpr):
    n: int
    signature = ("int",)


@dataclass(frozen=True)
class Projective(SpaceExpr):
    n: int
    signature = ("int",)


@dataclass(frozen=True)
class Product(SpaceExpr):
    left: SpaceExpr
    right: SpaceExpr
    signature = ("expr", "expr")


@dataclass(frozen=True)
class Smash(SpaceExpr):
    left: SpaceExpr
    right: SpaceExpr
    pointed: ClassVar[bool] = True
    signature = ("expr", "expr")


@dataclass(frozen=True)
class DisjointUnion(SpaceExpr):
    left: SpaceExpr
    right: SpaceExpr
    signature = ("expr", "expr")


@dataclass(frozen=True)
class Stratified(SpaceExpr):
    """X as a disjoint union of locally closed strata with codimensions."""

    strata: tuple[tuple[SpaceExpr, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple((s, c) for s, c in self.strata))

    def children(self):
        for s, _ in self.strata:
            yield s


@dataclass(frozen=True)
class ClosedOpenPair(SpaceExpr):
    """X with closed Z of codimension c (trivial normal bundle) and open complement U."""

    x: SpaceExpr
    u: SpaceExpr
    z: SpaceExpr
    codim: int
    signature = ("expr", "expr", "expr", "int")


@dataclass(frozen=True)
class PointedQuotient(SpaceExpr):
    """X/U for the same closed/open data as ClosedOpenPair."""

    x: SpaceExpr
    u: SpaceExpr
    z: SpaceExpr
    codim: int
    pointed: ClassVar[bool] = True
    signature = ("expr", "expr", "expr", "int")


@dataclass(frozen=True)
class ThomTrivial(SpaceExpr):
    """T^c smash Z_+, the Thom space of a trivial rank-c bundle over Z."""

    codim: int
    z: SpaceExpr
    pointed: ClassVar[bool] = True
    signature = ("int", "expr")


@dataclass(frozen=True)
class MayerVietoris(SpaceExpr):
    """X/U for an open cover X = X1 u X2 with U_i = U n X_i."""

    x1: SpaceExpr
    x2: SpaceExpr
    x12: SpaceExpr
    u1: SpaceExpr
    u2: SpaceExpr
    u12: SpaceExpr
    pointed: ClassVar[bool] = True
    signature = ("expr",) * 6


@dataclass(frozen=True)
class PushoutCone(SpaceExpr):
    """Cone of F3 -> F1."""

    f1: SpaceExpr
    f3: SpaceExpr
    pointed: ClassVar[bool] = True
    signature = ("expr", "expr")


@dataclass(frozen=True)
class TorusFixed(SpaceExpr):
    """X with a split torus action whose fixed locus is ``fixed``."""

    x: SpaceExpr
    fixed: SpaceExpr
    signature = ("expr", "expr")


@dataclass(frozen=True)
class TorusSlice(SpaceExpr):
    """(T/Gamma) x Y with T/Gamma a split torus of rank ``corank``."""

    corank: int
    y: SpaceExpr
    signature = ("int", "expr")


@dataclass(frozen=True)
class Flag(SpaceExpr):
    cartan: CartanType
    signature = ("cartan",)


@dataclass(frozen=True)
class GModT(SpaceExpr):
    cartan: CartanType
    signature = ("cartan",)


@dataclass(frozen=True)
class GModN(SpaceExpr):
    cartan: CartanType
    signature = ("cartan",)


CONSTRUCTORS: dict[str, type[SpaceExpr]] = {
    cls.__name__: cls
    for cls in (
        Point, Gm, TateTwist, Affine, Torus, Projective, Product, Smash,
        DisjointUnion, Stratified, ClosedOpenPair, PointedQuotient, ThomTrivial,
        MayerVietoris, PushoutCone, TorusFixed, TorusSlice, Flag, GModT, GModN,
    )
}


# ---------------------------------------------------------------------------
# parsing


class DslError(ValueError):
    """Syntax error in an expression, with a 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class ArityError(DslError):
    pass


class UnknownConstructorError(DslError):
    pass


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>#[^\n]*)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<int>[0-9]+)|(?P<punct>[()\[\],])"
)

MAX_DEPTH = 200


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks, pos, line, line_start = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise DslError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        for i, ch in enumerate(m.group()):
            if ch == "\n":
                line, line_start = line + 1, pos + i + 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def _fail(self, msg, tok=None, cls=DslError):
        tok = tok or self.tok
        raise cls(msg, tok.line, tok.col)

    def expect(self, text):
        if self.tok.text != text or self.tok.kind == "eof":
            found = "end of input" if self.tok.kind == "eof" else repr(self.tok.text)
            self._fail(f"expected {text!r}, found {found}")
        self.i += 1

    def integer(self) -> int:
        if self.tok.kind != "int":
            self._fail("expected a non-negative integer")
        v = int(self.tok.text)
        self.i += 1
        return v

    def expr(self, depth=0) -> SpaceExpr:
        if depth > MAX_DEPTH:
            self._fail("expression nested too deeply")
        tok = self.tok
        if tok.kind != "ident":
            self._fail("expected a constructor name")
        cls = CONSTRUCTORS.get(tok.text)
        if cls is None:
            self._fail(f"unknown constructor {tok.text!r}", cls=UnknownConstructorError)
        self.i += 1
        if cls is Stratified:
            return self.stratified(depth)
        sig = cls.signature
        if self.tok.text != "(":
            if sig:
                self._fail(f"{cls.__name__} takes {len(sig)} argument(s), got 0", tok, ArityError)
            return cls()
        self.i += 1
        raw = []
        if self.tok.text != ")":
            raw.append(self.arg(depth))
            while self.tok.text == ",":
                self.i += 1
                raw.append(self.arg(depth))
        self.expect(")")
        if cls in (Flag, GModT, GModN) and len(raw) == 2:
            fam, rk = raw
            if fam[0] != "name" or rk[0] != "int":
                self._fail(f"{cls.__name__} expects a Cartan type like (A, 2)", tok)
            if fam[1] not in FAMILIES:
                self._fail(f"unknown Cartan family {fam[1]!r}", fam[2])
            return cls(CartanType(fam[1], rk[1]))
        if len(raw) != len(sig):
            n = 2 if sig == ("cartan",) else len(sig)
            self._fail(f"{cls.__name__} takes {n} argument(s), got {len(raw)}", tok, ArityError)
        args = []
        for (kind, val, at), want in zip(raw, sig):
            if want == "int" and kind != "int":
                self._fail("expected a non-negative integer", at)
            if want == "expr" and kind == "int":
                self._fail("expected an expression, found an integer", at)
            if want == "expr" and kind == "name":
                self._fail(f"unknown constructor {val!r}", at, UnknownConstructorError)
            args.append(val)
        return cls(*args)

    def arg(self, depth):
        tok = self.tok
        if tok.kind == "int":
            return ("int", self.integer(), tok)
        if tok.kind == "ident" and tok.text not in CONSTRUCTORS:
            self.i += 1
            if self.tok.text in ("(", "["):
                self._fail(f"unknown constructor {tok.text!r}", tok, UnknownConstructorError)
            return ("name", tok.text, tok)
        return ("expr", self.expr(depth + 1), tok)

    def stratified(self, depth) -> Stratified:
        self.expect("[")
        strata = []
        if self.tok.text != "]":
            strata.append(self.pair(depth))
            while self.tok.text == ",":
                self.i += 1
                strata.append(self.pair(depth))
        self.expect("]")
        return Stratified(tuple(strata))

    def pair(self, depth):
        self.expect("(")
        s = self.expr(depth + 1)
        self.expect(",")
        c = self.integer()
        self.expect(")")
        return (s, c)


def parse(text: str) -> SpaceExpr:
    """Parse one expression; raises :class:`DslError` with a position on failure."""
    p = _Parser(text)
    e = p.expr()
    if p.tok.kind != "eof":
        p._fail(f"unexpected {p.tok.text!r} after expression")
    return e


def parse_file(path) -> SpaceExpr:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------------------
# printing


def pretty_print(e: SpaceExpr) -> str:
    name = type(e).__name__
    if isinstance(e, Stratified):
        inner = ", ".join(f"({pretty_print(s)}, {c})" for s, c in e.strata)
        return f"Stratified[{inner}]"
    if not e.signature:
        return name
    parts = []
    for a in e.args():
        if isinstance(a, SpaceExpr):
            parts.append(pretty_print(a))
        elif isinstance(a, CartanType):
            parts.extend([a.family, str(a.rank)])
        else:
            parts.append(str(a))
    return f"{name}({', '.join(parts)})"


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Diagnostic:
    path: str
    message: str

    def __str__(self):
        return f"{self.path}: {self.message}" if self.path else self.message


def validate(e: SpaceExpr) -> list[Diagnostic]:
    """Shape checks: pointedness, codimensions, Cartan types. Empty list means valid."""
    out: list[Diagnostic] = []
    _validate(e, type(e).__name__, out)
    return out


def _need(e, kids, pointed, path, out):
    name = type(e).__name__
    if any(k is None for k in kids):
        out.append(Diagnostic(path, f"{name} requires all {len(kids)} slots"))
        return
    if any(not isinstance(k, SpaceExpr) or k.pointed != pointed for k in kids):
        which = "pointed" if pointed else "unpointed"
        out.append(Diagnostic(path, f"{name} requires {which} children"))


def _nonneg(value, what, path, out):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        out.append(Diagnostic(path, f"{what} must be a non-negative integer, got {value!r}"))


def _validate(e, path, out):
    if not isinstance(e, SpaceExpr):
        out.append(Diagnostic(path, f"not an expression: {e!r}"))
        return
    if isinstance(e, (Affine, Projective)):
        _nonneg(e.n, "dimension", path, out)
    elif isinstance(e, Torus):
        if not isinstance(e.n, int) or e.n < 1:
            out.append(Diagnostic(path, f"torus rank must be positive, got {e.n!r}"))
    elif isinstance(e, (Product, DisjointUnion)):
        _need(e, [e.left, e.right], False, path, out)
    elif isinstance(e, Smash):
        _need(e, [e.left, e.right], True, path, out)
    elif isinstance(e, Stratified):
        _need(e, [s for s, _ in e.strata], False, path, out)
        for i, (_, c) in enumerate(e.strata):
            _nonneg(c, "codimension", f"{path}/{i}", out)
    elif isinstance(e, (ClosedOpenPair, PointedQuotient)):
        _need(e, [e.x, e.u, e.z], False, path, out)
        _nonneg(e.codim, "codimension", path, out)
    elif isinstance(e, ThomTrivial):
        _need(e, [e.z], False, path, out)
        _nonneg(e.codim, "codimension", path, out)
    elif isinstance(e, MayerVietoris):
        _need(e, list(e.args()), False, path, out)
    elif isinstance(e, PushoutCone):
        _need(e, [e.f1, e.f3], False, path, out)
    elif isinstance(e, TorusFixed):
        _need(e, [e.x, e.fixed], False, path, out)
    elif isinstance(e, TorusSlice):
        _need(e, [e.y], False, path, out)
        _nonneg(e.corank, "torus rank", path, out)
    elif isinstance(e, (Flag, GModT, GModN)):
        ct = e.cartan
        if not isinstance(ct, CartanType):
            out.append(Diagnostic(path, f"not a Cartan type: {ct!r}"))
        else:
            out.extend(Diagnostic(path, msg) for msg in ct.problems())
    for i, child in enumerate(e.children()):
        if isinstance(child, SpaceExpr):
            _validate(child, f"{path}/{i}:{type(child).__name__}", out)
