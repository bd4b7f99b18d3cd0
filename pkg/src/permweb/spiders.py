"""Layered spider/ladder diagrams, their textual DSL, and evaluation.

A diagram is a bottom boundary (integer strand labels) plus a stack of
layers read bottom-to-top.  A layer is either a horizontal row of local
atoms (id / merge / split / cross) or one full-width ladder or bell atom
that reads its ambient weight from the incoming boundary.

Grammar (whitespace insignificant, layers ';'-separated, atoms '|'-separated):

    expr     := 'on' '[' INT (',' INT)* ']' ':' layer (';' layer)*
    layer    := atom ('|' atom)*  |  wide
    atom     := 'id(' INT ')' | 'merge(' INT ',' INT ')'
              | 'split(' INT ',' INT ')' | 'cross(' INT ',' INT ')'
    wide     := 'E(' INT ',' INT ')' | 'F(' INT ',' INT ')'
              | 'X(' INT ')' | 'Y(' INT ')'

Linear combinations 'a/b * <expr> + ...' are formed on top of single
diagrams (see ``parse_linear``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundaryError, ParseError, UnsupportedError
from .exact import binomial
from .tabloids import (TabloidMorphism, braid_op, circle, identity_morphism,
                       lowering_op, merge_op, raising_op, split_op)


@dataclass(frozen=True)
class Id:
    k: int


@dataclass(frozen=True)
class Merge:
    k: int
    l: int


@dataclass(frozen=True)
class Split:
    k: int
    l: int


@dataclass(frozen=True)
class Cross:
    k: int
    l: int


@dataclass(frozen=True)
class LadderE:
    i: int
    r: int


@dataclass(frozen=True)
class LadderF:
    i: int
    r: int


@dataclass(frozen=True)
class BellX:
    i: int


@dataclass(frozen=True)
class BellY:
    i: int


LOCAL_ATOMS = (Id, Merge, Split, Cross)
WIDE_ATOMS = (LadderE, LadderF, BellX, BellY)


def atom_inputs(atom):
    if isinstance(atom, Id):
        return (atom.k,)
    if isinstance(atom, Merge):
        return (atom.k, atom.l)
    if isinstance(atom, Split):
        return (atom.k + atom.l,)
    if isinstance(atom, Cross):
        return (atom.k, atom.l)
    raise TypeError(atom)


def atom_outputs(atom):
    if isinstance(atom, Id):
        return (atom.k,)
    if isinstance(atom, Merge):
        return (atom.k + atom.l,)
    if isinstance(atom, Split):
        return (atom.k, atom.l)
    if isinstance(atom, Cross):
        return (atom.l, atom.k)
    raise TypeError(atom)


def wide_output(atom, boundary):
    """Boundary after a full-width atom, or None if its index is out of range."""
    n = len(boundary)
    out = list(boundary)
    if isinstance(atom, LadderE):
        if not 1 <= atom.i <= n - 1:
            return None
        out[atom.i - 1] += atom.r
        out[atom.i] -= atom.r
    elif isinstance(atom, LadderF):
        if not 1 <= atom.i <= n - 1:
            return None
        out[atom.i - 1] -= atom.r
        out[atom.i] += atom.r
    elif isinstance(atom, BellX):
        if not 1 <= atom.i <= n:
            return None
        out[atom.i - 1] += 2
    elif isinstance(atom, BellY):
        if not 1 <= atom.i <= n:
            return None
        out[atom.i - 1] -= 2
    else:
        raise TypeError(atom)
    return tuple(out)


class SpiderDiagram:
    """A boundary-checked layered diagram.  Immutable and hashable."""

    __slots__ = ("bottom", "layers", "_boundaries", "_hash")

    def __init__(self, bottom, layers):
        bottom = tuple(bottom)
        layers = tuple(tuple(l) if isinstance(l, (tuple, list)) else l
                       for l in layers)
        boundaries = [bottom]
        cur = bottom
        for idx, layer in enumerate(layers):
            if isinstance(layer, WIDE_ATOMS):
                nxt = wide_output(layer, cur)
                if nxt is None:
                    raise BoundaryError(
                        f"layer {idx}: wide atom {layer} does not fit an "
                        f"{len(cur)}-strand boundary")
            else:
                expected = []
                for atom in layer:
                    expected.extend(atom_inputs(atom))
                if tuple(expected) != cur:
                    raise BoundaryError(
                        f"layer {idx}: expected labels {cur}, found {tuple(expected)}")
                nxt = []
                for atom in layer:
                    nxt.extend(atom_outputs(atom))
                nxt = tuple(nxt)
            boundaries.append(nxt)
            cur = nxt
        object.__setattr__(self, "bottom", bottom)
        object.__setattr__(self, "layers", layers)
        object.__setattr__(self, "_boundaries", tuple(boundaries))
        object.__setattr__(self, "_hash", hash((bottom, layers)))

    @property
    def top(self):
        return self._boundaries[-1]

    def boundaries(self):
        return self._boundaries

    def is_zero(self) -> bool:
        """True when some strand label is negative."""
        return any(p < 0 for b in self._boundaries for p in b)

    def has_bells(self) -> bool:
        return any(isinstance(l, (BellX, BellY)) for l in self.layers)

    def __eq__(self, other):
        return (isinstance(other, SpiderDiagram) and self.bottom == other.bottom
                and self.layers == other.layers)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SpiderDiagram({print_diagram(self)!r})"


class SpiderExpr:
    """Formal rational combination of diagrams with a common boundary."""

    __slots__ = ("bottom", "top", "terms")

    def __init__(self, bottom, top, terms):
        self.bottom = tuple(bottom)
        self.top = tuple(top)
        clean = {}
        for diag, coeff in terms.items():
            if diag.bottom != self.bottom or diag.top != self.top:
                raise BoundaryError("terms must share bottom and top boundaries")
            coeff = Fraction(coeff)
            if coeff and not diag.is_zero():
                clean[diag] = clean.get(diag, Fraction(0)) + coeff
        self.terms = {d: c for d, c in clean.items() if c}

    @classmethod
    def from_diagram(cls, diag, coeff=1):
        return cls(diag.bottom, diag.top, {diag: Fraction(coeff)})

    def scale(self, a):
        a = Fraction(a)
        return SpiderExpr(self.bottom, self.top,
                          {d: a * c for d, c in self.terms.items()})

    def __rmul__(self, a):
        return self.scale(a)

    def __add__(self, other):
        if self.bottom != other.bottom or self.top != other.top:
            raise BoundaryError("cannot add expressions with different boundaries")
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, Fraction(0)) + c
        return SpiderExpr(self.bottom, self.top, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, SpiderExpr) and self.bottom == other.bottom
                and self.top == other.top and self.terms == other.terms)

    def __hash__(self):
        return hash((self.bottom, self.top, tuple(sorted(
            ((print_diagram(d), c) for d, c in self.terms.items())))))

    def __repr__(self):
        return f"SpiderExpr({print_expr(self)!r})"


# ---------------------------------------------------------------------------
# parsing


_TOKEN_RE = re.compile(r"\s*(?:(-?\d+)|(on|id|merge|split|cross|E|F|X|Y)"
                       r"|([\[\](),:;|]))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("word", m.group(2), m.start(2)))
        else:
            tokens.append(("sym", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse_int(self):
        tok = self.expect("int")
        return tok[1]

    def parse_diagram(self):
        self.expect("word", "on")
        self.expect("sym", "[")
        bottom = [self.parse_int()]
        while self.peek()[:2] == ("sym", ","):
            self.next()
            bottom.append(self.parse_int())
        self.expect("sym", "]")
        self.expect("sym", ":")
        layers = [self.parse_layer()]
        while self.peek()[:2] == ("sym", ";"):
            self.next()
            layers.append(self.parse_layer())
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[1]!r}", tok[2])
        try:
            return SpiderDiagram(bottom, layers)
        except BoundaryError as e:
            raise BoundaryError(f"{e} in {self.text!r}")

    def parse_layer(self):
        tok = self.peek()
        if tok[0] == "word" and tok[1] in ("E", "F", "X", "Y"):
            return self.parse_wide()
        atoms = [self.parse_atom()]
        while self.peek()[:2] == ("sym", "|"):
            self.next()
            atoms.append(self.parse_atom())
        return tuple(atoms)

    def parse_wide(self):
        tok = self.expect("word")
        self.expect("sym", "(")
        i = self.parse_int()
        if tok[1] in ("E", "F"):
            self.expect("sym", ",")
            r = self.parse_int()
            self.expect("sym", ")")
            return LadderE(i, r) if tok[1] == "E" else LadderF(i, r)
        self.expect("sym", ")")
        return BellX(i) if tok[1] == "X" else BellY(i)

    def parse_atom(self):
        tok = self.next()
        if tok[0] != "word" or tok[1] not in ("id", "merge", "split", "cross"):
            raise ParseError(f"expected an atom, found {tok[1]!r}", tok[2])
        name = tok[1]
        self.expect("sym", "(")
        k = self.parse_int()
        if name == "id":
            self.expect("sym", ")")
            return Id(k)
        self.expect("sym", ",")
        l = self.parse_int()
        self.expect("sym", ")")
        return {"merge": Merge, "split": Split, "cross": Cross}[name](k, l)


def parse(text: str) -> SpiderExpr:
    """Parse a single diagram expression into a one-term SpiderExpr."""
    return SpiderExpr.from_diagram(_Parser(text).parse_diagram())


def parse_diagram(text: str) -> SpiderDiagram:
    return _Parser(text).parse_diagram()


def parse_linear(text: str) -> SpiderExpr:
    """Parse 'a/b * <expr> + <expr> - ...' (diagram labels are unsigned,
    so +/- outside a diagram always separate terms)."""
    pieces = []
    sign = 1
    depth = 0
    start = 0
    for pos, ch in enumerate(text):
        if ch in "[(":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch in "+-" and depth == 0:
            pieces.append((sign, text[start:pos]))
            sign = 1 if ch == "+" else -1
            start = pos + 1
    pieces.append((sign, text[start:]))
    expr = None
    for sgn, piece in pieces:
        piece = piece.strip()
        if not piece:
            raise ParseError("empty term in linear combination")
        coeff = Fraction(sgn)
        if "*" in piece:
            coeff_text, _, rest = piece.partition("*")
            try:
                coeff *= Fraction(coeff_text.strip())
            except ValueError:
                raise ParseError(f"bad coefficient {coeff_text.strip()!r}")
            piece = rest.strip()
        term = parse(piece).scale(coeff)
        expr = term if expr is None else expr + term
    return expr


# ---------------------------------------------------------------------------
# printing


def _atom_text(atom):
    if isinstance(atom, Id):
        return f"id({atom.k})"
    if isinstance(atom, Merge):
        return f"merge({atom.k},{atom.l})"
    if isinstance(atom, Split):
        return f"split({atom.k},{atom.l})"
    if isinstance(atom, Cross):
        return f"cross({atom.k},{atom.l})"
    if isinstance(atom, LadderE):
        return f"E({atom.i},{atom.r})"
    if isinstance(atom, LadderF):
        return f"F({atom.i},{atom.r})"
    if isinstance(atom, BellX):
        return f"X({atom.i})"
    if isinstance(atom, BellY):
        return f"Y({atom.i})"
    raise TypeError(atom)


def print_diagram(diag: SpiderDiagram) -> str:
    parts = []
    for layer in diag.layers:
        if isinstance(layer, WIDE_ATOMS):
            parts.append(_atom_text(layer))
        else:
            parts.append(" | ".join(_atom_text(a) for a in layer))
    boundary = ",".join(str(p) for p in diag.bottom)
    return f"on [{boundary}]: " + " ; ".join(parts)


def print_expr(expr: SpiderExpr) -> str:
    from .exact import format_rational
    if not expr.terms:
        return "0"
    parts = []
    for diag in sorted(expr.terms, key=print_diagram):
        c = expr.terms[diag]
        parts.append(f"{format_rational(c)} * {print_diagram(diag)}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# composition


def vcompose(upper: SpiderExpr, lower: SpiderExpr) -> SpiderExpr:
    """Vertical juxtaposition (lower first); bilinear."""
    if lower.top != upper.bottom:
        raise BoundaryError(
            f"vcompose: top {lower.top} does not match bottom {upper.bottom}")
    terms = {}
    for d1, c1 in lower.terms.items():
        for d2, c2 in upper.terms.items():
            stacked = SpiderDiagram(d1.bottom, d1.layers + d2.layers)
            terms[stacked] = terms.get(stacked, Fraction(0)) + c1 * c2
    return SpiderExpr(lower.bottom, upper.top, terms)


def _shift_wide(atom, shift):
    if shift == 0:
        return atom
    if isinstance(atom, LadderE):
        return LadderE(atom.i + shift, atom.r)
    if isinstance(atom, LadderF):
        return LadderF(atom.i + shift, atom.r)
    if isinstance(atom, BellX):
        return BellX(atom.i + shift)
    if isinstance(atom, BellY):
        return BellY(atom.i + shift)
    raise TypeError(atom)


def _hjuxtapose(d1: SpiderDiagram, d2: SpiderDiagram) -> SpiderDiagram:
    """Horizontal juxtaposition, normalized so d1's layers run first."""
    layers = []
    right_idle = d2.bottom
    for layer, boundary in zip(d1.layers, d1.boundaries()):
        if isinstance(layer, WIDE_ATOMS):
            # full-width atom on the combined boundary; indices unchanged
            # because it only touches strands inside d1's block
            layers.append(layer)
        else:
            layers.append(tuple(layer) + tuple(Id(k) for k in right_idle))
    left_idle = d1.top
    shift = len(left_idle)
    for layer in d2.layers:
        if isinstance(layer, WIDE_ATOMS):
            layers.append(_shift_wide(layer, shift))
        else:
            layers.append(tuple(Id(k) for k in left_idle) + tuple(layer))
    return SpiderDiagram(d1.bottom + d2.bottom, layers)


def hcompose(left: SpiderExpr, right: SpiderExpr) -> SpiderExpr:
    """Horizontal juxtaposition (monoidal product); bilinear."""
    terms = {}
    for d1, c1 in left.terms.items():
        for d2, c2 in right.terms.items():
            d = _hjuxtapose(d1, d2)
            terms[d] = terms.get(d, Fraction(0)) + c1 * c2
    if not terms:
        # keep boundaries meaningful for the zero expression
        return SpiderExpr(left.bottom + right.bottom, left.top + right.top, {})
    return SpiderExpr(left.bottom + right.bottom, left.top + right.top, terms)


def empty_expr() -> SpiderExpr:
    """The monoidal unit: the empty diagram on the empty boundary."""
    return SpiderExpr.from_diagram(SpiderDiagram((), ()))


def identity_expr(boundary) -> SpiderExpr:
    return SpiderExpr.from_diagram(
        SpiderDiagram(boundary, (tuple(Id(k) for k in boundary),)))


# ---------------------------------------------------------------------------
# evaluation


def _evaluate_atom(atom) -> TabloidMorphism:
    if isinstance(atom, Id):
        return identity_morphism((atom.k,))
    if isinstance(atom, Merge):
        return merge_op(atom.k, atom.l)
    if isinstance(atom, Split):
        return split_op(atom.k, atom.l)
    if isinstance(atom, Cross):
        return braid_op(atom.k, atom.l)
    raise TypeError(atom)


def _evaluate_layer(layer, boundary) -> TabloidMorphism:
    if isinstance(layer, (LadderE, LadderF)):
        if isinstance(layer, LadderE):
            return raising_op(boundary, layer.i, layer.r)
        return lowering_op(boundary, layer.i, layer.r)
    if isinstance(layer, (BellX, BellY)):
        raise UnsupportedError(
            "bell atoms only evaluate in the symplectic tensor context")
    morph = None
    for atom in layer:
        m = _evaluate_atom(atom)
        morph = m if morph is None else circle(morph, m)
    if morph is None:
        return identity_morphism(())
    return morph


def evaluate_diagram(diag: SpiderDiagram) -> TabloidMorphism:
    morph = None
    for layer, boundary in zip(diag.layers, diag.boundaries()):
        step = _evaluate_layer(layer, boundary)
        morph = step if morph is None else step @ morph
    if morph is None:
        morph = identity_morphism(diag.bottom)
    return morph


def evaluate(expr: SpiderExpr) -> TabloidMorphism:
    """The evaluation functor into tabloid morphisms; linear in the expr."""
    from .tabloids import zero_morphism
    total = None
    for diag, coeff in expr.terms.items():
        m = evaluate_diagram(diag).scale(coeff)
        total = m if total is None else total + m
    if total is None:
        return zero_morphism(expr.bottom, expr.top)
    return total


# ---------------------------------------------------------------------------
# the braiding as a ladder sum


def expand_cross(k: int, l: int, form: str = "EF") -> SpiderExpr:
    """The crossing as a signed sum of two-layer ladder diagrams.

    form 'EF': sum over a-b = k-l of (-1)^(k-a) E^(b) F^(a);
    form 'FE': sum over a-b = l-k of (-1)^(l-a) F^(b) E^(a).
    Terms whose intermediate label would be negative are dropped.
    """
    bottom = (k, l)
    terms = {}
    if form == "EF":
        for a in range(0, k + 1):
            b = a - (k - l)
            if b < 0:
                continue
            diag = SpiderDiagram(bottom, (LadderF(1, a), LadderE(1, b)))
            terms[diag] = Fraction((-1) ** (k - a))
    elif form == "FE":
        for a in range(0, l + 1):
            b = a - (l - k)
            if b < 0:
                continue
            diag = SpiderDiagram(bottom, (LadderE(1, a), LadderF(1, b)))
            terms[diag] = Fraction((-1) ** (l - a))
    else:
        raise ValueError(f"unknown form {form!r}")
    return SpiderExpr(bottom, (l, k), terms)
