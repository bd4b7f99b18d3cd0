"""Permutation modules on tabloid bases and their generating morphisms.

A tabloid is a dissection of {1..d} into ordered cells with prescribed
sizes.  Internally a tabloid is its row word: ``word[k]`` is the 0-based
index of the cell containing the element k+1.  The basis of a module is
all words of the given content in ascending lexicographic order.

Shapes may contain zeros (empty cells); a shape with a negative entry
denotes the zero module (empty basis), which is how strands with negative
labels evaluate to zero morphisms.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .combinatorics import kappa, multinomial
from .errors import BoundaryError, DomainError, ParseError
from .exact import LinMap, compose

# ---------------------------------------------------------------------------
# permutations of {0..d-1}; product g*h applies h first: (T.g).h = T.(g*h)


def perm_mul(g, h):
    return tuple(g[h[k]] for k in range(len(g)))


def perm_inverse(g):
    inv = [0] * len(g)
    for k, v in enumerate(g):
        inv[v] = k
    return tuple(inv)


def perm_identity(d):
    return tuple(range(d))


def transposition(d, i, j):
    g = list(range(d))
    g[i], g[j] = g[j], g[i]
    return tuple(g)


# ---------------------------------------------------------------------------


class Tabloid:
    """Immutable dissection of {1..d} into ``ncells`` ordered cells."""

    __slots__ = ("word", "ncells")

    def __init__(self, word, ncells: int):
        word = tuple(word)
        if any(not (0 <= c < ncells) for c in word):
            raise DomainError(f"cell index outside 0..{ncells - 1} in {word}")
        self.word = word
        self.ncells = ncells

    @classmethod
    def from_cells(cls, cells):
        ncells = len(cells)
        elements = sorted(e for cell in cells for e in cell)
        d = len(elements)
        if elements != list(range(1, d + 1)):
            raise DomainError(f"cells {cells} do not dissect 1..{d}")
        word = [0] * d
        for i, cell in enumerate(cells):
            for e in cell:
                word[e - 1] = i
        return cls(word, ncells)

    @property
    def d(self) -> int:
        return len(self.word)

    def cells(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.ncells)]
        for k, c in enumerate(self.word):
            out[c].append(k + 1)
        return tuple(tuple(cell) for cell in out)

    def shape(self) -> tuple[int, ...]:
        counts = [0] * self.ncells
        for c in self.word:
            counts[c] += 1
        return tuple(counts)

    def act(self, g) -> "Tabloid":
        """Right action: (T.g)^i = g^{-1}(T^i)."""
        if len(g) != self.d:
            raise DomainError(f"permutation degree {len(g)} != {self.d}")
        return Tabloid(tuple(self.word[g[k]] for k in range(self.d)), self.ncells)

    def move(self, i: int, subset) -> "Tabloid":
        """c_{i,R}: move every element of R to cell i (1-based)."""
        if not 1 <= i <= self.ncells:
            raise DomainError(f"cell index {i} out of range 1..{self.ncells}")
        word = list(self.word)
        for e in subset:
            if not 1 <= e <= self.d:
                raise DomainError(f"element {e} outside 1..{self.d}")
            word[e - 1] = i - 1
        return Tabloid(word, self.ncells)

    def __eq__(self, other):
        return (isinstance(other, Tabloid) and self.word == other.word
                and self.ncells == other.ncells)

    def __hash__(self):
        return hash((self.word, self.ncells))

    def __repr__(self):
        return f"Tabloid({format_tabloid(self)!r})"


def format_tabloid(t: Tabloid) -> str:
    """Cells separated by '|', elements comma-separated; e.g. '1,2|3'."""
    return "|".join(",".join(str(e) for e in cell) for cell in t.cells())


def parse_tabloid(text: str) -> Tabloid:
    cells = []
    for part in text.strip().split("|"):
        part = part.strip()
        if not part:
            cells.append(())
            continue
        try:
            cells.append(tuple(int(x) for x in part.split(",")))
        except ValueError:
            raise ParseError(f"bad tabloid cell {part!r}")
    try:
        return Tabloid.from_cells(cells)
    except DomainError as e:
        raise ParseError(str(e))


def standard_tabloid(shape) -> Tabloid:
    """T_lambda: first lambda_1 elements in cell 1, the next in cell 2, ..."""
    word = []
    for i, p in enumerate(shape):
        word.extend([i] * p)
    return Tabloid(word, len(shape))


class PermModule:
    """The module M^lambda with its ordered tabloid basis."""

    __slots__ = ("shape", "basis", "index", "label")

    def __init__(self, shape):
        self.shape = tuple(shape)
        self.label = tabloid_label(self.shape)
        if any(p < 0 for p in self.shape):
            self.basis = []
            self.index = {}
            return
        n = len(self.shape)
        basis = []
        for word in _words_with_content(self.shape):
            basis.append(Tabloid(word, n))
        self.basis = basis
        self.index = {t.word: i for i, t in enumerate(basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def d(self) -> int:
        return sum(p for p in self.shape if p > 0)

    def __repr__(self):
        return f"PermModule{self.shape}"


def _words_with_content(content):
    """All words with the given letter content, ascending lex order."""
    d = sum(content)
    remaining = list(content)
    word = [0] * d

    def rec(pos):
        if pos == d:
            yield tuple(word)
            return
        for c in range(len(remaining)):
            if remaining[c]:
                remaining[c] -= 1
                word[pos] = c
                yield from rec(pos + 1)
                remaining[c] += 1

    yield from rec(0)


def tabloid_label(shape) -> str:
    return "tabloid[" + ",".join(str(p) for p in shape) + "]"


@lru_cache(maxsize=None)
def perm_module(shape: tuple) -> PermModule:
    return PermModule(shape)


def module_dim(shape) -> int:
    if any(p < 0 for p in shape):
        return 0
    return multinomial(shape)


# ---------------------------------------------------------------------------
# morphisms


class TabloidMorphism:
    """An S_d-equivariant linear map M^source -> M^target."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source, target, linmap: LinMap):
        self.source = tuple(source)
        self.target = tuple(target)
        if (linmap.domain_label != tabloid_label(self.source)
                or linmap.codomain_label != tabloid_label(self.target)):
            raise BoundaryError("matrix labels do not match the declared shapes")
        self.map = linmap

    def __matmul__(self, other: "TabloidMorphism") -> "TabloidMorphism":
        """self after other."""
        if self.source != other.target:
            raise BoundaryError(f"cannot compose {other.target} into {self.source}")
        return TabloidMorphism(other.source, self.target,
                               compose(self.map, other.map))

    def __add__(self, other):
        if self.source != other.source or self.target != other.target:
            raise BoundaryError("morphism shapes differ")
        return TabloidMorphism(self.source, self.target, self.map + other.map)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, a) -> "TabloidMorphism":
        return TabloidMorphism(self.source, self.target, self.map.scale(a))

    def __rmul__(self, a):
        return self.scale(a)

    def __eq__(self, other):
        return (isinstance(other, TabloidMorphism)
                and self.source == other.source and self.target == other.target
                and self.map == other.map)

    def __hash__(self):
        return hash((self.source, self.target, self.map))

    def is_zero(self) -> bool:
        return self.map.is_zero()

    def apply(self, t: Tabloid):
        """Image of a basis tabloid as a list of (coefficient, tabloid)."""
        src = perm_module(self.source)
        tgt = perm_module(self.target)
        if t.word not in src.index:
            raise DomainError(f"{t} is not a basis tabloid of M^{self.source}")
        c = src.index[t.word]
        out = []
        for (r, cc), v in sorted(self.map.entries.items()):
            if cc == c:
                out.append((v, tgt.basis[r]))
        return out

    def __repr__(self):
        return f"TabloidMorphism({self.source} -> {self.target})"


def morphism_from_images(source, target, image_fn) -> TabloidMorphism:
    """Build the matrix of T |-> image_fn(T) over the tabloid bases."""
    src = perm_module(tuple(source))
    tgt = perm_module(tuple(target))
    entries = {}
    for c, t in enumerate(src.basis):
        for coeff, u in image_fn(t):
            r = tgt.index[u.word]
            key = (r, c)
            w = entries.get(key, 0) + Fraction(coeff)
            if w:
                entries[key] = w
            else:
                del entries[key]
    return TabloidMorphism(source, target,
                           LinMap(src.label, tgt.label, tgt.dim, src.dim, entries))


def zero_morphism(source, target) -> TabloidMorphism:
    src = perm_module(tuple(source))
    tgt = perm_module(tuple(target))
    return TabloidMorphism(source, target,
                           LinMap.zero(src.label, tgt.label, tgt.dim, src.dim))


def identity_morphism(shape) -> TabloidMorphism:
    mod = perm_module(tuple(shape))
    return TabloidMorphism(shape, shape, LinMap.identity(mod.label, mod.dim))


def raising_op(shape, i: int, r: int) -> TabloidMorphism:
    """E_i^{(r)} 1_shape: sum over r-subsets of cell i+1 moved to cell i."""
    shape = tuple(shape)
    if not 1 <= i <= len(shape) - 1:
        raise DomainError(f"ladder index {i} out of range 1..{len(shape) - 1}")
    target = _shift(shape, i, +r)
    if r < 0:
        return zero_morphism(shape, target)

    def images(t):
        cell = t.cells()[i]          # cell i+1, 0-based index i
        return [(1, t.move(i, sub)) for sub in combinations(cell, r)]

    return morphism_from_images(shape, target, images)


def lowering_op(shape, i: int, r: int) -> TabloidMorphism:
    """F_i^{(r)} 1_shape: sum over r-subsets of cell i moved to cell i+1."""
    shape = tuple(shape)
    if not 1 <= i <= len(shape) - 1:
        raise DomainError(f"ladder index {i} out of range 1..{len(shape) - 1}")
    target = _shift(shape, i, -r)
    if r < 0:
        return zero_morphism(shape, target)

    def images(t):
        cell = t.cells()[i - 1]
        return [(1, t.move(i + 1, sub)) for sub in combinations(cell, r)]

    return morphism_from_images(shape, target, images)


def _shift(shape, i, r):
    out = list(shape)
    out[i - 1] += r
    out[i] -= r
    return tuple(out)


def merge_op(k: int, l: int) -> TabloidMorphism:
    """nabla_{k,l}: every (k,l)-tabloid to the unique (k+l)-tabloid."""
    if k < 0 or l < 0:
        return zero_morphism((k, l), (k + l,))
    return morphism_from_images(
        (k, l), (k + l,),
        lambda t: [(1, Tabloid([0] * (k + l), 1))])


def split_op(k: int, l: int) -> TabloidMorphism:
    """Delta_{k,l}: the (k+l)-tabloid to the sum of all (k,l)-tabloids."""
    if k < 0 or l < 0:
        return zero_morphism((k + l,), (k, l))
    tgt = perm_module((k, l))
    return morphism_from_images(
        (k + l,), (k, l),
        lambda t: [(1, u) for u in tgt.basis])


def braid_op(k: int, l: int) -> TabloidMorphism:
    """B_{k,l}: interchange the contents of the two cells."""
    if k < 0 or l < 0:
        return zero_morphism((k, l), (l, k))
    return morphism_from_images(
        (k, l), (l, k),
        lambda t: [(1, Tabloid(tuple(1 - c for c in t.word), 2))])


def adjacent_swap(shape, p: int) -> TabloidMorphism:
    """Braid at position p (1-based) under juxtaposition:
    id o B_{shape[p-1], shape[p]} o id, realized as the cell swap."""
    shape = tuple(shape)
    if not 1 <= p <= len(shape) - 1:
        raise DomainError(f"position {p} out of range")
    target = shape[:p - 1] + (shape[p], shape[p - 1]) + shape[p + 1:]
    a, b = p - 1, p

    def swap_word(c):
        if c == a:
            return b
        if c == b:
            return a
        return c

    return morphism_from_images(
        shape, target,
        lambda t: [(1, Tabloid(tuple(swap_word(c) for c in t.word), t.ncells))])


def permutation_matrix(shape, g) -> TabloidMorphism:
    """The right action of the permutation g on M^shape."""
    mod = perm_module(tuple(shape))
    if mod.basis and len(g) != mod.d:
        raise DomainError("permutation degree does not match the shape")
    return morphism_from_images(shape, shape, lambda t: [(1, t.act(g))])


def circle(f: TabloidMorphism, g: TabloidMorphism) -> TabloidMorphism:
    """Circle (induction) product: the equivariant map on juxtaposed
    tabloids determined by f on the first block and g on the second."""
    lam, lam2 = f.source, f.target
    mu, mu2 = g.source, g.target
    src_shape = lam + mu
    tgt_shape = lam2 + mu2
    src = perm_module(src_shape)
    tgt = perm_module(tgt_shape)
    if src.dim == 0 or tgt.dim == 0:
        return zero_morphism(src_shape, tgt_shape)

    d_left = sum(lam)
    # image of the standard generator tabloid, as juxtaposed target terms
    f_terms = f.apply(standard_tabloid(lam))
    g_terms = g.apply(standard_tabloid(mu))
    n_left = len(lam2)
    base_terms = []
    for cu, u in f_terms:
        for cv, v in g_terms:
            word = u.word + tuple(n_left + c for c in v.word)
            base_terms.append((cu * cv, word))

    n_cells_tgt = len(tgt_shape)
    offsets = []
    acc = 0
    for p in src_shape:
        offsets.append(acc)
        acc += p
    entries = {}
    for col, t in enumerate(src.basis):
        # sigma with t = standard . sigma: send elements of cell j, in
        # order, to the standard slots of cell j
        fill = list(offsets)
        sigma = [0] * len(t.word)
        for k, c in enumerate(t.word):
            sigma[k] = fill[c]
            fill[c] += 1
        for coeff, word in base_terms:
            img = tuple(word[sigma[k]] for k in range(len(sigma)))
            row = tgt.index[img]
            key = (row, col)
            w = entries.get(key, 0) + coeff
            if w:
                entries[key] = w
            else:
                del entries[key]
    return TabloidMorphism(src_shape, tgt_shape,
                           LinMap(src.label, tgt.label, tgt.dim, src.dim, entries))


def canonical_iso(shape) -> TabloidMorphism:
    """The sorting isomorphism M^shape -> M^{sorted shape} built from
    adjacent braids with distinct labels (bubble sort, unit if sorted)."""
    shape = tuple(shape)
    if any(p <= 0 for p in shape):
        raise DomainError("canonical_iso needs positive entries")
    current = list(shape)
    morph = identity_morphism(shape)
    changed = True
    while changed:
        changed = False
        for p in range(1, len(current)):
            if current[p - 1] < current[p]:
                step = adjacent_swap(tuple(current), p)
                morph = step @ morph
                current[p - 1], current[p] = current[p], current[p - 1]
                changed = True
    return morph


def kappa_strip(m: TabloidMorphism) -> TabloidMorphism:
    """Reindex a morphism onto the zero-stripped shapes.

    Valid because deleting empty cells relabels cells monotonically, which
    preserves the lexicographic basis order; the matrix is unchanged.
    """
    src, tgt = kappa(m.source), kappa(m.target)
    lm = m.map
    return TabloidMorphism(src, tgt, LinMap(tabloid_label(src), tabloid_label(tgt),
                                            lm.rows, lm.cols, lm.entries))


def morphism_to_json(m: TabloidMorphism) -> dict:
    from .exact import linmap_to_json
    obj = linmap_to_json(m.map)
    obj["source"] = list(m.source)
    obj["target"] = list(m.target)
    return obj


def format_image(terms) -> str:
    """Render [(coeff, tabloid)] as '1·{2|1,3} + 1·{1|2,3}' style text."""
    if not terms:
        return "0"
    from .exact import format_rational
    parts = []
    for coeff, t in terms:
        parts.append(f"{format_rational(coeff)}·{{{format_tabloid(t)}}}")
    return " + ".join(parts)
