"""Brauer and walled Brauer diagram algebras with their tensor actions.

Diagrams are perfect matchings on two rows of d dots; multiplication glues
diagrams and scales by the parameter per closed loop.  The algebra acts on
signed tensor spaces through generator words (adjacent transpositions and
adjacent contractions); arbitrary diagrams act through a factorization
into such words, whose well-definedness is exercised by the tests rather
than assumed.

Dots are numbered 0..d-1 along the top row and d..2d-1 along the bottom.
A permutation diagram pairs bottom i with top sigma(i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from .combinatorics import compositions, multinomial
from .errors import DomainError, ParseError, UnsupportedError
from .exact import LinMap, SpanAccumulator, binomial, compose, rat
from .relations import RelationInstance, RelationReport

# ---------------------------------------------------------------------------
# diagrams


class BrauerDiagram:
    """A perfect matching on 2d dots."""

    __slots__ = ("d", "pairs")

    def __init__(self, d: int, pairs):
        self.d = d
        norm = tuple(sorted(tuple(sorted(p)) for p in pairs))
        dots = [x for p in norm for x in p]
        if sorted(dots) != list(range(2 * d)):
            raise DomainError(f"pairs {pairs} are not a perfect matching on 2*{d} dots")
        self.pairs = norm

    def __eq__(self, other):
        return (isinstance(other, BrauerDiagram) and self.d == other.d
                and self.pairs == other.pairs)

    def __hash__(self):
        return hash((self.d, self.pairs))

    def __repr__(self):
        return f"BrauerDiagram({format_diagram(self)!r})"

    def partner(self, dot: int) -> int:
        for a, b in self.pairs:
            if a == dot:
                return b
            if b == dot:
                return a
        raise DomainError(f"dot {dot} not present")


def identity_diagram(d: int) -> BrauerDiagram:
    return BrauerDiagram(d, [(i, d + i) for i in range(d)])


def permutation_diagram(sigma) -> BrauerDiagram:
    d = len(sigma)
    return BrauerDiagram(d, [(sigma[i], d + i) for i in range(d)])


def contraction_diagram(d: int, i: int, j: int) -> BrauerDiagram:
    """c_{ij} (1-based): dots i,j paired within each row, rest vertical."""
    if not (1 <= i < j <= d):
        raise DomainError(f"need 1 <= i < j <= {d}")
    pairs = [(i - 1, j - 1), (d + i - 1, d + j - 1)]
    for k in range(d):
        if k not in (i - 1, j - 1):
            pairs.append((k, d + k))
    return BrauerDiagram(d, pairs)


def transposition_diagram(d: int, j: int) -> BrauerDiagram:
    """s_j (1-based): the adjacent transposition (j, j+1)."""
    sigma = list(range(d))
    sigma[j - 1], sigma[j] = sigma[j], sigma[j - 1]
    return permutation_diagram(sigma)


def multiply_diagrams(x: BrauerDiagram, y: BrauerDiagram):
    """Glue x above y; return (loops_removed, product diagram)."""
    if x.d != y.d:
        raise DomainError("diagram sizes differ")
    d = x.d
    # nodes: ('T', i) product top, ('B', i) product bottom, ('M', i) glued row
    adj: dict = {}

    def link(u, v, eid):
        adj.setdefault(u, []).append((v, eid))
        adj.setdefault(v, []).append((u, eid))

    eid = 0
    for a, b in x.pairs:
        ua = ("T", a) if a < d else ("M", a - d)
        ub = ("T", b) if b < d else ("M", b - d)
        link(ua, ub, eid)
        eid += 1
    for a, b in y.pairs:
        ua = ("M", a) if a < d else ("B", a - d)
        ub = ("M", b) if b < d else ("B", b - d)
        link(ua, ub, eid)
        eid += 1

    used = set()
    new_pairs = []

    def dot_index(node):
        kind, i = node
        return i if kind == "T" else d + i

    for i in range(d):
        for start in (("T", i), ("B", i)):
            if start in used:
                continue
            used.add(start)
            node, last_eid = start, None
            while True:
                nxt = None
                for v, e in adj[node]:
                    if e != last_eid:
                        nxt = (v, e)
                        break
                node, last_eid = nxt
                if node[0] == "M":
                    used.add(node)
                else:
                    used.add(node)
                    break
            new_pairs.append((dot_index(start), dot_index(node)))

    # de-duplicate: each path found from both endpoints
    seen = set()
    pairs = []
    for a, b in new_pairs:
        key = (min(a, b), max(a, b))
        if key not in seen:
            seen.add(key)
            pairs.append(key)

    loops = 0
    remaining = {("M", i) for i in range(d)} - used
    while remaining:
        start = remaining.pop()
        node, last_eid = start, None
        while True:
            nxt = None
            for v, e in adj[node]:
                if e != last_eid:
                    nxt = (v, e)
                    break
            node, last_eid = nxt
            if node == start:
                break
            remaining.discard(node)
        loops += 1
    return loops, BrauerDiagram(d, pairs)


@lru_cache(maxsize=None)
def all_diagrams(d: int) -> tuple:
    """Every d-diagram; there are (2d-1)!! of them."""
    out = []

    def pairings(dots):
        if not dots:
            yield []
            return
        first = dots[0]
        for k in range(1, len(dots)):
            rest = dots[1:k] + dots[k + 1:]
            for tail in pairings(rest):
                yield [(first, dots[k])] + tail

    for pairing in pairings(tuple(range(2 * d))):
        out.append(BrauerDiagram(d, pairing))
    return tuple(out)


def double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def is_walled(x: BrauerDiagram, r: int, s: int) -> bool:
    """Horizontal edges must cross the wall; vertical edges must not."""
    if r + s != x.d:
        raise DomainError(f"wall {r}+{s} != {x.d}")
    d = x.d
    for a, b in x.pairs:
        row_a, pos_a = divmod(a, d)
        row_b, pos_b = divmod(b, d)
        left_a, left_b = pos_a < r, pos_b < r
        if row_a == row_b:
            if left_a == left_b:
                return False
        else:
            if left_a != left_b:
                return False
    return True


# element = rational combination of diagrams with a fixed loop parameter


class BrauerElement:
    """An element of the diagram algebra with integer parameter delta."""

    __slots__ = ("d", "delta", "terms")

    def __init__(self, d: int, delta: int, terms):
        self.d = d
        self.delta = delta
        clean = {}
        for diag, coeff in terms.items():
            if diag.d != d:
                raise DomainError("diagram size mismatch")
            coeff = Fraction(coeff)
            if coeff:
                clean[diag] = coeff
        self.terms = clean

    @classmethod
    def from_diagram(cls, diag, delta, coeff=1):
        return cls(diag.d, delta, {diag: Fraction(coeff)})

    def __eq__(self, other):
        return (isinstance(other, BrauerElement) and self.d == other.d
                and self.delta == other.delta and self.terms == other.terms)

    def __add__(self, other):
        if self.d != other.d or self.delta != other.delta:
            raise DomainError("size or parameter mismatch")
        terms = dict(self.terms)
        for diag, c in other.terms.items():
            terms[diag] = terms.get(diag, Fraction(0)) + c
        return BrauerElement(self.d, self.delta, terms)

    def scale(self, a):
        return BrauerElement(self.d, self.delta,
                             {diag: Fraction(a) * c for diag, c in self.terms.items()})

    def __repr__(self):
        return f"BrauerElement(d={self.d}, delta={self.delta}, {len(self.terms)} terms)"


def multiply(x: BrauerElement, y: BrauerElement) -> BrauerElement:
    if x.d != y.d or x.delta != y.delta:
        raise DomainError("size or parameter mismatch")
    terms: dict = {}
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            loops, z = multiply_diagrams(dx, dy)
            c = cx * cy * Fraction(x.delta) ** loops
            terms[z] = terms.get(z, Fraction(0)) + c
    return BrauerElement(x.d, x.delta, terms)


# text format: 'd; t1-b2, t2-t3, b1-b3'


def format_diagram(x: BrauerDiagram) -> str:
    def name(dot):
        return f"t{dot + 1}" if dot < x.d else f"b{dot - x.d + 1}"

    return f"{x.d}; " + ", ".join(f"{name(a)}-{name(b)}" for a, b in x.pairs)


def parse_diagram_text(text: str) -> BrauerDiagram:
    head, _, rest = text.partition(";")
    try:
        d = int(head.strip())
    except ValueError:
        raise ParseError(f"bad diagram size {head.strip()!r}")
    pairs = []
    for chunk in rest.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        a, _, b = chunk.partition("-")

        def dot(tok):
            tok = tok.strip()
            if len(tok) < 2 or tok[0] not in "tb":
                raise ParseError(f"bad dot {tok!r}")
            idx = int(tok[1:]) - 1
            if not 0 <= idx < d:
                raise ParseError(f"dot index out of range in {tok!r}")
            return idx if tok[0] == "t" else d + idx

        pairs.append((dot(a), dot(b)))
    try:
        return BrauerDiagram(d, pairs)
    except DomainError as e:
        raise ParseError(str(e))


# ---------------------------------------------------------------------------
# factorization into generator words


def permutation_word(sigma) -> list:
    """Adjacent-transposition tokens whose diagram product is sigma."""
    w = list(sigma)
    swaps = []
    changed = True
    while changed:
        changed = False
        for j in range(len(w) - 1):
            if w[j] > w[j + 1]:
                w[j], w[j + 1] = w[j + 1], w[j]
                swaps.append(j + 1)          # 1-based position
                changed = True
    return [("s", j) for j in reversed(swaps)]


def diagram_word(x: BrauerDiagram, rng=None) -> list:
    """A generator word (tokens ('s', j), ('c', j), adjacent, 1-based)
    multiplying to x with no closed loops.

    ``rng`` optionally shuffles the pair enumeration, giving a different
    factorization of the same diagram (used to test that the induced
    tensor action is well defined).
    """
    d = x.d
    top_pairs, bottom_pairs, through = [], [], []
    for a, b in x.pairs:
        if a < d and b < d:
            top_pairs.append((a, b))
        elif a >= d and b >= d:
            bottom_pairs.append((a - d, b - d))
        else:
            t, u = (a, b - d) if a < d else (b, a - d)
            through.append((u, t))           # bottom position u <-> top t
    k = len(top_pairs)
    if rng is not None:
        rng.shuffle(top_pairs)
        rng.shuffle(bottom_pairs)
        rng.shuffle(through)
        top_pairs = [p if rng.random() < 0.5 else p[::-1] for p in top_pairs]
        bottom_pairs = [p if rng.random() < 0.5 else p[::-1] for p in bottom_pairs]
    sigma = [None] * d
    tau = [None] * d
    for i, (a, b) in enumerate(top_pairs):
        sigma[2 * i], sigma[2 * i + 1] = a, b
    for i, (c, e) in enumerate(bottom_pairs):
        tau[c], tau[e] = 2 * i, 2 * i + 1
    slot = 2 * k
    for u, t in through:
        sigma[slot] = t
        tau[u] = slot
        slot += 1
    word = permutation_word(tuple(sigma))
    for i in range(k):
        word.append(("c", 2 * i + 1))
    word.extend(permutation_word(tuple(tau)))
    return word


def word_to_element(tokens, d: int, delta: int) -> BrauerElement:
    """Multiply out a generator word inside the diagram algebra."""
    acc = BrauerElement.from_diagram(identity_diagram(d), delta)
    for kind, j in tokens:
        if kind == "s":
            gen = transposition_diagram(d, j)
        elif kind == "c":
            gen = contraction_diagram(d, j, j + 1)
        else:
            raise DomainError(f"unknown token {kind!r}")
        acc = multiply(acc, BrauerElement.from_diagram(gen, delta))
    return acc


# ---------------------------------------------------------------------------
# tensor spaces: words over +-1..+-n; letter order 1 < .. < n < -1 < .. < -n


def letter_key(i: int, n: int) -> int:
    return i - 1 if i > 0 else n + (-i) - 1


def signed_alphabet(n: int):
    return list(range(1, n + 1)) + [-i for i in range(1, n + 1)]


class TensorSpace:
    """A lexicographically ordered word basis with a label."""

    __slots__ = ("n", "slots", "basis", "index", "label")

    def __init__(self, n, slots, basis, label):
        self.n = n
        self.slots = slots
        self.basis = basis
        self.index = {w: i for i, w in enumerate(basis)}
        self.label = label

    @property
    def dim(self):
        return len(self.basis)


@lru_cache(maxsize=None)
def signed_tensor_space(n: int, d: int) -> TensorSpace:
    """Words of length d over the 2n signed letters (the sp/o site space)."""
    basis = list(product(signed_alphabet(n), repeat=d))
    return TensorSpace(n, d, basis, f"w2n[n={n},d={d}]")


@lru_cache(maxsize=None)
def mixed_tensor_space(n: int, r: int, s: int) -> TensorSpace:
    """First r slots positive letters, last s slots negative letters."""
    pos = list(range(1, n + 1))
    neg = [-i for i in range(1, n + 1)]
    basis = [p + q for p in product(pos, repeat=r) for q in product(neg, repeat=s)]
    return TensorSpace(n, r + s, basis, f"mixed[n={n},r={r},s={s}]")


def word_weight(word, n: int) -> tuple:
    coords = [0] * n
    for i in word:
        coords[abs(i) - 1] += 1 if i > 0 else -1
    return tuple(coords)


def sp_weight_space_basis(n: int, d: int, lam) -> list:
    """All length-d signed words of weight lam, lexicographic order."""
    lam = tuple(lam)
    space = signed_tensor_space(n, d)
    return [w for w in space.basis if word_weight(w, n) == lam]


# ---------------------------------------------------------------------------
# Lie generators as letter maps (site action on C^{2n}, C^n, C^{*n})


def sp_letter_map(name: str, i: int, n: int) -> dict:
    """The letter action of a named sp generator on the 2n signed letters."""
    if name == "E":
        if not 1 <= i <= n - 1:
            raise DomainError(f"E index {i} out of range")
        return {i + 1: ((i, 1),), -i: ((-(i + 1), -1),)}
    if name == "F":
        if not 1 <= i <= n - 1:
            raise DomainError(f"F index {i} out of range")
        return {i: ((i + 1, 1),), -(i + 1): ((-i, -1),)}
    if name == "X":
        if not 1 <= i <= n:
            raise DomainError(f"X index {i} out of range")
        return {-i: ((i, 1),)}
    if name == "Y":
        if not 1 <= i <= n:
            raise DomainError(f"Y index {i} out of range")
        return {i: ((-i, 1),)}
    if name == "Z":
        if not 1 <= i <= n:
            raise DomainError(f"Z index {i} out of range")
        return {i: ((i, 1),), -i: ((-i, -1),)}
    raise DomainError(f"unknown sp generator {name!r}")


def elementary_letter_map(a: int, b: int, coeff=1) -> dict:
    """e_{ab} on signed letters: letter b -> coeff * letter a (a, b signed)."""
    return {b: ((a, coeff),)}


def merge_letter_maps(*maps) -> dict:
    out: dict = {}
    for m in maps:
        for src, terms in m.items():
            acc = dict(out.get(src, ()))
            for dst, c in terms:
                acc[dst] = acc.get(dst, 0) + c
            out[src] = tuple((dst, c) for dst, c in acc.items() if c)
    return out


def sp_algebra_letter_maps(n: int) -> list:
    """A spanning set of sp_{2n} as letter maps (A full, B and C symmetric)."""
    maps = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            maps.append(merge_letter_maps(elementary_letter_map(a, b),
                                          elementary_letter_map(-b, -a, -1)))
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if a == b:
                maps.append(elementary_letter_map(a, -a))
                maps.append(elementary_letter_map(-a, a))
            else:
                maps.append(merge_letter_maps(elementary_letter_map(a, -b),
                                              elementary_letter_map(b, -a)))
                maps.append(merge_letter_maps(elementary_letter_map(-a, b),
                                              elementary_letter_map(-b, a)))
    return maps


def o_algebra_letter_maps(n: int) -> list:
    """A basis of o_{2n} as letter maps (A full, B and C skew)."""
    maps = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            maps.append(merge_letter_maps(elementary_letter_map(a, b),
                                          elementary_letter_map(-b, -a, -1)))
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            maps.append(merge_letter_maps(elementary_letter_map(a, -b),
                                          elementary_letter_map(b, -a, -1)))
            maps.append(merge_letter_maps(elementary_letter_map(-a, b),
                                          elementary_letter_map(-b, a, -1)))
    return maps


def gl_letter_maps(n: int) -> list:
    """gl_n basis acting on C^n letters and, dually, on C^{*n} letters:
    e_{ab}: b -> a on positives, -a -> -(-b)... i.e. -a -> -b with sign -1."""
    maps = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            maps.append(merge_letter_maps(elementary_letter_map(a, b),
                                          elementary_letter_map(-b, -a, -1)))
    return maps


def lie_generator_matrix(algebra: str, name, n: int) -> LinMap:
    """Exact matrix of a named generator on the site space.

    algebra 'sp'/'o': 2n x 2n on basis v_1..v_n, v_{-1}..v_{-n} (index n+j
    is the dual vector v_{-j}).  algebra 'gl': n x n for name ('e', a, b).
    """
    if algebra in ("sp", "o"):
        kind, i = name
        lm = sp_letter_map(kind, i, n)
        if algebra == "o" and kind in ("X", "Y"):
            raise UnsupportedError("X/Y bells are symplectic generators")
        label = f"site[C2n:n={n}]"
        entries = {}
        for src, terms in lm.items():
            for dst, c in terms:
                entries[(letter_key(dst, n), letter_key(src, n))] = rat(c)
        return LinMap(label, label, 2 * n, 2 * n, entries)
    if algebra == "gl":
        _, a, b = name
        label = f"site[Cn:n={n}]"
        return LinMap(label, label, n, n, {(a - 1, b - 1): rat(1)})
    raise DomainError(f"unknown algebra {algebra!r}")


def letter_map_to_linmap(lm: dict, n: int) -> LinMap:
    label = f"site[C2n:n={n}]"
    entries = {}
    for src, terms in lm.items():
        for dst, c in terms:
            key = (letter_key(dst, n), letter_key(src, n))
            entries[key] = entries.get(key, 0) + rat(c)
    return LinMap(label, label, 2 * n, 2 * n, entries)


# ---------------------------------------------------------------------------
# actions on tensor words


def leibniz_apply(lm: dict, word, slots=None):
    """Slot-summed derivation action of a letter map on a basis word."""
    out = []
    positions = range(len(word)) if slots is None else slots
    for p in positions:
        terms = lm.get(word[p])
        if not terms:
            continue
        for dst, c in terms:
            out.append((c, word[:p] + (dst,) + word[p + 1:]))
    return out


def site_matrix_to_letter_map(m: LinMap) -> dict:
    """Read a site matrix back as a letter map; a 2n-dim site uses signed
    letters (index n+j is v_{-j}), an n-dim site only positive letters."""
    if "C2n" in m.domain_label:
        n = m.rows // 2
        decode = lambda idx: idx + 1 if idx < n else -(idx - n + 1)
    else:
        decode = lambda idx: idx + 1
    out: dict = {}
    for (r, c), v in m.entries.items():
        out.setdefault(decode(c), []).append((decode(r), v))
    return {src: tuple(terms) for src, terms in out.items()}


def act_lie_on_tensor(m: LinMap, vec: dict) -> dict:
    """Slot-summed derivation action of a site matrix on a tensor vector
    (dict word -> coefficient); site dimensions must match the letters."""
    lm = site_matrix_to_letter_map(m)
    out: dict = {}
    for word, coeff in vec.items():
        for letter in word:
            if abs(letter) > (m.rows // 2 if "C2n" in m.domain_label else m.rows):
                raise DomainError(f"letter {letter} outside the site space")
        for c, img in leibniz_apply(lm, word):
            v = out.get(img, 0) + Fraction(coeff) * c
            if v:
                out[img] = v
            else:
                out.pop(img, None)
    return out


def leibniz_matrix(lm: dict, space: TensorSpace) -> LinMap:
    entries = {}
    for col, word in enumerate(space.basis):
        for c, img in leibniz_apply(lm, word):
            row = space.index.get(img)
            if row is None:
                continue
            key = (row, col)
            v = entries.get(key, 0) + rat(c)
            if v:
                entries[key] = v
            else:
                del entries[key]
    return LinMap(space.label, space.label, space.dim, space.dim, entries)


def act_token(word, token, n: int, kind: str, wall: int | None = None):
    """Image of a basis word under one right-action generator token.

    Returns a list of (coeff, word).  kind is 'sp', 'o', or 'walled'.
    """
    t, j = token
    d = len(word)
    if t == "s":
        if not 1 <= j <= d - 1:
            raise DomainError(f"transposition position {j} out of range")
        if kind == "walled" and j == wall:
            raise UnsupportedError("transposition across the wall is not walled")
        swapped = word[:j - 1] + (word[j], word[j - 1]) + word[j + 1:]
        sign = -1 if kind == "sp" else 1
        return [(sign, swapped)]
    if t == "c":
        if not 1 <= j <= d - 1:
            raise DomainError(f"contraction position {j} out of range")
        a, b = word[j - 1], word[j]
        out = []
        if kind == "sp":
            if a == -b and a > 0:
                eps = 1
            elif a == -b and a < 0:
                eps = -1
            else:
                return []
            for k in range(1, n + 1):
                out.append((eps, word[:j - 1] + (-k, k) + word[j + 1:]))
                out.append((-eps, word[:j - 1] + (k, -k) + word[j + 1:]))
            return out
        if kind == "o":
            if a != -b:
                return []
            for k in range(1, n + 1):
                out.append((1, word[:j - 1] + (k, -k) + word[j + 1:]))
                out.append((1, word[:j - 1] + (-k, k) + word[j + 1:]))
            return out
        if kind == "walled":
            if j != wall:
                raise UnsupportedError("contraction away from the wall is not walled")
            if a != -b:
                return []
            for k in range(1, n + 1):
                out.append((1, word[:j - 1] + (k, -k) + word[j + 1:]))
            return out
    raise DomainError(f"unknown token {token!r}")


def act_word(vec: dict, tokens, n: int, kind: str, wall: int | None = None) -> dict:
    """Right action of a generator word on a vector (dict word -> coeff)."""
    cur = {w: Fraction(c) for w, c in vec.items()}
    for token in tokens:
        nxt: dict = {}
        for w, c in cur.items():
            for cc, img in act_token(w, token, n, kind, wall):
                v = nxt.get(img, 0) + c * cc
                if v:
                    nxt[img] = v
                else:
                    nxt.pop(img, None)
        cur = nxt
    return cur


def act_brauer_sp(x, vec: dict, n: int) -> dict:
    """Right action of a generator word (or a diagram, via a factorization)
    of the parameter -2n algebra on a signed tensor vector."""
    tokens = _as_tokens(x)
    return act_word(vec, tokens, n, "sp")


def act_brauer_o(x, vec: dict, n: int) -> dict:
    tokens = _as_tokens(x)
    return act_word(vec, tokens, n, "o")


def act_walled(x, vec: dict, n: int, r: int, s: int) -> dict:
    tokens = _as_tokens(x)
    return act_word(vec, tokens, n, "walled", wall=r)


def _as_tokens(x):
    if isinstance(x, BrauerDiagram):
        return diagram_word(x)
    if isinstance(x, (list, tuple)) and all(
            isinstance(t, tuple) and len(t) == 2 for t in x):
        return list(x)
    raise UnsupportedError(
        "actions apply to generator words or single diagrams "
        "(factor elements into words first)")


def token_matrix(space: TensorSpace, token, kind: str,
                 wall: int | None = None) -> LinMap:
    entries = {}
    for col, word in enumerate(space.basis):
        for c, img in act_token(word, token, space.n, kind, wall):
            row = space.index.get(img)
            if row is None:
                continue
            key = (row, col)
            v = entries.get(key, 0) + rat(c)
            if v:
                entries[key] = v
            else:
                del entries[key]
    return LinMap(space.label, space.label, space.dim, space.dim, entries)


def brauer_generator_tokens(kind: str, d: int, r: int | None = None,
                            s: int | None = None) -> list:
    if kind in ("sp", "o"):
        return ([("s", j) for j in range(1, d)]
                + [("c", j) for j in range(1, d)])
    if kind == "walled":
        toks = [("s", j) for j in range(1, r)]
        toks += [("s", j) for j in range(r + 1, r + s)]
        if r >= 1 and s >= 1:
            toks.append(("c", r))
        return toks
    raise DomainError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# weight-space ladder operators and the symplectic relation suite


class SpWeightContext:
    """Weight-space evaluation of ladder/bell generators on the length-d
    signed tensor space; identities off the weight support are zero."""

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self._bases: dict = {}
        space = signed_tensor_space(n, d)
        for i, w in enumerate(space.basis):
            self._bases.setdefault(word_weight(w, n), []).append(w)

    def weights(self):
        return sorted(self._bases)

    def basis(self, lam):
        return self._bases.get(tuple(lam), [])

    def label(self, lam):
        return f"w2n[n={self.n},d={self.d}]@{tuple(lam)}"

    def identity(self, lam):
        b = self.basis(lam)
        return LinMap.identity(self.label(lam), len(b))

    def shift(self, gen, lam):
        name, i = gen
        lam = list(lam)
        if name == "E":
            lam[i - 1] += 1
            lam[i] -= 1
        elif name == "F":
            lam[i - 1] -= 1
            lam[i] += 1
        elif name == "X":
            lam[i - 1] += 2
        elif name == "Y":
            lam[i - 1] -= 2
        else:
            raise DomainError(f"unknown generator {gen!r}")
        return tuple(lam)

    def step(self, gen, lam) -> LinMap:
        """Single generator as a map between weight spaces."""
        name, i = gen
        lm = sp_letter_map(name, i, self.n)
        src = self.basis(lam)
        tgt_w = self.shift(gen, lam)
        tgt = self.basis(tgt_w)
        tgt_index = {w: r for r, w in enumerate(tgt)}
        entries = {}
        for col, word in enumerate(src):
            for c, img in leibniz_apply(lm, word):
                row = tgt_index.get(img)
                if row is None:
                    continue
                key = (row, col)
                v = entries.get(key, 0) + rat(c)
                if v:
                    entries[key] = v
                else:
                    del entries[key]
        return LinMap(self.label(lam), self.label(tgt_w),
                      len(tgt), len(src), entries)

    def op(self, gens, lam) -> LinMap:
        """Operator word [g_1, g_2, ...] applied right-to-left from weight
        lam; divided powers are written as repeated singles by the caller."""
        cur = self.identity(lam)
        w = tuple(lam)
        for gen in reversed(gens):
            step = self.step(gen, w)
            cur = compose(step, cur)
            w = self.shift(gen, w)
        return cur

    def divided(self, name, i, r, lam) -> LinMap:
        """E/F divided power: r-fold single step divided by r!."""
        gens = [(name, i)] * r
        return self.op(gens, lam).scale(Fraction(1, factorial(r)))


def sp_ladder_relation_suite(n: int, d: int, r_max: int = 2) -> RelationReport:
    """Ladder-with-bell relations on the weight spaces of the length-d
    signed tensor space, including the truncation off the weight support."""
    ctx = SpWeightContext(n, d)
    report = RelationReport(f"sp(n={n},d={d})")

    def check(name, params, lhs, rhs):
        diff = lhs - rhs
        report.instances.append(RelationInstance(
            name, params, diff.is_zero(), None if diff.is_zero() else diff))

    for lam in ctx.weights():
        # X_j Y_j = Y_j X_j + lam_j  (and the bell-swapped mirror)
        for j in range(1, n + 1):
            lhs = ctx.op([("X", j), ("Y", j)], lam)
            rhs = ctx.op([("Y", j), ("X", j)], lam) + \
                ctx.identity(lam).scale(lam[j - 1])
            check("bell-weight", {"lam": lam, "j": j}, lhs, rhs)
            lhs = ctx.op([("Y", j), ("X", j)], lam)
            rhs = ctx.op([("X", j), ("Y", j)], lam) - \
                ctx.identity(lam).scale(lam[j - 1])
            check("bell-weight-mirror", {"lam": lam, "j": j}, lhs, rhs)

        for i in range(1, n):
            # X_i + E_i X_{i+1} E_i = E_i^(2) X_{i+1} + X_{i+1} E_i^(2)
            lhs = ctx.op([("X", i)], lam) + ctx.op([("E", i), ("X", i + 1), ("E", i)], lam)
            e2_first = compose(ctx.step(("X", i + 1), ctx.shift(("E", i), ctx.shift(("E", i), lam))),
                               ctx.divided("E", i, 2, lam))
            lam_x = ctx.shift(("X", i + 1), lam)
            e2_second = compose(ctx.divided("E", i, 2, lam_x),
                                ctx.step(("X", i + 1), lam))
            check("bell-slide", {"lam": lam, "i": i}, lhs, e2_first + e2_second)

            lhs = ctx.op([("Y", i)], lam) + ctx.op([("F", i), ("Y", i + 1), ("F", i)], lam)
            f2_first = compose(ctx.step(("Y", i + 1), ctx.shift(("F", i), ctx.shift(("F", i), lam))),
                               ctx.divided("F", i, 2, lam))
            lam_y = ctx.shift(("Y", i + 1), lam)
            f2_second = compose(ctx.divided("F", i, 2, lam_y),
                                ctx.step(("Y", i + 1), lam))
            check("bell-slide-mirror", {"lam": lam, "i": i}, lhs, f2_first + f2_second)

            # 2 X_{i+1} E_i X_{i+1} = X_{i+1}^2 E_i + E_i X_{i+1}^2
            lhs = ctx.op([("X", i + 1), ("E", i), ("X", i + 1)], lam).scale(2)
            rhs = ctx.op([("X", i + 1), ("X", i + 1), ("E", i)], lam) + \
                ctx.op([("E", i), ("X", i + 1), ("X", i + 1)], lam)
            check("bell-serre", {"lam": lam, "i": i}, lhs, rhs)
            lhs = ctx.op([("Y", i + 1), ("F", i), ("Y", i + 1)], lam).scale(2)
            rhs = ctx.op([("Y", i + 1), ("Y", i + 1), ("F", i)], lam) + \
                ctx.op([("F", i), ("Y", i + 1), ("Y", i + 1)], lam)
            check("bell-serre-mirror", {"lam": lam, "i": i}, lhs, rhs)

            # E_i X_i = X_i E_i
            lhs = ctx.op([("E", i), ("X", i)], lam)
            rhs = ctx.op([("X", i), ("E", i)], lam)
            check("bell-commute-same", {"lam": lam, "i": i}, lhs, rhs)
            lhs = ctx.op([("F", i), ("Y", i)], lam)
            rhs = ctx.op([("Y", i), ("F", i)], lam)
            check("bell-commute-same-mirror", {"lam": lam, "i": i}, lhs, rhs)

            for j in range(1, n + 1):
                if j != i:
                    lhs = ctx.op([("E", i), ("Y", j)], lam)
                    rhs = ctx.op([("Y", j), ("E", i)], lam)
                    check("bell-commute-EY", {"lam": lam, "i": i, "j": j}, lhs, rhs)
                    lhs = ctx.op([("F", i), ("X", j)], lam)
                    rhs = ctx.op([("X", j), ("F", i)], lam)
                    check("bell-commute-FX", {"lam": lam, "i": i, "j": j}, lhs, rhs)
                if abs(i - j) > 1:
                    lhs = ctx.op([("E", i), ("X", j)], lam)
                    rhs = ctx.op([("X", j), ("E", i)], lam)
                    check("bell-commute-EX-distant", {"lam": lam, "i": i, "j": j},
                          lhs, rhs)
                    lhs = ctx.op([("F", i), ("Y", j)], lam)
                    rhs = ctx.op([("Y", j), ("F", i)], lam)
                    check("bell-commute-FY-distant", {"lam": lam, "i": i, "j": j},
                          lhs, rhs)

        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    lhs = ctx.op([("X", i), ("Y", j)], lam)
                    rhs = ctx.op([("Y", j), ("X", i)], lam)
                    check("bell-commute-XY", {"lam": lam, "i": i, "j": j}, lhs, rhs)

        # divided-power ladder relations on the same weight spaces
        for i in range(1, n):
            for r in range(1, r_max + 1):
                for s in range(1, r_max + 1):
                    nu = ctx.shift(("F", i), lam)
                    for _ in range(s - 1):
                        nu = ctx.shift(("F", i), nu)
                    lhs = compose(ctx.divided("E", i, r, nu),
                                  ctx.divided("F", i, s, lam))
                    rhs = None
                    for t in range(0, min(r, s) + 1):
                        mu = lam
                        for _ in range(r - t):
                            mu = ctx.shift(("E", i), mu)
                        term = compose(ctx.divided("F", i, s - t, mu),
                                       ctx.divided("E", i, r - t, lam)).scale(
                            binomial(lam[i - 1] - lam[i] + r - s, t))
                        rhs = term if rhs is None else rhs + term
                    check("ladder-EF", {"lam": lam, "i": i, "r": r, "s": s},
                          lhs, rhs)
    return report


# ---------------------------------------------------------------------------
# duality reports


@dataclass
class DualityReport:
    kind: str
    n: int
    d: int
    r: int | None = None
    s: int | None = None
    space_dim: int = 0
    commutators_zero: bool = False
    commutator_failures: list = field(default_factory=list)
    span_dim: int = 0
    commutant_dim: int = 0
    threshold_holds: bool = False
    algebra_dim: int = 0

    @property
    def equal(self) -> bool:
        return self.span_dim == self.commutant_dim

    def summary(self) -> str:
        size = f"n={self.n},d={self.d}" if self.r is None else \
            f"n={self.n},r={self.r},s={self.s}"
        rel = "=" if self.equal else "<"
        return (f"{self.kind}({size}): commutators "
                f"{'zero' if self.commutators_zero else 'NONZERO'}; "
                f"span {self.span_dim} {rel} commutant {self.commutant_dim}; "
                f"threshold {'holds' if self.threshold_holds else 'fails'}")


def graded_commutant_dimension(blocks: list, ops: list) -> int:
    """Commutant dimension of weight-homogeneous operators, computed
    blockwise.  ``blocks`` partitions the basis indices; the op list must
    contain enough of the torus for the commutant to preserve blocks."""
    block_of = {}
    local = {}
    for b, idxs in enumerate(blocks):
        for loc, i in enumerate(idxs):
            block_of[i] = b
            local[i] = loc
    sizes = [len(idxs) for idxs in blocks]
    offsets = []
    acc = 0
    for sz in sizes:
        offsets.append(acc)
        acc += sz * sz
    total = acc
    accm = SpanAccumulator()
    for op in ops:
        maps: dict = {}
        for (rr, cc), v in op.entries.items():
            b = block_of[cc]
            t = block_of[rr]
            if b in maps:
                tb, ent = maps[b]
                if tb != t:
                    raise DomainError("operator is not weight-homogeneous")
            else:
                ent = {}
                maps[b] = (t, ent)
            ent[(local[rr], local[cc])] = v
        for b, (t, ent) in maps.items():
            nb, nt = sizes[b], sizes[t]
            by_col: dict = {}
            by_row: dict = {}
            for (i, k), v in ent.items():
                by_col.setdefault(k, []).append((i, v))
                by_row.setdefault(i, []).append((k, v))
            for i in range(nt):
                for j in range(nb):
                    row: dict = {}
                    # sum_k X_t[i,k] M[k,j]
                    for k in range(nt):
                        coeff = ent.get((k, j))
                        if coeff:
                            key = offsets[t] + i * nt + k
                            row[key] = row.get(key, 0) + coeff
                    # - sum_k M[i,k] X_b[k,j]
                    for k, v in by_row.get(i, ()):
                        key = offsets[b] + k * nb + j
                        row[key] = row.get(key, 0) - v
                    row = {k: v for k, v in row.items() if v}
                    if row:
                        accm.add(row)
    return total - accm.rank


def word_span_dimension(gens: list, dim: int, label: str, cap: int) -> int:
    """Rank of the span of all generator-word actions, grown level by level
    until a full level adds nothing or the length cap is reached."""
    from .exact import _vectorize
    acc = SpanAccumulator()
    ident = LinMap.identity(label, dim)
    acc.add(_vectorize(ident))
    frontier = [ident]
    length = 0
    while frontier and length < cap:
        new = []
        for m in frontier:
            for g in gens:
                prod = compose(m, g)
                if acc.add(_vectorize(prod)):
                    new.append(prod)
        frontier = new
        length += 1
    return acc.rank


def duality_check(kind: str, n: int, d: int | None = None,
                  r: int | None = None, s: int | None = None) -> DualityReport:
    """Commutation and double-centralizer dimension comparison.

    kind 'sp' / 'o' on the length-d signed tensor space, or 'mixed' on the
    r,s mixed tensor space.
    """
    if kind in ("sp", "o"):
        if d is None:
            raise DomainError("sp/o duality needs d")
        space = signed_tensor_space(n, d)
        lie_ops = [leibniz_matrix(lm, space) for lm in
                   (sp_algebra_letter_maps(n) if kind == "sp"
                    else o_algebra_letter_maps(n))]
        tokens = brauer_generator_tokens(kind, d)
        gens = [token_matrix(space, t, kind) for t in tokens]
        report = DualityReport(kind=kind, n=n, d=d, space_dim=space.dim)
        report.threshold_holds = 2 * n >= d - 1
        report.algebra_dim = double_factorial(2 * d - 1)
        cap = 2 * d
    elif kind == "mixed":
        if r is None or s is None:
            raise DomainError("mixed duality needs r and s")
        d_total = r + s
        space = mixed_tensor_space(n, r, s)
        lie_ops = [leibniz_matrix(lm, space) for lm in gl_letter_maps(n)]
        tokens = brauer_generator_tokens("walled", d_total, r, s)
        gens = [token_matrix(space, t, "walled", wall=r) for t in tokens]
        report = DualityReport(kind=kind, n=n, d=d_total, r=r, s=s,
                               space_dim=space.dim)
        report.threshold_holds = n >= r + s
        report.algebra_dim = factorial(r + s)
        cap = 2 * d_total
    else:
        raise DomainError(f"unknown duality kind {kind!r}")

    failures = []
    for i, L in enumerate(lie_ops):
        for j, B in enumerate(gens):
            comm = compose(L, B) - compose(B, L)
            if not comm.is_zero():
                failures.append((i, j))
    report.commutators_zero = not failures
    report.commutator_failures = failures

    report.span_dim = word_span_dimension(gens, space.dim, space.label, cap)

    blocks_by_weight: dict = {}
    for idx, w in enumerate(space.basis):
        blocks_by_weight.setdefault(word_weight(w, space.n), []).append(idx)
    blocks = [blocks_by_weight[w] for w in sorted(blocks_by_weight)]
    report.commutant_dim = graded_commutant_dimension(blocks, lie_ops)
    return report


# ---------------------------------------------------------------------------
# dimension cross-checks against the weight-space decompositions


def sp_weight_dimension_identity(n: int, d: int) -> bool:
    """dim W_lam equals the direct sum of juxtaposed permutation modules
    over pairs (mu, nu) with mu - nu = lam."""
    ctx = SpWeightContext(n, d)
    for lam in ctx.weights():
        expected = 0
        for r in range(d + 1):
            s = d - r
            for mu in compositions(r, n):
                for nu in compositions(s, n):
                    if tuple(m - v for m, v in zip(mu, nu)) == lam:
                        expected += multinomial(mu + nu)
        if expected != len(ctx.basis(lam)):
            return False
    return True


def mixed_weight_dimension_identity(n: int, r: int, s: int) -> bool:
    """dim V^{r,s}_lam equals the sum of products of permutation module
    dimensions over pairs (mu, nu) with mu - nu = lam."""
    space = mixed_tensor_space(n, r, s)
    dims: dict = {}
    for w in space.basis:
        lam = word_weight(w, n)
        dims[lam] = dims.get(lam, 0) + 1
    for lam, dim in dims.items():
        expected = 0
        for mu in compositions(r, n):
            for nu in compositions(s, n):
                if tuple(m - v for m, v in zip(mu, nu)) == lam:
                    expected += multinomial(mu) * multinomial(nu)
        if expected != dim:
            return False
    return True
