"""Exact rational scalars and sparse linear maps between labelled bases.

Everything downstream evaluates into :class:`LinMap`.  Scalars are stdlib
``fractions.Fraction`` values: always in lowest terms, positive denominator,
no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import BoundaryError, DomainError

Rational = Fraction


def rat(p, q=1) -> Fraction:
    """Exact rational p/q."""
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def binomial(m: int, t: int) -> int:
    """Generalized binomial coefficient: m may be any integer, t >= 0."""
    if t < 0:
        return 0
    num = 1
    for i in range(t):
        num *= m - i
    den = 1
    for i in range(2, t + 1):
        den *= i
    q, r = divmod(num, den)
    assert r == 0
    return q


class LinMap:
    """Sparse exact matrix between two labelled bases.

    Entries are stored as a dict ``(row, col) -> Fraction`` with no zeros.
    Labels are structural strings derived from the basis-enumeration
    parameters, so mismatches are detectable and serialization is stable.
    Instances are treated as immutable after construction.
    """

    __slots__ = ("domain_label", "codomain_label", "rows", "cols", "entries")

    def __init__(self, domain_label: str, codomain_label: str,
                 rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise DomainError("negative matrix dimensions")
        self.domain_label = domain_label
        self.codomain_label = codomain_label
        self.rows = rows
        self.cols = cols
        clean = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise DomainError(f"entry ({r},{c}) outside {rows}x{cols}")
                v = Fraction(v)
                if v:
                    clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def zero(cls, domain_label, codomain_label, rows, cols):
        return cls(domain_label, codomain_label, rows, cols, {})

    @classmethod
    def identity(cls, label, n):
        return cls(label, label, n, n, {(i, i): Fraction(1) for i in range(n)})

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.domain_label == other.domain_label
                and self.codomain_label == other.codomain_label
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.domain_label, self.codomain_label, self.rows,
                     self.cols, tuple(sorted(self.entries.items()))))

    def __repr__(self):
        return (f"LinMap({self.domain_label!r} -> {self.codomain_label!r}, "
                f"{self.rows}x{self.cols}, {len(self.entries)} entries)")

    def __getitem__(self, rc):
        return self.entries.get(rc, Fraction(0))

    def transpose(self) -> "LinMap":
        return LinMap(self.codomain_label, self.domain_label, self.cols,
                      self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def add(self, other: "LinMap") -> "LinMap":
        if (self.domain_label != other.domain_label
                or self.codomain_label != other.codomain_label):
            raise BoundaryError(
                f"cannot add {self.domain_label}->{self.codomain_label} "
                f"and {other.domain_label}->{other.codomain_label}")
        out = dict(self.entries)
        for k, v in other.entries.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return LinMap(self.domain_label, self.codomain_label,
                      self.rows, self.cols, out)

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.add(other.scale(-1))

    def scale(self, a) -> "LinMap":
        a = Fraction(a)
        if not a:
            return LinMap.zero(self.domain_label, self.codomain_label,
                               self.rows, self.cols)
        return LinMap(self.domain_label, self.codomain_label, self.rows,
                      self.cols, {k: a * v for k, v in self.entries.items()})

    def __rmul__(self, a):
        return self.scale(a)

    def dense(self):
        """Row-major list of lists (small matrices only)."""
        m = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            m[r][c] = v
        return m


def compose(f: LinMap, g: LinMap) -> LinMap:
    """Matrix product f.g  (g applied first)."""
    if f.domain_label != g.codomain_label:
        raise BoundaryError(
            f"compose: domain {f.domain_label!r} != codomain {g.codomain_label!r}")
    # group f's entries by column once; walk g's entries
    by_col: dict[int, list] = {}
    for (r, c), v in f.entries.items():
        by_col.setdefault(c, []).append((r, v))
    out: dict[tuple[int, int], Fraction] = {}
    for (k, c), gv in g.entries.items():
        for r, fv in by_col.get(k, ()):
            key = (r, c)
            w = out.get(key, 0) + fv * gv
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return LinMap(g.domain_label, f.codomain_label, f.rows, g.cols, out)


def tensor(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product; pair bases ordered with f's index major."""
    out = {}
    for (rf, cf), vf in f.entries.items():
        for (rg, cg), vg in g.entries.items():
            out[(rf * g.rows + rg, cf * g.cols + cg)] = vf * vg
    return LinMap(f"{f.domain_label}(x){g.domain_label}",
                  f"{f.codomain_label}(x){g.codomain_label}",
                  f.rows * g.rows, f.cols * g.cols, out)


def rank(f: LinMap) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination."""
    if not f.entries:
        return 0
    # clear denominators row by row; scaling rows preserves rank
    rows_idx = sorted({r for (r, _) in f.entries})
    mat = []
    for r in rows_idx:
        row = {c: v for (rr, c), v in f.entries.items() if rr == r}
        lcm = 1
        for v in row.values():
            lcm = lcm * v.denominator // gcd(lcm, v.denominator)
        mat.append([int(row.get(c, Fraction(0)) * lcm) for c in range(f.cols)])
    return _bareiss_rank(mat)


def _bareiss_rank(mat) -> int:
    """Integer Bareiss elimination; consumes its argument."""
    nrows = len(mat)
    if nrows == 0:
        return 0
    ncols = len(mat[0])
    prev = 1
    rk = 0
    pr = 0
    for pc in range(ncols):
        piv = None
        for i in range(pr, nrows):
            if mat[i][pc]:
                piv = i
                break
        if piv is None:
            continue
        mat[pr], mat[piv] = mat[piv], mat[pr]
        p = mat[pr][pc]
        for i in range(pr + 1, nrows):
            mi = mat[i]
            mp = mat[pr]
            c0 = mi[pc]
            # update every lower row (even c0 == 0) so divisions stay exact
            for j in range(pc, ncols):
                mi[j] = (p * mi[j] - c0 * mp[j]) // prev
        prev = p
        pr += 1
        rk += 1
        if pr == nrows:
            break
    return rk


class SpanAccumulator:
    """Incremental rank of a set of sparse rational rows.

    Rows are dicts column -> Fraction.  ``add`` reduces the row against the
    pivots seen so far and returns True when the rank grew.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def add(self, row) -> bool:
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                inv = row[c]
                self.pivots[c] = {cc: v / inv for cc, v in row.items()}
                return True
            factor = row[c]
            for cc, v in piv.items():
                w = row.get(cc, 0) - factor * v
                if w:
                    row[cc] = w
                else:
                    row.pop(cc, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _vectorize(f: LinMap) -> dict[int, Fraction]:
    return {r * f.cols + c: v for (r, c), v in f.entries.items()}


def span_dimension(maps) -> int:
    """Dimension of the span of a family of same-shaped linear maps."""
    acc = SpanAccumulator()
    for f in maps:
        acc.add(_vectorize(f))
    return acc.rank


def hom_space_dimension(source_ops, target_ops) -> int:
    """dim { X : X a_i = b_i X } for paired operator lists.

    ``source_ops[i]`` acts on the domain, ``target_ops[i]`` on the codomain;
    X runs over all codomain x domain matrices.
    """
    if len(source_ops) != len(target_ops):
        raise DomainError("operator lists must pair up")
    if not source_ops:
        raise DomainError("need at least one operator pair (or use dimensions directly)")
    n = source_ops[0].rows
    m = target_ops[0].rows
    for a in source_ops:
        if a.rows != n or a.cols != n or a.domain_label != a.codomain_label:
            raise BoundaryError("source operators must be square on a common space")
    for b in target_ops:
        if b.rows != m or b.cols != m or b.domain_label != b.codomain_label:
            raise BoundaryError("target operators must be square on a common space")
    # unknowns X[p][q], p < m, q < n; constraint rows indexed by (op, i, j):
    #   sum_q X[i][q] a[q][j] - sum_p b[i][p] X[p][j] = 0
    acc = SpanAccumulator()
    for a, b in zip(source_ops, target_ops):
        a_by_col: dict[int, list] = {}
        for (q, j), v in a.entries.items():
            a_by_col.setdefault(j, []).append((q, v))
        b_by_row: dict[int, list] = {}
        for (i, p), v in b.entries.items():
            b_by_row.setdefault(i, []).append((p, v))
        for i in range(m):
            for j in range(n):
                row: dict[int, Fraction] = {}
                for q, v in a_by_col.get(j, ()):
                    key = i * n + q
                    row[key] = row.get(key, 0) + v
                for p, v in b_by_row.get(i, ()):
                    key = p * n + j
                    row[key] = row.get(key, 0) - v
                row = {k: v for k, v in row.items() if v}
                if row:
                    acc.add(row)
    return m * n - acc.rank


def commutant_dimension(ops, dim: int | None = None) -> int:
    """dim { X : X.op = op.X for all ops } on a common n-dim space.

    For an empty list the commutant is everything, so the space dimension
    must be supplied.
    """
    ops = list(ops)
    if not ops:
        if dim is None:
            raise DomainError("empty operator list needs an explicit dimension")
        return dim * dim
    label = ops[0].domain_label
    for op in ops:
        if op.domain_label != label or op.codomain_label != label:
            raise BoundaryError("commutant operators must share one labelled space")
        if op.rows != op.cols:
            raise BoundaryError("commutant operators must be square")
    return hom_space_dimension(ops, ops)


def linmap_to_json(f: LinMap) -> dict:
    """JSON form with entries sorted by (row, col) and exact string scalars."""
    return {
        "domain": f.domain_label,
        "codomain": f.codomain_label,
        "rows": f.rows,
        "cols": f.cols,
        "entries": [[r, c, format_rational(v)]
                    for (r, c), v in sorted(f.entries.items())],
    }


def linmap_from_json(obj: dict) -> LinMap:
    entries = {(r, c): parse_rational(s) for r, c, s in obj["entries"]}
    return LinMap(obj["domain"], obj["codomain"], obj["rows"], obj["cols"], entries)
