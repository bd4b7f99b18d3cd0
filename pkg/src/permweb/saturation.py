"""Saturation checks and generator-word Hom-dimension tables.

A module given by its highest weights is saturated when every irreducible
whose full weight set lies inside the module's weight set already occurs.
The dimension tables compare the span of ladder-generator words between
permutation modules against contingency-matrix counts; their agreement is
the double-centralizer principle at the level of dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import (compositions, dominating_partition,
                            enumerate_contingency, gl_irrep_dimension,
                            gl_weights_of_irrep, schur_algebra_dimension)
from .errors import UnsupportedError
from .exact import LinMap, SpanAccumulator, _vectorize, compose
from .tabloids import lowering_op, raising_op


def module_weight_set(highest_weights, n: int) -> set:
    """Union of the irreducible weight sets over the listed highest weights."""
    out = set()
    for lam in highest_weights:
        out |= gl_weights_of_irrep(tuple(lam), n)
    return out


def is_saturated_gl(highest_weights, n: int):
    """(saturated?, witness): checks every dominant weight nu whose full
    irreducible weight set lies in the module's weights for membership in
    the highest-weight list; a failing nu is returned as witness."""
    for lam in highest_weights:
        if any(p < 0 for p in lam):
            raise UnsupportedError("only polynomial highest weights supported")
    hw = {dominating_partition(lam) for lam in highest_weights}
    weights = module_weight_set(highest_weights, n)
    dominants = {dominating_partition(mu) for mu in weights}
    for nu in sorted(dominants):
        nu_full = nu + (0,) * (n - len(nu))
        if gl_weights_of_irrep(nu, n) <= weights and nu not in hw:
            return False, nu_full
    return True, None


# ---------------------------------------------------------------------------
# the rank-2 demo: z = EF 1_0 + FE 1_0 - 4 . 1_0


@dataclass
class Sl2DemoReport:
    z_on_irreducible: LinMap
    z_on_saturated: LinMap
    annihilates_irreducible: bool
    annihilates_saturated: bool
    factor_weights: dict
    weights_of_module: set
    words_stay_inside: bool
    saturated_flag: bool
    witness: tuple | None

    def summary(self) -> str:
        return (f"z on V(2)_0: {'zero' if self.annihilates_irreducible else 'NONZERO'}; "
                f"z on (V(2)+V(0))_0: "
                f"{'zero' if self.annihilates_saturated else 'nonzero'}; "
                f"saturation of {{V(2)}}: "
                f"{'saturated' if self.saturated_flag else f'unsaturated, witness {self.witness}'}")


def sl2_doty_demo() -> Sl2DemoReport:
    """The weight-zero discriminator on the 3-dimensional irreducible.

    V(2) is realized on the basis f^0 v, f^1 v, f^2 v with
    E f^k = k(3-k) f^{k-1}, F f^k = f^{k+1}, weights (2, 0, -2).
    z acts by zero on the 0-weight space of V(2) but not on that of
    V(2) + V(0).
    """
    label3 = "sl2:V(2)"
    e3 = LinMap(label3, label3, 3, 3, {(0, 1): Fraction(2), (1, 2): Fraction(2)})
    f3 = LinMap(label3, label3, 3, 3, {(1, 0): Fraction(1), (2, 1): Fraction(1)})
    # weight-0 subspace of V(2) is index 1
    z3 = _z_restricted(e3, f3, [1], label3 + "@0")

    label4 = "sl2:V(2)+V(0)"
    e4 = LinMap(label4, label4, 4, 4, {(0, 1): Fraction(2), (1, 2): Fraction(2)})
    f4 = LinMap(label4, label4, 4, 4, {(1, 0): Fraction(1), (2, 1): Fraction(1)})
    z4 = _z_restricted(e4, f4, [1, 3], label4 + "@0")

    # each word of z passes only through weights of V(2) = {-2, 0, 2}
    factor_weights = {"EF": (0, -2, 0), "FE": (0, 2, 0), "1": (0,)}
    module_weights = {-2, 0, 2}
    inside = all(set(ws) <= module_weights for ws in factor_weights.values())

    # gl_2 encoding of the same weights: V(2) <-> (2,0), V(0) <-> (1,1)
    flag, witness = is_saturated_gl([(2, 0)], 2)

    return Sl2DemoReport(
        z_on_irreducible=z3,
        z_on_saturated=z4,
        annihilates_irreducible=z3.is_zero(),
        annihilates_saturated=z4.is_zero(),
        factor_weights=factor_weights,
        weights_of_module=module_weights,
        words_stay_inside=inside,
        saturated_flag=flag,
        witness=witness,
    )


def _z_restricted(e, f, zero_indices, label):
    """(EF + FE - 4) cut down to the weight-zero coordinates."""
    z = compose(e, f) + compose(f, e) + LinMap.identity(e.domain_label, e.rows).scale(-4)
    entries = {}
    pos = {i: p for p, i in enumerate(zero_indices)}
    for (r, c), v in z.entries.items():
        if r in pos and c in pos:
            entries[(pos[r], pos[c])] = v
    return LinMap(label, label, len(zero_indices), len(zero_indices), entries)


# ---------------------------------------------------------------------------
# generator-word Hom dimensions


@dataclass
class SchurDimRow:
    lam: tuple
    mu: tuple
    span_dim: int
    contingency_count: int

    @property
    def match(self) -> bool:
        return self.span_dim == self.contingency_count


@dataclass
class SchurDimTable:
    n: int
    d: int
    rows: list = field(default_factory=list)

    @property
    def total_span(self) -> int:
        return sum(r.span_dim for r in self.rows)

    @property
    def total_contingency(self) -> int:
        return sum(r.contingency_count for r in self.rows)

    @property
    def expected_total(self) -> int:
        return schur_algebra_dimension(self.n, self.d)

    @property
    def irrep_square_sum(self) -> int:
        from .combinatorics import partitions
        return sum(gl_irrep_dimension(lam, self.n) ** 2
                   for lam in partitions(self.d, self.n))

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows)

    def csv_rows(self):
        yield ("lam", "mu", "span_dim", "contingency_count", "match")
        for r in self.rows:
            yield (" ".join(map(str, r.lam)), " ".join(map(str, r.mu)),
                   r.span_dim, r.contingency_count, r.match)


def schur_block_dims(n: int, d: int, cap: int | None = None) -> SchurDimTable:
    """For each weight pair, the dimension of the span of ladder-generator
    words, grown to rank stabilization, against the contingency count.

    Words grow until a whole length step adds no rank anywhere; far weight
    pairs need up to d*(n-1) single steps, so a fixed small cap would
    truncate the span.
    """
    weights = list(compositions(d, n))
    if cap is None:
        cap = 2 * d * max(n - 1, 1) + 2
    table = SchurDimTable(n, d)
    spans = {lam: _span_from(lam, weights, cap) for lam in weights}
    for lam in weights:
        for mu in weights:
            span = spans[lam].get(mu, SpanAccumulator()).rank
            count = len(enumerate_contingency(lam, mu))
            table.rows.append(SchurDimRow(lam, mu, span, count))
    return table


def _generators_at(nu):
    n = len(nu)
    for i in range(1, n):
        yield raising_op(nu, i, 1)
        yield lowering_op(nu, i, 1)


def _span_from(lam, weights, cap):
    """BFS over generator words leaving lam; per-target rank accumulators."""
    accs: dict = {}
    from .tabloids import identity_morphism
    start = identity_morphism(tuple(lam))
    accs[tuple(lam)] = SpanAccumulator()
    accs[tuple(lam)].add(_vectorize(start.map))
    frontier = [start]
    length = 0
    while frontier and length < cap:
        new = []
        for m in frontier:
            nu = m.target
            if any(p < 0 for p in nu):
                continue
            for g in _generators_at(nu):
                prod = g @ m
                tgt = prod.target
                if any(p < 0 for p in tgt):
                    continue        # identities off the weight set are zero
                acc = accs.setdefault(tgt, SpanAccumulator())
                if acc.add(_vectorize(prod.map)):
                    new.append(prod)
        frontier = new
        length += 1
    return accs
