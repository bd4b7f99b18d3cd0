"""Machine verification of the diagrammatic relation families.

Each suite enumerates every relation instance inside the given label
bounds, evaluates both sides exactly, and reports PASS/FAIL per instance
with a witness difference matrix on failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import compositions
from .exact import LinMap, binomial
from .spiders import (Cross, Id, LadderE, LadderF, Merge, Split,
                      SpiderDiagram, SpiderExpr, evaluate)
from .tabloids import (TabloidMorphism, identity_morphism, lowering_op,
                       raising_op)


@dataclass
class RelationInstance:
    relation: str
    params: dict
    passed: bool
    witness: LinMap | None = None

    def key(self):
        return (self.relation, tuple(sorted(self.params.items())))


@dataclass
class RelationReport:
    suite: str
    instances: list[RelationInstance] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(inst.passed for inst in self.instances)

    @property
    def failures(self):
        return [inst for inst in self.instances if not inst.passed]

    def summary(self) -> str:
        n = len(self.instances)
        bad = len(self.failures)
        status = "PASS" if bad == 0 else "FAIL"
        return f"{status} suite={self.suite} instances={n} failures={bad}"


def _check(report, name, params, lhs: TabloidMorphism, rhs: TabloidMorphism):
    diff = lhs.map - rhs.map
    report.instances.append(RelationInstance(
        name, params, diff.is_zero(), None if diff.is_zero() else diff))


def _expr(bottom, *layers):
    return SpiderExpr.from_diagram(SpiderDiagram(bottom, layers))


# ---------------------------------------------------------------------------
# spider relations (merge/split/cross families)


def perm_suite(max_label: int) -> RelationReport:
    """Relations of the spider presentation for all strand labels <= max_label."""
    report = RelationReport(f"perm(max={max_label})")
    rng = range(0, max_label + 1)
    pw = range(1, max_label + 1)

    for k in rng:
        for l in rng:
            for m in rng:
                lhs = _expr((k, l, m), (Merge(k, l), Id(m)), (Merge(k + l, m),))
                rhs = _expr((k, l, m), (Id(k), Merge(l, m)), (Merge(k, l + m),))
                _check(report, "merge-associativity", {"k": k, "l": l, "m": m},
                       evaluate(lhs), evaluate(rhs))

                lhs = _expr((k + l + m,), (Split(k + l, m),), (Split(k, l), Id(m)))
                rhs = _expr((k + l + m,), (Split(k, l + m),), (Id(k), Split(l, m)))
                _check(report, "split-coassociativity", {"k": k, "l": l, "m": m},
                       evaluate(lhs), evaluate(rhs))

    for k in rng:
        for l in rng:
            lhs = evaluate(_expr((k + l,), (Split(k, l),), (Merge(k, l),)))
            rhs = identity_morphism((k + l,)).scale(binomial(k + l, l))
            _check(report, "bigon", {"k": k, "l": l}, lhs, rhs)

    for k in rng:
        for l in rng:
            for r in pw:
                for s in pw:
                    lhs = _expr((k, l), LadderF(1, s), LadderE(1, r))
                    rhs = None
                    for t in range(0, min(r, s) + 1):
                        term = _expr((k, l), LadderE(1, r - t),
                                     LadderF(1, s - t)).scale(
                                         binomial(k - l + r - s, t))
                        rhs = term if rhs is None else rhs + term
                    _check(report, "ladder-commute",
                           {"k": k, "l": l, "r": r, "s": s},
                           evaluate(lhs), evaluate(rhs))

    for k in rng:
        for l in rng:
            for r in pw:
                for s in pw:
                    lhs = evaluate(_expr((k, l), LadderF(1, s), LadderF(1, r)))
                    rhs = evaluate(_expr((k, l), LadderF(1, r + s))).scale(
                        binomial(r + s, r))
                    _check(report, "band-lower", {"k": k, "l": l, "r": r, "s": s},
                           lhs, rhs)
                    lhs = evaluate(_expr((k, l), LadderE(1, s), LadderE(1, r)))
                    rhs = evaluate(_expr((k, l), LadderE(1, r + s))).scale(
                        binomial(r + s, r))
                    _check(report, "band-raise", {"k": k, "l": l, "r": r, "s": s},
                           lhs, rhs)

    for k in rng:
        for l in rng:
            for m in rng:
                r1 = _expr((k, l, m),
                           (Id(k), Cross(l, m)),
                           (Cross(k, m), Id(l)),
                           (Id(m), Merge(k, l)))
                r2 = _expr((k, l, m), (Merge(k, l), Id(m)), (Cross(k + l, m),))
                _check(report, "cross-merge-slide", {"k": k, "l": l, "m": m},
                       evaluate(r1), evaluate(r2))

                r1 = _expr((k + l, m),
                           (Split(k, l), Id(m)),
                           (Id(k), Cross(l, m)),
                           (Cross(k, m), Id(l)))
                r2 = _expr((k + l, m), (Cross(k + l, m),), (Id(m), Split(k, l)))
                _check(report, "cross-split-slide", {"k": k, "l": l, "m": m},
                       evaluate(r1), evaluate(r2))

    for k in rng:
        for l in rng:
            lhs = evaluate(_expr((k, l), (Cross(k, l),), (Merge(l, k),)))
            rhs = evaluate(_expr((k, l), (Merge(k, l),)))
            _check(report, "vertex-reflect-merge", {"k": k, "l": l}, lhs, rhs)

            lhs = evaluate(_expr((k + l,), (Split(l, k),), (Cross(l, k),)))
            rhs = evaluate(_expr((k + l,), (Split(k, l),)))
            _check(report, "vertex-reflect-split", {"k": k, "l": l}, lhs, rhs)

    return report


# ---------------------------------------------------------------------------
# ladder relations on weight spaces


def _e(shape, i, r=1):
    return raising_op(shape, i, r)


def _f(shape, i, r=1):
    return lowering_op(shape, i, r)


def _shifted(shape, i, r):
    out = list(shape)
    out[i - 1] += r
    out[i] -= r
    return tuple(out)


def gl_suite(n_max: int, d_max: int, r_max: int = 4) -> RelationReport:
    """Divided-power ladder relations for all weights with at most n_max
    parts and degree at most d_max."""
    report = RelationReport(f"gl(n<={n_max},d<={d_max})")
    for n in range(2, n_max + 1):
        for d in range(0, d_max + 1):
            for lam in compositions(d, n):
                _gl_relations_at(report, lam, r_max)
    return report


def _gl_relations_at(report, lam, r_max):
    n = len(lam)
    pw = range(1, r_max + 1)

    for i in range(1, n):
        # E^(r) F^(s) = sum_t C(lam_i - lam_{i+1} + r - s, t) F^(s-t) E^(r-t)
        for r in pw:
            for s in pw:
                nu = _shifted(lam, i, -s)
                lhs = _e(nu, i, r) @ _f(lam, i, s)
                rhs = None
                for t in range(0, min(r, s) + 1):
                    mu = _shifted(lam, i, r - t)
                    term = (_f(mu, i, s - t) @ _e(lam, i, r - t)).scale(
                        binomial(lam[i - 1] - lam[i] + r - s, t))
                    rhs = term if rhs is None else rhs + term
                _check(report, "divided-EF", {"lam": lam, "i": i, "r": r, "s": s},
                       lhs, rhs)

        # E^(s) E^(r) = C(r+s, r) E^(r+s), and the F mirror
        for r in pw:
            for s in pw:
                mid = _shifted(lam, i, r)
                lhs = _e(mid, i, s) @ _e(lam, i, r)
                rhs = _e(lam, i, r + s).scale(binomial(r + s, r))
                _check(report, "divided-EE", {"lam": lam, "i": i, "r": r, "s": s},
                       lhs, rhs)
                mid = _shifted(lam, i, -r)
                lhs = _f(mid, i, s) @ _f(lam, i, r)
                rhs = _f(lam, i, r + s).scale(binomial(r + s, r))
                _check(report, "divided-FF", {"lam": lam, "i": i, "r": r, "s": s},
                       lhs, rhs)

    # distinct-index commutations
    for i in range(1, n):
        for j in range(1, n):
            if i == j:
                continue
            for r in (1, 2):
                for s in (1, 2):
                    nu = _shifted(lam, j, -s)
                    lhs = _e(nu, i, r) @ _f(lam, j, s)
                    mu = _shifted(lam, i, r)
                    rhs = _f(mu, j, s) @ _e(lam, i, r)
                    _check(report, "EF-disjoint",
                           {"lam": lam, "i": i, "j": j, "r": r, "s": s}, lhs, rhs)
            if abs(i - j) > 1:
                for r in (1, 2):
                    for s in (1, 2):
                        nu = _shifted(lam, j, s)
                        lhs = _e(nu, i, r) @ _e(lam, j, s)
                        mu = _shifted(lam, i, r)
                        rhs = _e(mu, j, s) @ _e(lam, i, r)
                        _check(report, "EE-distant",
                               {"lam": lam, "i": i, "j": j, "r": r, "s": s},
                               lhs, rhs)
                        nu = _shifted(lam, j, -s)
                        lhs = _f(nu, i, r) @ _f(lam, j, s)
                        mu = _shifted(lam, i, -r)
                        rhs = _f(mu, j, s) @ _f(lam, i, r)
                        _check(report, "FF-distant",
                               {"lam": lam, "i": i, "j": j, "r": r, "s": s},
                               lhs, rhs)

    # Serre: E_i E_j E_i = E_i^(2) E_j + E_j E_i^(2) for |i-j| = 1 (and F)
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) != 1:
                continue
            a = _shifted(lam, i, 1)
            b = _shifted(a, j, 1)
            lhs = _e(b, i) @ _e(a, j) @ _e(lam, i)
            c2 = _shifted(lam, i, 2)
            t1 = _e(c2, j) @ _e(lam, i, 2)
            cj = _shifted(lam, j, 1)
            t2 = _e(cj, i, 2) @ _e(lam, j)
            _check(report, "serre-E", {"lam": lam, "i": i, "j": j},
                   lhs, t1 + t2)

            a = _shifted(lam, i, -1)
            b = _shifted(a, j, -1)
            lhs = _f(b, i) @ _f(a, j) @ _f(lam, i)
            c2 = _shifted(lam, i, -2)
            t1 = _f(c2, j) @ _f(lam, i, 2)
            cj = _shifted(lam, j, -1)
            t2 = _f(cj, i, 2) @ _f(lam, j)
            _check(report, "serre-F", {"lam": lam, "i": i, "j": j},
                   lhs, t1 + t2)
