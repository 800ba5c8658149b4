"""Batch verification checks shared by the test suite and the CLI.

Each check_* function returns a dict with at least {"ok": bool}; extra
keys carry counts or a first-failure description.  The checks mirror
the package's headline guarantees at desk scale.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .combinatorics import (
    Partition,
    Tableau,
    all_permutations,
    descent_set,
    dkt_edges,
    partitions_of,
    rsk,
    syt_enumerate,
    two_row_partitions,
    y_tableau,
)
from .exact_arith import L_ONE, R_ONE, R_ZERO, RationalFn, quantum_int
from .hecke_core import bar_element, cells_regular, kl_lower, kl_upper
from .linalg import mat_mul, mat_transpose
from .nonstandard import (
    NsIrredLabel,
    SPECIALIZATION_LADDER,
    TensorModule,
    _restricted_generators,
    build_irreducible,
    certify_irreducible,
    closure_check,
    commutant_dimension,
    dimension_formula,
    epsilon_minus_vector,
    epsilon_plus_vector,
    flatten,
    hom_dimension,
    nonstandard_dimension_oracle,
    ns_labels,
    p_action,
    q_element,
)
from .seminormal import (
    SeminormalChainLabel,
    alpha,
    chain_membership,
    seminormal_basis,
    seminormal_table,
)
from .specht_modules import build_specht, projected_basis

TWO = RationalFn(quantum_int(2))
FOUR = TWO * TWO


def _tab(s: str) -> Tableau:
    return Tableau([[int(ch) for ch in part] for part in s.split("/")])


def _fail(msg) -> dict:
    return {"ok": False, "detail": str(msg)}


# -- 1: canonical basis characterization ------------------------------


def check_kl(r: int) -> dict:
    checked = 0
    for w in all_permutations(r):
        for elem, sign in ((kl_lower(w), -1), (kl_upper(w), 1)):
            if bar_element(elem) != elem:
                return _fail(f"not bar-invariant at {w}")
            for x, c in elem.coords.items():
                p = c.as_laurent()
                if p is None:
                    return _fail(f"non-polynomial coefficient at {w}")
                if x == w:
                    if p != L_ONE:
                        return _fail(f"diagonal coefficient != 1 at {w}")
                elif sign < 0 and p.max_exp() > -1:
                    return _fail(f"lattice congruence fails at {w}")
                elif sign > 0 and p.min_exp() < 1:
                    return _fail(f"lattice congruence fails at {w}")
            checked += 1
    return {"ok": True, "elements": checked}


# -- 2: cells against RSK fibers --------------------------------------


def check_cells(r: int) -> dict:
    by_p_upper, by_p_lower = {}, {}
    for w in all_permutations(r):
        P, _ = rsk(w.word)
        by_p_upper.setdefault(P, set()).add(w)
        by_p_lower.setdefault(P.transpose(), set()).add(w)
    for tag, fibers in (("upper", by_p_upper), ("lower", by_p_lower)):
        got = set(cells_regular(r, tag).as_label_sets())
        want = {frozenset(v) for v in fibers.values()}
        if got != want:
            return _fail(f"{tag} cells disagree with insertion fibers")
    return {"ok": True, "cells": len(by_p_upper)}


# -- 3: the (3,2) pictures --------------------------------------------

FIG_VERTICES = ["123/45", "124/35", "134/25", "135/24", "125/34"]
FIG_LOWER = [{1, 2, 4}, {1, 3}, {2, 3}, {2, 4}, {1, 3, 4}]
FIG_UPPER = [{3}, {2, 4}, {1, 4}, {1, 3}, {2}]
FIG_MU_EDGES = {
    frozenset({"123/45", "124/35"}),
    frozenset({"124/35", "134/25"}),
    frozenset({"134/25", "135/24"}),
    frozenset({"135/24", "125/34"}),
    frozenset({"123/45", "135/24"}),
    frozenset({"124/35", "125/34"}),
}
FIG_DE_EDGES = {
    ("123/45", "124/35", 3),
    ("123/45", "124/35", 4),
    ("124/35", "134/25", 2),
    ("134/25", "135/24", 4),
    ("125/34", "135/24", 2),
    ("125/34", "135/24", 3),
}


def check_figures() -> dict:
    lam = Partition([3, 2])
    for s, lo, up in zip(FIG_VERTICES, FIG_LOWER, FIG_UPPER):
        Q = _tab(s)
        if descent_set(Q, "lower") != frozenset(lo):
            return _fail(f"lower descent row differs at {s}")
        if descent_set(Q, "upper") != frozenset(up):
            return _fail(f"upper descent row differs at {s}")
    m = build_specht(lam)
    got_mu = {
        frozenset({str(a), str(b)}): v for (a, b), v in m.mu_table.items()
    }
    if set(got_mu) != FIG_MU_EDGES:
        return _fail("mu-edge set differs from the five-vertex picture")
    if any(v != 1 for v in got_mu.values()):
        return _fail("a mu edge is not 1")
    got_de = {
        tuple(sorted((str(a), str(b)))) + (i,)
        for a, b, i in dkt_edges(lam).edges
    }
    if got_de != FIG_DE_EDGES:
        return _fail("dual-equivalence edges differ")
    return {"ok": True, "mu_edges": len(got_mu), "de_edges": len(got_de)}


# -- 4: dual equivalence forces mu = 1 --------------------------------


def check_dkt_mu(n: int) -> dict:
    checked = 0
    for r in range(2, n + 1):
        for lam in partitions_of(r):
            m = build_specht(lam)
            for (a, b), v in m.mu_table.items():
                if v <= 0:
                    return _fail(f"nonpositive mu at {lam}")
            for a, b, _ in dkt_edges(lam).edges:
                if m.mu(a, b) != 1 or m.mu(b, a) != 1:
                    return _fail(f"DE edge without mu=1 in {lam}")
                checked += 1
    return {"ok": True, "de_edges": checked}


# -- 5: transition matrices -------------------------------------------


def check_transition(n: int) -> dict:
    shapes = 0
    for r in range(2, n + 1):
        for lam in partitions_of(r):
            m = build_specht(lam)
            for M in (m.transition, m.transition_inv):
                for row in M:
                    for x in row:
                        if x and (x.val0() < 0 or x.val_inf() < 0):
                            return _fail(f"entry outside K0^Kinf for {lam}")
            X = m.transition
            for a in range(m.dim):
                for b in range(m.dim):
                    d = X[a][b] - (R_ONE if a == b else R_ZERO)
                    if d and (d.val0() < 1 or d.val_inf() < 1):
                        return _fail(f"not identity at 0/inf for {lam}")
            shapes += 1
    return {"ok": True, "shapes": shapes}


# -- 6: projected bases -----------------------------------------------


def check_projected(n: int) -> dict:
    shapes = 0
    for r in range(2, n + 1):
        for lam in partitions_of(r):
            m = build_specht(lam)
            children = [c for c, _, _, _ in m.branching]
            for a in range(len(children)):
                for b in range(a + 1, len(children)):
                    if not children[a].dominates(children[b]):
                        return _fail(f"cell order violated for {lam}")
            for which in ("lower", "upper"):
                for q, vec in projected_basis(lam, which):
                    sh_q = m.restriction_shape(q)
                    for qp in m.basis:
                        x = vec[m.index[qp]]
                        if qp == q:
                            if x != R_ONE:
                                return _fail(f"diagonal != 1 for {lam}")
                        elif x:
                            sh_qp = m.restriction_shape(qp)
                            good = (
                                sh_qp.dominates(sh_q)
                                if which == "lower"
                                else sh_q.dominates(sh_qp)
                            )
                            if sh_qp == sh_q or not good:
                                return _fail(f"triangularity fails {lam}")
                            if x.val0() < 1 or x.val_inf() < 1:
                                return _fail(f"valuation fails for {lam}")
            shapes += 1
    return {"ok": True, "shapes": shapes}


# -- 7: closed action formulas ----------------------------------------


def check_action_formula() -> dict:
    shapes = two_row_partitions(4)
    checked = 0
    for lam in shapes:
        for mu in shapes:
            tm = TensorModule(lam, mu)
            for pair in ("ll", "ul", "uu"):
                for i in range(1, 4):
                    for a in range(tm.left.dim):
                        for b in range(tm.right.dim):
                            c = [
                                [R_ZERO] * tm.right.dim
                                for _ in range(tm.left.dim)
                            ]
                            c[a][b] = R_ONE
                            if p_action(tm, c, i, pair) != tm.p_apply(
                                c, i, pair
                            ):
                                return _fail(
                                    f"case formula differs at "
                                    f"{lam},{mu},{pair},s_{i}"
                                )
                            checked += 1
    return {"ok": True, "matrix_columns": checked}


# -- 8: the one-dimensional (co)invariants and the antipode -----------


def check_epsilon_antipode() -> dict:
    from .nonstandard import antipode_check

    for r in range(2, 5):
        for lam in partitions_of(r):
            tm = TensorModule(lam, lam)
            eps = epsilon_plus_vector(lam)
            for i in range(1, r):
                got = tm.p_apply(eps, i, "ll")
                want = [[FOUR * x for x in row] for row in eps]
                if got != want:
                    return _fail(f"plus vector not an eigenvector: {lam}")
                if any(
                    x != R_ZERO
                    for row in q_element(tm, eps, i, "ll")
                    for x in row
                ):
                    return _fail(f"plus vector not Q-killed: {lam}")
            lamc = lam.conjugate()
            tmc = TensorModule(lamc, lam)
            em = epsilon_minus_vector(lam)
            for i in range(1, r):
                if any(
                    x != R_ZERO
                    for row in tmc.p_apply(em, i, "ll")
                    for x in row
                ):
                    return _fail(f"minus vector not annihilated: {lam}")
    words = [[1], [2], [3], [1, 2], [2, 1], [1, 3]]
    for word in words:
        if not antipode_check(word, r=4):
            return _fail(f"antipode identity fails on word {word}")
    return {"ok": True, "antipode_words": len(words)}


# -- 9: irreducibility certificates -----------------------------------


def check_certification(r: int) -> dict:
    labels = ns_labels(r)
    mods = []
    for label in labels:
        mod = build_irreducible(label, r)
        if mod.dim != label.dimension(r):
            return _fail(f"dimension mismatch for {label}")
        if not closure_check(mod):
            return _fail(f"not generator-closed: {label}")
        for u0 in SPECIALIZATION_LADDER[:2]:
            if certify_irreducible(mod, u0) != 1:
                return _fail(f"commutant not a line for {label} at {u0}")
        mods.append(mod)
    # each tensor square tiles as symmetric + wedge + eigenline
    for lam in two_row_partitions(r):
        if lam.length != 2 or lam == Partition([1, 1]):
            continue
        f = build_specht(lam).dim
        s = NsIrredLabel("plus", (lam,)).dimension(r)
        w = NsIrredLabel("minus", (lam,)).dimension(r)
        if s + w + 1 != f * f:
            return _fail(f"square of {lam} does not tile: {s}+{w}+1")
    squares = sum(lbl.dimension(r) ** 2 for lbl in labels)
    if squares != dimension_formula(r):
        return _fail("sum of squared dimensions misses the formula")
    # pairwise inequivalence at two specializations
    for u0 in SPECIALIZATION_LADDER[:2]:
        gens = [_restricted_generators(m, u0) for m in mods]
        for a in range(len(mods)):
            for b in range(a + 1, len(mods)):
                if (
                    hom_dimension(
                        gens[a], mods[a].dim, gens[b], mods[b].dim
                    )
                    != 0
                ):
                    return _fail(
                        f"nonzero intertwiner {labels[a]} -> {labels[b]}"
                    )
    return {"ok": True, "labels": len(labels)}


# -- 10: branching ----------------------------------------------------


def expected_restriction(label: NsIrredLabel, r: int) -> Counter:
    """Restriction multiset predicted by the branching rules: tensor
    pairs restrict factorwise, symmetric/wedge parts restrict to their
    own kind plus cross pairs (plus one eps on the symmetric side when
    the shape has two removable cells), and the eigenline persists."""

    def down(shape):
        return [
            shape.remove_corner(i) for i in range(len(shape.corners()))
        ]

    def signed(kind, shape):
        lab = NsIrredLabel(kind, (shape,))
        return Counter({lab: 1}) if lab.dimension(shape.size) else Counter()

    out = Counter()
    if label.kind == "eps_plus":
        out[NsIrredLabel("eps_plus")] = 1
        return out
    if label.kind == "pair":
        lam, mu = label.shapes
        for nu in down(lam):
            for rho in down(mu):
                if nu != rho:
                    out[NsIrredLabel("pair", (nu, rho))] += 1
                else:
                    out += signed("plus", nu) + signed("minus", nu)
                    out[NsIrredLabel("eps_plus")] += 1
        return out
    lam = label.shapes[0]
    children = down(lam)
    for a in range(len(children)):
        for b in range(a + 1, len(children)):
            out[NsIrredLabel("pair", (children[a], children[b]))] += 1
    for nu in children:
        out += signed(label.kind, nu)
    if label.kind == "plus" and len(children) == 2:
        out[NsIrredLabel("eps_plus")] += 1
    return out


def check_branching(r: int) -> dict:
    for label in ns_labels(r):
        mod = build_irreducible(label, r)
        from .nonstandard import restriction_decompose

        got = restriction_decompose(mod)
        want = expected_restriction(label, r)
        if got != want:
            return _fail(f"restriction of {label}: {got} != {want}")
    return {"ok": True, "labels": len(ns_labels(r))}


# -- 11: dimension formula vs oracle ----------------------------------


def check_dimension(rs=(2, 3, 4), u0: Fraction | None = None) -> dict:
    values = {}
    for r in rs:
        formula = dimension_formula(r)
        oracle = nonstandard_dimension_oracle(
            r, **({"u0": u0} if u0 is not None else {})
        )
        if formula != oracle:
            return _fail(f"r={r}: formula {formula} != oracle {oracle}")
        values[r] = formula
    return {"ok": True, "values": values}


# -- 12: seminormal bases ---------------------------------------------

SEM_ORDER = ["123/45", "124/35", "134/25", "125/34", "135/24"]
SEM_LEVEL5 = [
    ["+3,2", "+3,2", "+3,2", "+3,2", "+3,2"],
    ["-3,2", "+3,2", "+3,2", "+3,2", "+3,2"],
    ["-3,2", "-3,2", "+3,2", "+3,2", "+3,2"],
    ["-3,2", "-3,2", "-3,2", "+3,2", "+3,2"],
    ["-3,2", "-3,2", "-3,2", "-3,2", "eps+"],
]
SEM_LEVEL4 = [
    ["+3,1", "+3,1", "+3,1", "3,1:2,2", "3,1:2,2"],
    ["-3,1", "+3,1", "+3,1", "3,1:2,2", "3,1:2,2"],
    ["-3,1", "-3,1", "eps+", "3,1:2,2", "3,1:2,2"],
    ["3,1:2,2", "3,1:2,2", "3,1:2,2", "+2,2", "+2,2"],
    ["3,1:2,2", "3,1:2,2", "3,1:2,2", "-2,2", "eps+"],
]


def check_seminormal() -> dict:
    lam = Partition([3, 2])
    Ts = syt_enumerate(lam)
    pos = {str(t): i for i, t in enumerate(Ts)}
    for level, frozen in ((5, SEM_LEVEL5), (4, SEM_LEVEL4)):
        table = seminormal_table(lam, lam, level)
        for a, ra in enumerate(SEM_ORDER):
            for b, rb in enumerate(SEM_ORDER):
                want = NsIrredLabel.parse(frozen[a][b])
                if table[pos[ra]][pos[rb]] != want:
                    return _fail(
                        f"level-{level} grid differs at ({ra},{rb})"
                    )
    sb = seminormal_basis(TensorModule(lam, lam))
    if sb.dim != 25:
        return _fail(f"leaf count {sb.dim} != 25")
    tops = [c.level(5) for c in sb.chains]
    counts = (
        tops.count(NsIrredLabel("plus", (lam,))),
        tops.count(NsIrredLabel("minus", (lam,))),
        tops.count(NsIrredLabel("eps_plus")),
    )
    if counts != (14, 10, 1):
        return _fail(f"top-level split {counts} != (14, 10, 1)")
    chains = {
        alpha(lam, lam, T, U) for T in Ts for U in Ts
    }
    if set(sb.chains) != chains or len(sb.chains) != len(set(sb.chains)):
        return _fail("leaf chains are not the alpha image")
    for idx in range(sb.dim):
        if not chain_membership(sb, idx):
            return _fail(f"membership fails for chain {sb.chains[idx]}")
    again = seminormal_basis(TensorModule(lam, lam))
    if again.vectors != sb.vectors or again.chains != sb.chains:
        return _fail("basis is not deterministic")
    return {"ok": True, "leaves": sb.dim}


# -- driver -----------------------------------------------------------


ACCEPTANCE_CHECKS = (
    ("kl-basis", lambda cfg: check_kl(min(cfg, 5))),
    ("cells-rsk", lambda cfg: check_cells(min(cfg, 5))),
    ("figures", lambda cfg: check_figures()),
    ("de-mu", lambda cfg: check_dkt_mu(min(cfg, 5))),
    ("transition", lambda cfg: check_transition(min(cfg, 5))),
    ("projected-basis", lambda cfg: check_projected(min(cfg, 5))),
    ("action-formula", lambda cfg: check_action_formula()),
    ("eps-antipode", lambda cfg: check_epsilon_antipode()),
    ("certification", lambda cfg: check_certification(min(cfg, 4))),
    ("branching", lambda cfg: check_branching(min(cfg, 4))),
    ("dimension", lambda cfg: check_dimension(tuple(range(2, min(cfg, 4) + 1)))),
    ("seminormal", lambda cfg: check_seminormal()),
)


def run_all(r_bound: int = 4) -> dict:
    """Run every acceptance check; returns name -> result dict."""
    return {name: fn(r_bound) for name, fn in ACCEPTANCE_CHECKS}
