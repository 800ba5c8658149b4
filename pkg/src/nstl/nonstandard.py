"""Tensor products M_lambda (x) M_mu with the generators
P_s = C'_s (x) C'_s + C_s (x) C_s acting on them, the irreducible
modules they generate, epsilon_+/- embeddings and the trace map,
restriction decompositions, irreducibility certificates, and the
dimension formula with its spanning oracle.

Tensor vectors are stored as coefficient matrices c of size
f_lambda x f_mu over a basis pair; an operator A (x) B sends c to
A c B^T. Basis-pair tags: "ll" (lower (x) lower), "ul", "lu", "uu".
Two-row shapes have action matrices unchanged by the rank-2 quotient of
the Hecke algebra, so the same Specht matrices serve here.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .combinatorics import (
    Partition,
    Tableau,
    de_distance,
    descent_set,
    partitions_of,
    syt_count,
    two_row_partitions,
)
from .exact_arith import L_ONE, LaurentPoly, R_ONE, R_ZERO, RationalFn, quantum_int

R_HALF = RationalFn(L_ONE, LaurentPoly({0: 2}))
from .hecke_core import (
    HeckeElement,
    from_standard,
    kl_lower,
    kl_upper,
    multiply_standard,
    theta_element,
    to_standard,
)
from .linalg import (
    SpanBasis,
    SpanBasisModP,
    identity,
    mat_mul,
    mat_transpose,
    nullspace,
    rank,
    rref,
    solve,
)
from .specht_modules import build_specht, specialize_matrix

TWO = RationalFn(quantum_int(2))
FOUR = TWO * TWO


class StabilizationError(RuntimeError):
    """Spanning closure failed to stabilize within the safety bound."""


# ---------------------------------------------------------------------
# labels


@dataclass(frozen=True)
class NsIrredLabel:
    """Label of an irreducible: unordered pair {lam, mu}, +lam, -lam,
    or the one-dimensional eps+."""

    kind: str  # "pair" | "plus" | "minus" | "eps_plus"
    shapes: tuple = ()

    def __post_init__(self):
        if self.kind == "pair":
            lam, mu = self.shapes
            if lam == mu:
                raise ValueError("pair label requires distinct shapes")
            # store dominance-descending for a canonical form
            if not lam.dominates(mu):
                object.__setattr__(self, "shapes", (mu, lam))
        elif self.kind in ("plus", "minus"):
            if len(self.shapes) != 1:
                raise ValueError("signed label takes one shape")
        elif self.kind != "eps_plus":
            raise ValueError(f"unknown label kind {self.kind!r}")

    def __str__(self):
        if self.kind == "pair":
            return f"{self.shapes[0]}:{self.shapes[1]}"
        if self.kind == "plus":
            return f"+{self.shapes[0]}"
        if self.kind == "minus":
            return f"-{self.shapes[0]}"
        return "eps+"

    @classmethod
    def parse(cls, text: str) -> "NsIrredLabel":
        text = text.strip()
        if text == "eps+":
            return cls("eps_plus")
        if text.startswith("+"):
            return cls("plus", (Partition.parse(text[1:]),))
        if text.startswith("-"):
            return cls("minus", (Partition.parse(text[1:]),))
        if ":" in text:
            a, b = text.split(":")
            return cls("pair", (Partition.parse(a), Partition.parse(b)))
        raise ValueError(f"cannot parse label {text!r}")

    def dimension(self, r: int) -> int:
        if self.kind == "pair":
            return syt_count(self.shapes[0]) * syt_count(self.shapes[1])
        f = syt_count(self.shapes[0]) if self.shapes else 1
        if self.kind == "plus":
            return comb(f + 1, 2) - 1
        if self.kind == "minus":
            return comb(f, 2)
        return 1


def proper_two_row(r: int):
    """Two-row shapes that are neither a single row nor a single
    column."""
    return [
        lam
        for lam in two_row_partitions(r)
        if lam.length == 2 and lam != Partition([1, 1])
    ]


def ns_labels(r: int):
    """The index set of irreducibles at rank r."""
    out = []
    shapes = two_row_partitions(r)
    for lam, mu in itertools.combinations(shapes, 2):
        out.append(NsIrredLabel("pair", (lam, mu)))
    for lam in proper_two_row(r):
        out.append(NsIrredLabel("plus", (lam,)))
        out.append(NsIrredLabel("minus", (lam,)))
    out.append(NsIrredLabel("eps_plus"))
    return out


# ---------------------------------------------------------------------
# tensor modules


def _scale(M, a):
    return [[a * x for x in row] for row in M]


def _add(M, N):
    return [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(M, N)]


def _sub(M, N):
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(M, N)]


def _zero(n, m):
    return [[R_ZERO] * m for _ in range(n)]


def _is_zero(M):
    return all(not x for row in M for x in row)


class TensorModule:
    """M_lambda (x) M_mu with vectors as coefficient matrices."""

    def __init__(self, lam: Partition, mu: Partition):
        if lam.size != mu.size:
            raise ValueError("shapes must have equal size")
        self.lam, self.mu = lam, mu
        self.r = lam.size
        self.left = build_specht(lam)
        self.right = build_specht(mu)
        self.dim = self.left.dim * self.right.dim

    # -- coordinates ----------------------------------------------------

    def convert(self, c, frm: str, to: str):
        """Change a coefficient matrix between basis pairs; first tag
        letter is the left factor ('l' lower / 'u' upper)."""
        if frm == to:
            return [row[:] for row in c]
        XL, XLi = self.left.transition, self.left.transition_inv
        XR, XRi = self.right.transition, self.right.transition_inv
        if frm[0] != to[0]:
            c = mat_mul(XL if to[0] == "u" else XLi, c)
        if frm[1] != to[1]:
            c = mat_mul(c, mat_transpose(XR if to[1] == "u" else XRi))
        return c

    def flip(self, c):
        if self.lam != self.mu:
            raise ValueError("flip needs equal shapes")
        return mat_transpose(c)

    # -- generator action ----------------------------------------------

    def _factor_matrices(self, module, i, letter):
        """(C'_s matrix, C_s matrix) on the chosen coordinates."""
        if letter == "l":
            L = module.lower_action[i]
            prime = L
            plain = _sub(L, _scale(identity(module.dim, R_ONE, R_ZERO), TWO))
        else:
            U = module.upper_action[i]
            prime = _add(U, _scale(identity(module.dim, R_ONE, R_ZERO), TWO))
            plain = U
        return prime, plain

    def ops(self, i: int, pair: str):
        """P_{s_i} as a list of (A, B) with action c -> sum A c B^T."""
        lp, lc = self._factor_matrices(self.left, i, pair[0])
        rp, rc = self._factor_matrices(self.right, i, pair[1])
        return [(lp, rp), (lc, rc)]

    def q_ops(self, i: int, pair: str):
        """Q_{s_i} = [2]^2 - P_{s_i} as (A, B) pairs."""
        lp, lc = self._factor_matrices(self.left, i, pair[0])
        rp, rc = self._factor_matrices(self.right, i, pair[1])
        neg = lambda M: _scale(M, R_ZERO - R_ONE)
        return [(neg(lp), rc), (neg(lc), rp)]

    @staticmethod
    def apply(ops, c):
        out = None
        for A, B in ops:
            term = mat_mul(A, mat_mul(c, mat_transpose(B)))
            out = term if out is None else _add(out, term)
        return out

    def p_apply(self, c, i: int, pair: str = "ll"):
        return self.apply(self.ops(i, pair), c)

    def p_matrix(self, i: int, pair: str = "ll"):
        """P_{s_i} as a flat matrix acting on row-major vec(c)."""
        fl, fr = self.left.dim, self.right.dim
        cols = []
        for a in range(fl):
            for b in range(fr):
                e = _zero(fl, fr)
                e[a][b] = R_ONE
                cols.append(flatten(self.p_apply(e, i, pair)))
        return [[cols[j][k] for j in range(len(cols))] for k in range(self.dim)]


def flatten(c):
    return [x for row in c for x in row]


def unflatten(v, nrows, ncols):
    return [list(v[a * ncols : (a + 1) * ncols]) for a in range(nrows)]


# ---------------------------------------------------------------------
# recorded case formulas for the action of P_s


def p_action(tm: TensorModule, c, i: int, pair: str = "ll"):
    """Action of P_{s_i} on a coefficient matrix, computed from the
    descent-set/mu case formulas on the chosen basis pair."""
    if pair not in ("ll", "ul", "uu"):
        raise ValueError(f"unsupported basis pair {pair!r}")
    left, right = tm.left, tm.right
    lconv = "lower" if pair[0] == "l" else "upper"
    rconv = "lower" if pair[1] == "l" else "upper"
    out = _zero(left.dim, right.dim)

    def neighbors(module, conv, q):
        return [
            (qp, module.mu(qp, q))
            for qp in module.basis
            if i in descent_set(qp, conv) and module.mu(qp, q)
        ]

    for T in left.basis:
        for U in right.basis:
            coeff = c[left.index[T]][right.index[U]]
            if not coeff:
                continue
            in_t = i in descent_set(T, lconv)
            in_u = i in descent_set(U, rconv)
            t, u = left.index[T], right.index[U]

            def bump(a, b, val):
                out[a][b] = out[a][b] + val

            if pair == "ll":
                if in_t and in_u:
                    bump(t, u, FOUR * coeff)
                elif in_t:
                    for Up, m in neighbors(right, rconv, U):
                        bump(t, right.index[Up], TWO * coeff * m)
                elif in_u:
                    for Tp, m in neighbors(left, lconv, T):
                        bump(left.index[Tp], u, TWO * coeff * m)
                else:
                    bump(t, u, FOUR * coeff)
                    for Tp, m in neighbors(left, lconv, T):
                        bump(left.index[Tp], u, -(TWO * coeff * m))
                    for Up, m in neighbors(right, rconv, U):
                        bump(t, right.index[Up], -(TWO * coeff * m))
                    for Tp, mt in neighbors(left, lconv, T):
                        for Up, mu_ in neighbors(right, rconv, U):
                            bump(
                                left.index[Tp],
                                right.index[Up],
                                coeff * (2 * mt * mu_),
                            )
            elif pair == "ul":
                if in_t and in_u:
                    pass  # zero
                elif in_t:
                    bump(t, u, FOUR * coeff)
                    for Up, m in neighbors(right, rconv, U):
                        bump(t, right.index[Up], -(TWO * coeff * m))
                elif in_u:
                    bump(t, u, FOUR * coeff)
                    for Tp, m in neighbors(left, lconv, T):
                        bump(left.index[Tp], u, TWO * coeff * m)
                else:
                    for Tp, m in neighbors(left, lconv, T):
                        bump(left.index[Tp], u, -(TWO * coeff * m))
                    for Up, m in neighbors(right, rconv, U):
                        bump(t, right.index[Up], TWO * coeff * m)
                    for Tp, mt in neighbors(left, lconv, T):
                        for Up, mu_ in neighbors(right, rconv, U):
                            bump(
                                left.index[Tp],
                                right.index[Up],
                                coeff * (2 * mt * mu_),
                            )
            else:  # uu
                if in_t and in_u:
                    bump(t, u, FOUR * coeff)
                elif in_t:
                    for Up, m in neighbors(right, rconv, U):
                        bump(t, right.index[Up], -(TWO * coeff * m))
                elif in_u:
                    for Tp, m in neighbors(left, lconv, T):
                        bump(left.index[Tp], u, -(TWO * coeff * m))
                else:
                    bump(t, u, FOUR * coeff)
                    for Tp, m in neighbors(left, lconv, T):
                        bump(left.index[Tp], u, TWO * coeff * m)
                    for Up, m in neighbors(right, rconv, U):
                        bump(t, right.index[Up], TWO * coeff * m)
                    for Tp, mt in neighbors(left, lconv, T):
                        for Up, mu_ in neighbors(right, rconv, U):
                            bump(
                                left.index[Tp],
                                right.index[Up],
                                coeff * (2 * mt * mu_),
                            )
    return out


# ---------------------------------------------------------------------
# epsilon embeddings and trace


def q_element(tm: TensorModule, c, i: int, pair: str = "ll"):
    """Action of Q_{s_i} = [2]^2 - P_{s_i}."""
    return _sub(_scale(c, FOUR), tm.p_apply(c, i, pair))


def epsilon_plus_vector(lam: Partition):
    """The eps+ line in M_lam (x) M_lam, as a lower (x) lower
    coefficient matrix (the inverse transition matrix)."""
    return build_specht(lam).transition_inv


def epsilon_minus_vector(lam: Partition):
    """sum_Q (-1)^{l(Q)} C'_{Q^t} (x) C'_Q in M_{lam'} (x) M_lam,
    as a lower (x) lower coefficient matrix."""
    left = build_specht(lam.conjugate())
    right = build_specht(lam)
    c = _zero(left.dim, right.dim)
    for Q in right.basis:
        sign = -1 if de_distance(Q) % 2 else 1
        c[left.index[Q.transpose()]][right.index[Q]] = RationalFn.from_int(sign)
    return c


def trace_functional(lam: Partition, c, pair: str = "lu"):
    """(1/f) sum of diagonal coefficients in lower (x) upper
    coordinates."""
    m = build_specht(lam)
    tm = TensorModule(lam, lam)
    c = tm.convert(c, pair, "lu")
    f = RationalFn.from_int(m.dim)
    total = R_ZERO
    for k in range(m.dim):
        total = total + c[k][k]
    return total / f


# ---------------------------------------------------------------------
# antipode identities in the Hecke algebra itself


def _tensor_product_terms(r, word):
    """Pure-tensor expansion of the product of P_{s_i} over the word,
    with the first tensor factor multiplied in reversed order (the
    "op" side of the antipode identity)."""
    terms = [(HeckeElement.unit(r), HeckeElement.unit(r), R_ONE)]
    for i in word:
        cp = to_standard(HeckeElement.c_prime_s(r, i))
        cs = to_standard(HeckeElement.c_s(r, i))
        new = []
        for a, b, coeff in terms:
            for fa, fb in ((cp, cp), (cs, cs)):
                new.append(
                    (multiply_standard(fa, a), multiply_standard(b, fb), coeff)
                )
        terms = new
    return terms


def antipode_check(word, r: int = 4) -> bool:
    """mu((1^op (x) 1)(x)) = [2]^{2k} T_e and
    mu((theta^op (x) 1)(x)) = 0 for x the product of P_{s_i} over the
    word."""
    terms = _tensor_product_terms(r, word)
    plus = HeckeElement(r, "standard", {})
    minus = HeckeElement(r, "standard", {})
    for a, b, coeff in terms:
        ab = multiply_standard(a, b)
        plus = plus + ab.scale(coeff)
        minus = minus + multiply_standard(theta_element(a), b).scale(coeff)
    expected = HeckeElement.unit(r).scale(FOUR ** len(word))
    return plus == expected and not minus.coords


# ---------------------------------------------------------------------
# the irreducibles


@dataclass
class NsSubmodule:
    label: NsIrredLabel
    ambient: TensorModule
    basis: list  # lower (x) lower coefficient matrices

    @property
    def dim(self):
        return len(self.basis)


def _sym_projection_basis(lam: Partition):
    """Lemma basis of S'M-hat_lam: projections of C'_A . C'_B for
    A < B together with A = B, A != first canonical tableau."""
    m = build_specht(lam)
    tm = TensorModule(lam, lam)
    eps = epsilon_plus_vector(lam)
    out = []
    half = R_HALF
    for a in range(m.dim):
        for b in range(a, m.dim):
            if a == b == 0:
                continue  # the excluded diagonal tableau
            c = _zero(m.dim, m.dim)
            if a == b:
                c[a][a] = R_ONE
            else:
                c[a][b] = half
                c[b][a] = half
            t = trace_functional(lam, c, "ll")
            out.append(_sub(c, _scale(eps, t)))
    return out


def build_irreducible(label: NsIrredLabel, r: int) -> NsSubmodule:
    if label not in set(ns_labels(r)):
        raise ValueError(f"label {label} is not in the rank-{r} index set")
    if label.kind == "pair":
        lam, mu = label.shapes
        tm = TensorModule(lam, mu)
        basis = []
        for a in range(tm.left.dim):
            for b in range(tm.right.dim):
                c = _zero(tm.left.dim, tm.right.dim)
                c[a][b] = R_ONE
                basis.append(c)
        return NsSubmodule(label, tm, basis)
    if label.kind == "eps_plus":
        lam = max(two_row_partitions(r), key=syt_count)
        return NsSubmodule(
            label, TensorModule(lam, lam), [epsilon_plus_vector(lam)]
        )
    lam = label.shapes[0]
    tm = TensorModule(lam, lam)
    m = tm.left
    if label.kind == "plus":
        return NsSubmodule(label, tm, _sym_projection_basis(lam))
    basis = []
    half = R_HALF
    for a in range(m.dim):
        for b in range(a + 1, m.dim):
            c = _zero(m.dim, m.dim)
            c[a][b] = half
            c[b][a] = R_ZERO - half
            basis.append(c)
    return NsSubmodule(label, tm, basis)


def closure_check(mod: NsSubmodule) -> bool:
    """Every generator image of every basis vector stays in the span."""
    span = SpanBasis()
    for c in mod.basis:
        if not span.add(flatten(c)):
            return False
    for i in range(1, mod.ambient.r):
        for c in mod.basis:
            img = mod.ambient.p_apply(c, i, "ll")
            if span.add(flatten(img)):
                return False
    return True


# ---------------------------------------------------------------------
# certification at a specialization


SPECIALIZATION_LADDER = (Fraction(7, 3), Fraction(11, 5), Fraction(13, 7))


def _restricted_generators(mod: NsSubmodule, u0: Fraction):
    """Matrices of the specialized P_i on the submodule's own basis."""
    V = [flatten(c) for c in mod.basis]  # rows = basis vectors
    Vq = [[x.specialize(u0) for x in row] for row in V]
    Vcols = [[Vq[j][k] for j in range(len(Vq))] for k in range(len(Vq[0]))]
    gens = []
    for i in range(1, mod.ambient.r):
        ops = [
            (specialize_matrix(A, u0), specialize_matrix(B, u0))
            for A, B in mod.ambient.ops(i, "ll")
        ]
        cols = []
        for c in mod.basis:
            cq = [[x.specialize(u0) for x in row] for row in c]
            img = None
            for A, B in ops:
                term = mat_mul(A, mat_mul(cq, mat_transpose(B)))
                img = term if img is None else _add(img, term)
            y = solve(Vcols, flatten(img))
            if y is None:
                raise ArithmeticError("image escapes submodule span")
            cols.append(y)
        gens.append(
            [[cols[j][k] for j in range(len(cols))] for k in range(len(cols))]
        )
    return gens


def commutant_dimension(gens, dim):
    """dim {Z : G Z = Z G for all G} over Q."""
    one, zero = Fraction(1), Fraction(0)
    rows = []
    for G in gens:
        for a in range(dim):
            for b in range(dim):
                row = [zero] * (dim * dim)
                for k in range(dim):
                    row[k * dim + b] += G[a][k]
                    row[a * dim + k] -= G[k][b]
                rows.append(row)
    return len(nullspace(rows, one, zero)) if rows else dim * dim


def hom_dimension(gens_a, dim_a, gens_b, dim_b):
    """dim {Z : Z G_a = G_b Z for all generators}."""
    one, zero = Fraction(1), Fraction(0)
    rows = []
    for G, H in zip(gens_a, gens_b):
        for a in range(dim_b):
            for b in range(dim_a):
                row = [zero] * (dim_b * dim_a)
                for k in range(dim_a):
                    row[a * dim_a + k] += G[k][b]
                for k in range(dim_b):
                    row[k * dim_a + b] -= H[a][k]
                rows.append(row)
    return len(nullspace(rows, one, zero)) if rows else dim_a * dim_b


def certify_irreducible(mod: NsSubmodule, u0: Fraction = None) -> int:
    """Commutant dimension of the specialized action; 1 certifies
    generic irreducibility. Retries along the ladder on poles."""
    ladder = [u0] if u0 is not None else list(SPECIALIZATION_LADDER)
    last = None
    for point in ladder:
        try:
            gens = _restricted_generators(mod, point)
            return commutant_dimension(gens, mod.dim)
        except ZeroDivisionError as exc:  # includes PoleError
            last = exc
    raise last


# ---------------------------------------------------------------------
# restriction to rank r-1


def _embed(iota_l, pi_l, iota_r, pi_r, inner, transform=None):
    """Lift an endomorphism of the child block back to the ambient:
    c -> iota_l . inner(pi_l c pi_r^T) . iota_r^T."""

    def apply(c):
        d = mat_mul(pi_l, mat_mul(c, mat_transpose(pi_r)))
        d = inner(d)
        return mat_mul(iota_l, mat_mul(d, mat_transpose(iota_r)))

    return apply


def _ambient_level_projectors(tm: TensorModule):
    """Projectors of M_lam (x) M_mu onto the rank-(r-1) isotypic
    components, keyed by NsIrredLabel. Functions on ll coefficient
    matrices."""
    out = {}
    left_br = tm.left.branching
    right_br = tm.right.branching
    half = R_HALF

    # pair components {nu, rho}, nu != rho
    pair_blocks = {}
    for ls, liota, lpi, lproj in left_br:
        for rs, riota, rpi, rproj in right_br:
            if ls == rs:
                continue
            key = NsIrredLabel("pair", (ls, rs))
            pair_blocks.setdefault(key, []).append((lproj, rproj))
    for key, blocks in pair_blocks.items():
        def proj(c, blocks=blocks):
            out_c = None
            for lp, rp in blocks:
                term = mat_mul(lp, mat_mul(c, mat_transpose(rp)))
                out_c = term if out_c is None else _add(out_c, term)
            return out_c
        out[key] = proj

    # diagonal components nu = rho: split S' / wedge / eps+
    for ls, liota, lpi, lproj in left_br:
        for rs, riota, rpi, rproj in right_br:
            if ls != rs:
                continue
            nu = ls
            child = build_specht(nu)
            Xi = child.transition_inv
            X = child.transition
            fnu = RationalFn.from_int(child.dim)

            def block(c, lp=lproj, rp=rproj):
                return mat_mul(lp, mat_mul(c, mat_transpose(rp)))

            def partial_flip(c, li=liota, lp=lpi, ri=riota, rp=rpi):
                d = mat_mul(lp, mat_mul(c, mat_transpose(rp)))
                d = mat_transpose(d)
                return mat_mul(li, mat_mul(d, mat_transpose(ri)))

            def q_eps(c, li=liota, lp=lpi, ri=riota, rp=rpi, X=X, Xi=Xi,
                      fnu=fnu, child=child):
                d = mat_mul(lp, mat_mul(c, mat_transpose(rp)))
                t = R_ZERO
                e = mat_mul(d, mat_transpose(X))
                for k in range(child.dim):
                    t = t + e[k][k]
                t = t / fnu
                return mat_mul(li, mat_mul(_scale(Xi, t), mat_transpose(ri)))

            def sym(c, block=block, pf=partial_flip, q=q_eps):
                return _sub(_scale(_add(block(c), pf(c)), half), q(c))

            def wedge(c, block=block, pf=partial_flip):
                return _scale(_sub(block(c), pf(c)), half)

            if child.dim > 1:
                out[NsIrredLabel("plus", (nu,))] = sym
                out[NsIrredLabel("minus", (nu,))] = wedge
            prev = out.get(NsIrredLabel("eps_plus"))
            if prev is None:
                out[NsIrredLabel("eps_plus")] = q_eps
            else:
                out[NsIrredLabel("eps_plus")] = (
                    lambda c, a=prev, b=q_eps: _add(a(c), b(c))
                )
    return out


def restriction_decompose(mod: NsSubmodule) -> Counter:
    """Multiset of rank-(r-1) labels in the restriction, computed from
    exact isotypic projectors; zero modules omitted."""
    tm = mod.ambient
    if tm.r < 2:
        raise ValueError("needs r >= 2")
    projs = _ambient_level_projectors(tm)
    result = Counter()
    for label, proj in projs.items():
        dim = label.dimension(tm.r - 1)
        if dim == 0:
            continue
        images = [flatten(proj(c)) for c in mod.basis]
        rk = rank(images)
        if rk:
            if rk % dim:
                raise AssertionError(
                    f"rank {rk} of {label} component not a multiple of {dim}"
                )
            result[label] = rk // dim
    total = sum(lbl.dimension(tm.r - 1) * m for lbl, m in result.items())
    if total != mod.dim:
        raise AssertionError(
            f"restriction dimensions {total} != module dimension {mod.dim}"
        )
    return result


# ---------------------------------------------------------------------
# dimension oracle and formula


def _block_generators(r: int, u0: Fraction):
    """Specialized P_i on the faithful sum of all two-row tensor
    blocks, as one block-diagonal Fraction matrix per generator."""
    shapes = two_row_partitions(r)
    blocks = []
    for lam in shapes:
        for mu in shapes:
            blocks.append(TensorModule(lam, mu))
    N = sum(b.dim for b in blocks)
    gens = []
    for i in range(1, r):
        G = [[Fraction(0)] * N for _ in range(N)]
        off = 0
        for b in blocks:
            flat = b.p_matrix(i, "ll")
            for a in range(b.dim):
                for c in range(b.dim):
                    G[off + a][off + c] = flat[a][c].specialize(u0)
            off += b.dim
        gens.append(G)
    return gens, N


def nonstandard_dimension_oracle(
    r: int, u0: Fraction = Fraction(7, 3), mod_p: int = None
) -> int:
    """Dimension of the unital algebra generated by the specialized
    P_i on the faithful two-row tensor sum, by product-span closure."""
    gens, N = _block_generators(r, u0)
    safety = N * N * (r - 1) + r
    steps = 0
    if mod_p is None:
        one, zero = Fraction(1), Fraction(0)
        span = SpanBasis()
        ident = [[one if a == b else zero for b in range(N)] for a in range(N)]
        span.add(flatten(ident))
        frontier = [ident]
        while frontier:
            new_frontier = []
            for M in frontier:
                for G in gens:
                    steps += 1
                    if steps > safety:
                        raise StabilizationError(
                            "span closure exceeded safety bound"
                        )
                    prod = mat_mul(M, G)
                    if span.add(flatten(prod)):
                        new_frontier.append(prod)
            frontier = new_frontier
        return len(span)

    import numpy as np

    p = mod_p
    span = SpanBasisModP(N * N, p)
    ident = np.eye(N, dtype=np.int64)
    span.add(ident.reshape(-1))
    mults = [
        np.array(
            [
                [int(x.numerator * pow(x.denominator, -1, p)) % p for x in row]
                for row in G
            ],
            dtype=np.int64,
        )
        for G in gens
    ]
    frontier = [ident]
    while frontier:
        new_frontier = []
        for M in frontier:
            for G in mults:
                steps += 1
                if steps > safety:
                    raise StabilizationError(
                        "span closure exceeded safety bound"
                    )
                prod = (M @ G) % p
                if span.add(prod.reshape(-1).copy()):
                    new_frontier.append(prod)
        frontier = new_frontier
    return len(span)


def dimension_formula(r: int) -> int:
    from math import comb

    catalan = comb(2 * r, r) // (r + 1)
    return comb(catalan, 2) - comb(r, r // 2) + r // 2 + 2


def dimension_formula_details(r: int) -> dict:
    """The closed form plus the two intermediate sums of squared
    irreducible dimensions."""
    shapes = two_row_partitions(r)
    pair_sum = 0
    for lam, mu in itertools.combinations(shapes, 2):
        pair_sum += (syt_count(lam) * syt_count(mu)) ** 2
    signed_sum = 0
    for lam in shapes:
        if lam == Partition([r]):
            continue
        f = syt_count(lam)
        signed_sum += (comb(f + 1, 2) - 1) ** 2 + comb(f, 2) ** 2
    return {
        "formula": dimension_formula(r),
        "pair_square_sum": pair_sum,
        "signed_square_sum_plus_one": signed_sum + 1,
        "total_squares": pair_sum + signed_sum + 1,
    }
