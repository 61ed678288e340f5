"""Ring extensions and their finiteness/separability solvers.

A RingExtension bundles an algebra A with a unital subalgebra B and
eagerly derives the spaces every solver here needs: the centralizer
R = C_A(B), the tensor square A (x)_B A, its B-central part T, and the
B-B endomorphism algebra S = End(A) as bimodule maps.

The solvers are all exact linear algebra:

* depth-two quasibases (left/right), by membership of the identity map
  in the span of composites T x S -> End(A (x)_B A);
* module-theoretic predicates for A as a right B-module (finitely
  generated projective, generator, balanced, BR = A, double centralizer);
* separability elements, split maps, Frobenius systems;
* H-separability systems, with the derived quasibases they induce.

Searches return dicts with a "status" key: "found", "provably-none"
(the linear system is inconsistent), or "inconclusive" (only the
bounded Frobenius sweep can give up).
"""

from __future__ import annotations

import itertools
from typing import Optional

from .algebra import (
    AlgebraError,
    FinDimAlgebra,
    RelativeTensorSquare,
    Subalgebra,
    b_central_elements,
    bimodule_hom_space,
    casimir_elements,
    centralizer,
    intertwiner_space,
)
from .linalg import (
    Echelon,
    Matrix,
    row_space,
    span_membership,
    vec_add_scaled,
    vec_to_dict,
)


class RingExtension:
    """Algebra A with unital subalgebra B, plus the derived spaces.

    Immutable after construction.  R, the tensor square and the T/S
    bases are computed eagerly; the hom spaces into the base and the
    Casimir elements are filled in on first use.
    """

    def __init__(self, A: FinDimAlgebra, B: Subalgebra):
        if B.ambient is not A:
            raise AlgebraError("subalgebra does not live in the given algebra")
        self.A = A
        self.B = B
        self.field = A.field
        self.R = centralizer(A, B.basis)
        self.rts = RelativeTensorSquare(A, B)
        self.t_basis = b_central_elements(self.rts)
        self.s_space = bimodule_hom_space(A, B)  # End(_B A _B) inside End(A)
        self._t_ech = None
        self._end_right = None
        self._hom_bb_base = None
        self._hom_right_base = None
        self._casimir = None

    def __repr__(self):
        return "RingExtension(dim A=%d, dim B=%d)" % (self.A.dim, self.B.dim)

    @property
    def end_right(self):
        """End(A_B): endomorphisms of A as a right B-module."""
        if self._end_right is None:
            self._end_right = bimodule_hom_space(self.A, self.B, left=False)
        return self._end_right

    @property
    def hom_bb_to_base(self):
        """Hom_{B-B}(A, B), maps written in B-coordinates."""
        if self._hom_bb_base is None:
            self._hom_bb_base = bimodule_hom_space(self.A, self.B, codomain="B")
        return self._hom_bb_base

    @property
    def hom_right_to_base(self):
        """Hom(A_B, B_B), maps written in B-coordinates."""
        if self._hom_right_base is None:
            self._hom_right_base = bimodule_hom_space(
                self.A, self.B, left=False, codomain="B")
        return self._hom_right_base

    @property
    def casimir(self):
        """Basis of the Casimir space (A (x)_B A)^A."""
        if self._casimir is None:
            self._casimir = casimir_elements(self.rts)
        return self._casimir

    def in_t(self, tensor: list) -> bool:
        """Membership of a tensor-square element in T."""
        if self._t_ech is None:
            self._t_ech = Echelon(self.field)
            for t in self.t_basis:
                self._t_ech.insert(vec_to_dict(t))
        residual, _ = self._t_ech.reduce(vec_to_dict(tensor))
        return not residual


class QuasiBasis:
    """Finite family witnessing one of the two depth-two identities.

    side "left":  pairs (t_i, beta_i)  with  a (x) a' = sum_i t_i beta_i(a) a'
    side "right": pairs (u_j, gamma_j) with  a (x) a' = sum_j a gamma_j(a') u_j

    t_i/u_j live in quotient coordinates of A (x)_B A and must lie in T;
    beta_i/gamma_j are endomorphism matrices of A and must lie in S.
    """

    def __init__(self, ext: RingExtension, side: str, pairs: list):
        if side not in ("left", "right"):
            raise AlgebraError("side must be 'left' or 'right'")
        self.ext = ext
        self.side = side
        self.pairs = pairs

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return "QuasiBasis(side=%r, n=%d)" % (self.side, len(self.pairs))

    def identity_image(self, p: int, q: int) -> list:
        """The quasibasis expansion of e_p (x) e_q."""
        ext = self.ext
        A, rts, f = ext.A, ext.rts, ext.field
        out = [f.zero] * rts.dim
        ep, eq = A.basis_vec(p), A.basis_vec(q)
        for t, mapmat in self.pairs:
            if self.side == "left":
                x = A.mul(mapmat.apply(ep), eq)
                vec_add_scaled(f, out, f.one, rts.act_right(x, t))
            else:
                x = A.mul(ep, mapmat.apply(eq))
                vec_add_scaled(f, out, f.one, rts.act_left(x, t))
        return out

    def verify(self):
        """Check membership of components and the defining identity on all pairs."""
        ext = self.ext
        A, rts = ext.A, ext.rts
        for t, mapmat in self.pairs:
            if not ext.in_t(t):
                raise AlgebraError("quasibasis tensor component not B-central")
            if ext.s_space.coords(mapmat) is None:
                raise AlgebraError("quasibasis map component not a B-B endomorphism")
        for p in range(A.dim):
            for q in range(A.dim):
                if self.identity_image(p, q) != rts.project_pure(
                        A.basis_vec(p), A.basis_vec(q)):
                    raise AlgebraError(
                        "quasibasis identity fails on basis pair (%d, %d)" % (p, q))


def _fold_pairs(field, coords, tags, tensors, maps):
    """Assemble (scaled tensor, map) pairs from span-membership coordinates."""
    pairs = []
    for c, (ti, si) in zip(coords, tags):
        if c:
            scaled = [field.mul(c, x) for x in tensors[ti]]
            pairs.append((scaled, maps[si]))
    return pairs


def left_d2_quasibasis(ext: RingExtension) -> Optional[QuasiBasis]:
    """Pairs (t_i, beta_i) with a (x) a' = sum_i t_i beta_i(a) a', if any.

    Existence is equivalent to the identity of End(A (x)_B A) lying in
    the span of the composites a (x) a' -> t . (beta(a) a'); the
    expansion coordinates assemble the quasibasis directly.
    """
    A, rts, f = ext.A, ext.rts, ext.field
    cols, tags = [], []
    for ti, t in enumerate(ext.t_basis):
        for si, beta in enumerate(ext.s_space.maps):
            M = Matrix.zeros(f, rts.dim, rts.dim)
            for k, (p, q) in enumerate(rts.section_pairs):
                v = rts.act_right(A.mul(beta.column(p), A.basis_vec(q)), t)
                for r, c in enumerate(v):
                    if c:
                        M.rows[r][k] = c
            cols.append(M.flatten())
            tags.append((ti, si))
    target = Matrix.identity(f, rts.dim).flatten()
    coords = span_membership(f, cols, target)
    if coords is None:
        return None
    qb = QuasiBasis(ext, "left",
                    _fold_pairs(f, coords, tags, ext.t_basis, ext.s_space.maps))
    qb.verify()
    return qb


def right_d2_quasibasis(ext: RingExtension) -> Optional[QuasiBasis]:
    """Pairs (u_j, gamma_j) with a (x) a' = sum_j a gamma_j(a') u_j, if any."""
    A, rts, f = ext.A, ext.rts, ext.field
    cols, tags = [], []
    for ti, u in enumerate(ext.t_basis):
        for si, gamma in enumerate(ext.s_space.maps):
            M = Matrix.zeros(f, rts.dim, rts.dim)
            for k, (p, q) in enumerate(rts.section_pairs):
                v = rts.act_left(A.mul(A.basis_vec(p), gamma.column(q)), u)
                for r, c in enumerate(v):
                    if c:
                        M.rows[r][k] = c
            cols.append(M.flatten())
            tags.append((ti, si))
    target = Matrix.identity(f, rts.dim).flatten()
    coords = span_membership(f, cols, target)
    if coords is None:
        return None
    qb = QuasiBasis(ext, "right",
                    _fold_pairs(f, coords, tags, ext.t_basis, ext.s_space.maps))
    qb.verify()
    return qb


# ---------------------------------------------------------------------------
# module-theoretic predicates for A as a right B-module

def module_properties(ext: RingExtension) -> dict:
    """Five predicates on A_B, each with a witness or a dimension gap."""
    A, B, R, f = ext.A, ext.B, ext.R, ext.field
    n, m = A.dim, B.dim
    report = {}

    # finitely generated projective: dual basis a_j, f_j with a = sum a_j f_j(a)
    homs = ext.hom_right_to_base
    emb = B.embedding_matrix()
    cols, tags = [], []
    for p in range(n):
        L = A.lmul(A.basis_vec(p))
        for j, F in enumerate(homs.maps):
            cols.append(L.mul(emb.mul(F)).flatten())
            tags.append((p, j))
    coords = span_membership(f, cols, Matrix.identity(f, n).flatten()) if cols else None
    if coords is None:
        report["fg_projective_right"] = {
            "holds": False,
            "witness": {"hom_to_base_dim": homs.dim},
        }
    else:
        dual = {}
        for c, (p, j) in zip(coords, tags):
            if c:
                vec = dual.setdefault(j, [f.zero] * n)
                vec[p] = f.add(vec[p], c)
        pairs = [(vec, homs.maps[j]) for j, vec in sorted(dual.items())]
        report["fg_projective_right"] = {
            "holds": True,
            "witness": {"dual_basis": pairs},
        }

    # generator: the trace ideal sum_f f(A) reaches 1_B
    values, vtags = [], []
    for j, F in enumerate(homs.maps):
        for p in range(n):
            values.append(F.column(p))
            vtags.append((j, p))
    unit_b = B.coords(A.unit)
    gcoords = span_membership(f, values, unit_b) if values else None
    if gcoords is None:
        trace_dim = len(row_space(f, values, width=m)) if values else 0
        report["generator_right"] = {
            "holds": False,
            "witness": {"trace_ideal_dim": trace_dim, "base_dim": m},
        }
    else:
        gens = [(homs.maps[j], [f.mul(c, x) for x in A.basis_vec(p)])
                for c, (j, p) in zip(gcoords, vtags) if c]
        report["generator_right"] = {"holds": True, "witness": {"trace_pairs": gens}}

    # balanced: the commutant of End(A_B) acting on A is exactly rho(B)
    bic = intertwiner_space(f, n, n, ((M, M) for M in ext.end_right.maps))
    ok = bic.dim == m
    if ok:
        for b in B.basis:
            if bic.coords(A.rmul(b)) is None:  # pragma: no cover - sanity
                raise AlgebraError("right multiplication missing from bicommutant")
    report["balanced_right"] = {
        "holds": ok,
        "witness": {"bicommutant_dim": bic.dim, "base_dim": m},
    }

    # BR = A
    products = [A.mul(b, r) for b in B.basis for r in R.basis]
    br_dim = len(row_space(f, products, width=n))
    report["procesi"] = {
        "holds": br_dim == n,
        "witness": {"product_span_dim": br_dim, "ambient_dim": n},
    }

    # double centralizer: C_A(C_A(B)) = B
    cc = centralizer(A, R.basis)
    report["double_centralizer"] = {
        "holds": cc.same_subspace(B),
        "witness": {"c_a_r_dim": cc.dim, "base_dim": m},
    }
    return report


# ---------------------------------------------------------------------------
# separability / splitting / Frobenius structure

def separability_element(ext: RingExtension) -> dict:
    """Casimir element e with e^1 e^2 = 1, when one exists."""
    f, rts = ext.field, ext.rts
    cas = ext.casimir
    if not cas:
        return {"status": "provably-none", "reason": "Casimir space is zero"}
    images = [rts.mu.apply(e) for e in cas]
    coords = span_membership(f, images, ext.A.unit)
    if coords is None:
        img_dim = len(row_space(f, images, width=ext.A.dim))
        return {
            "status": "provably-none",
            "reason": "unit not reached by multiplication on the Casimir space",
            "mu_image_dim": img_dim,
        }
    e = [f.zero] * rts.dim
    for c, vec in zip(coords, cas):
        if c:
            vec_add_scaled(f, e, c, vec)
    if rts.mu.apply(e) != ext.A.unit:  # pragma: no cover - solver guarantee
        raise AlgebraError("separability element fails mu(e) = 1")
    return {"status": "found", "element": e}


def split_map(ext: RingExtension) -> dict:
    """B-B bimodule map E: A -> B with E(1) = 1, when one exists."""
    f, A, B = ext.field, ext.A, ext.B
    homs = ext.hom_bb_to_base
    if homs.dim == 0:
        return {"status": "provably-none", "reason": "no B-B maps into the base"}
    values = [F.apply(A.unit) for F in homs.maps]
    coords = span_membership(f, values, B.coords(A.unit))
    if coords is None:
        return {"status": "provably-none",
                "reason": "no bimodule map fixes the unit"}
    E = homs.from_coords(coords)
    return {"status": "found", "map": E}


def _frobenius_try(ext: RingExtension, E: Matrix):
    """Dual-bases solve for a candidate Frobenius map E (in B coords).

    Looks for W with  a = sum_ij W_ij e_i E(e_j a)  and
    a = sum_ij E(a e_i) W_ij e_j  simultaneously; returns the dual bases
    (x_i, y_i) or None.
    """
    f, A, B = ext.field, ext.A, ext.B
    n = A.dim
    EA = B.embedding_matrix().mul(E)  # A -> A through the base
    lmuls = [A.lmul(A.basis_vec(i)) for i in range(n)]
    rmuls = [A.rmul(A.basis_vec(i)) for i in range(n)]
    left_parts = [lm.mul(EA) for lm in lmuls]    # e_i E(-)
    right_parts = [EA.mul(rm) for rm in rmuls]   # E(- e_i)
    cols, tags = [], []
    for i in range(n):
        for j in range(n):
            M = left_parts[i].mul(lmuls[j])       # a -> e_i E(e_j a)
            N = rmuls[j].mul(right_parts[i])      # a -> E(a e_i) e_j
            cols.append(M.flatten() + N.flatten())
            tags.append((i, j))
    ident = Matrix.identity(f, n).flatten()
    coords = span_membership(f, cols, ident + ident)
    if coords is None:
        return None
    ys = [[f.zero] * n for _ in range(n)]
    for c, (i, j) in zip(coords, tags):
        if c:
            ys[i][j] = f.add(ys[i][j], c)
    xs = [A.basis_vec(i) for i in range(n)]
    keep = [(x, y) for x, y in zip(xs, ys) if any(y)]
    return [x for x, _ in keep], [y for _, y in keep]


def frobenius_system(ext: RingExtension, sweep_bound: int = 2,
                     max_candidates: int = 4000) -> dict:
    """Frobenius map E with dual bases, by a bounded deterministic sweep.

    A Frobenius extension forces dim Hom(A_B, B_B) = dim A, so a mismatch
    is a proof of absence.  Otherwise candidates E are swept over the
    Hom_{B-B}(A,B) basis and then over integer coefficient tuples in
    {-sweep_bound..sweep_bound}; each candidate costs one linear solve.
    Exhausting the sweep is reported as inconclusive, not absence.
    """
    f = ext.field
    homs = ext.hom_bb_to_base
    if ext.hom_right_to_base.dim != ext.A.dim:
        return {
            "status": "provably-none",
            "reason": "dim Hom(A_B, B_B) = %d differs from dim A = %d"
                      % (ext.hom_right_to_base.dim, ext.A.dim),
        }
    if homs.dim == 0:
        return {"status": "provably-none", "reason": "no B-B maps into the base"}

    tried = 0
    for j in range(homs.dim):
        E = homs.maps[j]
        tried += 1
        hit = _frobenius_try(ext, E)
        if hit is not None:
            xs, ys = hit
            return {"status": "found", "map": E, "x": xs, "y": ys,
                    "candidates_tried": tried}
    span = range(-sweep_bound, sweep_bound + 1)
    for combo in itertools.product(span, repeat=homs.dim):
        if not any(combo):
            continue
        if tried >= max_candidates:
            return {"status": "inconclusive", "candidates_tried": tried}
        E = homs.from_coords([f.from_int(c) for c in combo])
        tried += 1
        hit = _frobenius_try(ext, E)
        if hit is not None:
            xs, ys = hit
            return {"status": "found", "map": E, "x": xs, "y": ys,
                    "candidates_tried": tried}
    return {"status": "inconclusive", "candidates_tried": tried}


def verify_frobenius_system(ext: RingExtension, E: Matrix, xs: list, ys: list):
    """Both counting identities, on every basis element of A."""
    f, A, B = ext.field, ext.A, ext.B
    emb = B.embedding_matrix()
    for k in range(A.dim):
        a = A.basis_vec(k)
        left = [f.zero] * A.dim
        right = [f.zero] * A.dim
        for x, y in zip(xs, ys):
            left = [f.add(u, v) for u, v in
                    zip(left, A.mul(x, emb.apply(E.apply(A.mul(y, a)))))]
            right = [f.add(u, v) for u, v in
                     zip(right, A.mul(emb.apply(E.apply(A.mul(a, x))), y))]
        if left != a or right != a:
            raise AlgebraError("Frobenius identities fail on basis element %d" % k)


# ---------------------------------------------------------------------------
# H-separability

class HSeparabilitySystem:
    """Pairs (e_i, r_i), e_i Casimir and r_i in R, with sum r_i e_i = 1 (x) 1.

    Induces a left quasibasis (e_i, right mult by r_i) and a right
    quasibasis (e_i, left mult by r_i).
    """

    def __init__(self, ext: RingExtension, pairs: list):
        self.ext = ext
        self.pairs = pairs  # [(tensor vec, r vec in A coords)]

    def __len__(self):
        return len(self.pairs)

    def verify(self):
        ext = self.ext
        f, rts = ext.field, ext.rts
        total = [f.zero] * rts.dim
        for e, r in self.pairs:
            if not ext.R.contains(r):
                raise AlgebraError("H-separability coefficient not in R")
            for i in range(ext.A.dim):
                a = ext.A.basis_vec(i)
                if rts.act_left(a, e) != rts.act_right(a, e):
                    raise AlgebraError("H-separability tensor not Casimir")
            vec_add_scaled(f, total, f.one, rts.act_left(r, e))
        if total != rts.unit:
            raise AlgebraError("H-separability pairs do not reassemble 1 (x) 1")

    def left_quasibasis(self) -> QuasiBasis:
        pairs = [(e, self.ext.A.rmul(r)) for e, r in self.pairs]
        qb = QuasiBasis(self.ext, "left", pairs)
        qb.verify()
        return qb

    def right_quasibasis(self) -> QuasiBasis:
        pairs = [(e, self.ext.A.lmul(r)) for e, r in self.pairs]
        qb = QuasiBasis(self.ext, "right", pairs)
        qb.verify()
        return qb


def h_separability_system(ext: RingExtension) -> dict:
    """Solve sum r_i e_i = 1 (x) 1 over R-basis times Casimir-basis products.

    On success the derived left/right quasibases are verified as well,
    so a found system always certifies depth two.
    """
    f, rts, R = ext.field, ext.rts, ext.R
    cas = ext.casimir
    if not cas:
        return {"status": "provably-none", "reason": "Casimir space is zero"}
    cols, tags = [], []
    for ri in range(R.dim):
        r = R.basis[ri]
        for ci, e in enumerate(cas):
            cols.append(rts.act_left(r, e))
            tags.append((ri, ci))
    coords = span_membership(f, cols, rts.unit)
    if coords is None:
        span_dim = len(row_space(f, cols, width=rts.dim))
        return {
            "status": "provably-none",
            "reason": "1 (x) 1 outside R . Casimir",
            "span_dim": span_dim,
            "casimir_dim": len(cas),
        }
    r_for = {}
    for c, (ri, ci) in zip(coords, tags):
        if c:
            vec = r_for.setdefault(ci, [f.zero] * ext.A.dim)
            vec_add_scaled(f, vec, c, R.basis[ri])
    pairs = [(cas[ci], r) for ci, r in sorted(r_for.items())]
    system = HSeparabilitySystem(ext, pairs)
    system.verify()
    system.left_quasibasis()
    system.right_quasibasis()
    return {"status": "found", "system": system, "casimir_dim": len(cas)}
