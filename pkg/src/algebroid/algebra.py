"""Finite-dimensional unital algebras given by structure constants.

Everything downstream (ring extensions, corings, bialgebroids) reduces to
exact linear algebra over these: multiplication tables, embedded
subalgebras, centralizers, the trace-form radical, tensor squares over a
subring, and solved spaces of bimodule maps.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from .linalg import (
    Echelon,
    Matrix,
    QuotientSpace,
    dict_to_vec,
    iterative_kernel,
    kernel,
    kernel_from_rows,
    row_space,
    span_membership,
    subspace_contains,
    subspace_equal,
    unit_vec,
    vec_add_scaled,
    vec_is_zero,
    vec_to_dict,
)


class AlgebraError(ValueError):
    pass


class UnsupportedCharacteristic(AlgebraError):
    """Raised when the trace-form radical is not reliable over the field."""


class TheoremViolation(RuntimeError):
    """A verified theorem hypothesis held but its conclusion failed."""


class FinDimAlgebra:
    """Unital associative algebra on an ordered basis e_0..e_{n-1}.

    Multiplication is either an explicit table (table[i][j] = coordinates
    of e_i e_j) or a function computing rows on demand; large totals such
    as endomorphism algebras use the lazy form so no cubic array is ever
    materialized.
    """

    def __init__(self, field, dim: int, unit: list, table=None,
                 mul_fn: Optional[Callable[[int, int], list]] = None,
                 cache: bool = True, name: str = ""):
        if (table is None) == (mul_fn is None):
            raise AlgebraError("exactly one of table / mul_fn required")
        self.field = field
        self.dim = dim
        self.unit = list(unit)
        self.table = table
        self._mul_fn = mul_fn
        self._cache: Optional[dict] = {} if (mul_fn is not None and cache) else None
        self.name = name

    def __repr__(self):
        return f"FinDimAlgebra({self.name or 'dim %d' % self.dim} over {self.field!r})"

    def basis_vec(self, i: int) -> list:
        return unit_vec(self.field, self.dim, i)

    def mul_basis(self, i: int, j: int) -> list:
        if self.table is not None:
            return self.table[i][j]
        if self._cache is not None:
            key = (i, j)
            row = self._cache.get(key)
            if row is None:
                row = self._mul_fn(i, j)
                self._cache[key] = row
            return row
        return self._mul_fn(i, j)

    def mul(self, x: list, y: list) -> list:
        f = self.field
        out = [f.zero] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                vec_add_scaled(f, out, f.mul(a, b), self.mul_basis(i, j))
        return out

    def lmul(self, x: list) -> Matrix:
        """Matrix of left multiplication by x."""
        f = self.field
        m = Matrix.zeros(f, self.dim, self.dim)
        for i, a in enumerate(x):
            if not a:
                continue
            for j in range(self.dim):
                row = self.mul_basis(i, j)
                for k, c in enumerate(row):
                    if c:
                        m.rows[k][j] = f.add(m.rows[k][j], f.mul(a, c))
        return m

    def rmul(self, x: list) -> Matrix:
        """Matrix of right multiplication by x."""
        f = self.field
        m = Matrix.zeros(f, self.dim, self.dim)
        for j, b in enumerate(x):
            if not b:
                continue
            for i in range(self.dim):
                row = self.mul_basis(i, j)
                for k, c in enumerate(row):
                    if c:
                        m.rows[k][i] = f.add(m.rows[k][i], f.mul(b, c))
        return m

    def is_commutative(self) -> bool:
        return all(
            self.mul_basis(i, j) == self.mul_basis(j, i)
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def power(self, x: list, n: int) -> list:
        out = list(self.unit)
        for _ in range(n):
            out = self.mul(out, x)
        return out

    def validate_unit(self):
        for i in range(self.dim):
            e = self.basis_vec(i)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise AlgebraError(f"unit axiom fails on basis element {i}")

    def validate_associativity(self):
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mul_basis(i, j)
                for k in range(self.dim):
                    left = self.mul(ij, self.basis_vec(k))
                    right = self.mul(self.basis_vec(i), self.mul_basis(j, k))
                    if left != right:
                        raise AlgebraError(f"associativity fails at basis triple ({i},{j},{k})")


def make_algebra(field, constants: list, unit: list, name: str = "") -> FinDimAlgebra:
    """Build and fully validate an algebra from an explicit constants cube.

    constants[i][j] is the coordinate list of e_i e_j.  Rejects
    non-associative or non-unital data.
    """
    dim = len(constants)
    for block in constants:
        if len(block) != dim or any(len(row) != dim for row in block):
            raise AlgebraError("structure constants must form a dim^3 cube")
    if len(unit) != dim:
        raise AlgebraError("unit vector length mismatch")
    alg = FinDimAlgebra(field, dim, unit, table=[[list(r) for r in block] for block in constants], name=name)
    alg.validate_unit()
    alg.validate_associativity()
    return alg


def group_algebra(field, table: list, name: str = "") -> FinDimAlgebra:
    """Group algebra k[G] from a multiplication table of element indices.

    The table is validated as a group (identity, inverses, associativity,
    Latin square), after which algebra axioms hold by construction.
    """
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise AlgebraError("group table must be n x n with entries in range")
    # identity
    ident = None
    for e in range(n):
        if all(table[e][g] == g and table[g][e] == g for g in range(n)):
            ident = e
            break
    if ident is None:
        raise AlgebraError("group table has no identity")
    # Latin square + inverses
    for g in range(n):
        if sorted(table[g]) != list(range(n)) or sorted(table[h][g] for h in range(n)) != list(range(n)):
            raise AlgebraError("group table is not a Latin square")
        if not any(table[g][h] == ident for h in range(n)):
            raise AlgebraError(f"element {g} has no inverse")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise AlgebraError("group table is not associative")
    if ident != 0:
        raise AlgebraError("convention: index 0 must be the group identity")
    alg_table = [[unit_vec(field, n, table[i][j]) for j in range(n)] for i in range(n)]
    return FinDimAlgebra(field, n, unit_vec(field, n, ident), table=alg_table,
                         name=name or f"k[G{n}]")


def matrix_algebra(field, n: int) -> FinDimAlgebra:
    """Full matrix algebra M_n(k) on the basis e_{pq}, index p*n+q."""
    dim = n * n
    f = field
    table = []
    for i in range(dim):
        p, q = divmod(i, n)
        row_block = []
        for j in range(dim):
            u, v = divmod(j, n)
            out = [f.zero] * dim
            if q == u:
                out[p * n + v] = f.one
            row_block.append(out)
        table.append(row_block)
    unit = [f.zero] * dim
    for p in range(n):
        unit[p * n + p] = f.one
    return FinDimAlgebra(field, dim, unit, table=table, name=f"M{n}")


def opposite_algebra(A: FinDimAlgebra) -> FinDimAlgebra:
    return FinDimAlgebra(A.field, A.dim, A.unit,
                         mul_fn=lambda i, j: A.mul_basis(j, i),
                         cache=A.table is None,
                         name=f"{A.name}^op" if A.name else "op")


def tensor_algebra(A: FinDimAlgebra, B: FinDimAlgebra, eager: Optional[bool] = None) -> FinDimAlgebra:
    """A (x) B over the base field; basis index (i, j) -> i*dim(B) + j."""
    if A.field != B.field:
        raise AlgebraError("tensor factors over different fields")
    f = A.field
    da, db = A.dim, B.dim
    dim = da * db

    def mul_fn(x: int, y: int) -> list:
        i1, i2 = divmod(x, db)
        j1, j2 = divmod(y, db)
        ra = A.mul_basis(i1, j1)
        rb = B.mul_basis(i2, j2)
        out = [f.zero] * dim
        for k1, c1 in enumerate(ra):
            if c1:
                base = k1 * db
                for k2, c2 in enumerate(rb):
                    if c2:
                        out[base + k2] = f.mul(c1, c2)
        return out

    unit = [f.zero] * dim
    for k1, c1 in enumerate(A.unit):
        if c1:
            for k2, c2 in enumerate(B.unit):
                if c2:
                    unit[k1 * db + k2] = f.mul(c1, c2)
    if eager is None:
        eager = dim <= 64
    if eager:
        table = [[mul_fn(i, j) for j in range(dim)] for i in range(dim)]
        return FinDimAlgebra(f, dim, unit, table=table, name=f"({A.name})x({B.name})")
    return FinDimAlgebra(f, dim, unit, mul_fn=mul_fn, cache=False, name=f"({A.name})x({B.name})")


def algebras_equal(A: FinDimAlgebra, B: FinDimAlgebra) -> bool:
    """Same field, dimension, unit and multiplication table."""
    if A.field != B.field or A.dim != B.dim or A.unit != B.unit:
        return False
    return all(A.mul_basis(i, j) == B.mul_basis(i, j) for i in range(A.dim) for j in range(A.dim))


# ---------------------------------------------------------------------------
# subalgebras (always embedded: a basis inside a fixed ambient algebra)

class Subalgebra:
    """Unital subalgebra given by an explicit basis of ambient coordinates."""

    def __init__(self, ambient: FinDimAlgebra, basis: list, validate: bool = True):
        self.ambient = ambient
        self.basis = [list(v) for v in basis]
        self.field = ambient.field
        self._ech = Echelon(self.field, track=True)
        for v in self.basis:
            if self._ech.insert(vec_to_dict(v)) is None:
                raise AlgebraError("subalgebra basis is linearly dependent")
        if validate:
            self._validate()

    def _validate(self):
        if not self.contains(self.ambient.unit):
            raise AlgebraError("subalgebra does not contain the unit")
        for u in self.basis:
            for v in self.basis:
                if not self.contains(self.ambient.mul(u, v)):
                    raise AlgebraError("subalgebra basis is not multiplicatively closed")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec: list) -> bool:
        residual, _ = self._ech.reduce(vec_to_dict(vec))
        return not residual

    def coords(self, vec: list) -> Optional[list]:
        residual, combo = self._ech.reduce(vec_to_dict(vec))
        if residual:
            return None
        out = [self.field.zero] * self.dim
        for i, c in combo.items():
            out[i] = c
        return out

    def embed(self, coords: list) -> list:
        out = [self.field.zero] * self.ambient.dim
        for i, c in enumerate(coords):
            vec_add_scaled(self.field, out, c, self.basis[i])
        return out

    def algebra(self) -> FinDimAlgebra:
        """The subalgebra as an abstract algebra on its own basis."""
        f = self.field
        table = []
        for u in self.basis:
            row_block = []
            for v in self.basis:
                c = self.coords(self.ambient.mul(u, v))
                if c is None:
                    raise AlgebraError("subalgebra not closed")
                row_block.append(c)
            table.append(row_block)
        unit_c = self.coords(self.ambient.unit)
        return FinDimAlgebra(f, self.dim, unit_c, table=table, name="sub")

    def embedding_matrix(self) -> Matrix:
        return Matrix.from_columns(self.field, self.basis, nrows=self.ambient.dim)

    def same_subspace(self, other: "Subalgebra") -> bool:
        return subspace_equal(self.field, self.basis, other.basis)

    @classmethod
    def from_generators(cls, ambient: FinDimAlgebra, generators: list) -> "Subalgebra":
        """Smallest unital subalgebra containing the generators (eager closure)."""
        f = ambient.field
        ech = Echelon(f)
        basis: list = []

        def add(v):
            if ech.insert(vec_to_dict(v)) is not None:
                basis.append(list(v))
                return True
            return False

        add(ambient.unit)
        for g in generators:
            add(g)
        grown = True
        while grown:
            grown = False
            snapshot = list(basis)
            for u in snapshot:
                for v in snapshot:
                    if add(ambient.mul(u, v)):
                        grown = True
        canon = row_space(f, basis, width=ambient.dim)
        return cls(ambient, canon, validate=True)


def unit_subalgebra(A: FinDimAlgebra) -> Subalgebra:
    return Subalgebra(A, [list(A.unit)], validate=False)


def full_subalgebra(A: FinDimAlgebra) -> Subalgebra:
    return Subalgebra(A, [A.basis_vec(i) for i in range(A.dim)], validate=False)


def center(A: FinDimAlgebra) -> Subalgebra:
    mats = ((A.lmul(A.basis_vec(i)).sub(A.rmul(A.basis_vec(i)))) for i in range(A.dim))
    basis = iterative_kernel(A.field, A.dim, mats)
    return Subalgebra(A, basis, validate=False)


def centralizer(A: FinDimAlgebra, sub_basis: list) -> Subalgebra:
    """C_A(S) for the subset spanned by sub_basis (ambient coordinates)."""
    mats = ((A.lmul(s).sub(A.rmul(s))) for s in sub_basis)
    basis = iterative_kernel(A.field, A.dim, mats)
    return Subalgebra(A, basis, validate=False)


def trace_form(A: FinDimAlgebra) -> Matrix:
    """Gram matrix (e_i, e_j) -> trace(L_{e_i} L_{e_j})."""
    f = A.field
    lmats = [A.lmul(A.basis_vec(i)) for i in range(A.dim)]
    G = Matrix.zeros(f, A.dim, A.dim)
    for i in range(A.dim):
        for j in range(A.dim):
            # trace of L_i L_j without forming the product
            acc = f.zero
            Li, Lj = lmats[i].rows, lmats[j].rows
            for r in range(A.dim):
                for k in range(A.dim):
                    if Li[r][k] and Lj[k][r]:
                        acc = f.add(acc, f.mul(Li[r][k], Lj[k][r]))
            G.rows[i][j] = acc
    return G


def radical(A: FinDimAlgebra) -> list:
    """Jacobson radical via the trace form.

    Only valid in characteristic 0 or p > dim(A); anything else raises
    UnsupportedCharacteristic rather than risking a wrong answer.
    """
    p = A.field.characteristic
    if p != 0 and p <= A.dim:
        raise UnsupportedCharacteristic(
            f"unsupported characteristic {p} for radical of a dim-{A.dim} algebra")
    return kernel(trace_form(A))


def is_central_split_simple(A: FinDimAlgebra) -> bool:
    """Semisimple with one-dimensional center: trace-form radical zero and
    dim Z(A) = 1.  (Deliberately narrower than abstract simplicity.)"""
    return len(radical(A)) == 0 and center(A).dim == 1


# ---------------------------------------------------------------------------
# algebra morphisms

class AlgebraMorphism:
    """Linear map between algebras checked to be a (anti)homomorphism."""

    def __init__(self, source: FinDimAlgebra, target: FinDimAlgebra, matrix: Matrix,
                 anti: bool = False, validate: bool = True):
        self.source = source
        self.target = target
        self.matrix = matrix
        self.anti = anti
        if matrix.nrows != target.dim or matrix.ncols != source.dim:
            raise AlgebraError("morphism matrix shape mismatch")
        if validate:
            self.validate()

    def apply(self, vec: list) -> list:
        return self.matrix.apply(vec)

    def validate(self):
        if self.apply(self.source.unit) != self.target.unit:
            raise AlgebraError("morphism does not preserve the unit")
        for i in range(self.source.dim):
            fi = self.apply(self.source.basis_vec(i))
            for j in range(self.source.dim):
                fj = self.apply(self.source.basis_vec(j))
                lhs = self.apply(self.source.mul_basis(i, j))
                rhs = self.target.mul(fj, fi) if self.anti else self.target.mul(fi, fj)
                if lhs != rhs:
                    kind = "anti-homomorphism" if self.anti else "homomorphism"
                    raise AlgebraError(f"{kind} fails on basis pair ({i},{j})")

    def is_bijective(self) -> bool:
        return self.source.dim == self.target.dim and self.matrix.inverse() is not None


# ---------------------------------------------------------------------------
# relative tensor square A (x)_B A

class RelativeTensorSquare:
    """A (x)_B A as an explicit quotient of A (x)_k A.

    Quotient coordinates come with a pure-tensor section; the left and
    right A-action matrices and the multiplication map mu(a (x) a') = aa'
    are precomputed per basis element.
    """

    def __init__(self, A: FinDimAlgebra, B: Subalgebra):
        self.A = A
        self.B = B
        f = A.field
        n = A.dim
        self.field = f

        def relations():
            for b in B.basis:
                rb_l = A.lmul(b)  # b * e_j
                rb_r = A.rmul(b)  # e_i * b
                for i in range(n):
                    col_ib = rb_r.column(i)  # e_i b
                    for j in range(n):
                        # (e_i b) (x) e_j - e_i (x) (b e_j)
                        row: dict = {}
                        for k, c in enumerate(col_ib):
                            if c:
                                row[k * n + j] = c
                        col_bj = rb_l.column(j)
                        for k, c in enumerate(col_bj):
                            if c:
                                key = i * n + k
                                cur = row.get(key, f.zero)
                                nxt = f.sub(cur, c)
                                if nxt:
                                    row[key] = nxt
                                else:
                                    row.pop(key, None)
                        if row:
                            yield row

        self.space = QuotientSpace(f, n * n, relations())
        self.dim = self.space.dim
        # pure-tensor sections
        self.section_pairs = [divmod(self.space.section_col(k), n) for k in range(self.dim)]
        # action matrices per A-basis element
        self.left_mats = []
        self.right_mats = []
        for a_idx in range(n):
            L = Matrix.zeros(f, self.dim, self.dim)
            R = Matrix.zeros(f, self.dim, self.dim)
            for k, (p, q) in enumerate(self.section_pairs):
                ap = A.mul_basis(a_idx, p)
                d: dict = {}
                for t, c in enumerate(ap):
                    if c:
                        d[t * n + q] = c
                for kk, c in self.space.project_dict(d).items():
                    L.rows[kk][k] = c
                qa = A.mul_basis(q, a_idx)
                d = {}
                for t, c in enumerate(qa):
                    if c:
                        d[p * n + t] = c
                for kk, c in self.space.project_dict(d).items():
                    R.rows[kk][k] = c
            self.left_mats.append(L)
            self.right_mats.append(R)
        # mu: quotient -> A, a (x) a' -> a a'
        mu = Matrix.zeros(f, n, self.dim)
        for k, (p, q) in enumerate(self.section_pairs):
            for t, c in enumerate(A.mul_basis(p, q)):
                if c:
                    mu.rows[t][k] = c
        self.mu = mu
        self.unit = self.project_pure(A.unit, A.unit)

    def project_pure(self, x: list, y: list) -> list:
        f = self.field
        n = self.A.dim
        d: dict = {}
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        d[i * n + j] = f.mul(a, b)
        return dict_to_vec(f, self.space.project_dict(d), self.dim)

    def section_terms(self, t: list) -> list:
        """Pure-tensor expansion [(p, q, coeff)] of a chosen representative."""
        return [(p, q, c) for (p, q), c in zip(self.section_pairs, t) if c]

    def act_left(self, x: list, t: list) -> list:
        f = self.field
        out = [f.zero] * self.dim
        for i, c in enumerate(x):
            if c:
                vec_add_scaled(f, out, c, self.left_mats[i].apply(t))
        return out

    def act_right(self, x: list, t: list) -> list:
        f = self.field
        out = [f.zero] * self.dim
        for i, c in enumerate(x):
            if c:
                vec_add_scaled(f, out, c, self.right_mats[i].apply(t))
        return out


def _difference_rows(L: Matrix, R: Matrix):
    """Sparse rows of L - R, skipping zero rows."""
    f = L.field
    for lr, rr in zip(L.rows, R.rows):
        row: dict = {}
        for j, (a, b) in enumerate(zip(lr, rr)):
            if a or b:
                c = f.sub(a, b)
                if c:
                    row[j] = c
        if row:
            yield row


def b_central_elements(rts: RelativeTensorSquare) -> list:
    """Basis of T = {t : b t = t b for all b in B} inside A (x)_B A."""
    def rows():
        for b in rts.B.basis:
            L = _action_matrix(rts, b, left=True)
            R = _action_matrix(rts, b, left=False)
            yield from _difference_rows(L, R)
    return kernel_from_rows(rts.field, rts.dim, rows())


def casimir_elements(rts: RelativeTensorSquare) -> list:
    """Basis of (A (x)_B A)^A: elements with a e = e a for every a in A."""
    def rows():
        for i in range(rts.A.dim):
            yield from _difference_rows(rts.left_mats[i], rts.right_mats[i])
    return kernel_from_rows(rts.field, rts.dim, rows())


def _action_matrix(rts: RelativeTensorSquare, x: list, left: bool) -> Matrix:
    f = rts.field
    out = Matrix.zeros(f, rts.dim, rts.dim)
    mats = rts.left_mats if left else rts.right_mats
    for i, c in enumerate(x):
        if c:
            M = mats[i]
            for r in range(rts.dim):
                row = M.rows[r]
                orow = out.rows[r]
                for k, v in enumerate(row):
                    if v:
                        orow[k] = f.add(orow[k], f.mul(c, v))
    return out


# ---------------------------------------------------------------------------
# solved spaces of constrained linear maps (bimodule homs)

class MapSpace:
    """Solution space of linear maps dom -> cod under intertwining constraints.

    Holds a canonical (RREF, flattened row-major) basis of matrices and
    supports exact coordinate extraction for members.
    """

    def __init__(self, field, dom_dim: int, cod_dim: int, flat_basis: list):
        self.field = field
        self.dom_dim = dom_dim
        self.cod_dim = cod_dim
        self.flat_basis = flat_basis
        self.maps = [Matrix.unflatten(field, v, cod_dim, dom_dim) for v in flat_basis]
        self._ech = Echelon(field, track=True)
        for v in flat_basis:
            self._ech.insert(vec_to_dict(v))

    @property
    def dim(self) -> int:
        return len(self.flat_basis)

    def coords_flat(self, flat: list) -> Optional[list]:
        residual, combo = self._ech.reduce(vec_to_dict(flat))
        if residual:
            return None
        out = [self.field.zero] * self.dim
        for i, c in combo.items():
            out[i] = c
        return out

    def coords(self, M: Matrix) -> Optional[list]:
        return self.coords_flat(M.flatten())

    def from_coords(self, coords: list) -> Matrix:
        f = self.field
        flat = [f.zero] * (self.dom_dim * self.cod_dim)
        for i, c in enumerate(coords):
            vec_add_scaled(f, flat, c, self.flat_basis[i])
        return Matrix.unflatten(f, flat, self.cod_dim, self.dom_dim)


def intertwiner_space(field, dom_dim: int, cod_dim: int,
                      constraints: Iterable[tuple]) -> MapSpace:
    """Maps F with F . D = C . F for every constraint pair (D, C).

    Unknowns are the flattened entries of F (row-major, F[out][in]).
    Solved by iterative restriction, then canonicalized to RREF.
    """
    n_unknown = dom_dim * cod_dim
    basis = [unit_vec(field, n_unknown, i) for i in range(n_unknown)]
    for D, C in constraints:
        if not basis:
            break
        images = []
        for flat in basis:
            F = Matrix.unflatten(field, flat, cod_dim, dom_dim)
            defect = F.mul(D).sub(C.mul(F))
            images.append(defect.flatten())
        K = kernel(Matrix.from_columns(field, images, nrows=n_unknown))
        new_basis = []
        for cvec in K:
            w = [field.zero] * n_unknown
            for j, v in enumerate(basis):
                vec_add_scaled(field, w, cvec[j], v)
            new_basis.append(w)
        basis = new_basis
    canon = row_space(field, basis, width=n_unknown)
    return MapSpace(field, dom_dim, cod_dim, canon)


def bimodule_hom_space(A: FinDimAlgebra, B: Subalgebra, *, left: bool = True,
                       right: bool = True, codomain: str = "A") -> MapSpace:
    """Hom of B-modules A -> A or A -> B.

    left/right select which module structures are enforced:
    left  -> F(b a) = b F(a); right -> F(a b) = F(a) b.
    codomain "B" returns maps in B-coordinates.
    """
    f = A.field
    if codomain == "A":
        cod_dim = A.dim
        cod_l = lambda b: A.lmul(b)
        cod_r = lambda b: A.rmul(b)
    elif codomain == "B":
        Balg = B.algebra()
        cod_dim = B.dim
        cod_l = lambda b: Balg.lmul(B.coords(b))
        cod_r = lambda b: Balg.rmul(B.coords(b))
    else:
        raise AlgebraError("codomain must be 'A' or 'B'")
    constraints = []
    for b in B.basis:
        if left:
            constraints.append((A.lmul(b), cod_l(b)))
        if right:
            constraints.append((A.rmul(b), cod_r(b)))
    return intertwiner_space(f, A.dim, cod_dim, constraints)


def bimodule_maps_from_rts(rts: RelativeTensorSquare, cod_dim: int,
                           cod_left: list, cod_right: list) -> MapSpace:
    """B-B-bimodule maps A (x)_B A -> codomain.

    cod_left/cod_right are action matrices of the B-basis on the codomain.
    """
    constraints = []
    for idx, b in enumerate(rts.B.basis):
        constraints.append((_action_matrix(rts, b, left=True), cod_left[idx]))
        constraints.append((_action_matrix(rts, b, left=False), cod_right[idx]))
    return intertwiner_space(rts.field, rts.dim, cod_dim, constraints)
