"""Dense exact linear algebra with deterministic pivoting.

Row reduction always picks the first nonzero column and, within it, the
first row carrying a nonzero entry, so echelon bases, solutions and kernel
bases are reproducible run to run.  Inner loops skip zero entries, which
keeps the dense representation usable on the large but very sparse systems
the tensor-square quotients produce.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from .fields import FieldError


class LinalgError(ValueError):
    pass


def check_same_field(f1, f2):
    if f1 != f2:
        raise FieldError(f"mixed fields: {f1!r} vs {f2!r}")


# ---------------------------------------------------------------------------
# vector helpers (vectors are plain lists of field scalars)

def unit_vec(field, n: int, i: int) -> list:
    v = [field.zero] * n
    v[i] = field.one
    return v


def vec_add(field, u: list, v: list) -> list:
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field, u: list, v: list) -> list:
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_scale(field, c, u: list) -> list:
    if not c:
        return [field.zero] * len(u)
    return [field.mul(c, a) for a in u]


def vec_add_scaled(field, u: list, c, v: list) -> None:
    """u += c*v in place, skipping zero entries of v."""
    if not c:
        return
    mul, add = field.mul, field.add
    for j, x in enumerate(v):
        if x:
            u[j] = add(u[j], mul(c, x))


def vec_is_zero(u: list) -> bool:
    return not any(u)


def vec_to_dict(u: list) -> dict:
    return {j: x for j, x in enumerate(u) if x}


def dict_to_vec(field, d: dict, n: int) -> list:
    v = [field.zero] * n
    for j, x in d.items():
        v[j] = x
    return v


# ---------------------------------------------------------------------------
# Matrix

class Matrix:
    """Dense matrix over an exact field; rows are lists of scalars."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows: list, ncols: Optional[int] = None, copy: bool = True):
        self.field = field
        if copy:
            rows = [list(r) for r in rows]
        self.rows = rows
        self.nrows = len(rows)
        if rows:
            self.ncols = len(rows[0])
            for r in rows:
                if len(r) != self.ncols:
                    raise LinalgError("ragged rows")
        else:
            if ncols is None:
                raise LinalgError("empty matrix needs an explicit column count")
            self.ncols = ncols

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols=ncols, copy=False)

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field, cols: list, nrows: Optional[int] = None) -> "Matrix":
        if not cols:
            if nrows is None:
                raise LinalgError("empty column list needs an explicit row count")
            return cls.zeros(field, nrows, 0)
        n = len(cols[0])
        m = cls.zeros(field, n, len(cols))
        for j, c in enumerate(cols):
            if len(c) != n:
                raise LinalgError("ragged columns")
            for i, x in enumerate(c):
                if x:
                    m.rows[i][j] = x
        return m

    # -- basic ops ----------------------------------------------------------

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, ncols=self.ncols)

    def row(self, i: int) -> list:
        return list(self.rows[i])

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field!r})"

    def add(self, other: "Matrix") -> "Matrix":
        self._shape_check(other, same=True)
        f = self.field
        return Matrix(
            f,
            [[f.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            ncols=self.ncols,
            copy=False,
        )

    def sub(self, other: "Matrix") -> "Matrix":
        self._shape_check(other, same=True)
        f = self.field
        return Matrix(
            f,
            [[f.sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            ncols=self.ncols,
            copy=False,
        )

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(f, [[f.mul(c, a) for a in r] for r in self.rows], ncols=self.ncols, copy=False)

    def _shape_check(self, other: "Matrix", same: bool = False):
        check_same_field(self.field, other.field)
        if same:
            if self.nrows != other.nrows or self.ncols != other.ncols:
                raise LinalgError(f"shape mismatch {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")
        else:
            if self.ncols != other.nrows:
                raise LinalgError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")

    def mul(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        f = self.field
        out = Matrix.zeros(f, self.nrows, other.ncols)
        orows = other.rows
        for i, arow in enumerate(self.rows):
            orow = out.rows[i]
            for k, x in enumerate(arow):
                if x:
                    vec_add_scaled(f, orow, x, orows[k])
        return out

    def __matmul__(self, other):
        return self.mul(other)

    def apply(self, vec: list) -> list:
        """Matrix times column vector."""
        if len(vec) != self.ncols:
            raise LinalgError("vector length mismatch")
        f = self.field
        out = [f.zero] * self.nrows
        for i, arow in enumerate(self.rows):
            acc = f.zero
            for k, x in enumerate(arow):
                if x and vec[k]:
                    acc = f.add(acc, f.mul(x, vec[k]))
            out[i] = acc
        return out

    def transpose(self) -> "Matrix":
        f = self.field
        out = Matrix.zeros(f, self.ncols, self.nrows)
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if x:
                    out.rows[j][i] = x
        return out

    def hstack(self, other: "Matrix") -> "Matrix":
        check_same_field(self.field, other.field)
        if self.nrows != other.nrows:
            raise LinalgError("row count mismatch in hstack")
        return Matrix(self.field, [r1 + r2 for r1, r2 in zip(self.rows, other.rows)],
                      ncols=self.ncols + other.ncols, copy=False)

    def flatten(self) -> list:
        out = []
        for r in self.rows:
            out.extend(r)
        return out

    @classmethod
    def unflatten(cls, field, vec: list, nrows: int, ncols: int) -> "Matrix":
        if len(vec) != nrows * ncols:
            raise LinalgError("flat vector length mismatch")
        return cls(field, [vec[i * ncols:(i + 1) * ncols] for i in range(nrows)], ncols=ncols)

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    # -- elimination --------------------------------------------------------

    def rref(self) -> tuple["Matrix", list]:
        rows = [list(r) for r in self.rows]
        pivots = rref_rows(self.field, rows)
        return Matrix(self.field, rows, ncols=self.ncols, copy=False), pivots

    def rank(self) -> int:
        rows = [list(r) for r in self.rows]
        return len(rref_rows(self.field, rows))

    def inverse(self) -> Optional["Matrix"]:
        if self.nrows != self.ncols:
            return None
        n = self.nrows
        f = self.field
        aug = [list(r) + unit_vec(f, n, i) for i, r in enumerate(self.rows)]
        pivots = rref_rows(f, aug)
        if len(pivots) != n or any(c != i for i, (_, c) in enumerate(pivots)):
            return None
        inv_rows = [aug[i][n:] for i in range(n)]
        return Matrix(f, inv_rows, ncols=n, copy=False)


def rref_rows(field, rows: list) -> list:
    """In-place reduced row echelon form; returns [(row, col)] pivot list.

    Deterministic: scans columns left to right and picks the first row with
    a nonzero entry (no magnitude-based pivoting; arithmetic is exact).
    """
    if not rows:
        return []
    nrows = len(rows)
    ncols = len(rows[0])
    sub, mul, div, neg = field.sub, field.mul, field.div, field.neg
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != field.one:
            inv = field.inv(lead)
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = mul(inv, prow[j])
        for i in range(nrows):
            if i != r and rows[i][c]:
                coef = rows[i][c]
                row_i = rows[i]
                for j in range(c, ncols):
                    if prow[j]:
                        row_i[j] = sub(row_i[j], mul(coef, prow[j]))
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    return pivots


def kernel(M: Matrix) -> list:
    """Canonical kernel basis: one vector per free column, free entry set to 1."""
    R, pivots = M.rref()
    f = M.field
    pivot_cols = {c: r for r, c in pivots}
    free_cols = [c for c in range(M.ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [f.zero] * M.ncols
        v[fc] = f.one
        for c, r in pivot_cols.items():
            x = R.rows[r][fc]
            if x:
                v[c] = f.neg(x)
        basis.append(v)
    return basis


def solve(M: Matrix, b: list):
    """Solve M x = b exactly.

    Returns (particular, kernel_basis) or None when the system is
    inconsistent.  The particular solution sets all free variables to zero.
    """
    if len(b) != M.nrows:
        raise LinalgError("right-hand side length mismatch")
    f = M.field
    aug = [list(r) + [b[i]] for i, r in enumerate(M.rows)]
    if not aug:
        return [f.zero] * M.ncols, kernel(M)
    pivots = rref_rows(f, aug)
    n = M.ncols
    for r, c in pivots:
        if c == n:
            return None  # pivot in the augmented column: inconsistent
    x = [f.zero] * n
    for r, c in pivots:
        x[c] = aug[r][n]
    pivot_cols = {c: r for r, c in pivots}
    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [f.zero] * n
        v[fc] = f.one
        for c, r in pivot_cols.items():
            y = aug[r][fc]
            if y:
                v[c] = f.neg(y)
        basis.append(v)
    return x, basis


def span_membership(field, generators: list, target: list) -> Optional[list]:
    """Coordinates of target in the span of generators, or None.

    Returns a list c with target == sum(c[i] * generators[i]); the empty
    generator list with a nonzero target yields None, not an error.
    """
    ech = Echelon(field, track=True)
    for g in generators:
        ech.insert(vec_to_dict(g))
    residual, combo = ech.reduce(vec_to_dict(target))
    if residual:
        return None
    coords = [field.zero] * len(generators)
    for i, c in combo.items():
        coords[i] = c
    return coords


def row_space(field, vectors: Iterable[list], width: Optional[int] = None) -> list:
    """RREF basis of the span of the given vectors (deterministic)."""
    ech = Echelon(field)
    n = width
    for v in vectors:
        n = len(v) if n is None else n
        ech.insert(vec_to_dict(v))
    if n is None:
        raise LinalgError("row_space of empty iterable needs an explicit width")
    return ech.basis_vectors(n)


def subspace_contains(field, basis: list, vectors: Iterable[list]) -> bool:
    ech = Echelon(field)
    for v in basis:
        ech.insert(vec_to_dict(v))
    for v in vectors:
        residual, _ = ech.reduce(vec_to_dict(v))
        if residual:
            return False
    return True


def subspace_equal(field, basis1: list, basis2: list) -> bool:
    ech1 = Echelon(field)
    for v in basis1:
        ech1.insert(vec_to_dict(v))
    ech2 = Echelon(field)
    for v in basis2:
        ech2.insert(vec_to_dict(v))
    if ech1.dim() != ech2.dim():
        return False
    return all(not ech2.reduce(r)[0] for r in ech1.rows.values())


def intersect(field, basis_u: list, basis_v: list, ambient: int) -> list:
    """RREF basis of span(basis_u) ∩ span(basis_v)."""
    if not basis_u or not basis_v:
        return []
    cols = [list(u) for u in basis_u] + [[field.neg(x) for x in v] for v in basis_v]
    M = Matrix.from_columns(field, cols, nrows=ambient)
    combos = kernel(M)
    vecs = []
    for c in combos:
        w = [field.zero] * ambient
        for i, u in enumerate(basis_u):
            vec_add_scaled(field, w, c[i], u)
        vecs.append(w)
    return row_space(field, vecs, width=ambient)


# ---------------------------------------------------------------------------
# sparse incremental echelon

class Echelon:
    """Incremental reduced row echelon accumulator over sparse dict rows.

    Rows are dicts {column: scalar}.  The stored rows stay fully
    inter-reduced (RREF), so reducing a vector is a single increasing pass
    over its pivot-column hits.  With track=True each stored row also
    carries its expression in terms of the inserted vectors, which gives
    span-membership coordinates.
    """

    def __init__(self, field, track: bool = False):
        self.field = field
        self.rows: dict[int, dict] = {}
        self.combos: Optional[dict[int, dict]] = {} if track else None
        self.count = 0  # how many vectors have been inserted

    def dim(self) -> int:
        return len(self.rows)

    def pivot_cols(self) -> list:
        return sorted(self.rows)

    def reduce(self, vec: dict) -> tuple[dict, dict]:
        """Reduce a sparse vector; returns (residual, combo).

        combo maps insertion indices to coefficients such that
        residual = vec - sum(combo[i] * inserted_i)  (combo empty when not
        tracking).
        """
        f = self.field
        v = dict(vec)
        combo: dict = {}
        hits = sorted(c for c in v if c in self.rows)
        for c in hits:
            coef = v.get(c)
            if not coef:
                continue
            row = self.rows[c]
            sub, mul = f.sub, f.mul
            for j, x in row.items():
                cur = v.get(j, f.zero)
                nxt = sub(cur, mul(coef, x))
                if nxt:
                    v[j] = nxt
                else:
                    v.pop(j, None)
            if self.combos is not None:
                for i, x in self.combos[c].items():
                    cur = combo.get(i, f.zero)
                    nxt = f.add(cur, f.mul(coef, x))
                    if nxt:
                        combo[i] = nxt
                    else:
                        combo.pop(i, None)
        return v, combo

    def insert(self, vec: dict) -> Optional[int]:
        """Insert a vector; returns its pivot column, or None if dependent."""
        f = self.field
        idx = self.count
        self.count += 1
        residual, combo = self.reduce(vec)
        if not residual:
            return None
        c = min(residual)
        lead = residual[c]
        if lead != f.one:
            inv = f.inv(lead)
            residual = {j: f.mul(inv, x) for j, x in residual.items()}
            if self.combos is not None:
                combo = {i: f.mul(inv, x) for i, x in combo.items()}
        if self.combos is not None:
            # residual = vec/lead - sum(combo_i * g_i): flip to expression of row
            expr = {i: f.neg(x) for i, x in combo.items()}
            cur = expr.get(idx, f.zero)
            expr[idx] = f.add(cur, f.inv(lead) if lead != f.one else f.one)
            self.combos[c] = expr
        # back-reduce existing rows to keep full RREF
        for pc, row in self.rows.items():
            coef = row.get(c)
            if coef:
                for j, x in residual.items():
                    cur = row.get(j, f.zero)
                    nxt = f.sub(cur, f.mul(coef, x))
                    if nxt:
                        row[j] = nxt
                    else:
                        row.pop(j, None)
                if self.combos is not None:
                    expr = self.combos[pc]
                    for i, x in self.combos[c].items():
                        cur = expr.get(i, f.zero)
                        nxt = f.sub(cur, f.mul(coef, x))
                        if nxt:
                            expr[i] = nxt
                        else:
                            expr.pop(i, None)
        self.rows[c] = residual
        return c

    def basis_vectors(self, width: int) -> list:
        f = self.field
        out = []
        for c in sorted(self.rows):
            out.append(dict_to_vec(f, self.rows[c], width))
        return out


# ---------------------------------------------------------------------------
# quotient spaces of a coordinate space by a relation span

class QuotientSpace:
    """V/W for an ambient coordinate space V and relation span W.

    The relation span is held as a sparse RREF; quotient coordinates are
    the non-pivot ambient columns, so the canonical section sends each
    quotient basis vector to a single ambient unit vector and
    project(section(x)) == x by construction.
    """

    def __init__(self, field, ambient_dim: int, relation_rows: Iterable[dict]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.ech = Echelon(field)
        for row in relation_rows:
            self.ech.insert(row)
        pivot = set(self.ech.rows)
        self.coord_cols = [c for c in range(ambient_dim) if c not in pivot]
        self.col_index = {c: k for k, c in enumerate(self.coord_cols)}
        self.dim = len(self.coord_cols)

    def project_dict(self, vec: dict) -> dict:
        residual, _ = self.ech.reduce(vec)
        return {self.col_index[c]: x for c, x in residual.items()}

    def project(self, vec: list) -> list:
        d = self.project_dict(vec_to_dict(vec))
        return dict_to_vec(self.field, d, self.dim)

    def section_col(self, k: int) -> int:
        return self.coord_cols[k]

    def section_dict(self, qvec: list) -> dict:
        return {self.coord_cols[k]: x for k, x in enumerate(qvec) if x}

    def section(self, qvec: list) -> list:
        return dict_to_vec(self.field, self.section_dict(qvec), self.ambient_dim)

    def projection_matrix(self) -> Matrix:
        cols = []
        for c in range(self.ambient_dim):
            d = self.project_dict({c: self.field.one})
            cols.append(dict_to_vec(self.field, d, self.dim))
        return Matrix.from_columns(self.field, cols, nrows=self.dim)

    def section_matrix(self) -> Matrix:
        m = Matrix.zeros(self.field, self.ambient_dim, self.dim)
        for k, c in enumerate(self.coord_cols):
            m.rows[c][k] = self.field.one
        return m


def iterative_kernel(field, dim: int, constraint_matrices: Iterable[Matrix]) -> list:
    """Common kernel of a family of matrices acting on a dim-space.

    Restricts the running solution space one constraint at a time, which is
    much cheaper than stacking when early constraints already cut the space
    down.  Returns an RREF basis.
    """
    basis = [unit_vec(field, dim, i) for i in range(dim)]
    for M in constraint_matrices:
        if not basis:
            return []
        images = [M.apply(v) for v in basis]
        K = kernel(Matrix.from_columns(field, images, nrows=M.nrows))
        new_basis = []
        for c in K:
            w = [field.zero] * dim
            for j, v in enumerate(basis):
                vec_add_scaled(field, w, c[j], v)
            new_basis.append(w)
        basis = new_basis
    return row_space(field, basis, width=dim)


def kernel_from_rows(field, width: int, rows: Iterable[dict]) -> list:
    """Common kernel of sparse constraint rows, <row, v> = 0 for each row.

    Echelonizes the rows once and emits the free-column kernel basis;
    equivalent to kernel() on the stacked matrix without materializing it.
    Returns an RREF basis.
    """
    ech = Echelon(field)
    for row in rows:
        ech.insert(dict(row))
    out = []
    for c in range(width):
        if c in ech.rows:
            continue
        v = [field.zero] * width
        v[c] = field.one
        for p, row in ech.rows.items():
            x = row.get(c)
            if x:
                v[p] = field.neg(x)
        out.append(v)
    return row_space(field, out, width=width)
