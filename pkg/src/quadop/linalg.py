"""Exact linear algebra over the rationals.

Everything downstream (operad relations, Koszul duals, the locality ideal)
reduces to row reduction of sparse matrices with rational entries.  The public
containers speak Fraction, but internally every vector is scaled to a
primitive integer row (content 1) stored as a dict mapping column -> value.
That keeps arithmetic exact, keeps gcd stripping cheap, and avoids touching
the many zero columns that show up in the big band-structured systems.

Two containers:

* EchelonBasis: an incremental, order-dependent echelon form.  Cheap add and
  membership, no canonical form.  Used while sweeping generators into a space.
* SubspaceQ: a canonical reduced row echelon form (pivots 1, cleared above and
  below, rows sorted by pivot column).  Two SubspaceQ objects are equal iff
  they are the same subspace, so equality and hashing are structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

# A primitive integer row: column index -> nonzero integer value.
IntRow = dict[int, int]


def _as_int_row(vec) -> IntRow:
    """Normalise a vector (dense sequence or {col: value} mapping, entries
    int or Fraction) to a primitive integer row."""
    if isinstance(vec, dict):
        items = vec.items()
    else:
        items = enumerate(vec)
    fracs = {}
    for col, val in items:
        f = Fraction(val)
        if f:
            fracs[col] = f
    if not fracs:
        return {}
    denom_lcm = 1
    for f in fracs.values():
        d = f.denominator
        denom_lcm = denom_lcm // gcd(denom_lcm, d) * d
    row = {col: int(f * denom_lcm) for col, f in fracs.items()}
    return _strip_content(row)


def _strip_content(row: IntRow) -> IntRow:
    """Divide out the gcd of the values; make the leading value positive."""
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
    lead = min(row)
    if row[lead] < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _eliminate(vec: IntRow, row: IntRow, col: int) -> IntRow:
    """Return a*vec - b*row with the factors chosen so column `col` cancels.
    Both inputs must be nonzero at `col`."""
    a, b = row[col], vec[col]
    g = gcd(a, b)
    fa, fb = a // g, b // g
    out = {}
    for c, v in vec.items():
        out[c] = fa * v
    for c, v in row.items():
        w = out.get(c, 0) - fb * v
        if w:
            out[c] = w
        elif c in out:
            del out[c]
    return _strip_content(out)


class EchelonBasis:
    """Incremental echelon form over Q (kept as primitive integer rows).

    Rows are indexed by their pivot (leftmost nonzero) column, so membership
    testing is just repeated elimination of the current leading column.  The
    form is echelon but not reduced; use SubspaceQ when a canonical basis is
    needed.
    """

    __slots__ = ("ambient_dim", "_rows")

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: dict[int, IntRow] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def residual(self, vec) -> IntRow:
        """Reduce vec against the current rows.  Empty dict iff vec is in the
        span; otherwise a primitive row whose pivot is not yet in the basis."""
        v = _as_int_row(vec)
        while v:
            col = min(v)
            row = self._rows.get(col)
            if row is None:
                return v
            v = _eliminate(v, row, col)
        return v

    def contains(self, vec) -> bool:
        return not self.residual(vec)

    def add(self, vec) -> bool:
        """Add vec to the span.  Returns True if the rank grew."""
        v = self.residual(vec)
        if not v:
            return False
        self._rows[min(v)] = v
        return True

    def rows(self) -> list[IntRow]:
        """The current rows in pivot order (primitive integer form)."""
        return [self._rows[p] for p in sorted(self._rows)]


class SubspaceQ:
    """A subspace of Q^n in canonical reduced row echelon form.

    The basis is stored sparsely as a tuple of rows, each row a tuple of
    (column, Fraction) pairs in column order, with pivot entry 1 and pivot
    columns cleared in all other rows.  This form is unique for a given
    subspace, so __eq__ and __hash__ compare subspaces, not presentations.
    """

    __slots__ = ("ambient_dim", "_rows", "_memb")

    def __init__(self, ambient_dim: int, canonical_rows: tuple):
        # Not meant to be called directly; use from_vectors / from_echelon.
        self.ambient_dim = ambient_dim
        self._rows = canonical_rows
        self._memb: EchelonBasis | None = None

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors) -> "SubspaceQ":
        eb = EchelonBasis(ambient_dim)
        for v in vectors:
            eb.add(v)
        return cls.from_echelon(eb)

    @classmethod
    def from_echelon(cls, eb: EchelonBasis) -> "SubspaceQ":
        # Back-substitute to clear pivot columns above, then scale pivots to 1.
        pivots = sorted(eb._rows)
        reduced: dict[int, IntRow] = {p: dict(eb._rows[p]) for p in pivots}
        for p in reversed(pivots):
            below = reduced[p]
            for q in pivots:
                if q >= p:
                    break
                r = reduced[q]
                if p in r:
                    reduced[q] = _eliminate(r, below, p)
        rows = []
        for p in pivots:
            r = reduced[p]
            lead = Fraction(r[p])
            rows.append(tuple((c, Fraction(v) / lead) for c, v in sorted(r.items())))
        return cls(eb.ambient_dim, tuple(rows))

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(r[0][0] for r in self._rows)

    def basis(self) -> list[dict[int, Fraction]]:
        """Canonical basis vectors as {col: Fraction} mappings."""
        return [dict(r) for r in self._rows]

    def dense_basis(self) -> list[list[Fraction]]:
        out = []
        for r in self._rows:
            v = [Fraction(0)] * self.ambient_dim
            for c, x in r:
                v[c] = x
            out.append(v)
        return out

    def _membership(self) -> EchelonBasis:
        # Lazily built integer echelon used for contains(); idempotent, so a
        # benign race just builds it twice.
        eb = self._memb
        if eb is None:
            eb = EchelonBasis(self.ambient_dim)
            for r in self._rows:
                eb.add(dict(r))
            self._memb = eb
        return eb

    def contains(self, vec) -> bool:
        return self._membership().contains(vec)

    def contains_subspace(self, other: "SubspaceQ") -> bool:
        memb = self._membership()
        return all(memb.contains(dict(r)) for r in other._rows)

    def sum_with(self, other: "SubspaceQ") -> "SubspaceQ":
        self._check_ambient(other)
        eb = EchelonBasis(self.ambient_dim)
        for r in self._rows:
            eb.add(dict(r))
        for r in other._rows:
            eb.add(dict(r))
        return SubspaceQ.from_echelon(eb)

    def intersect(self, other: "SubspaceQ") -> "SubspaceQ":
        """Zassenhaus: echelonise rows [u|u] for u in self and [w|0] for w in
        other inside Q^(2n); rows supported entirely in the right half give a
        basis of the intersection."""
        self._check_ambient(other)
        n = self.ambient_dim
        eb = EchelonBasis(2 * n)
        for r in self._rows:
            v = {}
            for c, x in r:
                v[c] = x
                v[c + n] = x
            eb.add(v)
        for r in other._rows:
            eb.add(dict(r))
        inter = []
        for pivot, row in eb._rows.items():
            if pivot >= n:
                inter.append({c - n: v for c, v in row.items()})
        return SubspaceQ.from_vectors(n, inter)

    def perp(self) -> "SubspaceQ":
        """Orthogonal complement with respect to the standard dot product,
        i.e. the kernel of the matrix whose rows are the basis."""
        return kernel_basis(self.dense_basis(), self.ambient_dim)

    def _check_ambient(self, other: "SubspaceQ"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceQ):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self._rows))

    def __repr__(self) -> str:
        return f"SubspaceQ(dim={self.dim}, ambient={self.ambient_dim})"


def rref_canonical(rows, ambient_dim: int) -> tuple:
    """Canonical RREF of a list of vectors: tuple of sparse rows as stored by
    SubspaceQ.  Mostly a convenience wrapper used by tests."""
    return SubspaceQ.from_vectors(ambient_dim, rows)._rows


def invert_matrix(mat) -> list[list[Fraction]] | None:
    """Inverse of a square rational matrix by Gauss-Jordan on [M | I], or
    None if singular.  Dense; meant for the small generator-space matrices."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def kernel_basis(rows, ncols: int) -> SubspaceQ:
    """Kernel of the linear map Q^ncols -> Q^len(rows) given by a row list.

    Row-reduce the constraints, then read one kernel vector per free column:
    set that free coordinate to 1 and solve each pivot coordinate from its
    RREF row.  The result is re-canonicalised into a SubspaceQ.
    """
    constraints = SubspaceQ.from_vectors(ncols, rows)
    pivot_rows = constraints.basis()
    pivot_cols = set(constraints.pivots)
    kern = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v: dict[int, Fraction] = {free: Fraction(1)}
        for r in pivot_rows:
            coeff = r.get(free)
            if coeff:
                v[min(r)] = -coeff
        kern.append(v)
    return SubspaceQ.from_vectors(ncols, kern)
