"""Generator spaces and the weight-3 part of the free binary operad.

A binary quadratic operad is presented by a space V of binary generators
carrying an action of S2 and a space of relations inside the weight-3 part
F(3) of the free operad on V.  With d = dim V, F(3) has dimension 3*d*d and a
basis indexed by triples (sigma, outer, inner):

    (sigma, i, j)  <->  e_i(e_j(x_sigma(1), x_sigma(2)), x_sigma(3))

where sigma runs over the transversal REPS = {id, (123), (132)} of the inner
(12)-symmetry.  Flat index: sigma_idx * d*d + outer * d + inner.

The S2 action on V is recorded as a matrix in column convention:

    (12) . e_j = sum_m swap[m][j] e_m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from quadop.core.perms import CYC123, IDENT, REP_INDEX, REPS, SWAP12, Perm, compose, coset_decompose
from quadop.errors import InputError
from quadop.linalg import EchelonBasis, SubspaceQ

Vec = dict[int, Fraction]


@dataclass(frozen=True)
class GeneratorSpace:
    """A finite-dimensional S2-module with a chosen basis of named generators."""

    names: tuple[str, ...]
    swap: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        d = len(self.names)
        if len(self.swap) != d or any(len(row) != d for row in self.swap):
            raise InputError(f"swap matrix must be {d}x{d}")
        if len(set(self.names)) != d:
            raise InputError("generator names must be distinct")
        # (12) is an involution, so its matrix must square to the identity.
        for i in range(d):
            for j in range(d):
                acc = sum((self.swap[i][m] * self.swap[m][j] for m in range(d)), Fraction(0))
                if acc != (1 if i == j else 0):
                    raise InputError("swap matrix is not an involution")

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def free3_dim(self) -> int:
        return 3 * self.dim * self.dim

    def gen_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown generator {name!r}; have {list(self.names)}") from None

    def flat(self, sigma: Perm, outer: int, inner: int) -> int:
        d = self.dim
        return REP_INDEX[sigma] * d * d + outer * d + inner

    def unflat(self, index: int) -> tuple[Perm, int, int]:
        d = self.dim
        sigma_idx, rest = divmod(index, d * d)
        outer, inner = divmod(rest, d)
        return REPS[sigma_idx], outer, inner

    def swap_column(self, j: int) -> list[tuple[int, Fraction]]:
        """(12) . e_j as a list of (index, coefficient)."""
        return [(m, self.swap[m][j]) for m in range(self.dim) if self.swap[m][j]]


def free3_action(space: GeneratorSpace, perm: Perm) -> list[list[tuple[int, Fraction]]]:
    """Matrix of perm on F(3), column-sparse: entry list per basis column.

    perm . (sigma, i, j) relabels the arguments, giving the triple
    (perm . sigma, i, j).  Decompose perm . sigma = rep . tail over the inner
    (12); a nontrivial tail swaps the two inner arguments, which rewrites the
    inner generator e_j through the swap matrix.
    """
    d = space.dim
    one = Fraction(1)
    cols: list[list[tuple[int, Fraction]]] = []
    for sigma in REPS:
        rep, tail = coset_decompose(compose(perm, sigma))
        for i in range(d):
            for j in range(d):
                if tail == IDENT:
                    cols.append([(space.flat(rep, i, j), one)])
                else:
                    cols.append(
                        [(space.flat(rep, i, m), c) for m, c in space.swap_column(j)]
                    )
    return cols


def act(space: GeneratorSpace, perm: Perm, vec: Vec) -> Vec:
    """Apply perm to a weight-3 vector given as {flat index: coefficient}."""
    cols = free3_action(space, perm)
    out: Vec = {}
    for c, coeff in vec.items():
        if not coeff:
            continue
        for row, entry in cols[c]:
            val = out.get(row, Fraction(0)) + coeff * entry
            if val:
                out[row] = val
            elif row in out:
                del out[row]
    return out


def s3_closure(space: GeneratorSpace, vectors) -> SubspaceQ:
    """Smallest S3-stable subspace of F(3) containing the given vectors."""
    eb = EchelonBasis(space.free3_dim)
    for v in vectors:
        eb.add(v)
    # (12) and (123) generate S3; sweep until the rank stops growing.
    gens = (SWAP12, CYC123)
    while True:
        before = eb.rank
        for row in eb.rows():
            frac_row = {c: Fraction(v) for c, v in row.items()}
            for g in gens:
                eb.add(act(space, g, frac_row))
        if eb.rank == before:
            return SubspaceQ.from_echelon(eb)


def is_s3_stable(space: GeneratorSpace, sub: SubspaceQ) -> bool:
    for g in (SWAP12, CYC123):
        for row in sub.basis():
            if not sub.contains(act(space, g, row)):
                return False
    return True
