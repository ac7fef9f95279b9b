"""Koszul duals of binary quadratic operads.

The dual generator space is V* twisted by the sign representation.  In the
paired coordinate basis this means the dual swap matrix is the negated
transpose of the original.  The weight-3 pairing between the dual free space
and the free space is then the identity on matching (sigma, outer, inner)
monomials, and is S3-invariant up to the sign of the permutation; that sign
is checked in the tests, not re-derived here.

The dual relation space is the annihilator of R under this pairing, which in
coordinates is a plain kernel computation.
"""

from __future__ import annotations

from fractions import Fraction

from quadop.core.free3 import GeneratorSpace, act
from quadop.core.operad import QuadOperad
from quadop.core.perms import IDENT, REPS
from quadop.errors import InternalCheckError
from quadop.linalg import SubspaceQ

Vec = dict[int, Fraction]


def dual_generators(space: GeneratorSpace) -> GeneratorSpace:
    """Sign-twisted dual space in paired coordinates: swap -> -swap^T.

    Names gain a prime; a space whose names are all primed instead loses it,
    so double duals come back under their own names.
    """
    if all(n.endswith("'") for n in space.names):
        names = tuple(n[:-1] for n in space.names)
    else:
        names = tuple(n + "'" for n in space.names)
    d = space.dim
    swap = tuple(tuple(-space.swap[j][i] for j in range(d)) for i in range(d))
    return GeneratorSpace(names, swap)


def pairing_matrix(space: GeneratorSpace) -> list[list[Fraction]]:
    """Gram matrix of the weight-3 pairing <dual basis, basis>: the identity,
    by the choice of paired coordinates."""
    n = space.free3_dim
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def pairing_equivariant(space: GeneratorSpace, perm, sign_value: int) -> bool:
    """Check <perm.u, perm.v> = sign(perm) <u, v> on all basis pairs."""
    from quadop.core.free3 import free3_action

    dual = dual_generators(space)
    a_dual = free3_action(dual, perm)
    a_prim = free3_action(space, perm)
    n = space.free3_dim
    for c1 in range(n):
        col1 = dict(a_dual[c1])
        for c2 in range(n):
            acc = Fraction(0)
            for row, val in a_prim[c2]:
                if row in col1:
                    acc += col1[row] * val
            if acc != (sign_value if c1 == c2 else 0):
                return False
    return True


def dual_operad(P: QuadOperad, *, name: str | None = None) -> QuadOperad:
    """Koszul dual: dual generators with the annihilator of R as relations."""
    space = dual_generators(P.space)
    rel = P.relations.perp()
    if rel.dim + P.relations.dim != P.space.free3_dim:
        raise InternalCheckError("annihilator dimension is off")
    # Stability of the annihilator is a theorem given the sign-twisted action;
    # the QuadOperad constructor re-checks it as a guard against convention bugs.
    return QuadOperad(name or f"dual({P.name})", space, rel)


def verify_jacobi_duality(P: QuadOperad, dual: QuadOperad | None = None) -> bool:
    """Check the canonical pairing elements behave like a bracket.

    Degree 2: r = sum_i e_i' (x) e_i must be (12)-antisymmetric, which is the
    matrix identity swap_dual . swap^T = -I.

    Degree 3: the Jacobiator
        J = sum_{pi in REPS} sum_{i,j} pi.(id,j,i)' (x) pi.(id,j,i)
    must vanish in P!(3) (x) P(3).  Passing `dual` explicitly lets callers
    probe a mismatched pair, which must fail.
    """
    if dual is None:
        dual = dual_operad(P)
    space = P.space
    dspace = dual.space
    d = space.dim
    if dspace.dim != d:
        raise InternalCheckError("dual generator count differs from the original")

    for i in range(d):
        for j in range(d):
            acc = sum((dspace.swap[i][m] * space.swap[j][m] for m in range(d)), Fraction(0))
            if acc != (-1 if i == j else 0):
                return False

    jac: dict[tuple[int, int], Fraction] = {}
    for pi in REPS:
        for i in range(d):
            for j in range(d):
                unit_d = {dspace.flat(IDENT, j, i): Fraction(1)}
                unit_p = {space.flat(IDENT, j, i): Fraction(1)}
                u = dual.project(act(dspace, pi, unit_d))
                v = P.project(act(space, pi, unit_p))
                for r, a in u.items():
                    for c, b in v.items():
                        key = (r, c)
                        val = jac.get(key, Fraction(0)) + a * b
                        if val:
                            jac[key] = val
                        elif key in jac:
                            del jac[key]
    return not jac


def dual_pair_subspace(P: QuadOperad) -> SubspaceQ:
    """Convenience for tests: R + R^perp inside F(3) coordinates."""
    return P.relations.sum_with(P.relations.perp())
