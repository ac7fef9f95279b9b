"""Manin products, replication, and dendriform splitting.

White product: generators are pairs g*h, and the relations are everything
that maps to zero under the evaluation

    Phi: F_{V(x)W}(3) -> P(3) (x) Q(3),
    (sigma, (i,p), (j,q)) |-> [image of (sigma,i,j) in P(3)] (x) [image of (sigma,p,q) in Q(3)].

Black product: Koszul dual of the white product of the duals, rebuilt over
generators g•h so the paired coordinates line up with the white index scheme.
Its relation space equals the span of the elementwise products r (x) s over
relation bases of P and Q; both constructions are computed and compared on
every call.

Splitting: each generator of Q splits into succ/prec (and perp in the post
flavour), with the (12)-action twisted by a sign on the succ/prec pair.  The
relations of the split operad are indexed by a relation f of Q and a nonempty
subset M of the three argument positions; each monomial of f is rewritten
according to how M sits relative to its arguments.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from quadop.core.free3 import GeneratorSpace, Vec, s3_closure
from quadop.core.operad import QuadOperad
from quadop.core.perms import IDENT, REPS
from quadop.errors import InputError, InternalCheckError
from quadop.koszul import dual_operad
from quadop.linalg import SubspaceQ, kernel_basis


def _pair_index(P: QuadOperad, Q: QuadOperad):
    e = Q.dim_gens

    def pair(i: int, p: int) -> int:
        return i * e + p

    return pair


def _product_space(P: QuadOperad, Q: QuadOperad, sep: str, sign: int) -> GeneratorSpace:
    names = tuple(f"{g}{sep}{h}" for g in P.space.names for h in Q.space.names)
    dP, dQ = P.dim_gens, Q.dim_gens
    swap = tuple(
        tuple(
            sign * P.space.swap[m][i] * Q.space.swap[q][p]
            for i in range(dP)
            for p in range(dQ)
        )
        for m in range(dP)
        for q in range(dQ)
    )
    return GeneratorSpace(names, swap)


def white_product(P: QuadOperad, Q: QuadOperad) -> QuadOperad:
    """Manin white product P o Q."""
    space = _product_space(P, Q, "*", 1)
    pair = _pair_index(P, Q)
    dP, dQ = P.dim_gens, Q.dim_gens
    projP = P.p3_projection()
    projQ = Q.p3_projection()
    rows: dict[tuple[int, int], dict[int, Fraction]] = {}
    for s_idx, sigma in enumerate(REPS):
        for i, p, j, q in iproduct(range(dP), range(dQ), range(dP), range(dQ)):
            col = space.flat(sigma, pair(i, p), pair(j, q))
            colP = projP[P.space.flat(sigma, i, j)]
            colQ = projQ[Q.space.flat(sigma, p, q)]
            for alpha, a in colP.items():
                for beta, b in colQ.items():
                    rows.setdefault((alpha, beta), {})[col] = a * b
    rel = kernel_basis(list(rows.values()), space.free3_dim)
    return QuadOperad(f"white({P.name},{Q.name})", space, rel)


def black_direct(P: QuadOperad, Q: QuadOperad) -> QuadOperad:
    """Black product built from its relation span: the elementwise products
    of relation vectors, (r . s)[(sigma,(i,p),(j,q))] = r[(sigma,i,j)] s[(sigma,p,q)]."""
    space = _product_space(P, Q, "•", -1)
    pair = _pair_index(P, Q)
    vectors = []
    for r in P.relations.basis():
        by_sigma_r: dict[int, list] = {0: [], 1: [], 2: []}
        for c, a in r.items():
            sigma, i, j = P.space.unflat(c)
            by_sigma_r[REPS.index(sigma)].append((sigma, i, j, a))
        for s in Q.relations.basis():
            vec: Vec = {}
            for c, b in s.items():
                sigma_q, p, q = Q.space.unflat(c)
                for sigma, i, j, a in by_sigma_r[REPS.index(sigma_q)]:
                    vec[space.flat(sigma, pair(i, p), pair(j, q))] = a * b
            if vec:
                vectors.append(vec)
    rel = SubspaceQ.from_vectors(space.free3_dim, vectors)
    return QuadOperad(f"black({P.name},{Q.name})", space, rel)


def black_product(P: QuadOperad, Q: QuadOperad) -> QuadOperad:
    """Manin black product P • Q, with the direct span construction checked
    against the dual-of-white route on every call."""
    direct = black_direct(P, Q)
    wd = white_product(dual_operad(P), dual_operad(Q))
    rel = wd.relations.perp()
    if rel != direct.relations:
        raise InternalCheckError(
            f"black product routes disagree on ({P.name},{Q.name}): "
            f"dual-of-white gives dim {rel.dim}, relation span gives dim {direct.relations.dim}"
        )
    return direct


def replicate(kind: str, P: QuadOperad) -> QuadOperad:
    """Di- or tri-replication, as a white product with the matching operad."""
    from quadop.core.catalog import catalog  # late import; catalog builds use this module

    if kind == "di":
        return white_product(catalog("Perm"), P).renamed(f"di({P.name})")
    if kind == "tri":
        return white_product(catalog("ComTriAs"), P).renamed(f"tri({P.name})")
    raise InputError(f"replication kind must be 'di' or 'tri', got {kind!r}")


# Splitting: generator g of Q becomes succ/prec (+ perp) copies.


def _split_space(Q: QuadOperad, mode: str, twist: int) -> GeneratorSpace:
    """Generator space of the split operad.

    twist=-1 gives the convention used for the result, matching the black
    product's sign-twisted tensor: (12)succ_i = -sum swap[m][i] prec_m and
    likewise for prec, while perp keeps the plain action.  twist=+1 gives the
    Rota-Baxter model convention ((12) acts without the extra sign on all
    three blocks); the substitution table is only S3-consistent there, so the
    relation closure runs in that space and is transported afterwards.
    """
    e = Q.dim_gens
    blocks = ("succ", "prec", "perp") if mode == "post" else ("succ", "prec")
    names = tuple(f"{g}_{suffix}" for suffix in blocks for g in Q.space.names)
    d = len(blocks) * e
    cols: list[list[Fraction]] = [[Fraction(0)] * d for _ in range(d)]
    sw = Q.space.swap
    for i in range(e):
        for m in range(e):
            if sw[m][i]:
                cols[i][e + m] = twist * sw[m][i]
                cols[e + i][m] = twist * sw[m][i]
                if mode == "post":
                    cols[2 * e + i][2 * e + m] = sw[m][i]
    swap = tuple(tuple(cols[j][m] for j in range(d)) for m in range(d))
    return GeneratorSpace(names, swap)


def _split_monomial(space: GeneratorSpace, Q: QuadOperad, mode: str,
                    sigma, i: int, j: int, M: frozenset) -> Vec:
    """Rewrite of the monomial (sigma, i, j) of Q for argument subset M.

    With k1, k2, k3 = sigma(1), sigma(2), sigma(3) the monomial reads
    e_i(e_j(x_k1, x_k2), x_k3); the subset M selects which arguments the
    splitting points at, and the table below assigns the split operations.
    Star is the sum of all components of the split.
    """
    e = Q.dim_gens
    succ, prec = lambda g: g, lambda g: e + g
    perp = lambda g: 2 * e + g
    k1, k2, k3 = sigma
    star = [succ(j), prec(j)] + ([perp(j)] if mode == "post" else [])
    if M == {k1}:
        shapes = [(prec(i), prec(j))]
    elif M == {k2}:
        shapes = [(prec(i), succ(j))]
    elif M == {k3}:
        shapes = [(succ(i), s) for s in star]
    elif M == {k1, k2}:
        shapes = [(prec(i), perp(j))]
    elif M == {k1, k3}:
        shapes = [(perp(i), prec(j))]
    elif M == {k2, k3}:
        shapes = [(perp(i), succ(j))]
    else:  # M = {k1, k2, k3}
        shapes = [(perp(i), perp(j))]
    from quadop.core.free3 import act

    out: Vec = {}
    for outer, inner in shapes:
        unit = {space.flat(IDENT, outer, inner): Fraction(1)}
        for idx, val in act(space, sigma, unit).items():
            acc = out.get(idx, Fraction(0)) + val
            if acc:
                out[idx] = acc
            elif idx in out:
                del out[idx]
    return out


def split(Q: QuadOperad, mode: str) -> QuadOperad:
    """Dendriform-style splitting of Q (mode 'pre') or its perp-extended
    version (mode 'post').

    The relation seeds come from the substitution table applied to the
    canonical relation basis of Q; their span is already S3-stable in the
    Rota-Baxter model convention (splitting a permuted identity with a
    permuted subset is the permuted splitting), and that is asserted.  The
    result is then expressed in the sign-twisted convention by flipping every
    prec leg, a diagonal change of basis that conjugates one S2-action into
    the other.
    """
    if mode not in ("pre", "post"):
        raise InputError(f"split mode must be 'pre' or 'post', got {mode!r}")
    model = _split_space(Q, mode, +1)
    if mode == "post":
        subsets = [frozenset(s) for s in
                   ({1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3})]
    else:
        subsets = [frozenset(s) for s in ({1}, {2}, {3})]
    vectors = []
    for f in Q.relations.basis():
        for M in subsets:
            vec: Vec = {}
            for c, coeff in f.items():
                sigma, i, j = Q.space.unflat(c)
                for idx, val in _split_monomial(model, Q, mode, sigma, i, j, M).items():
                    acc = vec.get(idx, Fraction(0)) + coeff * val
                    if acc:
                        vec[idx] = acc
                    elif idx in vec:
                        del vec[idx]
            vectors.append(vec)
    plain = SubspaceQ.from_vectors(model.free3_dim, vectors)
    rel_model = s3_closure(model, vectors)
    if rel_model.dim != plain.dim:
        raise InternalCheckError(
            f"splitting seeds of {Q.name} were not S3-stable "
            f"({plain.dim} -> {rel_model.dim}); table convention bug"
        )
    e = Q.dim_gens
    space = _split_space(Q, mode, -1)

    def leg_sign(g: int) -> int:
        return -1 if e <= g < 2 * e else 1

    moved = []
    for row in rel_model.basis():
        out: Vec = {}
        for c, val in row.items():
            _, outer, inner = model.unflat(c)
            s = leg_sign(outer) * leg_sign(inner)
            out[c] = val if s == 1 else -val
        moved.append(out)
    rel = SubspaceQ.from_vectors(space.free3_dim, moved)
    return QuadOperad(f"split_{mode}({Q.name})", space, rel)


def verify_black_tensor(P: QuadOperad, Q: QuadOperad, B: QuadOperad) -> bool:
    """Check that a P!-algebra tensored with a B-algebra satisfies Q.

    For every relation h of Q the element

        sum_{monomials (tau,jo,ji) of h} c sum_{io,ii}
            [image of (tau,io,ii) in P!(3)] (x) [image of (tau,(io,jo),(ii,ji)) in B(3)]

    must vanish.  B's generators must be indexed like pairs from P and Q.
    """
    dP, dQ = P.dim_gens, Q.dim_gens
    if B.dim_gens != dP * dQ:
        raise InputError(
            f"{B.name} has {B.dim_gens} generators, expected {dP}*{dQ}={dP * dQ}"
        )
    dual = dual_operad(P)
    pair = _pair_index(P, Q)
    for h in Q.relations.basis():
        total: dict[tuple[int, int], Fraction] = {}
        for c, coeff in h.items():
            tau, jo, ji = Q.space.unflat(c)
            for io in range(dP):
                for ii in range(dP):
                    u = dual.project({dual.space.flat(tau, io, ii): Fraction(1)})
                    v = B.project({B.space.flat(tau, pair(io, jo), pair(ii, ji)): Fraction(1)})
                    for r, a in u.items():
                        for col, b in v.items():
                            key = (r, col)
                            val = total.get(key, Fraction(0)) + coeff * a * b
                            if val:
                                total[key] = val
                            elif key in total:
                                del total[key]
        if total:
            return False
    return True
