"""White and black products, replication, and dendriform-style splitting."""

from fractions import Fraction

import pytest

from quadop.core.catalog import catalog
from quadop.errors import InputError
from quadop.koszul import dual_operad
from quadop.linalg import SubspaceQ
from quadop.manin import black_product, replicate, split, verify_black_tensor, white_product


def transport_relations(src, dst, G):
    """Push src's relations through the generator dictionary G, where
    dst-coordinates of the image of src generator i are column i of G."""
    d = src.space.dim
    rows = []
    for row in src.relations.basis():
        out = {}
        for c, coeff in row.items():
            sigma, i, j = src.space.unflat(c)
            for a in range(d):
                if not G[a][i]:
                    continue
                for b in range(d):
                    f = G[a][i] * G[b][j]
                    if f:
                        idx = dst.space.flat(sigma, a, b)
                        out[idx] = out.get(idx, Fraction(0)) + coeff * f
        rows.append({k: v for k, v in out.items() if v})
    return SubspaceQ.from_vectors(dst.space.free3_dim, rows)


def signed_perm(d, assignment):
    """Columns of G from {source index: (target index, sign)}."""
    G = [[Fraction(0)] * d for _ in range(d)]
    for i, (a, s) in assignment.items():
        G[a][i] = Fraction(s)
    return G


# -- white ------------------------------------------------------------


def test_white_with_com_is_identity():
    for name in ("As", "Lie", "Nov", "NP"):
        P = catalog(name)
        W = white_product(catalog("Com"), P)
        assert W.space.swap == P.space.swap
        assert W.relations == P.relations


def test_white_com_on_the_right():
    P = catalog("ComTriAs")
    W = white_product(P, catalog("Com"))
    assert W.relations == P.relations


def test_white_perm_as_is_diassociative():
    W = white_product(catalog("Perm"), catalog("As"))
    assert (W.dim_gens, W.dim_relations, W.dim_p3) == (4, 30, 18)
    assert W.relations == catalog("diAs").relations


def test_diassociative_dictionary():
    """Generators p2*m1 and p1*m1 of diAs act as the left and right actions
    of an associative pair: both associative, with the five interleaving
    identities."""
    diAs = catalog("diAs")
    L, R = "p2*m1", "p1*m1"
    for ident in (
        f"(x1 {{{L}}} x2) {{{L}}} x3 - x1 {{{L}}} (x2 {{{L}}} x3)",
        f"x1 {{{L}}} (x2 {{{L}}} x3) - x1 {{{L}}} (x2 {{{R}}} x3)",
        f"(x1 {{{R}}} x2) {{{L}}} x3 - x1 {{{R}}} (x2 {{{L}}} x3)",
        f"(x1 {{{L}}} x2) {{{R}}} x3 - (x1 {{{R}}} x2) {{{R}}} x3",
        f"(x1 {{{R}}} x2) {{{R}}} x3 - x1 {{{R}}} (x2 {{{R}}} x3)",
    ):
        assert diAs.relations.contains(diAs.parse(ident)), ident


# -- black ------------------------------------------------------------


def test_black_with_lie_keeps_dimensions():
    for name in ("As", "Nov", "Pois"):
        P = catalog(name)
        B = black_product(P, catalog("Lie"))
        assert B.dims()["relations"] == P.dims()["relations"]
        assert B.dims()["p3"] == P.dims()["p3"]


def test_black_is_dual_of_white_of_duals():
    # black_product cross-checks its two routes internally; reaching the
    # return is the assertion.  Exercise a few shapes.
    for left, right in (("Leib", "Nov"), ("Nov", "Pois"), ("As", "Lie")):
        B = black_product(catalog(left), catalog(right))
        assert B.dim_gens == catalog(left).dim_gens * catalog(right).dim_gens


def test_black_tensor_certificate():
    As, Lie = catalog("As"), catalog("Lie")
    good = black_product(As, Lie)
    assert verify_black_tensor(As, Lie, good)
    assert not verify_black_tensor(As, Lie, white_product(As, Lie))
    assert not verify_black_tensor(As, Lie, black_product(catalog("Nov"), Lie))
    with pytest.raises(InputError):
        verify_black_tensor(As, catalog("Nov"), good)  # wrong generator count


# -- replication ------------------------------------------------------


def test_replicate_dimensions():
    di = replicate("di", catalog("As"))
    assert di.name == "di(As)"
    assert di.relations == catalog("diAs").relations
    tri = replicate("tri", catalog("Com"))
    assert tri.relations == catalog("ComTriAs").relations
    with pytest.raises(InputError):
        replicate("quad", catalog("As"))


def test_di_lie_is_leibniz():
    assert replicate("di", catalog("Lie")).relations == catalog("Leib").relations


# -- splitting --------------------------------------------------------


def test_split_modes_and_dims():
    pre = split(catalog("Lie"), "pre")
    post = split(catalog("Lie"), "post")
    assert (pre.dim_gens, pre.dim_relations, pre.dim_p3) == (2, 3, 9)
    assert (post.dim_gens, post.dim_relations, post.dim_p3) == (3, 7, 20)
    with pytest.raises(InputError):
        split(catalog("Lie"), "mid")


def test_split_swap_convention():
    post = split(catalog("Lie"), "post")
    names = post.space.names
    assert names == ("b_succ", "b_prec", "b_perp")
    sw = post.space.swap
    # (12) exchanges succ and prec (the Lie antisymmetry cancels the twist)
    # and negates perp.
    assert sw[1][0] == 1 and sw[0][1] == 1
    assert sw[2][2] == -1
    assert sw[0][0] == sw[1][1] == 0


def test_split_pre_lie_is_dual_perm():
    pre = split(catalog("Lie"), "pre")
    preLie = catalog("preLie")
    G = signed_perm(2, {0: (0, 1), 1: (1, -1)})  # b_succ -> p1', b_prec -> -p2'
    assert transport_relations(pre, preLie, G) == preLie.relations


def test_split_pre_as_is_dual_dias():
    pre = split(catalog("As"), "pre")
    preAs = catalog("preAs")
    G = signed_perm(4, {0: (0, 1), 1: (1, -1), 2: (2, -1), 3: (3, 1)})
    assert transport_relations(pre, preAs, G) == preAs.relations


def test_split_post_lie_matches_catalog():
    post = split(catalog("Lie"), "post")
    assert post.relations == catalog("postLie").relations
    D = dual_operad(post)
    assert (D.dim_gens, D.dim_relations, D.dim_p3) == (3, 20, 7)
