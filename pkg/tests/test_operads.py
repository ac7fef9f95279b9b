"""Operad construction, projections to the quotient, and basis changes."""

import json
from fractions import Fraction

import pytest

from quadop.core.catalog import catalog
from quadop.core.free3 import GeneratorSpace
from quadop.core.operad import QuadOperad, change_basis, load_operad_file, make_operad
from quadop.errors import InputError, InternalCheckError
from quadop.linalg import SubspaceQ


def test_make_operad_symmetry_forms():
    P = make_operad(
        "mixed",
        [("s", "sym"), ("a", "antisym"), ("l", {"pair": "r"}), ("r", {"pair": "l"}),
         ("u", {"swap": {"v": "-1"}}), ("v", {"swap": {"u": "-1"}})],
        [],
    )
    sw = P.space.swap
    names = P.space.names
    i = {n: k for k, n in enumerate(names)}
    assert sw[i["s"]][i["s"]] == 1
    assert sw[i["a"]][i["a"]] == -1
    assert sw[i["r"]][i["l"]] == 1 and sw[i["l"]][i["l"]] == 0
    assert sw[i["v"]][i["u"]] == -1


def test_make_operad_accepts_dict_generators():
    P = make_operad("one", [{"name": "m", "symmetry": "sym"}], [])
    assert P.space.names == ("m",)


def test_bad_symmetry_rejected():
    with pytest.raises(InputError):
        make_operad("bad", [("m", "commutative")], [])
    with pytest.raises(InputError):
        make_operad("bad", [("l", {"pair": "nope"})], [])


def test_relations_ambient_checked():
    space = GeneratorSpace(("m",), ((Fraction(1),),))
    wrong = SubspaceQ.from_vectors(5, [{0: Fraction(1)}])
    with pytest.raises(InputError):
        QuadOperad("broken", space, wrong)


def test_unstable_relations_rejected():
    space = GeneratorSpace(("b",), ((Fraction(-1),),))
    one = SubspaceQ.from_vectors(3, [{0: Fraction(1)}])
    with pytest.raises(InternalCheckError):
        QuadOperad("broken", space, one)


def test_projection_kills_relations_and_fixes_free_monomials():
    P = catalog("As")
    for row in P.relations.basis():
        assert P.project(row) == {}
    for k, idx in enumerate(P.p3_monomials()):
        assert P.project({idx: Fraction(1)}) == {k: Fraction(1)}


def test_projection_is_linear_over_a_relation_shift():
    P = catalog("Nov")
    rel = P.relations.basis()[0]
    vec = {0: Fraction(2), 7: Fraction(-1)}
    shifted = dict(vec)
    for c, x in rel.items():
        shifted[c] = shifted.get(c, Fraction(0)) + 3 * x
    assert P.project(vec) == P.project(shifted)


def test_dims_dict():
    P = catalog("Lie")
    assert P.dims() == {"gen": 1, "free3": 3, "relations": 1, "p3": 2}


def test_renamed_keeps_everything_else():
    P = catalog("As")
    Q = P.renamed("assoc")
    assert Q.name == "assoc"
    assert Q.space is P.space
    assert Q.relations is P.relations


def test_load_operad_file(tmp_path):
    path = tmp_path / "op.json"
    path.write_text(json.dumps({
        "name": "fileop",
        "generators": [["m", "sym"]],
        "relations": ["(x1 {m} x2) {m} x3 - (x2 {m} x3) {m} x1"],
    }))
    P = load_operad_file(str(path))
    assert P.name == "fileop"
    assert P.dim_relations == 2  # closure adds the rotated copy


def test_load_operad_file_errors(tmp_path):
    with pytest.raises(InputError):
        load_operad_file(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        load_operad_file(str(bad))
    incomplete = tmp_path / "incomplete.json"
    incomplete.write_text(json.dumps({"name": "x", "generators": []}))
    with pytest.raises(InputError):
        load_operad_file(str(incomplete))


def test_change_basis_preserves_dims_and_roundtrips():
    P = catalog("Nov")
    T = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(1)]]  # commutes with the pair swap
    Q = change_basis(P, T)
    assert Q.dims() == P.dims()
    Tinv = [[Fraction(-1, 3), Fraction(2, 3)], [Fraction(2, 3), Fraction(-1, 3)]]
    back = change_basis(Q, Tinv)
    assert back.relations == P.relations


def test_change_basis_rejects_bad_matrices():
    P = catalog("Nov")
    with pytest.raises(InputError):
        change_basis(P, [[1, 0], [0, 0]])  # singular
    with pytest.raises(InputError):
        change_basis(P, [[1, 1], [0, 1]])  # does not commute with the swap
