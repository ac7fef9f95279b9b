"""Binary quadratic operads as (generator space, relation subspace) pairs.

An operad here is presentation data: a GeneratorSpace V and an S3-stable
subspace R of the weight-3 free space F(3).  Everything the rest of the
package computes (duals, products, the Dong criterion) is linear algebra on
this pair; no higher arity is ever materialised.
"""

from __future__ import annotations

import json
from fractions import Fraction

from quadop.core.free3 import GeneratorSpace, Vec, is_s3_stable, s3_closure
from quadop.core.parser import parse_relation, pretty_print
from quadop.errors import InputError, InternalCheckError
from quadop.linalg import SubspaceQ, invert_matrix

_SYMMETRY_KINDS = ("sym", "antisym", "pair", "swap")


class QuadOperad:
    """A presented binary quadratic operad over Q."""

    def __init__(self, name: str, space: GeneratorSpace, relations: SubspaceQ, *, check: bool = True):
        if relations.ambient_dim != space.free3_dim:
            raise InputError(
                f"relations live in Q^{relations.ambient_dim}, expected Q^{space.free3_dim}"
            )
        if check and not is_s3_stable(space, relations):
            raise InternalCheckError(f"relation space of {name!r} is not S3-stable")
        self.name = name
        self.space = space
        self.relations = relations
        self._p3 = None

    @property
    def dim_gens(self) -> int:
        return self.space.dim

    @property
    def dim_free3(self) -> int:
        return self.space.free3_dim

    @property
    def dim_relations(self) -> int:
        return self.relations.dim

    @property
    def dim_p3(self) -> int:
        return self.space.free3_dim - self.relations.dim

    def p3_monomials(self) -> tuple[int, ...]:
        """Flat indices whose monomials descend to a basis of P(3): the
        non-pivot columns of the canonical relation basis."""
        pivots = set(self.relations.pivots)
        return tuple(c for c in range(self.space.free3_dim) if c not in pivots)

    def p3_projection(self) -> list[dict[int, Fraction]]:
        """Quotient map F(3) -> P(3) as a column list: entry c is the image of
        basis monomial c in coordinates of the p3_monomials basis.

        A pivot monomial rewrites through its relation row: if the canonical
        row is e_p + sum_f r_f e_f then e_p = -sum_f r_f e_f mod R.
        """
        if self._p3 is None:
            free = self.p3_monomials()
            col_of = {c: k for k, c in enumerate(free)}
            cols: list[dict[int, Fraction]] = [{} for _ in range(self.space.free3_dim)]
            for c, k in col_of.items():
                cols[c] = {k: Fraction(1)}
            for row in self.relations.basis():
                pivot = min(row)
                cols[pivot] = {col_of[f]: -v for f, v in row.items() if f != pivot}
            self._p3 = cols
        return self._p3

    def project(self, vec: Vec) -> dict[int, Fraction]:
        """Image of a weight-3 vector in P(3) coordinates."""
        cols = self.p3_projection()
        out: dict[int, Fraction] = {}
        for c, coeff in vec.items():
            for k, entry in cols[c].items():
                val = out.get(k, Fraction(0)) + coeff * entry
                if val:
                    out[k] = val
                elif k in out:
                    del out[k]
        return out

    def parse(self, text: str) -> Vec:
        return parse_relation(self.space, text)

    def show_relations(self) -> list[str]:
        return [pretty_print(self.space, row) for row in self.relations.basis()]

    def renamed(self, name: str) -> "QuadOperad":
        return QuadOperad(name, self.space, self.relations, check=False)

    def dims(self) -> dict[str, int]:
        return {
            "gen": self.dim_gens,
            "free3": self.dim_free3,
            "relations": self.dim_relations,
            "p3": self.dim_p3,
        }

    def __repr__(self) -> str:
        return f"QuadOperad({self.name!r}, d={self.dim_gens}, dim R={self.dim_relations})"


def _swap_matrix(gen_specs: list[tuple[str, object]]) -> GeneratorSpace:
    names = tuple(name for name, _ in gen_specs)
    index = {name: i for i, name in enumerate(names)}
    d = len(names)
    cols: list[list[Fraction]] = [[Fraction(0)] * d for _ in range(d)]
    for j, (name, sym) in enumerate(gen_specs):
        if sym == "sym":
            cols[j][j] = Fraction(1)
        elif sym == "antisym":
            cols[j][j] = Fraction(-1)
        elif isinstance(sym, dict) and set(sym) == {"pair"}:
            partner = sym["pair"]
            if partner not in index:
                raise InputError(f"generator {name!r} pairs with unknown {partner!r}")
            cols[j][index[partner]] = Fraction(1)
        elif isinstance(sym, dict) and set(sym) == {"swap"}:
            for target, coeff in sym["swap"].items():
                if target not in index:
                    raise InputError(f"swap image of {name!r} mentions unknown {target!r}")
                cols[j][index[target]] = Fraction(str(coeff))
        else:
            raise InputError(
                f"bad symmetry {sym!r} for generator {name!r}; "
                f"expected one of {_SYMMETRY_KINDS}"
            )
    # cols[j][m] is the coefficient of e_m in (12)e_j; transpose into row form.
    swap = tuple(tuple(cols[j][m] for j in range(d)) for m in range(d))
    return GeneratorSpace(names, swap)


def make_operad(name: str, generators, relations, *, check: bool = True) -> QuadOperad:
    """Build an operad from generator specs and relation strings.

    generators: iterable of (name, symmetry) pairs or {"name":, "symmetry":}
    dicts, symmetry one of "sym", "antisym", {"pair": other-name} or
    {"swap": {name: rational-string}} in column convention.

    relations: iterable of relation strings; their S3-closure is taken, so one
    representative per orbit suffices.
    """
    specs = []
    for g in generators:
        if isinstance(g, dict):
            specs.append((g["name"], g["symmetry"]))
        else:
            gname, sym = g
            specs.append((gname, sym))
    space = _swap_matrix(specs)
    vectors = [parse_relation(space, text) for text in relations]
    rel = s3_closure(space, vectors)
    return QuadOperad(name, space, rel, check=check)


def load_operad_file(path: str) -> QuadOperad:
    """Read an operad from a JSON file: {"name", "generators", "relations"}."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read operad file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    for key in ("name", "generators", "relations"):
        if key not in data:
            raise InputError(f"{path}: missing key {key!r}")
    return make_operad(data["name"], data["generators"], data["relations"])


def change_basis(P: QuadOperad, T, *, name: str | None = None) -> QuadOperad:
    """The same operad presented in the generator basis e'_j = sum_i T[i][j] e_i.

    T must be invertible and commute with the swap matrix, so the new basis
    carries the same S2-action and the generator space can be reused.  The
    relation subspace is transported by the induced map on F(3), which acts as
    Tinv x Tinv on the (outer, inner) legs of every sigma-block.
    """
    space = P.space
    d = space.dim
    T = [[Fraction(x) for x in row] for row in T]
    Tinv = invert_matrix(T)
    if Tinv is None:
        raise InputError("basis change matrix is singular")
    for i in range(d):
        for j in range(d):
            lhs = sum((T[i][m] * space.swap[m][j] for m in range(d)), Fraction(0))
            rhs = sum((space.swap[i][m] * T[m][j] for m in range(d)), Fraction(0))
            if lhs != rhs:
                raise InputError("basis change matrix does not commute with the swap")
    moved = []
    for row in P.relations.basis():
        out: Vec = {}
        for c, coeff in row.items():
            sigma, i, j = space.unflat(c)
            for a in range(d):
                if not Tinv[a][i]:
                    continue
                for b in range(d):
                    f = Tinv[a][i] * Tinv[b][j]
                    if not f:
                        continue
                    idx = space.flat(sigma, a, b)
                    val = out.get(idx, Fraction(0)) + coeff * f
                    if val:
                        out[idx] = val
                    elif idx in out:
                        del out[idx]
        moved.append(out)
    rel = SubspaceQ.from_vectors(space.free3_dim, moved)
    if rel.dim != P.relations.dim:
        raise InternalCheckError("basis change did not preserve the relation dimension")
    return QuadOperad(name or f"{P.name}@basis", space, rel)
