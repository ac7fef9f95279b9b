"""The Dong property via the Koszul-dual rank criterion.

An operad P has the property exactly when the "composable pair" block of the
dual free space meets the dual relations trivially: writing B for the span of
the d*d monomials (id, i, j) in F_{V'}(3), the verdict is Dong iff

    B  intersect  R-perp  =  0.

Equivalently the d*d images of those monomials in P!(3) are linearly
independent.  Both routes are computed on every call and must agree; a
disagreement is an internal conventions bug, not a property of the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from quadop.core.operad import QuadOperad
from quadop.core.parser import pretty_print
from quadop.core.perms import IDENT
from quadop.errors import InternalCheckError
from quadop.koszul import dual_operad
from quadop.linalg import EchelonBasis, SubspaceQ


@dataclass
class DongReport:
    operad: str
    verdict: str  # "Dong" or "NotDong"
    method_agreement: bool
    kernel_dim: int
    witnesses: list[str]
    dims: dict[str, int]
    kernel: SubspaceQ = field(repr=False, default=None)
    dual_name: str = ""

    def as_dict(self) -> dict:
        return {
            "operad": self.operad,
            "verdict": self.verdict,
            "method_agreement": self.method_agreement,
            "kernel_dim": self.kernel_dim,
            "witnesses": list(self.witnesses),
            "dims": dict(self.dims),
        }


def dong_verdict(P: QuadOperad, dual: QuadOperad | None = None) -> DongReport:
    """Decide the Dong property of P and report both routes' evidence.

    Witnesses are the canonical basis of the kernel block, pretty-printed in
    the dual generators; they parse back to kernel elements.
    """
    if dual is None:
        dual = dual_operad(P)
    d = P.dim_gens
    dspace = dual.space

    # Route 1: intersect the (id, *, *) block with the dual relations.
    block = SubspaceQ.from_vectors(
        dspace.free3_dim,
        [{dspace.flat(IDENT, i, j): Fraction(1)} for i in range(d) for j in range(d)],
    )
    kernel = block.intersect(dual.relations)
    verdict_1 = kernel.dim == 0

    # Route 2: rank of the block's image in P!(3).
    image = EchelonBasis(dual.dim_p3)
    for i in range(d):
        for j in range(d):
            image.add(dual.project({dspace.flat(IDENT, i, j): Fraction(1)}))
    verdict_2 = image.rank == d * d

    agreement = verdict_1 == verdict_2
    if image.rank + kernel.dim != d * d:
        agreement = False
    report = DongReport(
        operad=P.name,
        verdict="Dong" if verdict_1 else "NotDong",
        method_agreement=agreement,
        kernel_dim=kernel.dim,
        witnesses=[pretty_print(dspace, row) for row in kernel.basis()],
        dims={
            "gen": d,
            "free3": P.dim_free3,
            "relations": P.dim_relations,
            "p3": P.dim_p3,
            "dual_relations": dual.dim_relations,
            "dual_p3": dual.dim_p3,
        },
        kernel=kernel,
        dual_name=dual.name,
    )
    if not agreement:
        raise InternalCheckError(
            f"Dong routes disagree on {P.name}: intersection kernel {kernel.dim}, "
            f"image rank {image.rank} of {d * d}"
        )
    return report


def dong_table(operads) -> list[DongReport]:
    return [dong_verdict(P) for P in operads]
