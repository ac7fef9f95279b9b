"""Windowed formal-distribution laboratory.

Works in the degree-3 component of a free algebra over ``P`` whose
generators are three families of coefficients a(n), b(n), c(n) with
integer indices restricted to a window [-K, K].  Pairwise locality of
order 1 between the families is imposed as a subspace (the "locality
ideal"), and the question whether an iterated product ``(a k-th b)`` is
local to ``c`` of some order N becomes exact membership of a residue
vector in that subspace.

Membership is a sound certificate: every ideal generator is a genuine
relation, so a residue found inside the span really does vanish.  A
failed membership only says no witness exists inside the window, so
negative outcomes are evidence, not proof.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from quadop.core.operad import QuadOperad
from quadop.core.perms import REPS
from quadop.errors import InputError
from quadop.linalg import EchelonBasis, SubspaceQ


@dataclass(frozen=True)
class ResidueSpec:
    """Parameters of one locality test.

    i is the inner operation, j the outer one, k the order of the inner
    n-product, N the candidate locality order, and (n, m) the anchor
    indices at which the order-N difference is expanded.
    """

    i: int
    k: int
    j: int
    N: int
    n: int = 0
    m: int = 0

    def required_radius(self) -> int:
        first = self.k
        second = max(abs(self.n - self.N), abs(self.n + self.k))
        third = max(abs(self.m), abs(self.m + self.N))
        return max(first, second, third)


class LocalityInstance:
    """Window of radius K around index 0 for each coefficient family.

    Vectors live in P(3) tensored with the cube of window positions; the
    flat coordinate of (r, n_a, n_b, n_c) is
    ``r*W**3 + (n_a+K)*W**2 + (n_b+K)*W + (n_c+K)`` with ``W = 2K+1``.
    The locality ideal preserves the total index T = n_a+n_b+n_c, so
    membership tests run inside a single T-graded block; blocks are
    built lazily and cached.
    """

    def __init__(self, P: QuadOperad, K: int):
        if K < 1:
            raise InputError("window radius K must be at least 1")
        self.P = P
        self.K = K
        self.W = 2 * K + 1
        self.dim_p3 = P.dim_p3
        self.space_dim = self.dim_p3 * self.W**3
        self._pair_bases = self._build_pair_bases()
        self._blocks: dict[int, tuple[dict[tuple[int, int, int], int], EchelonBasis]] = {}
        self._lock = threading.Lock()

    # -- pair data -----------------------------------------------------

    def _build_pair_bases(self):
        """For each sigma block, an echelon basis of the span of all
        projected monomials of that block (the "pair space")."""
        P = self.P
        out = []
        for sigma in REPS:
            eb = EchelonBasis(self.dim_p3)
            for i in range(P.dim_gens):
                for j in range(P.dim_gens):
                    eb.add(self._projected(sigma, i, j))
            out.append([dict(row) for row in eb.rows()])
        return out

    def _projected(self, sigma, outer, inner) -> dict[int, Fraction]:
        flat = self.P.space.flat(sigma, outer, inner)
        vec = self.P.project({flat: Fraction(1)})
        return {r: c for r, c in vec.items() if c}

    # -- T-graded blocks -----------------------------------------------

    def _points(self, T: int) -> list[tuple[int, int, int]]:
        K = self.K
        pts = []
        for na in range(-K, K + 1):
            for nb in range(max(-K, T - na - K), min(K, T - na + K) + 1):
                pts.append((na, nb, T - na - nb))
        return pts

    def _block(self, T: int):
        with self._lock:
            cached = self._blocks.get(T)
            if cached is not None:
                return cached
            index = {p: h for h, p in enumerate(self._points(T))}
            basis = EchelonBasis(self.dim_p3 * len(index))
            for gen in self._block_generators(T, index):
                basis.add(gen)
            self._blocks[T] = (index, basis)
            return index, basis

    def _block_generators(self, T, index):
        """Order-1 pair relations, one per (pair vector, placement).

        Block sigma has inner arguments (x_sigma(1), x_sigma(2)) and the
        remaining family outside; the relation identifies neighbouring
        placements along lines of constant pair sum.  Placements whose
        shifted twin leaves the window are skipped.
        """
        K = self.K
        npts = len(index)
        for blk, sigma in enumerate(REPS):
            pair_basis = self._pair_bases[blk]
            if not pair_basis:
                continue
            for alpha in range(-K + 1, K + 1):
                for beta in range(-K, K):
                    gamma = T - alpha - beta
                    if gamma < -K or gamma > K:
                        continue
                    here = self._place(sigma, alpha, beta, gamma)
                    there = self._place(sigma, alpha - 1, beta + 1, gamma)
                    h1, h2 = index[here], index[there]
                    for v in pair_basis:
                        yield {
                            r * npts + h: c * s
                            for r, c in v.items()
                            for h, s in ((h1, 1), (h2, -1))
                        }

    @staticmethod
    def _place(sigma, alpha, beta, gamma) -> tuple[int, int, int]:
        """Lattice point with alpha on the first inner family, beta on
        the second, gamma on the outer one."""
        pt = [0, 0, 0]
        pt[sigma[0] - 1] = alpha
        pt[sigma[1] - 1] = beta
        pt[sigma[2] - 1] = gamma
        return tuple(pt)

    # -- residues ------------------------------------------------------

    def _check_window(self, spec: ResidueSpec) -> None:
        if spec.k < 0:
            raise InputError("n-product order k must be >= 0")
        if spec.N < 0:
            raise InputError("locality order N must be >= 0")
        d = self.P.dim_gens
        for label, op in (("inner", spec.i), ("outer", spec.j)):
            if not 0 <= op < d:
                raise InputError(f"{label} operation index {op} out of range for {d} generators")
        need = spec.required_radius()
        if need > self.K:
            raise InputError(
                f"residue {spec} does not fit in window radius K={self.K}; requires K >= {need}"
            )

    def _residue_terms(self, spec: ResidueSpec):
        base = self._projected(REPS[0], spec.j, spec.i)
        for s in range(spec.N + 1):
            cs = (-1) ** s * math.comb(spec.N, s)
            for t in range(spec.k + 1):
                coeff = cs * (-1) ** t * math.comb(spec.k, t)
                point = (spec.k - t, spec.n - s + t, spec.m + s)
                yield coeff, point, base

    def residue_vector(self, spec: ResidueSpec) -> dict[int, Fraction]:
        """Order-N locality obstruction for ((a i-op_k b) j-op c) at the
        given anchors, in flat window coordinates."""
        self._check_window(spec)
        W = self.W
        K = self.K
        out: dict[int, Fraction] = {}
        for coeff, (na, nb, nc), base in self._residue_terms(spec):
            offset = (na + K) * W**2 + (nb + K) * W + (nc + K)
            for r, c in base.items():
                key = r * W**3 + offset
                out[key] = out.get(key, Fraction(0)) + coeff * c
        return {k: v for k, v in out.items() if v}

    def contains_residue(self, spec: ResidueSpec) -> bool:
        self._check_window(spec)
        T = spec.k + spec.n + spec.m
        index, basis = self._block(T)
        npts = len(index)
        vec: dict[int, Fraction] = {}
        for coeff, point, base in self._residue_terms(spec):
            h = index[point]
            for r, c in base.items():
                key = r * npts + h
                vec[key] = vec.get(key, Fraction(0)) + coeff * c
        vec = {k: v for k, v in vec.items() if v}
        if not vec:
            return True
        return basis.contains(vec)

    def min_locality_order(self, i: int, k: int, j: int, Nmax: int = 4,
                           n: int = 0, m: int = 0) -> int | None:
        """Smallest N <= Nmax whose residue lies in the ideal, or None.

        None means no certificate exists inside this window, not a proof
        of non-locality.
        """
        for N in range(Nmax + 1):
            if self.contains_residue(ResidueSpec(i=i, k=k, j=j, N=N, n=n, m=m)):
                return N
        return None

    def sweep(self, k: int = 0, Nmax: int = 4, n: int = 0, m: int = 0):
        """min_locality_order for every (inner, outer) operation pair."""
        d = self.P.dim_gens
        return {
            (i, j): self.min_locality_order(i, k, j, Nmax=Nmax, n=n, m=m)
            for i in range(d)
            for j in range(d)
        }

    def ideal_subspace(self) -> SubspaceQ:
        """The whole ideal in flat window coordinates.  Quadratic in the
        window volume; intended for small K."""
        W = self.W
        K = self.K
        rows = []
        for T in range(-3 * K, 3 * K + 1):
            index, _ = self._block(T)
            npts = len(index)
            back = {h: p for p, h in index.items()}
            for gen in self._block_generators(T, index):
                row = {}
                for key, c in gen.items():
                    r, h = divmod(key, npts)
                    na, nb, nc = back[h]
                    row[r * W**3 + (na + K) * W**2 + (nb + K) * W + (nc + K)] = Fraction(c)
                rows.append(row)
        return SubspaceQ.from_vectors(self.dim_p3 * W**3, rows)


def build_instance(P: QuadOperad, K: int = 6) -> LocalityInstance:
    return LocalityInstance(P, K)
