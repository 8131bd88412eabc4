"""
Çoklu Kesişim Motoru
Tam kesişim diyagramı, sonlu üretilme kararı ve kesişim tabanı
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from config import INTERSECTION_CONFIG, STALLINGS_CONFIG
from errors import AmbientMismatch, IndexCapExceeded, NotFinitelyGenerated
from ftfa import SubgroupBasis, normalize
from stallings import Automaton, multi_pullback, schreier_basis, spanning_basis
from words import Word, exponent_vector, substitute
from zlattice import (AffineCoset, IntMatrix, Lattice, affine_meet,
                      block_matrix, index_and_reps, lattice_meet, preimage,
                      vec_mat, vec_sub)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Diagram:
    subgroups: Sequence[SubgroupBasis]
    pullback: Automaton
    v_basis: Sequence[Word]
    P: Sequence[IntMatrix]
    points: Sequence[IntMatrix]  # points[i][j] = v_j satırının P_i·A_i değeri
    R: IntMatrix
    Lblock: IntMatrix

    @property
    def k(self) -> int:
        return len(self.subgroups)

    @property
    def r(self) -> int:
        return len(self.v_basis)

    @property
    def m(self) -> int:
        return self.subgroups[0].m

    @property
    def n(self) -> int:
        return self.subgroups[0].n

    def block_lattice(self) -> Lattice:
        """Im(L) (satır uzayı)"""
        return Lattice.from_generators(self.Lblock, (self.k - 1) * self.m)

    def abelian_image(self, v_word: Sequence[int]) -> List[int]:
        """v-kelimesinin ρ·R görüntüsü"""
        return vec_mat(exponent_vector(v_word, self.r), self.R, (self.k - 1) * self.m)

    def completions(self, v_word: Sequence[int]) -> List[AffineCoset]:
        """v-kelimesinin her H_i içindeki tamamlaması"""
        exps = exponent_vector(v_word, self.r)
        return [AffineCoset.make(vec_mat(exps, pts, self.m), B.lattice)
                for pts, B in zip(self.points, self.subgroups)]


@dataclass(frozen=True)
class Decision:
    """Sonlu üretilme kararı ve sertifikası"""
    fg: bool
    r: int
    preimage_lattice: Lattice

    @property
    def rank_deficit(self) -> int:
        return self.r - self.preimage_lattice.rank


@dataclass(frozen=True)
class IntersectionResult:
    fg: bool
    basis: Optional[SubgroupBasis]
    certificate: Decision


def _check_ambient(subgroups: Sequence[SubgroupBasis]) -> None:
    if not subgroups:
        raise ValueError("en az bir alt grup gerekli")
    n, m = subgroups[0].n, subgroups[0].m
    for B in subgroups[1:]:
        if (B.n, B.m) != (n, m):
            raise AmbientMismatch("alt gruplar farklı ortam gruplarda",
                                  expected=[n, m], got=[B.n, B.m])


def build_diagram(subgroups: Sequence[SubgroupBasis]) -> Diagram:
    _check_ambient(subgroups)
    m = subgroups[0].m
    pullback = multi_pullback([B.graph[0] for B in subgroups])
    v_basis = spanning_basis(pullback).basis_words

    P, points = [], []
    for B in subgroups:
        rows = [exponent_vector(B.express(v), B.rank) for v in v_basis]
        P.append(rows)
        points.append([vec_mat(row, B.completion_matrix, m) for row in rows])

    R = []
    for j in range(len(v_basis)):
        row = []
        for prev, cur in zip(points, points[1:]):
            row.extend(vec_sub(cur[j], prev[j]))
        R.append(row)
    Lblock = block_matrix([B.lattice for B in subgroups])
    logger.debug("diyagram: k=%d, r=%d", len(subgroups), len(v_basis))
    return Diagram(tuple(subgroups), pullback, tuple(v_basis), P, points, R, Lblock)


def decide(d: Diagram) -> Decision:
    """r=0, r=1 veya rank(Λ)=r ise sonlu üretilmiş"""
    lam = preimage(d.R, d.block_lattice())
    fg = d.r <= 1 or lam.rank == d.r
    return Decision(fg=fg, r=d.r, preimage_lattice=lam)


def intersection_basis(d: Diagram, decision: Optional[Decision] = None) -> SubgroupBasis:
    """
    Kesişim tabanı (Schreier grafı + afin kesişimler)

    Raises:
        NotFinitelyGenerated: kesişim sonlu üretilmiş değil
    """
    decision = decision or decide(d)
    if not decision.fg:
        raise NotFinitelyGenerated("kesişim sonlu üretilmiş değil", r=decision.r)
    lattice = lattice_meet([B.lattice for B in d.subgroups])
    lam = decision.preimage_lattice
    # r=1 ve Λ={0}: serbest kısım aşikâr
    if d.r == 0 or lam.is_trivial:
        return SubgroupBasis(d.n, d.m, (), lattice)

    index = index_and_reps(lam)
    limit = min(INTERSECTION_CONFIG['max_coset_reps'], STALLINGS_CONFIG['coset_cap'])
    if index.index > limit:
        raise IndexCapExceeded(f"Λ indeksi {index.index} sınırı aşıyor", index=index.index, cap=limit)

    r = d.r
    graph = schreier_basis(
        d.v_basis,
        lambda w: tuple(exponent_vector(w, r)) in lam,
        coset_key=lambda w: lam.reduce(exponent_vector(w, r)),
    )

    pairs = []
    for u in graph.basis:
        coset = affine_meet(d.completions(u))
        if coset is None:
            raise RuntimeError("Schreier taban elemanı için ortak tamamlama bulunamadı")
        pairs.append((substitute(u, d.v_basis), coset.point))
    logger.debug("kesişim tabanı: indeks %d, rank %d", graph.index, len(pairs))
    raw = SubgroupBasis(d.n, d.m, tuple(pairs), lattice)
    return normalize(raw)


def intersect(subgroups: Sequence[SubgroupBasis]) -> IntersectionResult:
    """Karar + (sonlu üretilmişse) taban"""
    d = build_diagram(subgroups)
    decision = decide(d)
    if not decision.fg:
        return IntersectionResult(fg=False, basis=None, certificate=decision)
    return IntersectionResult(fg=True, basis=intersection_basis(d, decision), certificate=decision)


def pairwise_criterion(B1: SubgroupBasis, B2: SubgroupBasis) -> bool:
    """
    İki alt grup için: (H1 ∩ H2)π sonlu üretilmiş ⇔ aşikâr veya (L1+L2)R⁻¹ rankı r
    """
    _check_ambient([B1, B2])
    pullback = multi_pullback([B1.graph[0], B2.graph[0]])
    v_basis = spanning_basis(pullback).basis_words
    r = len(v_basis)
    if r == 0:
        return True
    R = []
    for v in v_basis:
        c1 = B1.point_of(B1.express(v))
        c2 = B2.point_of(B2.express(v))
        R.append(vec_sub(c2, c1))
    lam = preimage(R, B1.lattice + B2.lattice)
    # r=1: Λ ya {0} (aşikâr kesişim) ya da rank 1
    return r == 1 or lam.rank == r
