"""
FTFA Alt Grup Hesabı
F_n x Z^m elemanları, alt grup tabanları, tamamlamalar, üyelik ve güçlü birleşim
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from errors import AmbientMismatch, NotStronglyComplementary
from stallings import Automaton, FreeBasisData, express, fold, rewrite
from words import EMPTY, Word, exponent_vector, format_word, inverse, multiply
from zlattice import (AffineCoset, Lattice, kernel, lattice_meet, vec_add,
                      vec_mat)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FtfaElement:
    """u·t^a"""
    word: Word
    vector: Tuple[int, ...]

    @property
    def free_part(self) -> Word:
        return self.word

    @property
    def abelian_part(self) -> Tuple[int, ...]:
        return self.vector

    def __mul__(self, other: "FtfaElement") -> "FtfaElement":
        return FtfaElement(multiply(self.word, other.word), tuple(vec_add(self.vector, other.vector)))

    def inverse(self) -> "FtfaElement":
        return FtfaElement(inverse(self.word), tuple(-a for a in self.vector))

    def __str__(self) -> str:
        return f"{format_word(self.word)} t^{list(self.vector)}"


@dataclass(frozen=True)
class SubgroupBasis:
    """
    {u_1 t^a_1, ..., u_r t^a_r; L_H}

    pairs içindeki u_j'ler Hπ'nin serbest tabanıdır, a_j'ler L_H'ye göre kanoniktir.
    """
    n: int
    m: int
    pairs: Tuple[Tuple[Word, Tuple[int, ...]], ...]
    lattice: Lattice

    @property
    def rank(self) -> int:
        return len(self.pairs)

    @property
    def words(self) -> List[Word]:
        return [u for u, _ in self.pairs]

    @property
    def completion_matrix(self) -> List[List[int]]:
        return [list(a) for _, a in self.pairs]

    def generators(self) -> List[FtfaElement]:
        gens = [FtfaElement(u, a) for u, a in self.pairs]
        gens.extend(FtfaElement(EMPTY, b) for b in self.lattice.basis)
        return gens

    @cached_property
    def graph(self) -> Tuple[Automaton, FreeBasisData]:
        return fold(self.words, self.n)

    def express(self, w: Sequence[int]) -> Optional[Word]:
        """w'nun pairs sembolleri cinsinden ifadesi (Hπ dışındaysa None)"""
        automaton, data = self.graph
        return express(data, automaton, w)

    def point_of(self, expression: Sequence[int]) -> List[int]:
        """ifadenin abelyanlaşması · A_H"""
        return vec_mat(exponent_vector(expression, self.rank), self.completion_matrix, self.m)

    def __str__(self) -> str:
        gens = ", ".join(f"{format_word(u)} t^{list(a)}" for u, a in self.pairs)
        lat = ", ".join(f"t^{list(b)}" for b in self.lattice.basis)
        return f"<{gens}; {lat}>"


def trivial_subgroup(n: int, m: int) -> SubgroupBasis:
    return SubgroupBasis(n, m, (), Lattice.zero(m))


def _check_element(n: int, m: int, g: FtfaElement) -> None:
    if len(g.vector) != m or any(abs(a) > n for a in g.word):
        raise AmbientMismatch(f"eleman F_{n} x Z^{m} içinde değil", n=n, m=m)


def subgroup_basis(n: int, m: int, generators: Sequence[FtfaElement]) -> SubgroupBasis:
    """
    Sonlu üreteç kümesinden kanonik FTFA tabanı

    1. {w_i} katlanır: serbest taban {u_j} ve her u_j'nin w_i cinsinden ifadesi
    2. a'_j = (ifadenin üs vektörü)·A
    3. M'nin i. satırı: w_i'nin {u_j} cinsinden yazılışının üs vektörü
    4. L_H = HNF(ker(M)·A)
    """
    for g in generators:
        _check_element(n, m, g)
    words = [g.word for g in generators]
    A = [list(g.vector) for g in generators]
    p = len(generators)

    automaton, data = fold(words, n)
    q = data.rank
    M = [exponent_vector(rewrite(data, automaton, w), q) for w in words]
    K = kernel(M, q)
    lattice = Lattice.from_generators([vec_mat(k, A, m) for k in K.basis], m)

    pairs = []
    for u, expr in zip(data.basis_words, data.generator_expressions):
        point = vec_mat(exponent_vector(expr, p), A, m)
        pairs.append((u, lattice.reduce(point)))
    logger.debug("taban: rank %d, kafes rankı %d", q, lattice.rank)
    return SubgroupBasis(n, m, tuple(pairs), lattice)


def normalize(B: SubgroupBasis) -> SubgroupBasis:
    return subgroup_basis(B.n, B.m, B.generators())


def completion(B: SubgroupBasis, w: Sequence[int]) -> Optional[AffineCoset]:
    """C_H(w) = {a : w t^a in H}; w Hπ dışındaysa None"""
    expr = B.express(w)
    if expr is None:
        return None
    return AffineCoset.make(B.point_of(expr), B.lattice)


def member(B: SubgroupBasis, g: FtfaElement) -> bool:
    _check_element(B.n, B.m, g)
    coset = completion(B, g.word)
    return coset is not None and g.vector in coset


def same_subgroup(B: SubgroupBasis, C: SubgroupBasis) -> bool:
    """Karşılıklı üreteç üyeliği"""
    if (B.n, B.m) != (C.n, C.m):
        return False
    return all(member(C, g) for g in B.generators()) and all(member(B, g) for g in C.generators())


def _abelian_span(B: SubgroupBasis) -> Lattice:
    return Lattice.from_generators([a for _, a in B.pairs] + list(B.lattice.basis), B.m)


def is_strongly_complementary(B: SubgroupBasis, C: SubgroupBasis) -> bool:
    """Serbest kısımlar serbest çarpan konumunda ve abelyan izdüşümler direkt toplamda mı?"""
    if (B.n, B.m) != (C.n, C.m):
        raise AmbientMismatch("farklı ortam gruplar", left=[B.n, B.m], right=[C.n, C.m])
    union_rank = fold(B.words + C.words, B.n)[0].rank
    if union_rank != B.rank + C.rank:
        return False
    span_b, span_c = _abelian_span(B), _abelian_span(C)
    if not lattice_meet([span_b, span_c]).is_trivial:
        return False
    return (span_b + span_c).rank == span_b.rank + span_c.rank


def strong_join(B: SubgroupBasis, C: SubgroupBasis) -> SubgroupBasis:
    """
    M ⊛ M': tabanların birleşimi

    Raises:
        NotStronglyComplementary: serbest veya abelyan kontrol başarısız
    """
    if not is_strongly_complementary(B, C):
        raise NotStronglyComplementary("alt gruplar güçlü tümleyen değil")
    lattice = B.lattice + C.lattice
    pairs = tuple((u, lattice.reduce(a)) for u, a in B.pairs + C.pairs)
    return SubgroupBasis(B.n, B.m, pairs, lattice)
