"""
Konfigürasyon Gerçekleyiciler
Alt grup tanımları (sonlu taban / parametrik), F_2 x Z^m ve F_2 gerçeklemeleri

Serbest harfler u_j = y^-j x y^j ailesinden seçilir; her blok kendi harf çiftini kullanır.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Dict, List, Optional, Sequence, Tuple, Union

from configurations import (Configuration, is_howson, mask_to_set,
                            shortlex_key, submasks)
from errors import AmbientMismatch, KMismatch, NotHowson
from ftfa import (FtfaElement, SubgroupBasis, completion, member, normalize,
                  strong_join, subgroup_basis, trivial_subgroup)
from stallings import express, fold
from words import EMPTY, Word, multiply, power, reduce_word, substitute
from zlattice import AffineCoset, Lattice, vec_add

logger = logging.getLogger(__name__)

X, Y = (1,), (2,)


def u_letter(j: int) -> Word:
    """u_j = y^-j x y^j"""
    return multiply(power(Y, -j), X, power(Y, j))


def shift_word(w: Sequence[int], s: int) -> Word:
    """u_j -> u_{j+s} otomorfizması (y^s ile eşlenik)"""
    return multiply(power(Y, -s), w, power(Y, s))


# ============= ALT GRUP TANIMLARI =============

@dataclass(frozen=True)
class FiniteGens:
    """Kendi serbest tabanının ürettiği serbest çarpanda sonlu üretilmiş parça"""
    basis: SubgroupBasis

    @property
    def factor(self) -> Tuple[Word, ...]:
        return tuple(self.basis.words)


@dataclass(frozen=True)
class NormalClosurePiece:
    """⟨⟨S⟩⟩, F(U) içinde; S ⊆ U indeksleri (0 tabanlı)"""
    factor: Tuple[Word, ...]
    closed: Tuple[int, ...]

    def contains_expression(self, syllable: Sequence[int]) -> bool:
        """U-sembolleri üzerindeki hece: S harfleri silinince aşikâr mı?"""
        kept = [a for a in syllable if abs(a) - 1 not in self.closed]
        return not reduce_word(kept)


FactorPiece = Union[FiniteGens, NormalClosurePiece]


@dataclass(frozen=True)
class FiniteBasis:
    basis: SubgroupBasis
    kind = 'finite'

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def m(self) -> int:
        return self.basis.m

    def completion(self, w: Sequence[int]) -> Optional[AffineCoset]:
        return completion(self.basis, w)

    def member(self, g: FtfaElement) -> bool:
        return member(self.basis, g)


@dataclass(frozen=True)
class Parametric:
    """Güçlü tümleyen parçaların birleşimi; en az bir parça sonlu üretilmiş değil"""
    n: int
    m: int
    pieces: Tuple[FactorPiece, ...]
    kind = 'parametric'

    @cached_property
    def _letters(self) -> Tuple[List[Word], List[Tuple[int, int]]]:
        letters, owner = [], []
        for p_idx, piece in enumerate(self.pieces):
            for local, word in enumerate(piece.factor, start=1):
                letters.append(word)
                owner.append((p_idx, local))
        return letters, owner

    @cached_property
    def _graph(self):
        return fold(self._letters[0], self.n)

    @cached_property
    def lattice(self) -> Lattice:
        lat = Lattice.zero(self.m)
        for piece in self.pieces:
            if isinstance(piece, FiniteGens):
                lat = lat + piece.basis.lattice
        return lat

    def completion(self, w: Sequence[int]) -> Optional[AffineCoset]:
        """Hecelere ayır: sonlu parça -> tamamlama, normal kapanış -> silme testi"""
        automaton, data = self._graph
        expr = express(data, automaton, w)
        if expr is None:
            return None
        _, owner = self._letters
        syllables: List[Tuple[int, List[int]]] = []
        for sym in expr:
            p_idx, local = owner[abs(sym) - 1]
            signed = local if sym > 0 else -local
            if syllables and syllables[-1][0] == p_idx:
                syllables[-1][1].append(signed)
            else:
                syllables.append((p_idx, [signed]))

        point = [0] * self.m
        for p_idx, syllable in syllables:
            piece = self.pieces[p_idx]
            if isinstance(piece, NormalClosurePiece):
                if not piece.contains_expression(syllable):
                    return None
                continue
            coset = completion(piece.basis, substitute(syllable, piece.factor))
            if coset is None:
                return None
            point = vec_add(point, coset.point)
        return AffineCoset.make(point, self.lattice)

    def member(self, g: FtfaElement) -> bool:
        if len(g.vector) != self.m or any(abs(a) > self.n for a in g.word):
            raise AmbientMismatch(f"eleman F_{self.n} x Z^{self.m} içinde değil", n=self.n, m=self.m)
        coset = self.completion(g.word)
        return coset is not None and g.vector in coset


SubgroupSpec = Union[FiniteBasis, Parametric]


def normal_closure_spec(n: int, m: int, factor: Sequence[Word], closed: Sequence[int]) -> Parametric:
    return Parametric(n, m, (NormalClosurePiece(tuple(factor), tuple(closed)),))


def truncate(spec: SubgroupSpec, radius: int) -> SubgroupBasis:
    """
    Sonlu üretilmiş alt grup: normal kapanışlar S ∪ {u^±j s u^∓j : j <= radius} ile kesilir
    """
    if isinstance(spec, FiniteBasis):
        return spec.basis
    gens: List[FtfaElement] = []
    zero = (0,) * spec.m
    for piece in spec.pieces:
        if isinstance(piece, FiniteGens):
            gens.extend(piece.basis.generators())
            continue
        others = [w for idx, w in enumerate(piece.factor) if idx not in piece.closed]
        for idx in piece.closed:
            s = piece.factor[idx]
            gens.append(FtfaElement(s, zero))
            for u in others:
                for j in range(1, radius + 1):
                    for sign in (1, -1):
                        conj = multiply(power(u, sign * j), s, power(u, -sign * j))
                        gens.append(FtfaElement(conj, zero))
    return subgroup_basis(spec.n, spec.m, gens)


# ============= GERÇEKLEME =============

@dataclass(frozen=True)
class Realization:
    n: int
    m: int
    subgroups: Tuple[SubgroupSpec, ...]
    letter_range: Tuple[int, int] = (0, 0)  # kullanılan u_j indeksleri [min, max)

    @property
    def k(self) -> int:
        return len(self.subgroups)


def _as_pieces(spec: SubgroupSpec) -> List[FactorPiece]:
    if isinstance(spec, Parametric):
        return list(spec.pieces)
    B = spec.basis
    if B.rank == 0 and B.lattice.is_trivial:
        return []
    return [FiniteGens(B)]


def _combine(n: int, m: int, specs: Sequence[SubgroupSpec]) -> SubgroupSpec:
    """Güçlü tümleyen tanımların birleşimi"""
    if all(isinstance(s, FiniteBasis) for s in specs):
        return FiniteBasis(reduce(strong_join, [s.basis for s in specs], trivial_subgroup(n, m)))
    pieces: List[FactorPiece] = []
    for s in specs:
        pieces.extend(_as_pieces(s))
    return Parametric(n, m, tuple(pieces))


def _almost_zero_block(position: int, size: int, x: Word, y: Word,
                       coords: Sequence[int], m: int) -> SubgroupBasis:
    """
    I = {i_1 < ... < i_r} bloğunda i_{position+1} için alt grup

    j < r: ⟨x, y; t^e_l, l ≠ j⟩;  j = r: ⟨x, y t^e_1; t^(e_l - e_1), l >= 2⟩
    """
    def unit(c):
        v = [0] * m
        v[c] = 1
        return v

    zero = [0] * m
    if position < size - 1:
        gens = [FtfaElement(x, tuple(zero)), FtfaElement(y, tuple(zero))]
        gens += [FtfaElement(EMPTY, tuple(unit(c))) for l, c in enumerate(coords) if l != position]
    else:
        e1 = unit(coords[0])
        gens = [FtfaElement(x, tuple(zero)), FtfaElement(y, tuple(e1))]
        for c in coords[1:]:
            gens.append(FtfaElement(EMPTY, tuple(a - b for a, b in zip(unit(c), e1))))
    return subgroup_basis(2, m, gens)


def realize_ftfa(c: Configuration) -> Realization:
    """
    F_2 x Z^m içinde gerçekleme, m = Σ(|I| - 1)

    Destek kümeleri kısa-leksikografik sırada bloklara ayrılır; tekil {i} blokları
    negatif harflerde normal kapanış parçası olur.
    """
    sets = sorted(c.support, key=shortlex_key)
    m = sum(bin(s).count("1") - 1 for s in sets)
    per_index: Dict[int, List[SubgroupSpec]] = {i: [] for i in range(1, c.k + 1)}

    blocks, singles, coord = 0, 0, 0
    low = 0
    for mask in sets:
        indices = mask_to_set(mask)
        if len(indices) == 1:
            factor = (u_letter(-2 * singles - 2), u_letter(-2 * singles - 1))
            low = -2 * singles - 2
            per_index[indices[0]].append(normal_closure_spec(2, m, factor, (0,)))
            singles += 1
            continue
        x, y = u_letter(2 * blocks), u_letter(2 * blocks + 1)
        coords = list(range(coord, coord + len(indices) - 1))
        for position, i in enumerate(indices):
            block = _almost_zero_block(position, len(indices), x, y, coords, m)
            per_index[i].append(FiniteBasis(block))
        blocks += 1
        coord += len(indices) - 1

    subgroups = tuple(_combine(2, m, per_index[i]) for i in range(1, c.k + 1))
    logger.info("realize_ftfa: k=%d, m=%d, %d blok, %d tekil", c.k, m, blocks, singles)
    return Realization(2, m, subgroups, (low, 2 * blocks))


def _full_factor(f: int, m: int) -> SubgroupBasis:
    zero = (0,) * m
    return subgroup_basis(2, m, [FtfaElement(u_letter(2 * f), zero), FtfaElement(u_letter(2 * f + 1), zero)])


def _factor_nc(f: int, m: int) -> Parametric:
    return normal_closure_spec(2, m, (u_letter(2 * f), u_letter(2 * f + 1)), (1,))


def realize_free(c: Configuration) -> Realization:
    """
    F_2 içinde gerçekleme (yalnız Howson konfigürasyonlar)

    Raises:
        NotHowson: sıfır kümesi birleşim altında kapalı değil
    """
    if not is_howson(c):
        raise NotHowson(f"{c} Howson değil", k=c.k)

    assignment: Dict[int, List[Tuple[int, str]]] = {i: [] for i in range(1, c.k + 1)}
    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def rec(active: int, support: frozenset) -> None:
        if not support:
            return
        if len(support) == (1 << bin(active).count("1")) - 1:
            f = fresh()
            for i in mask_to_set(active):
                assignment[i].append((f, 'nc'))
            return
        maximal = sorted((s for s in support
                          if not any(t != s and s & ~t == 0 for t in support)), key=shortlex_key)
        if len(maximal) >= 2:
            for top in maximal:
                rec(top, frozenset(s for s in support if s & ~top == 0))
            return
        top = maximal[0]
        if top != active:
            rec(top, support)
            return
        zeros = [s for s in submasks(active) if s not in support]
        size = max(bin(s).count("1") for s in zeros)
        widest = min((s for s in zeros if bin(s).count("1") == size), key=shortlex_key)
        rest = active & ~widest
        j_bit = rest & -rest
        j = mask_to_set(j_bit)[0]
        rec(active & ~j_bit, frozenset(s for s in support if not s & j_bit))
        f = fresh()
        for i in mask_to_set(active):
            assignment[i].append((f, 'nc' if i == j else 'full'))

    rec(c.full_mask, c.support)

    subgroups = []
    for i in range(1, c.k + 1):
        specs = [FiniteBasis(_full_factor(f, 0)) if kind == 'full' else _factor_nc(f, 0)
                 for f, kind in sorted(assignment[i])]
        subgroups.append(_combine(2, 0, specs))
    logger.info("realize_free: k=%d, %d serbest çarpan", c.k, counter[0])
    return Realization(2, 0, tuple(subgroups), (0, 2 * counter[0]))


# ============= GERÇEKLEME CEBİRİ =============

def extend_by_zero(R: Realization) -> Realization:
    """c ⊕_0 𝟘: aşikâr alt grup eklenir"""
    return Realization(R.n, R.m, R.subgroups + (FiniteBasis(trivial_subgroup(R.n, R.m)),), R.letter_range)


def extend_by_one(R: Realization) -> Realization:
    """c ⊕_1 𝟙: her H_i'ye taze ⟨u, v⟩ eklenir, H_{k+1} = ⟨⟨v⟩⟩ ⊆ ⟨u, v⟩"""
    f = (max(R.letter_range[1], 0) + 1) // 2
    full = FiniteBasis(_full_factor(f, R.m))
    grown = tuple(_combine(R.n, R.m, [spec, full]) for spec in R.subgroups)
    low = min(R.letter_range[0], 2 * f)
    return Realization(R.n, R.m, grown + (_factor_nc(f, R.m),), (low, 2 * f + 2))


def _embed_basis(B: SubgroupBasis, shift: int, before: int, after: int) -> SubgroupBasis:
    pad = lambda v: tuple([0] * before + list(v) + [0] * after)
    m = before + B.m + after
    pairs = tuple((shift_word(u, shift), pad(a)) for u, a in B.pairs)
    lattice = Lattice.from_generators([pad(b) for b in B.lattice.basis], m)
    return normalize(SubgroupBasis(B.n, m, pairs, lattice))


def _embed_spec(spec: SubgroupSpec, shift: int, before: int, after: int) -> SubgroupSpec:
    m = before + spec.m + after
    if isinstance(spec, FiniteBasis):
        return FiniteBasis(_embed_basis(spec.basis, shift, before, after))
    pieces = []
    for piece in spec.pieces:
        if isinstance(piece, FiniteGens):
            pieces.append(FiniteGens(_embed_basis(piece.basis, shift, before, after)))
        else:
            pieces.append(NormalClosurePiece(tuple(shift_word(w, shift) for w in piece.factor),
                                             piece.closed))
    return Parametric(spec.n, m, tuple(pieces))


def join_realizations(R: Realization, S: Realization) -> Realization:
    """c ∨ c': harfler ve abelyan koordinatlar ayrık tutularak eşli birleşim"""
    if R.k != S.k:
        raise KMismatch(f"k={R.k} ve k={S.k}", left=R.k, right=S.k)
    shift = R.letter_range[1] - S.letter_range[0]
    m = R.m + S.m
    left = [_embed_spec(spec, 0, 0, S.m) for spec in R.subgroups]
    right = [_embed_spec(spec, shift, R.m, 0) for spec in S.subgroups]
    subgroups = tuple(_combine(R.n, m, [a, b]) for a, b in zip(left, right))
    letters = (min(R.letter_range[0], S.letter_range[0] + shift), S.letter_range[1] + shift)
    return Realization(R.n, m, subgroups, letters)
