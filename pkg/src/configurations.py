"""
Kesişim Konfigürasyonları
k-konfigürasyon hesabı: birleşim, δ-toplam, kısıtlama, koni, Howson, engel sınırı

Alt kümeler bit maskeleriyle tutulur: i indeksi (1 tabanlı) bit i-1'dir.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from config import CONFIGURATION_CONFIG
from errors import BadIndex, EmptyVertex, KMismatch, KTooLarge

logger = logging.getLogger(__name__)


# ============= BİT MASKESİ YARDIMCILARI =============

def set_to_mask(indices: Iterable[int], k: int) -> int:
    mask = 0
    for i in indices:
        if not 1 <= i <= k:
            raise BadIndex(f"indeks {i} [1, {k}] dışında", index=i, k=k)
        mask |= 1 << (i - 1)
    return mask


def mask_to_set(mask: int) -> List[int]:
    out, i = [], 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def shortlex_key(mask: int) -> Tuple[int, List[int]]:
    return (bin(mask).count("1"), mask_to_set(mask))


def subsets_shortlex(k: int) -> List[int]:
    """[k]'nın boş olmayan alt kümeleri: önce boyut, sonra sözlük sırası"""
    return sorted(range(1, 1 << k), key=shortlex_key)


def submasks(mask: int) -> Iterator[int]:
    """Boş olmayan alt maskeler"""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def _drop_bit(mask: int, i: int) -> int:
    """i. biti (1 tabanlı) çıkarıp üst bitleri kaydırır"""
    low = mask & ((1 << (i - 1)) - 1)
    high = mask >> i
    return low | (high << (i - 1))


# ============= KONFİGÜRASYON =============

@dataclass(frozen=True)
class Configuration:
    """c: P([k]) \\ {∅} -> {0, 1}; support = c⁻¹(1)"""
    k: int
    support: FrozenSet[int] = frozenset()

    def __post_init__(self):
        if self.k < 1:
            raise BadIndex("k en az 1 olmalı", k=self.k)
        if self.k > CONFIGURATION_CONFIG['k_max']:
            raise KTooLarge(f"k={self.k} sınırı aşıyor", k=self.k, k_max=CONFIGURATION_CONFIG['k_max'])
        full = (1 << self.k) - 1
        for mask in self.support:
            if mask <= 0 or mask & ~full:
                raise BadIndex(f"geçersiz küme {mask_to_set(mask)}", k=self.k)
        object.__setattr__(self, 'support', frozenset(self.support))

    @classmethod
    def from_sets(cls, k: int, sets: Iterable[Iterable[int]]) -> "Configuration":
        masks = []
        for s in sets:
            mask = set_to_mask(s, k)
            if not mask:
                raise EmptyVertex("boş küme desteklenmez", k=k)
            masks.append(mask)
        return cls(k, frozenset(masks))

    @classmethod
    def zero(cls, k: int) -> "Configuration":
        return cls(k, frozenset())

    @classmethod
    def one(cls, k: int) -> "Configuration":
        return cls(k, frozenset(range(1, 1 << k)))

    @classmethod
    def almost_zero(cls, k: int, indices: Iterable[int]) -> "Configuration":
        return cls.from_sets(k, [indices])

    @property
    def full_mask(self) -> int:
        return (1 << self.k) - 1

    def value(self, mask: int) -> int:
        return 1 if mask in self.support else 0

    def __call__(self, indices: Iterable[int]) -> int:
        return self.value(set_to_mask(indices, self.k))

    def sets(self) -> List[List[int]]:
        """Destek kümeleri, kısa-leksikografik sırada"""
        return [mask_to_set(m) for m in sorted(self.support, key=shortlex_key)]

    def is_zero(self) -> bool:
        return not self.support

    def is_one(self) -> bool:
        return len(self.support) == self.full_mask

    def __str__(self) -> str:
        body = ",".join("{" + ",".join(map(str, s)) + "}" for s in self.sets())
        return f"c_{{{body}}} (k={self.k})"


# ============= İŞLEMLER =============

def join(c: Configuration, d: Configuration) -> Configuration:
    if c.k != d.k:
        raise KMismatch(f"k={c.k} ve k={d.k}", left=c.k, right=d.k)
    return Configuration(c.k, c.support | d.support)


def delta_sum(c: Configuration, d: Configuration, delta: int) -> Configuration:
    """c ⊕_δ d: k+1 ∉ I -> c(I); {k+1} ⊊ I -> d(I \\ {k+1}); I = {k+1} -> δ"""
    if c.k != d.k:
        raise KMismatch(f"k={c.k} ve k={d.k}", left=c.k, right=d.k)
    top = 1 << c.k
    support = set(c.support)
    support.update(mask | top for mask in d.support)
    if delta:
        support.add(top)
    return Configuration(c.k + 1, frozenset(support))


def restrict(c: Configuration, i: int) -> Configuration:
    """i indeksini ortamdan ve destekten çıkarır"""
    if c.k < 2 or not 1 <= i <= c.k:
        raise BadIndex(f"k={c.k} için {i} kaldırılamaz", index=i, k=c.k)
    bit = 1 << (i - 1)
    return Configuration(c.k - 1, frozenset(_drop_bit(m, i) for m in c.support if not m & bit))


def cone(c: Configuration, vertex: Iterable[int]) -> Configuration:
    """support ∩ P(I)"""
    mask = set_to_mask(vertex, c.k)
    if not mask:
        raise EmptyVertex("koni tepesi boş olamaz", k=c.k)
    return Configuration(c.k, frozenset(m for m in c.support if m & ~mask == 0))


def _zero_union_table(c: Configuration) -> List[int]:
    """best[S] = S'nin sıfır değerli alt kümelerinin birleşimi"""
    size = 1 << c.k
    best = [0] * size
    for mask in range(1, size):
        acc = 0 if mask in c.support else mask
        rest = mask
        while rest:
            low = rest & -rest
            acc |= best[mask ^ low]
            rest ^= low
        best[mask] = acc
    return best


def is_howson(c: Configuration) -> bool:
    """Sıfır kümesi birleşim altında kapalı mı?"""
    best = _zero_union_table(c)
    return all(best[s] != s for s in c.support)


def howson_violations(c: Configuration) -> List[Tuple[List[int], List[int]]]:
    """c(I) = c(J) = 0 ama c(I ∪ J) = 1 olan çiftler (kaba tarama)"""
    zeros = [m for m in range(1, 1 << c.k) if m not in c.support]
    out = []
    for a_idx, a in enumerate(zeros):
        for b in zeros[a_idx + 1:]:
            if (a | b) in c.support:
                out.append((mask_to_set(a), mask_to_set(b)))
    return out


def is_zero_monochromatic(c: Configuration, i: int) -> bool:
    """c = c|î ⊕_0 𝟘: i'yi içeren her küme 0"""
    bit = 1 << (i - 1)
    set_to_mask([i], c.k)
    return not any(m & bit for m in c.support)


def is_one_monochromatic(c: Configuration, i: int) -> bool:
    """c = c|î ⊕_1 𝟙: i'yi içeren her küme 1"""
    bit = 1 << (i - 1)
    set_to_mask([i], c.k)
    return all(m in c.support for m in range(1, 1 << c.k) if m & bit)


def is_independent(family: Sequence[Iterable[int]]) -> bool:
    """2^r birleşim birbirinden farklı mı? (boş küme yok ve r-1'lik birleşimler tam birleşimden farklı)"""
    masks = []
    for s in family:
        mask = 0
        for i in s:
            mask |= 1 << (i - 1)
        masks.append(mask)
    if any(m == 0 for m in masks):
        return False
    total = 0
    for m in masks:
        total |= m
    for j in range(len(masks)):
        others = 0
        for l, m in enumerate(masks):
            if l != j:
                others |= m
        if others == total:
            return False
    return True


# ============= ENGEL SINIRI =============

@dataclass(frozen=True)
class Obstruction:
    bound: int
    witness: Optional[Tuple[Tuple[int, ...], ...]] = None


def _best_packing(candidates: Sequence[int], full: int) -> Tuple[int, Tuple[int, ...]]:
    """Ayrık aday maskelerden en büyük paketleme (bellekli)"""

    @lru_cache(maxsize=None)
    def best(avail: int) -> Tuple[int, Tuple[int, ...]]:
        if not avail:
            return 0, ()
        low = avail & -avail
        skip = best(avail ^ low)
        result = skip
        for d in candidates:
            if d & low and d & ~avail == 0:
                count, chosen = best(avail & ~d)
                if count + 1 > result[0]:
                    result = (count + 1, (d,) + chosen)
        return result

    return best(full)


def obstruction_bound(c: Configuration) -> Obstruction:
    """
    (r-1)'lik birleşimleri 0, tüm birleşimi 1 olan I_1..I_r aileleri arasında max(r-1)

    Her destek kümesi S için özel parçalar D_j ⊆ S ayrık ve c(S \\ D_j) = 0 olmalıdır;
    kalan C = S \\ ∪D_j ilk iki kümeye eklenir.
    """
    best_bound, witness = 0, None
    for s in sorted(c.support, key=shortlex_key):
        candidates = [d for d in submasks(s) if d != s and (s & ~d) not in c.support]
        if len(candidates) < 2:
            continue
        count, parts = _best_packing(sorted(candidates), s)
        if count >= 2 and count - 1 > best_bound:
            rest = s
            for d in parts:
                rest &= ~d
            family = [d | rest if j < 2 else d for j, d in enumerate(parts)]
            best_bound = count - 1
            witness = tuple(tuple(mask_to_set(f)) for f in family)
    logger.debug("engel sınırı %d, tanık %s", best_bound, witness)
    return Obstruction(best_bound, witness)
