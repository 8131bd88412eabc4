"""
Top Oracle'ı
F_n x Z^m içinde sınırlı top numaralaması; testler için kaba kuvvet filtre
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from config import ORACLE_CONFIG
from errors import BoundsTooLarge
from ftfa import FtfaElement, SubgroupBasis
from realizer import FiniteBasis, SubgroupSpec
from words import Word, letter_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ball:
    max_word_len: int
    max_vec_norm: int
    elements: Tuple[FtfaElement, ...]

    def __contains__(self, g: FtfaElement) -> bool:
        return g in self.as_set()

    def __len__(self) -> int:
        return len(self.elements)

    def as_set(self) -> frozenset:
        return frozenset(self.elements)


def enumerate_words(n: int, max_len: int) -> Iterator[Word]:
    """İndirgenmiş kelimeler: önce uzunluk, sonra x < X < y < Y sırası"""
    letters = sorted((s * a for a in range(1, n + 1) for s in (1, -1)), key=letter_key)
    layer: List[Word] = [()]
    yield ()
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for a in letters:
                if w and w[-1] == -a:
                    continue
                nxt.append(w + (a,))
        yield from nxt
        layer = nxt


def vectors_by_shell(m: int, norm: int) -> Iterator[Tuple[int, ...]]:
    """Z^m vektörleri, ∞-norm kabuklarına göre (kabuk içinde sözlük sırası)"""
    yield (0,) * m
    if m == 0:
        return
    for s in range(1, norm + 1):
        for v in itertools.product(range(-s, s + 1), repeat=m):
            if max(abs(a) for a in v) == s:
                yield v


def count_cells(n: int, m: int, max_len: int, norm: int) -> int:
    words = 1 + sum(2 * n * (2 * n - 1) ** (l - 1) for l in range(1, max_len + 1))
    return words * (2 * norm + 1) ** m


def _as_spec(spec: Union[SubgroupSpec, SubgroupBasis]) -> SubgroupSpec:
    return FiniteBasis(spec) if isinstance(spec, SubgroupBasis) else spec


def _check_bounds(n: int, m: int, max_len: int, norm: int, cell_cap: Optional[int]) -> None:
    if max_len < 0 or norm < 0:
        raise BoundsTooLarge("sınırlar negatif olamaz", max_word_len=max_len, max_vec_norm=norm)
    cap = ORACLE_CONFIG['cell_cap'] if cell_cap is None else cell_cap
    cells = count_cells(n, m, max_len, norm)
    if cells > cap:
        raise BoundsTooLarge(f"{cells} hücre, sınır {cap}", cells=cells, cap=cap)


def intersection_ball(specs: Sequence[Union[SubgroupSpec, SubgroupBasis]], max_word_len: int,
                      max_vec_norm: int, cell_cap: Optional[int] = None) -> Ball:
    """
    Tüm alt gruplarda olan top elemanları

    Kelime başına tamamlamalar bir kez hesaplanır; vektörler koset üyeliğiyle süzülür.
    """
    specs = [_as_spec(s) for s in specs]
    n, m = specs[0].n, specs[0].m
    _check_bounds(n, m, max_word_len, max_vec_norm, cell_cap)
    vectors = list(vectors_by_shell(m, max_vec_norm))
    out = []
    for w in enumerate_words(n, max_word_len):
        cosets = []
        for spec in specs:
            coset = spec.completion(w)
            if coset is None:
                break
            cosets.append(coset)
        else:
            out.extend(FtfaElement(w, v) for v in vectors if all(v in c for c in cosets))
    logger.debug("top: |w| <= %d, |v| <= %d, %d eleman", max_word_len, max_vec_norm, len(out))
    return Ball(max_word_len, max_vec_norm, tuple(out))


def ball(spec: Union[SubgroupSpec, SubgroupBasis], max_word_len: int, max_vec_norm: int,
         cell_cap: Optional[int] = None) -> Ball:
    return intersection_ball([spec], max_word_len, max_vec_norm, cell_cap)
