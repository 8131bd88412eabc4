"""
Konfigürasyon Doğrulayıcı
Bir gerçeklemenin her alt küme kesişimini hedef konfigürasyonla karşılaştırır

Kararlar:
    VerifiedFG / VerifiedNonFG  -> tüm üyeler sonlu taban, çoklu kesişim motoru ile
    WitnessedNonFG              -> c(I)=1, parametrik üye var; rank-N serbest tanık
    StructuralOnly              -> c(I)=0, parametrik üye var; yapı sertifikası + üyelik kontrolü
"""

import logging
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from config import VERIFY_CONFIG
from configurations import Configuration, mask_to_set, subsets_shortlex
from errors import ArityMismatch, IndexCapExceeded
from ftfa import FtfaElement
from mintersect import build_diagram, decide, intersection_basis
from realizer import FiniteBasis, Realization, SubgroupSpec, truncate
from stallings import fold
from words import commutator, conjugate, format_word, power, substitute

logger = logging.getLogger(__name__)

VERIFIED_FG = "VerifiedFG"
VERIFIED_NON_FG = "VerifiedNonFG"
WITNESSED_NON_FG = "WitnessedNonFG"
STRUCTURAL_ONLY = "StructuralOnly"


@dataclass(frozen=True)
class SubsetVerdict:
    indices: Tuple[int, ...]
    expected: int
    verdict: str
    consistent: bool
    evidence: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)


@dataclass(frozen=True)
class VerifyReport:
    configuration: Configuration
    n: int
    m: int
    entries: Tuple[SubsetVerdict, ...]

    @property
    def passed(self) -> bool:
        return all(e.consistent for e in self.entries)

    def counts(self) -> Dict[str, int]:
        return dict(Counter(e.verdict for e in self.entries))

    def contradictions(self) -> List[SubsetVerdict]:
        return [e for e in self.entries if not e.consistent]

    def entry(self, indices: Sequence[int]) -> SubsetVerdict:
        key = tuple(sorted(indices))
        return next(e for e in self.entries if e.indices == key)


def _element_evidence(g: FtfaElement) -> Dict[str, Any]:
    return {'word': format_word(g.word), 'vector': list(g.vector)}


def _all_members(specs: Sequence[SubgroupSpec], elements: Sequence[FtfaElement]) -> bool:
    return all(spec.member(g) for spec in specs for g in elements)


def _decide_finite(indices, expected, specs) -> SubsetVerdict:
    d = build_diagram([s.basis for s in specs])
    decision = decide(d)
    observed = 0 if decision.fg else 1
    verdict = VERIFIED_FG if decision.fg else VERIFIED_NON_FG
    evidence = {'r': decision.r, 'preimage_rank': decision.preimage_lattice.rank}
    if observed != expected:
        logger.warning("çelişki: %s için c=%d, gözlenen %s", list(indices), expected, verdict)
    return SubsetVerdict(indices, expected, verdict, observed == expected, evidence)


def _commutator_witness(d, N: int) -> List[FtfaElement]:
    """v1^-j [v1, v2] v1^j, j < N; abelyan görüntü 0 olduğundan tamamlama noktası 0"""
    v1, v2 = (1,), (2,)
    out = []
    for j in range(N):
        v_word = conjugate(commutator(v1, v2), power(v1, j))
        out.append(FtfaElement(substitute(v_word, d.v_basis), (0,) * d.m))
    return out


def _witness(indices, expected, specs, N: int, radius: int) -> SubsetVerdict:
    n = specs[0].n
    for L in (radius, 2 * radius):
        truncated = [truncate(s, L) for s in specs]
        d = build_diagram(truncated)
        decision = decide(d)
        if decision.fg:
            try:
                basis = intersection_basis(d, decision)
            except IndexCapExceeded:
                continue
            if basis.rank < N:
                continue
            candidates = [FtfaElement(u, a) for u, a in basis.pairs[:N]]
        else:
            candidates = _commutator_witness(d, N)

        if not _all_members(specs, candidates):
            logger.error("tanık üyeliği başarısız: %s", list(indices))
            return SubsetVerdict(indices, expected, STRUCTURAL_ONLY, False,
                                 {'note': 'witness membership failed', 'radius': L})
        if fold([g.word for g in candidates], n)[0].rank != N:
            continue
        return SubsetVerdict(indices, expected, WITNESSED_NON_FG, True, {
            'witness_rank': N,
            'radius': L,
            'witness': [_element_evidence(g) for g in candidates],
        })
    return SubsetVerdict(indices, expected, STRUCTURAL_ONLY, True, {'note': 'witness not found'})


def _spot_check(indices, expected, specs, radius: int) -> SubsetVerdict:
    truncated = [truncate(s, radius) for s in specs]
    d = build_diagram(truncated)
    decision = decide(d)
    if not decision.fg:
        return SubsetVerdict(indices, expected, STRUCTURAL_ONLY, True,
                             {'checked': 0, 'note': 'truncated intersection not finitely generated'})
    try:
        basis = intersection_basis(d, decision)
    except IndexCapExceeded as e:
        return SubsetVerdict(indices, expected, STRUCTURAL_ONLY, True, {'checked': 0, 'note': str(e)})
    gens = basis.generators()
    failed = [g for g in gens if not all(s.member(g) for s in specs)]
    if failed:
        logger.error("üyelik kontrolü başarısız: %s", list(indices))
    evidence = {'checked': len(gens), 'truncated_rank': basis.rank, 'radius': radius}
    if failed:
        evidence['failed'] = [_element_evidence(g) for g in failed]
    return SubsetVerdict(indices, expected, STRUCTURAL_ONLY, not failed, evidence)


def _verify_subset(c: Configuration, R: Realization, mask: int, N: int, radius: int) -> SubsetVerdict:
    indices = tuple(mask_to_set(mask))
    expected = c.value(mask)
    specs = [R.subgroups[i - 1] for i in indices]
    if all(isinstance(s, FiniteBasis) for s in specs):
        return _decide_finite(indices, expected, specs)
    if expected:
        return _witness(indices, expected, specs, N, radius)
    return _spot_check(indices, expected, specs, radius)


def verify(c: Configuration, R: Realization, witness_rank: Optional[int] = None,
           parallel: bool = False, workers: Optional[int] = None,
           progress: Optional[bool] = None) -> VerifyReport:
    """
    Her boş olmayan I ⊆ [k] için kesişim kararı

    Args:
        c: Hedef konfigürasyon
        R: Gerçekleme (|R.subgroups| = c.k)
        witness_rank: WitnessedNonFG için N (None = VERIFY_CONFIG)
        parallel: Alt kümeleri iş parçacığı havuzunda değerlendir
        workers: Havuz boyutu (None = VERIFY_CONFIG['parallel_workers'])
        progress: İlerleme çubuğu (None = ayar ve etkileşimli terminal)

    Returns:
        VerifyReport: girdiler kısa-leksikografik alt küme sırasında

    Raises:
        ArityMismatch: alt grup sayısı k'dan farklı
    """
    if R.k != c.k:
        raise ArityMismatch(f"{R.k} alt grup, k={c.k}", expected=c.k, got=R.k)
    N = witness_rank or VERIFY_CONFIG['witness_rank']
    radius = VERIFY_CONFIG['truncation_radius'] or N
    masks = subsets_shortlex(c.k)
    if progress is None:
        progress = VERIFY_CONFIG['show_progress'] and sys.stderr.isatty()

    results: Dict[int, SubsetVerdict] = {}
    with tqdm(total=len(masks), desc="Doğrulama", colour="green",
              disable=not progress, file=sys.stderr) as bar:
        if parallel:
            with ThreadPoolExecutor(max_workers=workers or VERIFY_CONFIG['parallel_workers']) as executor:
                future_to_mask = {
                    executor.submit(_verify_subset, c, R, mask, N, radius): mask
                    for mask in masks
                }
                for future in as_completed(future_to_mask):
                    results[future_to_mask[future]] = future.result()
                    bar.update(1)
        else:
            for mask in masks:
                results[mask] = _verify_subset(c, R, mask, N, radius)
                bar.update(1)

    report = VerifyReport(c, R.n, R.m, tuple(results[mask] for mask in masks))
    logger.info("doğrulama: %d alt küme, %s, %s", len(masks), report.counts(),
                "geçti" if report.passed else "BAŞARISIZ")
    return report
