"""
Veri Yönetimi
JSON kodlayıcı/çözücüler ve doğrulama raporlarının kaydı (JSON, CSV, TXT)

Belge biçimi: her üst düzey belge "schema" anahtarıyla başlar, anahtar sırası sabittir.
Büyük tam sayılar (|x| >= 2^53) ondalık dizge olarak yazılır; girdi her ikisini de kabul eder.
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd

from config import OUTPUT_CONFIG
from configurations import Configuration
from errors import InputFormatError
from ftfa import FtfaElement, SubgroupBasis, subgroup_basis
from mintersect import IntersectionResult
from oracle import Ball
from realizer import (FiniteBasis, FiniteGens, NormalClosurePiece, Parametric,
                      Realization, SubgroupSpec)
from verifier import VerifyReport
from words import ALPHABET, Word, format_word, parse_word, reduce_word
from zlattice import AffineCoset

_SAFE_INT = 2 ** 53


# ============= SAYI VE KELİME KODLARI =============

def encode_int(a: int) -> Union[int, str]:
    return a if abs(a) < _SAFE_INT else str(a)


def encode_vector(v: Sequence[int]) -> List[Union[int, str]]:
    return [encode_int(a) for a in v]


def decode_int(raw: Any) -> int:
    if isinstance(raw, bool):
        raise InputFormatError(f"tam sayı bekleniyordu: {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        try:
            return int(raw.strip())
        except ValueError:
            pass
    raise InputFormatError(f"tam sayı bekleniyordu: {raw!r}")


def decode_vector(raw: Any, m: int) -> tuple:
    if not isinstance(raw, list):
        raise InputFormatError(f"vektör liste olmalı: {raw!r}")
    if len(raw) != m:
        raise InputFormatError(f"vektör uzunluğu {len(raw)} != {m}", expected=m)
    return tuple(decode_int(a) for a in raw)


def encode_word(w: Sequence[int], n: int) -> Union[str, Dict[str, List[int]]]:
    if n <= len(ALPHABET):
        return format_word(w)
    return {'letters': list(w)}


def decode_word(raw: Any, n: int) -> Word:
    if isinstance(raw, str):
        return parse_word(raw, n)
    if isinstance(raw, dict) and isinstance(raw.get('letters'), list):
        return reduce_word([decode_int(a) for a in raw['letters']], n)
    raise InputFormatError(f"kelime metin veya {{'letters': [...]}} olmalı: {raw!r}")


def _require(doc: Any, key: str) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise InputFormatError(f"'{key}' alanı eksik")
    return doc[key]


def _require_list(doc: Any, key: str, default: Optional[list] = None) -> list:
    if default is not None and isinstance(doc, dict) and key not in doc:
        return default
    value = _require(doc, key)
    if not isinstance(value, list):
        raise InputFormatError(f"'{key}' alanı liste olmalı: {value!r}")
    return value


def _header() -> Dict[str, Any]:
    return {'schema': OUTPUT_CONFIG['schema']}


# ============= ALT GRUPLAR =============

def encode_element(g: FtfaElement, n: int) -> Dict[str, Any]:
    return {'word': encode_word(g.word, n), 'vector': encode_vector(g.vector)}


def decode_element(raw: Any, n: int, m: int) -> FtfaElement:
    return FtfaElement(decode_word(_require(raw, 'word'), n),
                       decode_vector(raw.get('vector', raw.get('vec', [0] * m)), m))


def _basis_fields(B: SubgroupBasis) -> Dict[str, Any]:
    return {
        'pairs': [encode_element(FtfaElement(u, a), B.n) for u, a in B.pairs],
        'lattice': [encode_vector(b) for b in B.lattice.basis],
    }


def encode_subgroup(B: SubgroupBasis) -> Dict[str, Any]:
    doc = _header()
    doc.update({'kind': 'finite', 'n': B.n, 'm': B.m, 'rank': B.rank})
    doc.update(_basis_fields(B))
    return doc


def _ambient(doc: Any) -> tuple:
    n, m = decode_int(_require(doc, 'n')), decode_int(_require(doc, 'm'))
    if n < 1 or m < 0:
        raise InputFormatError(f"geçersiz ortam grup n={n}, m={m}")
    return n, m


def _basis_from_fields(doc: Dict[str, Any], n: int, m: int) -> SubgroupBasis:
    """'generators' veya 'pairs' (eski adıyla 'basis') + 'lattice' alanlarından kanonik taban"""
    if 'generators' in doc:
        gens = [decode_element(g, n, m) for g in _require_list(doc, 'generators')]
    else:
        pairs = _require_list(doc, 'pairs' if 'pairs' in doc else 'basis')
        gens = [decode_element(g, n, m) for g in pairs]
        gens += [FtfaElement((), decode_vector(b, m)) for b in _require_list(doc, 'lattice', [])]
    return subgroup_basis(n, m, gens)


def decode_subgroup(doc: Any) -> SubgroupBasis:
    n, m = _ambient(doc)
    return _basis_from_fields(doc, n, m)


def encode_coset(coset: Optional[AffineCoset]) -> Optional[Dict[str, Any]]:
    if coset is None:
        return None
    return {'point': encode_vector(coset.point), 'lattice': [encode_vector(b) for b in coset.lattice.basis]}


def encode_intersection(result: IntersectionResult) -> Dict[str, Any]:
    cert = result.certificate
    doc = _header()
    doc.update({
        'fg': result.fg,
        'certificate': {
            'r': cert.r,
            'rank': cert.preimage_lattice.rank,
            'lambda': [encode_vector(b) for b in cert.preimage_lattice.basis],
        },
        'basis': None,
    })
    if result.basis is not None:
        basis = encode_subgroup(result.basis)
        basis.pop('schema')
        doc['basis'] = basis
    return doc


# ============= KONFİGÜRASYON VE GERÇEKLEME =============

def encode_configuration(c: Configuration) -> Dict[str, Any]:
    doc = _header()
    doc.update({'k': c.k, 'support': c.sets()})
    return doc


def decode_configuration(doc: Any) -> Configuration:
    k = decode_int(_require(doc, 'k'))
    support = _require(doc, 'support')
    if not isinstance(support, list) or not all(isinstance(s, list) for s in support):
        raise InputFormatError("'support' liste listesi olmalı")
    return Configuration.from_sets(k, [[decode_int(i) for i in s] for s in support])


def _encode_spec(spec: SubgroupSpec) -> Dict[str, Any]:
    if isinstance(spec, FiniteBasis):
        doc = {'kind': 'finite'}
        doc.update(_basis_fields(spec.basis))
        return doc
    pieces = []
    for piece in spec.pieces:
        if isinstance(piece, FiniteGens):
            entry = {'type': 'finite'}
            entry.update(_basis_fields(piece.basis))
        else:
            entry = {
                'type': 'normal_closure',
                'factor': [encode_word(w, spec.n) for w in piece.factor],
                'closed': [i + 1 for i in piece.closed],
            }
        pieces.append(entry)
    return {'kind': 'parametric', 'pieces': pieces}


def _decode_spec(doc: Any, n: int, m: int) -> SubgroupSpec:
    kind = _require(doc, 'kind')
    if kind == 'finite':
        return FiniteBasis(_basis_from_fields(doc, n, m))
    if kind != 'parametric':
        raise InputFormatError(f"bilinmeyen alt grup türü {kind!r}")
    pieces = []
    for entry in _require_list(doc, 'pieces'):
        kind = _require(entry, 'type')
        if kind == 'finite':
            pieces.append(FiniteGens(_basis_from_fields(entry, n, m)))
        elif kind == 'normal_closure':
            factor = tuple(decode_word(w, n) for w in _require_list(entry, 'factor'))
            closed = tuple(decode_int(i) - 1 for i in _require_list(entry, 'closed'))
            if any(not 0 <= i < len(factor) for i in closed):
                raise InputFormatError("'closed' indeksleri çarpan dışında")
            pieces.append(NormalClosurePiece(factor, closed))
        else:
            raise InputFormatError(f"bilinmeyen parça türü {kind!r}")
    return Parametric(n, m, tuple(pieces))


def decode_spec(doc: Any) -> SubgroupSpec:
    """Tek alt grup belgesi: sonlu (üreteç/taban) veya 'kind': 'parametric'"""
    n, m = _ambient(doc)
    if doc.get('kind') == 'parametric':
        return _decode_spec(doc, n, m)
    return FiniteBasis(_basis_from_fields(doc, n, m))


def encode_membership(result: bool, coset: Optional[AffineCoset]) -> Dict[str, Any]:
    doc = _header()
    doc.update({'member': result, 'completion': encode_coset(coset)})
    return doc


def encode_realization(R: Realization) -> Dict[str, Any]:
    doc = _header()
    doc.update({
        'n': R.n,
        'm': R.m,
        'k': R.k,
        'letter_range': list(R.letter_range),
        'subgroups': [_encode_spec(s) for s in R.subgroups],
    })
    return doc


def decode_realization(doc: Any) -> Realization:
    n, m = _ambient(doc)
    subgroups = tuple(_decode_spec(s, n, m) for s in _require_list(doc, 'subgroups'))
    letters = _require_list(doc, 'letter_range', [0, 0])
    if len(letters) != 2:
        raise InputFormatError(f"'letter_range' iki elemanlı olmalı: {letters!r}")
    return Realization(n, m, subgroups, (decode_int(letters[0]), decode_int(letters[1])))


# ============= RAPORLAR =============

def _encode_evidence(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _encode_evidence(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode_evidence(v) for v in value]
    if isinstance(value, int) and not isinstance(value, bool):
        return encode_int(value)
    return value


def encode_report(report: VerifyReport) -> Dict[str, Any]:
    doc = _header()
    doc.update({
        'k': report.configuration.k,
        'n': report.n,
        'm': report.m,
        'passed': report.passed,
        'counts': report.counts(),
        'subsets': [
            {
                'indices': list(e.indices),
                'expected': e.expected,
                'verdict': e.verdict,
                'consistent': e.consistent,
                'evidence': _encode_evidence(e.evidence),
            }
            for e in report.entries
        ],
    })
    return doc


def encode_ball(b: Ball, n: int) -> Dict[str, Any]:
    doc = _header()
    doc.update({
        'max_word_len': b.max_word_len,
        'max_vec_norm': b.max_vec_norm,
        'size': len(b),
        'elements': [encode_element(g, n) for g in b.elements],
    })
    return doc


def encode_error(code: str, message: str) -> Dict[str, Any]:
    doc = _header()
    doc['error'] = {'code': code, 'message': message}
    return doc


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=OUTPUT_CONFIG['indent'])


def load_json(path: Union[str, Path]) -> Any:
    """
    Raises:
        InputFormatError: dosya JSON değil
        OSError: dosya okunamadı
    """
    with open(path, 'r', encoding=OUTPUT_CONFIG['encoding']) as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise InputFormatError(f"{path}: geçersiz JSON ({e.msg}, satır {e.lineno})") from e


def report_summary(report: VerifyReport) -> List[str]:
    """Rapor için insan okunur satırlar"""
    lines = [
        f"Konfigürasyon: {report.configuration}",
        f"Ortam: F_{report.n} x Z^{report.m}",
        f"Sonuç: {'GEÇTİ' if report.passed else 'BAŞARISIZ'}",
        "",
    ]
    for verdict, count in sorted(report.counts().items()):
        lines.append(f"{verdict}: {count}")
    lines.append("")
    for e in report.entries:
        mark = "✓" if e.consistent else "✗"
        lines.append(f"{mark} {{{','.join(map(str, e.indices))}}}  c={e.expected}  {e.verdict}")
    return lines


# ============= KAYIT =============

class DataManager:
    """Doğrulama raporlarını diske yazar"""

    def __init__(self, output_dir=None):
        self.output_dir = Path(output_dir or OUTPUT_CONFIG['output_directory'])
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def save_report(self, report: VerifyReport, prefix: str = "verify") -> Dict[str, Path]:
        """
        Raporu tüm formatlarda kaydeder (JSON, CSV, TXT)

        Args:
            report: Doğrulama raporu
            prefix: Dosya adı öneki

        Returns:
            dict: Kaydedilen dosya yolları
        """
        self.output_dir.mkdir(parents=True, exist_ok=True)

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        base_name = f"{prefix}_{timestamp}"
        saved_files = {}
        encoding = OUTPUT_CONFIG['encoding']

        # 1. JSON
        json_path = self.output_dir / f"{base_name}.json"
        with open(json_path, 'w', encoding=encoding) as f:
            f.write(dumps(encode_report(report)))
        saved_files['json'] = json_path

        # 2. CSV (alt küme başına bir satır)
        rows = [{
            'Alt Küme': "{" + ",".join(map(str, e.indices)) + "}",
            'Beklenen': e.expected,
            'Karar': e.verdict,
            'Tutarlı': e.consistent,
            'Kanıt': json.dumps(_encode_evidence(e.evidence), ensure_ascii=False),
        } for e in report.entries]
        csv_path = self.output_dir / f"{base_name}.csv"
        pd.DataFrame(rows).to_csv(csv_path, index=False, encoding=OUTPUT_CONFIG['csv_encoding'])
        saved_files['csv'] = csv_path

        # 3. TXT rapor
        txt_path = self.output_dir / f"{base_name}_rapor.txt"
        with open(txt_path, 'w', encoding=encoding) as f:
            f.write(f"DOĞRULAMA RAPORU - {datetime.now().strftime('%d.%m.%Y %H:%M')}\n")
            f.write("=" * 50 + "\n\n")
            f.write("\n".join(report_summary(report)) + "\n")
        saved_files['txt'] = txt_path

        return saved_files
