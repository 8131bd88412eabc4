"""
Yapılandırma Dosyası
Tüm ayarları buradan yönet (.env ve ortam değişkenleri varsayılanları ezer)
"""

import logging
import os
import sys

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


# ============= STALLINGS / SCHREIER AYARLARI =============
STALLINGS_CONFIG = {
    # Koset sayımı bu sınırı geçerse IndexCapExceeded
    'coset_cap': 10 ** 6,
    # coset_key verilmezse her yeni kelime bilinen tüm temsilcilerle sınanır (karesel)
    'scan_coset_cap': 500,
}


# ============= KESİŞİM AYARLARI =============
INTERSECTION_CONFIG = {
    # Λ indeksi bundan büyükse temsilciler listelenmez
    'max_coset_reps': 10 ** 6,
}


# ============= KONFİGÜRASYON AYARLARI =============
CONFIGURATION_CONFIG = {
    'k_max': 16,  # 2^k - 1 hücreli bitset
}


# ============= DOĞRULAMA AYARLARI =============
VERIFY_CONFIG = {
    'witness_rank': 3,  # WitnessedNonFG için N
    'parallel_workers': 4,
    'show_progress': True,
    'truncation_radius': None,  # None = witness_rank
}


# ============= ORACLE AYARLARI =============
ORACLE_CONFIG = {
    'cell_cap': 2 * 10 ** 6,  # kelime x vektör hücre sayısı limiti
}


# ============= ÇIKTI AYARLARI =============
OUTPUT_CONFIG = {
    # ftfa-kit/1: |a| < 2^53 tam sayılar JSON sayısı, diğerleri ondalık metin yazılır;
    # okurken iki biçim de kabul edilir
    'schema': 'ftfa-kit/1',
    'indent': 2,
    'output_directory': 'output',
    'encoding': 'utf-8',
    'csv_encoding': 'utf-8-sig',  # Excel için BOM ile
}


# ============= LOGLAMA AYARLARI =============
LOGGING_CONFIG = {
    'enable_console_logging': True,
    'log_level': 'WARNING',  # DEBUG, INFO, WARNING, ERROR
    'log_format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
}


# ============= ORTAM DEĞİŞKENLERİ =============
ENV_OVERRIDES = {
    'FTFA_COSET_CAP': ('stallings', 'coset_cap', int),
    'FTFA_WITNESS_RANK': ('verify', 'witness_rank', int),
    'FTFA_ORACLE_CELL_CAP': ('oracle', 'cell_cap', int),
    'FTFA_LOG_LEVEL': ('logging', 'log_level', str),
}


# ============= YARDIMCI FONKSİYONLAR =============

def get_config(section=None):
    """Tek bölümün dict'i (section verilirse) veya {bölüm adı: dict} eşlemi"""
    if section:
        return globals().get(f"{section.upper()}_CONFIG", {})
    return {name[:-len('_CONFIG')].lower(): value
            for name, value in globals().items() if name.endswith('_CONFIG')}


def print_config(stream=None):
    """Geçerli ayarları bölüm bölüm yazar (varsayılan: stderr, stdout JSON'a ayrılmıştır)"""
    stream = stream or sys.stderr
    print("=" * 60, file=stream)
    print(f"⚙️  {OUTPUT_CONFIG['schema']} YAPILANDIRMASI", file=stream)
    print("=" * 60, file=stream)
    for section, settings in sorted(get_config().items()):
        print(f"📁 {section}", file=stream)
        for key, value in settings.items():
            print(f"   • {key} = {value!r}", file=stream)


def update_config(section, key, value):
    """Var olan bölüme yazar; bölüm yoksa False"""
    target = globals().get(f"{section.upper()}_CONFIG")
    if target is None:
        return False
    target[key] = value
    return True


def apply_env_overrides(environ=None):
    """FTFA_* ortam değişkenlerini ilgili bölümlere yazar; bozuk değerler atlanır"""
    environ = os.environ if environ is None else environ
    applied = {}
    for var, (section, key, cast) in ENV_OVERRIDES.items():
        raw = environ.get(var)
        if raw is None or raw == '':
            continue
        try:
            value = cast(raw)
        except ValueError:
            logger.warning("%s=%r okunamadı, varsayılan kullanılıyor", var, raw)
            continue
        update_config(section, key, value)
        applied[var] = value
    return applied


apply_env_overrides()


# ============= TEST =============
if __name__ == '__main__':
    print_config()
