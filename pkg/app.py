"""
FTFA Kesişim Aracı - Başlatıcı
Kullanım: python app.py <komut> [seçenekler]  (bkz. README.md)
"""

import os
import sys

# src klasörü düz modül düzeni ile içe aktarılır
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "src")))

from main import main  # noqa: E402

if __name__ == '__main__':
    main()
