"""
Konsol Yardımcıları
Renkli çıktı (colorama) ve LOGGING_CONFIG'e göre log kurulumu
"""

import logging
import sys

import colorama
from colorama import Fore, Style

from config import LOGGING_CONFIG

colorama.init()


def print_colored(text, color=Fore.WHITE, style=Style.NORMAL, end='\n', file=None):
    """Renkli metin yazdırma fonksiyonu"""
    print(f"{style}{color}{text}{Style.RESET_ALL}", end=end, file=file or sys.stdout)


def print_header(text, width=60):
    """Başlık yazdırma fonksiyonu"""
    print_colored("=" * width, Fore.CYAN, Style.BRIGHT)
    print_colored(text.center(width), Fore.CYAN, Style.BRIGHT)
    print_colored("=" * width, Fore.CYAN, Style.BRIGHT)


def print_subheader(text):
    """Alt başlık yazdırma fonksiyonu"""
    print_colored(f"\n--- {text} ---", Fore.YELLOW, Style.BRIGHT)


def print_status(ok, text):
    """✅ / ❌ işaretli tek satır"""
    if ok:
        print_colored(f"✅ {text}", Fore.GREEN)
    else:
        print_colored(f"❌ {text}", Fore.RED)


class ColorFormatter(logging.Formatter):
    """Seviyeye göre renklendirilmiş log satırları"""

    COLORS = {
        logging.DEBUG: Style.DIM,
        logging.INFO: Fore.CYAN,
        logging.WARNING: Fore.YELLOW,
        logging.ERROR: Fore.RED,
        logging.CRITICAL: Fore.RED + Style.BRIGHT,
    }

    def format(self, record):
        message = super().format(record)
        return f"{self.COLORS.get(record.levelno, '')}{message}{Style.RESET_ALL}"


def setup_logging(level=None):
    """
    Kök logger'ı stderr'e yönlendirir (stdout JSON çıktısına ayrılmıştır)

    Args:
        level: 'DEBUG', 'INFO'... None ise LOGGING_CONFIG['log_level']
    """
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, '_ftfa_console', False):
            root.removeHandler(handler)

    root.setLevel(level or LOGGING_CONFIG['log_level'])
    if not LOGGING_CONFIG['enable_console_logging']:
        return root

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(ColorFormatter(LOGGING_CONFIG['log_format']))
    handler._ftfa_console = True
    root.addHandler(handler)
    return root
