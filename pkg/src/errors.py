"""
Hata Sınıfları
Tüm modüllerin fırlattığı hatalar, CLI için sabit hata kodlarıyla
"""

from typing import Any, Dict


class FtfaError(Exception):
    """Kütüphanenin temel hatası; her alt sınıf sabit bir `code` taşır"""

    code = "FTFA_ERROR"

    def __init__(self, message: str = "", **details: Any):
        super().__init__(message or self.code)
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        payload = {"code": self.code, "message": str(self)}
        payload.update(self.details)
        return payload


class IndexOutOfRange(FtfaError):
    code = "INDEX_OUT_OF_RANGE"


class ArityMismatch(FtfaError):
    code = "ARITY_MISMATCH"


class IndexCapExceeded(FtfaError):
    code = "INDEX_CAP_EXCEEDED"


class AmbientMismatch(FtfaError):
    code = "AMBIENT_MISMATCH"


class NotStronglyComplementary(FtfaError):
    code = "NOT_STRONGLY_COMPLEMENTARY"


class NotFinitelyGenerated(FtfaError):
    code = "NOT_FINITELY_GENERATED"


class KMismatch(FtfaError):
    code = "K_MISMATCH"


class BadIndex(FtfaError):
    code = "BAD_INDEX"


class EmptyVertex(FtfaError):
    code = "EMPTY_VERTEX"


class KTooLarge(FtfaError):
    code = "K_TOO_LARGE"


class NotHowson(FtfaError):
    code = "NOT_HOWSON"


class BoundsTooLarge(FtfaError):
    code = "BOUNDS_TOO_LARGE"


class InputFormatError(FtfaError):
    """Bozuk JSON, okunamayan kelime vb. (CLI çıkış kodu 1)"""

    code = "INPUT_ERROR"
