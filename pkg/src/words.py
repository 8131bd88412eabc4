"""
Kelime Cebri
Serbest gruptaki indirgenmiş kelimeler: indirgeme, ters, çarpım, yerine koyma, üs vektörü

Bir kelime işaretli üreteç indekslerinin bir tuple'ıdır: i > 0 üreteç, -i tersi.
"""

import re
from itertools import chain
from typing import Iterable, List, Optional, Sequence, Tuple

from errors import ArityMismatch, IndexOutOfRange, InputFormatError

Word = Tuple[int, ...]

EMPTY: Word = ()

# 1 = x, 2 = y, 3 = z, sonra a..w
ALPHABET = "xyzabcdefghijklmnopqrstuvw"
_LETTER_INDEX = {ch: i + 1 for i, ch in enumerate(ALPHABET)}
_TOKEN = re.compile(r"([A-Za-z])(?:\^(-?\d+))?|(1)|(\s+)")


def reduce_word(raw: Iterable[int], n: Optional[int] = None) -> Word:
    """
    Tek geçişli yığın ile serbest indirgeme

    Args:
        raw: İşaretli indeks dizisi
        n: Ortam rankı (None = kontrol yok)

    Returns:
        Word: indirgenmiş kelime
    """
    stack: List[int] = []
    for letter in raw:
        if letter == 0 or (n is not None and abs(letter) > n):
            raise IndexOutOfRange(f"harf {letter} rank {n} dışında", letter=letter, rank=n)
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-a for a in reversed(w))


def multiply(*words: Sequence[int]) -> Word:
    return reduce_word(chain.from_iterable(words))


def power(w: Sequence[int], exponent: int) -> Word:
    if exponent < 0:
        return reduce_word(inverse(w) * (-exponent))
    return reduce_word(tuple(w) * exponent)


def conjugate(w: Sequence[int], by: Sequence[int]) -> Word:
    """by^-1 · w · by"""
    return multiply(inverse(by), w, by)


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    """[u, v] = u^-1 v^-1 u v"""
    return multiply(inverse(u), inverse(v), u, v)


def substitute(w: Sequence[int], images: Sequence[Sequence[int]], p: Optional[int] = None) -> Word:
    """
    g_i -> images[i-1] homomorfizması

    Args:
        w: g_1..g_p sembolleri üzerinde kelime
        images: p adet kelime
        p: Beklenen sembol sayısı (verilirse len(images) ile eşleşmeli)
    """
    if p is not None and len(images) != p:
        raise ArityMismatch(f"{p} görüntü bekleniyordu, {len(images)} geldi",
                            expected=p, got=len(images))
    out: List[int] = []
    for letter in w:
        idx = abs(letter)
        if idx > len(images):
            raise ArityMismatch(f"sembol {idx} için görüntü yok", symbol=idx, got=len(images))
        image = images[idx - 1]
        out.extend(image if letter > 0 else inverse(image))
    return reduce_word(out)


def exponent_vector(w: Sequence[int], p: int) -> List[int]:
    """Her sembolün işaretli sayısı (abelyanlaştırma)"""
    vec = [0] * p
    for letter in w:
        idx = abs(letter)
        if idx > p:
            raise IndexOutOfRange(f"harf {letter} {p} sembol dışında", letter=letter, rank=p)
        vec[idx - 1] += 1 if letter > 0 else -1
    return vec


def letter_key(letter: int) -> Tuple[int, int]:
    """Harf sırası: x < X < y < Y < ..."""
    return (abs(letter), 0 if letter > 0 else 1)


def word_key(w: Sequence[int]) -> Tuple:
    """Kısa-leksikografik sıralama anahtarı"""
    return (len(w), tuple(letter_key(a) for a in w))


def parse_word(text: str, n: Optional[int] = None) -> Word:
    """
    Metin sözdizimi: 'xyX', 'x^4 y^-2', '1' veya '' birim eleman

    Raises:
        InputFormatError: tanınmayan karakter
        IndexOutOfRange: harf n'yi aşıyor
    """
    raw: List[int] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise InputFormatError(f"kelime okunamadı: {text!r} (konum {pos})", text=text)
        letter, exp, one, _space = match.groups()
        pos = match.end()
        if letter:
            idx = _LETTER_INDEX.get(letter.lower())
            if idx is None:
                raise InputFormatError(f"bilinmeyen harf {letter!r}", text=text)
            signed = idx if letter.islower() else -idx
            count = int(exp) if exp is not None else 1
            raw.extend([signed] * count if count >= 0 else [-signed] * (-count))
    return reduce_word(raw, n)


def format_word(w: Sequence[int]) -> str:
    if not w:
        return "1"
    if any(abs(a) > len(ALPHABET) for a in w):
        raise IndexOutOfRange("metin biçimi en fazla 26 üreteç destekler", rank=len(ALPHABET))
    return "".join(ALPHABET[a - 1] if a > 0 else ALPHABET[-a - 1].upper() for a in w)
