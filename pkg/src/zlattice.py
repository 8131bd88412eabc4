"""
Tam Sayı Lineer Cebir
Satır-HNF, çekirdek, kafes kesişimi, ön görüntü, indeks/temsilciler ve afin koset kesişimi

Vektörler soldan etki eder (x·M); tüm hesaplar Python int ile kesindir.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_form

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]
IntMatrix = List[List[int]]


# ============= MATRİS YARDIMCILARI =============

def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def vec_mat(v: Sequence[int], M: Sequence[Sequence[int]], ncols: int) -> List[int]:
    """v·M (M'nin satır sayısı len(v) olmalı)"""
    out = [0] * ncols
    for coef, row in zip(v, M):
        if coef:
            for j in range(ncols):
                out[j] += coef * row[j]
    return out


def mat_mul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    return [vec_mat(row, B, ncols) for row in A]


def vec_add(u: Sequence[int], v: Sequence[int]) -> List[int]:
    return [a + b for a, b in zip(u, v)]


def vec_sub(u: Sequence[int], v: Sequence[int]) -> List[int]:
    return [a - b for a, b in zip(u, v)]


def _axpy(target: List[int], coef: int, row: Sequence[int]) -> None:
    if coef:
        for j, value in enumerate(row):
            target[j] += coef * value


# ============= HERMITE NORMAL FORMU =============

def hnf(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Tuple[IntMatrix, IntMatrix]:
    """
    Satır-HNF ve unimodüler dönüşüm

    Args:
        M: p x q tam sayı matrisi
        ncols: q (M boşsa gerekli)

    Returns:
        (H, U): U·M = [H; 0], H sıfır satırları atılmış kanonik HNF,
        U tam p x p unimodüler matris
    """
    A = [list(row) for row in M]
    p = len(A)
    q = ncols if ncols is not None else (len(A[0]) if A else 0)
    U = identity(p)
    r = 0
    for col in range(q):
        if r == p:
            break
        while True:
            nonzero = [i for i in range(r, p) if A[i][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: abs(A[i][col]))
            if best != r:
                A[r], A[best] = A[best], A[r]
                U[r], U[best] = U[best], U[r]
            done = True
            for i in range(r + 1, p):
                if A[i][col]:
                    f = A[i][col] // A[r][col]
                    _axpy(A[i], -f, A[r])
                    _axpy(U[i], -f, U[r])
                    if A[i][col]:
                        done = False
            if done:
                break
        if A[r][col] == 0:
            continue
        if A[r][col] < 0:
            A[r] = [-a for a in A[r]]
            U[r] = [-a for a in U[r]]
        pivot = A[r][col]
        for i in range(r):
            f = A[i][col] // pivot
            if f:
                _axpy(A[i], -f, A[r])
                _axpy(U[i], -f, U[r])
        r += 1
    return A[:r], U


def pivot_columns(H: Sequence[Sequence[int]]) -> List[int]:
    cols = []
    for row in H:
        cols.append(next(j for j, a in enumerate(row) if a != 0))
    return cols


def smith_invariants(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[int]:
    """Sıfırdan farklı değişmez çarpanlar (sympy SNF)"""
    rows = [list(r) for r in M]
    q = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    if not rows or q == 0:
        return []
    dm = DomainMatrix([[ZZ(a) for a in row] for row in rows], (len(rows), q), ZZ)
    snf = smith_normal_form(dm).to_Matrix()
    diag = [abs(int(snf[i, i])) for i in range(min(snf.rows, snf.cols))]
    return [d for d in diag if d != 0]


# ============= KAFES =============

@dataclass(frozen=True)
class Lattice:
    """Z^dim içinde HNF-kanonik alt kafes"""
    dim: int
    basis: Tuple[Vector, ...] = ()

    @classmethod
    def from_generators(cls, rows: Sequence[Sequence[int]], dim: int) -> "Lattice":
        rows = [list(r) for r in rows]
        for row in rows:
            if len(row) != dim:
                raise ValueError(f"satır uzunluğu {len(row)} != {dim}")
        H, _ = hnf(rows, dim)
        return cls(dim, tuple(tuple(r) for r in H))

    @classmethod
    def zero(cls, dim: int) -> "Lattice":
        return cls(dim, ())

    @classmethod
    def full(cls, dim: int) -> "Lattice":
        return cls(dim, tuple(tuple(r) for r in identity(dim)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_trivial(self) -> bool:
        return not self.basis

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.dim

    def pivots(self) -> List[Tuple[int, int]]:
        """(sütun, pivot değeri) çiftleri"""
        return [(c, row[c]) for c, row in zip(pivot_columns(self.basis), self.basis)]

    def reduce(self, v: Sequence[int]) -> Vector:
        """Koset v + L için kanonik temsilci (pivot koordinatları [0, pivot) içinde)"""
        if len(v) != self.dim:
            raise ValueError(f"vektör uzunluğu {len(v)} != {self.dim}")
        out = list(v)
        for (col, piv), row in zip(self.pivots(), self.basis):
            f = out[col] // piv
            if f:
                _axpy(out, -f, row)
        return tuple(out)

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def __add__(self, other: "Lattice") -> "Lattice":
        if other.dim != self.dim:
            raise ValueError("farklı ortam boyutları")
        return Lattice.from_generators(list(self.basis) + list(other.basis), self.dim)

    def quotient_invariants(self) -> List[int]:
        """Z^dim / L yapısı: burulma çarpanları (1 hariç) ve serbest rank kadar 0"""
        torsion = [d for d in smith_invariants(self.basis, self.dim) if d != 1]
        return torsion + [0] * (self.dim - self.rank)


def kernel(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Lattice:
    """{v in Z^p : v·M = 0}"""
    p = len(M)
    H, U = hnf(M, ncols)
    return Lattice.from_generators(U[len(H):], p)


def solve_left(M: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[List[int]]:
    """
    x·M = b için bir tam sayı çözümü; yoksa None

    Args:
        M: p x q matris
        b: q uzunluğunda vektör
    """
    q = len(b)
    H, U = hnf(M, q)
    residual = list(b)
    y = []
    for col, row in zip(pivot_columns(H), H):
        if residual[col] % row[col]:
            return None
        coef = residual[col] // row[col]
        y.append(coef)
        _axpy(residual, -coef, row)
    if any(residual):
        return None
    return vec_mat(y, U[:len(H)], len(M))


def lattice_meet(lattices: Sequence[Lattice]) -> Lattice:
    """L_1 ∩ ... ∩ L_k"""
    if not lattices:
        raise ValueError("en az bir kafes gerekli")
    result = lattices[0]
    for other in lattices[1:]:
        if other.dim != result.dim:
            raise ValueError("farklı ortam boyutları")
        result = _meet_pair(result, other)
    return result


def _meet_pair(L1: Lattice, L2: Lattice) -> Lattice:
    if L1.is_trivial or L2.is_trivial:
        return Lattice.zero(L1.dim)
    stacked = [list(r) for r in L1.basis] + [[-a for a in r] for r in L2.basis]
    K = kernel(stacked, L1.dim)
    gens = [vec_mat(k[:L1.rank], L1.basis, L1.dim) for k in K.basis]
    return Lattice.from_generators(gens, L1.dim)


def preimage(R: Sequence[Sequence[int]], L: Lattice) -> Lattice:
    """{v in Z^r : v·R in L}; (v, a) -> v·R - a·B çekirdeğinin ilk r koordinatı"""
    r = len(R)
    stacked = [list(row) for row in R] + [[-a for a in row] for row in L.basis]
    K = kernel(stacked, L.dim)
    return Lattice.from_generators([k[:r] for k in K.basis], r)


@dataclass(frozen=True)
class CosetIndex:
    finite: bool
    index: Optional[int] = None
    pivots: Tuple[int, ...] = ()

    def reps(self) -> Iterator[Vector]:
        """Karışık tabanlı sözlük sırasında koset temsilcileri"""
        if not self.finite:
            raise ValueError("sonsuz indeks")
        return product(*(range(d) for d in self.pivots))


def index_and_reps(L: Lattice) -> CosetIndex:
    """[Z^dim : L] ve temsilciler; rank eksikse Infinite"""
    if not L.is_full_rank:
        return CosetIndex(finite=False)
    diag = tuple(L.basis[i][i] for i in range(L.dim))
    index = 1
    for d in diag:
        index *= d
    return CosetIndex(finite=True, index=index, pivots=diag)


# ============= AFİN KOSETLER =============

@dataclass(frozen=True)
class AffineCoset:
    """point + lattice; point kanonik temsilcidir"""
    point: Vector
    lattice: Lattice

    @classmethod
    def make(cls, point: Sequence[int], lattice: Lattice) -> "AffineCoset":
        return cls(lattice.reduce(point), lattice)

    def __contains__(self, v) -> bool:
        return tuple(vec_sub(v, self.point)) in self.lattice


def block_matrix(lattices: Sequence[Lattice]) -> IntMatrix:
    """
    İki köşegenli blok matris: L_1 satırları (B_1 | 0 ...), L_i satırları
    (.. -B_i | B_i ..), L_k satırları (0 ... | -B_k); (k-1)·m sütun
    """
    k = len(lattices)
    m = lattices[0].dim if lattices else 0
    width = (k - 1) * m
    rows = []
    for i, L in enumerate(lattices):
        for b in L.basis:
            row = [0] * width
            if i < k - 1:
                row[i * m:(i + 1) * m] = b
            if i > 0:
                row[(i - 1) * m:i * m] = [-a for a in b]
            rows.append(row)
    return rows


def affine_meet(cosets: Sequence[AffineCoset]) -> Optional[AffineCoset]:
    """Ortak nokta varsa kesişim koseti, yoksa None"""
    if not cosets:
        raise ValueError("en az bir koset gerekli")
    m = cosets[0].lattice.dim
    lattices = [c.lattice for c in cosets]
    Lblock = block_matrix(lattices)
    target: List[int] = []
    for prev, cur in zip(cosets, cosets[1:]):
        target.extend(vec_sub(cur.point, prev.point))
    a = solve_left(Lblock, target)
    if a is None:
        return None
    first = cosets[0]
    point = vec_add(first.point, vec_mat(a[:first.lattice.rank], first.lattice.basis, m))
    return AffineCoset.make(point, lattice_meet(lattices))
