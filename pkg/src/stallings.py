"""
Stallings Otomatları
Kaynak izli katlama, serbest taban, yeniden yazma, çoklu geri çekme ve Schreier tabanı
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from config import STALLINGS_CONFIG
from errors import IndexCapExceeded
from words import (ALPHABET, EMPTY, Word, format_word, inverse, multiply,
                   substitute)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class Automaton:
    """Katlanmış, çekirdeklenmiş, tabanlı etiketli graf (base her zaman 0)"""
    n: int
    num_states: int
    edges: Tuple[Edge, ...]
    base: int = 0

    def __post_init__(self):
        out, inn = {}, {}
        for s, a, t in self.edges:
            out[(s, a)] = t
            inn[(t, a)] = s
        object.__setattr__(self, '_out', out)
        object.__setattr__(self, '_inn', inn)

    @property
    def rank(self) -> int:
        return len(self.edges) - self.num_states + 1

    def step(self, state: int, letter: int) -> Optional[int]:
        if letter > 0:
            return self._out.get((state, letter))
        return self._inn.get((state, -letter))

    def read(self, w: Sequence[int], start: Optional[int] = None) -> Optional[int]:
        state = self.base if start is None else start
        for letter in w:
            state = self.step(state, letter)
            if state is None:
                return None
        return state

    def accepts(self, w: Sequence[int]) -> bool:
        return self.read(w) == self.base

    def to_dict(self) -> Dict:
        def label(a):
            return ALPHABET[a - 1] if self.n <= len(ALPHABET) else a
        return {
            'states': self.num_states,
            'base': self.base,
            'transitions': [[s, label(a), t] for s, a, t in self.edges],
        }


@dataclass(frozen=True)
class FreeBasisData:
    """Yayılan ağaç tabanı ve (katlamadan geliyorsa) üreteçler cinsinden ifadeler"""
    basis_words: Tuple[Word, ...]
    tree_paths: Tuple[Word, ...]
    generator_expressions: Optional[Tuple[Word, ...]] = None
    num_generators: int = 0
    edge_symbols: Dict[Edge, int] = field(default_factory=dict, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.basis_words)


# ============= KATLAMA =============

class _OffsetUnionFind:
    """Her düğüm köküne göre bir F_p ofseti taşıyan birleşim-bul"""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.offset: List[Word] = [EMPTY] * size

    def find(self, v: int) -> Tuple[int, Word]:
        path = []
        while self.parent[v] != v:
            path.append(v)
            v = self.parent[v]
        root = v
        acc = EMPTY
        for node in reversed(path):
            acc = multiply(self.offset[node], acc)
            self.offset[node] = acc
            self.parent[node] = root
        return root, (self.offset[path[0]] if path else EMPTY)

    def attach(self, child: int, parent: int, offset: Word) -> None:
        self.parent[child] = parent
        self.offset[child] = offset


def _attach_keeping_base(uf, keep, keep_label, drop, drop_label, targets):
    """
    İki kök durumu birleştirir; base (0) hep kök kalır

    targets=True: aynı kaynaktan aynı harfle iki hedef; False: iki kaynak
    """
    if drop == 0:
        keep, keep_label, drop, drop_label = drop, drop_label, keep, keep_label
    if targets:
        uf.attach(drop, keep, multiply(inverse(drop_label), keep_label))
    else:
        uf.attach(drop, keep, multiply(drop_label, inverse(keep_label)))


def fold(generators: Sequence[Sequence[int]], n: Optional[int] = None) -> Tuple[Automaton, FreeBasisData]:
    """
    Üreteç kelimelerinden Stallings otomatı

    Args:
        generators: Kelime listesi (ε üreteçler yok sayılır ama sembol indeksini korur)
        n: Ortam rankı (None = harflerden çıkarılır)

    Returns:
        (Automaton, FreeBasisData): generator_expressions g_1..g_p üzerindedir
    """
    if n is None:
        n = max((abs(a) for w in generators for a in w), default=0)
    edges = []
    next_state = 1
    for i, w in enumerate(generators, start=1):
        if not w:
            continue
        states = [0]
        for _ in range(len(w) - 1):
            states.append(next_state)
            next_state += 1
        states.append(0)
        for pos, letter in enumerate(w):
            label = (i,) if pos == len(w) - 1 else EMPTY
            s, t = states[pos], states[pos + 1]
            if letter > 0:
                edges.append((s, letter, t, label))
            else:
                edges.append((t, -letter, s, inverse(label)))

    uf = _OffsetUnionFind(next_state)
    merges = 0
    while True:
        out: Dict[Tuple[int, int], Tuple[int, Word]] = {}
        inn: Dict[Tuple[int, int], Tuple[int, Word]] = {}
        merged = False
        for s, a, t, label in edges:
            rs, os_ = uf.find(s)
            rt, ot = uf.find(t)
            eff = multiply(inverse(os_), label, ot)
            hit = out.get((rs, a))
            if hit is not None:
                if hit[0] == rt:
                    continue
                _attach_keeping_base(uf, hit[0], hit[1], rt, eff, targets=True)
                merged = True
                break
            hit = inn.get((rt, a))
            if hit is not None and hit[0] != rs:
                _attach_keeping_base(uf, hit[0], hit[1], rs, eff, targets=False)
                merged = True
                break
            out[(rs, a)] = (rt, eff)
            inn[(rt, a)] = (rs, eff)
        if not merged:
            break
        merges += 1

    folded = [(s, a, t, label) for (s, a), (t, label) in out.items()] if edges else []
    logger.debug("katlama: %d durum, %d birleştirme, %d kenar", next_state, merges, len(folded))
    return _canonicalize(n, folded, len(generators))


def _core(edges):
    """Base dışındaki derecesi <= 1 durumları tekrar tekrar budar"""
    degree: Dict[int, int] = {0: 0}
    incident: Dict[int, List[int]] = {0: []}
    for idx, (s, _a, t, _l) in enumerate(edges):
        for v in (s, t):
            degree[v] = degree.get(v, 0) + 1
            incident.setdefault(v, []).append(idx)
    alive = [True] * len(edges)
    stack = [v for v, d in degree.items() if v != 0 and d <= 1]
    removed = set()
    while stack:
        v = stack.pop()
        if v in removed:
            continue
        removed.add(v)
        for idx in incident[v]:
            if not alive[idx]:
                continue
            alive[idx] = False
            s, _a, t, _l = edges[idx]
            other = t if s == v else s
            degree[other] -= 1
            if other != 0 and other not in removed and degree[other] <= 1:
                stack.append(other)
    return [e for e, keep in zip(edges, alive) if keep]


def _canonicalize(n, edges, num_generators, labelled=True):
    """Çekirdek + base'den BFS ile yeniden numaralama + ağaç tabanı"""
    edges = _core(edges)
    adjacency: Dict[int, List[Tuple[int, int, int, int]]] = {0: []}
    for idx, (s, a, t, _l) in enumerate(edges):
        adjacency.setdefault(s, []).append((a, 0, t, idx))
        adjacency.setdefault(t, []).append((a, 1, s, idx))

    new_id = {0: 0}
    paths: List[Word] = [EMPTY]
    labels: List[Word] = [EMPTY]
    tree = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        here = new_id[v]
        for a, sign, other, idx in sorted(adjacency[v]):
            if other in new_id:
                continue
            label = edges[idx][3] if labelled else EMPTY
            new_id[other] = len(paths)
            if sign == 0:
                paths.append(paths[here] + (a,))
                labels.append(multiply(labels[here], label))
            else:
                paths.append(paths[here] + (-a,))
                labels.append(multiply(labels[here], inverse(label)))
            tree.add(idx)
            queue.append(other)

    renamed = sorted((new_id[s], a, new_id[t], idx) for idx, (s, a, t, _l) in enumerate(edges))
    basis, expressions, symbols = [], [], {}
    for s, a, t, idx in renamed:
        if idx in tree:
            continue
        symbols[(s, a, t)] = len(basis) + 1
        basis.append(multiply(paths[s], (a,), inverse(paths[t])))
        if labelled:
            expressions.append(multiply(labels[s], edges[idx][3], inverse(labels[t])))

    automaton = Automaton(n, len(paths), tuple((s, a, t) for s, a, t, _ in renamed))
    data = FreeBasisData(
        basis_words=tuple(basis),
        tree_paths=tuple(paths),
        generator_expressions=tuple(expressions) if labelled else None,
        num_generators=num_generators,
        edge_symbols=symbols,
    )
    return automaton, data


def spanning_basis(A: Automaton) -> FreeBasisData:
    """Çekirdek bir otomatın kanonik serbest tabanı"""
    _, data = _canonicalize(A.n, [(s, a, t, EMPTY) for s, a, t in A.edges], 0, labelled=False)
    return data


# ============= YENİDEN YAZMA =============

def rewrite(data: FreeBasisData, A: Automaton, w: Sequence[int]) -> Optional[Word]:
    """w'yu taban sembolleri cinsinden yazar; üye değilse None"""
    state = A.base
    out = []
    for letter in w:
        nxt = A.step(state, letter)
        if nxt is None:
            return None
        key = (state, letter, nxt) if letter > 0 else (nxt, -letter, state)
        j = data.edge_symbols.get(key)
        if j is not None:
            out.append(j if letter > 0 else -j)
        state = nxt
    if state != A.base:
        return None
    return multiply(out)


def express(data: FreeBasisData, A: Automaton, w: Sequence[int]) -> Optional[Word]:
    """w'nun girdi üreteçleri cinsinden ifadesi; üye değilse None"""
    expr = rewrite(data, A, w)
    if expr is None:
        return None
    if data.generator_expressions is None:
        return expr
    return substitute(expr, data.generator_expressions)


# ============= GERİ ÇEKME =============

def _pullback_pair(A: Automaton, B: Automaton) -> Automaton:
    n = max(A.n, B.n)
    index = {(A.base, B.base): 0}
    queue = deque([(A.base, B.base)])
    edges = []
    while queue:
        p, q = queue.popleft()
        src = index[(p, q)]
        for a in range(1, n + 1):
            for letter in (a, -a):
                pa, qb = A.step(p, letter), B.step(q, letter)
                if pa is None or qb is None:
                    continue
                if (pa, qb) not in index:
                    index[(pa, qb)] = len(index)
                    queue.append((pa, qb))
                if letter > 0:
                    edges.append((src, a, index[(pa, qb)], EMPTY))
    automaton, _ = _canonicalize(n, edges, 0, labelled=False)
    return automaton


def multi_pullback(automata: Sequence[Automaton]) -> Automaton:
    """Kesişim otomatı (yalnız base bileşeni tutulur)"""
    if not automata:
        raise ValueError("en az bir otomat gerekli")
    result = automata[0]
    for other in automata[1:]:
        result = _pullback_pair(result, other)
        logger.debug("geri çekme: %d durum, rank %d", result.num_states, result.rank)
    return result


# ============= SCHREIER GRAFI =============

@dataclass(frozen=True)
class SchreierGraph:
    reps: Tuple[Word, ...]
    table: Tuple[Tuple[int, ...], ...]  # table[c][j-1] = c·v_j
    basis: Tuple[Word, ...]

    @property
    def index(self) -> int:
        return len(self.reps)


def schreier_basis(ambient_basis: Sequence[Sequence[int]],
                   subgroup_test: Callable[[Word], bool],
                   cap: Optional[int] = None,
                   coset_key: Optional[Callable[[Word], Hashable]] = None) -> SchreierGraph:
    """
    Sonlu indeksli normal alt grubun koset grafı ve maksimal ağaç tabanı

    Args:
        ambient_basis: v_1..v_r (yalnız r kullanılır; kelimeler v-sembolleri üzerindedir)
        subgroup_test: v-sembolleri üzerindeki bir kelime alt grupta mı?
        cap: Koset sınırı (None = coset_key varsa STALLINGS_CONFIG['coset_cap'],
             yoksa STALLINGS_CONFIG['scan_coset_cap'])
        coset_key: Aynı kosetteki kelimelere aynı anahtarı veren fonksiyon (O(1) arama).
            Verilmezse arama temsilci sayısında doğrusaldır, toplam maliyet karesel olur.

    Raises:
        IndexCapExceeded: koset sayısı sınırı aştı
    """
    r = len(ambient_basis)
    if cap is None:
        cap = STALLINGS_CONFIG['coset_cap' if coset_key is not None else 'scan_coset_cap']
    order = [s * j for j in range(1, r + 1) for s in (1, -1)]

    reps: List[Word] = [EMPTY]
    table: List[Dict[int, int]] = [{}]
    keys: Dict[Hashable, int] = {}
    if coset_key is not None:
        keys[coset_key(EMPTY)] = 0

    def locate(w: Word) -> Optional[int]:
        if coset_key is not None:
            return keys.get(coset_key(w))
        for idx, rep in enumerate(reps):
            if subgroup_test(multiply(w, inverse(rep))):
                return idx
        return None

    tree = set()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for letter in order:
            w = multiply(reps[c], (letter,))
            d = locate(w)
            if d is None:
                d = len(reps)
                if d >= cap:
                    raise IndexCapExceeded(f"koset sayısı {cap} sınırını aştı", cap=cap)
                reps.append(w)
                table.append({})
                if coset_key is not None:
                    keys[coset_key(w)] = d
                tree.add((c, letter, d) if letter > 0 else (d, -letter, c))
                queue.append(d)
            if letter > 0:
                table[c][letter] = d
            else:
                table[d][-letter] = c

    basis = []
    for c in range(len(reps)):
        for j in range(1, r + 1):
            d = table[c][j]
            if (c, j, d) not in tree:
                basis.append(multiply(reps[c], (j,), inverse(reps[d])))
    logger.debug("schreier: indeks %d, taban %d", len(reps), len(basis))
    return SchreierGraph(
        reps=tuple(reps),
        table=tuple(tuple(row[j] for j in range(1, r + 1)) for row in table),
        basis=tuple(basis),
    )


def describe(A: Automaton) -> str:
    """Kısa metin özeti"""
    arrows = ", ".join(f"{s}-{format_word((a,))}->{t}" for s, a, t in A.edges)
    return f"{A.num_states} durum, rank {A.rank}: {arrows or 'yok'}"
