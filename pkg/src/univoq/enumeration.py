"""Survivor automata: enumeration and counting of univoque prefixes.

The automaton reads digits and keeps, for each of the two univoqueness
conditions, the set of comparisons against alpha that are still tied.  A
comparison is a position ("node") in alpha; when alpha is eventually
periodic the nodes form a lasso and the state space is finite.

A univoque sequence must also never stay tied with alpha forever (the
conditions are strict).  In exact mode this is tracked with a breakpoint
set: the comparisons alive at the last breakpoint are watched and a new
breakpoint happens once all of them have resolved.  A word is univoque iff
its run passes infinitely many breakpoints.

Without an eventually periodic alpha only a prefix of depth D is known;
comparisons that reach D are dropped, so the language over-approximates.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .classify import (DEFAULT_DEPTH, _tail_condition, base_in_V, is_alpha_admissible,
                       is_univoque_sequence, is_V_sequence)
from .exact import AlgebraicBase, base_from_word
from .expansion import alpha_of, greedy_digits, value_of
from .words import EPWord, Word, complement, format_word

EXACT = "exact"
PREFIX = "prefix"

U = "U"          # prefixes of univoque sequences
V = "V"          # prefixes of sequences satisfying the non-strict conditions
V_MINUS_U = "V-U"
ALIVE = "alive"  # no violation seen yet, untrimmed


class CeilingMismatch(ValueError):
    pass


class NotOrdered(ValueError):
    pass


class AlphaNotEP(ValueError):
    pass


class NotFound(RuntimeError):
    pass


class IntegerBase(ValueError):
    pass


State = Tuple[FrozenSet[int], FrozenSet[int], FrozenSet[Tuple[str, int]], bool]
_EMPTY: FrozenSet = frozenset()


class SurvivorAutomaton:
    """Deterministic automaton over ``{0..m}`` for the two univoqueness conditions.

    ``alpha`` is an EPWord (exact mode) or a finite prefix (prefix mode).
    """

    def __init__(self, alpha, m: int):
        self.m = m
        if isinstance(alpha, EPWord):
            self.mode = EXACT
            digits = alpha.pre + alpha.per
            succ: List[Optional[int]] = list(range(1, len(digits))) + [len(alpha.pre)]
        else:
            self.mode = PREFIX
            digits = tuple(alpha)
            if not digits:
                raise ValueError("alpha prefix must be nonempty")
            succ = list(range(1, len(digits))) + [None]
        self.alpha = alpha
        self.depth = len(digits)
        self._digits = digits
        self._succ = succ
        self.states: List[State] = []
        self.trans: List[List[Optional[int]]] = []
        self._build()
        self._regions: Dict[str, Set[int]] = {}

    # -- construction -------------------------------------------------------
    def _advance(self, threads, d):
        out, moved = set(), {}
        for p in threads:
            a = self._digits[p]
            if d > a:
                return None, None
            if d == a:
                s = self._succ[p]
                if s is not None:
                    out.add(s)
                    moved[p] = s
        return out, moved

    def _step(self, state: State, d: int) -> Optional[State]:
        sa, sb, watched, _ = state
        m = self.m
        na, ma = self._advance(sa, d)
        if na is None:
            return None
        nb, mb = self._advance(sb, m - d)
        if nb is None:
            return None
        if d < m:
            na.add(0)
        if d > 0:
            nb.add(0)
        if self.mode == PREFIX:
            return frozenset(na), frozenset(nb), _EMPTY, True
        nw = {(tag, (ma if tag == "A" else mb)[p]) for tag, p in watched
              if p in (ma if tag == "A" else mb)}
        breakpoint = not nw
        if breakpoint:
            nw = {("A", p) for p in na} | {("B", p) for p in nb}
        return frozenset(na), frozenset(nb), frozenset(nw), breakpoint

    def _build(self) -> None:
        start: State = (_EMPTY, _EMPTY, _EMPTY, self.mode == PREFIX)
        index = {start: 0}
        self.states.append(start)
        queue = deque([start])
        while queue:
            st = queue.popleft()
            row = []
            for d in range(self.m + 1):
                nxt = self._step(st, d)
                if nxt is None:
                    row.append(None)
                    continue
                if nxt not in index:
                    index[nxt] = len(self.states)
                    self.states.append(nxt)
                    queue.append(nxt)
                row.append(index[nxt])
            self.trans.append(row)

    # -- analysis -----------------------------------------------------------
    def _graph(self, keep=None) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.states)) if keep is None else keep)
        for i, row in enumerate(self.trans):
            if keep is not None and i not in keep:
                continue
            for j in row:
                if j is not None and (keep is None or j in keep):
                    g.add_edge(i, j)
        return g

    @staticmethod
    def _cyclic(g: nx.DiGraph) -> List[Set[int]]:
        comps = []
        for comp in nx.strongly_connected_components(g):
            if len(comp) > 1 or any(g.has_edge(v, v) for v in comp):
                comps.append(comp)
        return comps

    def _coreach(self, targets: Set[int]) -> Set[int]:
        pred: Dict[int, List[int]] = {}
        for i, row in enumerate(self.trans):
            for j in row:
                if j is not None:
                    pred.setdefault(j, []).append(i)
        seen = set(targets)
        stack = list(targets)
        while stack:
            v = stack.pop()
            for u in pred.get(v, ()):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen

    def region(self, name: str = U) -> Set[int]:
        if name in self._regions:
            return self._regions[name]
        if name == ALIVE:
            res = set(range(len(self.states)))
        elif name == U:
            comps = self._cyclic(self._graph())
            if self.mode == EXACT:
                comps = [c for c in comps if any(self.states[v][3] for v in c)]
            res = self._coreach(set().union(*comps) if comps else set())
        elif self.mode != EXACT:
            raise AlphaNotEP(f"region {name!r} needs an eventually periodic alpha")
        elif name == V:
            comps = self._cyclic(self._graph())
            res = self._coreach(set().union(*comps) if comps else set())
        elif name == V_MINUS_U:
            keep = {i for i, st in enumerate(self.states) if not st[3]}
            comps = self._cyclic(self._graph(keep))
            res = self._coreach(set().union(*comps) if comps else set())
        else:
            raise ValueError(f"unknown region {name!r}")
        self._regions[name] = res
        return res

    # -- queries ------------------------------------------------------------
    def run(self, word: Sequence[int]) -> Optional[int]:
        s = 0
        for d in word:
            if not 0 <= d <= self.m:
                return None
            s = self.trans[s][d]
            if s is None:
                return None
        return s

    def alive(self, word: Sequence[int]) -> bool:
        return self.run(word) is not None

    def accepts(self, word: Sequence[int], region: str = U) -> bool:
        s = self.run(word)
        return s is not None and s in self.region(region)

    def count(self, n_max: int, region: str = U) -> List[int]:
        good = self.region(region)
        dp = {0: 1} if 0 in good else {}
        counts = [sum(dp.values())]
        for _ in range(n_max):
            nxt: Dict[int, int] = {}
            for s, c in dp.items():
                for t in self.trans[s]:
                    if t is not None and t in good:
                        nxt[t] = nxt.get(t, 0) + c
            dp = nxt
            counts.append(sum(dp.values()))
        return counts

    def words(self, n: int, region: str = U) -> List[Word]:
        """All accepted words of length n, in lexicographic order."""
        good = self.region(region)
        out: List[Word] = []
        if 0 not in good:
            return out

        def walk(s: int, prefix: List[int]):
            if len(prefix) == n:
                out.append(tuple(prefix))
                return
            for d, t in enumerate(self.trans[s]):
                if t is not None and t in good:
                    prefix.append(d)
                    walk(t, prefix)
                    prefix.pop()

        walk(0, [])
        return out

    def __len__(self) -> int:
        return len(self.states)


def _depth(depth: Optional[int]) -> int:
    return DEFAULT_DEPTH if depth is None else depth


@lru_cache(maxsize=128)
def build_automaton(q: AlgebraicBase, depth: Optional[int] = None) -> SurvivorAutomaton:
    """Exact automaton when alpha(q) is eventually periodic, else prefix mode at ``depth``."""
    a = alpha_of(q)
    return SurvivorAutomaton(a.exact_or_prefix(_depth(depth)), q.m)


def survivors(q: AlgebraicBase, n: int, depth: Optional[int] = None) -> List[Word]:
    return build_automaton(q, depth).words(n, U)


@dataclass(frozen=True)
class CountSeries:
    counts: Tuple[int, ...]
    mode: str

    @property
    def growth_estimate(self) -> Fraction:
        """Ratio of the last two counts."""
        return self.ratio(len(self.counts) - 1)

    def ratio(self, n: int) -> Fraction:
        return Fraction(self.counts[n], self.counts[n - 1])

    def to_json(self):
        return {"counts": list(self.counts), "mode": self.mode,
                "growth_estimate": str(self.growth_estimate)}

    def to_csv(self) -> str:
        lines = ["n,count"] + [f"{n},{c}" for n, c in enumerate(self.counts)]
        return "\n".join(lines) + "\n"


def count_univoque_prefixes(q: AlgebraicBase, n_max: int, depth: Optional[int] = None) -> CountSeries:
    """Number of length-n prefixes of univoque sequences for n = 0..n_max.

    Exact for eventually periodic alpha; otherwise an upper bound.
    """
    aut = build_automaton(q, depth)
    return CountSeries(tuple(aut.count(n_max, U)), aut.mode)


def _same_ceiling(q: AlgebraicBase, r: AlgebraicBase) -> None:
    if q.m != r.m:
        raise CeilingMismatch(f"ceil({q}) != ceil({r})")


def diff_prefixes(q: AlgebraicBase, r: AlgebraicBase, n: int,
                  depth: Optional[int] = None) -> List[Word]:
    """Length-n prefixes of univoque sequences in base r that are not such in base q."""
    _same_ceiling(q, r)
    if r < q:
        raise NotOrdered("need q <= r")
    if q == r:
        return []
    small = set(survivors(q, n, depth))
    return [w for w in survivors(r, n, depth) if w not in small]


def _exact_automaton(q: AlgebraicBase) -> SurvivorAutomaton:
    aut = build_automaton(q)
    if aut.mode != EXACT:
        raise AlphaNotEP(f"alpha({q}) is not known to be eventually periodic")
    return aut


def enumerate_Vq_minus_Uq(q: AlgebraicBase, n: int) -> List[EPWord]:
    """Members of V_q' minus U_q' with preperiod at most n.

    Each is a stem followed by alpha or by its complement; stems are pruned
    by the survivor automaton and every candidate is verified directly.
    """
    a = alpha_of(q)
    if a.word is None:
        if base_in_V(q).is_false:
            return []
        raise AlphaNotEP(f"alpha({q}) is not known to be eventually periodic")
    aut = _exact_automaton(q)
    tails = (a.word, a.word.complement(q.m))
    found: Set[EPWord] = set()
    stems: List[Tuple[int, ...]] = [()]
    for stem in _alive_stems(aut, n):
        for tail in tails:
            w = EPWord(stem + tail.pre, tail.per)
            if w in found:
                continue
            if is_V_sequence(w, q).is_true and is_univoque_sequence(w, q).is_false:
                found.add(w)
    return sorted(found)


def _alive_stems(aut: SurvivorAutomaton, n: int) -> Iterator[Word]:
    frontier = [((), 0)]
    for _ in range(n + 1):
        nxt = []
        for stem, s in frontier:
            yield stem
            for d, t in enumerate(aut.trans[s]):
                if t is not None:
                    nxt.append((stem + (d,), t))
        frontier = nxt


def tail_witness(w: Sequence[int], t: AlgebraicBase) -> Optional[EPWord]:
    """An element of V_t' minus U_t' ending in alpha(t) or its complement that starts with w."""
    a = alpha_of(t)
    if a.word is None:
        raise AlphaNotEP(f"alpha({t}) is not known to be eventually periodic")
    w = tuple(w)
    for tail in (a.word, a.word.complement(t.m)):
        for i in range(len(w), -1, -1):
            suffix = w[i:]
            if tail.prefix(len(suffix)) != suffix:
                continue
            cand = EPWord(w[:i] + tail.pre, tail.per)
            if is_V_sequence(cand, t).is_true and is_univoque_sequence(cand, t).is_false:
                return cand
    return None


def _word_in_V(w: EPWord) -> bool:
    m = w[0]
    return _tail_condition(w, w, m, lambda d: True, complemented=True, strict=False,
                           depth=0, reason="").is_true


def find_V_elements(q: AlgebraicBase, r: AlgebraicBase, max_period: int = 12,
                    max_preperiod: int = 0) -> List[Tuple[AlgebraicBase, EPWord]]:
    """Bounded, non-exhaustive search for bases of V in ``[q, r)``.

    Candidates are alpha-words with period at most ``max_period`` and
    preperiod at most ``max_preperiod``.  A candidate w is the alpha of some
    t, and by monotonicity of the value map t >= q iff the value of w in base
    q is >= 1 (t < r likewise).
    """
    _same_ceiling(q, r)
    m = q.m
    seen: Set[EPWord] = set()
    out = []
    for pre_len in range(max_preperiod + 1):
        for per_len in range(1, max_period + 1):
            for digits in itertools.product(range(m + 1), repeat=pre_len + per_len):
                if digits[0] != m:
                    continue
                w = EPWord(digits[:pre_len], digits[pre_len:])
                if w in seen or w.is_finite:
                    continue
                seen.add(w)
                if not _word_in_V(w) or not is_alpha_admissible(w).is_true:
                    continue
                if value_of(w, q) >= 1 and value_of(w, r) < 1:
                    out.append((base_from_word(w), w))
    out.sort(key=lambda bw: bw[1])
    return out


@dataclass
class DecompositionReport:
    n: int
    size_r: int
    size_q: int
    pieces: Dict[str, int]
    missing: List[Word] = field(default_factory=list)
    extra: List[Word] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra

    def to_json(self):
        return {"ok": self.ok, "n": self.n, "size_r": self.size_r, "size_q": self.size_q,
                "pieces": self.pieces,
                "missing": [format_word(w) for w in self.missing],
                "extra": [format_word(w) for w in self.extra]}


def decomposition_check(q: AlgebraicBase, r: AlgebraicBase, v_bases: Sequence[AlgebraicBase],
                        n: int, depth: Optional[int] = None) -> DecompositionReport:
    """Compare, at length n, U_r' with U_q' joined with (V_t' minus U_t') over t in v_bases."""
    _same_ceiling(q, r)
    for t in v_bases:
        _same_ceiling(q, t)
    ur = set(survivors(r, n, depth))
    uq = set(survivors(q, n, depth)) if q != r else set(ur)
    union = set(uq)
    pieces = {}
    for t in v_bases:
        part = set(_exact_automaton(t).words(n, V_MINUS_U))
        pieces[t.descriptor()] = len(part)
        union |= part
    return DecompositionReport(n, len(ur), len(uq), pieces,
                               missing=sorted(ur - union), extra=sorted(union - ur))


def find_base_with_beta_prefix(q: AlgebraicBase, n: int, budget: int = 32) -> AlgebraicBase:
    """Some r > q whose greedy expansion of 1 starts like that of q for n digits.

    Candidates are the bases with alpha equal to ``(beta_1..beta_j)^inf`` for
    j = n+1, ..., n+budget; each one is validated before it is returned.
    """
    if q.is_integer:
        raise IntegerBase("q must be a non-integer")
    beta = greedy_digits(1, q, n + budget)
    target = beta[:n]
    for j in range(n + 1, n + budget + 1):
        w = EPWord((), beta[:j])
        if w.is_finite or not is_alpha_admissible(w).is_true:
            continue
        r = base_from_word(w)
        if r > q and greedy_digits(1, r, n) == target:
            return r
    raise NotFound(f"no base found for prefix {format_word(target)} within budget {budget}")


@dataclass
class GVReport:
    n: int
    checked: int
    samples: List[str]
    violations: List[Tuple[str, Word]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self):
        return {"ok": self.ok, "n": self.n, "checked": self.checked, "samples": self.samples,
                "violations": [[s, format_word(w)] for s, w in self.violations]}


def g_prime_equals_v_prime_check(q: AlgebraicBase, r_samples: Sequence[AlgebraicBase], n: int,
                                 depth: Optional[int] = None) -> GVReport:
    """Every length-n prefix of V_q' must survive in every larger base of the same ceiling."""
    for r in r_samples:
        _same_ceiling(q, r)
        if not q < r:
            raise NotOrdered(f"sample {r} is not above {q}")
    v_words = _exact_automaton(q).words(n, V)
    report = GVReport(n, len(v_words), [r.descriptor() for r in r_samples])
    for r in r_samples:
        aut = build_automaton(r, depth)
        for w in v_words:
            if not aut.accepts(w, U):
                report.violations.append((r.descriptor(), w))
    return report
