"""Quick invariant suites behind ``univoq check``."""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .classify import classify_base, is_univoque_sequence
from .constants import komornik_loreti, named_base, thue_morse
from .enumeration import build_automaton, diff_prefixes, survivors
from .exact import rational_base
from .words import EPWord, complement, lex_compare

Result = Tuple[str, bool, str]


def _words() -> List[Result]:
    out = []
    samples = [EPWord.parse(s) for s in ("(10)", "1(10)", "11(0)", "(110)", "0(011)", "(1)")]
    inv = all(w.complement(1).complement(1) == w for w in samples)
    out.append(("complement is an involution", inv, ""))
    total = all(sorted([lex_compare(a, b), lex_compare(b, a)]) in ([-1, 1], [0, 0])
                for a, b in itertools.product(samples, repeat=2))
    out.append(("lex order antisymmetric", total, ""))
    return out


def _classify() -> List[Result]:
    out = []
    expect = {"G": (True, False, False), "q_star": (True, True, False), "q_1": (True, True, True)}
    for name, triple in expect.items():
        got = classify_base(named_base(name)).triple
        out.append((f"classify {name}", got == triple, str(got)))
    got = classify_base(rational_base(Fraction(3, 2))).triple
    out.append(("classify 3/2", got == (False, False, False), str(got)))
    return out


def _enumerate() -> List[Result]:
    out = []
    bases = [rational_base(Fraction(p, q)) for p, q in ((3, 2), (8, 5), (17, 10))]
    nested = all(set(survivors(a, 10)) <= set(survivors(b, 10)) for a, b in zip(bases, bases[1:]))
    out.append(("survivors nested in q", nested, ""))
    empty = diff_prefixes(bases[0], bases[1], 10) == []
    out.append(("no new survivors without V element in [3/2, 8/5)", empty, ""))
    g = named_base("G")
    aut = build_automaton(g)
    sound = True
    for w in aut.words(8):
        if is_univoque_sequence(w, g).is_false:
            sound = False
    out.append(("survivors of G pass the prefix test", sound, ""))
    return out


def _constants() -> List[Result]:
    out = []
    tau = thue_morse(64)
    rec = all(tau[2**n - 1] == 1 and all(tau[2**n + i - 1] == 1 - tau[i - 1] for i in range(1, 2**n))
              for n in range(6))
    out.append(("thue-morse recursion", rec, ""))
    a, b = komornik_loreti(Fraction(1, 100)), komornik_loreti(Fraction(1, 10**6))
    out.append(("komornik-loreti enclosures nested", a.lo <= b.lo and b.hi <= a.hi, str(b)))
    qs = [named_base("q_n", n) for n in range(1, 5)] + [named_base("q_star")]
    out.append(("q_n increase to q*", all(x < y for x, y in zip(qs, qs[1:])), ""))
    return out


SUITES: Dict[str, Callable[[], List[Result]]] = {
    "words": _words,
    "classify": _classify,
    "enumerate": _enumerate,
    "constants": _constants,
}


def run_checks(suite: str = "all") -> List[Result]:
    names = list(SUITES) if suite == "all" else [suite]
    results: List[Result] = []
    for name in names:
        results.extend(SUITES[name]())
    return results
