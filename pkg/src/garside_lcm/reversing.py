"""Right-reversing of signed words.

A factor s'·t (inverse of s followed by t) is replaced by θ(s, t)·θ(t, s)'
whenever θ(s, t) is defined; s'·s simply disappears.  The engine always
rewrites the leftmost reducible factor, which by confluence gives the same
irreducible word as any other strategy.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Union

from .errors import ComplementUndefined, NoNegativePositiveFactor
from .presentation import ComplementTable
from .words import (
    Alphabet,
    SignedWord,
    Word,
    fraction,
    negative,
    positive,
    split_positive_negative,
)

BUDGET_ENV = "GARSIDE_BUDGET"
_FALLBACK_BUDGET = 100_000


def default_budget() -> int | None:
    """Step budget from ``$GARSIDE_BUDGET`` (``unlimited`` or ``0`` for none)."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or not raw.strip():
        return _FALLBACK_BUDGET
    raw = raw.strip().lower()
    if raw in ("unlimited", "none", "0"):
        return None
    return int(raw)


@dataclass(frozen=True)
class Step:
    position: int
    s: int
    t: int
    replacement: SignedWord


@dataclass
class ReversingTrace:
    initial: SignedWord
    alphabet: Alphabet | None = None
    steps: list[Step] = field(default_factory=list)
    final: SignedWord | None = None

    def replay(self, table: ComplementTable) -> SignedWord:
        w = self.initial
        for st in self.steps:
            w = reverse_step(w, st.position, table)
        return w


@dataclass(frozen=True)
class Irreducible:
    word: SignedWord
    steps: int
    trace: ReversingTrace | None = None


@dataclass(frozen=True)
class Stuck:
    """No reducible factor remains, but s'·t with θ(s, t) undefined does."""

    word: SignedWord
    s: int
    t: int
    position: int
    steps: int
    trace: ReversingTrace | None = None


@dataclass(frozen=True)
class BudgetExhausted:
    word: SignedWord
    steps: int
    trace: ReversingTrace | None = None


ReversingOutcome = Union[Irreducible, Stuck, BudgetExhausted]


def reverse_step(w: SignedWord, pos: int, table: ComplementTable) -> SignedWord:
    """Reverse the factor at positions ``pos``, ``pos + 1`` of ``w``."""
    if not (0 <= pos < len(w) - 1 and w[pos] < 0 < w[pos + 1]):
        raise NoNegativePositiveFactor(pos)
    s, t = -w[pos] - 1, w[pos + 1] - 1
    return w[:pos] + _replacement(s, t, table) + w[pos + 2:]


def _replacement(s, t, table) -> SignedWord:
    if s == t:
        return ()
    st = table.rows[s][t]
    if st is None:
        raise ComplementUndefined(s, t)
    return positive(st) + negative(table.rows[t][s])


def _first_stuck(w):
    for i in range(len(w) - 1):
        if w[i] < 0 < w[i + 1]:
            return i
    return None


def reverse(
    w: SignedWord,
    table: ComplementTable,
    budget: int | None = _FALLBACK_BUDGET,
    *,
    strategy: str = "leftmost",
    record_trace: bool = False,
) -> ReversingOutcome:
    """Reverse ``w`` until irreducible, stuck, or ``budget`` steps are spent.

    ``budget=None`` means no limit.  ``strategy`` is ``"leftmost"`` or
    ``"rightmost"``; the latter exists to exercise confluence.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rows = table.rows
    trace = ReversingTrace(tuple(w), table.alphabet) if record_trace else None
    word = list(w)
    steps = 0
    start = 0
    stop = len(word) - 2
    while True:
        pos = None
        if strategy == "leftmost":
            # everything left of ``start`` is known to hold no reducible factor
            i = start
            n = len(word) - 1
            while i < n:
                a = word[i]
                if a < 0:
                    b = word[i + 1]
                    if b > 0 and (a + b == 0 or rows[-a - 1][b - 1] is not None):
                        pos = i
                        break
                i += 1
        else:
            # and everything right of ``stop``
            for i in range(min(stop, len(word) - 2), -1, -1):
                a, b = word[i], word[i + 1]
                if a < 0 < b and (a + b == 0 or rows[-a - 1][b - 1] is not None):
                    pos = i
                    break
        if pos is None:
            final = tuple(word)
            if trace is not None:
                trace.final = final
            k = _first_stuck(final)
            if k is None:
                return Irreducible(final, steps, trace)
            return Stuck(final, -final[k] - 1, final[k + 1] - 1, k, steps, trace)
        if budget is not None and steps >= budget:
            final = tuple(word)
            if trace is not None:
                trace.final = final
            return BudgetExhausted(final, steps, trace)
        s, t = -word[pos] - 1, word[pos + 1] - 1
        repl = _replacement(s, t, table)
        word[pos:pos + 2] = repl
        steps += 1
        if trace is not None:
            trace.steps.append(Step(pos, s, t, repl))
        start = max(pos - 1, 0)
        stop = pos + len(repl)


@dataclass(frozen=True)
class Defined:
    """ū·v reverses to v_prime·ū_prime' (so u·v_prime ≡ v·u_prime)."""

    u_prime: Word
    v_prime: Word
    steps: int


def extended_complement(
    u: Word, v: Word, table: ComplementTable, budget: int | None = _FALLBACK_BUDGET
) -> Defined | Stuck | BudgetExhausted:
    out = reverse(fraction(u, v), table, budget)
    if isinstance(out, Irreducible):
        split = split_positive_negative(out.word)
        # an irreducible word with no s'·t factor is always positive-negative
        assert split is not None
        v_prime, u_prime = split
        return Defined(u_prime, v_prime, out.steps)
    return out


# -- DOT export -------------------------------------------------------------


def _dot_label(alphabet, letter):
    return alphabet.names[letter] if alphabet is not None else str(letter)


def trace_graph(trace: ReversingTrace):
    """Replay ``trace`` as a reversing diagram.

    Returns ``(nodes, edges)``; edges are ``(src, dst, letter)`` with every
    letter drawn in its positive direction.  Nodes merged by s'·s deletions
    are identified.
    """
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    counter = 0

    def new_node():
        nonlocal counter
        parent[counter] = counter
        counter += 1
        return counter - 1

    edges = []
    path = [new_node()]
    for x in trace.initial:
        node = new_node()
        if x > 0:
            edges.append((path[-1], node, x - 1))
        else:
            edges.append((node, path[-1], -x - 1))
        path.append(node)

    for st in trace.steps:
        i = st.position
        a, b = path[i], path[i + 2]
        k = len(st.replacement)
        if k == 0:
            parent[find(b)] = find(a)
            path[i:i + 3] = [a]
            continue
        inner = [new_node() for _ in range(k - 1)]
        seq = [a] + inner + [b]
        for j, x in enumerate(st.replacement):
            if x > 0:
                edges.append((seq[j], seq[j + 1], x - 1))
            else:
                edges.append((seq[j + 1], seq[j], -x - 1))
        path[i:i + 3] = seq

    nodes = sorted({find(n) for n in parent})
    return nodes, [(find(p), find(q), x) for p, q, x in edges]


def export_trace_dot(trace: ReversingTrace, name: str = "reversing") -> str:
    nodes, edges = trace_graph(trace)
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=point];"]
    lines += [f"  n{n};" for n in nodes]
    for p, q, x in edges:
        lines.append(f'  n{p} -> n{q} [label="{_dot_label(trace.alphabet, x)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
