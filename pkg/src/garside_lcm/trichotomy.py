"""Classification of pairs of positive words, and right-lcms on top of it.

For a pair (u, v) the reversing of u'·v either ends on a positive-negative
word (the complements are defined), gets stuck on a letter pair with no
complement (failing), or runs forever.  In a monoid with complete
right-reversing and a finite Garside family, running forever always comes
from a pair that reappears inside its own reversing, so it can be detected.

The classifier decomposes the reversing of (s·u2, t·v2) into three
sub-reversings, each of a pair that appears as a factor of the word being
reversed:

* the left pair (u2, θ(s, t)),
* the right pair (θ(t, s), v2),
* once both are complete, the middle pair formed by the complement of u2
  and the positive part of the right result.

Pairs currently being classified sit on a stack; meeting one of them again
means it is a strict reduction factor of itself, hence periodic, and every
pair on the way is eventually periodic.  Results are memoized by exact
words.
"""

from __future__ import annotations

import functools
import types
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

from .errors import ClassificationExhausted
from .presentation import ComplementTable, Presentation, derive_complement_table
from .reversing import Irreducible, reverse, reverse_step
from .words import Word, fraction, split_positive_negative

PairKey = tuple  # (u, v), compared as exact words

LEFT, RIGHT, MIDDLE = "left", "right", "middle"


@dataclass(frozen=True)
class Complement:
    """u'·v reverses to v_prime·u_prime' in ``steps`` steps."""

    u_prime: Word
    v_prime: Word
    steps: int = 0


@dataclass(frozen=True)
class Failing:
    """The pair reduces to the letter pair (s, t), whose complement is undefined.

    ``path`` is a linked list ``(edge, rest)`` of edges ``(kind, offset,
    child_key)`` from this pair down to the pair whose head letters failed.
    """

    s: int
    t: int
    path: tuple | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class EventuallyPeriodic:
    """The pair reduces to the periodic pair ``periodic``."""

    periodic: PairKey
    path: tuple | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Exhausted:
    reason: str


PairClass = Union[Complement, Failing, EventuallyPeriodic, Exhausted]


@dataclass(frozen=True)
class ClassifierLimits:
    """Caps on the work of one session; ``None`` means unbounded."""

    max_pairs: int | None = None
    max_depth: int | None = None

    def __post_init__(self):
        for name in ("max_pairs", "max_depth"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class ClassifierStats:
    pairs_visited: int = 0
    memo_hits: int = 0
    max_depth: int = 0
    periodic_found: int = 0


def iter_path(path):
    while path is not None:
        edge, path = path
        yield edge


class ClassifierSession:
    """Memo, in-progress stack and statistics for a run of classifications.

    A session is single-threaded.  ``seed`` may hold finished results from
    another session; it is read, never written.
    """

    def __init__(
        self,
        table: ComplementTable,
        limits: ClassifierLimits | None = None,
        *,
        memoize: bool = True,
        seed: dict | None = None,
    ):
        self.table = table
        self.limits = limits or ClassifierLimits()
        self.memoize = memoize
        self.memo: dict[PairKey, PairClass] = {}
        self.seed = seed or {}
        self.cycles: dict[PairKey, tuple] = {}
        self.in_progress: list[PairKey] = []
        self._on_stack: set[PairKey] = set()
        self.stats = ClassifierStats()

    # -- driver ----------------------------------------------------------

    def classify(self, u: Word, v: Word) -> PairClass:
        """Classify ``(u, v)``; see the module docstring."""
        if self.in_progress:
            raise RuntimeError("ClassifierSession.classify is not reentrant")
        first = self._enter(tuple(u), tuple(v))
        if not isinstance(first, types.GeneratorType):
            return first
        frames = [first]
        value = None
        try:
            while frames:
                try:
                    request = frames[-1].send(value)
                except StopIteration as stop:
                    frames.pop()
                    value = stop.value
                    continue
                child = self._enter(*request)
                if isinstance(child, types.GeneratorType):
                    frames.append(child)
                    value = None
                else:
                    value = child
        finally:
            # an exception mid-run must not leave stale in-progress keys
            for frame in frames:
                frame.close()
            self.in_progress.clear()
            self._on_stack.clear()
        return value

    def _enter(self, u: Word, v: Word):
        if not u:
            return Complement((), v, 0)
        if not v:
            return Complement(u, (), 0)
        key = (u, v)
        found = self.memo.get(key)
        if found is None:
            found = self.seed.get(key)
        if found is not None:
            self.stats.memo_hits += 1
            return found
        if key in self._on_stack:
            return EventuallyPeriodic(key, None)
        limits = self.limits
        if limits.max_pairs is not None and self.stats.pairs_visited >= limits.max_pairs:
            return Exhausted(f"more than {limits.max_pairs} pairs visited")
        if limits.max_depth is not None and len(self.in_progress) >= limits.max_depth:
            return Exhausted(f"recursion deeper than {limits.max_depth}")
        self.stats.pairs_visited += 1
        s, t = u[0], v[0]
        st = self.table.rows[s][t]
        if st is None:
            return self._store(key, Failing(s, t, None))
        self.in_progress.append(key)
        self._on_stack.add(key)
        if len(self.in_progress) > self.stats.max_depth:
            self.stats.max_depth = len(self.in_progress)
        return self._frame(key, st, self.table.rows[t][s])

    def _store(self, key, result):
        if self.memoize and not isinstance(result, Exhausted):
            self.memo[key] = result
        return result

    def _frame(self, key, st, ts):
        u, v = key
        try:
            result = yield from self._decompose(key, u, v, st, ts)
        finally:
            self.in_progress.pop()
            self._on_stack.discard(key)
        if isinstance(result, EventuallyPeriodic) and result.periodic == key:
            # the cycle closed on this very pair
            self.cycles[key] = result.path
            self.stats.periodic_found += 1
            result = EventuallyPeriodic(key, None)
        return self._store(key, result)

    def _decompose(self, key, u, v, st, ts):
        left = yield (u[1:], st)
        if isinstance(left, Exhausted):
            return left
        left_edge = (LEFT, 1, (u[1:], st))
        if isinstance(left, Failing):
            return Failing(left.s, left.t, (left_edge, left.path))
        right = yield (ts, v[1:])
        right_edge = (RIGHT, 1, (ts, v[1:]))
        if isinstance(right, Exhausted):
            if isinstance(left, EventuallyPeriodic):
                return _via(left, left_edge)
            return right
        if isinstance(right, Failing):
            return Failing(right.s, right.t, (right_edge, right.path))
        if isinstance(left, EventuallyPeriodic):
            return _via(left, left_edge)
        if isinstance(right, EventuallyPeriodic):
            return _via(right, right_edge)
        mid_key = (left.u_prime, right.v_prime)
        middle = yield mid_key
        if isinstance(middle, Exhausted):
            return middle
        mid_edge = (MIDDLE, 1 + left.steps + right.steps, mid_key)
        if isinstance(middle, Failing):
            return Failing(middle.s, middle.t, (mid_edge, middle.path))
        if isinstance(middle, EventuallyPeriodic):
            return _via(middle, mid_edge)
        return Complement(
            right.u_prime + middle.u_prime,
            left.v_prime + middle.v_prime,
            1 + left.steps + right.steps + middle.steps,
        )

    # -- witnesses ---------------------------------------------------------

    def witness(self, u: Word, v: Word, result: PairClass) -> dict:
        """Explicit witness for a Failing or EventuallyPeriodic ``result``.

        Returns ``path`` (edges from (u, v) to the failing or periodic pair)
        and, for periodic results, ``cycle`` (edges from the periodic pair
        back to itself) with ``cycle_steps``, its length in reversing steps.
        """
        out = {"path": list(iter_path(result.path))}
        if isinstance(result, EventuallyPeriodic):
            cycle = list(iter_path(self.cycles[result.periodic]))
            out["cycle"] = cycle
            out["cycle_steps"] = sum(offset for _, offset, _ in cycle)
        return out


def _via(result, edge):
    return EventuallyPeriodic(result.periodic, (edge, result.path))


# -- replay -----------------------------------------------------------------


def replay_edges(u: Word, v: Word, edges, table: ComplementTable, budget=None):
    """Follow classifier edges with actual reversing steps.

    Starting from u'·v, each edge rewrites the current focus pair's head
    factor and moves the focus to the named sub-pair (fully reversing the
    left and right sub-pairs first for a middle edge).  Returns the final
    signed word, the number of steps, and the focus pair, whose signed word
    is a factor of the final word.
    """
    word = fraction(u, v)
    start, mid, end = 0, len(u), len(u) + len(v)
    steps = 0
    for kind, _offset, _child in edges:
        fu = word[start:mid]
        fv = word[mid:end]
        if not fu or not fv:
            raise ValueError("edge from a pair with an empty side")
        s, t = -fu[-1] - 1, fv[0] - 1
        k1, k2 = len(table.rows[s][t]), len(table.rows[t][s])
        word = reverse_step(word, mid - 1, table)
        steps += 1
        end += k1 + k2 - 2
        mid -= 1
        if kind == LEFT:
            end = mid + k1
        elif kind == RIGHT:
            start, mid = mid + k1, mid + k1 + k2
        else:
            # reverse the left factor, then the right one, in place
            left_end = mid + k1
            out = reverse(word[start:left_end], table, budget)
            if not isinstance(out, Irreducible):
                raise ValueError("left sub-pair did not reverse to a positive-negative word")
            word = word[:start] + out.word + word[left_end:]
            steps += out.steps
            shift = len(out.word) - (left_end - start)
            left_end += shift
            end += shift
            p, u2p = split_positive_negative(out.word)
            right_start = left_end
            out = reverse(word[right_start:end], table, budget)
            if not isinstance(out, Irreducible):
                raise ValueError("right sub-pair did not reverse to a positive-negative word")
            word = word[:right_start] + out.word + word[end:]
            steps += out.steps
            q, _ = split_positive_negative(out.word)
            start = start + len(p)
            mid = right_start
            end = right_start + len(q)
            assert len(u2p) == mid - start
    return word, steps, _focus_pair(word, start, mid, end)


def _focus_pair(word, start, mid, end):
    neg = word[start:mid]
    pos = word[mid:end]
    return tuple(-x - 1 for x in reversed(neg)), tuple(x - 1 for x in pos)


# -- convenience API ----------------------------------------------------------


def classify(
    u: Word,
    v: Word,
    table: ComplementTable,
    session: ClassifierSession | None = None,
    limits: ClassifierLimits | None = None,
) -> PairClass:
    if session is None:
        session = ClassifierSession(table, limits)
    return session.classify(u, v)


class Ternary(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@functools.lru_cache(maxsize=64)
def complement_table(p: Presentation) -> ComplementTable:
    return derive_complement_table(p)


def right_lcm(
    u: Word,
    v: Word,
    p: Presentation,
    limits: ClassifierLimits | None = None,
    session: ClassifierSession | None = None,
) -> Word | None:
    """Right-lcm of ``u`` and ``v`` as the word u·θ*(u, v), or None when
    they have no common right-multiple.

    The negative answer is only sound when right-reversing is complete for
    ``p`` (see :mod:`garside_lcm.completeness`).  Raises
    :class:`ClassificationExhausted` when the limits are hit.
    """
    result = classify(u, v, complement_table(p), session, limits)
    if isinstance(result, Complement):
        return tuple(u) + result.v_prime
    if isinstance(result, Exhausted):
        raise ClassificationExhausted(result)
    return None


def has_common_right_multiple(
    u: Word,
    v: Word,
    p: Presentation,
    limits: ClassifierLimits | None = None,
    certified: bool | None = None,
    session: ClassifierSession | None = None,
) -> Ternary:
    """YES / NO / UNKNOWN.  ``certified=None`` certifies completeness on demand."""
    result = classify(u, v, complement_table(p), session, limits)
    if isinstance(result, Complement):
        return Ternary.YES
    if isinstance(result, Exhausted):
        return Ternary.UNKNOWN
    if certified is None:
        from .completeness import certify_cached

        certified = certify_cached(p).complete
    return Ternary.NO if certified else Ternary.UNKNOWN
