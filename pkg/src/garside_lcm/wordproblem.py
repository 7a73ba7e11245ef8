"""Word problem, divisors and gcds for homogeneous presentations.

In a homogeneous presentation every relation preserves length, so the
≡-class of a word is a finite set of words of the same length and can be
enumerated by breadth-first search over one-step derivations.  Everything
here is built on that enumeration.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import AmbiguousGcd, NotHomogeneous
from .presentation import Presentation, is_homogeneous
from .words import Word

DEFAULT_CACHE_WORDS = 2_000_000


@dataclass(frozen=True)
class EquivalenceClass:
    representative: Word
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __contains__(self, word):
        return tuple(word) in self.members


class ElementSet(frozenset):
    """A set of monoid elements, each stored as its canonical word."""

    def sorted(self) -> list[Word]:
        return sorted(self, key=lambda w: (len(w), w))


class WordProblem:
    """Class enumeration and divisibility for one homogeneous presentation.

    Classes are memoized; once more than ``cache_words`` words are held the
    memo is dropped and rebuilt on demand.
    """

    def __init__(self, presentation: Presentation, cache_words: int = DEFAULT_CACHE_WORDS):
        if not is_homogeneous(presentation):
            label = f" {presentation.name}" if presentation.name else ""
            raise NotHomogeneous(f"presentation{label} is not homogeneous")
        self.presentation = presentation
        self.cache_words = cache_words
        rules: dict[int, dict[Word, list[Word]]] = {}
        for rel in presentation.relations:
            if rel.lhs == rel.rhs:
                continue
            by_len = rules.setdefault(len(rel.lhs), {})
            by_len.setdefault(rel.lhs, []).append(rel.rhs)
            by_len.setdefault(rel.rhs, []).append(rel.lhs)
        self._rules = sorted(rules.items())
        self._classes: dict[Word, frozenset] = {}
        self._canon: dict[Word, Word] = {}
        self._multiples: dict[Word, list[frozenset]] = {}

    # -- classes -----------------------------------------------------------

    def neighbours(self, w: Word) -> Iterator[Word]:
        """Words derived from ``w`` in one step."""
        n = len(w)
        for length, table in self._rules:
            for i in range(n - length + 1):
                repl = table.get(w[i:i + length])
                if repl:
                    head, tail = w[:i], w[i + length:]
                    for r in repl:
                        yield head + r + tail

    def _members(self, w: Word) -> frozenset:
        w = tuple(w)
        cached = self._classes.get(w)
        if cached is not None:
            return cached
        seen = {w}
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for y in self.neighbours(x):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        members = frozenset(seen)
        if len(self._classes) + len(members) > self.cache_words:
            self._classes.clear()
            self._canon.clear()
        canon = min(members)
        for m in members:
            self._classes[m] = members
            self._canon[m] = canon
        return members

    def equivalence_class(self, w: Word) -> EquivalenceClass:
        members = self._members(w)
        return EquivalenceClass(min(members), members)

    def canonical(self, w: Word) -> Word:
        """Lexicographically least word of the class (alphabet order)."""
        w = tuple(w)
        c = self._canon.get(w)
        if c is None:
            self._members(w)
            c = self._canon.get(w)
            if c is None:  # cache was just flushed
                c = min(self._members(w))
        return c

    def words_equal(self, u: Word, v: Word) -> bool:
        u, v = tuple(u), tuple(v)
        if len(u) != len(v):
            return False
        return u == v or self.canonical(u) == self.canonical(v)

    # -- divisibility --------------------------------------------------------

    def left_divides(self, u: Word, m: Word) -> bool:
        # prefixes of a fixed length over a class form a union of classes
        u = tuple(u)
        k = len(u)
        if k > len(m):
            return False
        return any(x[:k] == u for x in self._members(m))

    def right_divides(self, u: Word, m: Word) -> bool:
        u = tuple(u)
        k = len(u)
        if k > len(m):
            return False
        if k == 0:
            return True
        return any(x[-k:] == u for x in self._members(m))

    def left_divisors(self, w: Word) -> ElementSet:
        prefixes = {x[:k] for x in self._members(w) for k in range(len(w) + 1)}
        return ElementSet(self.canonical(p) for p in prefixes)

    def right_divisors(self, w: Word) -> ElementSet:
        n = len(w)
        suffixes = {x[k:] for x in self._members(w) for k in range(n + 1)}
        return ElementSet(self.canonical(s) for s in suffixes)

    def left_gcd(self, u: Word, v: Word) -> Word:
        """Greatest common left-divisor, as a canonical word.

        Only meaningful when the monoid has left-gcds (for example when
        right-reversing is certified complete); otherwise two incomparable
        maximal common divisors may appear and :class:`AmbiguousGcd` is raised.
        """
        common = self.left_divisors(u) & self.left_divisors(v)
        maximal = [
            c for c in common
            if not any(len(d) > len(c) and self.left_divides(c, d) for d in common)
        ]
        if len(maximal) != 1:
            raise AmbiguousGcd(sorted(maximal))
        return maximal[0]

    # -- brute-force common multiples ----------------------------------------

    def right_multiples(self, u: Word, extra: int) -> frozenset:
        """Canonical words of the elements u·x with |x| = ``extra``."""
        u = self.canonical(u)
        levels = self._multiples.get(u)
        if levels is None:
            levels = self._multiples[u] = [frozenset([u])]
        letters = range(self.presentation.rank)
        while len(levels) <= extra:
            prev = levels[-1]
            levels.append(frozenset(self.canonical(m + (s,)) for m in prev for s in letters))
        return levels[extra]

    def oracle_common_multiple(self, u: Word, v: Word, max_len: int) -> Word | None:
        """Shortest common right-multiple of ``u`` and ``v`` of length at most
        ``max_len``, found by exhaustive search; None when there is none.

        The elements of length n left-divisible by ``u`` are the level
        n - |u| right-multiples of ``u``, so common multiples of length n are
        the intersection of the two levels.
        """
        u, v = tuple(u), tuple(v)
        for length in range(max(len(u), len(v)), max_len + 1):
            common = self.right_multiples(u, length - len(u)) & self.right_multiples(v, length - len(v))
            if common:
                return min(common)
        return None

    def enumerate_elements(self, length: int) -> frozenset:
        """Canonical words of every element of the given length."""
        words = itertools.product(range(self.presentation.rank), repeat=length)
        return frozenset(self.canonical(w) for w in words)


@functools.lru_cache(maxsize=64)
def word_problem(presentation: Presentation) -> WordProblem:
    """Shared :class:`WordProblem` for ``presentation``."""
    return WordProblem(presentation)


def equivalence_class(w: Word, p: Presentation) -> EquivalenceClass:
    return word_problem(p).equivalence_class(w)


def words_equal(u: Word, v: Word, p: Presentation) -> bool:
    return word_problem(p).words_equal(u, v)


def canonical(w: Word, p: Presentation) -> Word:
    return word_problem(p).canonical(w)


def right_divisors(w: Word, p: Presentation) -> ElementSet:
    return word_problem(p).right_divisors(w)


def left_divisors(w: Word, p: Presentation) -> ElementSet:
    return word_problem(p).left_divisors(w)


def left_gcd(u: Word, v: Word, p: Presentation) -> Word:
    return word_problem(p).left_gcd(u, v)


def oracle_common_multiple(u: Word, v: Word, p: Presentation, max_len: int) -> Word | None:
    return word_problem(p).oracle_common_multiple(u, v, max_len)


def element_set(words: Iterable[Word], p: Presentation) -> ElementSet:
    wp = word_problem(p)
    return ElementSet(wp.canonical(w) for w in words)
