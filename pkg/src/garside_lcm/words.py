"""Alphabets, positive words and signed words.

Letters are interned to integer ids when an :class:`Alphabet` is built.
A positive word is a plain ``tuple`` of letter ids.  A signed word is a
``tuple`` of nonzero integers: letter ``i`` is encoded ``i + 1`` and its
formal inverse ``-(i + 1)``.

Textual form: positive letters are written by name, negative letters by
name followed by an apostrophe, so ``c'b'a`` is the signed word whose
entries are the inverses of ``c`` and ``b`` followed by ``a``.  When every
name is a single character, letters may be juxtaposed; otherwise they are
separated by spaces or dots.  The empty word is written ``1`` (``ε`` and
the empty string are accepted on input).
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Sequence

from .errors import AlphabetError, WordParseError

Word = tuple  # tuple[int, ...] of letter ids
SignedWord = tuple  # tuple[int, ...] of nonzero signed entries

EMPTY: Word = ()
EMPTY_TEXT = "1"

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class Letter(NamedTuple):
    id: int
    name: str


class Alphabet:
    """An ordered, finite set of named letters."""

    __slots__ = ("names", "_index", "_single")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        index = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not _NAME_RE.fullmatch(name):
                raise AlphabetError(f"invalid letter name {name!r}")
            if name in index:
                raise AlphabetError(f"duplicate letter name {name!r}")
            index[name] = i
        self.names = names
        self._index = index
        self._single = all(len(n) == 1 for n in names)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    @property
    def letters(self) -> list[Letter]:
        return [Letter(i, n) for i, n in enumerate(self.names)]

    def letter(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetError(f"unknown letter {name!r}") from None

    def check(self, word: Sequence[int]) -> Word:
        n = len(self.names)
        for x in word:
            if not (isinstance(x, int) and 0 <= x < n):
                raise AlphabetError(f"letter id {x!r} outside alphabet of size {n}")
        return tuple(word)

    def check_signed(self, word: Sequence[int]) -> SignedWord:
        n = len(self.names)
        for x in word:
            if not (isinstance(x, int) and x != 0 and abs(x) <= n):
                raise AlphabetError(f"signed entry {x!r} outside alphabet of size {n}")
        return tuple(word)

    # -- text ------------------------------------------------------------

    def _tokens(self, text: str):
        """Yield (position, name, negative) for each letter of ``text``."""
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace() or ch == ".":
                i += 1
                continue
            if self._single:
                name, j = ch, i + 1
            else:
                m = _NAME_RE.match(text, i)
                if m is None:
                    raise WordParseError(text, i, f"unexpected character {ch!r}")
                name, j = m.group(), m.end()
            if name not in self._index:
                raise WordParseError(text, i, f"unknown letter {name!r}")
            negative = j < n and text[j] == "'"
            yield i, self._index[name], negative
            i = j + 1 if negative else j

    def parse_signed(self, text: str) -> SignedWord:
        text = text.strip()
        if text in ("", EMPTY_TEXT, "ε"):
            return ()
        return tuple(-(k + 1) if neg else k + 1 for _, k, neg in self._tokens(text))

    def parse(self, text: str) -> Word:
        text = text.strip()
        if text in ("", EMPTY_TEXT, "ε"):
            return ()
        out = []
        for pos, k, neg in self._tokens(text):
            if neg:
                raise WordParseError(text, pos, "negative letter in a positive word")
            out.append(k)
        return tuple(out)

    def format(self, word: Sequence[int]) -> str:
        if not word:
            return EMPTY_TEXT
        sep = "" if self._single else " "
        return sep.join(self.names[x] for x in word)

    def format_signed(self, word: Sequence[int]) -> str:
        if not word:
            return EMPTY_TEXT
        sep = "" if self._single else " "
        return sep.join(
            self.names[x - 1] if x > 0 else self.names[-x - 1] + "'" for x in word
        )


def concat(u: Word, v: Word, alphabet: Alphabet | None = None) -> Word:
    """Concatenate two positive words, validating them when an alphabet is given."""
    if alphabet is not None:
        alphabet.check(u)
        alphabet.check(v)
    return tuple(u) + tuple(v)


def positive(word: Word) -> SignedWord:
    """Embed a positive word as an all-positive signed word."""
    return tuple(x + 1 for x in word)


def negative(word: Word) -> SignedWord:
    """The formal inverse of the positive word ``word``."""
    return tuple(-(x + 1) for x in reversed(word))


def formal_inverse(word: SignedWord) -> SignedWord:
    return tuple(-x for x in reversed(word))


def fraction(u: Word, v: Word) -> SignedWord:
    """The signed word u'·v (inverse of u followed by v)."""
    return negative(u) + positive(v)


def is_positive(word: SignedWord) -> bool:
    return all(x > 0 for x in word)


def split_positive_negative(word: SignedWord) -> tuple[Word, Word] | None:
    """Return ``(p, q)`` when ``word`` equals p·q' with p, q positive, else None."""
    k = 0
    while k < len(word) and word[k] > 0:
        k += 1
    if any(x > 0 for x in word[k:]):
        return None
    return tuple(x - 1 for x in word[:k]), tuple(-x - 1 for x in reversed(word[k:]))
