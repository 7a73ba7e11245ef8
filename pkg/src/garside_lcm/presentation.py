"""Monoid presentations, right-complement tables and Artin-Tits builders.

Presentation file grammar (``#`` starts a comment, blank lines ignored)::

    generators: a b c
    relations:
    aba = bab
    bcb = cbc

or, for an Artin-Tits monoid::

    generators: a b c
    coxeter:
    1 3 3
    3 1 3
    3 3 1

Generator names are identifiers separated by whitespace or commas.  In a
``relations:`` block each line is ``LHS = RHS`` with words written as in
:mod:`garside_lcm.words`.  A ``coxeter:`` block holds an n x n matrix of
integers, with ``inf`` for the absence of a relation.  At most one of the
two blocks may be present (none gives the free monoid); duplicate
generators and duplicate relations are rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import (
    AlphabetError,
    NotRightComplemented,
    PresentationError,
    PresentationParseError,
)
from .words import Alphabet, Word

INF = math.inf


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    def sides(self):
        return self.lhs, self.rhs


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relations: tuple[Relation, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        for rel in self.relations:
            self.alphabet.check(rel.lhs)
            self.alphabet.check(rel.rhs)

    @property
    def rank(self) -> int:
        return len(self.alphabet)

    def format_relation(self, rel: Relation) -> str:
        return f"{self.alphabet.format(rel.lhs)} = {self.alphabet.format(rel.rhs)}"

    def to_text(self) -> str:
        lines = [f"generators: {' '.join(self.alphabet.names)}", "relations:"]
        lines += [self.format_relation(r) for r in self.relations]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of braid-relation lengths; ``INF`` means no relation."""

    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise PresentationError(f"row {i} has {len(row)} entries, expected {n}")
            for j, m in enumerate(row):
                if i == j:
                    if m != 1:
                        raise PresentationError(f"diagonal entry m({i},{i}) = {m}, expected 1")
                elif m != INF and not (isinstance(m, int) and m >= 2):
                    raise PresentationError(f"entry m({i},{j}) = {m} must be >= 2 or inf")
                if rows[j][i] != m:
                    raise PresentationError(f"matrix not symmetric at ({i},{j})")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_edges(cls, n, edges):
        """Build from a Coxeter graph: ``edges`` maps index pairs to labels.

        Unlisted pairs commute (m = 2), matching the diagram convention.
        """
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for (i, j), label in edges.items():
            m[i][j] = m[j][i] = label
        return cls(tuple(tuple(r) for r in m))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def build_artin_tits(matrix: CoxeterMatrix, names: Sequence[str], name: str = "") -> Presentation:
    alphabet = Alphabet(names)
    if len(alphabet) != matrix.n:
        raise PresentationError(f"{len(alphabet)} names for a {matrix.n} x {matrix.n} matrix")
    relations = []
    for a in range(matrix.n):
        for b in range(a + 1, matrix.n):
            m = matrix[a, b]
            if m == INF:
                continue
            lhs = tuple(a if k % 2 == 0 else b for k in range(m))
            rhs = tuple(b if k % 2 == 0 else a for k in range(m))
            relations.append(Relation(lhs, rhs))
    return Presentation(alphabet, tuple(relations), name)


class ComplementTable:
    """The syntactic right-complement of a right-complemented presentation.

    ``table[s, t]`` is the word θ(s, t) with s·θ(s, t) = t·θ(t, s), or
    ``None`` where undefined.  Both orientations are stored.
    """

    __slots__ = ("alphabet", "rows")

    def __init__(self, alphabet: Alphabet, rows):
        self.alphabet = alphabet
        self.rows = tuple(tuple(r) for r in rows)

    def __getitem__(self, st) -> Word | None:
        s, t = st
        return self.rows[s][t]

    def get(self, s, t):
        return self.rows[s][t]

    def defined(self, s, t) -> bool:
        return self.rows[s][t] is not None

    def __len__(self):
        return len(self.rows)

    def items(self):
        for s, row in enumerate(self.rows):
            for t, w in enumerate(row):
                if w is not None:
                    yield (s, t), w

    @classmethod
    def from_dict(cls, alphabet: Alphabet, values: dict) -> "ComplementTable":
        """Build from explicit values; diagonal entries default to ε."""
        n = len(alphabet)
        rows = [[() if s == t else None for t in range(n)] for s in range(n)]
        for (s, t), w in values.items():
            rows[s][t] = None if w is None else tuple(w)
        return cls(alphabet, rows)


def derive_complement_table(p: Presentation) -> ComplementTable:
    n = p.rank
    rows: list[list[Word | None]] = [[() if s == t else None for t in range(n)] for s in range(n)]
    source: dict[tuple[int, int], Relation] = {}
    for rel in p.relations:
        if not rel.lhs or not rel.rhs:
            raise NotRightComplemented(
                f"epsilon-relation {p.format_relation(rel)}", [rel]
            )
        s, t = rel.lhs[0], rel.rhs[0]
        if s == t:
            raise NotRightComplemented(
                f"relation {p.format_relation(rel)} has the same head letter on both sides",
                [rel],
            )
        key = (min(s, t), max(s, t))
        if key in source:
            raise NotRightComplemented(
                "two relations share the head pair "
                f"({p.alphabet.names[key[0]]}, {p.alphabet.names[key[1]]}): "
                f"{p.format_relation(source[key])} and {p.format_relation(rel)}",
                [source[key], rel],
            )
        source[key] = rel
        rows[s][t] = rel.lhs[1:]
        rows[t][s] = rel.rhs[1:]
    return ComplementTable(p.alphabet, rows)


def is_homogeneous(p: Presentation) -> bool:
    return all(len(r.lhs) == len(r.rhs) for r in p.relations)


def is_short(table: ComplementTable) -> bool:
    return all(len(w) <= 1 for _, w in table.items())


# -- file format ---------------------------------------------------------


def _split_names(text):
    return [x for x in text.replace(",", " ").split() if x]


def parse_presentation(text: str, source: str | None = None, name: str = "") -> Presentation:
    generators = None
    mode = None
    relation_lines = []
    matrix_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        key = head.strip().lower()
        if sep and key in ("generators", "relations", "coxeter"):
            if key == "generators":
                if generators is not None:
                    raise PresentationParseError("duplicate generators line", lineno, source)
                generators = (_split_names(rest), lineno)
                mode = None
                continue
            if mode is not None or relation_lines or matrix_lines:
                raise PresentationParseError(
                    "only one relations: or coxeter: block is allowed", lineno, source
                )
            mode = key
            if rest.strip():
                (relation_lines if key == "relations" else matrix_lines).append((rest.strip(), lineno))
            continue
        if mode == "relations":
            relation_lines.append((line, lineno))
        elif mode == "coxeter":
            matrix_lines.append((line, lineno))
        else:
            raise PresentationParseError(f"unexpected line {line!r}", lineno, source)

    if generators is None:
        raise PresentationParseError("missing generators: line", None, source)
    names, gen_line = generators
    try:
        alphabet = Alphabet(names)
    except AlphabetError as exc:
        raise PresentationParseError(str(exc), gen_line, source) from None
    if not names:
        raise PresentationParseError("empty generator list", gen_line, source)

    if mode == "coxeter":
        rows = []
        for line, lineno in matrix_lines:
            row = []
            for tok in _split_names(line):
                if tok.lower() in ("inf", "∞"):
                    row.append(INF)
                else:
                    try:
                        row.append(int(tok))
                    except ValueError:
                        raise PresentationParseError(f"bad matrix entry {tok!r}", lineno, source) from None
            rows.append(tuple(row))
        if len(rows) != len(alphabet):
            raise PresentationParseError(
                f"coxeter matrix has {len(rows)} rows, expected {len(alphabet)}", None, source
            )
        try:
            return build_artin_tits(CoxeterMatrix(tuple(rows)), names, name)
        except PresentationError as exc:
            raise PresentationParseError(str(exc), None, source) from None

    relations = []
    seen = set()
    for line, lineno in relation_lines:
        lhs_text, eq, rhs_text = line.partition("=")
        if not eq or "=" in rhs_text:
            raise PresentationParseError(f"expected 'LHS = RHS', got {line!r}", lineno, source)
        try:
            rel = Relation(alphabet.parse(lhs_text), alphabet.parse(rhs_text))
        except AlphabetError as exc:
            raise PresentationParseError(str(exc), lineno, source) from None
        key = frozenset((rel.lhs, rel.rhs))
        if key in seen:
            raise PresentationParseError(f"duplicate relation {line!r}", lineno, source)
        seen.add(key)
        relations.append(rel)
    return Presentation(alphabet, tuple(relations), name)


def load_presentation(path) -> Presentation:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise PresentationParseError(f"file not found: {path}", None, str(path)) from None
    except OSError as exc:
        raise PresentationParseError(f"cannot read file: {exc.strerror}", None, str(path)) from None
    return parse_presentation(text, source=str(path), name=path.stem)
