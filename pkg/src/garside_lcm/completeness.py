"""Certificates of completeness for right-reversing.

A right-complemented presentation that is right-noetherian and satisfies
the cube condition on its generators has complete right-reversing.  Here
right-noetherianity is certified by homogeneity only (length is then a
noetherianity witness); nothing else is attempted.

Convention: ``theta_star(x, y)`` is the word appended to ``x`` in the
common multiple, i.e. x·θ*(x, y) ≡ y·θ*(y, x) when u'·v reverses to a
positive-negative word.  The cube condition for letters (u, v, w) compares
θ*(θ*(u, v), θ*(u, w)) with θ*(θ*(v, u), θ*(v, w)).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .presentation import ComplementTable, Presentation, derive_complement_table, is_homogeneous
from .trichotomy import ClassifierLimits, ClassifierSession, Complement, Exhausted
from .wordproblem import word_problem
from .words import Word

HOLDS_DEFINED = "holds-defined"
HOLDS_UNDEFINED = "holds-undefined"
FAILS = "fails"
UNKNOWN = "unknown"

COMPLETE = "complete"
NOT_CUBE = "not-cube"
NOT_NOETHERIAN = "not-noetherian-certified"

DEFAULT_CUBE_LIMITS = ClassifierLimits(max_pairs=2_000_000)


class _Unknown(Exception):
    pass


@dataclass(frozen=True)
class CubeReport:
    triple: tuple[int, int, int]
    status: str
    left: Word | None = None
    right: Word | None = None

    @property
    def holds(self) -> bool:
        return self.status in (HOLDS_DEFINED, HOLDS_UNDEFINED)


@dataclass(frozen=True)
class CompletenessCertificate:
    status: str
    failing_triple: tuple[int, int, int] | None = None
    reports: tuple[CubeReport, ...] = field(default=(), repr=False)

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE


def theta_star(x: Word, y: Word, session: ClassifierSession) -> Word | None:
    result = session.classify(x, y)
    if isinstance(result, Exhausted):
        raise _Unknown(result.reason)
    if isinstance(result, Complement):
        return result.v_prime
    return None


def _theta3(u, v, w, session):
    a = theta_star((u,), (v,), session)
    if a is None:
        return None
    b = theta_star((u,), (w,), session)
    if b is None:
        return None
    return theta_star(a, b, session)


def theta_cube(
    u: int,
    v: int,
    w: int,
    table: ComplementTable,
    presentation: Presentation,
    limits: ClassifierLimits | None = None,
    session: ClassifierSession | None = None,
) -> CubeReport:
    """Check the cube condition for the generators ``u, v, w``.

    Words are compared with the word problem of ``presentation``, which must
    therefore be homogeneous.
    """
    if session is None:
        session = ClassifierSession(table, limits or DEFAULT_CUBE_LIMITS)
    triple = (u, v, w)
    try:
        left = _theta3(u, v, w, session)
        right = _theta3(v, u, w, session)
    except _Unknown:
        return CubeReport(triple, UNKNOWN)
    if left is None and right is None:
        return CubeReport(triple, HOLDS_UNDEFINED)
    if left is None or right is None:
        return CubeReport(triple, FAILS, left, right)
    if word_problem(presentation).words_equal(left, right):
        return CubeReport(triple, HOLDS_DEFINED, left, right)
    return CubeReport(triple, FAILS, left, right)


def certify(
    p: Presentation,
    limits: ClassifierLimits | None = None,
    table: ComplementTable | None = None,
) -> CompletenessCertificate:
    """Sweep every generator triple; ``table`` overrides the derived one."""
    if table is None:
        table = derive_complement_table(p)
    if not is_homogeneous(p):
        return CompletenessCertificate(NOT_NOETHERIAN)
    session = ClassifierSession(table, limits or DEFAULT_CUBE_LIMITS)
    reports = []
    for u, v, w in itertools.product(range(p.rank), repeat=3):
        reports.append(theta_cube(u, v, w, table, p, session=session))
    failing = next((r for r in reports if r.status == FAILS), None)
    if failing is not None:
        return CompletenessCertificate(NOT_CUBE, failing.triple, tuple(reports))
    if any(r.status == UNKNOWN for r in reports):
        return CompletenessCertificate(UNKNOWN, None, tuple(reports))
    return CompletenessCertificate(COMPLETE, None, tuple(reports))


@functools.lru_cache(maxsize=64)
def certify_cached(p: Presentation) -> CompletenessCertificate:
    return certify(p)
