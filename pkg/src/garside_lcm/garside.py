"""Minimal Garside families by closure.

Starting from the generators, the family is repeatedly enlarged by the
right-lcm and both right-complements of every pair of members that has a
common right-multiple, and by the right-divisors of every new member,
until nothing new appears.  Pairs whose classification is failing or
eventually periodic have no common right-multiple and add nothing.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .completeness import CompletenessCertificate, certify
from .errors import Diverged, NotCertified, NotHomogeneous
from .presentation import Presentation, is_homogeneous
from .trichotomy import (
    ClassifierLimits,
    ClassifierSession,
    Complement,
    Exhausted,
    complement_table,
)
from .wordproblem import ElementSet, word_problem
from .words import Word


@dataclass(frozen=True)
class ClosureLimits:
    max_length: int | None = None
    max_size: int | None = None
    classifier: ClassifierLimits = field(default_factory=ClassifierLimits)

    def __post_init__(self):
        for name in ("max_length", "max_size"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class ClosureStats:
    generation_sizes: list[int] = field(default_factory=list)
    pairs_classified: int = 0
    pairs_with_lcm: int = 0
    pairs_without_lcm: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class GarsideFamily:
    presentation: Presentation
    elements: ElementSet
    extremals: ElementSet
    generations: int
    stats: ClosureStats = field(compare=False, repr=False, default_factory=ClosureStats)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, word):
        return word_problem(self.presentation).canonical(word) in self.elements

    def sorted_elements(self) -> list[Word]:
        return self.elements.sorted()


def _key(w):
    return (len(w), w)


def compute_minimal_garside(
    p: Presentation,
    limits: ClosureLimits | None = None,
    certificate: CompletenessCertificate | None = None,
) -> GarsideFamily:
    """Close the generators under right-lcm, right-complement and right-divisor.

    Raises :class:`NotCertified` unless right-reversing is certified
    complete, and :class:`Diverged` (carrying the partial family) when a
    limit is hit.
    """
    limits = limits or ClosureLimits()
    if not is_homogeneous(p):
        raise NotHomogeneous("Garside closure needs a homogeneous presentation")
    if certificate is None:
        certificate = certify(p)
    if not certificate.complete:
        raise NotCertified(certificate)

    started = time.perf_counter()
    wp = word_problem(p)
    session = ClassifierSession(complement_table(p), limits.classifier)
    stats = ClosureStats()
    elements: dict[Word, int] = {}

    def add(word, generation, added):
        if word in elements:
            return
        if limits.max_length is not None and len(word) > limits.max_length:
            raise Diverged(f"element longer than {limits.max_length}", partial())
        elements[word] = generation
        added.append(word)
        for d in wp.right_divisors(word):
            if d and d not in elements:
                elements[d] = generation
                added.append(d)
        if limits.max_size is not None and len(elements) > limits.max_size:
            raise Diverged(f"more than {limits.max_size} elements", partial())

    def partial():
        stats.seconds = time.perf_counter() - started
        elems = ElementSet(list(elements) + [()])
        return GarsideFamily(p, elems, ElementSet(), len(stats.generation_sizes), stats)

    frontier: list[Word] = []
    for s in range(p.rank):
        add((s,), 0, frontier)
    frontier.sort(key=_key)
    stats.generation_sizes.append(len(elements))
    generation = 0
    while frontier:
        generation += 1
        fresh = set(frontier)
        old = sorted((w for w in elements if w not in fresh), key=_key)
        added: list[Word] = []
        pairs = itertools.chain(
            itertools.combinations(frontier, 2),
            ((g, h) for g in frontier for h in old),
        )
        for g, h in pairs:
            result = session.classify(g, h)
            stats.pairs_classified += 1
            if isinstance(result, Exhausted):
                raise Diverged(f"classifier exhausted on a pair: {result.reason}", partial())
            if not isinstance(result, Complement):
                stats.pairs_without_lcm += 1
                continue
            stats.pairs_with_lcm += 1
            for w in (g + result.v_prime, result.u_prime, result.v_prime):
                if w:
                    add(wp.canonical(w), generation, added)
        frontier = sorted(added, key=_key)
        stats.generation_sizes.append(len(elements))

    elements[()] = generation
    stats.seconds = time.perf_counter() - started
    members = ElementSet(elements)
    return GarsideFamily(p, members, extremal_elements(members, p), generation, stats)


def extremal_elements(family, p: Presentation) -> ElementSet:
    """Members that are not proper right-divisors of another member."""
    members = family.elements if isinstance(family, GarsideFamily) else family
    wp = word_problem(p)
    covered = set()
    for m in members:
        covered.update(d for d in wp.right_divisors(m) if d != m)
    return ElementSet(m for m in members if m not in covered)


def garside_violations(
    elements,
    p: Presentation,
    extremals=None,
    sample_budget: int | None = None,
    limits: ClassifierLimits | None = None,
    max_problems: int | None = None,
) -> list[str]:
    """Closure properties that ``elements`` breaks, as messages.

    Checks generators, ε, right-divisor closure (exhaustive), the extremal
    cover when ``extremals`` is given, and right-lcm / right-complement
    closure over all pairs (or the first ``sample_budget`` pairs).  Stops
    early once ``max_problems`` problems are found.
    """
    wp = word_problem(p)
    fmt = p.alphabet.format
    members = {wp.canonical(w) for w in elements}
    problems = []
    if () not in members:
        problems.append("identity missing")
    for s in range(p.rank):
        if (s,) not in members:
            problems.append(f"generator {fmt((s,))} missing")
    for m in sorted(members, key=_key):
        for d in wp.right_divisors(m):
            if d not in members:
                problems.append(f"right-divisor {fmt(d)} of {fmt(m)} missing")
    if extremals is not None:
        covered = set()
        for e in extremals:
            covered |= wp.right_divisors(e)
        if covered != members:
            problems.append("right-divisors of the extremal elements do not cover the family")
    if max_problems is not None and len(problems) >= max_problems:
        return problems[:max_problems]
    session = ClassifierSession(complement_table(p), limits)
    ordered = sorted(members, key=_key)
    pairs = itertools.combinations(ordered, 2)
    if sample_budget is not None:
        pairs = itertools.islice(pairs, sample_budget)
    for g, h in pairs:
        result = session.classify(g, h)
        if isinstance(result, Exhausted):
            problems.append(f"could not classify ({fmt(g)}, {fmt(h)}): {result.reason}")
            continue
        if not isinstance(result, Complement):
            continue
        for label, w in (("lcm", g + result.v_prime), ("complement", result.u_prime),
                         ("complement", result.v_prime)):
            if wp.canonical(w) not in members:
                problems.append(f"{label} {fmt(w)} of ({fmt(g)}, {fmt(h)}) missing")
        if max_problems is not None and len(problems) >= max_problems:
            return problems[:max_problems]
    return problems


def verify_garside(family, p: Presentation | None = None, sample_budget: int | None = None) -> bool:
    if isinstance(family, GarsideFamily):
        p = p or family.presentation
        return not garside_violations(family.elements, p, family.extremals, sample_budget,
                                      max_problems=1)
    return not garside_violations(family, p, None, sample_budget, max_problems=1)


@dataclass(frozen=True)
class TableRow:
    preset: str
    extremal_count: int | None
    family_size: int | None
    seconds: float
    status: str = "ok"
    detail: str = ""


def family_table(presets, limits: ClosureLimits | None = None) -> list[TableRow]:
    """One row (|E|, |F|) per preset; divergence is recorded, not raised."""
    from .presets import preset as load

    rows = []
    for name in presets:
        p = load(name) if isinstance(name, str) else name
        label = name if isinstance(name, str) else p.name
        started = time.perf_counter()
        try:
            fam = compute_minimal_garside(p, limits)
        except (Diverged, NotCertified) as exc:
            rows.append(TableRow(label, None, None, time.perf_counter() - started,
                                 "diverged" if isinstance(exc, Diverged) else "not-certified", str(exc)))
            continue
        rows.append(TableRow(label, len(fam.extremals), len(fam.elements), fam.stats.seconds))
    return rows
