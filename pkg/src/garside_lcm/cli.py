"""Command-line interface: ``garside-lcm COMMAND [options] ...``.

Exit status: 0 for a definite answer (including "no common right-multiple"),
2 when the answer is unknown (limits hit, no completeness certificate for a
negative answer, divergence), 1 for input errors.

Environment: ``GARSIDE_BUDGET`` sets the default reversing step budget
(``unlimited`` for none).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .completeness import certify
from .errors import ClassificationExhausted, Diverged, GarsideError, NotCertified
from .garside import ClosureLimits, compute_minimal_garside, family_table
from .presentation import Presentation, load_presentation
from .presets import DISPLAY_NAMES, PRESET_NAMES, preset
from .reversing import (
    BudgetExhausted,
    Irreducible,
    Stuck,
    default_budget,
    export_trace_dot,
    reverse,
)
from .trichotomy import (
    ClassifierLimits,
    ClassifierSession,
    Complement,
    EventuallyPeriodic,
    Exhausted,
    Failing,
    complement_table,
)
from .wordproblem import word_problem

OK, INPUT_ERROR, UNKNOWN = 0, 1, 2

COMMANDS = (
    "eq", "divisors", "gcd", "oracle-lcm", "reverse", "classify",
    "lcm", "certify", "garside", "table",
)

DEFAULT_MAX_PAIRS = 1_000_000
DEFAULT_TABLE = ("A2t", "C2t", "G2t")


@dataclass
class CommandConfig:
    command: str
    preset: str | None = None
    file: str | None = None
    words: list[str] = field(default_factory=list)
    json: bool = False
    budget: int | None = None  # None: $GARSIDE_BUDGET or the default; 0: unlimited
    max_pairs: int | None = DEFAULT_MAX_PAIRS
    max_depth: int | None = None
    max_len: int | None = None
    max_size: int | None = None
    side: str = "right"
    trace: bool = False
    dot: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.command != "table" and (self.preset is None) == (self.file is None):
            raise ValueError("exactly one of --preset and --file is required")
        if self.budget is not None and self.budget < 0:
            raise ValueError("--budget must be non-negative (0 means unlimited)")
        for name in ("max_pairs", "max_depth", "max_len", "max_size"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"--{name.replace('_', '-')} must be positive")

    def presentation(self) -> Presentation:
        if self.preset is not None:
            return preset(self.preset)
        return load_presentation(self.file)

    def classifier_limits(self) -> ClassifierLimits:
        return ClassifierLimits(self.max_pairs, self.max_depth)


class _Output:
    def __init__(self, as_json):
        self.as_json = as_json
        self.lines = []
        self.doc = {}

    def text(self, line=""):
        self.lines.append(line)

    def render(self):
        if self.as_json:
            return json.dumps(self.doc, sort_keys=True, ensure_ascii=False) + "\n"
        return "\n".join(self.lines) + "\n"


def _words(cfg, p, count, signed=False):
    if len(cfg.words) != count:
        raise ValueError(f"{cfg.command} expects {count} word(s), got {len(cfg.words)}")
    parse = p.alphabet.parse_signed if signed else p.alphabet.parse
    return [parse(w) for w in cfg.words]


def _pair(p, key):
    fmt = p.alphabet.format
    return [fmt(key[0]), fmt(key[1])]


def _edges(p, edges):
    return [{"kind": kind, "steps": offset, "pair": _pair(p, child)} for kind, offset, child in edges]


def classification_document(p, session, u, v, result) -> dict:
    """Machine-readable form of a classification result."""
    fmt = p.alphabet.format
    doc = {"u": fmt(u), "v": fmt(v)}
    if isinstance(result, Complement):
        doc.update(kind="complement", u_prime=fmt(result.u_prime), v_prime=fmt(result.v_prime),
                   steps=result.steps)
    elif isinstance(result, Failing):
        w = session.witness(u, v, result)
        doc.update(kind="failing", s=p.alphabet.names[result.s], t=p.alphabet.names[result.t],
                   path=_edges(p, w["path"]))
    elif isinstance(result, EventuallyPeriodic):
        w = session.witness(u, v, result)
        doc.update(kind="eventually-periodic", periodic=_pair(p, result.periodic),
                   path=_edges(p, w["path"]), cycle=_edges(p, w["cycle"]),
                   cycle_steps=w["cycle_steps"])
    else:
        doc.update(kind="exhausted", reason=result.reason)
    return doc


def _cmd_eq(cfg, p, out):
    u, v = _words(cfg, p, 2)
    equal = word_problem(p).words_equal(u, v)
    out.doc.update(u=cfg.words[0], v=cfg.words[1], equal=equal)
    out.text("true" if equal else "false")
    return OK


def _cmd_divisors(cfg, p, out):
    (w,) = _words(cfg, p, 1)
    wp = word_problem(p)
    found = wp.right_divisors(w) if cfg.side == "right" else wp.left_divisors(w)
    listed = [p.alphabet.format(d) for d in found.sorted()]
    out.doc.update(word=p.alphabet.format(w), side=cfg.side, divisors=listed)
    out.text(f"{len(listed)} {cfg.side}-divisors of {p.alphabet.format(w)}:")
    out.text(" ".join(listed))
    return OK


def _cmd_gcd(cfg, p, out):
    u, v = _words(cfg, p, 2)
    g = p.alphabet.format(word_problem(p).left_gcd(u, v))
    out.doc.update(u=cfg.words[0], v=cfg.words[1], left_gcd=g)
    out.text(g)
    return OK


def _cmd_oracle(cfg, p, out):
    u, v = _words(cfg, p, 2)
    bound = cfg.max_len if cfg.max_len is not None else 2 * (len(u) + len(v))
    m = word_problem(p).oracle_common_multiple(u, v, bound)
    out.doc.update(u=cfg.words[0], v=cfg.words[1], max_len=bound,
                   multiple=None if m is None else p.alphabet.format(m))
    out.text(f"none within length {bound}" if m is None else p.alphabet.format(m))
    return OK


def _cmd_reverse(cfg, p, out):
    (w,) = _words(cfg, p, 1, signed=True)
    table = complement_table(p)
    if cfg.budget is None:
        budget = default_budget()
    else:
        budget = cfg.budget or None
    result = reverse(w, table, budget, record_trace=cfg.trace or cfg.dot is not None)
    fs = p.alphabet.format_signed
    doc = {"word": fs(w), "final": fs(result.word), "steps": result.steps}
    if isinstance(result, Irreducible):
        doc["outcome"] = "irreducible"
        out.text(f"irreducible after {result.steps} steps: {fs(result.word)}")
    elif isinstance(result, Stuck):
        s, t = p.alphabet.names[result.s], p.alphabet.names[result.t]
        doc.update(outcome="stuck", s=s, t=t, position=result.position)
        out.text(f"stuck after {result.steps} steps on {s}'{t} at {result.position}: {fs(result.word)}")
    else:
        doc["outcome"] = "budget-exhausted"
        out.text(f"budget of {budget} steps exhausted: {fs(result.word)}")
    if cfg.trace:
        rows = []
        current = w
        for st in result.trace.steps:
            current = current[:st.position] + st.replacement + current[st.position + 2:]
            rows.append({"position": st.position, "s": p.alphabet.names[st.s],
                         "t": p.alphabet.names[st.t], "word": fs(current)})
            out.text(f"  {st.position:4d} {p.alphabet.names[st.s]}'{p.alphabet.names[st.t]} -> {fs(current)}")
        doc["trace"] = rows
    if cfg.dot is not None:
        Path(cfg.dot).write_text(export_trace_dot(result.trace), encoding="utf-8")
        doc["dot"] = cfg.dot
    out.doc.update(doc)
    return UNKNOWN if isinstance(result, BudgetExhausted) else OK


def _cmd_classify(cfg, p, out):
    u, v = _words(cfg, p, 2)
    session = ClassifierSession(complement_table(p), cfg.classifier_limits())
    result = session.classify(u, v)
    doc = classification_document(p, session, u, v, result)
    out.doc.update(doc)
    if doc["kind"] == "complement":
        out.text(f"complement: u' = {doc['u_prime']}, v' = {doc['v_prime']} ({doc['steps']} steps)")
    elif doc["kind"] == "failing":
        out.text(f"failing: complement of ({doc['s']}, {doc['t']}) undefined")
    elif doc["kind"] == "eventually-periodic":
        a, b = doc["periodic"]
        out.text(f"eventually-periodic: periodic pair ({a}, {b}), "
                 f"cycle of {doc['cycle_steps']} reversing steps")
    else:
        out.text(f"exhausted: {doc['reason']}")
    return UNKNOWN if isinstance(result, Exhausted) else OK


def _cmd_lcm(cfg, p, out):
    u, v = _words(cfg, p, 2)
    session = ClassifierSession(complement_table(p), cfg.classifier_limits())
    result = session.classify(u, v)
    fmt = p.alphabet.format
    out.doc.update(u=fmt(u), v=fmt(v))
    if isinstance(result, Exhausted):
        out.doc.update(status="unknown", reason=result.reason)
        out.text(f"unknown: {result.reason}")
        return UNKNOWN
    if isinstance(result, Complement):
        lcm = fmt(u + result.v_prime)
        out.doc.update(status="lcm", lcm=lcm, u_prime=fmt(result.u_prime),
                       v_prime=fmt(result.v_prime))
        out.text(lcm)
        return OK
    cert = certify(p, cfg.classifier_limits())
    out.doc["certificate"] = cert.status
    if not cert.complete:
        out.doc["status"] = "unknown"
        out.text(f"unknown: reversing does not terminate but completeness is not certified ({cert.status})")
        return UNKNOWN
    out.doc["status"] = "none"
    out.text("none: no common right-multiple")
    return OK


def _cmd_certify(cfg, p, out):
    cert = certify(p, cfg.classifier_limits())
    names = p.alphabet.names
    fmt = p.alphabet.format

    def opt(w):
        return None if w is None else fmt(w)

    reports = [
        {"triple": [names[i] for i in r.triple], "status": r.status,
         "left": opt(r.left), "right": opt(r.right)}
        for r in cert.reports
    ]
    out.doc.update(status=cert.status, reports=reports,
                   failing_triple=None if cert.failing_triple is None
                   else [names[i] for i in cert.failing_triple])
    out.text(f"{cert.status}")
    for r in reports:
        detail = "" if r["left"] is None else f"  {r['left']} / {r['right']}"
        out.text(f"  {' '.join(r['triple'])}  {r['status']}{detail}")
    return OK if cert.status != "unknown" else UNKNOWN


def _closure_limits(cfg):
    return ClosureLimits(cfg.max_len, cfg.max_size, cfg.classifier_limits())


def _cmd_garside(cfg, p, out):
    try:
        fam = compute_minimal_garside(p, _closure_limits(cfg))
    except NotCertified as exc:
        out.doc.update(status="not-certified", certificate=exc.certificate.status)
        out.text(f"not certified: {exc.certificate.status}")
        return UNKNOWN
    except Diverged as exc:
        out.doc.update(status="diverged", reason=exc.reason, partial_size=len(exc.partial.elements))
        out.text(f"diverged: {exc.reason} ({len(exc.partial.elements)} elements so far)")
        return UNKNOWN
    fmt = p.alphabet.format
    elements = [fmt(w) for w in fam.sorted_elements()]
    extremals = [fmt(w) for w in fam.extremals.sorted()]
    out.doc.update(status="ok", size=len(elements), extremal_count=len(extremals),
                   elements=elements, extremals=extremals, generations=fam.generations)
    out.text(f"|F| = {len(elements)}, |E| = {len(extremals)}")
    out.text("extremal elements: " + " ".join(extremals))
    out.text("elements: " + " ".join(elements))
    return OK


def _cmd_table(cfg, out):
    names = cfg.words or list(DEFAULT_TABLE)
    for n in names:
        if n not in PRESET_NAMES:
            raise ValueError(f"unknown preset {n!r}")
    rows = family_table(names, _closure_limits(cfg))
    out.doc["rows"] = [
        {"preset": r.preset, "E": r.extremal_count, "F": r.family_size,
         "status": r.status, "detail": r.detail}
        for r in rows
    ]
    out.text(f"{'type':<6} {'|E|':>5} {'|F|':>6}")
    for r in rows:
        e = "-" if r.extremal_count is None else r.extremal_count
        f = "-" if r.family_size is None else r.family_size
        out.text(f"{DISPLAY_NAMES.get(r.preset, r.preset):<6} {e:>5} {f:>6}"
                 + ("" if r.status == "ok" else f"  {r.status}"))
    return OK if all(r.status == "ok" for r in rows) else UNKNOWN


_HANDLERS = {
    "eq": _cmd_eq, "divisors": _cmd_divisors, "gcd": _cmd_gcd,
    "oracle-lcm": _cmd_oracle, "reverse": _cmd_reverse, "classify": _cmd_classify,
    "lcm": _cmd_lcm, "certify": _cmd_certify, "garside": _cmd_garside,
}


def run(cfg: CommandConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, rendered output)."""
    out = _Output(cfg.json)
    out.doc["command"] = cfg.command
    try:
        if cfg.command == "table":
            status = _cmd_table(cfg, out)
        else:
            p = cfg.presentation()
            out.doc["presentation"] = p.name
            status = _HANDLERS[cfg.command](cfg, p, out)
    except ClassificationExhausted as exc:
        return UNKNOWN, _error(cfg, "unknown", str(exc))
    except (GarsideError, ValueError) as exc:
        return INPUT_ERROR, _error(cfg, "error", str(exc))
    return status, out.render()


def _error(cfg, kind, message):
    if cfg.json:
        return json.dumps({"command": cfg.command, kind: message}, sort_keys=True) + "\n"
    return f"{kind}: {message}\n"


def _positive_int(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _budget(text):
    if text.lower() in ("unlimited", "none"):
        return 0
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _limit(text):
    if text.lower() in ("unlimited", "none"):
        return None
    return _positive_int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside-lcm",
        description="Right-lcms, right-reversing and Garside families for "
                    "right-complemented monoid presentations.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, nwords=None, source=True):
        sp = sub.add_parser(name, help=help_text)
        if source:
            group = sp.add_mutually_exclusive_group(required=True)
            group.add_argument("--preset", choices=PRESET_NAMES)
            group.add_argument("--file", help="presentation file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--max-pairs", type=_limit, default=DEFAULT_MAX_PAIRS,
                        help="classifier cap on visited pairs (or 'unlimited')")
        sp.add_argument("--max-depth", type=_limit, default=None)
        if nwords:
            sp.add_argument("words", nargs=nwords, metavar="WORD")
        return sp

    add("eq", "decide word equality", 2)
    sp = add("divisors", "list left- or right-divisors", 1)
    sp.add_argument("--side", choices=("left", "right"), default="right")
    add("gcd", "left-gcd of two words", 2)
    sp = add("oracle-lcm", "brute-force shortest common right-multiple", 2)
    sp.add_argument("--max-len", type=_positive_int, default=None)
    sp = add("reverse", "right-reverse a signed word", 1)
    sp.add_argument("--budget", type=_budget, default=None,
                    help="step budget, 0 or 'unlimited' for none (default: $GARSIDE_BUDGET or 100000)")
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--dot", metavar="FILE", help="write the reversing diagram as DOT")
    add("classify", "failing / eventually-periodic / complement", 2)
    add("lcm", "right-lcm, or none", 2)
    add("certify", "completeness certificate via the cube condition")
    for name, nwords, source in (("garside", None, True), ("table", "*", False)):
        sp = add(name, "minimal Garside family" if source else "family sizes for presets",
                 nwords, source)
        sp.add_argument("--max-len", type=_positive_int, default=None)
        sp.add_argument("--max-size", type=_positive_int, default=None)
    return parser


def parse_args(argv=None) -> CommandConfig:
    ns = build_parser().parse_args(argv)
    return CommandConfig(
        command=ns.command,
        preset=getattr(ns, "preset", None),
        file=getattr(ns, "file", None),
        words=list(getattr(ns, "words", None) or []),
        json=ns.json,
        budget=getattr(ns, "budget", None),
        max_pairs=ns.max_pairs,
        max_depth=ns.max_depth,
        max_len=getattr(ns, "max_len", None),
        max_size=getattr(ns, "max_size", None),
        side=getattr(ns, "side", "right"),
        trace=getattr(ns, "trace", False),
        dot=getattr(ns, "dot", None),
    )


def main(argv=None) -> int:
    try:
        cfg = parse_args(argv)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except SystemExit as exc:
        return INPUT_ERROR if exc.code not in (0, None) else 0
    status, text = run(cfg)
    stream = sys.stdout if status != INPUT_ERROR else sys.stderr
    stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
