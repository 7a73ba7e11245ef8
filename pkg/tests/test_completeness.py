import itertools

import pytest

from garside_lcm.completeness import (
    COMPLETE,
    FAILS,
    HOLDS_DEFINED,
    HOLDS_UNDEFINED,
    NOT_CUBE,
    NOT_NOETHERIAN,
    UNKNOWN,
    certify,
    theta_cube,
    theta_star,
)
from garside_lcm.presentation import derive_complement_table, parse_presentation
from garside_lcm.presets import preset
from garside_lcm.trichotomy import ClassifierLimits, ClassifierSession, right_lcm
from garside_lcm.wordproblem import word_problem, words_equal

from conftest import words

FREE3 = parse_presentation("generators: a b c\n")
# θ(a,b) = θ(a,c) = a, θ(b,c) = b: ba ≡ ca is a common multiple of b and c
# that is not a right-multiple of bb ≡ cc, so reversing is not complete
BROKEN = parse_presentation("generators: a b c\nrelations:\naa = ba\naa = ca\nbb = cc\n")


def _cube(p, *triple):
    return theta_cube(*triple, derive_complement_table(p), p)


def test_repeated_first_entries_hold(a2t):
    for p in (a2t, FREE3, BROKEN):
        assert _cube(p, 0, 0, 1).holds


def test_a2t_abc_holds_undefined(a2t):
    # θ*(a,b) = ba and θ*(a,c) = ca would need a common multiple, but the
    # three generators of an affine type have none
    report = _cube(a2t, 0, 1, 2)
    assert report.status == HOLDS_UNDEFINED
    assert word_problem(a2t).oracle_common_multiple(words(a2t, "aba"), (2,), 12) is None


def test_spherical_distinct_triple_holds_defined(a3):
    report = _cube(a3, 0, 1, 2)
    assert report.status == HOLDS_DEFINED
    assert words_equal(report.left, report.right, a3)


def test_free_abc_holds_undefined():
    assert _cube(FREE3, 0, 1, 2).status == HOLDS_UNDEFINED


def test_synthetic_failing_cube():
    report = _cube(BROKEN, 0, 1, 2)
    assert report.status == FAILS
    assert (report.left, report.right) == ((), (0,))
    cert = certify(BROKEN)
    assert cert.status == NOT_CUBE and cert.failing_triple == (0, 1, 2)
    wp = word_problem(BROKEN)
    assert wp.words_equal(words(BROKEN, "ba"), words(BROKEN, "ca"))
    assert not wp.left_divides(words(BROKEN, "bb"), words(BROKEN, "ba"))


@pytest.mark.parametrize("name", ["A2t", "B3", "A3", "C2t", "G2t"])
def test_presets_certify_complete(name):
    cert = certify(preset(name))
    assert cert.status == COMPLETE
    assert len(cert.reports) == preset(name).rank ** 3
    assert all(r.holds for r in cert.reports)


def test_not_noetherian():
    p = parse_presentation("generators: a b\nrelations:\nab = b\n")
    assert certify(p).status == NOT_NOETHERIAN


def test_limits_make_certificate_unknown(a2t):
    assert certify(a2t, ClassifierLimits(max_pairs=2)).status == UNKNOWN


def test_certificate_is_deterministic(a2t):
    assert certify(a2t) == certify(a2t)


@pytest.mark.parametrize("name", ["A2t", "B3", "C2t", "G2t", "A3t"])
def test_swap_symmetry(name):
    p = preset(name)
    session = ClassifierSession(derive_complement_table(p))

    def defined(u, v, w):
        a = theta_star((u,), (v,), session)
        b = theta_star((u,), (w,), session)
        return a is not None and b is not None and theta_star(a, b, session) is not None

    for u, v, w in itertools.product(range(p.rank), repeat=3):
        assert defined(u, v, w) == defined(u, w, v)


@pytest.mark.parametrize("name", ["A2t", "B3", "C2t", "G2t"])
def test_letter_lcms(name):
    p = preset(name)
    t = derive_complement_table(p)
    for s, u in itertools.product(range(p.rank), repeat=2):
        if t.defined(s, u):
            assert words_equal(right_lcm((s,), (u,), p), (s,) + t[s, u], p)
