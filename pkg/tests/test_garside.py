import pytest

from garside_lcm.errors import Diverged, NotCertified, NotHomogeneous
from garside_lcm.garside import (
    ClosureLimits,
    compute_minimal_garside,
    extremal_elements,
    family_table,
    garside_violations,
    verify_garside,
)
from garside_lcm.presentation import parse_presentation
from garside_lcm.presets import preset
from garside_lcm.wordproblem import canonical, element_set, word_problem

from conftest import words


@pytest.fixture(scope="module")
def a2t_family():
    return compute_minimal_garside(preset("A2t"))


def _classes(p, *texts):
    return {canonical(p.alphabet.parse(t), p) for t in texts}


def test_a2t_family(a2t_family, a2t):
    assert len(a2t_family) == 16
    assert () in a2t_family.elements
    assert set(a2t_family.extremals) == _classes(a2t, "abcb", "bcac", "caba")
    assert words(a2t, "acbc") in a2t_family


def test_a2_spherical():
    p = preset("A2")
    fam = compute_minimal_garside(p)
    assert set(fam.elements) == _classes(p, "1", "a", "b", "ab", "ba", "aba")
    assert set(fam.extremals) == _classes(p, "bab")


@pytest.mark.parametrize("name, size", [("C2t", 24), ("G2t", 41), ("A3", 24), ("B3", 48)])
def test_family_sizes(name, size):
    assert len(compute_minimal_garside(preset(name))) == size


def test_verify_computed(a2t_family):
    assert verify_garside(a2t_family)
    assert garside_violations(a2t_family.elements, a2t_family.presentation) == []


def test_removing_an_extremal_breaks_closure(a2t_family, a2t):
    for e in a2t_family.extremals:
        rest = [m for m in a2t_family.elements if m != e]
        assert not verify_garside(rest, a2t)


def test_generators_only_missing_lcm(a2t):
    problems = garside_violations([(), (0,), (1,), (2,)], a2t)
    assert "lcm aba of (a, b) missing" in problems


def test_sample_budget(a2t):
    # pairs run in length-lex order: (1, a), (1, b), (1, c), (a, b), ...
    gens = [(), (0,), (1,), (2,)]
    assert verify_garside(gens, a2t, sample_budget=3)
    assert not verify_garside(gens, a2t, sample_budget=4)


def test_divisor_closure_and_cover(a2t_family, a2t):
    wp = word_problem(a2t)
    members = set(a2t_family.elements)
    covered = set()
    for m in members:
        assert wp.right_divisors(m) <= members
    for e in a2t_family.extremals:
        covered |= wp.right_divisors(e)
        for f in a2t_family.extremals:
            if e != f:
                assert not wp.right_divides(e, f)
    assert covered == members


def test_extremal_elements_from_set(a2t_family, a2t):
    assert extremal_elements(a2t_family.elements, a2t) == a2t_family.extremals


def test_generation_sizes_monotone(a2t_family):
    sizes = a2t_family.stats.generation_sizes
    assert sizes == sorted(sizes)
    assert len(sizes) == a2t_family.generations + 1


def test_family_table():
    rows = family_table(["A2t", "C2t", "G2t"])
    assert [(r.extremal_count, r.family_size) for r in rows] == [(3, 16), (3, 24), (3, 41)]
    assert family_table([]) == []


def test_family_table_records_divergence():
    (row,) = family_table(["A3t"], ClosureLimits(max_size=20))
    assert row.status == "diverged" and row.family_size is None


def test_diverged_carries_partial_family():
    with pytest.raises(Diverged) as exc:
        compute_minimal_garside(preset("A2t"), ClosureLimits(max_length=2))
    assert len(exc.value.partial.elements) > 3


def test_uncertified_and_non_homogeneous():
    broken = parse_presentation("generators: a b c\nrelations:\naa = ba\naa = ca\nbb = cc\n")
    with pytest.raises(NotCertified):
        compute_minimal_garside(broken)
    with pytest.raises(NotHomogeneous):
        compute_minimal_garside(parse_presentation("generators: a b\nrelations:\nab = b\n"))


def test_element_set_deduplicates(a2t):
    assert len(element_set([words(a2t, "aba"), words(a2t, "bab")], a2t)) == 1
