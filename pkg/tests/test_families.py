import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tricount.enumeration import enumerate_all
from tricount.families import (
    FamilySpec,
    GenerationFailed,
    build,
    certify,
    closed_form,
    double_circle,
    expected_hull,
    gen_family,
    random_points,
)
from tricount.geometry import convex_hull, general_position_check


def test_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec("double_chain", k=1)
    with pytest.raises(ValueError):
        FamilySpec("double_circle", k=2)
    with pytest.raises(ValueError):
        FamilySpec("convex", n=2)
    with pytest.raises(ValueError):
        FamilySpec("random", n=5)
    with pytest.raises(ValueError):
        FamilySpec("convex", n=5, odd_variant=True)
    with pytest.raises(ValueError):
        FamilySpec("hexagon", n=6)
    assert FamilySpec("random", n=4, seed=3).to_dict() == {"family": "random", "n": 4, "seed": 3,
                                                          "odd_variant": False}


@pytest.mark.parametrize("spec,count", [
    (FamilySpec("double_chain", k=3), 6),
    (FamilySpec("double_circle", k=3), 4),
    (FamilySpec("modified_double_chain", k=4), 150),
])
def test_gen_examples(spec, count):
    ps = gen_family(spec, certify_count=True)
    assert ps.n == spec.size
    assert enumerate_all(ps).count == count


def test_double_circle_hull():
    h = convex_hull(double_circle(3))
    assert (h.b, h.v) == (3, 3)


@pytest.mark.parametrize("family,ks", [
    ("double_chain", range(2, 41)),
    ("double_circle", range(3, 65)),
    ("modified_double_chain", range(3, 41)),
])
def test_construction_scales(family, ks):
    for k in list(ks)[::3]:
        spec = FamilySpec(family, k=k)
        ps = build(spec)
        assert general_position_check(ps) is None
        h = convex_hull(ps)
        assert (h.b, h.v) == expected_hull(spec)


def test_odd_double_circle():
    for k in (3, 4, 5):
        spec = FamilySpec("double_circle", k=k, odd_variant=True)
        ps = gen_family(spec)
        assert ps.n == 2 * k + 1
        rep = certify(spec, ps)
        assert rep["ok"] and "closed_form" not in rep and "enumerated" in rep


def test_certified_counts():
    cases = [FamilySpec("convex", n=n) for n in range(3, 13)]
    cases += [FamilySpec("double_chain", k=k) for k in range(2, 6)]
    cases += [FamilySpec("double_circle", k=k) for k in range(3, 6)]
    cases += [FamilySpec("modified_double_chain", k=k) for k in range(3, 5)]
    for spec in cases:
        rep = certify(spec, build(spec))
        assert rep["ok"] and rep["count_ok"], spec
        assert rep["enumerated"] == str(closed_form(spec))


def test_certification_failure_is_reported(monkeypatch):
    import tricount.families as fam

    monkeypatch.setattr(fam, "expected_hull", lambda spec: (99, 0))
    with pytest.raises(GenerationFailed):
        fam.gen_family(FamilySpec("convex", n=5))


def test_random_is_deterministic():
    a = random_points(9, 42)
    assert a == random_points(9, 42)
    assert a != random_points(9, 43)
    assert all(0 <= c < 2**20 for p in a.points for c in p)


@settings(max_examples=30)
@given(st.integers(3, 15), st.integers(0, 2**64 - 1))
def test_random_in_general_position(n, seed):
    ps = random_points(n, seed)
    assert ps.n == n
    assert general_position_check(ps) is None
