import pytest

from ascurve.arith import parse_poly
from ascurve.bounds import lower_bound_single
from ascurve.families import FamilyError, FamilyId, family_poly, family_verify


def test_polys():
    assert family_poly(FamilyId("bc-minus", 3)).f == parse_poly(3, "-x^8 - x^4")
    assert family_poly(FamilyId("bc-plus", 3)).f == parse_poly(3, "-x^10 - x^8")
    assert family_poly(FamilyId("experiment", 3, n=2)).f == parse_poly(3, "-x^17 - x^10")
    assert family_poly(FamilyId("experiment", 5, n=1)) == family_poly(FamilyId("bc-minus", 5))
    f = family_poly(FamilyId("farnell", 7), seed=1).f
    assert f.degree == 6
    assert family_poly(FamilyId("farnell", 7), seed=1).f == f


def test_coefficients_are_reduced():
    f = family_poly(FamilyId("bc-plus", 11)).f
    assert f.terms() == {122: 10, 72: 10}


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(name="nope", p=3),
        dict(name="bc-minus", p=9),
        dict(name="experiment", p=3),
        dict(name="experiment", p=3, n=0),
        dict(name="bc-plus", p=3, n=2),
        dict(name="bc-plus", p=3, deg=8),
    ],
)
def test_bad_ids(kwargs):
    with pytest.raises(FamilyError):
        FamilyId(**kwargs)


def test_farnell_rejects_wrong_degree():
    with pytest.raises(FamilyError):
        family_verify(FamilyId("farnell", 5), poly=parse_poly(5, "x^3 + 1"))


@pytest.mark.parametrize("name", ["bc-minus", "bc-plus"])
@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_bc_attains(name, p):
    r = family_verify(FamilyId(name, p))
    assert r.attains_lower and r.a_number == lower_bound_single(p, r.d)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_farnell_random(p, rng):
    for _ in range(25):
        r = family_verify(FamilyId("farnell", p), seed=int(rng.integers(2**32)))
        assert r.a_number == (p - 1) ** 2 // 4 == r.lower_bound


def test_farnell_supplied():
    r = family_verify(FamilyId("farnell", 5), poly=parse_poly(5, "3*x^4 + x^2"))
    assert r.a_number == 4 and r.attains_lower


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_experiment_small(p, n):
    assert family_verify(FamilyId("experiment", p, n=n)).attains_lower
