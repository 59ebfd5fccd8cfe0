from fractions import Fraction

import pytest

import equidist


def test_family_and_check():
    f = equidist.Family(3, 2, [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert len(f) == 4
    cert = equidist.check_equidistant(f)
    assert cert
    assert cert.lambda_ == 2
    assert cert.pair_count == 6

    bad = equidist.Family(2, 2, [[0, 0], [0, 1], [1, 1]])
    violation = equidist.check_equidistant(bad)
    assert not violation
    assert violation.distance != violation.reference_distance


def test_text_round_trip():
    f = equidist.Family(2, 3, [[0, 0], [1, 1], [2, 2]])
    assert equidist.Family.from_text(f.to_text()) == f
    with pytest.raises(equidist.InvalidInput):
        equidist.Family.from_text("2 2\n0 0\n0 0\n")


def test_exact_linalg():
    assert equidist.det_exact([[2, 1], [1, 2]]) == 3
    assert equidist.rank_exact([[1, 2], [2, 4]]) == 1
    assert equidist.structured_det(1, 2, 3) == (2 + 3 * 1) * 2**2
    assert equidist.is_positive_definite_structured(2, 2, 4)
    assert not equidist.is_positive_definite_structured(-1, 4, 4)
    big = 2**70
    assert equidist.det_exact([[big, 0], [0, big]]) == big * big


def test_bounds():
    r = equidist.bound_single_distance(10, 3)
    assert r.bound == 10
    assert r.source == "main_theorem"
    assert r.excluded_value == Fraction(11, 2)
    assert equidist.bound_single_distance(7, 4).bound == 8
    assert equidist.bound_delsarte(20, 2, 20) == 2**20
    c = equidist.conjecture_bound(5, 3, 2)
    assert c.conjectural and c.bound == 10


def test_hadamard_certificate():
    h = equidist.hadamard_of_order(12)
    f = equidist.hadamard_to_family(h)
    cert = equidist.gram_certificate(f)
    assert cert.lambda_ == 6
    assert cert.rank_value == 12
    assert cert.conclusion == "bound_n_proven"
    assert cert.det_value == 12**12
    with pytest.raises(equidist.InvalidInput):
        equidist.hadamard_of_order(28)


def test_quadratic_form():
    f = equidist.hadamard_to_family(equidist.hadamard_sylvester(2))
    mu = [Fraction(1, 2), Fraction(-1, 3), 1, 0]
    value = equidist.quadratic_form_value(f, mu)
    assert value == 4 * sum(x * x for x in mu)


def test_search_and_sweep():
    r = equidist.max_equidistant(3, 2, 2)
    assert r.complete and r.max_size == 4
    assert r.witness.members == [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert equidist.max_equidistant(6, 2, 4, threads=2).max_size == equidist.max_equidistant(6, 2, 4).max_size
    with pytest.raises(equidist.ResourceLimit):
        equidist.max_equidistant(13, 2, 2)

    report = equidist.sweep_theorem(4)
    assert all(row.complete for row in report.rows)
    assert not report.counterexample_flag
    assert report.to_csv().startswith("n,q,lambda,max_size,bound,exceptional,complete,nodes")

    assert len(equidist.enumerate_extremal(4, 2)) >= 1
