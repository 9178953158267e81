import math

import pytest

import cstarineq


def test_eig_known_pair():
    values, vectors = cstarineq.eig([[2, 1], [1, 2]])
    assert values == pytest.approx([1.0, 3.0], abs=1e-12)
    assert len(vectors) == 2


def test_matrix_power_cube():
    cubed = cstarineq.matrix_power([[2, 1], [1, 2]], 3)
    expected = [[14, 13], [13, 14]]
    for i in range(2):
        for j in range(2):
            assert cubed[i][j].real == pytest.approx(expected[i][j], abs=1e-9)
            assert cubed[i][j].imag == pytest.approx(0.0, abs=1e-12)


def test_counterexamples_fail_as_recorded():
    reports = cstarineq.verify_counterexamples()
    assert len(reports) == 2
    assert not reports[0]["holds"]
    assert not reports[1]["holds"]
    assert reports[0]["difference"][0][0].real == pytest.approx(-2.0426, abs=2e-3)
    assert reports[1]["difference_det"] == pytest.approx(-0.0108, abs=2e-3)


def test_hilbert_family_holds():
    x = [[1 / math.sqrt(2)], [1 / math.sqrt(2)]]
    report = cstarineq.check_hilbert([[1, 0], [0, 3]], x, 2)
    assert report["holds"]
    assert report["lhs"] == pytest.approx(4.0, abs=1e-9)
    assert report["rhs"] == pytest.approx(5.0, abs=1e-9)


def test_search_is_deterministic():
    first = cstarineq.search(dim=2, r_min=2.5, r_max=3.5, trials=200, seed=7)
    second = cstarineq.search(dim=2, r_min=2.5, r_max=3.5, trials=200, seed=7)
    assert first == second


def test_gns_transport_faithful_state():
    rho = [[0.5, 0], [0, 0.5]]
    result = cstarineq.gns_transport(2, 2, rho, [[2, 1], [1, 2]], "pow:3")
    assert result["dim_quotient"] == 4
    assert result["pass"]
    assert result["operator_norm_induced"] <= result["operator_norm_t"] + 1e-8


def test_supporting_line_square():
    line = cstarineq.supporting_line("pow:2", 0.0, 2.0, 1.0, 1e-4)
    assert line["min_margin"] >= 0.0
    assert line["touch_gap"] < 1e-4


def test_errors_surface_as_python_exceptions():
    with pytest.raises(cstarineq.CstarineqError):
        cstarineq.matrix_power([[0, 1], [1, 0]], 0.5)
