import math

import pytest

import zonedet
from zonedet import generators


def test_two_by_two_example():
    m = generators.example_2x2(0.5j)
    report = zonedet.zone_expansion(m, block_size=1, order=2, rho="power")
    assert report["deltas"][0] == 0
    assert report["deltas"][2] == pytest.approx(0.25)
    assert report["skipped_orders"] == [1]
    assert report["rho"] == pytest.approx(0.5, rel=1e-6)
    ln_abs, phase = zonedet.dense_logdet(m)
    assert ln_abs == pytest.approx(math.log(1.25))
    assert phase == pytest.approx(0.0)


def test_laplacian_block_diagonal_error():
    m = generators.laplacian_2d(30)
    report = zonedet.zone_expansion(m, block_size=30, order=0, rho="none")
    exact = generators.laplacian_2d_logdet_exact(30)
    assert abs(report["deltas"][0].real - exact) == pytest.approx(122.4966, abs=0.05)
    assert report["rho"] is None
    assert report["bounds"] == []


def test_spai_toeplitz_and_sandwich():
    t = generators.toeplitz_tridiag(100)
    assert zonedet.spai_logdet(t)["ln_sigma"] == pytest.approx(math.log(2) + 99 * math.log(1.5))
    h = generators.hpd_random(30, 5, 0.5)
    det = zonedet.dense_logdet(h)[0]
    sigma = zonedet.spai_logdet(h)["ln_sigma"]
    assert det <= sigma + 1e-10 <= zonedet.hadamard_logdet(h) + 2e-10


def test_matrix_roundtrip_and_construction():
    m = zonedet.SparseMatrix(2, [0, 0, 1], [0, 0, 1], [1.0, 2.0, 1j])
    assert m.nnz == 2
    assert m.at(0, 0) == 3
    text = zonedet.write_matrix_market(m, ["smoke"])
    assert zonedet.read_matrix_market(text) == m


def test_errors_are_translated():
    with pytest.raises(zonedet.ZonedetError, match="RhoNotLessThanOne"):
        zonedet.bound_constant(4, 1.0)
    with pytest.raises(zonedet.ZonedetError):
        zonedet.zone_expansion(zonedet.SparseMatrix.identity(4))
    bad = generators.example_2x2(3)
    with pytest.raises(zonedet.ZonedetError, match="CholeskyBreakdown"):
        zonedet.spai_logdet(bad)
