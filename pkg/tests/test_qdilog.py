import cmath
import math

import pytest

from tqc.qdilog import (
    QDParams,
    QuadratureError,
    check_grid,
    functional_residuals,
    log_psi_direct,
    psi_at_zero_closed_form,
    psi_b,
    psi_b_detailed,
    zeta_const,
)


@pytest.mark.parametrize("x", [-3.0, -1.0, 0.0, 0.5, 2.0])
def test_unitarity_on_real_line(x):
    assert abs(abs(psi_b(x, 0.7)) - 1) < 1e-8


def test_value_at_zero():
    p = QDParams(b=0.7)
    v = psi_b(0.0, p)
    assert abs(psi_b(0.0, p.doubled()) - v) < 1e-9
    assert abs(v - psi_at_zero_closed_form(0.7)) < 1e-9


def test_functional_equations_at_sample_point():
    res_b, res_inv = functional_residuals(0.3, 0.8)
    assert res_b < 1e-6 and res_inv < 1e-6


def test_grid():
    rep = check_grid()
    assert rep["ok"], rep["worst"]
    assert len(rep["rows"]) == 10


def test_b_inverse_symmetry():
    for z in (0.2, -0.7 + 0.1j):
        assert abs(psi_b(z, 0.7) - psi_b(z, 1 / 0.7)) < 1e-9


def test_far_from_strip_uses_shifts():
    p = QDParams(b=0.9)
    z = 0.2 + 2.5j
    v = psi_b_detailed(z, p)
    assert v.shifts > 0
    # the direct integral is not available there, so compare against the functional equation one step in
    s = 0.9
    inner = psi_b(z - 1j * s, p)
    assert abs(v.value * (1 + cmath.exp(2 * math.pi * s * (z - 0.5j * s))) - inner) < 1e-8


def test_direct_quadrature_refuses_slow_tail():
    with pytest.raises(QuadratureError):
        log_psi_direct(0.0 + 0.999j, QDParams(b=1.0))


def test_too_many_shifts():
    with pytest.raises(QuadratureError):
        psi_b(200j, QDParams(b=1.0))


def test_params_validation():
    with pytest.raises(ValueError):
        QDParams(b=0)
    with pytest.raises(ValueError):
        QDParams(b=1.0, r=4.0)
    with pytest.raises(ValueError):
        QDParams(b=1.0, W=0.05)


def test_zeta_const():
    assert abs(zeta_const(1.0) - cmath.exp(-1j * math.pi / 3)) < 1e-15
    for b in (0.3, 0.7, 1.1, 2.5):
        assert abs(abs(zeta_const(b)) - 1) < 1e-15
        assert abs(zeta_const(b) - zeta_const(1 / b)) < 1e-14


def test_json_fields():
    d = psi_b_detailed(0.3 + 0.1j, 0.7).to_json()
    assert set(d) >= {"re", "im", "abs", "est_error"}
    assert d["est_error"] < 1e-8
