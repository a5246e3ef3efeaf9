import os
import pathlib

import numpy as np
import pytest

import gelfem

NV, CHI = 1e-3, 0.1
LAMBDA0_AT_ZERO = 3.3899539544948045329
SOURCE = pathlib.Path(os.environ.get("GELFEM_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


def test_free_swelling_stretch():
    assert gelfem.solve_free_swelling_stretch(NV, CHI, 0.0) == pytest.approx(LAMBDA0_AT_ZERO, rel=1e-12)
    lam = gelfem.free_swelling_curve(NV, CHI, np.linspace(-0.05, 0.0, 5))
    assert np.all(np.diff(lam) > 0)


def test_bad_parameters_raise_value_error():
    with pytest.raises(ValueError):
        gelfem.solve_free_swelling_stretch(NV, CHI, 0.1)


def test_material_point():
    p = gelfem.MaterialParams.at_reference(NV, CHI, -0.05)
    S, D, W = gelfem.stress_and_tangent(p, np.eye(3))
    assert S.shape == (6,) and D.shape == (6, 6)
    assert np.max(np.abs(S)) < 1e-10
    assert np.allclose(D, D.T)
    assert W == pytest.approx(gelfem.energy(p, np.eye(3)))


def test_uniaxial_closed_form_and_bar():
    l1 = 1.1 * LAMBDA0_AT_ZERO
    l2 = gelfem.uniaxial_transverse_stretch(NV, CHI, 0.0, l1)
    assert l2 == pytest.approx(3.312984066740996255, rel=1e-12)
    rows = gelfem.run_uniaxial(NV, CHI, 0.0, [l1], control="force")
    assert rows[0]["rel_error"] < 1e-6
    assert rows[0]["transverse_stress_fe"] < 1e-8


def test_mesh_and_free_swell():
    nodes, cells = gelfem.generate_cube_mesh(2, 1, 1, 2.0)
    assert nodes.shape == (12, 3) and cells.shape == (2, 8)
    rows = gelfem.run_free_swell(NV, CHI, list(np.linspace(-0.05, 0.0, 10)))
    assert len(rows) == 10
    assert max(r["rel_error"] for r in rows) < 1e-6


def test_run_model_file():
    states = gelfem.run_model(SOURCE / "models" / "free_swell_cube.json")
    assert len(states) == 11
    assert states[-1]["mu_bar"] == 0.0
    assert states[-1]["residual_history"][-1] < 1e-10
