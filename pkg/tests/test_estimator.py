import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from jacobi_modsym.estimator import JacobiCoefficients, check_indices
from conftest import fixture_path


def test_params_and_clone():
    est = JacobiCoefficients(pair=(-4, 12), dmax=30)
    assert est.get_params()["dmax"] == 30
    assert clone(est).get_params() == est.get_params()
    with pytest.raises(NotFittedError):
        est.predict([[-3, 21]])


def test_fit_predict(symbols):
    est = JacobiCoefficients(pair=(-4, 12), dmax=50).fit(symbols["w2m37"])
    got = est.predict(np.array([[-3, 21], [-4, 12], [-7, 57], [-48, 10]]))
    assert list(got) == [1, None, -1, 0]
    assert est.transform([[-3, 21]]).shape == (1, 1)
    with pytest.raises(KeyError):
        est.predict([[-99, 1]])


def test_fit_from_path_and_lift():
    est = JacobiCoefficients(pair=(-4, 12), dmax=300).fit(fixture_path("w2m37.sym"))
    q, rep = est.lift(8, pair=(-3, 21))
    assert [q[n] for n in range(1, 9)] == [1, -2, -3, 2, -2, 6, -1, 0]
    assert rep.passed


def test_check_indices():
    assert check_indices([-3, 21]) == [(-3, 21)]
    with pytest.raises(ValueError):
        check_indices([[1, 2, 3]])
    with pytest.raises(ValueError):
        check_indices([["a", 1]])
