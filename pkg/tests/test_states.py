import numpy as np
import numpy.testing as nm
import pytest

from mpmi.errors import (InvariantViolationError, BadShapeError,
                         BadSubsystemSetError, BadNormError,
                         LengthMismatchError, BadArityError,
                         BadParameterError, BadDistributionError,
                         TooManyOutcomesError, BadRankError,
                         ShapeMismatchError)
from mpmi.linalg import hermitian_eigvals, hermitian_eig, matrix_log2, kron
import mpmi.states as st

def test_system_shape():
    shape = st.SystemShape([2, 3, 2])
    assert shape.n == 3
    assert shape.dim == 12
    assert st.SystemShape(4) == (4,)

    with pytest.raises(BadShapeError):
        st.SystemShape([2, 1])

    with pytest.raises(BadShapeError):
        st.SystemShape([])

def test_make_subsystem_set():
    assert st.make_subsystem_set([3, 1], 3) == (1, 3)
    assert st.make_subsystem_set(2, 3) == (2,)
    assert st.complement((1, 3), 4) == (2, 4)

    for indices in ([], [1, 1], [0], [4]):
        with pytest.raises(BadSubsystemSetError):
            st.make_subsystem_set(indices, 3)

def test_density_operator_invariants():
    rho = st.DensityOperator(np.diag([1.0, 0.0]), [2])
    assert rho.n == 1
    assert rho.dim == 2
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 0.5

    with pytest.raises(InvariantViolationError) as exc:
        st.DensityOperator(np.diag([0.49, 0.49]), [2])
    assert exc.value.invariant == 'trace'
    assert abs(exc.value.magnitude - 0.02) < 1e-12

    with pytest.raises(InvariantViolationError) as exc:
        st.DensityOperator(np.array([[0.5, 0.1], [0.0, 0.5]]), [2])
    assert exc.value.invariant == 'hermitian'

    with pytest.raises(InvariantViolationError) as exc:
        st.DensityOperator(np.diag([1.5, -0.5]), [2])
    assert exc.value.invariant == 'positivity'
    assert abs(exc.value.magnitude - 0.5) < 1e-12

    with pytest.raises(InvariantViolationError) as exc:
        st.DensityOperator(np.eye(3) / 3, [2, 2])
    assert exc.value.invariant == 'dimension'

    with pytest.raises(InvariantViolationError) as exc:
        st.DensityOperator(np.diag([np.nan, 1.0]), [2])
    assert exc.value.invariant == 'finite'

def test_from_pure():
    rho = st.from_pure([2], [0.6, 0.8j])
    nm.assert_allclose(rho.matrix, [[0.36, -0.48j], [0.48j, 0.64]],
                       atol=1e-15)

    with pytest.raises(LengthMismatchError):
        st.from_pure([2, 2], [1.0, 0.0])

    with pytest.raises(BadNormError):
        st.from_pure([2], [1.0, 1.0])

def test_partial_trace_ghz():
    rho = st.ghz(3)
    pair = st.partial_trace(rho, [1, 2])
    assert tuple(pair.shape) == (2, 2)
    nm.assert_allclose(pair.matrix, np.diag([0.5, 0.0, 0.0, 0.5]),
                       atol=1e-15)

    single = st.trace_out(rho, [2, 3])
    nm.assert_allclose(single.matrix, np.eye(2) / 2, atol=1e-15)

    assert st.partial_trace(rho, [1, 2, 3]) is rho

    with pytest.raises(BadSubsystemSetError):
        st.trace_out(rho, [1, 2, 3])

    with pytest.raises(BadSubsystemSetError):
        st.partial_trace(rho, [0])

def test_partial_trace_product():
    parts = [st.random_mixed(dim, dim, seed) for seed, dim
             in enumerate((2, 3, 2))]
    rho = st.tensor(parts)
    assert tuple(rho.shape) == (2, 3, 2)

    for ii, part in enumerate(parts):
        nm.assert_allclose(st.partial_trace(rho, ii + 1).matrix, part.matrix,
                           atol=1e-14)

    # The kept subsystems stay in their original order.
    nm.assert_allclose(st.partial_trace(rho, [3, 1]).matrix,
                       np.kron(parts[0].matrix, parts[2].matrix), atol=1e-14)

def test_tensor_factors():
    parts = [st.maximally_mixed(2), st.maximally_mixed(3)]
    rho = st.tensor(parts)
    assert rho.factors == tuple(parts)

    # Nested products are flattened.
    rho = st.tensor([rho, st.maximally_mixed(2)])
    assert [tuple(factor.shape) for factor in rho.factors] == [(2,), (3,),
                                                               (2,)]

    # Entangled parts leave the factors unknown.
    assert st.tensor([st.bell(), st.maximally_mixed(2)]).factors is None
    assert st.ghz(3).factors is None

def test_partial_trace_composition():
    for seed in range(5):
        rho = st.random_mixed((2, 3, 2), 12, seed)
        reduced = st.partial_trace(rho, [1, 2])
        assert abs(np.trace(reduced.matrix) - 1.0) <= 1e-10
        nm.assert_allclose(st.partial_trace(reduced, [1]).matrix,
                           st.partial_trace(rho, [1]).matrix, atol=1e-10)

def test_named_states():
    nm.assert_allclose(st.bell().matrix, st.ghz(2).matrix)

    w3 = st.w3()
    nm.assert_allclose(np.diag(w3.matrix).real,
                       np.array([0, 1, 1, 0, 1, 0, 0, 0]) / 3.0, atol=1e-15)

    mix = st.wghz_mixture(0.25)
    nm.assert_allclose(mix.matrix,
                       0.25 * w3.matrix + 0.75 * st.ghz(3).matrix,
                       atol=1e-15)

    nm.assert_allclose(st.wghz_mixture(0.0).matrix, st.ghz(3).matrix)

    pbell = st.product_bell()
    nm.assert_allclose(pbell.matrix,
                       np.kron(np.eye(2) / 2, st.bell().matrix), atol=1e-15)

    with pytest.raises(BadArityError):
        st.ghz(1)

    with pytest.raises(BadParameterError):
        st.wghz_mixture(1.5)

    with pytest.raises(BadArityError):
        st.tensor([])

def test_classical_chi():
    chi = st.classical_chi([0.5, 0.25, 0.25], (3, 3, 3))
    diag = np.diag(chi.matrix).real
    assert diag[0] == 0.5
    assert diag[13] == 0.25
    assert diag[26] == 0.25
    assert abs(diag.sum() - 1.0) < 1e-15

    with pytest.raises(BadDistributionError):
        st.classical_chi([0.5, 0.4], (2, 2, 2))

    with pytest.raises(BadDistributionError):
        st.classical_chi([1.5, -0.5], (2, 2, 2))

    with pytest.raises(TooManyOutcomesError):
        st.classical_chi([0.5, 0.25, 0.25], (2, 3, 3))

def test_random_states():
    psi1 = st.random_pure((2, 2, 2), 1)
    psi2 = st.random_pure((2, 2, 2), 1)
    nm.assert_array_equal(psi1.matrix, psi2.matrix)
    assert abs(np.trace(psi1.matrix @ psi1.matrix) - 1.0) < 1e-12

    for rank in (1, 3, 8):
        rho = st.random_mixed((2, 2, 2), rank, 7)
        vals = hermitian_eigvals(rho.matrix)
        assert np.sum(vals > 1e-12) == rank

    with pytest.raises(BadRankError):
        st.random_mixed((2, 2), 5, 0)

    with pytest.raises(BadRankError):
        st.random_mixed((2, 2), 0, 0)

    rho = st.random_product((2, 3), 3)
    nm.assert_allclose(rho.matrix,
                       np.kron(st.partial_trace(rho, 1).matrix,
                               st.partial_trace(rho, 2).matrix), atol=1e-14)

def test_apply_local_channel():
    dephasing = [np.diag([1.0, 0.0]), np.diag([0.0, 1.0])]
    rho = st.apply_local_channel(st.ghz(3), dephasing, 1)
    nm.assert_allclose(rho.matrix,
                       st.classical_chi([0.5, 0.5], (2, 2, 2)).matrix,
                       atol=1e-15)

    identity = [np.eye(3)]
    sigma = st.random_mixed((2, 3), 6, 5)
    nm.assert_allclose(st.apply_local_channel(sigma, identity, 2).matrix,
                       sigma.matrix, atol=1e-15)

    with pytest.raises(ShapeMismatchError):
        st.apply_local_channel(sigma, identity, 1)

def test_operator_identity_on_extension():
    """
    tr(chi_12 f(I (x) xi)) = tr(chi_2 f(xi)) for f = log2.
    """
    for seed in range(10):
        rho = st.random_mixed((2, 3), 6, seed)
        xi = st.random_mixed(3, 3, 100 + seed).matrix

        lhs = np.trace(rho.matrix
                       @ matrix_log2(hermitian_eig(kron(np.eye(2), xi))))
        rhs = np.trace(st.partial_trace(rho, 2).matrix
                       @ matrix_log2(hermitian_eig(xi)))
        assert abs(lhs - rhs) < 1e-10
