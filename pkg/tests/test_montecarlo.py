import numpy as np
import pytest

from elliptic_moments.exceptions import CapacityError, DomainError
from elliptic_moments.models.polynomial import MomentPolynomial
from elliptic_moments.models.word import Word
from elliptic_moments.services.montecarlo_service import GeeSampler, GoeSampler, MonteCarloService


def test_goe_sample_is_symmetric_with_expected_variances(rng: np.random.Generator) -> None:
    dim = 400
    goe = MonteCarloService.sample_goe(dim, rng)
    w = goe.entries
    assert np.allclose(w, w.T)
    off_diagonal = w[np.triu_indices(dim, k=1)]
    assert np.mean(off_diagonal**2) * dim == pytest.approx(1.0, abs=0.03)
    assert np.mean(np.diag(w) ** 2) * dim == pytest.approx(2.0, abs=0.5)


def test_gee_endpoints(rng: np.random.Generator) -> None:
    real = GeeSampler(1.0).sample(50, rng)
    assert np.all(real.imag == 0)
    assert np.allclose(real, real.T)
    imaginary = GeeSampler(-1.0).sample(50, rng)
    assert np.all(imaginary.real == 0)
    with pytest.raises(DomainError):
        GeeSampler(1.5)


@pytest.mark.parametrize("rho", [-0.8, 0.0, 0.3, 0.9])
def test_entry_correlation_recovers_rho(rho: float, rng: np.random.Generator) -> None:
    gee = MonteCarloService.sample_gee(400, rho, rng)
    assert gee.rho == rho
    assert MonteCarloService.entry_correlation(gee.entries) == pytest.approx(rho, abs=0.05)


def test_word_trace_matches_explicit_product(rng: np.random.Generator) -> None:
    x = GeeSampler(0.4).sample(12, rng)
    xd = x.conj().T
    word = Word.parse("xxdxddxxx")
    product = x @ x @ xd @ x @ xd @ xd @ x @ x @ x
    assert MonteCarloService.word_trace(x, word) == pytest.approx(np.trace(product) / 12)
    assert MonteCarloService.word_trace(x, Word.parse("xxx")) == pytest.approx(np.trace(x @ x @ x) / 12)
    assert MonteCarloService.word_trace(x, Word()) == 1


def test_custom_goe_sampler_is_used() -> None:
    class IdentitySampler(GoeSampler):
        def sample(self, dim: int, rng: np.random.Generator) -> np.ndarray:
            return np.eye(dim)

    x = GeeSampler(0.0, goe=IdentitySampler()).sample(3, np.random.default_rng(0))
    expected = np.sqrt(0.5) * (1 + 1j) * np.eye(3)
    assert np.allclose(x, expected)


def test_estimate_is_deterministic_for_a_seed() -> None:
    word = Word.parse("xxdd")
    first = MonteCarloService.estimate_word_moment(word, 0.3, 30, 5, seed=11)
    second = MonteCarloService.estimate_word_moment(word, 0.3, 30, 5, seed=11)
    other = MonteCarloService.estimate_word_moment(word, 0.3, 30, 5, seed=12)
    assert first == second
    assert first.mean != other.mean
    assert first.samples == 5
    assert first.word == "xxdd"


def test_estimate_argument_checks(settings_env) -> None:
    word = Word.parse("xd")
    with pytest.raises(DomainError):
        MonteCarloService.estimate_word_moment(word, 0.3, 10, 1, seed=1)
    with pytest.raises(DomainError):
        MonteCarloService.estimate_word_moment(Word(), 0.3, 10, 4, seed=1)
    settings_env(mc_max_dim=16)
    with pytest.raises(CapacityError):
        MonteCarloService.estimate_word_moment(word, 0.3, 17, 4, seed=1)


def test_exact_polynomial_uses_closed_form_or_oracle() -> None:
    assert MonteCarloService.exact_polynomial(Word.block(6, 2)) == MomentPolynomial(coefficients={2: 9, 4: 5})
    assert MonteCarloService.exact_polynomial(Word.parse("xxdxdxdd")) == MomentPolynomial(coefficients={0: 5, 2: 9})


def test_validate_small_word() -> None:
    outcome = MonteCarloService.validate_word_moment(Word.parse("xd"), 0.3, 100, 20, seed=3)
    assert outcome.exact == pytest.approx(1.0)
    assert outcome.passed
    assert outcome.tolerance >= 0.05
    assert abs(outcome.estimate.imag_mean) <= 5 * outcome.estimate.imag_stderr + 1e-12
    assert outcome.exact_text == "1"


def test_validate_flags_a_wrong_exact_value(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(MonteCarloService, "exact_polynomial", staticmethod(lambda word: MomentPolynomial.monomial(0, 5)))
    outcome = MonteCarloService.validate_word_moment(Word.parse("xd"), 0.3, 50, 10, seed=3)
    assert not outcome.passed
    assert outcome.z < -5


@pytest.mark.slow
@pytest.mark.parametrize("n, m", [(2, 2), (3, 3), (6, 2), (5, 3)])
@pytest.mark.parametrize("rho", [-0.8, -0.3, 0.0, 0.3, 0.8])
def test_desk_grid(n: int, m: int, rho: float) -> None:
    outcome = MonteCarloService.validate_word_moment(Word.block(n, m), rho, 300, 100, seed=2024)
    assert outcome.passed, (outcome.estimate.mean, outcome.exact, outcome.z)
    estimate = outcome.estimate
    assert abs(estimate.imag_mean) <= 5 * estimate.imag_stderr + 1e-12
