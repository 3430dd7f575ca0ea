""" constants """

# Monte Carlo acceptance: |mean - exact| <= max(Z_LIMIT * stderr, RELATIVE_TOLERANCE * max(1, |exact|))
Z_LIMIT = 5.0
RELATIVE_TOLERANCE = 0.05

# y* / gaussian-width thresholds separating the asymptotic regimes
SADDLE_REGIME_RATIO = 3.0
HALF_GAUSSIAN_REGIME_RATIO = 1.0 / 3.0

# Order of the leading columns in every figure-data table
FIGURE_COLUMNS = ["rho", "n", "m", "exact", "normalized", "estimate", "ratio"]
ASYMPTOTIC_EXTRA_COLUMNS = ["v", "q", "phi", "psi", "regime"]
MONTECARLO_EXTRA_COLUMNS = ["stderr", "z", "passed"]

PLAIN_CHAR = "x"
DAGGER_CHAR = "d"
