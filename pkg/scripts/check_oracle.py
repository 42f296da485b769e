"""
Compare the assistance oracle against the closed forms on random Schmidt samples
"""

import sys

import numpy as np

from qmonogamy.measures import EoaConfig, family_correlations_teoa2, numeric_correlations_teoa2
from qmonogamy.verify import sample_schmidt_params, family_residual


def main(samples: int = 20, restarts: int = 8) -> None:
    config = EoaConfig(restarts=restarts)
    residuals = []
    for index in range(samples):
        params = sample_schmidt_params(np.random.default_rng([0, index]))
        analytic = family_correlations_teoa2(params)
        numeric = numeric_correlations_teoa2(params, config, seed=index)
        residuals.append(family_residual(analytic, numeric))
        print(f"sample {index}: analytic {analytic.pairwise_sorted()} numeric {numeric.pairwise_sorted()}")
    print(f"max residual {max(residuals):.3e}, median {float(np.median(residuals)):.3e}")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:3]))
