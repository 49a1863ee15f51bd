#pragma once

#include <random>
#include <utility>

#include "wigner/spinor.hpp"

namespace wigner::sampling {

using Rng = std::mt19937_64;

/// Uniform direction on the sphere, resampled until 1 + n3 >= pole_floor.
UnitDirection direction(Rng& rng, double pole_floor = 1e-6);

/// Log-uniform positive value in [lo, hi].
double log_uniform(Rng& rng, double lo, double hi);

/// Null momentum (k0, k0 n) with k0 log-uniform in [k0_lo, k0_hi].
FourVector null_momentum(Rng& rng, double k0_lo = 1e-3, double k0_hi = 1e3,
                         double pole_floor = 1e-6);

/// SL(2,C) element with standard complex Gaussian entries normalized to
/// det = 1 (redrawn while |det| < 0.1).
SpinorTransform sl2c(Rng& rng);

SpinorTransform rotation(Rng& rng);

SpinorTransform boost(Rng& rng, double v_max = 0.99);

/// (A, k) with both k and Ak directed away from the south pole.
std::pair<SpinorTransform, FourVector> pole_safe_pair(Rng& rng, double k0_lo = 1e-3,
                                                      double k0_hi = 1e3,
                                                      double pole_floor = 1e-6);

}  // namespace wigner::sampling
