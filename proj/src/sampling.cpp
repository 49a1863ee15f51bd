#include "wigner/sampling.hpp"

#include <cmath>
#include <numbers>

#include "wigner/little_group.hpp"

namespace wigner::sampling {

UnitDirection direction(Rng& rng, double pole_floor) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (;;) {
        const double n3 = 2.0 * u01(rng) - 1.0;
        if (1.0 + n3 < pole_floor) continue;
        const double r = std::sqrt(std::max(0.0, 1.0 - n3 * n3));
        const double phi = angle(rng);
        return {r * std::cos(phi), r * std::sin(phi), n3};
    }
}

double log_uniform(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

FourVector null_momentum(Rng& rng, double k0_lo, double k0_hi, double pole_floor) {
    const UnitDirection n = direction(rng, pole_floor);
    const double k0 = log_uniform(rng, k0_lo, k0_hi);
    return {k0, k0 * n.n1, k0 * n.n2, k0 * n.n3};
}

SpinorTransform sl2c(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    for (;;) {
        const Complex2x2 raw{{g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}};
        const complexd det = raw.det();
        if (std::abs(det) < 0.1) continue;
        const complexd scale = 1.0 / std::sqrt(det);
        return raw * scale;
    }
}

SpinorTransform rotation(Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    return make_rotation(direction(rng, 0.0), angle(rng));
}

SpinorTransform boost(Rng& rng, double v_max) {
    std::uniform_real_distribution<double> mag(0.0, v_max);
    const UnitDirection e = direction(rng, 0.0);
    const double v = mag(rng);
    return make_boost(v * e.n1, v * e.n2, v * e.n3);
}

std::pair<SpinorTransform, FourVector> pole_safe_pair(Rng& rng, double k0_lo, double k0_hi,
                                                      double pole_floor) {
    for (;;) {
        const SpinorTransform a = sl2c(rng);
        const FourVector k = null_momentum(rng, k0_lo, k0_hi, pole_floor);
        const AbcCoefficients abc = abc_coefficients(a, direction_of(k));
        if (2.0 * abc.b / abc.a >= pole_floor) return {a, k};
    }
}

}  // namespace wigner::sampling
