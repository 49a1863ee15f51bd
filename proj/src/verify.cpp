#include "wigner/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "wigner/photon.hpp"
#include "wigner/sampling.hpp"

namespace wigner {

namespace {

using sampling::Rng;

double entry_dev(const complexd& got, const complexd& want) {
    return std::abs(got - want) / std::max(1.0, std::max(std::abs(got), std::abs(want)));
}

double matrix_dev(const Complex2x2& got, const Complex2x2& want) {
    return std::max(std::max(entry_dev(got.m00, want.m00), entry_dev(got.m01, want.m01)),
                    std::max(entry_dev(got.m10, want.m10), entry_dev(got.m11, want.m11)));
}

double lorentz_dev(const LorentzMatrix& got, const LorentzMatrix& want) {
    double scale = 1.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(want.e[i][j]));
    double dev = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) dev = std::max(dev, std::abs(got.e[i][j] - want.e[i][j]));
    return dev / scale;
}

double four_vector_dev(const FourVector& got, const FourVector& want) {
    const double scale = std::max({1.0, std::abs(want.t), std::abs(want.x), std::abs(want.y),
                                   std::abs(want.z)});
    const FourVector d = got - want;
    return std::max(std::max(std::abs(d.t), std::abs(d.x)), std::max(std::abs(d.y), std::abs(d.z))) /
           scale;
}

SpectralProfile sample_profile(Rng& rng, std::size_t points) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int kind = static_cast<int>(u(rng) * 3.0);
    const double lo = 0.2 + 0.3 * u(rng);
    const double hi = lo + 1.0 + u(rng);
    std::vector<double> grid(points);
    std::vector<complexd> amp(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        grid[i] = x;
        const double mid = 0.5 * (lo + hi);
        switch (kind) {
            case 0:  // gaussian bump
                amp[i] = std::exp(-40.0 * (x - mid) * (x - mid));
                break;
            case 1:  // box
                amp[i] = (std::abs(x - mid) < 0.25 * (hi - lo)) ? 1.0 : 0.0;
                break;
            default:  // two peaks
                amp[i] = std::exp(-80.0 * (x - lo - 0.2) * (x - lo - 0.2)) +
                         0.7 * std::exp(-80.0 * (x - hi + 0.2) * (x - hi + 0.2));
        }
    }
    // box profiles can be all-zero on coarse grids; keep a floor
    amp[points / 2] += 1e-3;
    return SpectralProfile(std::move(grid), std::move(amp));
}

PolarizedState sample_state(Rng& rng, std::size_t points = 101) {
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    return PolarizedState(sampling::direction(rng), angle(rng), sample_profile(rng, points));
}

DensityMatrix2 sample_density(Rng& rng) {
    // Bloch ball draw: rho = (I + r . sigma) / 2 is a valid state for |r| <= 1.
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const double r1 = u(rng), r2 = u(rng), r3 = u(rng);
        if (r1 * r1 + r2 * r2 + r3 * r3 > 1.0) continue;
        return DensityMatrix2({{0.5 * (1.0 + r3), 0.0},
                               {0.5 * r1, -0.5 * r2},
                               {0.5 * r1, 0.5 * r2},
                               {0.5 * (1.0 - r3), 0.0}});
    }
}

struct Suite {
    const char* name;
    double tolerance;
    std::function<double(Rng&, std::size_t)> worst_deviation;
};

double suite_null_preservation(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const LorentzMatrix L = lorentz_of_spinor(sampling::sl2c(rng));
        const FourVector k = sampling::null_momentum(rng);
        const FourVector kp = apply_lorentz(L, k);
        if (!(kp.t > 0.0)) return 1.0;
        worst = std::max(worst, std::abs(minkowski_dot(kp, kp)) / (kp.t * kp.t));
    }
    return worst;
}

double suite_dot_bilinearity(Rng& rng, std::size_t trials) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    auto vec = [&] { return FourVector{u(rng), u(rng), u(rng), u(rng)}; };
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const FourVector a = vec(), b = vec(), c = vec();
        const double s = u(rng);
        worst = std::max(worst, std::abs(minkowski_dot(a, b) - minkowski_dot(b, a)));
        worst = std::max(worst, std::abs(minkowski_dot(a * s + c, b) - s * minkowski_dot(a, b) -
                                         minkowski_dot(c, b)));
    }
    return worst;
}

double suite_parallelism(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto [A, k] = sampling::pole_safe_pair(rng);
        const LorentzMatrix L = lorentz_of_spinor(A);
        const double ratio = sampling::log_uniform(rng, 1e-2, 1e2);
        const UnitDirection d1 = direction_of(apply_lorentz(L, k));
        const UnitDirection d2 = direction_of(apply_lorentz(L, k * ratio));
        worst = std::max(worst, std::max(std::abs(d1.n1 - d2.n1),
                                         std::max(std::abs(d1.n2 - d2.n2), std::abs(d1.n3 - d2.n3))));
    }
    return worst;
}

double suite_homomorphism(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const SpinorTransform a = sampling::sl2c(rng);
        const SpinorTransform b = sampling::sl2c(rng);
        worst = std::max(worst, lorentz_dev(lorentz_of_spinor(compose(a, b)),
                                            lorentz_of_spinor(a) * lorentz_of_spinor(b)));
    }
    return worst;
}

double suite_kernel(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const SpinorTransform a = sampling::sl2c(rng);
        const LorentzMatrix lp = lorentz_of_spinor(a);
        const LorentzMatrix lm = lorentz_of_spinor(-a);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(lp.e[i][j] - lm.e[i][j]));
    }
    return worst;
}

double suite_generators(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    const Complex2x2 eye = Complex2x2::identity();
    for (std::size_t t = 0; t < trials; ++t) {
        const SpinorTransform u = sampling::rotation(rng);
        const SpinorTransform b = sampling::boost(rng);
        worst = std::max(worst, (u.adjoint() * u - eye).norm_max());
        worst = std::max(worst, (b - b.adjoint()).norm_max());
        if (!(b.m00.real() > 0.0 && b.trace().real() > 0.0)) return 1.0;  // positive definiteness
        worst = std::max(worst, std::abs(u.det() - complexd{1.0, 0.0}));
        worst = std::max(worst, std::abs(b.det() - complexd{1.0, 0.0}));
    }
    return worst;
}

double suite_action_invariants(Rng& rng, std::size_t trials) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const SpinorTransform a = sampling::sl2c(rng);
        const HermitianMomentum m = hermitian_from_four_vector({u(rng), u(rng), u(rng), u(rng)});
        const HermitianMomentum mp = spinor_act(a, m);
        worst = std::max(worst, (mp - mp.adjoint()).norm_max());
        worst = std::max(worst, std::abs(mp.det() - m.det()) / std::max(1.0, std::abs(m.det())));
    }
    return worst;
}

double suite_round_trip(Rng& rng, std::size_t trials) {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const FourVector k{u(rng), u(rng), u(rng), u(rng)};
        const FourVector back = four_vector_from_hermitian(hermitian_from_four_vector(k));
        const FourVector d = back - k;
        worst = std::max(worst, std::max(std::max(std::abs(d.t), std::abs(d.x)),
                                         std::max(std::abs(d.y), std::abs(d.z))));
    }
    return worst;
}

double suite_shape(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto [A, k] = sampling::pole_safe_pair(rng);
        const SpinorTransform ak = standard_boost(k);
        const SpinorTransform akp = standard_boost(transform_null_momentum(A, k), 1.0);
        const Complex2x2 s = akp.inverse_unimodular() * A * ak;
        worst = std::max(worst, std::abs(s.m10));
        worst = std::max(worst, std::abs(std::abs(s.m00) - 1.0));
        worst = std::max(worst, std::abs(s.m11 - std::conj(s.m00)));
    }
    return worst;
}

double suite_cocycle(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto [a1, k] = sampling::pole_safe_pair(rng);
        const FourVector k1 = transform_null_momentum(a1, k);
        SpinorTransform a2 = sampling::sl2c(rng);
        // keep every stage away from the pole
        for (;;) {
            const AbcCoefficients abc = abc_coefficients(a2, direction_of(k1));
            if (2.0 * abc.b / abc.a >= 1e-6) break;
            a2 = sampling::sl2c(rng);
        }
        const Complex2x2 total = wigner_decompose(compose(a2, a1), k).matrix();
        const Complex2x2 staged =
            wigner_decompose(a2, k1).matrix() * wigner_decompose(a1, k).matrix();
        worst = std::max(worst, matrix_dev(total, staged));
    }
    return worst;
}

double suite_frequency_independence(Rng& rng, std::size_t trials) {
    static constexpr double scales[] = {1e-6, 1e-3, 1.0, 1e3, 1e6};
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto [A, k] = sampling::pole_safe_pair(rng, 1e-1, 1e1);
        const LittleGroupElement base = wigner_decompose(A, k);
        for (const double s : scales) {
            const LittleGroupElement scaled = wigner_decompose(A, k * s);
            worst = std::max(worst, std::abs(scaled.half_phase - base.half_phase));
            worst = std::max(worst, std::abs(scaled.translation * s - base.translation) /
                                        std::max(1e-6, std::abs(base.translation)));
        }
    }
    return worst;
}

double suite_closed_form(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto [A, k] = sampling::pole_safe_pair(rng);
        const LittleGroupElement direct = wigner_decompose(A, k);
        const LittleGroupElement closed = closed_form_little_group(A, k);
        worst = std::max(worst, std::abs(direct.half_phase - closed.half_phase));
        worst = std::max(worst, entry_dev(direct.translation, closed.translation));
    }
    return worst;
}

double suite_rotation_translation(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        SpinorTransform u = sampling::rotation(rng);
        FourVector k = sampling::null_momentum(rng);
        for (;;) {
            const AbcCoefficients abc = abc_coefficients(u, direction_of(k));
            if (2.0 * abc.b / abc.a >= 1e-6) break;
            u = sampling::rotation(rng);
            k = sampling::null_momentum(rng);
        }
        worst = std::max(worst, std::abs(wigner_decompose(u, k).translation));
        worst = std::max(worst, std::abs(closed_form_little_group(u, k).translation));
    }
    return worst;
}

double suite_momentum_routes(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const SpinorTransform a = sampling::sl2c(rng);
        const FourVector k = sampling::null_momentum(rng);
        worst = std::max(worst, four_vector_dev(transform_null_momentum(a, k),
                                                apply_lorentz(lorentz_of_spinor(a), k)));
    }
    return worst;
}

double suite_transform_closure(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const PolarizedState s = sample_state(rng);
        SpinorTransform a = sampling::sl2c(rng);
        for (;;) {
            const AbcCoefficients abc = abc_coefficients(a, s.direction);
            if (2.0 * abc.b / abc.a >= 1e-6) break;
            a = sampling::sl2c(rng);
        }
        const PolarizedState out = transform_state(a, s);
        worst = std::max(worst, std::abs(out.direction.norm() - 1.0));
        if (!(out.pol_angle >= 0.0 && out.pol_angle < std::numbers::pi)) return 1.0;
        worst = std::max(worst, std::abs(out.profile.invariant_norm() - 1.0));
    }
    return worst;
}

double suite_profile_norm(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const SpectralProfile g = sample_profile(rng, 201);
        const SpinorTransform b = sampling::boost(rng, 0.9);
        const double a = abc_coefficients(b, sampling::direction(rng)).a;
        const double before = g.invariant_norm();
        const double after = g.rescaled(a).invariant_norm();
        worst = std::max(worst, std::abs(after - before) / std::max(1e-30, before));
    }
    return worst;
}

double suite_purity(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const PolarizedState s = sample_state(rng);
        const Complex2x2 rho = reduced_density(helicity_field(s)).matrix();
        worst = std::max(worst, (rho * rho - rho).norm_max());
    }
    return worst;
}

double suite_entropy_invariance(Rng& rng, std::size_t trials) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const DensityMatrix2 rho = sample_density(rng);
        const double half_angle = 0.5 * angle(rng);
        const complexd h{std::cos(half_angle), std::sin(half_angle)};
        worst = std::max(worst,
                         std::abs(von_neumann_entropy(transform_density(rho, h)) -
                                  von_neumann_entropy(rho)));
    }
    return worst;
}

double suite_density_covariance(Rng& rng, std::size_t trials) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const PolarizedState s = sample_state(rng);
        SpinorTransform a = sampling::sl2c(rng);
        for (;;) {
            const AbcCoefficients abc = abc_coefficients(a, s.direction);
            if (2.0 * abc.b / abc.a >= 1e-6) break;
            a = sampling::sl2c(rng);
        }
        const UnitDirection n = s.direction;
        const LittleGroupElement lg = wigner_decompose(a, {1.0, n.n1, n.n2, n.n3});
        const Complex2x2 via_state = reduced_density(helicity_field(transform_state(a, s))).matrix();
        const Complex2x2 via_density =
            transform_density(reduced_density(helicity_field(s)), lg.half_phase).matrix();
        worst = std::max(worst, (via_state - via_density).norm_max());
    }
    return worst;
}

double suite_density_validity(Rng& rng, std::size_t trials) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> w(0.1, 2.0);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        HelicityAmplitudeField field;
        const std::size_t samples = 1 + static_cast<std::size_t>((u(rng) + 1.0) * 8.0);
        for (std::size_t i = 0; i < samples; ++i) {
            field.momenta.push_back(sampling::null_momentum(rng));
            field.weights.push_back(w(rng));
            field.amp_plus.push_back({u(rng), u(rng)});
            field.amp_minus.push_back({u(rng), u(rng)});
        }
        field.amp_plus[0] += 0.5;  // guard against an all-zero draw
        const Complex2x2 rho = reduced_density(field).matrix();
        worst = std::max(worst, (rho - rho.adjoint()).norm_max());
        worst = std::max(worst, std::abs(rho.trace() - complexd{1.0, 0.0}));
        const double tr = rho.trace().real();
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * rho.det().real()));
        worst = std::max(worst, std::max(0.0, 0.5 * (tr - disc) * -1.0));
        worst = std::max(worst, std::max(0.0, 0.5 * (tr + disc) - 1.0));
    }
    return worst;
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(std::uint64_t seed, std::size_t trials) {
    const Suite suites[] = {
        {"minkowski.null-preservation", 1e-10, suite_null_preservation},
        {"minkowski.dot-bilinearity", 1e-12, suite_dot_bilinearity},
        {"minkowski.parallelism", 1e-10, suite_parallelism},
        {"spinor.homomorphism", 1e-11, suite_homomorphism},
        {"spinor.kernel", 1e-14, suite_kernel},
        {"spinor.generators", 1e-12, suite_generators},
        {"spinor.action-invariants", 1e-12, suite_action_invariants},
        {"spinor.hermitian-round-trip", 1e-14, suite_round_trip},
        {"little-group.shape", 1e-10, suite_shape},
        {"little-group.cocycle", 1e-10, suite_cocycle},
        {"little-group.frequency-independence", 1e-10, suite_frequency_independence},
        {"little-group.closed-form", 1e-10, suite_closed_form},
        {"little-group.rotation-translation", 1e-10, suite_rotation_translation},
        {"little-group.momentum-routes", 1e-11, suite_momentum_routes},
        {"photon.transform-closure", 1e-8, suite_transform_closure},
        {"photon.profile-norm", 1e-8, suite_profile_norm},
        {"photon.purity", 1e-10, suite_purity},
        {"photon.entropy-invariance", 1e-12, suite_entropy_invariance},
        {"photon.density-covariance", 1e-9, suite_density_covariance},
        {"photon.density-validity", 1e-10, suite_density_validity},
    };

    std::vector<SuiteResult> results;
    std::uint64_t salt = 0;
    for (const Suite& suite : suites) {
        Rng rng(seed + 0x9e3779b97f4a7c15ull * ++salt);
        // photon suites integrate profiles per trial; cap them for speed
        const bool heavy = std::string(suite.name).rfind("photon.", 0) == 0;
        const std::size_t n = heavy ? std::min<std::size_t>(trials, 100) : trials;
        const double dev = suite.worst_deviation(rng, n);
        results.push_back({suite.name, dev, suite.tolerance, n, dev <= suite.tolerance});
    }
    return results;
}

}  // namespace wigner
