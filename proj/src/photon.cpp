#include "wigner/photon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

double wrap_polarization_angle(double phi) {
    double w = std::fmod(phi, std::numbers::pi);
    if (w < 0.0) w += std::numbers::pi;
    return w;
}

}  // namespace

std::vector<double> quadrature_weights(const std::vector<double>& grid, QuadratureRule rule) {
    const std::size_t n = grid.size();
    std::vector<double> w(n, 0.0);
    if (n == 1) {
        w[0] = 1.0;  // delta convention for single-sample profiles
        return w;
    }
    if (rule == QuadratureRule::Trapezoid || n == 2) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double h = grid[i + 1] - grid[i];
            w[i] += 0.5 * h;
            w[i + 1] += 0.5 * h;
        }
        return w;
    }
    // Composite Simpson over interval pairs, allowing non-uniform spacing.
    std::size_t i = 0;
    const std::size_t intervals = n - 1;
    while (i + 2 <= intervals) {
        const double h0 = grid[i + 1] - grid[i];
        const double h1 = grid[i + 2] - grid[i + 1];
        const double common = (h0 + h1) / 6.0;
        w[i] += common * (2.0 - h1 / h0);
        w[i + 1] += common * (h0 + h1) * (h0 + h1) / (h0 * h1);
        w[i + 2] += common * (2.0 - h0 / h1);
        i += 2;
    }
    if (i < intervals) {
        // Odd interval count: quadratic through the last three points,
        // integrated over the final interval only.
        const double h0 = grid[n - 2] - grid[n - 3];
        const double h1 = grid[n - 1] - grid[n - 2];
        w[n - 1] += (2.0 * h1 * h1 + 3.0 * h0 * h1) / (6.0 * (h0 + h1));
        w[n - 2] += (h1 * h1 + 3.0 * h1 * h0) / (6.0 * h0);
        w[n - 3] -= h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
    }
    return w;
}

SpectralProfile::SpectralProfile(std::vector<double> grid, std::vector<complexd> amplitude,
                                 QuadratureRule rule)
    : grid_(std::move(grid)), amplitude_(std::move(amplitude)), rule_(rule) {
    if (grid_.empty() || grid_.size() != amplitude_.size()) {
        throw std::invalid_argument("profile needs matching, nonempty grid and amplitudes");
    }
    double prev = 0.0;
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        if (!(grid_[i] > prev) || !std::isfinite(grid_[i])) {
            throw std::invalid_argument("profile grid must be positive and strictly increasing");
        }
        if (!std::isfinite(amplitude_[i].real()) || !std::isfinite(amplitude_[i].imag())) {
            throw std::invalid_argument("profile amplitudes must be finite");
        }
        prev = grid_[i];
    }
}

double SpectralProfile::invariant_norm() const {
    const std::vector<double> w = quadrature_weights(grid_, rule_);
    double norm = 0.0;
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        norm += w[i] * 2.0 * grid_[i] * std::norm(amplitude_[i]);
    }
    return norm;
}

SpectralProfile SpectralProfile::normalized() const {
    const double norm = invariant_norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DomainError(ErrorKind::ZeroState, "spectral profile has zero invariant norm");
    }
    const double scale = 1.0 / std::sqrt(norm);
    std::vector<complexd> amp = amplitude_;
    for (auto& a : amp) a *= scale;
    return SpectralProfile(grid_, std::move(amp), rule_);
}

SpectralProfile SpectralProfile::rescaled(double a) const {
    if (!(a > 0.0)) {
        throw std::invalid_argument("rescale factor a must be positive");
    }
    const double s = 0.5 * a;
    std::vector<double> grid = grid_;
    std::vector<complexd> amp = amplitude_;
    for (auto& x : grid) x *= s;
    for (auto& g : amp) g /= s;
    return SpectralProfile(std::move(grid), std::move(amp), rule_);
}

PolarizedState::PolarizedState(UnitDirection dir, double angle, SpectralProfile prof)
    : direction(dir), pol_angle(wrap_polarization_angle(angle)), profile(prof.normalized()) {
    if (std::abs(direction.norm() - 1.0) > tol::unit_axis) {
        throw DomainError(ErrorKind::BadAxis, "propagation direction must be a unit vector");
    }
}

DensityMatrix2::DensityMatrix2(const Complex2x2& m, double tol) : m_(m) {
    if (!is_hermitian(m, tol) || std::abs(m.trace() - complexd{1.0, 0.0}) > tol) {
        throw std::invalid_argument("density matrix must be Hermitian with unit trace");
    }
    const double tr = m.trace().real();
    const double det = m.det().real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    if (0.5 * (tr - disc) < -tol || 0.5 * (tr + disc) > 1.0 + tol) {
        throw std::invalid_argument("density matrix eigenvalues must lie in [0, 1]");
    }
}

std::pair<double, double> DensityMatrix2::eigenvalues() const {
    const double tr = m_.trace().real();
    const double det = m_.det().real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    auto clamp01 = [](double v) { return std::min(1.0, std::max(0.0, v)); };
    return {clamp01(0.5 * (tr + disc)), clamp01(0.5 * (tr - disc))};
}

HelicityAmplitudeField monochromatic_state(const FourVector& k, double phi, double null_tol) {
    if (!is_null(k, null_tol)) {
        throw DomainError(ErrorKind::NotNull, "photon momentum must be null with k0 > 0");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {{k},
            {1.0},
            {complexd{std::cos(phi), std::sin(phi)} * inv_sqrt2},
            {complexd{std::cos(phi), -std::sin(phi)} * inv_sqrt2}};
}

HelicityAmplitudeField helicity_field(const PolarizedState& state) {
    const auto& grid = state.profile.grid();
    const auto& amp = state.profile.amplitude();
    const std::vector<double> w = quadrature_weights(grid, state.profile.rule());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const complexd plus_phase{std::cos(state.pol_angle), std::sin(state.pol_angle)};
    const complexd minus_phase = std::conj(plus_phase);

    HelicityAmplitudeField field;
    field.momenta.reserve(grid.size());
    field.weights.reserve(grid.size());
    field.amp_plus.reserve(grid.size());
    field.amp_minus.reserve(grid.size());
    const UnitDirection n = state.direction;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        field.momenta.push_back({x, x * n.n1, x * n.n2, x * n.n3});
        field.weights.push_back(w[i] * 2.0 * x);  // invariant measure along the ray
        field.amp_plus.push_back(amp[i] * plus_phase * inv_sqrt2);
        field.amp_minus.push_back(amp[i] * minus_phase * inv_sqrt2);
    }
    return field;
}

PolarizedState transform_state(const SpinorTransform& A, const PolarizedState& state,
                               double pole_eps) {
    const UnitDirection n = state.direction;
    const FourVector unit_k{1.0, n.n1, n.n2, n.n3};
    const LittleGroupElement lg = wigner_decompose(A, unit_k, tol::null_rel, pole_eps);
    const double psi = std::arg(lg.phase_factor());
    const double a = abc_coefficients(A, n).a;
    const FourVector kp = transform_null_momentum(A, unit_k);
    return PolarizedState(direction_of(kp), state.pol_angle + psi, state.profile.rescaled(a));
}

DensityMatrix2 reduced_density(const HelicityAmplitudeField& field) {
    if (field.momenta.empty() || field.momenta.size() != field.weights.size() ||
        field.momenta.size() != field.amp_plus.size() ||
        field.momenta.size() != field.amp_minus.size()) {
        throw std::invalid_argument("helicity field needs matching nonempty sample arrays");
    }
    complexd pp{0.0, 0.0}, mm{0.0, 0.0}, pm{0.0, 0.0};
    for (std::size_t i = 0; i < field.momenta.size(); ++i) {
        const double w = field.weights[i];
        if (!(w > 0.0)) {
            throw std::invalid_argument("helicity field weights must be positive");
        }
        pp += w * field.amp_plus[i] * std::conj(field.amp_plus[i]);
        mm += w * field.amp_minus[i] * std::conj(field.amp_minus[i]);
        pm += w * field.amp_plus[i] * std::conj(field.amp_minus[i]);
    }
    const double denom = pp.real() + mm.real();
    if (!(denom > 0.0)) {
        throw DomainError(ErrorKind::ZeroState, "helicity field has zero norm");
    }
    const double inv = 1.0 / denom;
    return DensityMatrix2({pp * inv, pm * inv, std::conj(pm) * inv, mm * inv});
}

DensityMatrix2 transform_density(const DensityMatrix2& rho, const complexd& half_phase) {
    if (std::abs(std::abs(half_phase) - 1.0) > tol::unimodular) {
        throw DomainError(ErrorKind::BadPhase, "half_phase must have unit modulus");
    }
    const complexd phase = half_phase * half_phase;          // e^{i psi}
    const complexd phase2 = phase * phase;                   // e^{2 i psi}
    const Complex2x2& m = rho.matrix();
    return DensityMatrix2({m.m00, m.m01 * phase2, m.m10 * std::conj(phase2), m.m11});
}

double von_neumann_entropy(const DensityMatrix2& rho) {
    const auto [hi, lo] = rho.eigenvalues();
    auto term = [](double v) { return v > 0.0 ? -v * std::log(v) : 0.0; };
    return term(hi) + term(lo);
}

}  // namespace wigner
