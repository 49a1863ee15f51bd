#pragma once

#include <vector>

#include "wigner/little_group.hpp"

namespace wigner {

enum class QuadratureRule { Simpson, Trapezoid };

/// Quadrature weights for samples on a (not necessarily uniform) strictly
/// increasing grid. Simpson fits quadratics over interval pairs, with a
/// three-point end correction when the interval count is odd; a single
/// sample gets unit weight (delta convention).
std::vector<double> quadrature_weights(const std::vector<double>& grid, QuadratureRule rule);

/// Sampled spectral amplitude g(|k|) on a strictly increasing grid of
/// positive frequencies.
class SpectralProfile {
  public:
    SpectralProfile(std::vector<double> grid, std::vector<complexd> amplitude,
                    QuadratureRule rule = QuadratureRule::Simpson);

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<complexd>& amplitude() const { return amplitude_; }
    QuadratureRule rule() const { return rule_; }
    std::size_t size() const { return grid_.size(); }

    /// Invariant norm integral(2 x |g(x)|^2 dx) under the profile's rule.
    double invariant_norm() const;

    /// Profile rescaled to unit invariant norm; throws ZeroState when the
    /// norm vanishes.
    SpectralProfile normalized() const;

    /// Image profile under a momentum rescaling k'^0 = (a/2) k^0:
    /// grid scaled by a/2 and amplitudes by 2/a, i.e. g'(x) = (2/a) g(2x/a)
    /// sampled on the image grid. Exactly norm-preserving.
    SpectralProfile rescaled(double a) const;

  private:
    std::vector<double> grid_;
    std::vector<complexd> amplitude_;
    QuadratureRule rule_;
};

/// Linearly polarized photon state |g, phi, n>: fixed propagation direction,
/// polarization angle phi in [0, pi), spectral profile g. The profile is
/// brought to unit invariant norm on construction.
struct PolarizedState {
    PolarizedState(UnitDirection direction, double pol_angle, SpectralProfile profile);

    UnitDirection direction;
    double pol_angle;
    SpectralProfile profile;
};

/// Helicity amplitudes f_{+1}, f_{-1} sampled over null momenta with
/// positive per-sample measure weights.
struct HelicityAmplitudeField {
    std::vector<FourVector> momenta;
    std::vector<double> weights;
    std::vector<complexd> amp_plus;
    std::vector<complexd> amp_minus;
};

/// 2x2 density matrix in the helicity basis {+1, -1}: Hermitian, unit
/// trace, eigenvalues in [0,1], all within tolerance (checked on
/// construction).
class DensityMatrix2 {
  public:
    explicit DensityMatrix2(const Complex2x2& m, double tol = tol::density);

    const Complex2x2& matrix() const { return m_; }
    /// Eigenvalues (descending), clamped to [0, 1].
    std::pair<double, double> eigenvalues() const;

  private:
    Complex2x2 m_;
};

/// Monochromatic linear polarization |k, phi>: single-sample field with
/// amplitudes e^{i lambda phi} / sqrt(2) and unit weight.
HelicityAmplitudeField monochromatic_state(const FourVector& k, double phi,
                                           double null_tol = tol::null_rel);

/// Field realization of a polarized state on its spectral grid, with the
/// invariant measure weights 2 x dx folded into the sample weights.
HelicityAmplitudeField helicity_field(const PolarizedState& state);

/// Lorentz-transformed state |g', phi + psi, n'> with g'(x) = (2/a) g(2x/a).
PolarizedState transform_state(const SpinorTransform& A, const PolarizedState& state,
                               double pole_eps = tol::pole_eps);

/// rho_{sigma lambda} = sum w f_sigma conj(f_lambda) / sum_lambda w |f_lambda|^2.
/// Throws ZeroState when the field has zero norm.
DensityMatrix2 reduced_density(const HelicityAmplitudeField& field);

/// Conjugation by diag(e^{i psi}, e^{-i psi}) with e^{i psi} = half_phase^2;
/// throws BadPhase unless |half_phase| = 1 within tolerance.
DensityMatrix2 transform_density(const DensityMatrix2& rho, const complexd& half_phase);

/// -sum lambda_i ln lambda_i in nats, with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix2& rho);

}  // namespace wigner
