#pragma once

#include "wigner/spinor.hpp"

namespace wigner {

/// E(2) little-group element in the upper-triangular parametrization
/// [[h, z], [0, conj(h)]] with |h| = 1. `half_phase` is h = e^{i psi/2};
/// physical helicity states pick up e^{i lambda psi} with
/// e^{i psi} = half_phase^2. `translation` acts trivially on helicity
/// representations.
struct LittleGroupElement {
    complexd half_phase{1.0, 0.0};
    complexd translation{0.0, 0.0};

    /// e^{i psi} = half_phase squared.
    complexd phase_factor() const { return half_phase * half_phase; }

    /// psi = 2 arg(half_phase), wrapped to [0, 2*pi).
    double phase_angle() const;

    /// Reconstructs the 2x2 matrix [[h, z], [0, conj(h)]].
    Complex2x2 matrix() const {
        return {half_phase, translation, {0.0, 0.0}, std::conj(half_phase)};
    }
};

/// Bilinear coefficients of the transformed-momentum closed forms:
/// k'^0 = k^0 a / 2, n'^3 = 2b/a - 1, n'_+ = 2c/a. For unimodular A and a
/// genuine direction, a > 0 and 0 <= b <= a.
struct AbcCoefficients {
    double a = 2.0;
    double b = 0.0;
    complexd c{0.0, 0.0};
};

/// Standard boost A_k carrying the reference momentum (1,0,0,1) to k:
/// the rotation-to-direction times z-boost factorization,
///   (1 / sqrt(2 k^0 (1+n3))) [[k^0 (1+n3), -n_-], [k^0 n_+, 1+n3]].
/// Requires k null with k^0 > 0 and the direction away from the south pole
/// (1 + n3 > pole_eps); A_{(1,0,0,1)} = identity.
SpinorTransform standard_boost(const FourVector& k, double null_tol = tol::null_rel,
                               double pole_eps = tol::pole_eps);

AbcCoefficients abc_coefficients(const SpinorTransform& A, const UnitDirection& n);

/// Transformed null momentum via the a,b,c closed forms; agrees with the
/// 4x4 route apply_lorentz(lorentz_of_spinor(A), k).
FourVector transform_null_momentum(const SpinorTransform& A, const FourVector& k,
                                   double null_tol = tol::null_rel);

/// Wigner decomposition S = A_{Lambda k}^{-1} A A_k. Checks that S has the
/// E(2) shape (lower-left ~ 0, unit-modulus diagonal) and returns
/// (S_11, S_12). A non-null momentum slipping past a loosened null_tol
/// surfaces as ShapeViolation.
LittleGroupElement wigner_decompose(const SpinorTransform& A, const FourVector& k,
                                    double null_tol = tol::null_rel,
                                    double pole_eps = tol::pole_eps);

/// Same element evaluated from the closed-form expressions in a, b, c:
///   half_phase = ((alpha(1+n3) + beta n+) b + (gamma(1+n3) + delta n+) conj(c))
///                / (a sqrt(b (1+n3)))
///   translation = ((-alpha n- + beta(1+n3)) b + (-gamma n- + delta(1+n3)) conj(c))
///                / (k^0 a sqrt(b (1+n3)))
/// Agrees with wigner_decompose within 1e-10 away from the poles.
LittleGroupElement closed_form_little_group(const SpinorTransform& A, const FourVector& k,
                                            double null_tol = tol::null_rel,
                                            double pole_eps = tol::pole_eps);

/// e^{i psi(A, n)} for the momentum (1, n); by frequency independence the
/// same factor applies to every k^0 > 0 along n.
complexd wigner_phase_of_direction(const SpinorTransform& A, const UnitDirection& n,
                                   double pole_eps = tol::pole_eps);

/// Gauge-dependent fallback for momenta at or near the south pole: the whole
/// problem is conjugated by the fixed rotation R_x(pi) and the element is
/// reported in that rotated gauge. Values are NOT comparable with the
/// standard-gauge outputs of wigner_decompose.
LittleGroupElement wigner_decompose_rotated_gauge(const SpinorTransform& A, const FourVector& k,
                                                  double null_tol = tol::null_rel,
                                                  double pole_eps = tol::pole_eps);

}  // namespace wigner
