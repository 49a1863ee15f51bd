#include "wigner/little_group.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

void require_null(const FourVector& k, double null_tol) {
    if (!is_null(k, null_tol)) {
        throw DomainError(ErrorKind::NotNull,
                          "momentum is not null: k.k = " + std::to_string(minkowski_dot(k, k)) +
                              ", k0 = " + std::to_string(k.t));
    }
}

void require_pole_safe(double one_plus_n3, double pole_eps, const char* which) {
    if (!(one_plus_n3 > pole_eps)) {
        throw DomainError(ErrorKind::SouthPoleSingularity,
                          std::string(which) + " points at the south pole (1 + n3 = " +
                              std::to_string(one_plus_n3) + "); the standard-boost gauge is undefined there");
    }
}

}  // namespace

double LittleGroupElement::phase_angle() const {
    double psi = 2.0 * std::arg(half_phase);
    psi = std::fmod(psi, 2.0 * std::numbers::pi);
    if (psi < 0.0) psi += 2.0 * std::numbers::pi;
    return psi;
}

SpinorTransform standard_boost(const FourVector& k, double null_tol, double pole_eps) {
    require_null(k, null_tol);
    const UnitDirection n = direction_of(k);
    const double p = 1.0 + n.n3;
    require_pole_safe(p, pole_eps, "momentum");
    const double k0 = k.t;
    const double inv = 1.0 / std::sqrt(2.0 * k0 * p);
    const complexd n_minus{n.n1, -n.n2};
    const complexd n_plus{n.n1, n.n2};
    return {{k0 * p * inv, 0.0}, -n_minus * inv, n_plus * (k0 * inv), {p * inv, 0.0}};
}

AbcCoefficients abc_coefficients(const SpinorTransform& A, const UnitDirection& n) {
    const double p = 1.0 + n.n3;
    const double q = 1.0 - n.n3;
    const complexd n_minus{n.n1, -n.n2};
    const complexd n_plus{n.n1, n.n2};
    const complexd alpha = A.m00, beta = A.m01, gamma = A.m10, delta = A.m11;

    const double a = (std::norm(alpha) + std::norm(gamma)) * p +
                     (std::norm(beta) + std::norm(delta)) * q +
                     2.0 * ((alpha * std::conj(beta) + gamma * std::conj(delta)) * n_minus).real();
    const double b = std::norm(alpha) * p + std::norm(beta) * q +
                     2.0 * (alpha * std::conj(beta) * n_minus).real();
    const complexd c = std::conj(alpha) * gamma * p + std::conj(beta) * delta * q +
                       std::conj(beta) * gamma * n_minus + std::conj(alpha) * delta * n_plus;
    return {a, b, c};
}

FourVector transform_null_momentum(const SpinorTransform& A, const FourVector& k,
                                   double null_tol) {
    require_null(k, null_tol);
    const UnitDirection n = direction_of(k);
    const auto [a, b, c] = abc_coefficients(A, n);
    const double k0p = 0.5 * k.t * a;
    const double n3p = 2.0 * b / a - 1.0;
    const complexd npp = c * (2.0 / a);
    return {k0p, k0p * npp.real(), k0p * npp.imag(), k0p * n3p};
}

LittleGroupElement wigner_decompose(const SpinorTransform& A, const FourVector& k,
                                    double null_tol, double pole_eps) {
    const FourVector kp = transform_null_momentum(A, k, null_tol);
    const SpinorTransform boost_in = standard_boost(k, null_tol, pole_eps);
    const SpinorTransform boost_out = standard_boost(kp, 1.0, pole_eps);
    const Complex2x2 right = A * boost_in;
    const Complex2x2 inv_out = boost_out.inverse_unimodular();
    const Complex2x2 s = inv_out * right;

    // Shape check, scaled by the factor norms: catastrophic inputs (non-null
    // momenta admitted by a loose tolerance) produce O(1) residuals while
    // roundoff stays many orders below the threshold.
    const double scale = std::max(1.0, inv_out.norm_max() * right.norm_max());
    if (std::abs(s.m10) > tol::shape_residual * scale ||
        std::abs(std::abs(s.m00) - 1.0) > tol::shape_residual ||
        std::abs(s.m11 - std::conj(s.m00)) > tol::shape_residual) {
        throw DomainError(ErrorKind::ShapeViolation,
                          "decomposition is not an E(2) element (|S21| = " +
                              std::to_string(std::abs(s.m10)) + "); input momentum is likely not null");
    }
    return {s.m00, s.m01};
}

LittleGroupElement closed_form_little_group(const SpinorTransform& A, const FourVector& k,
                                            double null_tol, double pole_eps) {
    require_null(k, null_tol);
    const UnitDirection n = direction_of(k);
    const double p = 1.0 + n.n3;
    require_pole_safe(p, pole_eps, "momentum");

    const auto [a, b, c] = abc_coefficients(A, n);
    if (!(b > 0.0)) {
        throw DomainError(ErrorKind::DegenerateBranch,
                          "sqrt(b (1+n3)) requires b > 0; got b = " + std::to_string(b));
    }
    require_pole_safe(2.0 * b / a, pole_eps, "transformed momentum");

    const complexd n_minus{n.n1, -n.n2};
    const complexd n_plus{n.n1, n.n2};
    const complexd alpha = A.m00, beta = A.m01, gamma = A.m10, delta = A.m11;
    const complexd c_conj = std::conj(c);
    const double root = std::sqrt(b * p);

    const complexd half_phase = ((alpha * p + beta * n_plus) * b + (gamma * p + delta * n_plus) * c_conj) /
                                (a * root);
    const complexd translation =
        ((-alpha * n_minus + beta * p) * b + (-gamma * n_minus + delta * p) * c_conj) /
        (k.t * a * root);
    return {half_phase, translation};
}

complexd wigner_phase_of_direction(const SpinorTransform& A, const UnitDirection& n,
                                   double pole_eps) {
    const FourVector k{1.0, n.n1, n.n2, n.n3};
    return wigner_decompose(A, k, tol::null_rel, pole_eps).phase_factor();
}

LittleGroupElement wigner_decompose_rotated_gauge(const SpinorTransform& A, const FourVector& k,
                                                  double null_tol, double pole_eps) {
    // R_x(pi) maps the south pole to the north pole; conjugating A and
    // rotating k restates the problem in a gauge that is regular there.
    const SpinorTransform rot = make_rotation({1.0, 0.0, 0.0}, std::numbers::pi);
    const SpinorTransform conjugated = rot * A * rot.inverse_unimodular();
    const FourVector rotated = apply_lorentz(lorentz_of_spinor(rot), k);
    return wigner_decompose(conjugated, rotated, null_tol, pole_eps);
}

}  // namespace wigner
