#include "wigner/spinor.hpp"

#include <cmath>
#include <numbers>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

// Reads the four-vector components off a Hermitian matrix without checking
// Hermiticity; real parts and the symmetrized off-diagonal are used.
FourVector components_of(const Complex2x2& m) {
    const double t = 0.5 * (m.m00.real() + m.m11.real());
    const double z = 0.5 * (m.m00.real() - m.m11.real());
    const double x = 0.5 * (m.m01.real() + m.m10.real());
    const double y = 0.5 * (m.m10.imag() - m.m01.imag());
    return {t, x, y, z};
}

}  // namespace

bool is_unimodular(const Complex2x2& m, double tol) {
    return std::abs(m.det() - complexd{1.0, 0.0}) <= tol;
}

bool is_hermitian(const Complex2x2& m, double tol) {
    const double scale = std::max(1.0, m.norm_max());
    return std::abs(m.m01 - std::conj(m.m10)) <= tol * scale &&
           std::abs(m.m00.imag()) <= tol * scale && std::abs(m.m11.imag()) <= tol * scale;
}

HermitianMomentum hermitian_from_four_vector(const FourVector& k) {
    return {{k.t + k.z, 0.0}, {k.x, -k.y}, {k.x, k.y}, {k.t - k.z, 0.0}};
}

FourVector four_vector_from_hermitian(const HermitianMomentum& m, double tol) {
    if (!is_hermitian(m, tol)) {
        throw DomainError(ErrorKind::NotHermitian, "matrix is not Hermitian within tolerance");
    }
    return components_of(m);
}

HermitianMomentum spinor_act(const SpinorTransform& A, const HermitianMomentum& m) {
    return A * m * A.adjoint();
}

LorentzMatrix lorentz_of_spinor(const SpinorTransform& A) {
    static const Complex2x2 sigma[4] = {
        Complex2x2::identity(),
        {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}},
        {{0.0, 0.0}, {0.0, -1.0}, {0.0, 1.0}, {0.0, 0.0}},
        {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}},
    };
    const Complex2x2 adj = A.adjoint();
    LorentzMatrix L;
    for (int col = 0; col < 4; ++col) {
        const FourVector image = components_of(A * sigma[col] * adj);
        L.e[0][col] = image.t;
        L.e[1][col] = image.x;
        L.e[2][col] = image.y;
        L.e[3][col] = image.z;
    }
    return L;
}

SpinorTransform make_rotation(const UnitDirection& axis, double angle) {
    if (std::abs(axis.norm() - 1.0) > tol::unit_axis) {
        throw DomainError(ErrorKind::BadAxis, "rotation axis must be a unit vector");
    }
    // Wrap on the double cover: the matrix has period 4*pi in the angle.
    double a = std::fmod(angle, 4.0 * std::numbers::pi);
    if (a < 0.0) a += 4.0 * std::numbers::pi;
    const double c = std::cos(0.5 * a);
    const double s = std::sin(0.5 * a);
    return {{c, axis.n3 * s},
            {axis.n2 * s, axis.n1 * s},
            {-axis.n2 * s, axis.n1 * s},
            {c, -axis.n3 * s}};
}

SpinorTransform make_boost(double vx, double vy, double vz) {
    const double v = std::sqrt(vx * vx + vy * vy + vz * vz);
    if (!(v < 1.0) || !std::isfinite(v)) {
        throw DomainError(ErrorKind::SuperluminalVelocity, "boost velocity must satisfy |v| < 1");
    }
    if (v == 0.0) return Complex2x2::identity();
    const double e1 = vx / v, e2 = vy / v, e3 = vz / v;
    const double xi = std::atanh(-v);
    const double ch = std::cosh(0.5 * xi);
    const double sh = std::sinh(0.5 * xi);
    return {{ch + e3 * sh, 0.0},
            {e1 * sh, -e2 * sh},
            {e1 * sh, e2 * sh},
            {ch - e3 * sh, 0.0}};
}

SpinorTransform compose(const SpinorTransform& A, const SpinorTransform& B) { return A * B; }

}  // namespace wigner
