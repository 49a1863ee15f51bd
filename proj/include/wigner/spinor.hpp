#pragma once

#include <complex>

#include "wigner/minkowski.hpp"

namespace wigner {

using complexd = std::complex<double>;

/// 2x2 complex matrix, row-major. Doubles as an SL(2,C) element (unimodular
/// by contract) and as a Hermitian momentum matrix k = k^mu sigma_mu.
struct Complex2x2 {
    complexd m00{0.0, 0.0};
    complexd m01{0.0, 0.0};
    complexd m10{0.0, 0.0};
    complexd m11{0.0, 0.0};

    static Complex2x2 identity() { return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}; }

    Complex2x2 operator*(const Complex2x2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    Complex2x2 operator+(const Complex2x2& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    Complex2x2 operator-(const Complex2x2& o) const {
        return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
    }
    Complex2x2 operator*(const complexd& s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }
    Complex2x2 operator-() const { return {-m00, -m01, -m10, -m11}; }

    Complex2x2 adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }
    complexd det() const { return m00 * m11 - m01 * m10; }
    complexd trace() const { return m00 + m11; }

    /// Inverse assuming det = 1 (adjugate).
    Complex2x2 inverse_unimodular() const { return {m11, -m01, -m10, m00}; }

    double norm_max() const {
        return std::max(std::max(std::abs(m00), std::abs(m01)),
                        std::max(std::abs(m10), std::abs(m11)));
    }
};

/// Element of SL(2,C): unimodular (det = 1 within tolerance).
using SpinorTransform = Complex2x2;

/// Hermitian matrix associated with a four-vector, k = k^mu sigma_mu.
using HermitianMomentum = Complex2x2;

bool is_unimodular(const Complex2x2& m, double tol = tol::unimodular);
bool is_hermitian(const Complex2x2& m, double tol = tol::hermitian_rel);

/// k = k^0 sigma_0 + k^1 sigma_1 + k^2 sigma_2 + k^3 sigma_3.
HermitianMomentum hermitian_from_four_vector(const FourVector& k);

/// Inverse map k^mu = tr(sigma_mu m) / 2; throws NotHermitian when m deviates
/// from Hermiticity beyond tol (relative to the matrix norm).
FourVector four_vector_from_hermitian(const HermitianMomentum& m, double tol = tol::hermitian_rel);

/// Group action on momentum matrices: m' = A m A^dagger.
HermitianMomentum spinor_act(const SpinorTransform& A, const HermitianMomentum& m);

/// Covering homomorphism A -> Lambda(A), computed by acting on the four
/// basis vectors and reading components back. Lambda(A) = Lambda(-A).
LorentzMatrix lorentz_of_spinor(const SpinorTransform& A);

/// SU(2) rotation by `angle` about `axis`:
///   cos(angle/2) + i (axis . sigma) sin(angle/2).
/// The angle lives on the double cover: angle + 2*pi flips the sign of the
/// matrix, angle + 4*pi reproduces it, so wrapping happens modulo 4*pi.
/// Throws BadAxis unless |axis| = 1 within tolerance.
SpinorTransform make_rotation(const UnitDirection& axis, double angle);

/// Pure boost for velocity v (|v| < 1), exp((xi/2) e . sigma) with
/// e = v/|v| and tanh(xi) = -|v|. Note the sign: with this convention a
/// boost of velocity v*zhat sends (1,0,0,1) to d*(1,0,0,1) with
/// d = sqrt((1-v)/(1+v)), i.e. the top-left entry is ((1-v)/(1+v))^(1/4).
/// Most references use the opposite sign of xi. Zero velocity returns the
/// identity; |v| >= 1 throws SuperluminalVelocity.
SpinorTransform make_boost(double vx, double vy, double vz);

/// Matrix product AB (apply B first).
SpinorTransform compose(const SpinorTransform& A, const SpinorTransform& B);

}  // namespace wigner
