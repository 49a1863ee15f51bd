#pragma once

#include <array>
#include <cmath>

#include "wigner/tolerances.hpp"

namespace wigner {

/// Real four-vector with metric signature (+,-,-,-), natural units (c = 1).
struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double spatial_norm() const { return std::sqrt(x * x + y * y + z * z); }

    FourVector operator*(double s) const { return {t * s, x * s, y * s, z * s}; }
    FourVector operator+(const FourVector& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    FourVector operator-(const FourVector& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
};

/// Unit spatial direction n = k/|k|.
struct UnitDirection {
    double n1 = 0.0;
    double n2 = 0.0;
    double n3 = 1.0;

    double norm() const { return std::sqrt(n1 * n1 + n2 * n2 + n3 * n3); }

    /// Normalizes (x,y,z); throws BadAxis on a zero or non-finite vector.
    static UnitDirection normalized(double x, double y, double z);
};

/// 4x4 real Lorentz matrix, row-major; index as e[row][col].
struct LorentzMatrix {
    std::array<std::array<double, 4>, 4> e{};

    static LorentzMatrix identity();

    FourVector operator*(const FourVector& k) const;
    LorentzMatrix operator*(const LorentzMatrix& o) const;
    double det() const;
};

/// u.v with signature (+,-,-,-).
double minkowski_dot(const FourVector& u, const FourVector& v);

/// True iff |k.k| <= tol * (k0)^2 and k0 > 0. The check is relative to
/// (k0)^2 so it is scale-free.
bool is_null(const FourVector& k, double tol = tol::null_rel);

/// Matrix action k' = L k.
FourVector apply_lorentz(const LorentzMatrix& L, const FourVector& k);

/// Proper ortochronous check: L^T eta L = eta entrywise within tol,
/// L[0][0] >= 1, det L in [1 - tol, 1 + tol].
bool verify_lorentz(const LorentzMatrix& L, double tol = 1e-10);

/// k_vec / |k_vec|; throws DegenerateMomentum when the spatial part vanishes.
UnitDirection direction_of(const FourVector& k);

}  // namespace wigner
