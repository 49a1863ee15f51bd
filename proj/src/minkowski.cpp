#include "wigner/minkowski.hpp"

#include <cmath>

#include "wigner/errors.hpp"

namespace wigner {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotNull: return "NotNull";
        case ErrorKind::DegenerateMomentum: return "DegenerateMomentum";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::BadAxis: return "BadAxis";
        case ErrorKind::SuperluminalVelocity: return "SuperluminalVelocity";
        case ErrorKind::SouthPoleSingularity: return "SouthPoleSingularity";
        case ErrorKind::ShapeViolation: return "ShapeViolation";
        case ErrorKind::DegenerateBranch: return "DegenerateBranch";
        case ErrorKind::ZeroState: return "ZeroState";
        case ErrorKind::BadPhase: return "BadPhase";
        case ErrorKind::BadDeterminant: return "BadDeterminant";
    }
    return "UnknownError";
}

UnitDirection UnitDirection::normalized(double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError(ErrorKind::BadAxis, "axis must be a nonzero finite vector");
    }
    return {x / r, y / r, z / r};
}

LorentzMatrix LorentzMatrix::identity() {
    LorentzMatrix L;
    for (int i = 0; i < 4; ++i) L.e[i][i] = 1.0;
    return L;
}

FourVector LorentzMatrix::operator*(const FourVector& k) const {
    const std::array<double, 4> in{k.t, k.x, k.y, k.z};
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) out[i] += e[i][j] * in[j];
    }
    return {out[0], out[1], out[2], out[3]};
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& o) const {
    LorentzMatrix r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += e[i][k] * o.e[k][j];
            r.e[i][j] = s;
        }
    }
    return r;
}

double LorentzMatrix::det() const {
    // Cofactor expansion along the first row over 3x3 minors.
    auto minor3 = [this](int r0, int r1, int r2, int c0, int c1, int c2) {
        return e[r0][c0] * (e[r1][c1] * e[r2][c2] - e[r1][c2] * e[r2][c1]) -
               e[r0][c1] * (e[r1][c0] * e[r2][c2] - e[r1][c2] * e[r2][c0]) +
               e[r0][c2] * (e[r1][c0] * e[r2][c1] - e[r1][c1] * e[r2][c0]);
    };
    return e[0][0] * minor3(1, 2, 3, 1, 2, 3) - e[0][1] * minor3(1, 2, 3, 0, 2, 3) +
           e[0][2] * minor3(1, 2, 3, 0, 1, 3) - e[0][3] * minor3(1, 2, 3, 0, 1, 2);
}

double minkowski_dot(const FourVector& u, const FourVector& v) {
    return u.t * v.t - u.x * v.x - u.y * v.y - u.z * v.z;
}

bool is_null(const FourVector& k, double tol) {
    if (!(k.t > 0.0)) return false;
    return std::abs(minkowski_dot(k, k)) <= tol * k.t * k.t;
}

FourVector apply_lorentz(const LorentzMatrix& L, const FourVector& k) { return L * k; }

bool verify_lorentz(const LorentzMatrix& L, double tol) {
    // eta = diag(+1,-1,-1,-1); check (L^T eta L)_{ij} = eta_{ij} entrywise.
    static constexpr double eta[4] = {1.0, -1.0, -1.0, -1.0};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += L.e[k][i] * eta[k] * L.e[k][j];
            const double want = (i == j) ? eta[i] : 0.0;
            if (std::abs(s - want) > tol) return false;
        }
    }
    if (!(L.e[0][0] >= 1.0 - tol)) return false;
    const double d = L.det();
    return d >= 1.0 - tol && d <= 1.0 + tol;
}

UnitDirection direction_of(const FourVector& k) {
    const double r = k.spatial_norm();
    if (!(r > 0.0)) {
        throw DomainError(ErrorKind::DegenerateMomentum, "zero spatial momentum has no direction");
    }
    return {k.x / r, k.y / r, k.z / r};
}

}  // namespace wigner
