#pragma once

namespace wigner::tol {

// Relative null check: |k.k| <= null_rel * (k^0)^2.
inline constexpr double null_rel = 1e-10;

// Standard-boost pole guard: reject directions with 1 + n3 <= pole_eps.
inline constexpr double pole_eps = 1e-12;

// Wigner decomposition shape residual (scaled by the product norms of the
// factors, floored at 1).
inline constexpr double shape_residual = 1e-9;

// Hermiticity check in four_vector_from_hermitian, relative to matrix norm.
inline constexpr double hermitian_rel = 1e-12;

// Unimodularity of raw sl2c pipeline steps and unit-modulus phases.
inline constexpr double unimodular = 1e-9;

// Unit-axis check in make_rotation.
inline constexpr double unit_axis = 1e-9;

// Density matrix invariants (Hermitian, unit trace, eigenvalues in [0,1]).
inline constexpr double density = 1e-10;

// Cross-route consistency budget used by the CLI report diagnostics.
inline constexpr double consistency = 1e-8;

}  // namespace wigner::tol
