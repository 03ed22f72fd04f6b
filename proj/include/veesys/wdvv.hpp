#pragma once

#include <cstdint>
#include <vector>

#include "veesys/configuration.hpp"

namespace veesys {

/// A point of M_A: every configuration covector must be nonzero on it.
struct SamplePoint {
	Vector coordinates;
};

/// Deterministic generic points with integer coordinates in [−9, 9],
/// redrawn while any covector vanishes on them.
std::vector<SamplePoint> sample_points(const Configuration &c, std::size_t count,
                                       std::uint64_t seed);

/// Matrix of third derivatives of F = Σ m·a(x)²·log a(x)² along one axis:
/// (F_i)_{ab} = Σ 4·m·a_i·a_a·a_b / a(x). Throws OnHyperplaneError.
Matrix third_derivative_matrix(const Configuration &c, std::size_t axis,
                               const SamplePoint &x);

/// True iff F_i·G_A⁻¹·F_j = F_j·G_A⁻¹·F_i exactly, for all axis pairs at
/// every sample point. Throws DegenerateFormError / OnHyperplaneError.
bool check_wdvv(const Configuration &c, const std::vector<SamplePoint> &points);

/// Tangent-space product u∗v = Σ m·a(u)·a(v)/a(x) · a^∨.
Vector frobenius_product(const Configuration &c, const SamplePoint &x, const Vector &u,
                         const Vector &v);

/// Evaluates the limit product Σ_{α∉B} m·a(u)a(v)/a(x)·a^∨ at a point of
/// W_B (u, v tangent to W_B) and reports whether the result is again
/// tangent to W_B.
bool check_tangency_limit(const Configuration &c, const std::vector<std::size_t> &b_indices,
                          const SamplePoint &x, const Vector &u, const Vector &v);

/// True iff Σ_k (F_i)_{jk}·x^k = 0 for all i, j, which happens exactly
/// when the canonical form vanishes.
bool check_degenerate_kernel(const Configuration &c, const SamplePoint &x);

} // namespace veesys
