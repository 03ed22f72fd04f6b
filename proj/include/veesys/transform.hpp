#pragma once

#include <optional>
#include <vector>

#include "veesys/configuration.hpp"

namespace veesys {

/// Witness of a linear equivalence. The full map is c·P̂ with c² = scale_sq;
/// keeping the scalar squared keeps the witness rational even when c is
/// not. sigma[i] is the index in the target configuration that covector i
/// of the source maps onto.
struct LinearMap {
	Matrix matrix;
	Rational scale_sq;
	std::vector<std::size_t> sigma;
};

/// A subsystem B = A∩W described by its generating indices, the rref basis
/// of W = span of their directions, and the closure (all parent covectors
/// lying in W).
struct SubsystemSpec {
	std::vector<std::size_t> indices;
	Matrix span;
	std::vector<std::size_t> closure;
};

SubsystemSpec make_subsystem_spec(const Configuration &c,
                                  const std::vector<std::size_t> &indices);

/// Extracts the closure B = A∩span(indices) as a standalone configuration
/// in coordinates of the rref basis of W. Throws DegenerateFormError and
/// IsotropicSubsystemError (the restriction of G_B to W^∨ must be
/// nonsingular).
Configuration subsystem(const Configuration &c, const std::vector<std::size_t> &indices);

/// Restriction π_B(A): closes B, intersects the kernels of its covectors
/// into W_B, and restricts every remaining covector to W_B coordinates
/// (zero restrictions dropped, parallels merged). Throws
/// DegenerateRestrictionError when G_A|_{W_B} is singular or W_B = 0.
Configuration restriction(const Configuration &c, const std::vector<std::size_t> &b_indices);

/// Change of variables: every direction a ↦ P·a (weight folded by the
/// squared normalization scalar), background transformed contragradiently.
/// Throws SingularMatrixError.
Configuration apply_linear(const Configuration &c, const Matrix &p);

/// Multiplies every weight by rho (nonzero).
Configuration scale_weights(const Configuration &c, const Rational &rho);

/// Searches for an invertible P̂ and global scale c² mapping the weighted
/// covector multiset of `a` exactly onto that of `b`. Fingerprints gate the
/// search; candidate maps come from projective frames resolved by exact
/// linear solves. Deterministic: first witness in a fixed enumeration
/// order is returned.
std::optional<LinearMap> find_equivalence(const Configuration &a, const Configuration &b);

} // namespace veesys
