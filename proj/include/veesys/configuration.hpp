#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "veesys/linalg.hpp"

namespace veesys {

/// A covector stored in weighted form: the pair (a, m) stands for √m·a.
/// Directions are normalized so the first nonzero coordinate equals 1;
/// rescaling a direction by c folds c² into the weight, so (c·a, m) and
/// (a, c²·m) denote the same covector. Negative weights encode imaginary
/// covectors i·√|m|·a.
struct WeightedCovector {
	Vector direction;
	Rational weight;

	bool operator==(const WeightedCovector &other) const = default;
};

/// Normalizes a raw (direction, weight) pair. Throws ZeroDirectionError /
/// ZeroWeightError.
WeightedCovector normalize(const Vector &direction, const Rational &weight);

/// A finite set of pairwise non-parallel weighted covectors in a fixed
/// ambient dimension; one representative per ± pair is stored.
class Configuration {
public:
	/// Merges parallel raw entries (weights add after normalization
	/// folding), drops entries whose merged weight is zero. Throws
	/// DimensionMismatchError and EmptyConfigurationError.
	static Configuration build(std::size_t dimension,
	                           const std::vector<WeightedCovector> &raw,
	                           std::optional<Matrix> background = std::nullopt,
	                           std::string label = {});

	std::size_t dimension() const { return dimension_; }
	const std::vector<WeightedCovector> &covectors() const { return covectors_; }
	std::size_t size() const { return covectors_.size(); }
	const WeightedCovector &covector(std::size_t i) const { return covectors_[i]; }
	const std::optional<Matrix> &background() const { return background_; }
	const std::string &label() const { return label_; }

	bool same_weighted_multiset(const Configuration &other) const;

private:
	Configuration() = default;

	std::size_t dimension_ = 0;
	std::vector<WeightedCovector> covectors_;
	std::optional<Matrix> background_;
	std::string label_;
};

/// A 2-dimensional covector subspace π together with the indices of the
/// configuration covectors lying in it (the subsystem Π = π ∩ A).
struct Plane {
	Matrix key; // canonical 2×n rref spanning π
	std::vector<std::size_t> members;
};

/// Canonical form G_A = Σ m·a⊗a, an n×n symmetric matrix (possibly
/// degenerate; callers decide what that means).
Matrix canonical_form(const Configuration &c);

/// Dual vector of covector #index: the solution v of G_A·v = a.
/// Throws DegenerateFormError if G_A is singular.
Vector dual(const Configuration &c, std::size_t index);

/// Every 2-subspace spanned by at least two configuration directions,
/// each listed once with its complete member set, ordered by plane key.
std::vector<Plane> enumerate_planes(const Configuration &c);

/// Linear-equivalence invariants: length² multiset (computed against the
/// canonical form of the ±-symmetrized system, i.e. m·aᵀ(2G_A)⁻¹a, the
/// normalization under which classical root systems get their textbook
/// values), plane incidence profile, and a per-covector refinement.
struct Fingerprint {
	std::size_t dimension = 0;
	std::size_t count = 0;
	std::vector<Rational> lengths;           // sorted
	std::vector<std::size_t> plane_profile;  // sorted member counts
	// per covector: (length², sorted member counts of incident planes); sorted
	std::vector<std::pair<Rational, std::vector<std::size_t>>> per_covector;

	bool operator==(const Fingerprint &other) const = default;
};

/// Throws DegenerateFormError if G_A is singular.
Fingerprint fingerprint(const Configuration &c);

/// Length² of covector #index under the same normalization as Fingerprint.
Rational covector_length_sq(const Configuration &c, const Matrix &ginv, std::size_t index);

} // namespace veesys
