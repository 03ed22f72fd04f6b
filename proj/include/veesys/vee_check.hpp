#pragma once

#include <optional>
#include <vector>

#include "veesys/configuration.hpp"

namespace veesys {

enum class VerdictStatus { Reducible, Proportional, Violated };

/// Outcome of the ∨-condition on one plane. Proportional carries the
/// exact constant λ = λ(α,Π); Violated carries the index of a covector
/// whose eigen-condition fails.
struct PlaneVerdict {
	Plane plane;
	VerdictStatus status = VerdictStatus::Violated;
	std::optional<Rational> lambda;
	std::optional<std::size_t> witness;

	bool passes() const { return status != VerdictStatus::Violated; }
};

struct VeeReport {
	bool is_vee_system = false;
	bool degenerate_form = false;
	std::vector<PlaneVerdict> verdicts;
	// Set by euclidean_check only: the global proportionality constant,
	// absent when the configuration is not well-distributed.
	std::optional<Rational> global_lambda;
	bool euclidean = false;
};

/// Tests the ∨-condition for one plane: for each member α of Π computes
/// s(α) = Σ_{β∈Π} m_β·β(α^∨)·β^∨ and demands s(α) = λ·α^∨ with a single
/// λ across the plane; otherwise Π must split into two nonempty parts
/// mutually orthogonal under G_A⁻¹. Throws DegenerateFormError.
PlaneVerdict check_plane(const Configuration &c, const Plane &p);

/// Full ∨-system check: nonsingularity of G_A, then check_plane over all
/// planes. A degenerate form yields is_vee_system = false rather than an
/// exception.
VeeReport check_vee(const Configuration &c);

struct SubsystemVerdict {
	VerdictStatus status = VerdictStatus::Violated;
	std::optional<Rational> lambda;
};

/// Any-dimension subsystem dichotomy: closes the span of the chosen
/// covectors to B = A∩W and tests whether G_B and G_A restricted to
/// W^∨ × V are proportional, or B is reducible. Throws DegenerateFormError.
SubsystemVerdict check_subsystem_property(const Configuration &c,
                                          const std::vector<std::size_t> &generating);

/// Exact evaluation of Σ_{β∈Π} G_A(α^∨,β^∨)(α(a)β(b) − α(b)β(a)) in
/// weighted form; independent oracle for check_plane.
bool check_identity_pi(const Configuration &c, std::size_t alpha, const Plane &p,
                       const Vector &a, const Vector &b);

/// Background-form proportionality test. Directions are paired with the
/// background directly, (α,x) = αᵀ·B·x. Without a subspace the test runs
/// on the ambient Gram matrices; with one, on the Gram matrices restricted
/// to the plane. Returns λ (possibly 0) with Σ m·(a,wᵢ)(a,wⱼ) = λ·(wᵢ,wⱼ),
/// or nothing when no such λ exists.
std::optional<Rational> well_distributed(const Configuration &c, const Matrix &background,
                                         const Plane *subspace = nullptr);

/// Complex-Euclidean variant: global well-distributedness plus, per plane,
/// reducibility with respect to the background or well-distributedness
/// inside the plane (exact Gram proportionality, either side may vanish).
VeeReport euclidean_check(const Configuration &c, const Matrix &background);

} // namespace veesys
