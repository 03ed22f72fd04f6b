#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "veesys/configuration.hpp"
#include "veesys/transform.hpp"

namespace veesys {

// --- Deformed families -----------------------------------------------------
//
// Square-root prefactors of the classical presentations are folded into the
// weights, so every family below is rational. Covectors whose weight
// vanishes at the chosen parameters are omitted.

/// A_n(c) with n+1 parameters, emitted in n coordinates (the ambient
/// presentation on the sum-zero hyperplane has a singular canonical form).
Configuration make_a_family(const std::vector<Rational> &c);

/// B_n(γ;c): e_i±e_j with weight c_i·c_j, e_i with weight 2c_i(c_i+γ).
Configuration make_b_gamma_family(const Rational &gamma, const std::vector<Rational> &c);

/// G_3(t), t ≠ 0: thirteen covectors for generic t, ten at t = 1/2.
Configuration make_g3(const Rational &t);

/// D_3(t,s), t·s ≠ 0: the four sign covectors e1±e2±e3 plus weighted
/// coordinate covectors; the canonical form degenerates exactly on
/// t+s+1 = 0.
Configuration make_d3(const Rational &t, const Rational &s);

Configuration make_ab4_a1_1(const Rational &t);
Configuration make_ab4_a1_2(const Rational &t);

/// Leading coefficients of make_ab4_a1_1 under global t⁻² rescaling as
/// t → ∞ (entries whose weight decays are dropped).
Configuration make_ab4_a1_1_limit();

/// Large-parameter limit of make_ab4_a1_2: the difference covectors lose
/// their weight and the long diagonal tends to weight 2.
Configuration make_ab4_a1_2_limit();

// --- Coxeter root systems ---------------------------------------------------

enum class CoxeterType { A, B, D, E6, E7, E8, F4 };

/// Positive roots with weight 1; type B carries t² on the short roots e_i.
/// E7 and E6 are cut out of E8 as orthogonal complements of e7+e8 and
/// e6+e7 and re-expressed in their own coordinates.
Configuration coxeter_roots(CoxeterType type, std::size_t rank,
                            const Rational &t_sq = Rational(1));

// --- Generic family construction (CLI surface) -------------------------------

struct FamilySpec {
	std::string name;                          // "A3", "B4", "D3", "G3", "E8", "AB4_A1_1", ...
	std::map<std::string, std::string> params; // raw parameter strings
};

Configuration make_family(const FamilySpec &spec);

// --- Subsystem-type search ----------------------------------------------------

/// Enumerates generating sets matching a product-of-chains type such as
/// "A1^3", "A2^2" or "A5": each A_k factor is a k-chain of equal-length
/// covectors with Cartan-shaped pairings, factors mutually orthogonal
/// under G_A⁻¹. Results are deduplicated by span and ordered by span key.
std::vector<SubsystemSpec> find_subsystems_of_type(const Configuration &c,
                                                   const std::string &type);

/// Restrictions of Coxeter systems named in the catalog:
/// "(E7,A2^2)", "(E8,A5)", "(E6,A1^3)" (parameterless) and "B3(-1;1,1,s)"
/// (takes s). Returns one representative per fingerprint class of the
/// restriction; throws SubsystemNotFoundError when nothing matches.
std::vector<Configuration> named_restriction(const std::string &name,
                                             const std::optional<Rational> &param = std::nullopt);

} // namespace veesys
