// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact arithmetic; the only tolerances are the two
// wall-clock budgets, which are printed alongside the verdicts.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "veesys/catalog.hpp"
#include "veesys/configuration.hpp"
#include "veesys/errors.hpp"
#include "veesys/transform.hpp"
#include "veesys/vee_check.hpp"
#include "veesys/wdvv.hpp"

using namespace veesys;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void verdict(int criterion, const std::string &name, bool ok, const std::string &detail = "")
{
	std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
	            name.c_str(), detail.empty() ? "" : " — ", detail.c_str());
	if (!ok)
		++g_failures;
}

double seconds_since(Clock::time_point start)
{
	return std::chrono::duration<double>(Clock::now() - start).count();
}

Rational random_positive(std::mt19937_64 &rng)
{
	return make_rational(static_cast<long>(rng() % 6) + 1, static_cast<long>(rng() % 3) + 1);
}

Rational random_nonzero(std::mt19937_64 &rng)
{
	for (;;) {
		long num = static_cast<long>(rng() % 11) - 5;
		if (num != 0)
			return make_rational(num, static_cast<long>(rng() % 3) + 1);
	}
}

Matrix random_invertible(std::mt19937_64 &rng, std::size_t n)
{
	for (;;) {
		Matrix m(n, n);
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t c = 0; c < n; ++c)
				m(r, c) = Rational(static_cast<long>(rng() % 7) - 3);
		if (!is_zero(det(m)))
			return m;
	}
}

Configuration reweighted(const Configuration &c, std::size_t index, const Rational &weight)
{
	std::vector<WeightedCovector> raw(c.covectors().begin(), c.covectors().end());
	raw[index].weight = weight;
	return Configuration::build(c.dimension(), raw, std::nullopt,
	                            c.label() + " | perturbed");
}

std::vector<Configuration> engineered_failures()
{
	std::vector<Configuration> out;
	out.push_back(Configuration::build(3,
	                                   {{{1, 1, 0}, 1},
	                                    {{1, -1, 0}, 1},
	                                    {{1, 0, 1}, 1},
	                                    {{1, 0, -1}, 1},
	                                    {{0, 1, 1}, 1},
	                                    {{0, 1, -1}, 1},
	                                    {{1, 0, 0}, 2},
	                                    {{0, 1, 0}, 2},
	                                    {{0, 0, 1}, 5}},
	                                   std::nullopt, "broken B3"));
	out.push_back(reweighted(make_g3(1), 6, 2));              // e3 weight off family
	out.push_back(reweighted(make_d3(2, 2), 0, 2));           // sign covector reweighted
	out.push_back(reweighted(make_b_gamma_family(1, {1, 1, 1, 1}), 12, 3));
	out.push_back(reweighted(make_a_family({1, 1, 1, 1}), 0, 5));
	return out;
}

std::vector<Configuration> catalog_corpus()
{
	std::vector<Configuration> corpus;
	corpus.push_back(make_a_family({1, 1, 1, 1}));
	corpus.push_back(make_a_family({1, 2, 3, 4}));
	corpus.push_back(make_b_gamma_family(1, {1, 1, 1, 1}));
	corpus.push_back(make_b_gamma_family(Rational(1, 2), {2, 1, 3, 1}));
	corpus.push_back(make_b_gamma_family(-1, {1, 1, 4}));
	corpus.push_back(coxeter_roots(CoxeterType::B, 3));
	corpus.push_back(coxeter_roots(CoxeterType::B, 3, 2));
	corpus.push_back(coxeter_roots(CoxeterType::A, 4));
	corpus.push_back(coxeter_roots(CoxeterType::D, 4));
	corpus.push_back(coxeter_roots(CoxeterType::F4, 4));
	corpus.push_back(coxeter_roots(CoxeterType::E6, 6));
	for (const Rational &t :
	     {Rational(1), Rational(3, 4), Rational(1, 2), Rational(3), Rational(-2)})
		corpus.push_back(make_g3(t));
	corpus.push_back(make_d3(2, 2));
	corpus.push_back(make_d3(3, 1));
	corpus.push_back(make_d3(1, 2));
	corpus.push_back(make_d3(2, 5));
	corpus.push_back(make_ab4_a1_1(1));
	corpus.push_back(make_ab4_a1_1(3));
	corpus.push_back(make_ab4_a1_2(1));
	corpus.push_back(make_ab4_a1_2(Rational(1, 2)));
	return corpus;
}

// 3-dimensional vee-systems with at most 13 covectors, for the exhaustive
// structural sweeps.
std::vector<Configuration> small_vee_systems()
{
	return {coxeter_roots(CoxeterType::B, 3),
	        coxeter_roots(CoxeterType::B, 3, 2),
	        make_g3(1),
	        make_g3(Rational(3, 4)),
	        make_d3(2, 2),
	        make_d3(3, 1),
	        make_a_family({1, 1, 1, 1}),
	        make_ab4_a1_1(1),
	        make_ab4_a1_2(2)};
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t max_size)
{
	std::vector<std::vector<std::size_t>> subsets;
	std::vector<std::size_t> current;
	std::function<void(std::size_t)> rec = [&](std::size_t start) {
		if (!current.empty())
			subsets.push_back(current);
		if (current.size() == max_size)
			return;
		for (std::size_t i = start; i < n; ++i) {
			current.push_back(i);
			rec(i + 1);
			current.pop_back();
		}
	};
	rec(0);
	return subsets;
}

bool witness_maps_exactly(const Configuration &a, const Configuration &b,
                          const LinearMap &witness)
{
	Configuration mapped = scale_weights(apply_linear(a, witness.matrix), witness.scale_sq);
	return mapped.same_weighted_multiset(b);
}

// ---------------------------------------------------------------------------

void criterion_1_catalog_suite()
{
	auto start = Clock::now();
	std::mt19937_64 rng(2024);
	bool ok = true;
	std::string detail;
	auto expect_vee = [&](const Configuration &c) {
		if (!ok)
			return;
		if (!check_vee(c).is_vee_system) {
			ok = false;
			detail = "failed on " + c.label();
		}
	};

	for (int rep = 0; rep < 5 && ok; ++rep) {
		expect_vee(make_a_family(
		    {random_positive(rng), random_positive(rng), random_positive(rng),
		     random_positive(rng)}));
		expect_vee(make_b_gamma_family(random_positive(rng),
		                               {random_positive(rng), random_positive(rng),
		                                random_positive(rng), random_positive(rng)}));
	}
	for (const Rational &t :
	     {Rational(1), Rational(3, 4), Rational(1, 2), Rational(3), Rational(-2)})
		expect_vee(make_g3(t));
	for (int rep = 0; rep < 5 && ok; ++rep) {
		Rational t = random_nonzero(rng), s = random_nonzero(rng);
		if (is_zero(t + s + 1)) {
			--rep;
			continue;
		}
		expect_vee(make_d3(t, s));
	}
	for (int rep = 0; rep < 3 && ok; ++rep) {
		Rational t = random_nonzero(rng);
		expect_vee(make_ab4_a1_1(t));
		expect_vee(make_ab4_a1_2(t));
	}
	for (std::size_t rank = 1; rank <= 5 && ok; ++rank)
		expect_vee(coxeter_roots(CoxeterType::A, rank));
	for (std::size_t rank = 1; rank <= 5 && ok; ++rank)
		expect_vee(coxeter_roots(CoxeterType::B, rank));
	for (std::size_t rank = 2; rank <= 5 && ok; ++rank)
		expect_vee(coxeter_roots(CoxeterType::D, rank));
	expect_vee(coxeter_roots(CoxeterType::E6, 6));
	expect_vee(coxeter_roots(CoxeterType::E7, 7));
	expect_vee(coxeter_roots(CoxeterType::E8, 8));
	expect_vee(coxeter_roots(CoxeterType::F4, 4));

	double elapsed = seconds_since(start);
	if (ok && elapsed >= 60.0) {
		ok = false;
		detail = "exceeded the 60 s budget";
	}
	char stamp[64];
	std::snprintf(stamp, sizeof(stamp), "%.1fs of 60s budget", elapsed);
	verdict(1, "catalog vee-suite", ok, ok ? stamp : detail);
}

void criterion_2_oracle_agreement()
{
	std::vector<Configuration> corpus = catalog_corpus();
	for (auto &c : engineered_failures())
		corpus.push_back(std::move(c));

	bool ok = corpus.size() >= 25;
	std::string detail = ok ? "" : "corpus too small";
	std::size_t observed_failures = 0;
	for (const auto &c : corpus) {
		if (!ok)
			break;
		bool vee = check_vee(c).is_vee_system;
		bool wdvv = check_wdvv(c, sample_points(c, 3, 42));
		if (vee != wdvv) {
			ok = false;
			detail = "disagreement on " + c.label();
		}
		if (!vee)
			++observed_failures;
	}
	if (ok && observed_failures < 5) {
		ok = false;
		detail = "fewer than 5 failing configurations exercised";
	}
	char stamp[96];
	std::snprintf(stamp, sizeof(stamp), "%zu configurations, %zu failures, 100%% agreement",
	              corpus.size(), observed_failures);
	verdict(2, "vee/WDVV oracle agreement", ok, ok ? stamp : detail);
}

void criterion_3_coxeter_restrictions()
{
	struct Target {
		const char *name;
		Rational t;
	};
	const Target targets[] = {{"(E7,A2^2)", Rational(1)},
	                          {"(E8,A5)", Rational(3, 4)},
	                          {"(E6,A1^3)", Rational(1, 2)}};
	bool ok = true;
	std::string detail;
	double worst = 0;
	for (const auto &target : targets) {
		if (!ok)
			break;
		auto start = Clock::now();
		std::vector<Configuration> classes;
		try {
			classes = named_restriction(target.name);
		} catch (const Error &e) {
			ok = false;
			detail = std::string(target.name) + ": " + e.what();
			break;
		}
		Configuration g3 = make_g3(target.t);
		std::size_t matches = 0;
		for (const auto &restricted : classes) {
			auto witness = find_equivalence(g3, restricted);
			if (witness && witness_maps_exactly(g3, restricted, *witness))
				++matches;
		}
		double elapsed = seconds_since(start);
		worst = std::max(worst, elapsed);
		if (matches == 0) {
			ok = false;
			detail = std::string(target.name) + ": no equivalent restriction class";
		} else if (elapsed >= 300.0) {
			ok = false;
			detail = std::string(target.name) + ": exceeded the 5 min budget";
		}
	}
	char stamp[96];
	std::snprintf(stamp, sizeof(stamp), "all three matched, worst pair %.1fs of 300s", worst);
	verdict(3, "Coxeter restriction equivalences", ok, ok ? stamp : detail);
}

void criterion_4_length_spectrum()
{
	bool ok = true;
	std::string detail;

	std::multiset<Rational> expected;
	for (int k = 0; k < 3; ++k)
		expected.insert(Rational(1, 6));
	for (int k = 0; k < 3; ++k)
		expected.insert(Rational(5, 42));
	for (int k = 0; k < 6; ++k)
		expected.insert(Rational(2, 21));
	expected.insert(Rational(1, 14));
	Fingerprint fp = fingerprint(make_g3(3));
	std::multiset<Rational> actual(fp.lengths.begin(), fp.lengths.end());
	if (actual != expected) {
		ok = false;
		detail = "length multiset of G3(3) differs";
	}
	if (make_g3(1).size() != 13) {
		ok = false;
		detail = "G3(1) covector count";
	}
	if (make_g3(Rational(1, 2)).size() != 10) {
		ok = false;
		detail = "G3(1/2) covector count";
	}
	verdict(4, "length spectrum and covector counts", ok, detail);
}

void criterion_5_d3_family_equivalences()
{
	bool ok = true;
	std::string detail;
	auto expect_match = [&](const Configuration &a, const Configuration &b,
	                        const char *what) {
		if (!ok)
			return;
		auto witness = find_equivalence(a, b);
		if (!witness || !witness_maps_exactly(a, b, *witness)) {
			ok = false;
			detail = what;
		}
	};
	expect_match(make_d3(2, 2), make_b_gamma_family(-1, {1, 1, 4}), "D3(2,2) vs B3(-1;1,1,4)");
	expect_match(make_d3(3, 1), make_d3(Rational(1, 3), Rational(1, 3)),
	             "D3(3,1) vs D3(1/3,1/3)");
	expect_match(make_d3(1, 2), make_a_family({1, 1, 1, 1}), "D3(1,2) vs A3(1,1,1,1)");
	expect_match(make_d3(3, 2), make_a_family({2, 2, 1, 1}), "D3(3,2) vs A3(2,2,1,1)");

	Configuration outlier = make_d3(2, 5);
	Fingerprint outlier_fp = fingerprint(outlier);
	for (const Rational &s : {Rational(2), Rational(3), Rational(4), Rational(1, 2),
	                          Rational(5), Rational(7, 3)}) {
		if (!ok)
			break;
		Configuration b3 = make_b_gamma_family(-1, {1, 1, s});
		if (fingerprint(b3) == outlier_fp) {
			ok = false;
			detail = "unexpected fingerprint match for D3(2,5)";
		}
		if (find_equivalence(outlier, b3)) {
			ok = false;
			detail = "unexpected equivalence for D3(2,5)";
		}
	}
	verdict(5, "D3-family equivalences and refutation", ok, detail);
}

void criterion_6_degeneracy_loci()
{
	bool ok = true;
	std::string detail;
	if (!is_zero(det(canonical_form(make_g3(Rational(-1, 2)))))) {
		ok = false;
		detail = "G3(-1/2) should be degenerate";
	}
	for (const Rational &t : {Rational(1), Rational(2)})
		if (is_zero(det(canonical_form(make_g3(t))))) {
			ok = false;
			detail = "G3 degenerate off the locus";
		}
	for (auto [t, s] : std::vector<std::pair<Rational, Rational>>{
	         {1, -2}, {-3, 2}, {Rational(-1, 2), Rational(-1, 2)}})
		if (!is_zero(det(canonical_form(make_d3(t, s))))) {
			ok = false;
			detail = "D3 not degenerate on the locus";
		}
	for (auto [t, s] : std::vector<std::pair<Rational, Rational>>{{2, 2}, {3, 1}, {1, 5}})
		if (is_zero(det(canonical_form(make_d3(t, s))))) {
			ok = false;
			detail = "D3 degenerate off the locus";
		}
	verdict(6, "degeneracy loci", ok, detail);
}

void criterion_7_euclidean_suite()
{
	bool ok = true;
	std::string detail;
	Configuration d3 = make_d3(1, -2);
	if (!(canonical_form(d3) == Matrix(3, 3))) {
		ok = false;
		detail = "canonical form of D3(1,-2) is not zero";
	}
	Matrix balanced(3, 3);
	balanced(0, 0) = 1;
	balanced(1, 1) = 1;
	balanced(2, 2) = -2;
	if (ok && !euclidean_check(d3, balanced).is_vee_system) {
		ok = false;
		detail = "euclidean check failed with diag(1,1,-2)";
	}
	if (ok && euclidean_check(d3, Matrix::identity(3)).is_vee_system) {
		ok = false;
		detail = "euclidean check passed with the identity";
	}
	if (ok)
		for (const auto &x : sample_points(d3, 5, 7))
			if (!check_degenerate_kernel(d3, x)) {
				ok = false;
				detail = "kernel contraction nonzero for D3(1,-2)";
			}
	if (ok) {
		Configuration g3 = make_g3(1);
		for (const auto &x : sample_points(g3, 5, 7))
			if (check_degenerate_kernel(g3, x)) {
				ok = false;
				detail = "kernel contraction vanished for G3(1)";
			}
	}
	verdict(7, "degenerate-form euclidean suite", ok, detail);
}

void criterion_8_structural_suites()
{
	bool ok = true;
	std::string detail;
	auto fail = [&](const std::string &what) {
		if (ok) {
			ok = false;
			detail = what;
		}
	};

	// Theorems about subsystems and restrictions, swept exhaustively over
	// the 3-dimensional catalog systems.
	for (const auto &c : small_vee_systems()) {
		if (!ok)
			break;
		auto subsets = index_subsets(c.size(), c.dimension());
		std::set<Matrix, MatrixLess> seen_spans;
		for (const auto &subset : subsets) {
			if (!ok)
				break;
			SubsystemSpec spec = make_subsystem_spec(c, subset);
			if (!seen_spans.insert(spec.span).second)
				continue;
			SubsystemVerdict dichotomy = check_subsystem_property(c, subset);
			if (dichotomy.status == VerdictStatus::Violated)
				fail("subsystem dichotomy violated in " + c.label());
			try {
				Configuration sub = subsystem(c, subset);
				if (!check_vee(sub).is_vee_system)
					fail("subsystem of " + c.label() + " is not a vee-system");
			} catch (const IsotropicSubsystemError &) {
			}
			if (spec.span.rows() < c.dimension()) {
				try {
					Configuration restricted = restriction(c, subset);
					if (!check_vee(restricted).is_vee_system)
						fail("restriction of " + c.label() +
						     " is not a vee-system");
				} catch (const DegenerateRestrictionError &) {
				}
			}
		}
	}

	// Tangency of the limit product on 20 randomized instances.
	if (ok) {
		std::mt19937_64 rng(4096);
		auto hosts = small_vee_systems();
		std::size_t instances = 0;
		while (instances < 20 && ok) {
			const Configuration &c = hosts[instances % hosts.size()];
			std::size_t pick = rng() % c.size();
			SubsystemSpec spec = make_subsystem_spec(c, {pick});
			auto kernel = kernel_basis(spec.span);
			if (kernel.empty())
				continue;
			auto in_closure = [&](std::size_t i) {
				for (std::size_t m : spec.closure)
					if (m == i)
						return true;
				return false;
			};
			auto combine = [&](bool generic_needed) {
				for (;;) {
					Vector z(kernel.size());
					for (auto &entry : z)
						entry = Rational(static_cast<long>(rng() % 19) - 9);
					Vector x(c.dimension());
					for (std::size_t k = 0; k < kernel.size(); ++k)
						for (std::size_t d = 0; d < c.dimension(); ++d)
							x[d] += z[k] * kernel[k][d];
					if (!generic_needed)
						return x;
					bool generic = !is_zero_vector(x);
					for (std::size_t i = 0; i < c.size() && generic; ++i)
						if (!in_closure(i) &&
						    is_zero(dot(c.covector(i).direction, x)))
							generic = false;
					if (generic)
						return x;
				}
			};
			SamplePoint x{combine(true)};
			Vector u = combine(false);
			Vector v = combine(false);
			if (!check_tangency_limit(c, {pick}, x, u, v))
				fail("limit product left the subspace in " + c.label());
			++instances;
		}
	}

	// Invariance of the checker and the fingerprint under 20 random
	// transformations and weight rescalings.
	if (ok) {
		std::mt19937_64 rng(8192);
		std::vector<Configuration> probes{make_g3(1), make_d3(2, 5),
		                                  coxeter_roots(CoxeterType::B, 3),
		                                  engineered_failures()[0]};
		for (int rep = 0; rep < 20 && ok; ++rep) {
			const Configuration &c = probes[rep % probes.size()];
			bool vee = check_vee(c).is_vee_system;
			Matrix p = random_invertible(rng, c.dimension());
			Configuration moved = apply_linear(c, p);
			if (check_vee(moved).is_vee_system != vee)
				fail("check_vee not GL-invariant on " + c.label());
			Rational rho = random_nonzero(rng);
			if (check_vee(scale_weights(c, rho)).is_vee_system != vee)
				fail("check_vee not weight-scale invariant on " + c.label());
			if (vee) {
				Fingerprint fp = fingerprint(c);
				if (!(fingerprint(moved) == fp) ||
				    !(fingerprint(scale_weights(c, rho)) == fp))
					fail("fingerprint not invariant on " + c.label());
			}
		}
	}

	verdict(8, "structural theorem suites", ok, detail);
}

} // namespace

int main()
{
	criterion_1_catalog_suite();
	criterion_2_oracle_agreement();
	criterion_3_coxeter_restrictions();
	criterion_4_length_spectrum();
	criterion_5_d3_family_equivalences();
	criterion_6_degeneracy_loci();
	criterion_7_euclidean_suite();
	criterion_8_structural_suites();

	if (g_failures == 0)
		std::printf("acceptance: all 8 criteria passed\n");
	else
		std::printf("acceptance: %d criteria FAILED\n", g_failures);
	return g_failures == 0 ? 0 : 1;
}
