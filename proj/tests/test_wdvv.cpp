#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "veesys/catalog.hpp"
#include "veesys/errors.hpp"
#include "veesys/vee_check.hpp"
#include "veesys/wdvv.hpp"

using namespace veesys;

namespace {

Configuration broken_b3()
{
	return Configuration::build(3, {{{1, 1, 0}, 1},
	                                {{1, -1, 0}, 1},
	                                {{1, 0, 1}, 1},
	                                {{1, 0, -1}, 1},
	                                {{0, 1, 1}, 1},
	                                {{0, 1, -1}, 1},
	                                {{1, 0, 0}, 2},
	                                {{0, 1, 0}, 2},
	                                {{0, 0, 1}, 5}});
}

Vector random_vector(std::mt19937_64 &rng, std::size_t n)
{
	Vector v(n);
	for (auto &x : v)
		x = Rational(static_cast<long>(rng() % 19) - 9);
	return v;
}

bool associative_at_samples(const Configuration &c, std::uint64_t seed)
{
	std::mt19937_64 rng(seed);
	auto points = sample_points(c, 3, seed);
	for (const auto &x : points) {
		Vector u = random_vector(rng, c.dimension());
		Vector v = random_vector(rng, c.dimension());
		Vector w = random_vector(rng, c.dimension());
		Vector left = frobenius_product(c, x, frobenius_product(c, x, u, v), w);
		Vector right = frobenius_product(c, x, u, frobenius_product(c, x, v, w));
		if (left != right)
			return false;
	}
	return true;
}

} // namespace

TEST_CASE("third derivative of the 1-dimensional prepotential")
{
	auto c = Configuration::build(1, {{{1}, 1}});
	SamplePoint x{{2}};
	CHECK(third_derivative_matrix(c, 0, x) == Matrix{{2}});
	SamplePoint origin{{0}};
	CHECK_THROWS_AS(third_derivative_matrix(c, 0, origin), OnHyperplaneError);
}

TEST_CASE("third derivatives are symmetric and contract to four times the form")
{
	for (const Configuration &c : {make_g3(1), make_d3(2, 5), broken_b3()}) {
		std::size_t n = c.dimension();
		Matrix g = canonical_form(c);
		for (const auto &x : sample_points(c, 2, 17)) {
			std::vector<Matrix> f(n);
			for (std::size_t i = 0; i < n; ++i)
				f[i] = third_derivative_matrix(c, i, x);
			for (std::size_t i = 0; i < n; ++i) {
				CHECK(is_symmetric(f[i]));
				for (std::size_t a = 0; a < n; ++a)
					for (std::size_t b = 0; b < n; ++b)
						CHECK(f[i](a, b) == f[a](i, b));
				Vector contracted = f[i] * x.coordinates;
				for (std::size_t j = 0; j < n; ++j)
					CHECK(contracted[j] == 4 * g(i, j));
			}
		}
	}
}

TEST_CASE("sample points are generic and reproducible")
{
	Configuration g3 = make_g3(1);
	auto pts1 = sample_points(g3, 3, 7);
	auto pts2 = sample_points(g3, 3, 7);
	REQUIRE(pts1.size() == 3);
	for (std::size_t k = 0; k < 3; ++k)
		CHECK(pts1[k].coordinates == pts2[k].coordinates);
	for (const auto &x : pts1)
		for (std::size_t i = 0; i < g3.size(); ++i)
			CHECK_FALSE(is_zero(dot(g3.covector(i).direction, x.coordinates)));
}

TEST_CASE("WDVV holds for catalog members and fails off family")
{
	CHECK(check_wdvv(make_g3(1), sample_points(make_g3(1), 3, 5)));
	CHECK(check_wdvv(make_d3(2, 5), sample_points(make_d3(2, 5), 3, 5)));
	Configuration bad = broken_b3();
	CHECK_FALSE(check_wdvv(bad, sample_points(bad, 3, 5)));

	auto flat = Configuration::build(2, {{{1, 0}, 1}, {{0, 1}, 2}, {{1, 3}, 7}});
	CHECK(check_wdvv(flat, sample_points(flat, 3, 5)));

	CHECK_THROWS_AS(check_wdvv(make_d3(1, -2), {SamplePoint{{1, 2, 4}}}),
	                DegenerateFormError);
}

TEST_CASE("frobenius product: one-dimensional closed form, symmetry, bilinearity")
{
	auto c = Configuration::build(1, {{{1}, 1}});
	SamplePoint x{{3}};
	CHECK(frobenius_product(c, x, {5}, {7}) == Vector{Rational(35, 3)});

	Configuration g3 = make_g3(1);
	std::mt19937_64 rng(29);
	auto pts = sample_points(g3, 2, 29);
	for (const auto &pt : pts) {
		Vector u = random_vector(rng, 3);
		Vector v = random_vector(rng, 3);
		Vector w = random_vector(rng, 3);
		CHECK(frobenius_product(g3, pt, u, v) == frobenius_product(g3, pt, v, u));
		Vector uv_w = frobenius_product(g3, pt, add(u, v), w);
		CHECK(uv_w ==
		      add(frobenius_product(g3, pt, u, w), frobenius_product(g3, pt, v, w)));
	}
}

TEST_CASE("associativity of the product tracks the WDVV verdict")
{
	Configuration good = make_g3(1);
	CHECK(associative_at_samples(good, 31));
	CHECK(check_wdvv(good, sample_points(good, 3, 31)));

	Configuration bad = broken_b3();
	CHECK_FALSE(associative_at_samples(bad, 31));
	CHECK_FALSE(check_wdvv(bad, sample_points(bad, 3, 31)));
}

TEST_CASE("tangency of the limit product on B3")
{
	Configuration b3 = coxeter_roots(CoxeterType::B, 3);
	SamplePoint x{{1, 2, 0}};
	Vector e1{1, 0, 0};
	CHECK(check_tangency_limit(b3, {8}, x, e1, e1));

	// precondition violations are rejected
	Vector e3{0, 0, 1};
	CHECK_THROWS_AS(check_tangency_limit(b3, {8}, x, e3, e1), Error);
	SamplePoint off{{1, 2, 3}};
	CHECK_THROWS_AS(check_tangency_limit(b3, {8}, off, e1, e1), Error);
	SamplePoint on_hyperplane{{1, -1, 0}};
	CHECK_THROWS_AS(check_tangency_limit(b3, {8}, on_hyperplane, e1, e1),
	                OnHyperplaneError);

	// an empty subsystem imposes no tangency constraint
	CHECK(check_tangency_limit(b3, {}, SamplePoint{{1, 2, 4}}, e1, e1));
}

TEST_CASE("degenerate kernel contraction")
{
	Configuration d3 = make_d3(1, -2);
	CHECK(check_degenerate_kernel(d3, SamplePoint{{1, 2, 4}}));
	for (const auto &x : sample_points(d3, 5, 3))
		CHECK(check_degenerate_kernel(d3, x));

	Configuration g3 = make_g3(1);
	for (const auto &x : sample_points(g3, 3, 3))
		CHECK_FALSE(check_degenerate_kernel(g3, x));

	// agreement with the vanishing of the canonical form
	for (const Configuration &c : {make_d3(1, -2), make_d3(2, 5), make_g3(2)}) {
		bool zero_form = canonical_form(c) == Matrix(3, 3);
		CHECK(check_degenerate_kernel(c, sample_points(c, 1, 11)[0]) == zero_form);
	}
}
