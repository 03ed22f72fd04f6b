#include "veesys/wdvv.hpp"

#include <random>

#include "veesys/errors.hpp"

namespace veesys {

namespace {

// Values a(x) for every covector; throws when x lies on a hyperplane.
std::vector<Rational> evaluations(const Configuration &c, const Vector &x)
{
	std::vector<Rational> vals(c.size());
	for (std::size_t i = 0; i < c.size(); ++i) {
		vals[i] = dot(c.covector(i).direction, x);
		if (is_zero(vals[i]))
			throw OnHyperplaneError();
	}
	return vals;
}

Matrix inverse_form_or_throw(const Configuration &c)
{
	try {
		return invert(canonical_form(c));
	} catch (const SingularMatrixError &) {
		throw DegenerateFormError();
	}
}

} // namespace

std::vector<SamplePoint> sample_points(const Configuration &c, std::size_t count,
                                       std::uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::vector<SamplePoint> points;
	while (points.size() < count) {
		Vector x(c.dimension());
		for (auto &coord : x)
			coord = Rational(static_cast<long>(rng() % 19) - 9);
		bool generic = true;
		for (std::size_t i = 0; i < c.size() && generic; ++i)
			if (is_zero(dot(c.covector(i).direction, x)))
				generic = false;
		if (generic)
			points.push_back(SamplePoint{std::move(x)});
	}
	return points;
}

Matrix third_derivative_matrix(const Configuration &c, std::size_t axis,
                               const SamplePoint &x)
{
	std::size_t n = c.dimension();
	auto vals = evaluations(c, x.coordinates);
	Matrix f(n, n);
	for (std::size_t k = 0; k < c.size(); ++k) {
		const auto &cov = c.covector(k);
		if (is_zero(cov.direction[axis]))
			continue;
		Rational factor = 4 * cov.weight * cov.direction[axis] / vals[k];
		for (std::size_t a = 0; a < n; ++a) {
			if (is_zero(cov.direction[a]))
				continue;
			Rational fa = factor * cov.direction[a];
			for (std::size_t b = 0; b < n; ++b)
				f(a, b) += fa * cov.direction[b];
		}
	}
	return f;
}

bool check_wdvv(const Configuration &c, const std::vector<SamplePoint> &points)
{
	Matrix ginv = inverse_form_or_throw(c);
	std::size_t n = c.dimension();
	for (const auto &x : points) {
		std::vector<Matrix> f(n);
		for (std::size_t i = 0; i < n; ++i)
			f[i] = third_derivative_matrix(c, i, x);
		std::vector<Matrix> fg(n);
		for (std::size_t i = 0; i < n; ++i)
			fg[i] = f[i] * ginv;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i + 1; j < n; ++j)
				if (!(fg[i] * f[j] == fg[j] * f[i]))
					return false;
	}
	return true;
}

Vector frobenius_product(const Configuration &c, const SamplePoint &x, const Vector &u,
                         const Vector &v)
{
	Matrix ginv = inverse_form_or_throw(c);
	auto vals = evaluations(c, x.coordinates);
	Vector acc(c.dimension());
	for (std::size_t k = 0; k < c.size(); ++k) {
		const auto &cov = c.covector(k);
		Rational factor =
		    cov.weight * dot(cov.direction, u) * dot(cov.direction, v) / vals[k];
		if (is_zero(factor))
			continue;
		for (std::size_t d = 0; d < c.dimension(); ++d)
			acc[d] += factor * cov.direction[d];
	}
	return ginv * acc;
}

bool check_tangency_limit(const Configuration &c, const std::vector<std::size_t> &b_indices,
                          const SamplePoint &x, const Vector &u, const Vector &v)
{
	Matrix ginv = inverse_form_or_throw(c);

	std::vector<Vector> rows;
	for (std::size_t i : b_indices)
		rows.push_back(c.covector(i).direction);
	Matrix span = rref(from_rows(rows, c.dimension()));
	std::size_t k = rank(span);
	Matrix basis(k, c.dimension());
	for (std::size_t r = 0; r < k; ++r)
		for (std::size_t col = 0; col < c.dimension(); ++col)
			basis(r, col) = span(r, col);

	std::vector<bool> in_closure(c.size(), false);
	Vector coords;
	for (std::size_t i = 0; i < c.size(); ++i)
		in_closure[i] = coordinates_in_rowspace(basis, c.covector(i).direction, coords);

	for (std::size_t r = 0; r < k; ++r) {
		Vector beta = basis.row(r);
		if (!is_zero(dot(beta, x.coordinates)))
			throw Error("point is not on the subsystem subspace");
		if (!is_zero(dot(beta, u)) || !is_zero(dot(beta, v)))
			throw Error("tangent vectors must annihilate the subsystem covectors");
	}

	Vector acc(c.dimension());
	for (std::size_t i = 0; i < c.size(); ++i) {
		if (in_closure[i])
			continue;
		const auto &cov = c.covector(i);
		Rational val = dot(cov.direction, x.coordinates);
		if (is_zero(val))
			throw OnHyperplaneError();
		Rational factor = cov.weight * dot(cov.direction, u) * dot(cov.direction, v) / val;
		if (is_zero(factor))
			continue;
		for (std::size_t d = 0; d < c.dimension(); ++d)
			acc[d] += factor * cov.direction[d];
	}
	Vector limit = ginv * acc;

	for (std::size_t r = 0; r < k; ++r)
		if (!is_zero(dot(basis.row(r), limit)))
			return false;
	return true;
}

bool check_degenerate_kernel(const Configuration &c, const SamplePoint &x)
{
	std::size_t n = c.dimension();
	for (std::size_t i = 0; i < n; ++i) {
		Matrix f = third_derivative_matrix(c, i, x);
		Vector contracted = f * x.coordinates;
		if (!is_zero_vector(contracted))
			return false;
	}
	return true;
}

} // namespace veesys
