#include "veesys/configuration.hpp"

#include <algorithm>
#include <map>

#include "veesys/errors.hpp"

namespace veesys {

WeightedCovector normalize(const Vector &direction, const Rational &weight)
{
	// Entry point for covector data: re-canonicalize in case a caller
	// built an mpq value from a raw non-coprime pair.
	WeightedCovector out;
	out.direction = direction;
	for (auto &entry : out.direction)
		entry.canonicalize();
	out.weight = weight;
	out.weight.canonicalize();
	if (is_zero(out.weight))
		throw ZeroWeightError();
	std::size_t lead = 0;
	while (lead < out.direction.size() && is_zero(out.direction[lead]))
		++lead;
	if (lead == out.direction.size())
		throw ZeroDirectionError();
	Rational scale = out.direction[lead];
	for (std::size_t i = 0; i < out.direction.size(); ++i)
		out.direction[i] /= scale;
	out.weight *= scale * scale;
	return out;
}

Configuration Configuration::build(std::size_t dimension,
                                   const std::vector<WeightedCovector> &raw,
                                   std::optional<Matrix> background,
                                   std::string label)
{
	Configuration c;
	c.dimension_ = dimension;
	c.label_ = std::move(label);
	if (background) {
		if (background->rows() != dimension || background->cols() != dimension)
			throw DimensionMismatchError("background must be n×n");
		if (!is_symmetric(*background))
			throw DimensionMismatchError("background must be symmetric");
		if (is_zero(det(*background)))
			throw SingularMatrixError("background must be nonsingular");
		c.background_ = std::move(background);
	}

	// Merge parallels in first-occurrence order so file indices are stable.
	std::map<Vector, std::size_t> seen;
	std::vector<WeightedCovector> merged;
	for (const auto &entry : raw) {
		if (entry.direction.size() != dimension)
			throw DimensionMismatchError("covector direction has wrong length");
		WeightedCovector n = normalize(entry.direction, entry.weight);
		auto [it, inserted] = seen.emplace(n.direction, merged.size());
		if (inserted)
			merged.push_back(std::move(n));
		else
			merged[it->second].weight += n.weight;
	}
	for (auto &cov : merged)
		if (!is_zero(cov.weight))
			c.covectors_.push_back(std::move(cov));
	if (c.covectors_.empty())
		throw EmptyConfigurationError();
	return c;
}

bool Configuration::same_weighted_multiset(const Configuration &other) const
{
	if (dimension_ != other.dimension_ || covectors_.size() != other.covectors_.size())
		return false;
	std::map<Vector, Rational> table;
	for (const auto &cov : covectors_)
		table[cov.direction] = cov.weight;
	for (const auto &cov : other.covectors_) {
		auto it = table.find(cov.direction);
		if (it == table.end() || it->second != cov.weight)
			return false;
	}
	return true;
}

Matrix canonical_form(const Configuration &c)
{
	std::size_t n = c.dimension();
	Matrix g(n, n);
	for (const auto &cov : c.covectors())
		for (std::size_t i = 0; i < n; ++i) {
			if (is_zero(cov.direction[i]))
				continue;
			Rational wi = cov.weight * cov.direction[i];
			for (std::size_t j = 0; j < n; ++j)
				g(i, j) += wi * cov.direction[j];
		}
	return g;
}

Vector dual(const Configuration &c, std::size_t index)
{
	Matrix g = canonical_form(c);
	try {
		return solve(g, c.covector(index).direction);
	} catch (const SingularMatrixError &) {
		throw DegenerateFormError();
	}
}

std::vector<Plane> enumerate_planes(const Configuration &c)
{
	const auto &covs = c.covectors();
	std::map<Matrix, std::vector<std::size_t>, MatrixLess> planes;
	for (std::size_t i = 0; i < covs.size(); ++i)
		for (std::size_t j = i + 1; j < covs.size(); ++j) {
			Matrix key = rref(from_rows({covs[i].direction, covs[j].direction},
			                            c.dimension()));
			auto &members = planes[key];
			for (std::size_t k : {i, j})
				if (std::find(members.begin(), members.end(), k) == members.end())
					members.push_back(k);
		}
	std::vector<Plane> out;
	out.reserve(planes.size());
	for (auto &[key, members] : planes) {
		std::sort(members.begin(), members.end());
		out.push_back(Plane{key, std::move(members)});
	}
	return out;
}

Rational covector_length_sq(const Configuration &c, const Matrix &ginv, std::size_t index)
{
	const auto &cov = c.covector(index);
	// Halved because the stored set carries one representative per ± pair
	// while lengths refer to the full symmetric system.
	return cov.weight * dot(cov.direction, ginv * cov.direction) / 2;
}

Fingerprint fingerprint(const Configuration &c)
{
	Matrix g = canonical_form(c);
	Matrix ginv;
	try {
		ginv = invert(g);
	} catch (const SingularMatrixError &) {
		throw DegenerateFormError();
	}

	Fingerprint fp;
	fp.dimension = c.dimension();
	fp.count = c.size();

	std::vector<Rational> lengths(c.size());
	for (std::size_t i = 0; i < c.size(); ++i)
		lengths[i] = covector_length_sq(c, ginv, i);

	std::vector<std::vector<std::size_t>> incident(c.size());
	for (const auto &plane : enumerate_planes(c)) {
		fp.plane_profile.push_back(plane.members.size());
		for (std::size_t m : plane.members)
			incident[m].push_back(plane.members.size());
	}
	std::sort(fp.plane_profile.begin(), fp.plane_profile.end());

	for (std::size_t i = 0; i < c.size(); ++i) {
		std::sort(incident[i].begin(), incident[i].end());
		fp.per_covector.emplace_back(lengths[i], std::move(incident[i]));
	}
	std::sort(fp.per_covector.begin(), fp.per_covector.end());

	fp.lengths = std::move(lengths);
	std::sort(fp.lengths.begin(), fp.lengths.end());
	return fp;
}

} // namespace veesys
