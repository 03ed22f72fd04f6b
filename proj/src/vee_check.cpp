#include "veesys/vee_check.hpp"

#include <algorithm>
#include <cassert>

#include "veesys/errors.hpp"

namespace veesys {

namespace {

Matrix inverse_form(const Configuration &c)
{
	try {
		return invert(canonical_form(c));
	} catch (const SingularMatrixError &) {
		throw DegenerateFormError();
	}
}

// Connectivity of the orthogonality graph whose edge (i,j) exists iff
// pairing(i,j) ≠ 0. Disconnected means reducible.
bool orthogonality_connected(std::size_t n, const std::vector<std::vector<bool>> &adjacent)
{
	if (n == 0)
		return true;
	std::vector<bool> seen(n, false);
	std::vector<std::size_t> stack{0};
	seen[0] = true;
	std::size_t visited = 1;
	while (!stack.empty()) {
		std::size_t v = stack.back();
		stack.pop_back();
		for (std::size_t w = 0; w < n; ++w)
			if (adjacent[v][w] && !seen[w]) {
				seen[w] = true;
				++visited;
				stack.push_back(w);
			}
	}
	return visited == n;
}

PlaneVerdict check_plane_with(const Configuration &c, const Matrix &ginv, const Plane &p)
{
	PlaneVerdict verdict;
	verdict.plane = p;
	const auto &covs = c.covectors();
	std::size_t k = p.members.size();

	std::vector<Vector> duals(k);
	for (std::size_t i = 0; i < k; ++i)
		duals[i] = ginv * covs[p.members[i]].direction;
	Matrix pairing(k, k);
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = 0; j < k; ++j)
			pairing(i, j) = dot(covs[p.members[i]].direction, duals[j]);

	// Single-λ proportionality: s(αᵢ) = Σⱼ mⱼ·pairing(j,i)·βⱼ^∨ = λ·αᵢ^∨.
	std::optional<Rational> lambda;
	bool proportional = true;
	std::optional<std::size_t> first_failure;
	for (std::size_t i = 0; i < k && proportional; ++i) {
		Vector s(c.dimension());
		for (std::size_t j = 0; j < k; ++j) {
			Rational f = covs[p.members[j]].weight * pairing(j, i);
			if (is_zero(f))
				continue;
			for (std::size_t d = 0; d < c.dimension(); ++d)
				s[d] += f * duals[j][d];
		}
		std::size_t lead = 0;
		while (lead < c.dimension() && is_zero(duals[i][lead]))
			++lead;
		assert(lead < c.dimension());
		Rational li = s[lead] / duals[i][lead];
		for (std::size_t d = 0; d < c.dimension() && proportional; ++d)
			if (s[d] != li * duals[i][d])
				proportional = false;
		if (proportional && lambda && *lambda != li)
			proportional = false;
		if (!proportional)
			first_failure = p.members[i];
		else
			lambda = li;
	}
	if (proportional) {
		verdict.status = VerdictStatus::Proportional;
		verdict.lambda = lambda;
		return verdict;
	}

	std::vector<std::vector<bool>> adjacent(k, std::vector<bool>(k, false));
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = i + 1; j < k; ++j)
			adjacent[i][j] = adjacent[j][i] = !is_zero(pairing(i, j));
	if (!orthogonality_connected(k, adjacent)) {
		verdict.status = VerdictStatus::Reducible;
		return verdict;
	}

	verdict.status = VerdictStatus::Violated;
	verdict.witness = first_failure;
	return verdict;
}

} // namespace

PlaneVerdict check_plane(const Configuration &c, const Plane &p)
{
	return check_plane_with(c, inverse_form(c), p);
}

VeeReport check_vee(const Configuration &c)
{
	VeeReport report;
	Matrix g = canonical_form(c);
	if (is_zero(det(g))) {
		report.degenerate_form = true;
		report.is_vee_system = false;
		return report;
	}
	Matrix ginv = invert(g);
	report.is_vee_system = true;
	for (const auto &plane : enumerate_planes(c)) {
		report.verdicts.push_back(check_plane_with(c, ginv, plane));
		if (!report.verdicts.back().passes())
			report.is_vee_system = false;
	}
	return report;
}

SubsystemVerdict check_subsystem_property(const Configuration &c,
                                          const std::vector<std::size_t> &generating)
{
	Matrix ginv = inverse_form(c);
	const auto &covs = c.covectors();

	std::vector<Vector> gen_rows;
	for (std::size_t i : generating)
		gen_rows.push_back(covs[i].direction);
	Matrix u = rref(from_rows(gen_rows, c.dimension()));
	std::size_t k = rank(u);
	Matrix span(k, c.dimension());
	for (std::size_t r = 0; r < k; ++r)
		for (std::size_t col = 0; col < c.dimension(); ++col)
			span(r, col) = u(r, col);

	std::vector<std::size_t> closure;
	Vector coords;
	for (std::size_t i = 0; i < covs.size(); ++i)
		if (coordinates_in_rowspace(span, covs[i].direction, coords))
			closure.push_back(i);

	// G_A restricted to W^∨ × V is the span basis itself: (G⁻¹u)ᵀG = uᵀ.
	Matrix g_b(c.dimension(), c.dimension());
	for (std::size_t i : closure) {
		const auto &cov = covs[i];
		for (std::size_t r = 0; r < c.dimension(); ++r) {
			if (is_zero(cov.direction[r]))
				continue;
			Rational wr = cov.weight * cov.direction[r];
			for (std::size_t col = 0; col < c.dimension(); ++col)
				g_b(r, col) += wr * cov.direction[col];
		}
	}
	Matrix restricted_b(k, c.dimension());
	for (std::size_t r = 0; r < k; ++r) {
		Vector w = ginv * span.row(r);
		for (std::size_t col = 0; col < c.dimension(); ++col) {
			Rational s = 0;
			for (std::size_t d = 0; d < c.dimension(); ++d)
				s += w[d] * g_b(d, col);
			restricted_b(r, col) = s;
		}
	}

	SubsystemVerdict verdict;
	std::optional<Rational> lambda;
	bool proportional = true;
	for (std::size_t r = 0; r < k && proportional; ++r)
		for (std::size_t col = 0; col < c.dimension() && proportional; ++col) {
			if (is_zero(span(r, col))) {
				if (!is_zero(restricted_b(r, col)))
					proportional = false;
				continue;
			}
			Rational ratio = restricted_b(r, col) / span(r, col);
			if (!lambda)
				lambda = ratio;
			else if (*lambda != ratio)
				proportional = false;
		}
	if (proportional) {
		verdict.status = VerdictStatus::Proportional;
		verdict.lambda = lambda ? lambda : std::optional<Rational>(Rational(0));
		return verdict;
	}

	std::size_t m = closure.size();
	std::vector<Vector> duals(m);
	for (std::size_t i = 0; i < m; ++i)
		duals[i] = ginv * covs[closure[i]].direction;
	std::vector<std::vector<bool>> adjacent(m, std::vector<bool>(m, false));
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = i + 1; j < m; ++j)
			adjacent[i][j] = adjacent[j][i] =
			    !is_zero(dot(covs[closure[i]].direction, duals[j]));
	if (!orthogonality_connected(m, adjacent)) {
		verdict.status = VerdictStatus::Reducible;
		return verdict;
	}
	verdict.status = VerdictStatus::Violated;
	return verdict;
}

bool check_identity_pi(const Configuration &c, std::size_t alpha, const Plane &p,
                       const Vector &a, const Vector &b)
{
	Matrix ginv = inverse_form(c);
	if (std::find(p.members.begin(), p.members.end(), alpha) == p.members.end())
		throw Error("covector index is not a member of the plane");
	const auto &ca = c.covector(alpha);
	Vector dual_a = ginv * ca.direction;
	Rational alpha_a = dot(ca.direction, a);
	Rational alpha_b = dot(ca.direction, b);
	Rational total = 0;
	for (std::size_t j : p.members) {
		const auto &cb = c.covector(j);
		Rational pairing = dot(cb.direction, dual_a);
		if (is_zero(pairing))
			continue;
		Rational bracket = alpha_a * dot(cb.direction, b) - alpha_b * dot(cb.direction, a);
		total += ca.weight * cb.weight * pairing * bracket;
	}
	return is_zero(total);
}

namespace {

// Gram matrices of the weighted system and of the background over a basis
// of pairing vectors, using (α,x) = αᵀ·B·x throughout.
void background_grams(const Configuration &c, const Matrix &background,
                      const std::vector<std::size_t> &members,
                      const std::vector<Vector> &basis, Matrix &gram_sys, Matrix &gram_bg)
{
	std::size_t k = basis.size();
	std::vector<Vector> bw(k);
	for (std::size_t i = 0; i < k; ++i)
		bw[i] = background * basis[i];
	gram_sys = Matrix(k, k);
	gram_bg = Matrix(k, k);
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = i; j < k; ++j) {
			Rational s = 0;
			for (std::size_t m : members) {
				const auto &cov = c.covector(m);
				s += cov.weight * dot(cov.direction, bw[i]) * dot(cov.direction, bw[j]);
			}
			gram_sys(i, j) = s;
			gram_sys(j, i) = gram_sys(i, j);
			gram_bg(i, j) = dot(basis[i], bw[j]);
			gram_bg(j, i) = gram_bg(i, j);
		}
}

enum class PropOutcome { No, Lambda, BackgroundZero };

PropOutcome gram_proportional(const Matrix &gram_sys, const Matrix &gram_bg,
                              std::optional<Rational> &lambda)
{
	lambda.reset();
	bool sys_zero = true, bg_zero = true;
	for (std::size_t i = 0; i < gram_sys.rows(); ++i)
		for (std::size_t j = 0; j < gram_sys.cols(); ++j) {
			if (!is_zero(gram_sys(i, j)))
				sys_zero = false;
			if (!is_zero(gram_bg(i, j)))
				bg_zero = false;
		}
	if (sys_zero) {
		lambda = Rational(0);
		return PropOutcome::Lambda;
	}
	if (bg_zero)
		return PropOutcome::BackgroundZero; // totally isotropic restriction
	for (std::size_t i = 0; i < gram_sys.rows(); ++i)
		for (std::size_t j = 0; j < gram_sys.cols(); ++j) {
			if (is_zero(gram_bg(i, j)))
				continue;
			Rational ratio = gram_sys(i, j) / gram_bg(i, j);
			if (!lambda)
				lambda = ratio;
			else if (*lambda != ratio)
				return PropOutcome::No;
		}
	for (std::size_t i = 0; i < gram_sys.rows(); ++i)
		for (std::size_t j = 0; j < gram_sys.cols(); ++j)
			if (gram_sys(i, j) != *lambda * gram_bg(i, j))
				return PropOutcome::No;
	return PropOutcome::Lambda;
}

void validate_background(const Configuration &c, const Matrix &background)
{
	if (background.rows() != c.dimension() || background.cols() != c.dimension())
		throw DimensionMismatchError("background must match the ambient dimension");
	if (!is_symmetric(background))
		throw Error("background must be symmetric");
	if (is_zero(det(background)))
		throw SingularMatrixError("background must be nonsingular");
}

} // namespace

std::optional<Rational> well_distributed(const Configuration &c, const Matrix &background,
                                         const Plane *subspace)
{
	validate_background(c, background);
	std::vector<Vector> basis;
	std::vector<std::size_t> members;
	if (subspace) {
		for (std::size_t r = 0; r < subspace->key.rows(); ++r)
			basis.push_back(subspace->key.row(r));
		members = subspace->members;
	} else {
		for (std::size_t i = 0; i < c.dimension(); ++i) {
			Vector e(c.dimension());
			e[i] = 1;
			basis.push_back(std::move(e));
		}
		members.resize(c.size());
		for (std::size_t i = 0; i < c.size(); ++i)
			members[i] = i;
	}
	Matrix gram_sys, gram_bg;
	background_grams(c, background, members, basis, gram_sys, gram_bg);
	std::optional<Rational> lambda;
	if (gram_proportional(gram_sys, gram_bg, lambda) != PropOutcome::Lambda)
		return std::nullopt;
	return lambda;
}

VeeReport euclidean_check(const Configuration &c, const Matrix &background)
{
	validate_background(c, background);
	VeeReport report;
	report.euclidean = true;
	report.global_lambda = well_distributed(c, background);
	report.is_vee_system = report.global_lambda.has_value();

	for (const auto &plane : enumerate_planes(c)) {
		PlaneVerdict verdict;
		verdict.plane = plane;

		std::vector<Vector> basis{plane.key.row(0), plane.key.row(1)};
		Matrix gram_sys, gram_bg;
		background_grams(c, background, plane.members, basis, gram_sys, gram_bg);
		std::optional<Rational> lambda;
		if (gram_proportional(gram_sys, gram_bg, lambda) != PropOutcome::No) {
			verdict.status = VerdictStatus::Proportional;
			verdict.lambda = lambda;
			report.verdicts.push_back(std::move(verdict));
			continue;
		}

		std::size_t k = plane.members.size();
		std::vector<Vector> paired(k);
		for (std::size_t i = 0; i < k; ++i)
			paired[i] = background * c.covector(plane.members[i]).direction;
		std::vector<std::vector<bool>> adjacent(k, std::vector<bool>(k, false));
		for (std::size_t i = 0; i < k; ++i)
			for (std::size_t j = i + 1; j < k; ++j)
				adjacent[i][j] = adjacent[j][i] =
				    !is_zero(dot(c.covector(plane.members[i]).direction, paired[j]));
		if (!orthogonality_connected(k, adjacent)) {
			verdict.status = VerdictStatus::Reducible;
		} else {
			verdict.status = VerdictStatus::Violated;
			verdict.witness = plane.members.front();
			report.is_vee_system = false;
		}
		report.verdicts.push_back(std::move(verdict));
	}
	return report;
}

} // namespace veesys
