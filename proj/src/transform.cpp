#include "veesys/transform.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>

#include "veesys/errors.hpp"

namespace veesys {

namespace {

struct SpanInfo {
	Matrix basis; // rref, zero rows trimmed
	std::vector<std::size_t> pivots;
};

SpanInfo row_span_info(const Configuration &c, const std::vector<std::size_t> &indices)
{
	std::vector<Vector> rows;
	for (std::size_t i : indices)
		rows.push_back(c.covector(i).direction);
	SpanInfo info;
	Matrix u = rref(from_rows(rows, c.dimension()), info.pivots);
	std::size_t k = info.pivots.size();
	info.basis = Matrix(k, c.dimension());
	for (std::size_t r = 0; r < k; ++r)
		for (std::size_t col = 0; col < c.dimension(); ++col)
			info.basis(r, col) = u(r, col);
	return info;
}

std::vector<std::size_t> closure_in_span(const Configuration &c, const SpanInfo &span)
{
	std::vector<std::size_t> closure;
	for (std::size_t i = 0; i < c.size(); ++i)
		if (in_rowspace(span.basis, span.pivots, c.covector(i).direction))
			closure.push_back(i);
	return closure;
}

} // namespace

SubsystemSpec make_subsystem_spec(const Configuration &c,
                                  const std::vector<std::size_t> &indices)
{
	SubsystemSpec spec;
	spec.indices = indices;
	SpanInfo info = row_span_info(c, indices);
	spec.closure = closure_in_span(c, info);
	spec.span = std::move(info.basis);
	return spec;
}

Configuration subsystem(const Configuration &c, const std::vector<std::size_t> &indices)
{
	Matrix g = canonical_form(c);
	Matrix ginv;
	try {
		ginv = invert(g);
	} catch (const SingularMatrixError &) {
		throw DegenerateFormError();
	}

	SubsystemSpec spec = make_subsystem_spec(c, indices);
	std::size_t k = spec.span.rows();

	// Non-isotropicity: the Gram of G_B over the basis G⁻¹·uᵢ of W^∨.
	std::vector<Vector> w_basis(k);
	for (std::size_t r = 0; r < k; ++r)
		w_basis[r] = ginv * spec.span.row(r);
	Matrix gram(k, k);
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = i; j < k; ++j) {
			Rational s = 0;
			for (std::size_t m : spec.closure) {
				const auto &cov = c.covector(m);
				s += cov.weight * dot(cov.direction, w_basis[i]) *
				     dot(cov.direction, w_basis[j]);
			}
			gram(i, j) = s;
			gram(j, i) = gram(i, j);
		}
	if (is_zero(det(gram)))
		throw IsotropicSubsystemError();

	std::vector<WeightedCovector> raw;
	Vector coords;
	for (std::size_t m : spec.closure) {
		bool ok = coordinates_in_rowspace(spec.span, c.covector(m).direction, coords);
		assert(ok);
		(void)ok;
		raw.push_back(WeightedCovector{coords, c.covector(m).weight});
	}
	return Configuration::build(k, raw, std::nullopt, c.label() + " | subsystem");
}

Configuration restriction(const Configuration &c, const std::vector<std::size_t> &b_indices)
{
	SpanInfo span_info = row_span_info(c, b_indices);
	const Matrix &span = span_info.basis;
	auto closure = closure_in_span(c, span_info);
	auto kernel = kernel_basis(span);
	if (kernel.empty())
		throw DegenerateRestrictionError("restriction target is 0-dimensional");
	std::size_t k = kernel.size();

	Matrix g = canonical_form(c);
	Matrix gram(k, k);
	for (std::size_t i = 0; i < k; ++i) {
		Vector gk = g * kernel[i];
		for (std::size_t j = 0; j < k; ++j)
			gram(i, j) = dot(kernel[j], gk);
	}
	if (is_zero(det(gram)))
		throw DegenerateRestrictionError();

	std::vector<bool> in_closure(c.size(), false);
	for (std::size_t i : closure)
		in_closure[i] = true;

	std::vector<WeightedCovector> raw;
	for (std::size_t i = 0; i < c.size(); ++i) {
		if (in_closure[i])
			continue;
		const auto &cov = c.covector(i);
		Vector restricted(k);
		for (std::size_t j = 0; j < k; ++j)
			restricted[j] = dot(cov.direction, kernel[j]);
		if (is_zero_vector(restricted))
			continue; // cannot happen after closure; kept as a guard
		raw.push_back(WeightedCovector{std::move(restricted), cov.weight});
	}
	return Configuration::build(k, raw, std::nullopt, c.label() + " | restriction");
}

Configuration apply_linear(const Configuration &c, const Matrix &p)
{
	if (p.rows() != c.dimension() || p.cols() != c.dimension())
		throw DimensionMismatchError("linear map must be n×n");
	Matrix pinv = invert(p); // throws SingularMatrixError
	std::vector<WeightedCovector> raw;
	for (const auto &cov : c.covectors())
		raw.push_back(WeightedCovector{p * cov.direction, cov.weight});
	std::optional<Matrix> background;
	if (c.background())
		background = pinv.transposed() * *c.background() * pinv;
	return Configuration::build(c.dimension(), raw, std::move(background), c.label());
}

Configuration scale_weights(const Configuration &c, const Rational &rho)
{
	if (is_zero(rho))
		throw ZeroWeightError("weight scale must be nonzero");
	std::vector<WeightedCovector> raw;
	for (const auto &cov : c.covectors())
		raw.push_back(WeightedCovector{cov.direction, cov.weight * rho});
	return Configuration::build(c.dimension(), raw, c.background(), c.label());
}

// ---------------------------------------------------------------------------
// Equivalence search
// ---------------------------------------------------------------------------

namespace {

struct InvariantKey {
	Rational length;
	std::vector<std::size_t> incidence;
};

bool key_less(const InvariantKey &a, const InvariantKey &b)
{
	int s = cmp(a.length, b.length);
	if (s != 0)
		return s < 0;
	return a.incidence < b.incidence;
}

bool key_equal(const InvariantKey &a, const InvariantKey &b)
{
	return a.length == b.length && a.incidence == b.incidence;
}

std::vector<InvariantKey> covector_keys(const Configuration &c, const Matrix &ginv)
{
	std::vector<InvariantKey> keys(c.size());
	for (std::size_t i = 0; i < c.size(); ++i)
		keys[i].length = covector_length_sq(c, ginv, i);
	for (const auto &plane : enumerate_planes(c))
		for (std::size_t m : plane.members)
			keys[m].incidence.push_back(plane.members.size());
	for (auto &key : keys)
		std::sort(key.incidence.begin(), key.incidence.end());
	return keys;
}

// Exact rational square root; empty when the value is not a square.
std::optional<Rational> rational_sqrt(const Rational &q)
{
	if (sgn(q) < 0)
		return std::nullopt;
	if (is_zero(q))
		return Rational(0);
	if (!mpz_perfect_square_p(q.get_num_mpz_t()) ||
	    !mpz_perfect_square_p(q.get_den_mpz_t()))
		return std::nullopt;
	Rational root;
	mpz_sqrt(root.get_num_mpz_t(), q.get_num_mpz_t());
	mpz_sqrt(root.get_den_mpz_t(), q.get_den_mpz_t());
	root.canonicalize();
	return root;
}

struct SearchContext {
	const Configuration &a;
	const Configuration &b;
	std::vector<InvariantKey> keys_a;
	std::vector<InvariantKey> keys_b;
	std::map<Vector, std::size_t> b_dir_index;
};

Matrix columns_of(const Configuration &c, const std::vector<std::size_t> &idx)
{
	Matrix m(c.dimension(), idx.size());
	for (std::size_t j = 0; j < idx.size(); ++j)
		for (std::size_t r = 0; r < c.dimension(); ++r)
			m(r, j) = c.covector(idx[j]).direction[r];
	return m;
}

// Verifies a candidate matrix: every source covector must land (after
// normalization) on a distinct target direction with one global scale
// squared. Returns the witness on success.
std::optional<LinearMap> verify_candidate(const SearchContext &ctx, const Matrix &p)
{
	const auto &a = ctx.a;
	const auto &b = ctx.b;
	std::vector<std::size_t> sigma(a.size());
	std::vector<bool> used(b.size(), false);
	std::optional<Rational> scale_sq;
	for (std::size_t i = 0; i < a.size(); ++i) {
		Vector image = p * a.covector(i).direction;
		if (is_zero_vector(image))
			return std::nullopt;
		WeightedCovector norm = normalize(image, Rational(1));
		auto it = ctx.b_dir_index.find(norm.direction);
		if (it == ctx.b_dir_index.end() || used[it->second])
			return std::nullopt;
		// norm.weight is the squared normalization scalar κ̂².
		Rational c_sq = b.covector(it->second).weight / (a.covector(i).weight * norm.weight);
		if (sgn(c_sq) <= 0)
			return std::nullopt;
		if (!scale_sq)
			scale_sq = c_sq;
		else if (*scale_sq != c_sq)
			return std::nullopt;
		sigma[i] = it->second;
		used[it->second] = true;
	}
	LinearMap witness{p, *scale_sq, std::move(sigma)};
	Configuration mapped = scale_weights(apply_linear(a, witness.matrix), witness.scale_sq);
	if (!mapped.same_weighted_multiset(b))
		return std::nullopt;
	return witness;
}

// DFS over ordered image tuples whose per-covector invariants match the
// frame's, in increasing index order.
template <typename Fn>
bool for_each_image_tuple(const SearchContext &ctx, const std::vector<std::size_t> &frame,
                          Fn &&try_tuple)
{
	std::vector<std::size_t> tuple(frame.size());
	std::vector<bool> used(ctx.b.size(), false);
	std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
		if (depth == frame.size())
			return try_tuple(tuple);
		for (std::size_t j = 0; j < ctx.b.size(); ++j) {
			if (used[j] || !key_equal(ctx.keys_b[j], ctx.keys_a[frame[depth]]))
				continue;
			used[j] = true;
			tuple[depth] = j;
			if (rec(depth + 1))
				return true;
			used[j] = false;
		}
		return false;
	};
	return rec(0);
}

// The unique (up to scale) dependence coefficients of n+1 directions in
// general position; empty if the family is not in general position.
std::optional<Vector> dependence_coefficients(const Configuration &c,
                                              const std::vector<std::size_t> &idx)
{
	Matrix cols = columns_of(c, idx);
	auto kernel = kernel_basis(cols);
	if (kernel.size() != 1)
		return std::nullopt;
	for (const auto &entry : kernel[0])
		if (is_zero(entry))
			return std::nullopt;
	return kernel[0];
}

std::optional<LinearMap> frame_search(const SearchContext &ctx,
                                      const std::vector<std::size_t> &frame,
                                      const Vector &gamma)
{
	std::size_t n = ctx.a.dimension();
	std::vector<std::size_t> base(frame.begin(), frame.begin() + n);
	Matrix a_cols = columns_of(ctx.a, base);
	Matrix a_cols_inv = invert(a_cols);

	std::optional<LinearMap> found;
	for_each_image_tuple(ctx, frame, [&](const std::vector<std::size_t> &tuple) {
		auto delta = dependence_coefficients(ctx.b, tuple);
		if (!delta)
			return false;
		// P·a_k = μ_k·b_k with μ_k = δ_k/γ_k (dependences must correspond).
		Matrix scaled_b(n, n);
		for (std::size_t k = 0; k < n; ++k) {
			Rational mu = (*delta)[k] / gamma[k];
			for (std::size_t r = 0; r < n; ++r)
				scaled_b(r, k) = mu * ctx.b.covector(tuple[k]).direction[r];
		}
		Matrix p = scaled_b * a_cols_inv;
		auto witness = verify_candidate(ctx, p);
		if (witness) {
			found = std::move(witness);
			return true;
		}
		return false;
	});
	return found;
}

// Exact-basis case: both configurations have exactly n covectors; scalars
// are pinned by the weight condition instead of a frame anchor.
std::optional<LinearMap> basis_search(const SearchContext &ctx,
                                      const std::vector<std::size_t> &order_a)
{
	std::size_t n = ctx.a.dimension();
	Matrix a_cols = columns_of(ctx.a, order_a);
	if (is_zero(det(a_cols)))
		return std::nullopt;
	Matrix a_cols_inv = invert(a_cols);

	std::optional<LinearMap> found;
	for_each_image_tuple(ctx, order_a, [&](const std::vector<std::size_t> &tuple) {
		Rational c_sq =
		    ctx.b.covector(tuple[0]).weight / ctx.a.covector(order_a[0]).weight;
		if (sgn(c_sq) <= 0)
			return false;
		Matrix scaled_b(n, n);
		for (std::size_t k = 0; k < n; ++k) {
			Rational kappa_sq = ctx.b.covector(tuple[k]).weight /
			                    (ctx.a.covector(order_a[k]).weight * c_sq);
			auto kappa = rational_sqrt(kappa_sq);
			if (!kappa)
				return false;
			for (std::size_t r = 0; r < n; ++r)
				scaled_b(r, k) = *kappa * ctx.b.covector(tuple[k]).direction[r];
		}
		Matrix p = scaled_b * a_cols_inv;
		if (is_zero(det(p)))
			return false;
		auto witness = verify_candidate(ctx, p);
		if (witness) {
			found = std::move(witness);
			return true;
		}
		return false;
	});
	return found;
}

// Ratio-weighted union-find over basis slots: find(k) returns the root and
// the multiplier r with μ_k = r·μ_root.
struct RatioUnion {
	std::vector<std::size_t> parent;
	std::vector<Rational> ratio;

	explicit RatioUnion(std::size_t n) : parent(n), ratio(n, Rational(1))
	{
		std::iota(parent.begin(), parent.end(), std::size_t{0});
	}

	std::pair<std::size_t, Rational> find(std::size_t k)
	{
		if (parent[k] == k)
			return {k, Rational(1)};
		auto [root, r] = find(parent[k]);
		parent[k] = root;
		ratio[k] = ratio[k] * r;
		return {root, ratio[k]};
	}

	// Impose μ_i = q·μ_j; false on contradiction.
	bool merge(std::size_t i, std::size_t j, const Rational &q)
	{
		auto [ri, mi] = find(i);
		auto [rj, mj] = find(j);
		if (ri == rj)
			return mi == q * mj;
		parent[ri] = rj;
		ratio[ri] = q * mj / mi;
		return true;
	}
};

// General fallback for configurations without a projective frame: pick a
// spanning basis, enumerate key-compatible images for everything, and pin
// the per-column scalars by ratio propagation plus the single-scale weight
// condition (one free scalar per orthogonal-component of the constraint
// graph, resolved by exact square roots).
std::optional<LinearMap> propagation_search(const SearchContext &ctx,
                                            const std::vector<std::size_t> &order_a)
{
	std::size_t n = ctx.a.dimension();
	std::vector<std::size_t> basis;
	std::vector<Vector> rows;
	for (std::size_t i : order_a) {
		rows.push_back(ctx.a.covector(i).direction);
		if (rank(from_rows(rows, n)) == rows.size())
			basis.push_back(i);
		else
			rows.pop_back();
		if (basis.size() == n)
			break;
	}
	if (basis.size() != n)
		return std::nullopt;
	std::vector<std::size_t> rest;
	for (std::size_t i : order_a)
		if (std::find(basis.begin(), basis.end(), i) == basis.end())
			rest.push_back(i);

	Matrix a_cols = columns_of(ctx.a, basis);
	Matrix a_cols_inv = invert(a_cols);
	std::vector<Vector> rest_coords;
	for (std::size_t r : rest)
		rest_coords.push_back(a_cols_inv * ctx.a.covector(r).direction);

	std::optional<LinearMap> found;
	for_each_image_tuple(ctx, basis, [&](const std::vector<std::size_t> &tuple) {
		Matrix cols = columns_of(ctx.b, tuple);
		if (is_zero(det(cols)))
			return false;
		Matrix b_cols_inv = invert(cols);

		std::vector<bool> used(ctx.b.size(), false);
		for (std::size_t j : tuple)
			used[j] = true;

		RatioUnion uf(n);
		std::function<bool(std::size_t)> assign = [&](std::size_t depth) -> bool {
			if (depth == rest.size()) {
				// Scales per ratio-component from the weight condition on
				// basis slots (every component contains a basis slot).
				std::vector<std::optional<Rational>> comp_value(n);
				for (std::size_t k = 0; k < n; ++k) {
					Rational v = ctx.b.covector(tuple[k]).weight /
					             ctx.a.covector(basis[k]).weight;
					auto [root, r] = uf.find(k);
					Rational scaled = v / (r * r);
					if (!comp_value[root])
						comp_value[root] = scaled;
					else if (*comp_value[root] != scaled)
						return false;
				}
				auto [root0, r0] = uf.find(0);
				(void)r0;
				if (sgn(*comp_value[root0]) <= 0)
					return false;
				Rational c_sq = *comp_value[root0];
				std::vector<Rational> mu(n);
				for (std::size_t k = 0; k < n; ++k) {
					auto [root, r] = uf.find(k);
					auto s = rational_sqrt(*comp_value[root] / c_sq);
					if (!s || is_zero(*s))
						return false;
					mu[k] = r * *s;
				}
				Matrix scaled_b(n, n);
				for (std::size_t k = 0; k < n; ++k)
					for (std::size_t row = 0; row < n; ++row)
						scaled_b(row, k) =
						    mu[k] * ctx.b.covector(tuple[k]).direction[row];
				Matrix p = scaled_b * a_cols_inv;
				if (is_zero(det(p)))
					return false;
				auto witness = verify_candidate(ctx, p);
				if (witness) {
					found = std::move(witness);
					return true;
				}
				return false;
			}

			const Vector &gamma = rest_coords[depth];
			for (std::size_t j = 0; j < ctx.b.size(); ++j) {
				if (used[j] || !key_equal(ctx.keys_b[j], ctx.keys_a[rest[depth]]))
					continue;
				Vector delta = b_cols_inv * ctx.b.covector(j).direction;
				bool pattern_ok = true;
				for (std::size_t k = 0; k < n && pattern_ok; ++k)
					if (is_zero(gamma[k]) != is_zero(delta[k]))
						pattern_ok = false;
				if (!pattern_ok)
					continue;
				RatioUnion saved = uf;
				std::size_t first_active = n;
				bool ok = true;
				for (std::size_t k = 0; k < n && ok; ++k) {
					if (is_zero(gamma[k]))
						continue;
					if (first_active == n) {
						first_active = k;
						continue;
					}
					// μ_k/μ_first = (δ_k/γ_k)/(δ_first/γ_first)
					Rational q = (delta[k] / gamma[k]) /
					             (delta[first_active] / gamma[first_active]);
					ok = uf.merge(k, first_active, q);
				}
				if (ok && first_active < n) {
					used[j] = true;
					if (assign(depth + 1))
						return true;
					used[j] = false;
				}
				uf = saved;
			}
			return false;
		};
		return assign(0);
	});
	return found;
}

} // namespace

std::optional<LinearMap> find_equivalence(const Configuration &a, const Configuration &b)
{
	if (a.dimension() != b.dimension() || a.size() != b.size())
		return std::nullopt;
	Matrix ginv_a, ginv_b;
	try {
		ginv_a = invert(canonical_form(a));
		ginv_b = invert(canonical_form(b));
	} catch (const SingularMatrixError &) {
		throw DegenerateFormError();
	}
	if (!(fingerprint(a) == fingerprint(b)))
		return std::nullopt;

	SearchContext ctx{a, b, covector_keys(a, ginv_a), covector_keys(b, ginv_b), {}};
	for (std::size_t j = 0; j < b.size(); ++j)
		ctx.b_dir_index.emplace(b.covector(j).direction, j);

	std::size_t n = a.dimension();
	std::vector<std::size_t> order_a(a.size());
	std::iota(order_a.begin(), order_a.end(), std::size_t{0});
	std::sort(order_a.begin(), order_a.end(), [&](std::size_t i, std::size_t j) {
		if (!key_equal(ctx.keys_a[i], ctx.keys_a[j]))
			return key_less(ctx.keys_a[i], ctx.keys_a[j]);
		return i < j;
	});

	if (a.size() >= n + 1) {
		// First frame (n+1 covectors in general position) in lexicographic
		// order over the sorted sequence. One frame suffices: the image
		// enumeration inside frame_search is exhaustive.
		std::vector<std::size_t> pick(n + 1);
		std::function<std::optional<std::vector<std::size_t>>(std::size_t, std::size_t)>
		    find_frame = [&](std::size_t start,
		                     std::size_t depth) -> std::optional<std::vector<std::size_t>> {
			if (depth == n + 1) {
				if (dependence_coefficients(a, pick))
					return pick;
				return std::nullopt;
			}
			for (std::size_t s = start; s < order_a.size(); ++s) {
				pick[depth] = order_a[s];
				if (auto frame = find_frame(s + 1, depth + 1))
					return frame;
			}
			return std::nullopt;
		};
		if (auto frame = find_frame(0, 0)) {
			auto gamma = dependence_coefficients(a, *frame);
			return frame_search(ctx, *frame, *gamma);
		}
	}
	if (a.size() == n)
		return basis_search(ctx, order_a);
	return propagation_search(ctx, order_a);
}

} // namespace veesys
