#include "veesys/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "veesys/errors.hpp"
#include "veesys/rational.hpp"

namespace veesys {

namespace {

Vector unit(std::size_t n, std::size_t i)
{
	Vector v(n);
	v[i] = 1;
	return v;
}

Vector unit_pm(std::size_t n, std::size_t i, std::size_t j, int sign)
{
	Vector v(n);
	v[i] = 1;
	v[j] = sign;
	return v;
}

void push(std::vector<WeightedCovector> &raw, Vector dir, Rational weight)
{
	if (is_zero(weight))
		return; // vanished entry of the family, dropped
	raw.push_back(WeightedCovector{std::move(dir), std::move(weight)});
}

} // namespace

Configuration make_a_family(const std::vector<Rational> &raw_params)
{
	std::vector<Rational> c;
	for (const auto &ci : raw_params)
		c.push_back(canonical(ci));
	if (c.size() < 2)
		throw ParameterDomainError("A family needs at least two parameters");
	for (const auto &ci : c)
		if (is_zero(ci))
			throw ParameterDomainError("A family parameters must be nonzero");
	std::size_t n = c.size() - 1;
	std::vector<WeightedCovector> raw;
	// Coordinates on the sum-zero hyperplane: x_{n+1} = −(x_1+…+x_n), so
	// e_i − e_{n+1} pulls back to e_i + (1,…,1).
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j <= n; ++j) {
			Vector dir;
			if (j < n) {
				dir = unit_pm(n, i, j, -1);
			} else {
				dir = Vector(n, Rational(1));
				dir[i] += 1;
			}
			push(raw, std::move(dir), c[i] * c[j]);
		}
	return Configuration::build(n, raw, std::nullopt, "A" + std::to_string(n));
}

Configuration make_b_gamma_family(const Rational &raw_gamma, const std::vector<Rational> &raw_params)
{
	Rational gamma = canonical(raw_gamma);
	std::vector<Rational> c;
	for (const auto &ci : raw_params)
		c.push_back(canonical(ci));
	if (c.empty())
		throw ParameterDomainError("B family needs at least one parameter");
	for (const auto &ci : c)
		if (is_zero(ci))
			throw ParameterDomainError("B family parameters must be nonzero");
	std::size_t n = c.size();
	std::vector<WeightedCovector> raw;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			push(raw, unit_pm(n, i, j, 1), c[i] * c[j]);
			push(raw, unit_pm(n, i, j, -1), c[i] * c[j]);
		}
	for (std::size_t i = 0; i < n; ++i)
		push(raw, unit(n, i), 2 * c[i] * (c[i] + gamma));
	return Configuration::build(n, raw, std::nullopt, "B" + std::to_string(n) + "(gamma)");
}

Configuration make_g3(const Rational &raw_t)
{
	Rational t = canonical(raw_t);
	if (is_zero(t))
		throw ParameterDomainError("G3 requires t != 0");
	std::vector<WeightedCovector> raw;
	Rational w1 = 2 * t + 1;
	Rational w2 = (2 * t - 1) / 3;
	push(raw, {1, 0, 0}, w1);
	push(raw, {0, 1, 0}, w1);
	push(raw, {1, 1, 0}, w1);
	push(raw, {1, -1, 0}, w2);
	push(raw, {2, 1, 0}, w2);
	push(raw, {1, 2, 0}, w2);
	push(raw, {0, 0, 1}, 3 / t);
	push(raw, {1, 0, 1}, 1);
	push(raw, {1, 0, -1}, 1);
	push(raw, {0, 1, 1}, 1);
	push(raw, {0, 1, -1}, 1);
	push(raw, {1, 1, 1}, 1);
	push(raw, {1, 1, -1}, 1);
	return Configuration::build(3, raw, std::nullopt, "G3(" + to_string(t) + ")");
}

Configuration make_d3(const Rational &raw_t, const Rational &raw_s)
{
	Rational t = canonical(raw_t);
	Rational s = canonical(raw_s);
	if (is_zero(t) || is_zero(s))
		throw ParameterDomainError("D3 requires t*s != 0");
	std::vector<WeightedCovector> raw;
	push(raw, {1, 1, 1}, 1);
	push(raw, {1, 1, -1}, 1);
	push(raw, {1, -1, 1}, 1);
	push(raw, {1, -1, -1}, 1);
	push(raw, {1, 0, 0}, 2 * (t + s - 1));
	push(raw, {0, 1, 0}, 2 * (s - t + 1) / t);
	push(raw, {0, 0, 1}, 2 * (t - s + 1) / s);
	return Configuration::build(3, raw, std::nullopt,
	                            "D3(" + to_string(t) + "," + to_string(s) + ")");
}

Configuration make_ab4_a1_1(const Rational &raw_t)
{
	Rational t = canonical(raw_t);
	if (is_zero(t))
		throw ParameterDomainError("AB4_A1_1 requires t != 0");
	Rational t2 = t * t;
	std::vector<WeightedCovector> raw;
	push(raw, {1, 0, 0}, 2 * (2 * t2 + 1));
	push(raw, {0, 1, 0}, 8 * (t2 + 1));
	push(raw, {0, 0, 1}, 2 * t2 * (2 * t2 - 1) / (t2 + 1));
	push(raw, {1, 1, 0}, 2);
	push(raw, {1, -1, 0}, 2);
	push(raw, {1, 0, 1}, 2 * t2);
	push(raw, {1, 0, -1}, 2 * t2);
	push(raw, {1, 2, 1}, t2);
	push(raw, {1, 2, -1}, t2);
	push(raw, {1, -2, 1}, t2);
	push(raw, {1, -2, -1}, t2);
	return Configuration::build(3, raw, std::nullopt, "AB4_A1_1(" + to_string(t) + ")");
}

Configuration make_ab4_a1_2(const Rational &raw_t)
{
	Rational t = canonical(raw_t);
	if (is_zero(t))
		throw ParameterDomainError("AB4_A1_2 requires t != 0");
	Rational t2 = t * t;
	std::vector<WeightedCovector> raw;
	push(raw, {1, 1, 0}, 1);
	push(raw, {1, 0, 1}, 1);
	push(raw, {0, 1, 1}, 1);
	push(raw, {1, 0, 0}, 2);
	push(raw, {0, 1, 0}, 2);
	push(raw, {0, 0, 1}, 2);
	push(raw, {1, 1, 1}, 2 * t2 / (t2 + 1));
	push(raw, {1, -1, 0}, 1 / (4 * t2 + 1));
	push(raw, {1, 0, -1}, 1 / (4 * t2 + 1));
	push(raw, {0, 1, -1}, 1 / (4 * t2 + 1));
	return Configuration::build(3, raw, std::nullopt, "AB4_A1_2(" + to_string(t) + ")");
}

Configuration make_ab4_a1_1_limit()
{
	std::vector<WeightedCovector> raw;
	push(raw, {1, 0, 0}, 4);
	push(raw, {0, 1, 0}, 8);
	push(raw, {0, 0, 1}, 4);
	push(raw, {1, 0, 1}, 2);
	push(raw, {1, 0, -1}, 2);
	push(raw, {1, 2, 1}, 1);
	push(raw, {1, 2, -1}, 1);
	push(raw, {1, -2, 1}, 1);
	push(raw, {1, -2, -1}, 1);
	return Configuration::build(3, raw, std::nullopt, "AB4_A1_1(inf)");
}

Configuration make_ab4_a1_2_limit()
{
	std::vector<WeightedCovector> raw;
	push(raw, {1, 1, 0}, 1);
	push(raw, {1, 0, 1}, 1);
	push(raw, {0, 1, 1}, 1);
	push(raw, {1, 0, 0}, 2);
	push(raw, {0, 1, 0}, 2);
	push(raw, {0, 0, 1}, 2);
	push(raw, {1, 1, 1}, 2);
	return Configuration::build(3, raw, std::nullopt, "AB4_A1_2(inf)");
}

namespace {

std::vector<Vector> e8_positive_roots()
{
	std::vector<Vector> roots;
	for (std::size_t i = 0; i < 8; ++i)
		for (std::size_t j = i + 1; j < 8; ++j)
			for (int sign : {1, -1})
				roots.push_back(unit_pm(8, i, j, sign));
	// Half-integer roots, one per ± pair (first coordinate +1/2), with an
	// even number of minus signs overall.
	for (unsigned mask = 0; mask < 128; ++mask) {
		if (__builtin_popcount(mask) % 2 != 0)
			continue;
		Vector v(8, Rational(1, 2));
		for (std::size_t k = 0; k < 7; ++k)
			if (mask & (1u << k))
				v[k + 1] = Rational(-1, 2);
		roots.push_back(std::move(v));
	}
	return roots;
}

Configuration make_e8()
{
	std::vector<WeightedCovector> raw;
	for (auto &root : e8_positive_roots())
		raw.push_back(WeightedCovector{std::move(root), Rational(1)});
	return Configuration::build(8, raw, std::nullopt, "E8");
}

// E7 / E6 as the subsystems of E8 orthogonal to e7+e8 (and e6+e7).
Configuration make_e_subsystem(std::size_t target_rank)
{
	Configuration e8 = make_e8();
	std::vector<Vector> pins{unit_pm(8, 6, 7, 1)};
	if (target_rank == 6)
		pins.push_back(unit_pm(8, 5, 6, 1));
	std::vector<std::size_t> selected;
	for (std::size_t i = 0; i < e8.size(); ++i) {
		bool orthogonal = true;
		for (const auto &pin : pins)
			if (!is_zero(dot(e8.covector(i).direction, pin)))
				orthogonal = false;
		if (orthogonal)
			selected.push_back(i);
	}
	Configuration sub = subsystem(e8, selected);
	assert(sub.dimension() == target_rank);
	return sub;
}

} // namespace

Configuration coxeter_roots(CoxeterType type, std::size_t rank, const Rational &raw_t_sq)
{
	Rational t_sq = canonical(raw_t_sq);
	switch (type) {
	case CoxeterType::A: {
		if (rank < 1)
			throw ParameterDomainError("A rank must be >= 1");
		return make_a_family(std::vector<Rational>(rank + 1, Rational(1)));
	}
	case CoxeterType::B: {
		if (rank < 1)
			throw ParameterDomainError("B rank must be >= 1");
		if (sgn(t_sq) <= 0)
			throw ParameterDomainError("B requires t^2 > 0");
		std::vector<WeightedCovector> raw;
		for (std::size_t i = 0; i < rank; ++i)
			for (std::size_t j = i + 1; j < rank; ++j) {
				push(raw, unit_pm(rank, i, j, 1), 1);
				push(raw, unit_pm(rank, i, j, -1), 1);
			}
		for (std::size_t i = 0; i < rank; ++i)
			push(raw, unit(rank, i), t_sq);
		return Configuration::build(rank, raw, std::nullopt,
		                            "B" + std::to_string(rank) + "(t2=" + to_string(t_sq) + ")");
	}
	case CoxeterType::D: {
		if (rank < 2)
			throw ParameterDomainError("D rank must be >= 2");
		std::vector<WeightedCovector> raw;
		for (std::size_t i = 0; i < rank; ++i)
			for (std::size_t j = i + 1; j < rank; ++j) {
				push(raw, unit_pm(rank, i, j, 1), 1);
				push(raw, unit_pm(rank, i, j, -1), 1);
			}
		return Configuration::build(rank, raw, std::nullopt, "D" + std::to_string(rank));
	}
	case CoxeterType::E6:
		return make_e_subsystem(6);
	case CoxeterType::E7:
		return make_e_subsystem(7);
	case CoxeterType::E8:
		return make_e8();
	case CoxeterType::F4: {
		std::vector<WeightedCovector> raw;
		for (std::size_t i = 0; i < 4; ++i)
			for (std::size_t j = i + 1; j < 4; ++j) {
				push(raw, unit_pm(4, i, j, 1), 1);
				push(raw, unit_pm(4, i, j, -1), 1);
			}
		for (std::size_t i = 0; i < 4; ++i)
			push(raw, unit(4, i), 1);
		for (unsigned mask = 0; mask < 8; ++mask) {
			Vector v(4, Rational(1, 2));
			for (std::size_t k = 0; k < 3; ++k)
				if (mask & (1u << k))
					v[k + 1] = Rational(-1, 2);
			push(raw, std::move(v), 1);
		}
		return Configuration::build(4, raw, std::nullopt, "F4");
	}
	}
	throw UnknownTypeError();
}

namespace {

std::vector<Rational> parse_rational_list(const std::string &text)
{
	std::vector<Rational> out;
	std::size_t start = 0;
	while (start <= text.size()) {
		std::size_t comma = text.find(',', start);
		if (comma == std::string::npos)
			comma = text.size();
		out.push_back(parse_rational(text.substr(start, comma - start)));
		start = comma + 1;
	}
	return out;
}

} // namespace

Configuration make_family(const FamilySpec &spec)
{
	const auto &name = spec.name;
	auto get = [&](const std::string &key) -> std::optional<std::string> {
		auto it = spec.params.find(key);
		if (it == spec.params.end())
			return std::nullopt;
		return it->second;
	};
	auto only = [&](std::initializer_list<const char *> keys) {
		for (const auto &[key, value] : spec.params) {
			bool known = false;
			for (const char *k : keys)
				if (key == k)
					known = true;
			if (!known)
				throw ParameterDomainError("unexpected parameter '" + key + "' for " + name);
		}
	};
	auto no_params = [&]() {
		if (!spec.params.empty())
			throw ParameterDomainError(name + " takes no parameters");
	};

	if (name == "G3") {
		only({"t"});
		auto t = get("t");
		if (!t)
			throw ParameterDomainError("G3 requires t");
		return make_g3(parse_rational(*t));
	}
	if (name == "AB4_A1_1") {
		only({"t"});
		auto t = get("t");
		if (!t)
			throw ParameterDomainError("AB4_A1_1 requires t");
		return make_ab4_a1_1(parse_rational(*t));
	}
	if (name == "AB4_A1_2") {
		only({"t"});
		auto t = get("t");
		if (!t)
			throw ParameterDomainError("AB4_A1_2 requires t");
		return make_ab4_a1_2(parse_rational(*t));
	}
	if (name == "E6" || name == "E7" || name == "E8") {
		no_params();
		return coxeter_roots(name == "E6" ? CoxeterType::E6
		                                  : name == "E7" ? CoxeterType::E7 : CoxeterType::E8,
		                     name[1] - '0');
	}
	if (name == "F4") {
		no_params();
		return coxeter_roots(CoxeterType::F4, 4);
	}
	if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B' || name[0] == 'D')) {
		std::size_t rank = 0;
		for (std::size_t i = 1; i < name.size(); ++i) {
			if (name[i] < '0' || name[i] > '9')
				throw UnknownTypeError("unknown family '" + name + "'");
			rank = rank * 10 + static_cast<std::size_t>(name[i] - '0');
		}
		if (name[0] == 'A') {
			only({"c"});
			if (auto c = get("c")) {
				auto params = parse_rational_list(*c);
				if (params.size() != rank + 1)
					throw ParameterDomainError("expected " + std::to_string(rank + 1) +
					                           " entries in c");
				return make_a_family(params);
			}
			return coxeter_roots(CoxeterType::A, rank);
		}
		if (name[0] == 'B') {
			only({"gamma", "c", "t", "t2"});
			if (auto gamma = get("gamma")) {
				only({"gamma", "c"});
				std::vector<Rational> c(rank, Rational(1));
				if (auto clist = get("c")) {
					c = parse_rational_list(*clist);
					if (c.size() != rank)
						throw ParameterDomainError("expected " + std::to_string(rank) +
						                           " entries in c");
				}
				return make_b_gamma_family(parse_rational(*gamma), c);
			}
			only({"t", "t2"});
			Rational t_sq(1);
			if (auto t2 = get("t2"))
				t_sq = parse_rational(*t2);
			else if (auto t = get("t")) {
				Rational tv = parse_rational(*t);
				t_sq = tv * tv;
			}
			return coxeter_roots(CoxeterType::B, rank, t_sq);
		}
		// D: the two-parameter rank-3 family when t and s are given,
		// otherwise the Coxeter root system.
		only({"t", "s"});
		auto t = get("t");
		auto s = get("s");
		if (t && s) {
			if (rank != 3)
				throw ParameterDomainError("the (t,s) family exists in rank 3 only");
			return make_d3(parse_rational(*t), parse_rational(*s));
		}
		if (t || s)
			throw ParameterDomainError("the D3 family needs both t and s");
		return coxeter_roots(CoxeterType::D, rank);
	}
	throw UnknownTypeError("unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------
// Subsystem-type search
// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> parse_chain_type(const std::string &type)
{
	// Grammar: A<k>[^<m>] joined by '*', e.g. "A1^3", "A2^2", "A5", "A1*A2".
	std::vector<std::size_t> chains;
	std::size_t pos = 0;
	auto number = [&]() {
		std::size_t v = 0, start = pos;
		while (pos < type.size() && type[pos] >= '0' && type[pos] <= '9')
			v = v * 10 + static_cast<std::size_t>(type[pos++] - '0');
		if (pos == start)
			throw UnknownTypeError("bad type descriptor '" + type + "'");
		return v;
	};
	while (true) {
		if (pos >= type.size() || type[pos] != 'A')
			throw UnknownTypeError("bad type descriptor '" + type + "'");
		++pos;
		std::size_t k = number();
		std::size_t mult = 1;
		if (pos < type.size() && type[pos] == '^') {
			++pos;
			mult = number();
		}
		if (k == 0 || mult == 0)
			throw UnknownTypeError("bad type descriptor '" + type + "'");
		for (std::size_t m = 0; m < mult; ++m)
			chains.push_back(k);
		if (pos == type.size())
			break;
		if (type[pos] != '*')
			throw UnknownTypeError("bad type descriptor '" + type + "'");
		++pos;
	}
	std::sort(chains.rbegin(), chains.rend());
	return chains;
}

struct PairingTable {
	std::vector<Rational> length;              // m·aᵀG⁻¹a per covector
	std::vector<std::vector<int>> relation;    // 0 orth, -1 adjacency, 2 other
};

PairingTable build_pairing_table(const Configuration &c)
{
	Matrix ginv;
	try {
		ginv = invert(canonical_form(c));
	} catch (const SingularMatrixError &) {
		throw DegenerateFormError();
	}
	std::size_t n = c.size();
	PairingTable table;
	table.length.resize(n);
	std::vector<Vector> duals(n);
	for (std::size_t i = 0; i < n; ++i) {
		duals[i] = ginv * c.covector(i).direction;
		table.length[i] = c.covector(i).weight * dot(c.covector(i).direction, duals[i]);
	}
	table.relation.assign(n, std::vector<int>(n, 2));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j) {
			int rel = 2;
			if (i == j) {
				rel = 2;
			} else {
				Rational pairing = dot(c.covector(i).direction, duals[j]);
				if (is_zero(pairing)) {
					rel = 0;
				} else if (table.length[i] == table.length[j]) {
					// Simple-chain adjacency: ⟨α,β⟩ = −|α|²/2, tested on
					// squares with the sign recovered from the raw pairing
					// when both weights are positive.
					Rational lhs = 4 * c.covector(i).weight * c.covector(j).weight *
					               pairing * pairing;
					Rational rhs = table.length[i] * table.length[j];
					bool obtuse = sgn(c.covector(i).weight) > 0 &&
					                      sgn(c.covector(j).weight) > 0
					                  ? sgn(pairing) < 0
					                  : true;
					if (lhs == rhs && obtuse)
						rel = -1;
				}
			}
			table.relation[i][j] = rel;
			table.relation[j][i] = rel;
		}
	return table;
}

} // namespace

std::vector<SubsystemSpec> find_subsystems_of_type(const Configuration &c,
                                                   const std::string &type)
{
	auto chains = parse_chain_type(type);
	PairingTable table = build_pairing_table(c);
	std::size_t n = c.size();
	std::size_t total = 0;
	for (auto l : chains)
		total += l;

	std::vector<std::size_t> current;       // flat node list
	std::vector<std::size_t> factor_start;  // offsets into current
	std::set<Matrix, MatrixLess> seen;
	std::vector<SubsystemSpec> out;

	auto orthogonal_to_other_factors = [&](std::size_t candidate, std::size_t factor) {
		for (std::size_t f = 0; f < factor; ++f)
			for (std::size_t k = factor_start[f];
			     k < (f + 1 < factor_start.size() ? factor_start[f + 1] : current.size());
			     ++k)
				if (table.relation[current[k]][candidate] != 0)
					return false;
		return true;
	};

	std::function<void(std::size_t, std::size_t)> place_chain =
	    [&](std::size_t factor, std::size_t depth) {
		const std::size_t len = chains[factor];
		const std::size_t base = factor_start[factor];
		if (depth == len) {
			// flip canonicalization for chains of length ≥ 2
			if (len >= 2 && current[base] > current[base + len - 1])
				return;
			if (factor + 1 == chains.size()) {
				std::vector<std::size_t> indices = current;
				std::sort(indices.begin(), indices.end());
				std::vector<Vector> rows;
				for (std::size_t i : indices)
					rows.push_back(c.covector(i).direction);
				std::vector<std::size_t> pivots;
				Matrix span = rref(from_rows(rows, c.dimension()), pivots);
				if (pivots.size() != total)
					return; // chain directions not independent
				if (!seen.insert(span).second)
					return;
				SubsystemSpec spec;
				spec.indices = std::move(indices);
				for (std::size_t i = 0; i < c.size(); ++i)
					if (in_rowspace(span, pivots, c.covector(i).direction))
						spec.closure.push_back(i);
				spec.span = std::move(span);
				out.push_back(std::move(spec));
				return;
			}
			factor_start.push_back(current.size());
			place_chain(factor + 1, 0);
			factor_start.pop_back();
			return;
		}
		for (std::size_t cand = 0; cand < n; ++cand) {
			if (std::find(current.begin(), current.end(), cand) != current.end())
				continue;
			// identical factors in increasing order of their first node
			if (depth == 0 && factor > 0 && chains[factor - 1] == chains[factor] &&
			    cand <= current[factor_start[factor - 1]])
				continue;
			if (!orthogonal_to_other_factors(cand, factor))
				continue;
			bool fits = true;
			for (std::size_t k = 0; k < depth && fits; ++k) {
				int want = (k + 1 == depth) ? -1 : 0;
				if (table.relation[current[base + k]][cand] != want)
					fits = false;
			}
			if (!fits)
				continue;
			current.push_back(cand);
			place_chain(factor, depth + 1);
			current.pop_back();
		}
	};

	factor_start.push_back(0);
	place_chain(0, 0);

	std::sort(out.begin(), out.end(), [](const SubsystemSpec &a, const SubsystemSpec &b) {
		return lex_less(a.span, b.span);
	});
	return out;
}

std::vector<Configuration> named_restriction(const std::string &name,
                                             const std::optional<Rational> &param)
{
	if (name == "B3(-1;1,1,s)") {
		if (!param)
			throw ParameterDomainError("B3(-1;1,1,s) requires the parameter s");
		return {make_b_gamma_family(Rational(-1), {Rational(1), Rational(1), *param})};
	}

	Configuration source = [&] {
		if (name == "(E7,A2^2)")
			return coxeter_roots(CoxeterType::E7, 7);
		if (name == "(E8,A5)")
			return coxeter_roots(CoxeterType::E8, 8);
		if (name == "(E6,A1^3)")
			return coxeter_roots(CoxeterType::E6, 6);
		throw UnknownTypeError("unknown restriction '" + name + "'");
	}();
	std::string type = name == "(E7,A2^2)" ? "A2^2" : name == "(E8,A5)" ? "A5" : "A1^3";

	auto specs = find_subsystems_of_type(source, type);
	std::vector<Configuration> classes;
	std::vector<Fingerprint> class_prints;
	for (const auto &spec : specs) {
		if (spec.span.rows() >= source.dimension())
			continue; // spanning subsystem: nothing left to restrict to
		std::optional<Configuration> restricted;
		try {
			restricted = restriction(source, spec.indices);
		} catch (const DegenerateRestrictionError &) {
			continue;
		}
		Fingerprint print = fingerprint(*restricted);
		bool known = false;
		for (const auto &existing : class_prints)
			if (existing == print) {
				known = true;
				break;
			}
		if (!known) {
			class_prints.push_back(std::move(print));
			classes.push_back(std::move(*restricted));
		}
	}
	if (classes.empty())
		throw SubsystemNotFoundError("no subsystem of type " + type + " in " + name);
	return classes;
}

} // namespace veesys
