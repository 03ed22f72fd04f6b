#include "veesys/io.hpp"

#include "veesys/errors.hpp"

namespace veesys {

namespace {

Rational rational_from_json(const Json &j)
{
	if (!j.is_string())
		throw ParseError("rationals must be strings, got: " + j.dump());
	return parse_rational(j.get<std::string>());
}

Vector vector_from_json(const Json &j)
{
	if (!j.is_array() || j.empty())
		throw ParseError("expected a nonempty array of rationals");
	Vector v;
	for (const auto &entry : j)
		v.push_back(rational_from_json(entry));
	return v;
}

} // namespace

Matrix parse_matrix(const Json &j)
{
	if (!j.is_array() || j.empty())
		throw ParseError("expected a nonempty array of rows");
	std::vector<Vector> rows;
	for (const auto &row : j)
		rows.push_back(vector_from_json(row));
	for (const auto &row : rows)
		if (row.size() != rows.front().size())
			throw ParseError("ragged matrix rows");
	return from_rows(rows, rows.front().size());
}

Json matrix_to_json(const Matrix &m)
{
	Json rows = Json::array();
	for (std::size_t r = 0; r < m.rows(); ++r) {
		Json row = Json::array();
		for (std::size_t c = 0; c < m.cols(); ++c)
			row.push_back(to_string(m(r, c)));
		rows.push_back(std::move(row));
	}
	return rows;
}

Json vector_to_json(const Vector &v)
{
	Json out = Json::array();
	for (const auto &x : v)
		out.push_back(to_string(x));
	return out;
}

Configuration parse_configuration(const Json &j)
{
	if (!j.is_object())
		throw ParseError("configuration must be a JSON object");
	if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
		throw ParseError("missing or invalid 'dimension'");
	std::size_t dimension = j["dimension"].get<std::size_t>();
	if (dimension == 0)
		throw ParseError("dimension must be positive");
	if (!j.contains("covectors") || !j["covectors"].is_array())
		throw ParseError("missing 'covectors' array");

	std::vector<WeightedCovector> raw;
	for (const auto &entry : j["covectors"]) {
		if (!entry.is_object() || !entry.contains("dir") || !entry.contains("weight"))
			throw ParseError("each covector needs 'dir' and 'weight'");
		Vector dir = vector_from_json(entry["dir"]);
		Rational weight = rational_from_json(entry["weight"]);
		if (is_zero(weight))
			throw ParseError("zero weight");
		if (is_zero_vector(dir))
			throw ParseError("zero direction");
		raw.push_back(WeightedCovector{std::move(dir), std::move(weight)});
	}

	std::optional<Matrix> background;
	if (j.contains("background"))
		background = parse_matrix(j["background"]);
	std::string label = j.value("label", std::string{});
	return Configuration::build(dimension, raw, std::move(background), std::move(label));
}

Configuration parse_configuration_text(const std::string &text)
{
	Json j = Json::parse(text, nullptr, false);
	if (j.is_discarded())
		throw ParseError("invalid JSON");
	return parse_configuration(j);
}

Json configuration_to_json(const Configuration &c)
{
	Json out;
	out["dimension"] = c.dimension();
	if (!c.label().empty())
		out["label"] = c.label();
	Json covs = Json::array();
	for (const auto &cov : c.covectors()) {
		Json entry;
		entry["dir"] = vector_to_json(cov.direction);
		entry["weight"] = to_string(cov.weight);
		covs.push_back(std::move(entry));
	}
	out["covectors"] = std::move(covs);
	if (c.background())
		out["background"] = matrix_to_json(*c.background());
	return out;
}

Json plane_to_json(const Plane &p)
{
	Json out;
	out["key"] = matrix_to_json(p.key);
	out["members"] = p.members;
	return out;
}

Json fingerprint_to_json(const Fingerprint &fp)
{
	Json out;
	out["dimension"] = fp.dimension;
	out["count"] = fp.count;
	Json lengths = Json::array();
	for (const auto &l : fp.lengths)
		lengths.push_back(to_string(l));
	out["lengths"] = std::move(lengths);
	out["plane_profile"] = fp.plane_profile;
	Json per = Json::array();
	for (const auto &[length, incidence] : fp.per_covector) {
		Json entry;
		entry["length_sq"] = to_string(length);
		entry["plane_sizes"] = incidence;
		per.push_back(std::move(entry));
	}
	out["per_covector"] = std::move(per);
	return out;
}

Json vee_report_to_json(const VeeReport &report)
{
	Json out;
	out["is_vee_system"] = report.is_vee_system;
	out["degenerate_form"] = report.degenerate_form;
	if (report.euclidean) {
		out["euclidean"] = true;
		if (report.global_lambda)
			out["global_lambda"] = to_string(*report.global_lambda);
		else
			out["global_lambda"] = nullptr;
	}
	Json verdicts = Json::array();
	for (const auto &verdict : report.verdicts) {
		Json v;
		v["plane"] = plane_to_json(verdict.plane);
		switch (verdict.status) {
		case VerdictStatus::Reducible:
			v["status"] = "reducible";
			break;
		case VerdictStatus::Proportional:
			v["status"] = "proportional";
			if (verdict.lambda)
				v["lambda"] = to_string(*verdict.lambda);
			break;
		case VerdictStatus::Violated:
			v["status"] = "violated";
			if (verdict.witness)
				v["witness"] = *verdict.witness;
			break;
		}
		verdicts.push_back(std::move(v));
	}
	out["verdicts"] = std::move(verdicts);
	return out;
}

Json linear_map_to_json(const LinearMap &map)
{
	Json out;
	out["matrix"] = matrix_to_json(map.matrix);
	out["scale_sq"] = to_string(map.scale_sq);
	out["sigma"] = map.sigma;
	return out;
}

} // namespace veesys
