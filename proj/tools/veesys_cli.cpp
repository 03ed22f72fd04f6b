#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "veesys/catalog.hpp"
#include "veesys/errors.hpp"
#include "veesys/io.hpp"
#include "veesys/transform.hpp"
#include "veesys/vee_check.hpp"
#include "veesys/wdvv.hpp"

namespace {

using veesys::Json;

// exit codes: 0 property holds / output produced, 1 property fails or the
// operation rejects its input, 2 parse or usage errors
constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string &path)
{
	if (path == "-") {
		std::ostringstream buffer;
		buffer << std::cin.rdbuf();
		return buffer.str();
	}
	std::ifstream in(path);
	if (!in)
		throw veesys::ParseError("cannot open '" + path + "'");
	std::ostringstream buffer;
	buffer << in.rdbuf();
	return buffer.str();
}

veesys::Configuration load_configuration(const std::string &path)
{
	return veesys::parse_configuration_text(slurp(path));
}

veesys::Matrix load_matrix(const std::string &path)
{
	Json j = Json::parse(slurp(path), nullptr, false);
	if (j.is_discarded())
		throw veesys::ParseError("invalid JSON in '" + path + "'");
	return veesys::parse_matrix(j);
}

void emit(const Json &j)
{
	std::cout << j.dump(2) << "\n";
}

std::vector<std::size_t> parse_index_list(const std::string &text)
{
	std::vector<std::size_t> out;
	std::size_t start = 0;
	while (start <= text.size()) {
		std::size_t comma = text.find(',', start);
		if (comma == std::string::npos)
			comma = text.size();
		std::string token = text.substr(start, comma - start);
		if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
			throw veesys::ParseError("bad index '" + token + "'");
		out.push_back(std::stoul(token));
		start = comma + 1;
	}
	return out;
}

void check_indices(const veesys::Configuration &c, const std::vector<std::size_t> &indices)
{
	for (std::size_t i : indices)
		if (i >= c.size())
			throw veesys::ParseError("covector index " + std::to_string(i) +
			                         " out of range (configuration has " +
			                         std::to_string(c.size()) + " covectors)");
}

std::string command_echo(int argc, char **argv)
{
	std::string echo;
	for (int i = 0; i < argc; ++i) {
		if (i)
			echo += ' ';
		echo += argv[i];
	}
	return echo;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact verification of vee-systems and WDVV identities"};
	app.require_subcommand(1);
	std::string echo = command_echo(argc, argv);

	std::string check_file, check_background;
	bool check_euclidean = false;
	auto *cmd_check = app.add_subcommand("check", "vee-condition report for a configuration");
	cmd_check->add_option("file", check_file)->required();
	cmd_check->add_flag("--euclidean", check_euclidean,
	                    "run the background-form variant of the check");
	cmd_check->add_option("--background", check_background,
	                      "JSON matrix file overriding the configuration background");

	std::string wdvv_file;
	std::size_t wdvv_points = 3;
	std::uint64_t wdvv_seed = 0;
	auto *cmd_wdvv = app.add_subcommand("wdvv", "WDVV identity check at generic points");
	cmd_wdvv->add_option("file", wdvv_file)->required();
	cmd_wdvv->add_option("--points", wdvv_points, "number of sample points");
	cmd_wdvv->add_option("--seed", wdvv_seed, "sample point seed");

	std::string restrict_file, restrict_along;
	auto *cmd_restrict = app.add_subcommand("restrict", "restriction to a kernel subspace");
	cmd_restrict->add_option("file", restrict_file)->required();
	cmd_restrict->add_option("--along", restrict_along, "comma-separated covector indices")
	    ->required();

	std::string subsystem_file, subsystem_span;
	auto *cmd_subsystem = app.add_subcommand("subsystem", "closed subsystem extraction");
	cmd_subsystem->add_option("file", subsystem_file)->required();
	cmd_subsystem->add_option("--span", subsystem_span, "comma-separated covector indices")
	    ->required();

	std::string equiv_a, equiv_b;
	auto *cmd_equiv = app.add_subcommand("equiv", "linear equivalence search");
	cmd_equiv->add_option("fileA", equiv_a)->required();
	cmd_equiv->add_option("fileB", equiv_b)->required();

	std::string catalog_name;
	std::vector<std::string> catalog_params;
	auto *cmd_catalog = app.add_subcommand("catalog", "construct a named family");
	cmd_catalog->add_option("name", catalog_name)->required();
	cmd_catalog->add_option("--param", catalog_params, "family parameter k=v");

	std::string fingerprint_file;
	auto *cmd_fingerprint =
	    app.add_subcommand("fingerprint", "equivalence invariants and covector echo");
	cmd_fingerprint->add_option("file", fingerprint_file)->required();

	std::string planes_file;
	auto *cmd_planes = app.add_subcommand("planes", "two-dimensional plane decomposition");
	cmd_planes->add_option("file", planes_file)->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : kExitUsage;
	}

	try {
		if (*cmd_check) {
			veesys::Configuration c = load_configuration(check_file);
			veesys::VeeReport report;
			if (check_euclidean) {
				std::optional<veesys::Matrix> background;
				if (!check_background.empty())
					background = load_matrix(check_background);
				else if (c.background())
					background = c.background();
				if (!background)
					throw veesys::ParseError(
					    "the euclidean check needs a background form "
					    "(--background or a 'background' entry in the file)");
				report = veesys::euclidean_check(c, *background);
			} else {
				report = veesys::check_vee(c);
			}
			Json out = veesys::vee_report_to_json(report);
			out["command"] = echo;
			out["input"] = c.label();
			emit(out);
			return report.is_vee_system ? kExitHolds : kExitFails;
		}

		if (*cmd_wdvv) {
			veesys::Configuration c = load_configuration(wdvv_file);
			if (veesys::is_zero(veesys::det(veesys::canonical_form(c)))) {
				Json out;
				out["command"] = echo;
				out["input"] = c.label();
				out["error"] = "canonical form is degenerate; the WDVV check "
				               "needs a nonsingular form";
				emit(out);
				return kExitFails;
			}
			auto points = veesys::sample_points(c, wdvv_points, wdvv_seed);
			bool pass = veesys::check_wdvv(c, points);
			Json out;
			out["command"] = echo;
			out["input"] = c.label();
			out["seed"] = wdvv_seed;
			Json pts = Json::array();
			for (const auto &x : points)
				pts.push_back(veesys::vector_to_json(x.coordinates));
			out["points"] = std::move(pts);
			out["pass"] = pass;
			emit(out);
			return pass ? kExitHolds : kExitFails;
		}

		if (*cmd_restrict) {
			veesys::Configuration c = load_configuration(restrict_file);
			auto along = parse_index_list(restrict_along);
			check_indices(c, along);
			emit(veesys::configuration_to_json(veesys::restriction(c, along)));
			return kExitHolds;
		}

		if (*cmd_subsystem) {
			veesys::Configuration c = load_configuration(subsystem_file);
			auto span = parse_index_list(subsystem_span);
			check_indices(c, span);
			emit(veesys::configuration_to_json(veesys::subsystem(c, span)));
			return kExitHolds;
		}

		if (*cmd_equiv) {
			veesys::Configuration a = load_configuration(equiv_a);
			veesys::Configuration b = load_configuration(equiv_b);
			auto witness = veesys::find_equivalence(a, b);
			Json out;
			out["command"] = echo;
			out["inputs"] = Json::array({a.label(), b.label()});
			out["found"] = witness.has_value();
			if (witness)
				out["witness"] = veesys::linear_map_to_json(*witness);
			emit(out);
			return witness ? kExitHolds : kExitFails;
		}

		if (*cmd_catalog) {
			veesys::FamilySpec spec;
			spec.name = catalog_name;
			for (const auto &param : catalog_params) {
				std::size_t eq = param.find('=');
				if (eq == std::string::npos || eq == 0)
					throw veesys::ParseError("expected --param key=value, got '" +
					                         param + "'");
				spec.params[param.substr(0, eq)] = param.substr(eq + 1);
			}
			emit(veesys::configuration_to_json(veesys::make_family(spec)));
			return kExitHolds;
		}

		if (*cmd_fingerprint) {
			veesys::Configuration c = load_configuration(fingerprint_file);
			veesys::Fingerprint fp = veesys::fingerprint(c);
			Json out;
			out["command"] = echo;
			out["input"] = c.label();
			out["covectors"] = veesys::configuration_to_json(c)["covectors"];
			out["fingerprint"] = veesys::fingerprint_to_json(fp);
			emit(out);
			return kExitHolds;
		}

		if (*cmd_planes) {
			veesys::Configuration c = load_configuration(planes_file);
			Json out;
			out["command"] = echo;
			out["input"] = c.label();
			Json planes = Json::array();
			for (const auto &plane : veesys::enumerate_planes(c))
				planes.push_back(veesys::plane_to_json(plane));
			out["planes"] = std::move(planes);
			emit(out);
			return kExitHolds;
		}
	} catch (const veesys::ParseError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const veesys::ParameterDomainError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const veesys::UnknownTypeError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const veesys::Error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitFails;
	} catch (const Json::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	return kExitUsage;
}
