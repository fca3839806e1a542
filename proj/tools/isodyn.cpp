#include "isodyn/errors.hpp"
#include "isodyn/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace isodyn;

P1 parse_p1(const std::string& text) {
    if (text == "inf" || text == "oo") return P1::infinity();
    return P1(rat_from_string(text));
}

FGPoint parse_start(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ConfigError("--start expects \"f,g\"");
    return {parse_p1(text.substr(0, comma)), parse_p1(text.substr(comma + 1))};
}

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << content;
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed, const std::string& out_path) {
    const SuiteReport report = run_suite({suite, trials, seed});
    write_text(out_path, report_to_json(report).dump(2) + "\n");
    std::cerr << suite << ": " << report.trials_run << " trials, " << report.failures.size()
              << " failures, " << report.rejections << " redraws, " << report.elapsed_ms << " ms\n";
    return report.ok() ? 0 : 1;
}

int run_orbit(const std::string& model, const std::string& params_path, const std::string& start,
              int steps, const std::string& out_path) {
    std::ifstream in(params_path);
    if (!in) throw ConfigError("cannot read parameter file '" + params_path + "'");
    Json params_json;
    in >> params_json;
    const FGPoint start_point = parse_start(start);
    std::vector<Json> records;
    try {
        if (model == "a2") {
            records = orbit_a2(params_a2_from_json(params_json), start_point, steps);
        } else if (model == "a1") {
            records = orbit_a1(params_a1_from_json(params_json), start_point, steps);
        } else {
            throw ConfigError("--model must be a2 or a1");
        }
    } catch (const BasePointHit& hit) {
        std::cerr << "orbit aborted: base point " << hit.label << " at step " << hit.step << "\n";
        return 1;
    }
    std::string lines;
    for (const Json& record : records) lines += record.dump() + "\n";
    write_text(out_path, lines);
    return 0;
}

int run_picard(const std::string& report_path) {
    const Json report = picard_report();
    write_text(report_path, report.dump(2) + "\n");
    for (const Json& entry : report.at("maps"))
        if (!entry.at("isometry").get<bool>() || entry.at("translation").is_null()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of discrete Schlesinger transformations and their"
                 " difference Painleve reductions"};
    app.require_subcommand(1);

    std::string suite;
    int trials = 1;
    std::uint64_t seed = 1;
    std::string out_path;
    CLI::App* verify = app.add_subcommand("verify", "run a randomized verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--trials", trials, "number of random instances");
    verify->add_option("--seed", seed, "base seed");
    verify->add_option("--out", out_path, "report path (stdout if omitted)");

    std::string model, params_path, start;
    int steps = 0;
    std::string orbit_out;
    CLI::App* orbit = app.add_subcommand("orbit", "iterate a model map and export the orbit");
    orbit->add_option("--model", model, "a2 or a1")->required();
    orbit->add_option("--params", params_path, "parameter file (JSON)")->required();
    orbit->add_option("--start", start, "start point \"f,g\" (inf allowed)")->required();
    orbit->add_option("--steps", steps, "number of steps")->required();
    orbit->add_option("--out", orbit_out, "output path (JSON lines)");

    std::string picard_path;
    CLI::App* picard = app.add_subcommand("picard", "emit the lattice verification report");
    picard->add_option("--report", picard_path, "report path (stdout if omitted)");

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return run_verify(suite, trials, seed, out_path);
        if (orbit->parsed()) return run_orbit(model, params_path, start, steps, orbit_out);
        if (picard->parsed()) return run_picard(picard_path);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
