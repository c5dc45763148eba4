#include "cmgr/suites.hpp"
#include "cmgr/symfun.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cmgr;

Json read_document(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    return Json::parse(in);
}

Partition parse_partition_arg(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

std::vector<Partition> parse_mu_arg(const std::string& s) {
    Json j = Json::parse("[" + s + "]");
    std::vector<Partition> mu;
    for (const auto& e : j) mu.push_back(partition_from_json(e));
    return mu;
}

std::vector<int> parse_blocks_arg(const std::string& s) {
    std::vector<int> blocks;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) blocks.push_back(std::stoi(tok));
    return blocks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Calogero-Moser / Schubert cell / quasi-exponential toolkit"};
    app.require_subcommand(1);

    std::string lambda_arg, point_path, window_path, blocks_arg, mu_arg, suite = "all";
    int vars = 2, nmax = 5, samples = 25;
    std::uint64_t seed = 42;
    bool as_json = false;

    auto* fixed = app.add_subcommand("fixed-point", "torus-fixed point of a partition");
    fixed->add_option("--lambda", lambda_arg, "partition, e.g. 3,1")->required();

    auto* tau = app.add_subcommand("tau", "tau function of a point");
    tau->add_option("--point", point_path, "CM point JSON file (- for stdin)")->required();
    tau->add_option("--vars", vars, "number of t variables")->check(CLI::PositiveNumber);

    auto* classify = app.add_subcommand("classify", "cell label of a point");
    classify->add_option("--point", point_path)->required();

    auto* eta_cmd = app.add_subcommand("eta", "annihilator space of a window subspace");
    eta_cmd->add_option("--window", window_path)->required();

    auto* baker = app.add_subcommand("baker", "bispectral operator of a point");
    baker->add_option("--point", point_path)->required();

    auto* intersect = app.add_subcommand("intersect", "intersection numbers three ways");
    intersect->add_option("--lambda", lambda_arg)->required();
    intersect->add_option("--blocks", blocks_arg)->required();
    intersect->add_option("--mu", mu_arg, "partitions, e.g. \"[[1]],[[1]],[[1]]\"")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name or all");
    verify->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed);
    verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
    verify->add_flag("--json", as_json, "emit the report as a JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*fixed) {
            CMPoint p = fixed_point(parse_partition_arg(lambda_arg));
            std::cout << to_json(p).dump(1) << "\n";
        } else if (*tau) {
            CMPoint p = cmpoint_from_json(read_document(point_path));
            MultiPoly t = tau_cm(p, vars);
            Json out;
            out["tau"] = to_json(t);
            std::vector<std::string> names;
            for (int i = 1; i <= vars; ++i) names.push_back("t" + std::to_string(i));
            out["pretty"] = t.to_string(names);
            std::cout << out.dump(1) << "\n";
        } else if (*classify) {
            CMPoint p = cmpoint_from_json(read_document(point_path));
            Json out;
            out["cells"] = to_json(classify_cell(p));
            out["fuchsian"] = is_fuchsian(p);
            std::cout << out.dump(1) << "\n";
        } else if (*eta_cmd) {
            WindowSubspace w = window_from_json(read_document(window_path));
            QuasiExpSpace c = eta(w);
            Json out;
            out["space"] = to_json(c);
            out["cell"] = to_json(cell_of_window(w));
            WronskianResult wr = wronskian(c);
            out["wronskian"] = to_json(wr.wr);
            out["canonical"] = wr.canonical;
            std::cout << out.dump(1) << "\n";
        } else if (*baker) {
            CMPoint p = cmpoint_from_json(read_document(point_path));
            DiffOperator d = diff_op(p);
            Json out;
            out["operator"] = to_json(d);
            out["pretty"] = d.to_string();
            std::cout << out.dump(1) << "\n";
        } else if (*intersect) {
            IntersectDims dims = intersect_dims(parse_partition_arg(lambda_arg),
                                                parse_blocks_arg(blocks_arg), parse_mu_arg(mu_arg));
            std::cout << dims.to_json().dump(1) << "\n";
            return dims.agree ? 0 : 1;
        } else if (*verify) {
            if (suite != "all") {
                const auto& names = suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end()) {
                    std::cerr << "unknown suite: " << suite << "\n";
                    return 2;
                }
            }
            SuiteReport r = run_suite(suite, nmax, seed, samples);
            if (as_json) {
                std::cout << r.to_json().dump(1) << "\n";
            } else {
                std::cout << r.table();
            }
            return r.failed == 0 ? 0 : 1;
        }
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
