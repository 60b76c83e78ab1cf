#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "run_config.hpp"
#include "spectral_torsion/examples.hpp"

using namespace storsion;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

json runVerify(const cli::RunConfig& c, std::vector<CheckRecord>& checks) {
    AcceptanceConfig a;
    if (c.dims) a.theoremDims = *c.dims;
    if (c.trials) a.trials = *c.trials;
    a.seed = c.seed;
    if (c.q) a.q = *c.q;
    if (c.truncation) a.discTruncation = *c.truncation;
    if (c.order) a.torusOrder = *c.order;
    a.phi = c.phi;
    checks = runAcceptance(a);
    return json::object();
}

json runEval(const cli::RunConfig& c, std::vector<CheckRecord>& checks) {
    const int n = cli::evalDimension(c);
    const auto t = cli::buildTorsion(c, n);
    const auto u = c.u.value_or(frameOneForm(n, 0));
    const auto v = c.v.value_or(frameOneForm(n, 1));
    const auto w = c.w.value_or(frameOneForm(n, n >= 3 ? 2 : 0));
    CheckRecord r;
    r.key = "eval";
    r.title = "torsion functional against the closed form";
    const auto start = std::chrono::steady_clock::now();
    const auto pipeline = torsionFunctional(u, v, w, t, n);
    const auto closed = closedFormTorsion(u, v, w, t, n);
    r.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.samples.push_back({"pipeline vs closed form", closed, pipeline, std::nullopt, std::nullopt, pipeline == closed});
    r.passed = pipeline == closed;
    if (!closed.isZero()) r.detail = "ratio " + (pipeline.multiplier() / closed.multiplier()).str();
    checks = {r};
    return {{"result",
             {{"dim", n},
              {"contraction", toString(torsionContraction(u, v, w, t))},
              {"pipeline", cli::residueJson(pipeline)},
              {"closed_form", cli::residueJson(closed)}}}};
}

json runExamples(const cli::RunConfig& c, std::vector<CheckRecord>& checks) {
    ExampleConfig e;
    e.dims = c.dims.value_or(defaultExampleDims(c.example));
    if (c.trials) e.trials = *c.trials;
    e.seed = c.seed;
    if (c.q) e.q = *c.q;
    if (c.order) e.torusOrder = *c.order;
    if (c.phi) e.phi = *c.phi;
    if (c.truncation) {
        if (c.example == "eym") e.matrixSize = static_cast<std::size_t>(*c.truncation);
        else e.discTruncation = *c.truncation;
    }
    checks = {runExample(c.example, e)};
    return json::object();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral torsion functional: exact symbol-calculus evaluation and model checks", "spectral-torsion"};
    app.require_subcommand(1);

    cli::RunConfig config;
    std::string dims, phi, configPath;
    std::optional<int> trials, truncation, order;
    std::optional<std::uint64_t> seed;
    std::optional<double> q;

    auto* verify = app.add_subcommand("verify", "run every acceptance check");
    auto* eval = app.add_subcommand("eval", "evaluate the torsion functional for a configured T, u, v, w");
    auto* examples = app.add_subcommand("examples", "run one model computation");
    examples->add_option("which", config.example, "eym | doubled | nctorus | suq2")->required();
    for (auto* sub : {verify, eval, examples}) {
        sub->add_option("--dims,--dim", dims, "comma-separated dimensions");
        sub->add_option("--trials", trials, "random trials per dimension");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--config", configPath, "JSON configuration file");
        sub->add_option("--out", config.outPath, "also write the report to this file");
        sub->add_option("--phi", phi, "two-sheeted coupling, e.g. 1+0i");
        sub->add_option("--q", q, "quantum disc deformation parameter");
        sub->add_option("--N", truncation, "disc truncation (EYM: matrix size)");
        sub->add_option("--K", order, "torus series order");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }
    config.command = app.get_subcommands().front()->get_name();

    std::vector<CheckRecord> checks;
    json extra;
    try {
        if (!configPath.empty()) {
            std::ifstream in(configPath);
            if (!in) throw cli::ConfigError("cannot read config file '" + configPath + "'");
            json doc;
            try {
                doc = json::parse(in);
            } catch (const json::parse_error& e) {
                throw cli::ConfigError(std::string("malformed config JSON: ") + e.what());
            }
            cli::applyConfigJson(doc, config);
        }
        if (!dims.empty()) config.dims = cli::parseDims(dims);
        if (trials) config.trials = trials;
        if (seed) config.seed = *seed;
        if (q) config.q = q;
        if (truncation) config.truncation = truncation;
        if (order) config.order = order;
        if (!phi.empty()) {
            try {
                config.phi = parseComplexRational(phi);
            } catch (const std::exception& e) {
                throw cli::ConfigError(std::string("invalid --phi: ") + e.what());
            }
        }
        cli::validate(config);
        if (config.command == "verify") extra = runVerify(config, checks);
        else if (config.command == "eval") extra = runEval(config, checks);
        else extra = runExamples(config, checks);
    } catch (const cli::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    }

    const json report = cli::buildReport(config, checks, extra);
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!config.outPath.empty()) {
        std::ofstream out(config.outPath);
        if (!out) {
            std::cerr << "cannot write '" << config.outPath << "'\n";
            return kExitConfig;
        }
        out << text;
    }
    for (const auto& r : checks) std::cerr << formatCheckLine(r) << "\n";
    return report["passed"].get<bool>() ? kExitPass : kExitFail;
}
