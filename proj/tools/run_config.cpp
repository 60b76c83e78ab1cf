#include "run_config.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <set>
#include <sstream>

#include "spectral_torsion/examples.hpp"
#include "spectral_torsion/symcalc.hpp"

#ifndef SPECTRAL_TORSION_VERSION
#define SPECTRAL_TORSION_VERSION "0.0.0"
#endif

namespace storsion::cli {

using nlohmann::json;

namespace {

int checkedDim(long long n) {
    if (n < kMinDim || n > kMaxDim)
        throw ConfigError("dimension " + std::to_string(n) + " outside [" + std::to_string(kMinDim) + ", " +
                          std::to_string(kMaxDim) + "]");
    return static_cast<int>(n);
}

json integerJson(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json rationalPair(const Rational& r) { return json::array({integerJson(r.get_num()), integerJson(r.get_den())}); }

std::string rationalText(const Rational& r) { return toString(r); }

std::string timestampUtc() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::vector<int> parseDims(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long n = 0;
        try {
            n = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw ConfigError("invalid dimension '" + item + "'");
        }
        if (used != item.size()) throw ConfigError("invalid dimension '" + item + "'");
        out.push_back(checkedDim(n));
    }
    if (out.empty()) throw ConfigError("empty dimension list");
    return out;
}

Rational parseRationalValue(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parseRational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ConfigError(std::string("invalid rational: ") + e.what());
        }
    }
    throw ConfigError("rationals must be integers or \"p/q\" strings, got " + j.dump());
}

OneForm parseOneForm(const json& j) {
    if (!j.is_array()) throw ConfigError("one-forms must be arrays of rationals");
    OneForm u;
    for (const auto& x : j) u.push_back(parseRationalValue(x));
    checkedDim(static_cast<long long>(u.size()));
    return u;
}

TorsionEntry parseTorsionEntry(const json& j) {
    if (!j.is_object() || !j.contains("indices") || !j.contains("value"))
        throw ConfigError("torsion entries need \"indices\" and \"value\"");
    for (const auto& [key, _] : j.items())
        if (key != "indices" && key != "value") throw ConfigError("unknown torsion entry key '" + key + "'");
    const auto& idx = j.at("indices");
    if (!idx.is_array() || idx.size() != 3) throw ConfigError("torsion indices must be a triple");
    TorsionEntry e{};
    for (int k = 0; k < 3; ++k) {
        if (!idx[k].is_number_integer()) throw ConfigError("torsion indices must be integers");
        e.indices[k] = idx[k].get<int>();
    }
    if (!(e.indices[0] < e.indices[1] && e.indices[1] < e.indices[2]))
        throw ConfigError("non-increasing index triple [" + std::to_string(e.indices[0]) + "," +
                          std::to_string(e.indices[1]) + "," + std::to_string(e.indices[2]) + "]");
    if (e.indices[0] < 1) throw ConfigError("torsion indices start at 1");
    e.value = parseRationalValue(j.at("value"));
    return e;
}

void applyConfigJson(const json& doc, RunConfig& config) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "dims" || key == "dim") {
            std::vector<int> dims;
            if (value.is_number_integer()) dims.push_back(checkedDim(value.get<long long>()));
            else if (value.is_array())
                for (const auto& d : value) {
                    if (!d.is_number_integer()) throw ConfigError("dimensions must be integers");
                    dims.push_back(checkedDim(d.get<long long>()));
                }
            else throw ConfigError("\"" + key + "\" must be an integer or an array of integers");
            if (dims.empty()) throw ConfigError("empty dimension list");
            config.dims = dims;
        } else if (key == "trials") {
            if (!value.is_number_integer()) throw ConfigError("\"trials\" must be an integer");
            config.trials = value.get<int>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) throw ConfigError("\"seed\" must be a non-negative integer");
            config.seed = value.get<std::uint64_t>();
        } else if (key == "q") {
            if (!value.is_number()) throw ConfigError("\"q\" must be a number");
            config.q = value.get<double>();
        } else if (key == "N") {
            if (!value.is_number_integer()) throw ConfigError("\"N\" must be an integer");
            config.truncation = value.get<int>();
        } else if (key == "K") {
            if (!value.is_number_integer()) throw ConfigError("\"K\" must be an integer");
            config.order = value.get<int>();
        } else if (key == "phi") {
            try {
                config.phi = value.is_number_integer() ? ComplexRational(Rational(value.get<long>()))
                                                       : parseComplexRational(value.get<std::string>());
            } catch (const ConfigError&) {
                throw;
            } catch (const std::exception& e) {
                throw ConfigError(std::string("invalid phi: ") + e.what());
            }
        } else if (key == "torsion") {
            if (!value.is_array()) throw ConfigError("\"torsion\" must be an array of entries");
            config.torsion.clear();
            for (const auto& e : value) config.torsion.push_back(parseTorsionEntry(e));
        } else if (key == "u") {
            config.u = parseOneForm(value);
        } else if (key == "v") {
            config.v = parseOneForm(value);
        } else if (key == "w") {
            config.w = parseOneForm(value);
        } else if (key == "command" || key == "example" || key == "comment") {
            // Informational; the command line selects what runs.
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
}

void validate(const RunConfig& config) {
    if (config.dims)
        for (int n : *config.dims) checkedDim(n);
    if (config.trials && *config.trials < 0) throw ConfigError("trials must be non-negative");
    if (config.q && !(*config.q > 0 && *config.q < 1)) throw ConfigError("q must lie in (0, 1)");
    if (config.truncation && *config.truncation < 1) throw ConfigError("N must be positive");
    if (config.order && *config.order < 1) throw ConfigError("K must be positive");
    std::set<std::array<int, 3>> seen;
    for (const auto& e : config.torsion) {
        if (!(e.indices[0] < e.indices[1] && e.indices[1] < e.indices[2])) throw ConfigError("non-increasing index triple");
        if (!seen.insert(e.indices).second) throw ConfigError("duplicate torsion index triple");
    }
    if (config.command == "eval") {
        const int n = evalDimension(config);
        for (const auto* f : {&config.u, &config.v, &config.w})
            if (*f && static_cast<int>((*f)->size()) != n)
                throw ConfigError("one-form length " + std::to_string((*f)->size()) + " does not match dimension " +
                                  std::to_string(n));
        for (const auto& e : config.torsion)
            if (e.indices[2] > n) throw ConfigError("torsion index exceeds dimension " + std::to_string(n));
    }
    if (config.command == "examples") {
        if (std::find(kExampleNames.begin(), kExampleNames.end(), config.example) == kExampleNames.end())
            throw ConfigError("unknown example '" + config.example + "' (expected eym, doubled, nctorus or suq2)");
        if (config.example == "eym" || config.example == "doubled")
            if (config.dims)
                for (int n : *config.dims)
                    if (n % 2 != 0) throw ConfigError("the " + config.example + " example needs even dimensions");
        if (config.example == "suq2" && config.truncation && *config.truncation < 4)
            throw ConfigError("disc truncation N must be at least 4");
        if (config.example == "eym" && config.truncation && *config.truncation > 6)
            throw ConfigError("EYM matrix size N must be at most 6");
    }
}

int evalDimension(const RunConfig& config) {
    if (config.dims) {
        if (config.dims->size() != 1) throw ConfigError("eval takes a single dimension");
        return config.dims->front();
    }
    for (const auto* f : {&config.u, &config.v, &config.w})
        if (*f) return static_cast<int>((*f)->size());
    return 4;
}

TorsionTensor buildTorsion(const RunConfig& config, int n) {
    TorsionTensor t(n);
    for (const auto& e : config.torsion) {
        if (e.indices[2] > n) throw ConfigError("torsion index exceeds dimension " + std::to_string(n));
        t.set(e.indices[0] - 1, e.indices[1] - 1, e.indices[2] - 1, e.value);
    }
    return t;
}

std::string decimalString(std::complex<double> z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
    return buf;
}

json exactScalar(const ComplexRational& value, int vPow, int piPow) {
    return {{"re", rationalPair(value.re())}, {"im", rationalPair(value.im())}, {"Vpow", vPow}, {"piPow", piPow}};
}

json residueJson(const ResidueValue& r) {
    json out = exactScalar(r.multiplier(), r.dim() >= 2 ? 1 : 0, 0);
    out["dim"] = r.dim();
    out["decimal"] = decimalString(r.numeric());
    out["pi_form"] = exactScalar(r.piCoefficient(), 0, r.piPower());
    out["text"] = r.str();
    return out;
}

json configEcho(const RunConfig& config) {
    json c;
    c["command"] = config.command;
    if (!config.example.empty()) c["example"] = config.example;
    c["seed"] = config.seed;
    if (config.dims) c["dims"] = *config.dims;
    if (config.trials) c["trials"] = *config.trials;
    if (config.q) c["q"] = *config.q;
    if (config.truncation) c["N"] = *config.truncation;
    if (config.order) c["K"] = *config.order;
    if (config.phi) c["phi"] = config.phi->str();
    if (!config.torsion.empty()) {
        json t = json::array();
        for (const auto& e : config.torsion) t.push_back({{"indices", e.indices}, {"value", rationalText(e.value)}});
        c["torsion"] = t;
    }
    auto form = [](const OneForm& u) {
        json a = json::array();
        for (const auto& x : u) a.push_back(rationalText(x));
        return a;
    };
    if (config.u) c["u"] = form(*config.u);
    if (config.v) c["v"] = form(*config.v);
    if (config.w) c["w"] = form(*config.w);
    return c;
}

json checkJson(const CheckRecord& r) {
    json samples = json::array();
    int failed = 0;
    for (const auto& s : r.samples) {
        json j{{"label", s.label}, {"passed", s.passed}};
        if (s.expected) j["expected"] = residueJson(*s.expected);
        if (s.computed) j["computed"] = residueJson(*s.computed);
        if (s.expected && s.computed) j["exact_equal"] = *s.expected == *s.computed;
        if (s.residual) j["residual"] = *s.residual;
        if (s.tolerance) j["tolerance"] = *s.tolerance;
        samples.push_back(std::move(j));
        failed += s.passed ? 0 : 1;
    }
    return {{"id", r.id},
            {"name", r.key},
            {"title", r.title},
            {"passed", r.passed},
            {"detail", r.detail},
            {"sample_count", r.samples.size()},
            {"failed_count", failed},
            {"samples", samples}};
}

json buildReport(const RunConfig& config, const std::vector<CheckRecord>& checks, const json& extra) {
    json report;
    report["tool"] = "spectral-torsion";
    report["version"] = SPECTRAL_TORSION_VERSION;
    report["config"] = configEcho(config);
    bool passed = true;
    json list = json::array();
    json elapsed = json::object();
    double total = 0;
    for (const auto& r : checks) {
        passed = passed && r.passed;
        list.push_back(checkJson(r));
        elapsed[r.key] = r.elapsedSeconds;
        total += r.elapsedSeconds;
    }
    report["passed"] = passed;
    report["checks"] = list;
    for (const auto& [k, v] : extra.items()) report[k] = v;
    report["timing"] = {{"timestamp", timestampUtc()}, {"elapsed_seconds", elapsed}, {"total_seconds", total}};
    return report;
}

}  // namespace storsion::cli
