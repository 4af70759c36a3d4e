// Command line front end: enumeration, statistics, theorem right-hand sides,
// coefficient cross-checks, and the verification suite, all as reproducible
// batch commands with JSON (or CSV) output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error,
// 3 conversion error, 4 unexpected internal failure.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shuffle/engine.hpp"
#include "shuffle/json_io.hpp"
#include "shuffle/version.hpp"

using json = nlohmann::json;
using namespace shuffle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConversion = 3;
constexpr int kExitInternal = 4;

struct GlobalFlags {
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    bool reproducible = false;
    bool allow_order_9 = false;

    EngineOptions engine() const { return {threads < 1 ? 1 : threads, allow_order_9}; }
};

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

void print_envelope(const std::string& command, json parameters, json result,
                    const GlobalFlags& flags) {
    json envelope{{"command", command},
                  {"engine_version", kEngineVersion},
                  {"parameters", std::move(parameters)},
                  {"result", std::move(result)}};
    if (!flags.reproducible) envelope["timestamp"] = utc_timestamp();
    std::cout << envelope.dump(2) << '\n';
}

json poly_json(const QtPolynomial& p) { return json::parse(to_json_text(p)); }
json fexpansion_json(const FExpansion& f) { return json::parse(to_json_text(f)); }
json schur_json(const SchurExpansion& s) { return json::parse(to_json_text(s)); }

json subset_json(SubsetMask mask) {
    json out = json::array();
    for (int e : subset_elements(mask)) out.push_back(e);
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument(std::string(what) +
                                        " must be a comma list of positive integers");
        try {
            values.push_back(std::stoi(item));
        } catch (const std::out_of_range&) {
            throw std::invalid_argument(std::string(what) + " entry is out of range");
        }
        pos = comma + 1;
    }
    return values;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

int cmd_enumerate(int n, const std::string& kind, std::int64_t limit,
                  const std::string& format, const GlobalFlags& flags) {
    const bool want_all = limit < 0;
    json rows = json::array();
    std::vector<std::string> csv_lines;
    std::int64_t count = 0;

    if (kind == "dyck") {
        count = catalan_number(n);
        const auto paths = enumerate_dyck_paths(n);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            if (!want_all && static_cast<std::int64_t>(i) >= limit) break;
            if (format == "csv") {
                csv_lines.push_back(std::to_string(i) + "," + paths[i].to_string() +
                                    "," + std::to_string(paths[i].area()));
            } else {
                rows.push_back(json{{"index", i},
                                    {"path", paths[i].to_string()},
                                    {"area", paths[i].area()}});
            }
        }
    } else {
        count = parking_function_count(n);
        ParkingFunctionStream stream(n);
        std::int64_t emitted = 0;
        while (want_all || emitted < limit) {
            auto pf = stream.next();
            if (!pf) break;
            const auto pairs = dinv_pairs(*pf);
            const int d = static_cast<int>(pairs.primary.size() + pairs.secondary.size());
            if (format == "csv") {
                csv_lines.push_back(
                    std::to_string(emitted) + "," + pf->path().to_string() + "," +
                    csv_field(join_ints(pf->cars())) + "," + std::to_string(area(*pf)) +
                    "," + std::to_string(d) + "," + csv_field(join_ints(word(*pf))) +
                    "," + csv_field(subset_to_string(ides(*pf))) + "," +
                    csv_field(join_ints(touch(*pf).parts())));
            } else {
                rows.push_back(json{{"index", emitted},
                                    {"path", pf->path().to_string()},
                                    {"cars", pf->cars()},
                                    {"area", area(*pf)},
                                    {"dinv", d},
                                    {"word", word(*pf)},
                                    {"ides", subset_json(ides(*pf))},
                                    {"touch", touch(*pf).parts()}});
            }
            ++emitted;
        }
    }

    if (format == "csv") {
        if (kind == "dyck")
            std::cout << "index,path,area\n";
        else
            std::cout << "index,path,cars,area,dinv,word,ides,touch\n";
        for (const auto& line : csv_lines) std::cout << line << '\n';
        return kExitOk;
    }

    json parameters{{"n", n},
                    {"kind", kind},
                    {"limit", limit},
                    {"format", format}};
    json result{{"count", count}, {"kind", kind}, {"n", n}, {"rows", std::move(rows)}};
    print_envelope("enumerate", std::move(parameters), std::move(result), flags);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

int cmd_stats(const std::string& encoded, bool verbose, const GlobalFlags& flags) {
    const ParkingFunction pf = parse_parking_function(encoded);
    const DinvPairs pairs = dinv_pairs(pf);
    json result{{"path", pf.path().to_string()},
                {"cars", pf.cars()},
                {"area", area(pf)},
                {"dinv", static_cast<int>(pairs.primary.size() + pairs.secondary.size())},
                {"word", word(pf)},
                {"ides", subset_json(ides(pf))},
                {"touch", touch(pf).parts()}};
    if (verbose) {
        json primary = json::array();
        for (const auto& [small, large] : pairs.primary)
            primary.push_back(json::array({small, large}));
        json secondary = json::array();
        for (const auto& [small, large] : pairs.secondary)
            secondary.push_back(json::array({small, large}));
        result["dinv_primary"] = std::move(primary);
        result["dinv_secondary"] = std::move(secondary);
    }
    json parameters{{"pf", encoded}, {"verbose", verbose}};
    print_envelope("stats", std::move(parameters), std::move(result), flags);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// nabla
// ---------------------------------------------------------------------------

int cmd_nabla(int n, const std::string& touch_text, bool schur,
              const GlobalFlags& flags) {
    std::optional<Composition> alpha;
    if (!touch_text.empty()) {
        alpha = Composition(parse_int_list(touch_text, "touch composition"));
        if (alpha->size() != n)
            throw std::invalid_argument("touch composition must sum to n");
    }
    const FExpansion expansion =
        alpha ? compositional_shuffle_sum(*alpha, flags.engine())
              : shuffle_sum(n, flags.engine());

    json result{{"n", n},
                {"expansion", fexpansion_json(expansion)},
                {"pretty", expansion.to_string()}};
    if (alpha) result["touch"] = alpha->parts();
    if (schur) {
        const SchurExpansion converted = fundamental_to_schur(expansion);
        result["schur"] = schur_json(converted);
        result["schur_pretty"] = converted.to_string();
    }
    json parameters{{"n", n}, {"schur", schur}};
    if (!touch_text.empty()) parameters["touch"] = touch_text;
    print_envelope("nabla", std::move(parameters), std::move(result), flags);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// coeff
// ---------------------------------------------------------------------------

int cmd_coeff(int n, const std::string& lambda_text, const GlobalFlags& flags) {
    Partition lambda;
    try {
        lambda = Partition(parse_int_list(lambda_text, "lambda"));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("bad --lambda: ") + e.what());
    }
    if (lambda.size() != n)
        throw std::invalid_argument("--lambda must be a partition of n");

    const QtPolynomial direct = shuffle_coefficient(lambda, flags.engine());
    const QtPolynomial cross = expansion_monomial_coefficient(
        shuffle_sum(n, flags.engine()), composition_of(lambda));
    const bool match = direct == cross;
    if (!match)
        std::cerr << "MISMATCH: shuffle coefficient differs from the expansion"
                     " coefficient for lambda = " << lambda.to_string() << '\n';

    json result{{"n", n},
                {"lambda", lambda.parts()},
                {"coefficient", poly_json(direct)},
                {"cross_check", poly_json(cross)},
                {"match", match},
                {"pretty", direct.to_string()}};
    json parameters{{"n", n}, {"lambda", lambda_text}};
    print_envelope("coeff", std::move(parameters), std::move(result), flags);
    return match ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(int n, const std::string& cache_dir_flag, const GlobalFlags& flags) {
    std::string cache_dir = cache_dir_flag;
    if (cache_dir.empty()) {
        if (const char* env = std::getenv("SHUFFLE_CACHE_DIR")) cache_dir = env;
    }

    ShuffleResult result;
    std::string cache_state = "off";
    if (!cache_dir.empty()) {
        const std::filesystem::path file =
            std::filesystem::path(cache_dir) / ("shuffle-n" + std::to_string(n) + ".json");
        if (std::filesystem::exists(file)) {
            result = cache_load(n, file);
            cache_state = "hit";
        } else {
            result = compute_shuffle_result(n, flags.engine());
            std::filesystem::create_directories(file.parent_path());
            cache_store(result, file);
            cache_state = "miss";
        }
    } else {
        result = compute_shuffle_result(n, flags.engine());
    }

    const VerifyReport report = verify_result(result, flags.engine());
    json checks = json::array();
    for (const VerifyCheck& check : report.checks) {
        std::cerr << (check.pass ? "PASS " : "FAIL ") << check.name << ": "
                  << check.detail << '\n';
        checks.push_back(json{{"name", check.name},
                              {"pass", check.pass},
                              {"detail", check.detail}});
    }

    json result_json{{"n", n},
                     {"all_pass", report.all_pass()},
                     {"cache", cache_state},
                     {"checks", std::move(checks)}};
    json parameters{{"n", n}};
    if (!cache_dir_flag.empty()) parameters["cache"] = cache_dir_flag;
    print_envelope("verify", std::move(parameters), std::move(result_json), flags);
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of the shuffle theorem: parking function "
                 "statistics, nabla expansions, and their verification."};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kEngineVersion);

    GlobalFlags flags;
    app.add_option("--threads", flags.threads,
                   "Worker threads for the engine (default: machine parallelism)");
    app.add_flag("--reproducible", flags.reproducible,
                 "Omit the timestamp so identical invocations are byte-identical");
    app.add_flag("--allow-order-9", flags.allow_order_9,
                 "Lift the engine cap from order 8 to order 9");

    int n = 0;
    std::string kind = "pf";
    std::int64_t limit = -1;
    std::string format = "json";
    auto* enumerate = app.add_subcommand("enumerate",
                                         "List Dyck paths or parking functions in "
                                         "canonical order with statistics");
    enumerate->add_option("--n", n, "Order")->required();
    enumerate->add_option("--kind", kind, "Object kind")
        ->check(CLI::IsMember({"dyck", "pf"}));
    enumerate->add_option("--limit", limit, "Print at most this many rows (-1 = all)");
    enumerate->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string encoded_pf;
    bool verbose = false;
    auto* stats = app.add_subcommand("stats",
                                     "Statistics of one parking function given as "
                                     "path=<NE string>;cars=<comma list>");
    stats->add_option("--pf", encoded_pf, "Encoded parking function")->required();
    stats->add_flag("--verbose", verbose, "Include the diagonal inversion pair sets");

    std::string touch_text;
    bool want_schur = false;
    auto* nabla = app.add_subcommand("nabla",
                                     "Fundamental expansion of nabla e_n, or of "
                                     "nabla C_alpha with --touch");
    nabla->add_option("--n", n, "Order")->required();
    nabla->add_option("--touch", touch_text, "Restrict to this touch composition");
    nabla->add_flag("--schur", want_schur, "Also convert to the Schur basis");

    std::string lambda_text;
    auto* coeff = app.add_subcommand("coeff",
                                     "Shuffle coefficient of a partition plus its "
                                     "monomial-coefficient cross-check");
    coeff->add_option("--n", n, "Order")->required();
    coeff->add_option("--lambda", lambda_text, "Partition of n, e.g. 2,1")->required();

    std::string cache_dir;
    auto* verify_cmd = app.add_subcommand("verify",
                                          "Run the six consistency checks for one order");
    verify_cmd->add_option("--n", n, "Order")->required();
    verify_cmd->add_option("--cache", cache_dir,
                           "Cache directory (default: $SHUFFLE_CACHE_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(n, kind, limit, format, flags);
        if (stats->parsed()) return cmd_stats(encoded_pf, verbose, flags);
        if (nabla->parsed()) return cmd_nabla(n, touch_text, want_schur, flags);
        if (coeff->parsed()) return cmd_coeff(n, lambda_text, flags);
        if (verify_cmd->parsed()) return cmd_verify(n, cache_dir, flags);
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const NotSymmetricError& e) {
        std::cerr << "conversion error: " << e.what() << '\n';
        return kExitConversion;
    } catch (const NonIntegralError& e) {
        std::cerr << "conversion error: " << e.what() << '\n';
        return kExitConversion;
    } catch (const CacheError& e) {
        std::cerr << "cache error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OverflowError& e) {
        std::cerr << "arithmetic error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
