#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

#ifndef SHUFFLE_CLI_PATH
#error "SHUFFLE_CLI_PATH must point at the built binary"
#endif
#ifndef SHUFFLE_SCHEMA_DIR
#error "SHUFFLE_SCHEMA_DIR must point at tools/schemas"
#endif

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string command =
        env + std::string(SHUFFLE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t read = 0;
    while ((read = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        out.append(buffer, read);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(SHUFFLE_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

// Checks the subset of JSON Schema the shipped schemas use: type (single or
// list), required, properties, items, enum, minItems, maxItems.
bool matches_type(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    return false;
}

void validate(const json& value, const json& schema, const std::string& where) {
    if (schema.contains("type")) {
        const json& type = schema["type"];
        bool ok = false;
        if (type.is_string())
            ok = matches_type(value, type.get<std::string>());
        else
            for (const auto& option : type)
                ok = ok || matches_type(value, option.get<std::string>());
        if (!ok) FAIL_CHECK("type mismatch at " << where << ": " << value.dump());
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& option : schema["enum"]) found = found || option == value;
        if (!found) FAIL_CHECK("enum mismatch at " << where << ": " << value.dump());
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    FAIL_CHECK("missing key " << key << " at " << where);
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key)) validate(value[key], sub, where + "." + key);
    }
    if (value.is_array()) {
        if (schema.contains("minItems") &&
            value.size() < schema["minItems"].get<std::size_t>())
            FAIL_CHECK("too few items at " << where);
        if (schema.contains("maxItems") &&
            value.size() > schema["maxItems"].get<std::size_t>())
            FAIL_CHECK("too many items at " << where);
        if (schema.contains("items")) {
            std::size_t i = 0;
            for (const auto& item : value)
                validate(item, schema["items"], where + "[" + std::to_string(i++) + "]");
        }
    }
}

json checked_envelope(const RunResult& run, const std::string& command) {
    const json envelope = json::parse(run.out);
    validate(envelope, load_schema("envelope.schema.json"), "envelope");
    CHECK(envelope["command"] == command);
    validate(envelope["result"], load_schema(command + ".schema.json"), command);
    return envelope;
}

}  // namespace

TEST_CASE("cli: enumerate pf order 2 reproduces the table") {
    const RunResult run = run_cli("enumerate --n 2 --kind pf --reproducible");
    CHECK(run.exit_code == 0);
    const json envelope = checked_envelope(run, "enumerate");
    const json& result = envelope["result"];
    CHECK(result["count"] == 3);
    REQUIRE(result["rows"].size() == 3);
    const json& rows = result["rows"];
    CHECK(rows[0]["path"] == "NNEE");
    CHECK(rows[0]["cars"] == json::array({1, 2}));
    CHECK(rows[0]["area"] == 1);
    CHECK(rows[0]["dinv"] == 0);
    CHECK(rows[0]["word"] == json::array({2, 1}));
    CHECK(rows[0]["ides"] == json::array({1}));
    CHECK(rows[0]["touch"] == json::array({2}));
    CHECK(rows[1]["dinv"] == 1);
    CHECK(rows[2]["word"] == json::array({1, 2}));
    CHECK(rows[2]["ides"] == json::array());
}

TEST_CASE("cli: enumerate with limit 0 reports the count only") {
    const RunResult run = run_cli("enumerate --n 3 --kind pf --limit 0 --reproducible");
    CHECK(run.exit_code == 0);
    const json envelope = checked_envelope(run, "enumerate");
    CHECK(envelope["result"]["count"] == 16);
    CHECK(envelope["result"]["rows"].empty());

    const RunResult two = run_cli("enumerate --n 3 --kind pf --limit 2 --reproducible");
    const json two_env = checked_envelope(two, "enumerate");
    CHECK(two_env["result"]["count"] == 16);
    REQUIRE(two_env["result"]["rows"].size() == 2);
    CHECK(two_env["result"]["rows"][0]["index"] == 0);
    CHECK(two_env["result"]["rows"][1]["index"] == 1);
}

TEST_CASE("cli: enumerate dyck order 1 and csv header") {
    const RunResult run = run_cli("enumerate --n 1 --kind dyck --reproducible");
    CHECK(run.exit_code == 0);
    const json envelope = checked_envelope(run, "enumerate");
    CHECK(envelope["result"]["count"] == 1);
    CHECK(envelope["result"]["rows"][0]["path"] == "NE");

    const RunResult csv = run_cli("enumerate --n 2 --kind pf --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("index,path,cars,area,dinv,word,ides,touch\n", 0) == 0);
    const RunResult csv_header_only =
        run_cli("enumerate --n 3 --kind pf --format csv --limit 0");
    CHECK(csv_header_only.out == "index,path,cars,area,dinv,word,ides,touch\n");
    const RunResult csv_dyck = run_cli("enumerate --n 1 --kind dyck --format csv");
    CHECK(csv_dyck.out == "index,path,area\n0,NE,0\n");
}

TEST_CASE("cli: stats on the order-8 example") {
    const RunResult run = run_cli(
        "stats --pf \"path=NNNEEENNENEENNEE;cars=2,3,8,4,6,7,1,5\" --verbose "
        "--reproducible");
    CHECK(run.exit_code == 0);
    const json envelope = checked_envelope(run, "stats");
    const json& result = envelope["result"];
    CHECK(result["area"] == 6);
    CHECK(result["dinv"] == 11);
    CHECK(result["word"] == json::array({8, 5, 7, 6, 3, 1, 4, 2}));
    CHECK(result["ides"] == json::array({2, 4, 6, 7}));
    CHECK(result["touch"] == json::array({3, 3, 2}));
    CHECK(result["dinv_primary"].size() == 5);
    CHECK(result["dinv_secondary"].size() == 6);
}

TEST_CASE("cli: stats validation failures exit 2") {
    CHECK(run_cli("stats --pf \"path=NNEE;cars=2,1\"").exit_code == 2);
    CHECK(run_cli("stats --pf \"path=NNEE;cars=1,2,3\"").exit_code == 2);
    CHECK(run_cli("stats --pf gibberish").exit_code == 2);
    // different columns make the decreasing labels legal
    CHECK(run_cli("stats --pf \"path=NENE;cars=2,1\"").exit_code == 0);
}

TEST_CASE("cli: nabla identities at order 2") {
    const RunResult run = run_cli("nabla --n 2 --schur --reproducible");
    CHECK(run.exit_code == 0);
    const json envelope = checked_envelope(run, "nabla");
    const json& result = envelope["result"];
    CHECK(result["expansion"]["terms"].size() == 2);
    CHECK(result["schur_pretty"] == "(q + t)*s[1,1] + (1)*s[2]");

    const RunResult c2 = run_cli("nabla --n 2 --touch 2 --reproducible");
    CHECK(c2.exit_code == 0);
    const json c2_env = checked_envelope(c2, "nabla");
    CHECK(c2_env["result"]["pretty"] == "(t)*F[2,{1}]");

    const RunResult c11 = run_cli("nabla --n 2 --touch 1,1 --reproducible");
    CHECK(c11.exit_code == 0);
    const json c11_env = checked_envelope(c11, "nabla");
    CHECK(c11_env["result"]["pretty"] == "(1)*F[2,{}] + (q)*F[2,{1}]");

    const RunResult one = run_cli("nabla --n 1 --reproducible");
    CHECK(one.exit_code == 0);
    CHECK(checked_envelope(one, "nabla")["result"]["pretty"] == "(1)*F[1,{}]");
}

TEST_CASE("cli: nabla usage errors") {
    CHECK(run_cli("nabla --n 2 --touch 3").exit_code == 2);      // wrong sum
    CHECK(run_cli("nabla --n 2 --touch 1,x").exit_code == 2);    // not a list
    CHECK(run_cli("nabla --n 99").exit_code == 2);               // over the cap
    CHECK(run_cli("nabla").exit_code == 2);                      // missing --n
    CHECK(run_cli("frobnicate --n 2").exit_code == 2);           // unknown command
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli: coeff cross-check") {
    const RunResult run = run_cli("coeff --n 2 --lambda 1,1 --reproducible");
    CHECK(run.exit_code == 0);
    const json envelope = checked_envelope(run, "coeff");
    CHECK(envelope["result"]["match"] == true);
    CHECK(envelope["result"]["pretty"] == "1 + q + t");

    const RunResult two = run_cli("coeff --n 2 --lambda 2 --reproducible");
    CHECK(checked_envelope(two, "coeff")["result"]["pretty"] == "1");

    const RunResult three = run_cli("coeff --n 3 --lambda 3 --reproducible");
    CHECK(three.exit_code == 0);
    CHECK(checked_envelope(three, "coeff")["result"]["match"] == true);

    CHECK(run_cli("coeff --n 3 --lambda 1,2").exit_code == 2);  // not a partition
    CHECK(run_cli("coeff --n 3 --lambda 2,2").exit_code == 2);  // wrong size
}

TEST_CASE("cli: verify passes and uses the cache") {
    const RunResult run = run_cli("verify --n 2 --reproducible");
    CHECK(run.exit_code == 0);
    const json envelope = checked_envelope(run, "verify");
    CHECK(envelope["result"]["all_pass"] == true);
    CHECK(envelope["result"]["cache"] == "off");
    CHECK(envelope["result"]["checks"].size() == 6);

    const std::string dir =
        (std::filesystem::temp_directory_path() / "shuffle-cli-cache").string();
    std::filesystem::remove_all(dir);
    const RunResult miss =
        run_cli("verify --n 2 --cache " + dir + " --reproducible");
    CHECK(miss.exit_code == 0);
    CHECK(checked_envelope(miss, "verify")["result"]["cache"] == "miss");
    const RunResult hit = run_cli("verify --n 2 --cache " + dir + " --reproducible");
    CHECK(hit.exit_code == 0);
    CHECK(checked_envelope(hit, "verify")["result"]["cache"] == "hit");

    // the environment variable supplies the default cache directory
    const RunResult env_hit = run_cli("verify --n 2 --reproducible",
                                      "SHUFFLE_CACHE_DIR=" + dir + " ");
    CHECK(env_hit.exit_code == 0);
    CHECK(checked_envelope(env_hit, "verify")["result"]["cache"] == "hit");
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: reproducible runs are byte identical") {
    const RunResult a = run_cli("nabla --n 3 --schur --reproducible");
    const RunResult b = run_cli("nabla --n 3 --schur --reproducible");
    CHECK(a.out == b.out);
    const RunResult threaded = run_cli("nabla --n 3 --schur --reproducible --threads 2");
    CHECK(threaded.out == a.out);
}
