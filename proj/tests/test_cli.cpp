#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args, const std::string& stdin_data = "",
                  const std::string& env_prefix = "") {
    std::string stdin_file;
    std::string command = env_prefix + " \"" BLOCKFOREST_BIN_PATH "\" " + args + " 2>&1";
    if (!stdin_data.empty()) {
        stdin_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/blockforest_cli_stdin.txt";
        std::ofstream out(stdin_file);
        out << stdin_data;
        out.close();
        command += " < " + stdin_file;
    }
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (!stdin_file.empty()) std::remove(stdin_file.c_str());
    return {code, output};
}

// Minimal structural validator for the subset of JSON Schema the published
// schemas use: type, required, properties, items.
bool conforms(const json& schema, const json& value, std::string& why) {
    if (schema.contains("type")) {
        const std::string type = schema["type"];
        const bool ok = (type == "object" && value.is_object()) ||
                        (type == "array" && value.is_array()) ||
                        (type == "string" && value.is_string()) ||
                        (type == "integer" && value.is_number_integer()) ||
                        (type == "boolean" && value.is_boolean());
        if (!ok) {
            why = "expected " + type + ", got " + value.dump().substr(0, 40);
            return false;
        }
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"]) {
            if (!value.contains(key.get<std::string>())) {
                why = "missing required key " + key.get<std::string>();
                return false;
            }
        }
    if (schema.contains("properties") && value.is_object())
        for (auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !conforms(sub, value[key], why)) {
                why = key + ": " + why;
                return false;
            }
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!conforms(schema["items"], item, why)) return false;
    return true;
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(BLOCKFOREST_SOURCE_DIR "/docs/schema/") + name);
    REQUIRE(in.good());
    return json::parse(in);
}

} // namespace

TEST_CASE("count outputs exact totals") {
    auto r = run_cli("count husimi 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "species\tn\tcount\nhusimi\t4\t29\n");

    CHECK(run_cli("count husimi 1").output == "species\tn\tcount\nhusimi\t1\t1\n");

    auto big = run_cli("count cacti 40");
    CHECK(big.exit_code == 0);
    // Exact big integers, no 64-bit truncation.
    CHECK(big.output.find("\t40\t") != std::string::npos);
    CHECK(big.output.size() > 40);
}

TEST_CASE("count by distribution lists rows in table order") {
    auto r = run_cli("count cacti 3 --by-distribution");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "distribution\tcount\nn2=2\t3\nn3=1\t1\n");
}

TEST_CASE("unlabeled series output") {
    auto r = run_cli("unlabeled triangular 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n\trooted\tunrooted\n") == 0);
    CHECK(r.output.find("1\t1\t1\n") != std::string::npos);
    CHECK(r.output.find("7\t5\t2\n") != std::string::npos);
    CHECK(r.output.find("9\t13\t4\n") != std::string::npos);

    CHECK(run_cli("unlabeled oriented 1").output == "n\trooted\tunrooted\n1\t1\t1\n");

    auto h = run_cli("unlabeled husimi 6");
    CHECK(h.output.find("6\t77\t22\n") != std::string::npos);

    auto j = run_cli("unlabeled oriented 4 --weighted --format json");
    CHECK(j.exit_code == 0);
    std::string why;
    CHECK_MESSAGE(conforms(load_schema("unlabeled.schema.json"), json::parse(j.output), why), why);
}

TEST_CASE("prufer encode and decode") {
    auto enc = run_cli("prufer encode \"3; {1,2},{2,3}\"");
    CHECK(enc.exit_code == 0);
    CHECK(enc.output == "lambda: 2; pi: {1}|{3}\n");

    auto dec = run_cli("prufer decode \"lambda: 2; pi: {1}|{3}\"");
    CHECK(dec.exit_code == 0);
    CHECK(dec.output == "3; {1,2},{2,3}\n");

    auto tri = run_cli("prufer encode \"3; {1,2,3}\"");
    CHECK(tri.output == "lambda: -; pi: {1,2,3}\n");

    // stdin, multiple lines
    auto multi = run_cli("prufer encode", "3; {1,2},{2,3}\n4; {1,4},{2,4},{3,4}\n");
    CHECK(multi.exit_code == 0);
    CHECK(multi.output == "lambda: 2; pi: {1}|{3}\nlambda: 4,4; pi: {1}|{2}|{3}\n");

    auto bad = run_cli("prufer encode", "3; {1,2},{2,3}\n4; {1,2},{3,4}\n");
    CHECK(bad.exit_code == 3);
    CHECK(bad.output.find("line 2") != std::string::npos);
}

TEST_CASE("virial report is valid json with the documented shape") {
    auto r = run_cli("virial 3");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    std::string why;
    CHECK_MESSAGE(conforms(load_schema("virial.schema.json"), doc, why), why);
    CHECK(doc["rows"][0]["virial"] == "0.5");
    CHECK(doc["verification"]["verdict"] == "agree");
    CHECK(doc["verification"]["fixed_point_exact"] == true);

    auto scaled = run_cli("virial 2 --alpha 4pi");
    json scaled_doc = json::parse(scaled.output);
    CHECK(scaled_doc["rows"][0]["virial"] == "0.0625");

    auto counted = run_cli("count husimi 3 --format json");
    CHECK_MESSAGE(conforms(load_schema("count.schema.json"), json::parse(counted.output), why),
                  why);
    auto oracle = run_cli("oracle husimi 4 --unlabeled --format json");
    CHECK_MESSAGE(conforms(load_schema("count.schema.json"), json::parse(oracle.output), why),
                  why);
    CHECK(json::parse(oracle.output)["count"] == "4");
}

TEST_CASE("identical invocations are byte-identical") {
    for (const std::string args :
         {std::string("count oriented 5 --by-distribution"),
          std::string("unlabeled oriented 5 --weighted"), std::string("virial 3"),
          std::string("oracle cacti 4 --by-distribution")}) {
        auto a = run_cli(args), b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("exit codes: usage 2, domain 3, consistency 4") {
    CHECK(run_cli("count nosuch 3").exit_code == 2);
    CHECK(run_cli("count husimi 0").exit_code == 2);
    CHECK(run_cli("count").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("unlabeled husimi 5 --weighted").exit_code == 2);

    auto limit = run_cli("oracle husimi 9");
    CHECK(limit.exit_code == 3);
    CHECK(limit.output.find("oracle limit") != std::string::npos);

    auto env_limit = run_cli("oracle husimi 6", "", "BLOCKFOREST_ORACLE_LIMIT=5");
    CHECK(env_limit.exit_code == 3);
    auto env_ok = run_cli("oracle husimi 4", "", "BLOCKFOREST_ORACLE_LIMIT=5");
    CHECK(env_ok.exit_code == 0);

    auto fault = run_cli("selftest --inject-fault");
    CHECK(fault.exit_code == 4);
    CHECK(fault.output.find("FAIL") != std::string::npos);
    CHECK(fault.output.find("injected fault") != std::string::npos);
}

TEST_CASE("selftest fast level passes quickly") {
    auto r = run_cli("selftest");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all invariants hold (fast)") != std::string::npos);
}
