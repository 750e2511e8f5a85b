// End-to-end checks of the command-line tool: exit codes, output formats,
// reproducibility, and JSON validity against the shipped schema.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using json = nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

// Interprets the subset of JSON Schema the shipped schema uses: $ref into
// definitions, oneOf, type, enum, pattern, required, properties with
// additionalProperties:false, and items.
bool conforms(const json& root, const json& schema, const json& value) {
    if (schema.contains("$ref")) {
        const std::string prefix = "#/definitions/";
        std::string ref = schema["$ref"].get<std::string>();
        REQUIRE(ref.rfind(prefix, 0) == 0);
        return conforms(root, root["definitions"].at(ref.substr(prefix.size())), value);
    }
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const auto& sub : schema["oneOf"]) hits += conforms(root, sub, value) ? 1 : 0;
        return hits == 1;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& e : schema["enum"]) found = found || e == value;
        if (!found) return false;
    }
    if (schema.contains("type")) {
        std::string t = schema["type"].get<std::string>();
        if (t == "object" && !value.is_object()) return false;
        if (t == "array" && !value.is_array()) return false;
        if (t == "string" && !value.is_string()) return false;
        if (t == "boolean" && !value.is_boolean()) return false;
        if (t == "integer" && !value.is_number_integer()) return false;
        if (t == "number" && !value.is_number()) return false;
    }
    if (schema.contains("pattern")) {
        if (!value.is_string()) return false;
        if (!std::regex_match(value.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
            return false;
    }
    if (schema.contains("required"))
        for (const auto& k : schema["required"])
            if (!value.contains(k.get<std::string>())) return false;
    if (schema.contains("properties") && value.is_object()) {
        const json& props = schema["properties"];
        bool extra_ok = !(schema.contains("additionalProperties") &&
                          schema["additionalProperties"] == json(false));
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                if (!conforms(root, props.at(it.key()), it.value())) return false;
            } else if (!extra_ok) {
                return false;
            }
        }
    }
    if (schema.contains("items") && value.is_array())
        for (const auto& el : value)
            if (!conforms(root, schema["items"], el)) return false;
    return true;
}

json load_schema() {
    std::ifstream f(SCHEMA_PATH);
    REQUIRE(f.good());
    return json::parse(f);
}

}  // namespace

TEST_CASE("reruns are byte-identical modulo the timestamp header") {
    std::string args = "census --operator lamplighter --window 5 --field 3";
    RunResult bare1 = run(args + " --no-meta");
    RunResult bare2 = run(args + " --no-meta");
    CHECK(bare1.code == 0);
    CHECK(bare1.out == bare2.out);

    RunResult meta = run(args);
    auto meta_lines = lines_of(meta.out);
    REQUIRE(meta_lines.size() > 1);
    CHECK(meta_lines[0].rfind("# generated ", 0) == 0);
    std::string body;
    for (size_t i = 1; i < meta_lines.size(); ++i) body += meta_lines[i] + "\n";
    CHECK(body == bare1.out);
}

TEST_CASE("census JSON validates against the shipped schema") {
    json schema = load_schema();
    RunResult r = run("census --operator lamplighter --window 6 --field 3 --no-meta");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(conforms(schema, schema, doc));
    REQUIRE(doc.is_array());
    REQUIRE(!doc.empty());
    CHECK(doc[0]["type_id"] == 0);
    // single-vertex interior component: measure 1/4, one-dimensional kernel
    CHECK(doc[0]["measure"] == "1/4");
    CHECK(doc[0]["kernel_dim"] == 1);
    CHECK(doc[0]["interior"] == true);
}

TEST_CASE("closed-form JSON validates and pins exact values") {
    json schema = load_schema();
    RunResult t13 = run("closed-form thm13 --prime 3 --no-meta");
    REQUIRE(t13.code == 0);
    json d13 = json::parse(t13.out);
    CHECK(conforms(schema, schema, d13));
    CHECK(d13["exact"] == "1993/2688");
    CHECK(d13["tail"] == "0/1");

    RunResult scaled = run("closed-form thm13 --prime 3 --with-1344 --no-meta");
    CHECK(json::parse(scaled.out)["exact"] == "1993/2");

    RunResult t12 = run("closed-form thm12 --trunc 0 --no-meta");
    REQUIRE(t12.code == 0);
    json d12 = json::parse(t12.out);
    CHECK(conforms(schema, schema, d12));
    CHECK(d12["exact"] == "1/64");

    RunResult sig = run("closed-form sigma --no-meta");
    REQUIRE(sig.code == 0);
    json dsig = json::parse(sig.out);
    CHECK(conforms(schema, schema, dsig));
    CHECK(dsig["exact"] == "1/64");
    CHECK(dsig["quantity"] == "sigma {}");
}

TEST_CASE("estimate emits the documented CSV header and valid JSON") {
    RunResult csv = run("estimate --operator lamplighter --field 0 --boxes 2:2,4:4 --no-meta");
    REQUIRE(csv.code == 0);
    auto ls = lines_of(csv.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "box,dim,size,estimate_num,estimate_den,estimate_float");
    CHECK(ls[2] == "4x4,16,64,1,4,0.25");

    json schema = load_schema();
    RunResult js = run(
        "estimate --operator lamplighter --field 0 --boxes 2:2,4:4 --format json --no-meta");
    REQUIRE(js.code == 0);
    json doc = json::parse(js.out);
    CHECK(conforms(schema, schema, doc));
    CHECK(doc["rows"][1]["estimate"] == "1/4");
}

TEST_CASE("table dedupes primes and validates as JSON") {
    RunResult csv = run("table --primes 3,5,3 --no-meta");
    REQUIRE(csv.code == 0);
    auto ls = lines_of(csv.out);
    REQUIRE(ls.size() == 3);  // header plus one row per distinct prime
    CHECK(ls[0] == "prime,ord2,L,inner_exact,inner_float,with_1344_exact");
    CHECK(ls[1].rfind("3,2,2;4,1993/2688,", 0) == 0);

    json schema = load_schema();
    RunResult js = run("table --primes 3,5,7 --format json --no-meta");
    REQUIRE(js.code == 0);
    json doc = json::parse(js.out);
    CHECK(conforms(schema, schema, doc));
    REQUIRE(doc.size() == 3);
    CHECK(doc[2]["L"] == json::array({2, 4, 8}));
}

TEST_CASE("bad inputs exit with the usage code") {
    CHECK(run("table --primes 2").code == 2);
    CHECK(run("table --primes 9").code == 2);
    CHECK(run("verify --suite bogus").code == 2);
    CHECK(run("census --operator lamplighter --window 4 --field 4").code == 2);
    CHECK(run("families --kmax 2").code == 2);  // missing --check
    CHECK(run("estimate --operator 'family:G1:2' --field 0 --boxes 2:2").code == 2);
    CHECK(run("estimate").code == 2);  // missing required --operator
    CHECK(run("estimate --operator lamplighter --field 3 --boxes oops").code == 2);
    CHECK(run("nonsense").code == 2);
}

TEST_CASE("verify suites report per-check lines and exit zero") {
    RunResult r = run("verify --suite linalg --no-meta");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() >= 2);
    for (size_t i = 0; i + 1 < ls.size(); ++i) CHECK(ls[i].rfind("[PASS] ", 0) == 0);
    CHECK(ls.back().rfind("suite linalg: pass", 0) == 0);
}

TEST_CASE("--output writes the same bytes as stdout") {
    std::string path = "/tmp/kergrad_cli_out_test.csv";
    std::remove(path.c_str());
    RunResult direct = run("table --primes 3,5 --no-meta");
    RunResult filed = run("table --primes 3,5 --no-meta --output " + path);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == direct.out);
    std::remove(path.c_str());
}
