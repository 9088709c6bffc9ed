#include <array>
#include <cstdio>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "brt/brauer.hpp"
#include "brt/catalog.hpp"
#include "brt/report.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(BRT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("analyze: worked example, text output") {
    const RunResult r =
        run_cli("analyze --group A5 --subgroup \"gens:(1,2,3,4,5);(2,5)(3,4)\" --prime 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("injective:          yes") != std::string::npos);
    CHECK(r.output.find("isomorphism:        no") != std::string::npos);
    CHECK(r.output.find("image index:        2") != std::string::npos);
}

TEST_CASE("analyze: trivial subgroup is not injective") {
    const RunResult r = run_cli("analyze --group A5 --subgroup \"gens:()\" --prime 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("injective:          no") != std::string::npos);
}

TEST_CASE("analyze: identity restriction is an isomorphism") {
    const RunResult r =
        run_cli("analyze --group C6 --subgroup \"gens:(1,2,3,4,5,6)\" --prime 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("isomorphism:        yes") != std::string::npos);
    CHECK(r.output.find("image index:        1") != std::string::npos);
}

TEST_CASE("structured report round-trips through JSON") {
    const RunResult r = run_cli(
        "analyze --group A5 --subgroup \"gens:(1,2,3,4,5);(2,5)(3,4)\" --prime 3 "
        "--format structured");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("tool") == brt::kToolName);
    CHECK(doc.at("version") == brt::kToolVersion);
    CHECK(doc.at("group").at("order") == 60);
    CHECK(doc.at("group").at("classes").size() == 5);

    // parsing the structured report reproduces every field of the
    // library-computed report
    const brt::RestrictionReport parsed = brt::report_from_json(doc.at("report"));
    const brt::PermGroup a5 = brt::parse_group_spec("A5");
    const brt::RestrictionReport direct =
        brt::analyze(brt::parse_subgroup_spec(a5, "gens:(1,2,3,4,5);(2,5)(3,4)"), 3);
    CHECK(parsed == direct);
}

TEST_CASE("table subcommand") {
    const RunResult text = run_cli("table --group S3");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("order: 6") != std::string::npos);
    CHECK(text.output.find("chi_3 (degree 2):") != std::string::npos);

    const RunResult a5 = run_cli("table --group A5");
    CHECK(a5.exit_code == 0);
    CHECK(a5.output.find("(degree 4)") != std::string::npos);
    CHECK(a5.output.find("(degree 5)") != std::string::npos);

    const RunResult structured = run_cli("table --group C2 --format structured");
    REQUIRE(structured.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(structured.output);
    CHECK(doc.at("table").at("irreducibles").size() == 2);
}

TEST_CASE("sweep is deterministic and flags the example row") {
    const RunResult a = run_cli("sweep --group S3");
    const RunResult b = run_cli("sweep --group S3");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);  // byte-identical
    // subgroup classes 1, C2, C3, S3 and primes 2, 3, 5
    CHECK(a.output.find("4 subgroup classes") != std::string::npos);
    CHECK(a.output.find("p=5") != std::string::npos);

    const RunResult sweep5 = run_cli("sweep --group A5 --prime 3 --format structured");
    REQUIRE(sweep5.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(sweep5.output);
    REQUIRE(doc.at("rows").size() == 9);  // one row per subgroup class
    bool saw_candidate = false;
    for (const auto& row : doc.at("rows")) {
        const auto& rep = row.at("report");
        if (rep.at("subgroup_order") == 10 && rep.at("injective") == true &&
            rep.at("r_g") == rep.at("r_h"))
            saw_candidate = true;
    }
    CHECK(saw_candidate);  // the D10 row
}

TEST_CASE("verify-paper passes on a fresh build") {
    const RunResult r = run_cli("verify-paper");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("all fixtures passed") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("analyze --group 'Q8' --subgroup 'gens:()' --prime 2").exit_code == 1);
    CHECK(run_cli("analyze --group A5 --subgroup 'gens:(1,2)' --prime 3").exit_code == 1);
    CHECK(run_cli("analyze --group A5 --subgroup 'gens:()' --prime 4").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("analyze --group A5").exit_code == 1);  // missing required flags
    CHECK(run_cli("table --group S8 --max-order 1000").exit_code == 2);  // cap
    CHECK(run_cli("sweep --group A5 --max-order 30").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
