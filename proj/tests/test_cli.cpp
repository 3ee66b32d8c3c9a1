#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "chern/cli.hpp"
#include "chern/genera.hpp"
#include "chern/json.hpp"
#include "chern/manifolds.hpp"
#include "chern/report.hpp"

using namespace chern;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

int count_lines_starting_with(const std::string& text, const std::string& prefix) {
    int count = 0;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (line.rfind(prefix, 0) == 0) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("verify prints one PASS line per n for libgober-wood") {
    const auto r = run_cli({"verify", "--target", "libgober-wood", "--n-min", "2", "--n-max", "8"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(count_lines_starting_with(r.out, "PASS") == 7);
    CHECK(count_lines_starting_with(r.out, "FAIL") == 0);
}

TEST_CASE("verify all over a short range") {
    const auto r = run_cli({"verify", "--target", "all", "--n-min", "2", "--n-max", "3"});
    CHECK(r.code == 0);
    // 6 + 6 + 1 identities per n, two values of n
    CHECK(count_lines_starting_with(r.out, "PASS") == 26);
}

TEST_CASE("verify emits schema-conformant JSON") {
    const auto r = run_cli({"verify", "--target", "lemma23", "--n-min", "2", "--n-max", "4",
                            "--json"});
    CHECK(r.code == 0);
    const njson doc = njson::parse(r.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 18);
    const Report report = report_from_json(doc);
    CHECK(all_pass(report));
    // round trip without loss
    CHECK(report_to_json(report) == doc);
    CHECK(doc[0].at("identity") == "h1");
    CHECK(doc[0].at("n") == 2);
}

TEST_CASE("byte-identical output across runs") {
    const std::vector<std::string> args = {"verify", "--target", "all", "--n-min", "2",
                                           "--n-max", "3", "--json"};
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
}

TEST_CASE("table text output for the dimension-one chi-y table") {
    const auto r = run_cli({"table", "--kind", "chi-y", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "kind=chi-y n=1\nrow0: 1/2·c1\nrow1: -1/2·c1\n");
}

TEST_CASE("table JSON matches the library") {
    const auto r = run_cli({"table", "--kind", "a-y", "--n", "3", "--json"});
    CHECK(r.code == 0);
    const njson doc = njson::parse(r.out);
    CHECK(doc.at("kind") == "a-y");
    CHECK(doc.at("n") == 3);
    const GenusTable table = genus_table(GenusKind::AY, 3);
    REQUIRE(doc.at("rows").size() == 4);
    for (int p = 0; p <= 3; ++p) {
        CHECK(combo_from_json(doc.at("rows")[static_cast<std::size_t>(p)]) ==
              table.rows[static_cast<std::size_t>(p)]);
    }
}

TEST_CASE("expand JSON matches the library") {
    const auto r = run_cli({"expand", "--kind", "l-y", "--n", "2", "--order", "3", "--json"});
    CHECK(r.code == 0);
    const njson doc = njson::parse(r.out);
    CHECK(doc.at("order") == 3);
    const ZExpansion zx = z_expand(GenusKind::LY, 2, 3);
    for (int k = 0; k <= 3; ++k) {
        CHECK(combo_from_json(doc.at("coeffs")[static_cast<std::size_t>(k)]) ==
              zx.coeffs[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("manifold command output and chern-number round trip") {
    const auto r = run_cli({"manifold", "--model", "cp:3", "--kind", "a-y", "--json"});
    CHECK(r.code == 0);
    const njson doc = njson::parse(r.out);
    CHECK(doc.at("model") == "cp:3");
    CHECK(doc.at("n") == 3);
    CHECK(doc.at("spin") == true);
    REQUIRE(doc.at("indices").size() == 4);
    for (const auto& entry : doc.at("indices")) {
        CHECK(entry.at("integral") == true);  // CP^3 is spin
    }

    // the emitted chern_numbers block is a valid raw model
    const auto round = run_cli(
        {"divisibility", "--model", doc.at("chern_numbers").dump(), "--json"});
    CHECK(round.code == 0);
    const njson rdoc = njson::parse(round.out);
    CHECK(rdoc.at("value") == "160");
    CHECK(rdoc.at("divisible_by_8") == true);
    CHECK(rdoc.at("quotient") == "20");
    CHECK(rdoc.at("spin").is_null());
}

TEST_CASE("manifold text output lists chern numbers and indices") {
    const auto r = run_cli({"manifold", "--model", "prod:cp1,cp1", "--kind", "chi-y"});
    CHECK(r.code == 0);
    CHECK(r.out.find("model=prod:cp1,cp1 n=2 spin=true kind=chi-y") != std::string::npos);
    CHECK(r.out.find("chern c2 = 4") != std::string::npos);
    CHECK(r.out.find("chern c1^2 = 8") != std::string::npos);
    CHECK(count_lines_starting_with(r.out, "index p=") == 3);
}

TEST_CASE("divisibility text output") {
    const auto cp3 = run_cli({"divisibility", "--model", "cp:3"});
    CHECK(cp3.code == 0);
    CHECK(cp3.out == "value=160 divisible=true quotient=20 spin=true\n");

    // not spin, so failing the divisibility is not an error
    const auto cp4 = run_cli({"divisibility", "--model", "cp:4"});
    CHECK(cp4.code == 0);
    CHECK(cp4.out == "value=550 divisible=false remainder=6 spin=false\n");

    const auto cp5 = run_cli({"divisibility", "--model", "cp:5"});
    CHECK(cp5.code == 0);
    CHECK(cp5.out.find("value=1440 divisible=true quotient=180") == 0);
}

TEST_CASE("malformed invocations exit 1 with diagnostics on the error stream") {
    const auto nosub = run_cli({});
    CHECK(nosub.code == 1);

    const auto badsub = run_cli({"frobnicate"});
    CHECK(badsub.code == 1);
    CHECK(badsub.out.empty());
    CHECK_FALSE(badsub.err.empty());

    const auto badkind = run_cli({"table", "--kind", "todd", "--n", "2"});
    CHECK(badkind.code == 1);
    CHECK(badkind.out.empty());

    const auto badmodel = run_cli({"divisibility", "--model", "sphere:2"});
    CHECK(badmodel.code == 1);
    CHECK(badmodel.err.find("model spec") != std::string::npos);

    const auto badrange = run_cli({"verify", "--target", "all", "--n-min", "5", "--n-max", "3"});
    CHECK(badrange.code == 1);

    const auto overcap = run_cli({"table", "--kind", "chi-y", "--n", "11"});
    CHECK(overcap.code == 1);
    CHECK(overcap.err.find("resource cap") != std::string::npos);
}

TEST_CASE("help exits zero") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}
