#include "support.hpp"

#include <cstdio>
#include <filesystem>

#include <json.hpp>

#include "cli.hpp"

using namespace wktau;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("amatrix") {
    const Result r = run({"amatrix", "--max-m", "2", "--max-n", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 1 + 9);
    std::size_t nonzero = 0;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "m,n,value,provenance");
    while (std::getline(lines, line)) {
        const auto first = line.find(','), second = line.find(',', first + 1), third = line.find(',', second + 1);
        nonzero += line.substr(second + 1, third - second - 1) != "0" ? 1 : 0;
    }
    CHECK(nonzero == 3);

    const Result zero = run({"amatrix", "--max-m", "0", "--max-n", "0", "--format", "json"});
    CHECK(zero.code == 0);
    const auto j = nlohmann::json::parse(zero.out);
    REQUIRE(j["entries"].size() == 1);
    CHECK(j["entries"][0]["re"] == "0");
    CHECK(j["entries"][0]["im"] == "0");

    const Result big = run({"amatrix", "--max-m", "5", "--max-n", "1", "--format", "csv"});
    CHECK(big.out.find("\n4,1,455/9216,") != std::string::npos);

    CHECK(run({"amatrix", "--max-m", "-1"}).code == 2);
}

TEST_CASE("expand") {
    const Result schur = run({"expand", "--basis", "schur", "--degree", "3", "--format", "json"});
    CHECK(schur.code == 0);
    const auto j = nlohmann::json::parse(schur.out);
    REQUIRE(j["terms"].size() == 4);  // constant plus three at degree 3
    CHECK(j["terms"][1]["partition"] == nlohmann::json::array({3}));
    CHECK(j["terms"][1]["im"] == "-5/96");
    CHECK(j["terms"][2]["im"] == "-7/96");
    CHECK(j["terms"][3]["im"] == "-5/96");

    const Result p0 = run({"expand", "--basis", "p", "--degree", "0", "--format", "json"});
    const auto jp = nlohmann::json::parse(p0.out);
    CHECK(jp["family"] == "p");
    CHECK(jp["degree_bound"] == 0);
    REQUIRE(jp["terms"].size() == 1);
    CHECK(jp["terms"][0]["monomial"].empty());
    CHECK(jp["terms"][0]["re"] == "1");

    const Result t = run({"expand", "--basis", "t", "--degree", "9", "--format", "csv"});
    CHECK(t.out.find("\nt0^3,3,1/6,0\n") != std::string::npos);

    const Result warn = run({"expand", "--degree", "4"});
    CHECK(warn.code == 0);
    CHECK(warn.err.find("warning") != std::string::npos);
    CHECK(run({"expand", "--degree", "6"}).err.empty());

    CHECK(run({"expand", "--basis", "q"}).code == 2);
    CHECK(run({"expand", "--degree", "60", "--max-terms", "100"}).code == 4);
}

TEST_CASE("approximate rendering is opt-in") {
    const Result exact = run({"expand", "--basis", "T", "--degree", "3"});
    const Result approx = run({"expand", "--basis", "T", "--degree", "3", "--approx"});
    CHECK(exact.out.find('~') == std::string::npos);
    CHECK(approx.out.find('~') != std::string::npos);
}

TEST_CASE("intersect") {
    const Result a = run({"intersect", "0", "0", "0"});
    CHECK(a.code == 0);
    CHECK(a.out.find("= 1\n") != std::string::npos);
    CHECK(a.out.find("genus 0") != std::string::npos);

    const Result b = run({"intersect", "4", "--format", "json"});
    const auto jb = nlohmann::json::parse(b.out);
    CHECK(jb["value"] == "1/1152");
    CHECK(jb["genus"] == 2);

    const Result c = run({"intersect", "2", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(c.out)["value"] == "29/5760");

    const Result bad = run({"intersect", "5"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("violates selection rule") != std::string::npos);

    const Result small = run({"intersect", "4", "--degree", "6"});
    CHECK(small.code == 2);
    CHECK(small.err.find("increase --degree") != std::string::npos);

    CHECK(run({"intersect"}).code == 2);
    CHECK(run({"intersect", "-1"}).code == 2);
}

TEST_CASE("verify") {
    const Result rec = run({"verify", "--suite", "recursion", "--max-weight", "30"});
    CHECK(rec.code == 0);
    const auto j = nlohmann::json::parse(rec.out);
    CHECK(j["pass"] == true);
    REQUIRE(j["checks"].size() == 3);
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("check"));
        CHECK(c.contains("params"));
        CHECK(c["residuals"].empty());
    }
    CHECK(run({"verify", "--suite", "virasoro", "--degree", "12"}).code == 0);
    CHECK(run({"verify", "--suite", "cutjoin", "--degree", "12"}).code == 0);
    CHECK(run({"verify", "--suite", "fock", "--suite", "identities", "--degree", "9", "--format", "text"}).code == 0);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("output is deterministic and can go to a file") {
    const std::vector<std::string> args{"expand", "--basis", "u", "--degree", "9", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    const auto path = std::filesystem::temp_directory_path() / "wktau_cli_test.json";
    std::vector<std::string> with_file = args;
    with_file.insert(with_file.end(), {"--output", path.string()});
    const Result r = run(with_file);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == run(args).out);
    std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"expand", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

}
