#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "equidist/family_io.hpp"
#include "equidist/report_json.hpp"

using namespace equidist;
using cli::main_entry;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = main_entry(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bound subcommand") {
    const auto r = invoke({"bound", "--n", "10", "--q", "2", "--lambda", "3"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out ==
          "bound: 10\n"
          "source: main_theorem\n"
          "exceptional: false\n"
          "excluded_value: 11/2\n"
          "conjectural: false\n");

    const auto ex = invoke({"--format", "json", "bound", "--n", "7", "--q", "2", "--lambda", "4"});
    CHECK(ex.code == cli::kSuccess);
    const auto j = Json::parse(ex.out);
    CHECK(j["bound"] == 8);
    CHECK(j["exceptional"] == true);
    CHECK(j["excluded_value"] == "4");

    const auto q3 = Json::parse(invoke({"--format", "json", "bound", "--n", "5", "--q", "3", "--lambda", "2"}).out);
    CHECK(q3["bound"] == 10);
    CHECK(q3["conjectural"] == true);

    CHECK(invoke({"bound", "--n", "3", "--q", "2", "--lambda", "5"}).code == cli::kUsageError);
    CHECK(invoke({"bound", "--n", "3", "--q", "2"}).code == cli::kUsageError);
}

TEST_CASE("verify subcommand") {
    const auto ok = invoke({"verify", "-"}, "3 2\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n");
    CHECK(ok.code == cli::kSuccess);
    CHECK(ok.out.find("lambda: 2") != std::string::npos);

    const auto bad = invoke({"verify", "-"}, "2 2\n0 0\n0 1\n1 1\n");
    CHECK(bad.code == cli::kClaimViolated);
    CHECK(bad.out.find("equidistant: no") != std::string::npos);

    const auto seeded = invoke({"--seed", "7", "verify", "-"}, "3 2\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n");
    CHECK(seeded.code == cli::kSuccess);
    CHECK(seeded.out.find("isometry_check: preserved (seed 7)") != std::string::npos);

    CHECK(invoke({"verify", "-"}, "2 2\n0 0\n").code == cli::kUsageError);
    CHECK(invoke({"verify", "-"}, "2 2\n0 0\n0 x\n").code == cli::kUsageError);
    CHECK(invoke({"verify", "/nonexistent/family.txt"}).code == cli::kUsageError);
}

TEST_CASE("construct output feeds verify") {
    const auto built = invoke({"construct", "hadamard", "--order", "12", "--as-family"});
    REQUIRE(built.code == cli::kSuccess);
    CHECK(parse_family(built.out).size() == 12);

    const auto checked = invoke({"--format", "json", "verify", "-"}, built.out);
    CHECK(checked.code == cli::kSuccess);
    const auto j = Json::parse(checked.out);
    CHECK(j["equidistant"] == true);
    CHECK(j["lambda"] == 6);
    CHECK(j["m"] == 12);

    const auto cert = invoke({"certify", "-"}, built.out);
    CHECK(cert.code == cli::kSuccess);
    CHECK(cert.out.find("conclusion: bound_n_proven") != std::string::npos);

    CHECK(invoke({"construct", "hadamard", "--order", "28"}).code == cli::kUsageError);
    CHECK(invoke({"construct", "hadamard", "--order", "6"}).code == cli::kUsageError);
}

TEST_CASE("certify subcommand errors") {
    CHECK(invoke({"certify", "-"}, "2 3\n0 0\n1 1\n2 2\n").code == cli::kUsageError);
    CHECK(invoke({"certify", "-"}, "2 2\n0 0\n0 1\n1 1\n").code == cli::kClaimViolated);
}

TEST_CASE("search subcommand") {
    const auto r = invoke({"search", "--n", "3", "--q", "2", "--lambda", "2"});
    CHECK(r.code == cli::kSuccess);
    const Family witness = parse_family(r.out);
    CHECK(witness == Family(3, 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(r.out.find("# max_size: 4") != std::string::npos);

    const auto budget = invoke({"search", "--n", "8", "--q", "2", "--lambda", "4", "--budget", "1"});
    CHECK(budget.code == cli::kResourceExhausted);

    CHECK(invoke({"search", "--n", "13", "--q", "2", "--lambda", "4"}).code == cli::kResourceExhausted);
    CHECK(invoke({"search", "--n", "3", "--q", "2", "--lambda", "2", "--threads", "0"}).code == cli::kUsageError);
}

TEST_CASE("json output is stable across runs") {
    const std::vector<std::string> args{"--format", "json", "search", "--n", "6", "--q", "2", "--lambda", "4",
                                        "--threads", "2"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK(a.code == cli::kSuccess);
    CHECK(a.out == b.out);
}

TEST_CASE("format and usage errors") {
    CHECK(invoke({"--format", "csv", "bound", "--n", "3", "--q", "2", "--lambda", "1"}).code == cli::kUsageError);
    CHECK(invoke({"--format", "yaml", "bound", "--n", "3", "--q", "2", "--lambda", "1"}).code == cli::kUsageError);
    CHECK(invoke({"frobnicate"}).code == cli::kUsageError);
    CHECK(invoke({}).code == cli::kUsageError);
    const auto help = invoke({"--help"});
    CHECK(help.code == cli::kSuccess);
    CHECK(help.out.find("sweep") != std::string::npos);
}

TEST_CASE("sweep subcommand") {
    const auto csv = invoke({"--format", "csv", "sweep", "--q", "2", "--max-n", "4"});
    CHECK(csv.code == cli::kSuccess);
    CHECK(csv.out.rfind("n,q,lambda,max_size,bound,exceptional,complete,nodes\n", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 11);

    const auto q3 = invoke({"--format", "json", "sweep", "--q", "3", "--max-n", "2"});
    CHECK(q3.code == cli::kClaimViolated);
    CHECK(Json::parse(q3.out)["counterexample_flag"] == true);

    const auto dir = std::filesystem::temp_directory_path() / "equidist_cli_resume";
    std::filesystem::remove_all(dir);
    const auto first = invoke({"--format", "csv", "sweep", "--q", "2", "--max-n", "3", "--resume", dir.string()});
    CHECK(first.code == cli::kSuccess);
    CHECK(std::filesystem::exists(dir / "row_q2_n3_lambda2.json"));
    const auto second = invoke({"--format", "csv", "sweep", "--q", "2", "--max-n", "3", "--resume", dir.string()});
    CHECK(second.out == first.out);
    std::filesystem::remove_all(dir);

    const auto limited = invoke({"sweep", "--q", "2", "--max-n", "4", "--max-vertices", "8"});
    CHECK(limited.code == cli::kResourceExhausted);
}
