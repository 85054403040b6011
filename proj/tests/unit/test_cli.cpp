#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "complements/cli.hpp"

using namespace complements;
using complements::io::json;
using complements::cli::ExitCode;

namespace {

const std::string kFixtures = std::string(COMPLEMENTS_DATA_DIR) + "/fixtures/";

cli::RunOptions options() {
    cli::RunOptions o;
    o.data_dir = COMPLEMENTS_DATA_DIR;
    return o;
}

cli::CommandResult run(std::vector<std::string> args) { return cli::run(args, options()); }

json output(const std::vector<std::string>& args) {
    auto r = run(args);
    INFO(cli::render(r));
    REQUIRE(r.ok);
    return json::parse(cli::render(r));
}

struct Process {
    int code;
    std::string out;
};

Process spawn(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + COMPLEMENTS_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("documented examples") {
    auto curve = output({"compl", "curve", "--points", "2,3,5"});
    CHECK(curve["n"] == 6);
    CHECK(curve["exceptional"] == true);
    CHECK(curve["status"] == "ok");

    auto e6 = output({"dualgraph", "duval", kFixtures + "E6.json"});
    CHECK(e6["type"] == "E6");
    CHECK(e6["collection"] == json::array({2, 3, 3}));
    CHECK(e6["compl"] == 3);

    auto member = output({"coeffs", "check", "--alpha", "6/7", "--set", "Mm2"});
    CHECK(member["member"] == true);
}

TEST_CASE("subcommands") {
    auto arr = output({"compl", "arrangement", "--dim", "2", "--coeffs", "1/2,2/3,4/5,6/7"});
    CHECK(arr["n"] == 6);
    CHECK(arr["witness"].size() == 4);
    CHECK(arr["standard"] == true);
    CHECK(arr["candidate_exceptional"] == false);

    auto fixture = output({"compl", "arrangement", "--dim", "2", "--boundary", kFixtures + "cE8_r7.json"});
    CHECK(fixture["n"] == 6);

    auto enum1 = output({"except", "enumerate", "--dim", "1", "--max-points", "4"});
    CHECK(enum1["count"] == 7);
    auto enum2 = output({"except", "enumerate", "--dim", "2"});
    CHECK(enum2["count"] == 126);
    CHECK(enum2["const"] == 42);
    CHECK(enum2["diagnostics"].size() == 1);

    auto rounding = output({"coeffs", "check", "--alpha", "51/100", "--n", "2"});
    CHECK(rounding["rounding_lemma"] == false);
    CHECK(rounding["complement_coeff"] == 1);
    CHECK(rounding["member"] == false);

    auto registry = output({"coeffs", "check", "--alpha", "66/67", "--set", "Mm3", "--registry",
                            kFixtures + "registry_n2.json"});
    CHECK(registry["member"] == true);

    auto diff = output({"coeffs", "different", "--m", "2", "--terms", "2/3:1", "--set", "Msm"});
    CHECK(diff["alpha"] == "5/6");
    CHECK(diff["closed"] == true);

    auto fib = output({"dualgraph", "analyze", kFixtures + "fibration_b3.json", "--remove", "B"});
    CHECK(fib["negative_definite"] == false);
    CHECK(fib["components"].size() == 2);
    for (const auto& c : fib["components"]) CHECK(c["klt"] == true);

    auto lct = output({"lct", "table", kFixtures + "lct_two_piece.json", "--alpha", "1/3"});
    CHECK(lct["alpha0"] == "1/3");
    CHECK(lct["active"] == json::array({"S", "E"}));

    auto fixtures = output({"fixtures", "list"});
    CHECK(fixtures["fixtures"].size() >= 28);
    for (const auto& f : fixtures["fixtures"]) CHECK(std::filesystem::exists(f["path"].get<std::string>()));
}

TEST_CASE("every DuVal fixture classifies") {
    for (const char* name : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7",
                             "D8", "E6", "E7", "E8"}) {
        auto r = output({"dualgraph", "duval", kFixtures + name + ".json"});
        CHECK(r["type"] == name);
        CHECK(r["exceptional"] == (name[0] == 'E'));
    }
}

TEST_CASE("error exit codes") {
    auto unknown = run({"frobnicate"});
    CHECK(unknown.exit_code == ExitCode::usage);
    CHECK_FALSE(unknown.ok);
    CHECK(unknown.text.has_value());

    CHECK(run({"compl", "curve", "--points", "2,x"}).exit_code == ExitCode::usage);
    CHECK(run({"coeffs", "check", "--alpha", "1/"}).exit_code == ExitCode::usage);

    auto dir = std::filesystem::temp_directory_path() / "complements_cli_test";
    std::filesystem::create_directories(dir);
    auto bad = (dir / "bad.json").string();
    std::ofstream(bad) << "{\"vertices\": [}";
    auto malformed = run({"dualgraph", "analyze", bad});
    CHECK(malformed.exit_code == ExitCode::malformed_input);
    CHECK(malformed.payload["error"]["message"].get<std::string>().find("byte 14") != std::string::npos);

    auto not_nef = run({"compl", "curve", "--points", "2,3,7"});
    CHECK(not_nef.exit_code == ExitCode::domain);
    CHECK(not_nef.payload["error"]["kind"] == "not_nef");
    CHECK(run({"coeffs", "check", "--alpha", "3/2"}).exit_code == ExitCode::domain);
    CHECK(run({"coeffs", "check", "--alpha", "1/2", "--set", "Mm3"}).exit_code == ExitCode::domain);
    CHECK(run({"coeffs", "different", "--m", "5", "--terms", "1/2:3"}).exit_code == ExitCode::domain);
    auto capped = run({"compl", "curve", "--coeffs", "3/5,3/5,3/5", "--cap", "1"});
    CHECK(capped.exit_code == ExitCode::domain);
    CHECK(capped.payload["error"]["kind"] == "cap_exceeded");
}

TEST_CASE("help for every subcommand") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"--help"}, {"compl", "curve", "--help"},
          {"compl", "arrangement", "--help"}, {"except", "enumerate", "--help"},
          {"coeffs", "check", "--help"}, {"coeffs", "different", "--help"},
          {"dualgraph", "analyze", "--help"}, {"dualgraph", "duval", "--help"},
          {"lct", "table", "--help"}, {"fixtures", "list", "--help"}}) {
        auto r = run(args);
        CHECK(r.ok);
        CHECK(r.exit_code == ExitCode::ok);
        REQUIRE(r.text.has_value());
        CHECK(r.text->find("Usage") != std::string::npos);
    }
}

TEST_CASE("output is deterministic and reparses to the same value") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"compl", "curve", "--points", "2,2,2,2"},
          {"compl", "arrangement", "--dim", "3", "--coeffs", "3/4,3/4,3/4,3/4"},
          {"lct", "table", kFixtures + "lct_two_piece.json"},
          {"dualgraph", "analyze", kFixtures + "E8.json"}}) {
        auto first = cli::render(run(args));
        CHECK(first == cli::render(run(args)));
        auto parsed = json::parse(first);
        CHECK(parsed.dump(2) + "\n" == first);
    }
}

TEST_CASE("table format") {
    auto r = run({"--format", "table", "compl", "curve", "--points", "2,3,3"});
    REQUIRE(r.ok);
    auto text = cli::render(r);
    CHECK(text.find("n: 3") != std::string::npos);
    CHECK(text.find('{') == std::string::npos);
}

TEST_CASE("executable exit codes and search cap override") {
    CHECK(spawn("compl curve --points 2,3,5").code == 0);
    CHECK(spawn("nonsense").code == 2);
    CHECK(spawn("compl curve --points 2,3,7").code == 4);
    auto dir = std::filesystem::temp_directory_path() / "complements_cli_test";
    std::filesystem::create_directories(dir);
    auto bad = (dir / "bad_table.json").string();
    std::ofstream(bad) << "[1, 2";
    auto malformed = spawn("lct table " + bad);
    CHECK(malformed.code == 3);
    CHECK(malformed.out.find("malformed JSON at byte") != std::string::npos);

    CHECK(spawn("compl curve --coeffs 3/5,3/5,3/5", "COMPLEMENT_SEARCH_CAP=1").code == 4);
    CHECK(spawn("compl curve --coeffs 3/5,3/5,3/5", "COMPLEMENT_SEARCH_CAP=2").code == 0);
    CHECK(spawn("compl curve --coeffs 3/5,3/5,3/5 --cap 2", "COMPLEMENT_SEARCH_CAP=1").code == 0);
}
