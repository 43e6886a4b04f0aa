#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "circa/report.hpp"
#include "cli.hpp"

using namespace circa;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check verdict lines") {
    const auto a = run({"check", "--row", "2,1,1"});
    CHECK(a.code == 0);
    CHECK(a.out.rfind("NONSINGULAR (screen)\n", 0) == 0);
    CHECK(a.out.find("  det = 4\n") != std::string::npos);
    CHECK(a.out.find("  d=1: 4\n") != std::string::npos);
    CHECK(a.out.find("  d=3: 2\n") != std::string::npos);

    const auto b = run({"check", "--row", "1,1,1"});
    CHECK(b.code == 0);
    CHECK(b.out.rfind("SINGULAR witness d=3 det=0\n", 0) == 0);
    CHECK(b.out.find("d=3: 0  (vanishes)") != std::string::npos);

    const auto c = run({"check", "--row", "1,2,1,3"});
    CHECK(c.out.rfind("NONSINGULAR (oracle)\n", 0) == 0);

    const auto bad = run({"check", "--row", "1,x,3"});
    CHECK(bad.code == 1);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());

    CHECK(run({"check", "--row=-1,1"}).out.rfind("SINGULAR witness d=1", 0) == 0);
}

TEST_CASE("check json and certificate file") {
    const auto path = std::filesystem::temp_directory_path() / "circa_cert_test.json";
    const auto r = run({"check", "--row", "1,2,2,1", "--json", "--certificate", path.string()});
    CHECK(r.code == 0);
    const auto doc = Json::parse(r.out);
    CHECK(doc["verdict"] == "SINGULAR");
    CHECK(doc["witness_d"] == 2);
    std::ifstream in(path);
    CHECK(Json::parse(in) == doc);
    std::filesystem::remove(path);
}

TEST_CASE("check reads a row file") {
    const auto path = std::filesystem::temp_directory_path() / "circa_rows_test.txt";
    {
        std::ofstream f(path);
        f << "2,1,1\n1,1,1\n\n1/2,-1/2\n";
    }
    const auto r = run({"check", "--file", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "2,1,1\tNONSINGULAR (screen)\n1,1,1\tSINGULAR witness d=3 det=0\n"
                   "1/2,-1/2\tSINGULAR witness d=1 det=0\n");
    std::filesystem::remove(path);
}

TEST_CASE("det subcommand") {
    CHECK(run({"det", "--row", "2,1,1"}).out == "det=4\n");
    CHECK(run({"det", "--row", "1/2,1/3", "--method", "resultant"}).out == "det=5/36\n");
    CHECK(run({"det", "--row", "1,2", "--method", "both"}).code == 0);
    CHECK(run({"det", "--row", "1,2", "--csv", "-"}).out == "det=-3\n1,2\n2,1\n");
    CHECK(run({"det", "--row", "1,2", "--method", "nope"}).code == 1);
}

TEST_CASE("conditions --json reproduces generate_conditions") {
    for (std::uint64_t n = 1; n <= 64; ++n) {
        const auto r = run({"conditions", "--n", std::to_string(n), "--json"});
        REQUIRE(r.code == 0);
        CHECK(conditions_from_json(Json::parse(r.out)) == generate_conditions(n));
    }
    const auto t = run({"conditions", "--n", "12", "--templates"});
    CHECK(t.out.find("templates match generic conditions: yes") != std::string::npos);
    CHECK(t.out.find("printed form:") != std::string::npos);
    CHECK(run({"conditions", "--n", "0"}).code == 1);
}

TEST_CASE("ramanujan-table") {
    const auto r = run({"ramanujan-table", "--dmax", "3", "--nmax", "3"});
    CHECK(r.out == "d\t0\t1\t2\t3\n1\t1\t1\t1\t1\n2\t1\t-1\t1\t-1\n3\t2\t-1\t-1\t2\n");
}

TEST_CASE("maillet, table1, zeroone, pairs") {
    const auto m = run({"maillet", "--p", "5", "--m", "2", "--decide", "--verify-similarity"});
    CHECK(m.code == 0);
    CHECK(m.out.find("first row: 1,4,16,9") != std::string::npos);
    CHECK(m.out.find("permutation similarity: ok") != std::string::npos);
    CHECK(run({"maillet", "--p", "9", "--m", "2"}).code == 1);

    const auto t = run({"table1", "--pmax", "13", "--mmax", "5", "--markdown"});
    CHECK(t.code == 0);
    CHECK(t.out.find("|") != std::string::npos);

    const auto z = run({"zeroone", "--n", "9", "--ones", "2", "--exhaustive"});
    CHECK(z.out.find("singular=0") != std::string::npos);
    CHECK(run({"zeroone", "--n", "6", "--ones", "3"}).code == 1);
    const auto zs = run({"zeroone", "--n", "27", "--ones", "2", "--samples", "50", "--seed", "1", "--json"});
    CHECK(Json::parse(zs.out)["tested"] == 50);

    const auto p = run({"pairs", "--qmax", "10"});
    CHECK(p.out == "q\tp\tr\tr_mod_4\tqualifies\n3\t13\t8\t0\tyes\n7\t29\t12\t0\tyes\n");
}

TEST_CASE("usage errors exit 1, help exits 0") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"check"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

#ifdef CIRCA_CLI_PATH
TEST_CASE("installed binary runs") {
    const std::string cmd = std::string(CIRCA_CLI_PATH) + " check --row 1,1,1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 256> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    CHECK(status == 0);
    CHECK(out.rfind("SINGULAR witness d=3 det=0", 0) == 0);

    const std::string bad = std::string(CIRCA_CLI_PATH) + " check --row 1,x,3 2>/dev/null";
    CHECK(WEXITSTATUS(system(bad.c_str())) == 1);
}
#endif
