#include "test_support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QFACE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/qface_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("cli fvector matches the documented shape") {
    std::string file = write_temp("dc4.txt", "0 1\n1 0\n1 2\n2 1\n2 3\n3 2\n3 0\n0 3\n");
    auto r = run_cli("fvector " + file);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("dim 3; f = 8 12 6") != std::string::npos);
}

TEST_CASE("cli is-face on the path") {
    std::string file = write_temp("path.txt", "0 1\n1 2\n");
    auto r = run_cli("is-face " + file + " --sub \"0 1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("face, dim 0") != std::string::npos);

    auto not_face = run_cli("is-face " + file + " --sub \"0 1, 1 2\"");
    CHECK(not_face.exit_code == 0);
    CHECK(not_face.out.find("not a face") == std::string::npos); // the whole simplex is improper but a face
}

TEST_CASE("cli verify matches and the fault hook trips it") {
    std::string file = write_temp("poly.txt", "0 1\n2 1\n2 3\n0 3\n");
    auto ok = run_cli("verify " + file);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("MATCH: 10 faces, dim 2") != std::string::npos);

    auto bad = run_cli("verify " + file + " --inject-fault");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("missing face") != std::string::npos);
}

TEST_CASE("cli surfaces domain errors as exit 1") {
    std::string file = write_temp("loop.txt", "0 1\n2 2\n");
    auto r = run_cli("dim " + file);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("LoopEdge") != std::string::npos);
    CHECK(r.out.find("line 2") != std::string::npos);

    auto missing = run_cli("dim /tmp/qface_definitely_missing_file");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("cli gen pipes into other commands") {
    auto gen = run_cli("gen double-cycle 4");
    CHECK(gen.exit_code == 0);
    std::string file = write_temp("gen.txt", gen.out);
    auto dim = run_cli("dim " + file);
    CHECK(dim.exit_code == 0);
    CHECK(dim.out.find("dim 3") != std::string::npos);

    auto closed = run_cli("gen double-cycle 6 --closed-form");
    CHECK(closed.out.find("12 60 120 90 20") != std::string::npos);

    auto bad = run_cli("gen mystery 3");
    CHECK(bad.exit_code == 1);

    auto seeded = run_cli("gen random 5 7 42");
    auto seeded2 = run_cli("gen random 5 7 42");
    CHECK(seeded.out == seeded2.out);
    CHECK(seeded.out.find("random 5 7 42") != std::string::npos);

    // JSON output of gen is itself a parseable quiver file
    auto jq = run_cli("--json gen random 4 5 9");
    CHECK(jq.exit_code == 0);
    std::string jfile = write_temp("gen.json", jq.out);
    auto jdim = run_cli("fvector " + jfile);
    CHECK(jdim.exit_code == 0);
}

TEST_CASE("cli json reports are stable under edge reordering") {
    std::string a = write_temp("order_a.txt", "0 1\n1 2\n2 0\n");
    std::string b = write_temp("order_b.txt", "2 0\n0 1\n1 2\n");
    auto ra = run_cli("--json facets " + a);
    auto rb = run_cli("--json facets " + b);
    REQUIRE(ra.exit_code == 0);
    auto ja = nlohmann::json::parse(ra.out);
    auto jb = nlohmann::json::parse(rb.out);
    CHECK(ja["input_digest"] == jb["input_digest"]);
    CHECK(ja["result"] == jb["result"]);
    CHECK(ja["version"] == "0.1.0");
    // the directed 3-cycle's polytope is a triangle: every 2-subset is a facet
    CHECK(ja["result"]["count"].get<int>() == 3);
}

TEST_CASE("cli rank and dim output") {
    std::string file = write_temp("rankpath.txt", "0 1\n1 2\n");
    auto r = run_cli("rank " + file);
    CHECK(r.out.find("rank function:") != std::string::npos);

    std::string sym = write_temp("sym.txt", "0 1\n1 0\n");
    auto absent = run_cli("rank " + sym);
    CHECK(absent.out.find("absent") != std::string::npos);

    std::string edgeless = write_temp("edgeless.json", R"({"vertices": ["a"], "edges": []})");
    auto dim = run_cli("dim " + edgeless);
    CHECK(dim.exit_code == 0);
    CHECK(dim.out.find("dim -1") != std::string::npos);
    CHECK(dim.out.find("empty polytope") != std::string::npos);
}

TEST_CASE("cli faces respects --max-dim while keeping the full count") {
    std::string file = write_temp("hex.txt", "0 1\n1 0\n1 2\n2 1\n2 0\n0 2\n");
    auto all = run_cli("--json faces " + file);
    auto trunc = run_cli("--json faces " + file + " --max-dim 0");
    auto ja = nlohmann::json::parse(all.out);
    auto jt = nlohmann::json::parse(trunc.out);
    CHECK(ja["result"]["total"] == jt["result"]["total"]);
    CHECK(ja["result"]["faces"].size() == 14);
    CHECK(jt["result"]["faces"].size() == 7); // empty face plus six vertices
}
