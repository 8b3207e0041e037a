#include "doctest.h"

#include "tanaka/catalog.hpp"
#include "tanaka/cli.hpp"
#include "tanaka/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tanaka;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "tanaka");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const fs::path dir = fs::temp_directory_path() / "tanaka_cli_test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("check") {
    const auto good = temp_file("heis.alg", "algebra h\nbasis X:-1 Y:-1 Z:-2\nbracket [X,Y] = Z\n");
    CHECK(call({"check", good}).code == 0);
    // [C,[A,B]] = E while the other two terms vanish
    const auto bad = temp_file("bad.alg", "basis A:-1 B:-1 C:-1 D:-2 E:-3\nbracket [A,B] = D\nbracket [C,D] = E\n");
    const auto r = call({"check", bad});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "jacobi: FAILED (A,B,C)"));
    const auto syntax = temp_file("syntax.alg", "basis X:-1\nbracket [X,Q] = X\n");
    const auto s = call({"check", syntax});
    CHECK(s.code == 1);
    CHECK(contains(s.err, "line 2"));
    CHECK(call({"check", "/nonexistent/file.alg"}).code == 2);
}

TEST_CASE("prolong and classify") {
    const auto f = temp_file("free.alg", serialize_algebra(catalog::free2step3()));
    const auto p = call({"prolong", f, "--max-degree", "5", "--json"});
    CHECK(p.code == 0);
    const auto rep = report_from_json(p.out);
    CHECK(rep.total_dim == std::size_t{21});
    CHECK(rep.layers == std::vector<std::size_t>{9, 3, 3, 0});
    // byte-identical JSON on repeated runs
    CHECK(call({"prolong", f, "--max-degree", "5", "--json"}).out == p.out);
    CHECK(call({"prolong", f}).code == 2);

    const auto g = temp_file("g4.alg", serialize_algebra(catalog::goursat(4)));
    const auto c = call({"classify", g, "--json"});
    CHECK(c.code == 0);
    CHECK(report_from_json(c.out).kind == "infinite");
    CHECK(report_from_json(c.out).witness == Vector{0, 1, 0, 0});
    CHECK(contains(call({"classify", g}).out, "witness:   Z1"));

    // irrational rank-one directions only, forcing the ideal test; a tiny cap aborts it
    const auto irr = temp_file("irr.alg", "basis A:-1 B:-1 C:-1 D:-1 P:-2 Q:-2\n"
                                          "bracket [A,C] = P\nbracket [B,D] = P\n"
                                          "bracket [A,D] = Q\nbracket [B,C] = 2 Q\n");
    CHECK(report_from_json(call({"classify", irr, "--json"}).out).kind == "infinite");
    CHECK(call({"classify", irr, "--degree-cap", "2", "--max-degree", "2"}).code == 3);

    const auto bad = temp_file("bad2.alg", "basis A:-1 B:-1 C:-1 D:-2 E:-3\nbracket [A,B] = D\nbracket [C,D] = E\n");
    CHECK(call({"classify", bad}).code == 1);
}

TEST_CASE("catalog, pencil, extend, cohomology") {
    const auto out = (fs::temp_directory_path() / "tanaka_cli_test" / "k5.alg").string();
    CHECK(call({"catalog", "kgen", "--param", "k=5", "-o", out}).code == 0);
    CHECK(parse_algebra(call({"catalog", "kgen", "--param", "k=5"}).out) == catalog::kgen(5));
    CHECK(call({"catalog", "nosuch"}).code == 2);
    CHECK(call({"catalog", "goursat", "--param", "n"}).code == 2);

    const auto pen = call({"pencil", "--blocks", "M:1,F:2,E:1:a=0"});
    CHECK(pen.code == 0);
    CHECK(parse_algebra(pen.out).layer_dims() == std::vector<std::size_t>{9, 2});
    CHECK(call({"pencil", "--blocks", "Q:1"}).code == 2);

    const auto heis = temp_file("h3.alg", serialize_algebra(catalog::heisenberg(3)));
    const auto coh = call({"cohomology", heis, "--s", "3"});
    CHECK(coh.code == 0);
    CHECK(contains(coh.out, "dim H^2_0:      1"));
    CHECK(contains(call({"cohomology", heis, "--s", "4", "--json"}).out, "\"dim\": 0"));

    const auto cocycle = temp_file("c.txt", "x X\ncocycle [Y,Z] = Y3\n");
    const auto e = call({"extend", heis, "--s", "3", "--cocycle", cocycle});
    CHECK(e.code == 0);
    CHECK(parse_algebra(e.out).layer_dims() == std::vector<std::size_t>{3, 2, 1});
    const auto e4 = call({"extend", heis, "--s", "4", "--cocycle", cocycle});
    CHECK(e4.code == 1);
    CHECK(contains(e4.err, "(X,Y,Z)"));
    CHECK(call({"extend", heis, "--s", "3"}).code == 2);
}

TEST_CASE("usage") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"--help"}).code == 0);
    CHECK(contains(call({"--version"}).out, version()));
}
