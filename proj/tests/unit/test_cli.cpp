#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hitkit/codec.hpp"
#include "hitkit/generators.hpp"
#include "hitkit/parallel.hpp"
#include "hitkit/pit.hpp"
#include "hitkit/verifiers.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "hitkit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const unsigned saved = hitkit::worker_limit();
    const int code = hitkit::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    hitkit::set_worker_limit(saved);
    return {code, out.str(), err.str()};
}

struct TempDir {
    TempDir() {
        path = std::filesystem::temp_directory_path() / ("hitkit-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const std::string& text) const {
        const auto p = (path / name).string();
        std::ofstream(p) << text;
        return p;
    }
    std::string at(const std::string& name) const { return (path / name).string(); }
    std::filesystem::path path;
};

std::string slurp(const std::string& p) {
    std::ifstream f(p);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("generate complete and verify from one stdin") {
        const Run g = run({"generate", "complete", "4"});
        REQUIRE(g.code == 0);
        CHECK(hitkit::parse_cnf(g.out) == hitkit::complete_hitting(4));
        const Run v = run({"verify", "--system", "hitting", "--axioms", "-", "--cert", "-"}, g.out);
        CHECK(v.code == hitkit::cli::kAccept);
        CHECK(v.out.find("accepted: yes") != std::string::npos);
    }

    TEST_CASE("rejections exit 1 with a reason") {
        const Run v = run({"verify", "--system", "hitting", "--axioms", "-", "--cert", "-"}, "p cnf 2 2\n1 0\n2 0\n");
        CHECK(v.code == hitkit::cli::kReject);
        CHECK(v.err.find("not_hitting") != std::string::npos);
    }

    TEST_CASE("all verifier systems") {
        TempDir d;
        const auto t = d.file("t.cnf", hitkit::serialize_cnf(hitkit::tseitin(hitkit::Graph::triangle(), std::vector<std::uint8_t>{1, 0, 0})));
        CHECK(run({"verify", "--system", "odd", "--axioms", t, "--cert", t}).code == 0);
        CHECK(run({"verify", "--system", "hitting", "--axioms", t, "--cert", t}).code == 1);

        const auto pair = d.file("p.cnf", "p cnf 1 2\n1 0\n-1 0\n");
        const auto twice = d.file("u.cnf", "p cnf 1 4\n1 0\n-1 0\n1 0\n-1 0\n");
        CHECK(run({"verify", "--system", "hit-k", "--k", "2", "--axioms", pair, "--cert", twice}).code == 0);
        CHECK(run({"verify", "--system", "hit-k", "--k", "1", "--axioms", pair, "--cert", twice}).code == 1);
        CHECK(run({"verify", "--system", "hit-k", "--axioms", pair, "--cert", twice}).code == 2);
        CHECK(run({"verify", "--system", "hit-k", "--k", "5", "--axioms", pair, "--cert", twice}).code == 2);

        const auto proof = d.file("p.snsr", "p snsr 1 2\n1 : 1\n0\n2 : 1\n0\n");
        CHECK(run({"verify", "--system", "snsr", "--axioms", pair, "--cert", proof}).code == 0);
        CHECK(run({"verify", "--system", "snsr", "--field", "3", "--axioms", pair, "--cert", proof}).code == 0);
        CHECK(run({"verify", "--system", "snsr", "--field", "4", "--axioms", pair, "--cert", proof}).code == 2);

        const auto s = d.file("s.xcnf", hitkit::serialize_xcnf(hitkit::spread(3)));
        CHECK(run({"verify", "--system", "hitting-xor", "--axioms", s, "--cert", s}).code == 0);
        CHECK(run({"verify", "--system", "hitting-xor", "--semantic", "--axioms", s, "--cert", s}).code == 0);
        CHECK(run({"verify", "--system", "hitting-xor", "--axioms", pair, "--cert", pair}).code == 0);
    }

    TEST_CASE("convert round trip through trees") {
        TempDir d;
        const auto f = d.file("f.cnf", hitkit::serialize_cnf(hitkit::complete_hitting(4)));
        const Run c = run({"convert", "--from", "hitting", "--to", "tree", f, d.at("t.tree")});
        REQUIRE(c.code == 0);
        CHECK(c.out.find("leaves: 16") != std::string::npos);
        const Run o = run({"oracle", "--check-tree", d.at("t.tree"), f});
        CHECK(o.code == 0);
        CHECK(o.out.find("search: ok") != std::string::npos);
        const Run back = run({"convert", "--from", "tree", "--to", "hitting", "--axioms", f, d.at("t.tree"), "-"});
        REQUIRE(back.code == 0);
        CHECK(run({"verify", "--system", "hitting", "--axioms", f, "--cert", "-"}, back.out).code == 0);
        const Run x = run({"convert", "--from", "tree", "--to", "hitting-xor", "--axioms", f, d.at("t.tree"), "-"});
        REQUIRE(x.code == 0);
        CHECK(run({"verify", "--system", "hitting-xor", "--semantic", "--axioms", f, "--cert", "-"}, x.out).code == 0);
        CHECK(run({"convert", "--from", "tree", "--to", "hitting", d.at("t.tree"), "-"}).code == 2);
        CHECK(run({"convert", "--from", "ptree", "--to", "tree", d.at("t.tree"), "-"}).code == 2);
    }

    TEST_CASE("oracle check-tree reports counterexamples") {
        TempDir d;
        const auto f = d.file("f.cnf", "p cnf 1 2\n1 0\n-1 0\n");
        const auto bad = d.file("bad.tree", "(1 [2] [1])\n");
        const Run o = run({"oracle", "--check-tree", bad, f});
        CHECK(o.code == 1);
        CHECK(o.out.find("counterexample: 0") != std::string::npos);
        const auto ptree = d.file("p.tree", "(^ 0 1 [1] [2])\n");
        CHECK(run({"oracle", "--check-tree", ptree, f}).code == 0);
    }

    TEST_CASE("generators write parseable output") {
        TempDir d;
        CHECK(run({"generate", "spread", "3"}).out == hitkit::serialize_xcnf(hitkit::spread(3)));
        CHECK(run({"generate", "pm", "1", "3"}).out == hitkit::serialize_cnf(hitkit::perfect_matching(1, 3)));
        CHECK(run({"generate", "pm", "--xor", "1", "3"}).out == hitkit::serialize_xcnf(hitkit::perfect_matching_xor(1, 3)));
        CHECK(run({"generate", "tseitin", "--graph", "cycle:5", "--charges", "1,0,0,0,0"}).out ==
              hitkit::serialize_cnf(hitkit::tseitin(hitkit::Graph::cycle(5), std::vector<std::uint8_t>{1, 0, 0, 0, 0})));
        const auto g = d.file("g.graph", "p graph 2 1\n1 2\n");
        CHECK(run({"generate", "tseitin", "--graph", g, "--charges", "1,0"}).out == "p cnf 1 2\n1 0\n-1 0\n");
        CHECK(run({"generate", "tseitin", "--graph", "triangle", "--charges", "1,0"}).code == 2);

        const auto f = d.file("f.cnf", "p cnf 1 1\n1 0\n");
        CHECK(hitkit::parse_cnf(run({"generate", "xorify", f}).out).size() == 2);

        const Run r1 = run({"generate", "random-tree", "6", "20", "--seed", "5", "--tree", d.at("r.tree")});
        const Run r2 = run({"generate", "random-tree", "6", "20", "--seed", "5"});
        CHECK(r1.out == r2.out);
        CHECK(r1.out == hitkit::serialize_cnf(hitkit::random_tree_hitting(6, 20, 5).formula));
        CHECK(slurp(d.at("r.tree")) == hitkit::serialize_tree(hitkit::random_tree_hitting(6, 20, 5).tree));

        const auto a = d.file("a.cnf", "p cnf 1 2\n1 0\n-1 0\n");
        CHECK(run({"generate", "union", a, a}).out == "p cnf 1 4\n1 0\n-1 0\n1 0\n-1 0\n");
        CHECK(run({"generate", "union", a, f}).code == 2);

        CHECK(run({"generate", "-o", d.at("c.cnf"), "complete", "2"}).code == 0);
        CHECK(hitkit::parse_cnf(slurp(d.at("c.cnf"))) == hitkit::complete_hitting(2));
    }

    TEST_CASE("usage and input errors exit 2") {
        CHECK(run({}).code == 2);
        CHECK(run({"bogus"}).code == 2);
        CHECK(run({"verify", "--system", "hitting"}).code == 2);
        CHECK(run({"verify", "--system", "hitting", "--axioms", "/nonexistent/x", "--cert", "-"}).code == 2);
        CHECK(run({"verify", "--system", "hitting", "--axioms", "-", "--cert", "-"}, "p cnf 1 1\n1 -1 0\n").code == 2);
        CHECK(run({"generate", "complete", "21"}).code == 2);
        CHECK(run({"--jobs", "0", "selftest"}).code == 2);
        CHECK(run({"--help"}).code == 0);
    }

    TEST_CASE("profile output") {
        const Run p = run({"--jobs", "2", "oracle", "--profile", "-"}, hitkit::serialize_cnf(hitkit::complete_hitting(3)));
        CHECK(p.code == 0);
        CHECK(p.out.find("falsified.1: 8") != std::string::npos);
        CHECK(p.out.find("exactly_once: yes") != std::string::npos);
    }
}
