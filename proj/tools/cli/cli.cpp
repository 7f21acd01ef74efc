#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hitkit/codec.hpp"
#include "hitkit/error.hpp"
#include "hitkit/generators.hpp"
#include "hitkit/oracle.hpp"
#include "hitkit/parallel.hpp"
#include "hitkit/pit.hpp"
#include "hitkit/simulations.hpp"
#include "hitkit/verifiers.hpp"
#include "selftest/acceptance.hpp"

namespace hitkit::cli {

namespace {

// I/O failure; reported with exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Files {
public:
    Files(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    // Every `-` slot sees the same stdin text.
    const std::string& read(const std::string& path) {
        if (path == "-") {
            if (!stdin_) {
                std::ostringstream ss;
                ss << in_.rdbuf();
                stdin_ = ss.str();
            }
            return *stdin_;
        }
        auto it = cache_.find(path);
        if (it != cache_.end()) return it->second;
        std::ifstream f(path, std::ios::binary);
        if (!f) throw IoError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        return cache_.emplace(path, ss.str()).first->second;
    }

    void write(const std::string& path, const std::string& text) {
        if (path == "-") {
            out_ << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << text)) throw IoError("cannot write '" + path + "'");
    }

private:
    std::istream& in_;
    std::ostream& out_;
    std::optional<std::string> stdin_;
    std::map<std::string, std::string> cache_;
};

// Kind of the first `p <kind> ...` line, or empty.
std::string header_kind(std::string_view text) {
    std::istringstream ss{std::string(text)};
    std::string line;
    while (std::getline(ss, line)) {
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        if (a == "c") continue;
        if (a == "p" && (ls >> b)) return b;
        return {};
    }
    return {};
}

Xcnf read_xcnf_or_cnf(std::string_view text) {
    if (header_kind(text) == "cnf") return Xcnf::from_cnf(parse_cnf(text));
    return parse_xcnf(text);
}

std::vector<std::uint8_t> parse_charges(const std::string& spec) {
    std::vector<std::uint8_t> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "0" || item == "1")
            out.push_back(static_cast<std::uint8_t>(item[0] - '0'));
        else
            throw Error("cli", "charges must be a comma-separated list of 0/1, got '" + item + "'");
    }
    return out;
}

std::string profile_report(const CoverageProfile& p) {
    std::ostringstream out;
    out << "num_vars: " << p.num_vars << '\n';
    out << "assignments: " << (std::uint64_t{1} << p.num_vars) << '\n';
    for (const auto& [k, count] : p.histogram) out << "falsified." << k << ": " << count << '\n';
    out << "min: " << p.min_count << '\n';
    out << "min_witness: " << p.min_witness << '\n';
    out << "max: " << p.max_count << '\n';
    out << "max_witness: " << p.max_witness << '\n';
    out << "exactly_once: " << (p.exactly_once() ? "yes" : "no") << '\n';
    out << "all_odd: " << (p.all_odd() ? "yes" : "no") << '\n';
    out << "total_cover: " << (p.total_cover() ? "yes" : "no") << '\n';
    return out.str();
}

struct Options {
    unsigned jobs = 1;

    std::string system, axioms, cert;
    unsigned k = 0;
    bool semantic = false;
    std::uint32_t field = 2;

    std::string from, to, input, output, convert_axioms;

    std::string out_path = "-";
    Var complete_n = 0;
    std::string graph, charges;
    Var pm_a = 0, pm_b = 0;
    bool pm_xor = false;
    std::string xorify_in;
    unsigned spread_t = 0;
    Var rt_n = 0;
    std::size_t rt_leaves = 0;
    std::optional<std::uint64_t> rt_seed;
    std::string rt_tree_out;
    std::vector<std::string> union_in;

    std::string profile;
    std::vector<std::string> check_tree;
};

int emit_verdict(const Verdict& v, std::ostream& out, std::ostream& err) {
    out << v.report();
    if (!v.accepted) {
        err << "rejected (" << to_string(v.reason) << "): " << v.message << '\n';
        return kReject;
    }
    return kAccept;
}

int do_verify(const Options& o, Files& files, std::ostream& out, std::ostream& err) {
    const std::string& axioms = files.read(o.axioms);
    const std::string& cert = files.read(o.cert);
    if (o.system == "hitting") return emit_verdict(verify_hitting(parse_cnf(axioms), parse_hitting_certificate(cert)), out, err);
    if (o.system == "odd")
        return emit_verdict(verify_odd_hitting(parse_cnf(axioms), parse_hitting_certificate(cert)), out, err);
    if (o.system == "hit-k") {
        if (o.k == 0) throw CLI::RequiredError("--k");
        return emit_verdict(verify_hitting_k(parse_cnf(axioms), parse_hitting_certificate(cert), o.k), out, err);
    }
    if (o.system == "hitting-xor") {
        XcnfCertificate c = header_kind(cert) == "cnf" ? XcnfCertificate{Xcnf::from_cnf(parse_cnf(cert)), std::nullopt, {}}
                                                       : parse_xcnf_certificate(cert);
        c.mode = o.semantic ? StrengtheningMode::semantic : StrengtheningMode::syntactic;
        return emit_verdict(verify_hitting_xor(read_xcnf_or_cnf(axioms), c), out, err);
    }
    // snsr
    const Field field = o.field == 2 ? Field::gf2() : Field::prime(o.field);
    return emit_verdict(verify_succinct_nsr(parse_cnf(axioms), parse_snsr(cert), field), out, err);
}

int do_convert(const Options& o, Files& files, std::ostream& out) {
    const std::string& in = files.read(o.input);
    auto need_axioms = [&]() -> const std::string& {
        if (o.convert_axioms.empty()) throw CLI::ValidationError("--axioms", "required for --from " + o.from);
        return files.read(o.convert_axioms);
    };
    std::string result;
    if (o.from == "hitting" && o.to == "tree") {
        const Cnf h = header_kind(in) == "hitcert" ? parse_hitting_certificate(in).hitting : parse_cnf(in);
        TreeBuildStats stats;
        const DecisionTree tree = hitting_to_tree(h, &stats);
        result = serialize_tree(tree);
        if (o.output != "-") out << "leaves: " << tree.leaf_count() << "\ndepth: " << tree.depth() << '\n';
    } else if (o.from == "tree" && o.to == "hitting") {
        result = serialize_certificate(tree_to_hitting(parse_tree(in), parse_cnf(need_axioms())));
    } else if ((o.from == "ptree" || o.from == "tree") && o.to == "hitting-xor") {
        const auto parsed = parse_any_tree(in);
        const ParityDecisionTree tree = std::holds_alternative<ParityDecisionTree>(parsed)
                                            ? std::get<ParityDecisionTree>(parsed)
                                            : as_parity_tree(std::get<DecisionTree>(parsed));
        result = serialize_certificate(parity_tree_to_hitting_xor(tree, read_xcnf_or_cnf(need_axioms())));
    } else {
        throw CLI::ValidationError("convert", "unsupported conversion " + o.from + " -> " + o.to);
    }
    files.write(o.output, result);
    return kAccept;
}

int do_oracle(const Options& o, Files& files, std::ostream& out) {
    if (!o.profile.empty()) {
        const std::string& text = files.read(o.profile);
        const std::string kind = header_kind(text);
        if (kind == "xcnf")
            out << profile_report(coverage_profile(parse_xcnf(text)));
        else if (kind == "hitcert")
            out << profile_report(coverage_profile(parse_hitting_certificate(text).hitting));
        else
            out << profile_report(coverage_profile(parse_cnf(text)));
        return kAccept;
    }
    if (o.check_tree.size() != 2) throw CLI::ValidationError("oracle", "give --profile FILE or --check-tree TREE FORMULA");
    const auto tree = parse_any_tree(files.read(o.check_tree[0]));
    const std::string& text = files.read(o.check_tree[1]);
    std::optional<std::uint64_t> bad;
    std::size_t leaves = 0, depth = 0;
    Var n = 0;
    if (const auto* t = std::get_if<DecisionTree>(&tree); t && header_kind(text) != "xcnf") {
        const Cnf f = parse_cnf(text);
        bad = tree_search_counterexample(*t, f);
        leaves = t->leaf_count();
        depth = t->depth();
        n = f.num_vars();
    } else {
        const ParityDecisionTree pt =
            t ? as_parity_tree(*t) : std::get<ParityDecisionTree>(tree);
        const Xcnf f = read_xcnf_or_cnf(text);
        bad = tree_search_counterexample(pt, f);
        leaves = pt.leaf_count();
        depth = pt.depth();
        n = f.num_vars();
    }
    out << "leaves: " << leaves << "\ndepth: " << depth << '\n';
    out << "log2_leaf_bound: " << log2_leaf_bound(n, leaves) << '\n';
    out << "search: " << (bad ? "fail" : "ok") << '\n';
    if (bad) out << "counterexample: " << *bad << '\n';
    return bad ? kReject : kAccept;
}

int do_selftest(std::ostream& out) {
    const auto results = selftest::run_suite(default_seed(), [&](const selftest::CriterionResult& r) {
        out << selftest::format_result(r) << '\n' << std::flush;
    });
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    out << (ok ? "selftest: all criteria passed" : "selftest: FAILED") << '\n';
    return ok ? kAccept : kReject;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verification and conversion toolkit for hitting-formula proof systems"};
    app.name("hitkit");
    app.require_subcommand(1);
    Options o;
    app.add_option("--jobs", o.jobs, "Worker threads for verifiers and the oracle")->check(CLI::Range(1u, 256u));

    auto* verify = app.add_subcommand("verify", "Check a certificate against an axiom file");
    verify->add_option("--system", o.system, "Proof system")
        ->required()
        ->check(CLI::IsMember({"hitting", "hitting-xor", "odd", "hit-k", "snsr"}));
    verify->add_option("--axioms", o.axioms, "Axiom formula (cnf, or xcnf for hitting-xor)")->required();
    verify->add_option("--cert", o.cert, "Certificate file")->required();
    verify->add_option("--k", o.k, "Falsification bound for hit-k (1..4)")->check(CLI::Range(1u, kMaxHittingK));
    verify->add_flag("--semantic", o.semantic, "Strengthening modulo linear span (hitting-xor)");
    verify->add_option("--field", o.field, "Field characteristic for snsr (2 or an odd prime)");

    auto* convert = app.add_subcommand("convert", "Convert between certificates and decision trees");
    convert->add_option("--from", o.from)->required()->check(CLI::IsMember({"hitting", "tree", "ptree"}));
    convert->add_option("--to", o.to)->required()->check(CLI::IsMember({"tree", "hitting", "hitting-xor"}));
    convert->add_option("--axioms", o.convert_axioms, "Axiom formula for tree inputs");
    convert->add_option("in", o.input)->required();
    convert->add_option("out", o.output)->required();

    auto* generate = app.add_subcommand("generate", "Write a generated formula to stdout");
    generate->require_subcommand(1);
    generate->add_option("-o,--output", o.out_path, "Output file");
    auto* g_complete = generate->add_subcommand("complete", "All 2^n full clauses");
    g_complete->add_option("n", o.complete_n)->required()->check(CLI::Range(1u, 20u));
    auto* g_tseitin = generate->add_subcommand("tseitin", "Tseitin formula of a graph");
    g_tseitin->add_option("--graph", o.graph, "Graph file, or triangle/petersen/cycle:N/complete:N")->required();
    g_tseitin->add_option("--charges", o.charges, "Comma-separated vertex charges")->required();
    auto* g_pm = generate->add_subcommand("pm", "Perfect matching formula of K_{a,b}");
    g_pm->add_option("a", o.pm_a)->required()->check(CLI::PositiveNumber);
    g_pm->add_option("b", o.pm_b)->required()->check(CLI::PositiveNumber);
    g_pm->add_flag("--xor", o.pm_xor, "Lift each edge variable to x ⊕ y");
    auto* g_xorify = generate->add_subcommand("xorify", "Replace each variable by the XOR of two");
    g_xorify->add_option("file", o.xorify_in)->required();
    auto* g_spread = generate->add_subcommand("spread", "Hitting(⊕) formula of the Desarguesian spread");
    g_spread->add_option("t", o.spread_t)->required()->check(CLI::Range(2u, 16u));
    auto* g_random = generate->add_subcommand("random-tree", "Hitting formula of a random decision tree");
    g_random->add_option("n", o.rt_n)->required()->check(CLI::Range(0u, 24u));
    g_random->add_option("max_leaves", o.rt_leaves)->required()->check(CLI::Range(1, 4096));
    g_random->add_option("--seed", o.rt_seed, "Seed (default HITKIT_SEED or built-in)");
    g_random->add_option("--tree", o.rt_tree_out, "Also write the tree here");
    auto* g_union = generate->add_subcommand("union", "Concatenate unsatisfiable hitting formulas");
    g_union->add_option("files", o.union_in)->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force checks (n <= 24)");
    auto* profile_opt = oracle->add_option("--profile", o.profile, "Print the coverage histogram of a formula");
    oracle->add_option("--check-tree", o.check_tree, "TREE FORMULA: check the falsified-clause search")
        ->expected(2)
        ->excludes(profile_opt);

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsage;
    }

    set_worker_limit(o.jobs);
    Files files(in, out);
    try {
        if (*verify) return do_verify(o, files, out, err);
        if (*convert) return do_convert(o, files, out);
        if (*oracle) return do_oracle(o, files, out);
        if (*selftest_cmd) return do_selftest(out);

        std::string text;
        if (*g_complete) {
            text = serialize_cnf(complete_hitting(o.complete_n));
        } else if (*g_tseitin) {
            const Graph g = std::filesystem::exists(o.graph) ? parse_graph(files.read(o.graph)) : named_graph(o.graph);
            text = serialize_cnf(tseitin(g, parse_charges(o.charges)));
        } else if (*g_pm) {
            text = o.pm_xor ? serialize_xcnf(perfect_matching_xor(o.pm_a, o.pm_b)) : serialize_cnf(perfect_matching(o.pm_a, o.pm_b));
        } else if (*g_xorify) {
            text = serialize_cnf(xorify(parse_cnf(files.read(o.xorify_in))));
        } else if (*g_spread) {
            text = serialize_xcnf(spread(o.spread_t));
        } else if (*g_random) {
            const auto r = random_tree_hitting(o.rt_n, o.rt_leaves, o.rt_seed.value_or(default_seed()));
            if (!o.rt_tree_out.empty()) files.write(o.rt_tree_out, serialize_tree(r.tree));
            text = serialize_cnf(r.formula);
        } else if (*g_union) {
            std::vector<Cnf> parts;
            for (const auto& f : o.union_in) parts.push_back(parse_cnf(files.read(f)));
            text = serialize_cnf(union_hitting(parts));
        }
        files.write(o.out_path, text);
        return kAccept;
    } catch (const CLI::Error& e) {
        err << "hitkit: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "hitkit: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "hitkit: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace hitkit::cli
