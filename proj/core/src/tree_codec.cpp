#include <cctype>
#include <string>
#include <vector>

#include "hitkit/error.hpp"
#include "hitkit/simulations.hpp"
#include "text_util.hpp"

namespace hitkit {

namespace {

constexpr const char* kModule = "tree-codec";

struct Token {
    std::string_view text;
    std::size_t line;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    for (const auto& line : detail::content_lines(text)) {
        const std::string_view s = line.text;
        std::size_t i = 0;
        while (i < s.size()) {
            const char c = s[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (c == '(' || c == ')' || c == '[' || c == ']' || c == '^') {
                out.push_back({s.substr(i, 1), line.number});
                ++i;
            } else {
                std::size_t j = i;
                while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '(' && s[j] != ')' &&
                       s[j] != '[' && s[j] != ']')
                    ++j;
                out.push_back({s.substr(i, j - i), line.number});
                i = j;
            }
        }
    }
    return out;
}

template <class Tree>
class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Tree run() {
        if (tokens_.empty()) throw ParseError(kModule, 1, "empty tree");
        tree_.set_root(node());
        if (pos_ != tokens_.size()) fail("trailing input after tree");
        return std::move(tree_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        const std::size_t line = pos_ < tokens_.size() ? tokens_[pos_].line : tokens_.back().line;
        throw ParseError(kModule, line, msg);
    }

    const Token& next() {
        if (pos_ >= tokens_.size()) fail("unexpected end of input");
        return tokens_[pos_++];
    }

    void expect(std::string_view s) {
        if (next().text != s) {
            --pos_;
            fail("expected '" + std::string(s) + "', got '" + std::string(tokens_[pos_].text) + "'");
        }
    }

    long long integer() {
        const Token& t = next();
        auto v = detail::to_integer(t.text);
        if (!v) throw ParseError(kModule, t.line, "expected an integer, got '" + std::string(t.text) + "'");
        return *v;
    }

    Var variable() {
        const long long v = integer();
        if (v < 1 || v > 0xffffffffLL) fail("variable must be a positive integer");
        return static_cast<Var>(v);
    }

    NodeId node() {
        const Token& t = next();
        if (t.text == "[") {
            const long long c = integer();
            if (c < 1) fail("leaf label must be a positive clause index");
            expect("]");
            return tree_.add_leaf(static_cast<std::size_t>(c - 1));
        }
        if (t.text != "(") throw ParseError(kModule, t.line, "expected '(' or '[', got '" + std::string(t.text) + "'");

        typename Tree::Node proto;
        if (pos_ < tokens_.size() && tokens_[pos_].text == "^") {
            ++pos_;
            if constexpr (std::is_same_v<Tree, DecisionTree>) {
                fail("parity query in a plain decision tree");
            } else {
                const long long b = integer();
                if (b != 0 && b != 1) fail("parity constant must be 0 or 1");
                std::vector<Var> vars;
                while (pos_ < tokens_.size() && tokens_[pos_].text != "(" && tokens_[pos_].text != "[")
                    vars.push_back(variable());
                ParityQuery q(std::move(vars), b == 1);
                if (q.vars.empty()) fail("parity query reduces to a constant");
                proto.query = std::move(q);
            }
        } else {
            const Var v = variable();
            if constexpr (std::is_same_v<Tree, DecisionTree>) {
                proto.query = v;
            } else {
                proto.query = ParityQuery({v}, false);
            }
        }
        const NodeId c0 = node();
        const NodeId c1 = node();
        expect(")");
        return tree_.add_internal(std::move(proto.query), c0, c1);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Tree tree_;
};

void write_query(std::string& out, Var v) { out += std::to_string(v); }

void write_query(std::string& out, const ParityQuery& q) {
    out += "^ ";
    out += q.constant ? '1' : '0';
    for (Var v : q.vars) {
        out += ' ';
        out += std::to_string(v);
    }
}

template <class Tree>
std::string serialize_impl(const Tree& tree) {
    if (tree.empty()) throw Error(kModule, "cannot serialize an empty tree");
    std::string out;
    auto write = [&](auto&& self, NodeId id, std::size_t indent) -> void {
        const auto& n = tree.node(id);
        out.append(indent, ' ');
        if (n.leaf) {
            out += '[' + std::to_string(n.clause + 1) + "]\n";
            return;
        }
        out += '(';
        write_query(out, n.query);
        out += '\n';
        self(self, n.child0, indent + 1);
        self(self, n.child1, indent + 1);
        out.append(indent, ' ');
        out += ")\n";
    };
    write(write, tree.root(), 0);
    return out;
}

}  // namespace

DecisionTree parse_tree(std::string_view text) { return Parser<DecisionTree>(lex(text)).run(); }

ParityDecisionTree parse_parity_tree(std::string_view text) { return Parser<ParityDecisionTree>(lex(text)).run(); }

std::variant<DecisionTree, ParityDecisionTree> parse_any_tree(std::string_view text) {
    auto tokens = lex(text);
    for (const auto& t : tokens)
        if (t.text == "^") return Parser<ParityDecisionTree>(std::move(tokens)).run();
    return Parser<DecisionTree>(std::move(tokens)).run();
}

std::string serialize_tree(const DecisionTree& tree) { return serialize_impl(tree); }
std::string serialize_tree(const ParityDecisionTree& tree) { return serialize_impl(tree); }

}  // namespace hitkit
