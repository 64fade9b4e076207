#include "braidkit/parser.hpp"

#include <cctype>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "braidkit/maps.hpp"

namespace braidkit {

parse_error::parse_error(const std::string& what, std::size_t position)
    : std::runtime_error(what), position_(position) {}

struct ExprNode {
    enum class Kind { sigma, letter, full_twist, one, concat, power, commutator };

    Kind kind;
    int a = 0; // sigma index, letter i, or power exponent
    int b = 0; // letter j
    std::vector<std::shared_ptr<const ExprNode>> children;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_node(ExprNode::Kind kind, int a = 0, int b = 0,
                  std::vector<NodePtr> children = {}) {
    auto node = std::make_shared<ExprNode>();
    node->kind = kind;
    node->a = a;
    node->b = b;
    node->children = std::move(children);
    return node;
}

class Parser {
public:
    Parser(const std::string& text, int n) : text_(text), n_(n) {}

    NodePtr run() {
        NodePtr e = parse_expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& text_;
    int n_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << msg << " at position " << pos_;
        throw parse_error(os.str(), pos_);
    }

    void skip() {
        while (pos_ < text_.size() &&
               (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
            ++pos_;
    }

    bool peek_is(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int parse_nat() {
        skip();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("number too large");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    int parse_int() {
        skip();
        int sign = 1;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            if (text_[pos_] == '-') sign = -1;
            ++pos_;
        }
        return sign * parse_nat();
    }

    bool at_atom() {
        skip();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return c == 's' || c == 'A' || c == 'z' || c == '1' || c == '(' || c == '[';
    }

    NodePtr parse_expr() {
        std::vector<NodePtr> factors;
        while (at_atom()) factors.push_back(parse_factor());
        if (factors.empty()) fail("expected an expression");
        if (factors.size() == 1) return factors.front();
        return make_node(ExprNode::Kind::concat, 0, 0, std::move(factors));
    }

    NodePtr parse_factor() {
        NodePtr atom = parse_atom();
        if (peek_is('^')) {
            ++pos_;
            const int e = parse_int();
            return make_node(ExprNode::Kind::power, e, 0, {std::move(atom)});
        }
        return atom;
    }

    NodePtr parse_atom() {
        skip();
        if (pos_ >= text_.size()) fail("expected an expression");
        const char c = text_[pos_];
        if (c == 's') {
            ++pos_;
            const std::size_t at = pos_;
            const int k = parse_nat();
            if (k < 1 || k > n_ - 1) {
                pos_ = at;
                fail("crossing index out of range");
            }
            return make_node(ExprNode::Kind::sigma, k);
        }
        if (c == 'A') {
            ++pos_;
            expect('[');
            const std::size_t at = pos_;
            int i = parse_nat();
            expect(',');
            int j = parse_nat();
            expect(']');
            if (i > j) std::swap(i, j);
            if (i == j || j > n_) {
                pos_ = at;
                fail("pure letter indices out of range");
            }
            return make_node(ExprNode::Kind::letter, i, j);
        }
        if (c == 'z') {
            ++pos_;
            return make_node(ExprNode::Kind::full_twist);
        }
        if (c == '1') {
            ++pos_;
            return make_node(ExprNode::Kind::one);
        }
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++pos_;
            NodePtr x = parse_expr();
            expect(',');
            NodePtr y = parse_expr();
            expect(']');
            return make_node(ExprNode::Kind::commutator, 0, 0, {std::move(x), std::move(y)});
        }
        fail("unexpected character");
    }
};

BraidWord eval_node(const ExprNode* node, int n) {
    switch (node->kind) {
        case ExprNode::Kind::sigma:
            return BraidWord(n, {node->a});
        case ExprNode::Kind::letter:
            if (node->a == 0) return expand(a0(node->b, n));
            return expand_letter(node->a, node->b, n);
        case ExprNode::Kind::full_twist:
            return expand(full_twist(n));
        case ExprNode::Kind::one:
            return BraidWord::trivial(n);
        case ExprNode::Kind::concat: {
            BraidWord out = BraidWord::trivial(n);
            for (const NodePtr& ch : node->children) out = concat(out, eval_node(ch.get(), n));
            return out;
        }
        case ExprNode::Kind::power:
            return pow(eval_node(node->children.front().get(), n), node->a);
        case ExprNode::Kind::commutator:
            return commutator(eval_node(node->children[0].get(), n),
                              eval_node(node->children[1].get(), n));
    }
    throw std::logic_error("unreachable expression kind");
}

bool pure_alphabet(const ExprNode* node) {
    if (node->kind == ExprNode::Kind::sigma) return false;
    for (const NodePtr& ch : node->children)
        if (!pure_alphabet(ch.get())) return false;
    return true;
}

PureWord eval_pure_node(const ExprNode* node, int n) {
    switch (node->kind) {
        case ExprNode::Kind::sigma:
            throw std::logic_error("sigma atom in pure evaluation");
        case ExprNode::Kind::letter:
            return PureWord::single(n, node->a, node->b);
        case ExprNode::Kind::full_twist:
            return full_twist(n);
        case ExprNode::Kind::one:
            return PureWord::trivial(n);
        case ExprNode::Kind::concat: {
            PureWord out = PureWord::trivial(n);
            for (const NodePtr& ch : node->children) out.append(eval_pure_node(ch.get(), n));
            return out;
        }
        case ExprNode::Kind::power:
            return pow(eval_pure_node(node->children.front().get(), n), node->a);
        case ExprNode::Kind::commutator:
            return commutator_pure(eval_pure_node(node->children[0].get(), n),
                                   eval_pure_node(node->children[1].get(), n));
    }
    throw std::logic_error("unreachable expression kind");
}

} // namespace

Expression parse(const std::string& text, int n) {
    if (n < 2) throw std::invalid_argument("strand count must be at least 2");
    return Expression(Parser(text, n).run());
}

BraidWord eval(const Expression& e, int n) {
    if (e.root() == nullptr) return BraidWord::trivial(n);
    return eval_node(e.root(), n);
}

PureWord eval_pure(const Expression& e, int n, const OracleLimits& limits) {
    if (e.root() == nullptr) return PureWord::trivial(n);
    if (pure_alphabet(e.root())) return eval_pure_node(e.root(), n);
    return comb(eval(e, n), limits);
}

} // namespace braidkit
