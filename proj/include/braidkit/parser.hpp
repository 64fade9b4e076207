#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/pure_braid.hpp"

namespace braidkit {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Expression grammar (whitespace and '*' between factors are ignored):
//   expr   := factor+
//   factor := atom ('^' int)?
//   atom   := 's' nat | 'A[' nat ',' nat ']' | 'z' | '1'
//           | '(' expr ')' | '[' expr ',' expr ']'
// '[x,y]' is the commutator x^-1 y^-1 x y; 'z' is the full twist;
// '1' is the trivial word; 'A[0,j]' is the zero-row letter.
struct ExprNode;

class Expression {
public:
    Expression() = default;
    explicit Expression(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}
    const ExprNode* root() const { return root_.get(); }

private:
    std::shared_ptr<const ExprNode> root_;
};

// Parses and validates generator indices against the strand count.
Expression parse(const std::string& text, int n);

BraidWord eval(const Expression& e, int n);

// Evaluates over the pure alphabet when the expression uses only
// A/z/1 atoms; otherwise evaluates to a sigma-word and combs it
// (requires a pure braid).
PureWord eval_pure(const Expression& e, int n, const OracleLimits& limits = {});

} // namespace braidkit
