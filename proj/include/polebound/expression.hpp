#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "polebound/complex.hpp"
#include "polebound/function.hpp"

namespace polebound {

enum class BinaryOp { add, sub, mul, div, pow };
enum class CallFn { exp, log, sin, cos, tan, sqrt };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

/// Expression tree over one complex variable z.
///
/// Grammar accepted by parse_expression (UTF-8/ASCII):
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := '-' factor | power
///   power   := atom ('^' factor)?            // right-associative
///   atom    := number | 'z' | 'i' | 'pi' | 'e'
///            | fn '(' expr ')' | '(' expr ')'
///   fn      := exp | log | sin | cos | tan | sqrt
///   number  := real literal with optional '.' and exponent
struct Expr {
    struct Constant {
        Complex value;
    };
    struct Variable {};
    struct Negate {
        ExprPtr operand;
    };
    struct Binary {
        BinaryOp op;
        ExprPtr lhs;
        ExprPtr rhs;
    };
    struct Call {
        CallFn fn;
        ExprPtr arg;
    };

    std::variant<Constant, Variable, Negate, Binary, Call> node;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

ExprPtr parse_expression(std::string_view text);

/// Parseable text form. For trees in the parser's image, parsing the output
/// yields a structurally identical tree.
std::string to_string(const Expr& expr);

/// Standard complex arithmetic, principal branches for log/sqrt/pow.
/// Returns non_finite() as soon as any intermediate is non-finite.
Complex evaluate(const Expr& expr, Complex z);

bool structurally_equal(const Expr& a, const Expr& b);

ExprPtr clone(const Expr& expr);

ExprPtr make_constant(Complex value);
ExprPtr make_variable();
ExprPtr make_negate(ExprPtr operand);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_call(CallFn fn, ExprPtr arg);

/// Wraps a parsed tree as an AnalyticFunction named after its text form.
AnalyticFunction make_function(ExprPtr expr);

}  // namespace polebound
