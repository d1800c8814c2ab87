#include "polebound/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <numbers>
#include <utility>

namespace polebound {

ExprPtr make_constant(Complex value) {
    return std::make_unique<Expr>(Expr{Expr::Constant{value}});
}
ExprPtr make_variable() {
    return std::make_unique<Expr>(Expr{Expr::Variable{}});
}
ExprPtr make_negate(ExprPtr operand) {
    return std::make_unique<Expr>(Expr{Expr::Negate{std::move(operand)}});
}
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    return std::make_unique<Expr>(Expr{Expr::Binary{op, std::move(lhs), std::move(rhs)}});
}
ExprPtr make_call(CallFn fn, ExprPtr arg) {
    return std::make_unique<Expr>(Expr{Expr::Call{fn, std::move(arg)}});
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        auto expr = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return expr;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool match(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr parse_expr() {
        auto lhs = parse_term();
        while (true) {
            if (match('+')) {
                lhs = make_binary(BinaryOp::add, std::move(lhs), parse_term());
            } else if (match('-')) {
                lhs = make_binary(BinaryOp::sub, std::move(lhs), parse_term());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        auto lhs = parse_factor();
        while (true) {
            if (match('*')) {
                lhs = make_binary(BinaryOp::mul, std::move(lhs), parse_factor());
            } else if (match('/')) {
                lhs = make_binary(BinaryOp::div, std::move(lhs), parse_factor());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_factor() {
        if (match('-')) return make_negate(parse_factor());
        return parse_power();
    }

    ExprPtr parse_power() {
        auto base = parse_atom();
        if (match('^')) return make_binary(BinaryOp::pow, std::move(base), parse_factor());
        return base;
    }

    ExprPtr parse_atom() {
        const char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            if (!match(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
        fail(std::string("unexpected character '") + c + "'");
    }

    ExprPtr parse_number() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        if (pos_ == start || (pos_ == start + 1 && text_[start] == '.'))
            fail("expected a number");
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            std::size_t exp_start = p;
            while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
            if (p > exp_start) pos_ = p;
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{} || ptr != text_.data() + pos_) fail("malformed number");
        return make_constant({value, 0.0});
    }

    ExprPtr parse_identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);

        if (name == "z") return make_variable();
        if (name == "i") return make_constant({0.0, 1.0});
        if (name == "pi") return make_constant({std::numbers::pi, 0.0});
        if (name == "e") return make_constant({std::numbers::e, 0.0});

        static constexpr std::array<std::pair<std::string_view, CallFn>, 6> functions{{
            {"exp", CallFn::exp},
            {"log", CallFn::log},
            {"sin", CallFn::sin},
            {"cos", CallFn::cos},
            {"tan", CallFn::tan},
            {"sqrt", CallFn::sqrt},
        }};
        for (const auto& [fn_name, fn] : functions) {
            if (name == fn_name) {
                if (!match('(')) fail("expected '(' after function name");
                auto arg = parse_expr();
                if (!match(')')) fail("expected ')'");
                return make_call(fn, std::move(arg));
            }
        }
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
    }
};

// Printer precedence levels; children below the required level get parens.
constexpr int prec_add = 1;
constexpr int prec_mul = 2;
constexpr int prec_neg = 3;
constexpr int prec_pow = 4;
constexpr int prec_atom = 5;

int precedence_of(const Expr& e) {
    return std::visit(
        [](const auto& node) -> int {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::Binary>) {
                switch (node.op) {
                    case BinaryOp::add:
                    case BinaryOp::sub: return prec_add;
                    case BinaryOp::mul:
                    case BinaryOp::div: return prec_mul;
                    case BinaryOp::pow: return prec_pow;
                }
                return prec_atom;
            } else if constexpr (std::is_same_v<T, Expr::Negate>) {
                return prec_neg;
            } else {
                return prec_atom;
            }
        },
        e.node);
}

std::string print_constant(Complex value) {
    if (value.imag() == 0.0 && value.real() >= 0.0 && !std::signbit(value.real()))
        return format_double(value.real());
    if (value == Complex{0.0, 1.0}) return "i";
    // General constants are printed in a parenthesized arithmetic spelling;
    // it re-parses to an equivalent (not necessarily identical) tree.
    std::string s = "(" + format_double(value.real());
    s += value.imag() < 0 ? "-" : "+";
    s += format_double(std::abs(value.imag()));
    s += "*i)";
    return s;
}

void print(const Expr& e, std::string& out);

void print_child(const Expr& child, int min_prec, std::string& out) {
    if (precedence_of(child) < min_prec) {
        out += '(';
        print(child, out);
        out += ')';
    } else {
        print(child, out);
    }
}

void print(const Expr& e, std::string& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::Constant>) {
                out += print_constant(node.value);
            } else if constexpr (std::is_same_v<T, Expr::Variable>) {
                out += 'z';
            } else if constexpr (std::is_same_v<T, Expr::Negate>) {
                out += '-';
                print_child(*node.operand, prec_neg, out);
            } else if constexpr (std::is_same_v<T, Expr::Call>) {
                switch (node.fn) {
                    case CallFn::exp: out += "exp"; break;
                    case CallFn::log: out += "log"; break;
                    case CallFn::sin: out += "sin"; break;
                    case CallFn::cos: out += "cos"; break;
                    case CallFn::tan: out += "tan"; break;
                    case CallFn::sqrt: out += "sqrt"; break;
                }
                out += '(';
                print(*node.arg, out);
                out += ')';
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                switch (node.op) {
                    case BinaryOp::add:
                        print_child(*node.lhs, prec_add, out);
                        out += '+';
                        print_child(*node.rhs, prec_add + 1, out);
                        break;
                    case BinaryOp::sub:
                        print_child(*node.lhs, prec_add, out);
                        out += '-';
                        print_child(*node.rhs, prec_add + 1, out);
                        break;
                    case BinaryOp::mul:
                        print_child(*node.lhs, prec_mul, out);
                        out += '*';
                        print_child(*node.rhs, prec_mul + 1, out);
                        break;
                    case BinaryOp::div:
                        print_child(*node.lhs, prec_mul, out);
                        out += '/';
                        print_child(*node.rhs, prec_mul + 1, out);
                        break;
                    case BinaryOp::pow:
                        print_child(*node.lhs, prec_atom, out);
                        out += '^';
                        print_child(*node.rhs, prec_neg, out);
                        break;
                }
            }
        },
        e.node);
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& expr) {
    std::string out;
    print(expr, out);
    return out;
}

Complex evaluate(const Expr& expr, Complex z) {
    return std::visit(
        [&](const auto& node) -> Complex {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::Constant>) {
                return is_finite(node.value) ? node.value : non_finite();
            } else if constexpr (std::is_same_v<T, Expr::Variable>) {
                return is_finite(z) ? z : non_finite();
            } else if constexpr (std::is_same_v<T, Expr::Negate>) {
                const Complex v = evaluate(*node.operand, z);
                if (!is_finite(v)) return non_finite();
                return -v;
            } else if constexpr (std::is_same_v<T, Expr::Call>) {
                const Complex v = evaluate(*node.arg, z);
                if (!is_finite(v)) return non_finite();
                Complex r;
                switch (node.fn) {
                    case CallFn::exp: r = std::exp(v); break;
                    case CallFn::log: r = std::log(v); break;
                    case CallFn::sin: r = std::sin(v); break;
                    case CallFn::cos: r = std::cos(v); break;
                    case CallFn::tan: r = std::tan(v); break;
                    case CallFn::sqrt: r = std::sqrt(v); break;
                }
                return is_finite(r) ? r : non_finite();
            } else {
                static_assert(std::is_same_v<T, Expr::Binary>);
                const Complex a = evaluate(*node.lhs, z);
                if (!is_finite(a)) return non_finite();
                const Complex b = evaluate(*node.rhs, z);
                if (!is_finite(b)) return non_finite();
                Complex r;
                switch (node.op) {
                    case BinaryOp::add: r = a + b; break;
                    case BinaryOp::sub: r = a - b; break;
                    case BinaryOp::mul: r = a * b; break;
                    case BinaryOp::div: r = a / b; break;
                    case BinaryOp::pow: r = std::pow(a, b); break;
                }
                return is_finite(r) ? r : non_finite();
            }
        },
        expr.node);
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Expr::Constant>) {
                return na.value.real() == nb.value.real() && na.value.imag() == nb.value.imag();
            } else if constexpr (std::is_same_v<T, Expr::Variable>) {
                return true;
            } else if constexpr (std::is_same_v<T, Expr::Negate>) {
                return structurally_equal(*na.operand, *nb.operand);
            } else if constexpr (std::is_same_v<T, Expr::Call>) {
                return na.fn == nb.fn && structurally_equal(*na.arg, *nb.arg);
            } else {
                static_assert(std::is_same_v<T, Expr::Binary>);
                return na.op == nb.op && structurally_equal(*na.lhs, *nb.lhs) &&
                       structurally_equal(*na.rhs, *nb.rhs);
            }
        },
        a.node);
}

ExprPtr clone(const Expr& expr) {
    return std::visit(
        [](const auto& node) -> ExprPtr {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::Constant>) {
                return make_constant(node.value);
            } else if constexpr (std::is_same_v<T, Expr::Variable>) {
                return make_variable();
            } else if constexpr (std::is_same_v<T, Expr::Negate>) {
                return make_negate(clone(*node.operand));
            } else if constexpr (std::is_same_v<T, Expr::Call>) {
                return make_call(node.fn, clone(*node.arg));
            } else {
                static_assert(std::is_same_v<T, Expr::Binary>);
                return make_binary(node.op, clone(*node.lhs), clone(*node.rhs));
            }
        },
        expr.node);
}

AnalyticFunction make_function(ExprPtr expr) {
    std::shared_ptr<const Expr> shared(std::move(expr));
    std::string name = to_string(*shared);
    return {name, [shared](Complex z) { return evaluate(*shared, z); }};
}

}  // namespace polebound
