#include "gsqg/multipliers/symbol.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <system_error>

#include "gsqg/error.hpp"

namespace gsqg::multipliers {

struct Symbol::Node {
    Kind kind;
    double param = 0.0;
    Symbol a;
    Symbol b;
};

namespace {

constexpr double kE = std::numbers::e;
// Above this radius r*r overflows; logarithms switch to 2 ln r.
constexpr double kLargeRadius = 1e150;

struct Dual {
    double v;
    double d;
};

double checked(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw Error(Errc::Overflow, std::string("non-finite value in ") + what);
    }
    return v;
}

// ln(e + r^2) and its derivative.
Dual log_base(double r) {
    if (r > kLargeRadius) {
        return {2.0 * std::log(r) + std::log1p(kE / r / r), 2.0 / r};
    }
    const double r2 = r * r;
    return {std::log(kE + r2), 2.0 * r / (kE + r2)};
}

// ln(e + ln(1 + r^2)) and its derivative.
Dual iter_log_base(double r) {
    double g = 0.0;
    double dg = 0.0;
    if (r > kLargeRadius) {
        g = 2.0 * std::log(r);
        dg = 2.0 / r;
    } else {
        const double r2 = r * r;
        g = std::log1p(r2);
        dg = 2.0 * r / (1.0 + r2);
    }
    return {std::log(kE + g), dg / (kE + g)};
}

Dual power_of(Dual base, double mu) {
    if (mu == 0.0) return {1.0, 0.0};
    const double v = std::pow(base.v, mu);
    return {v, mu * std::pow(base.v, mu - 1.0) * base.d};
}

}  // namespace

Symbol::Symbol() : Symbol(identity()) {}

Symbol::Symbol(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Symbol::Symbol(Null) {}

Symbol Symbol::identity() {
    static const Symbol one(std::make_shared<const Node>(Node{Kind::Identity, 0.0, Symbol(Null{}), Symbol(Null{})}));
    return one;
}

Symbol Symbol::constant(double c) {
    if (!std::isfinite(c) || c < 0.0) {
        throw Error(Errc::InvalidArgument, "constant symbol requires finite c >= 0");
    }
    return Symbol(std::make_shared<const Node>(Node{Kind::Constant, c, Symbol(Null{}), Symbol(Null{})}));
}

Symbol Symbol::power_law(double alpha) {
    if (!std::isfinite(alpha)) throw Error(Errc::InvalidArgument, "power-law exponent must be finite");
    return Symbol(std::make_shared<const Node>(Node{Kind::PowerLaw, alpha, Symbol(Null{}), Symbol(Null{})}));
}

Symbol Symbol::log_power(double mu) {
    if (!std::isfinite(mu)) throw Error(Errc::InvalidArgument, "log-power exponent must be finite");
    return Symbol(std::make_shared<const Node>(Node{Kind::LogPower, mu, Symbol(Null{}), Symbol(Null{})}));
}

Symbol Symbol::iter_log_power(double mu) {
    if (!std::isfinite(mu)) throw Error(Errc::InvalidArgument, "iterated-log exponent must be finite");
    return Symbol(std::make_shared<const Node>(Node{Kind::IterLogPower, mu, Symbol(Null{}), Symbol(Null{})}));
}

Symbol Symbol::sum(Symbol a, Symbol b) {
    return Symbol(std::make_shared<const Node>(Node{Kind::Sum, 0.0, std::move(a), std::move(b)}));
}

Symbol Symbol::product(Symbol a, Symbol b) {
    return Symbol(std::make_shared<const Node>(Node{Kind::Product, 0.0, std::move(a), std::move(b)}));
}

Symbol Symbol::quotient(Symbol numerator, Symbol denominator) {
    return Symbol(std::make_shared<const Node>(
        Node{Kind::Quotient, 0.0, std::move(numerator), std::move(denominator)}));
}

Symbol Symbol::one_plus(Symbol a) {
    return Symbol(std::make_shared<const Node>(Node{Kind::OnePlus, 0.0, std::move(a), Symbol(Null{})}));
}

Symbol::Kind Symbol::kind() const noexcept { return node_->kind; }

double Symbol::parameter() const noexcept { return node_->param; }

const Symbol& Symbol::lhs() const {
    if (is_leaf()) throw Error(Errc::InvalidArgument, "leaf symbol has no children");
    return node_->a;
}

const Symbol& Symbol::rhs() const {
    if (is_leaf() || node_->kind == Kind::OnePlus) {
        throw Error(Errc::InvalidArgument, "symbol has no second child");
    }
    return node_->b;
}

bool Symbol::is_leaf() const noexcept {
    switch (node_->kind) {
        case Kind::Sum:
        case Kind::Product:
        case Kind::Quotient:
        case Kind::OnePlus:
            return false;
        default:
            return true;
    }
}

bool Symbol::singular_at_origin() const {
    try {
        (void)eval_symbol(*this, 0.0);
        return false;
    } catch (const Error& e) {
        if (e.code() == Errc::SingularAtOrigin || e.code() == Errc::Overflow) return true;
        throw;
    }
}

double Symbol::operator()(double r) const { return eval_symbol(*this, r); }

namespace {

Dual eval_dual(const Symbol& s, double r) {
    using K = Symbol::Kind;
    switch (s.kind()) {
        case K::Identity:
            return {1.0, 0.0};
        case K::Constant:
            return {s.parameter(), 0.0};
        case K::PowerLaw: {
            const double alpha = s.parameter();
            if (alpha == 0.0) return {1.0, 0.0};
            if (r == 0.0) {
                if (alpha < 0.0) throw Error(Errc::SingularAtOrigin, "pow(" + format_real(alpha) + ") at r=0");
                const double d = alpha == 1.0 ? 1.0 : (alpha > 1.0 ? 0.0 : INFINITY);
                return {0.0, d};
            }
            return {std::pow(r, alpha), alpha * std::pow(r, alpha - 1.0)};
        }
        case K::LogPower:
            return power_of(log_base(r), s.parameter());
        case K::IterLogPower:
            return power_of(iter_log_base(r), s.parameter());
        case K::Sum: {
            const Dual a = eval_dual(s.lhs(), r);
            const Dual b = eval_dual(s.rhs(), r);
            return {a.v + b.v, a.d + b.d};
        }
        case K::Product: {
            const Dual a = eval_dual(s.lhs(), r);
            const Dual b = eval_dual(s.rhs(), r);
            return {a.v * b.v, a.d * b.v + a.v * b.d};
        }
        case K::Quotient: {
            const Dual a = eval_dual(s.lhs(), r);
            const Dual b = eval_dual(s.rhs(), r);
            if (b.v == 0.0) {
                if (r == 0.0) throw Error(Errc::SingularAtOrigin, "zero denominator at r=0 in " + s.to_string());
                throw Error(Errc::Overflow, "zero denominator in " + s.to_string());
            }
            return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
        }
        case K::OnePlus: {
            const Dual a = eval_dual(s.lhs(), r);
            return {1.0 + a.v, a.d};
        }
    }
    throw Error(Errc::InvalidArgument, "unknown symbol kind");
}

}  // namespace

double eval_symbol(const Symbol& sym, double r) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw Error(Errc::InvalidArgument, "symbol evaluated at r=" + format_real(r));
    }
    return checked(eval_dual(sym, r).v, "symbol evaluation");
}

double eval_derivative(const Symbol& sym, double r, DerivativeRule rule) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw Error(Errc::InvalidArgument, "derivative requires finite r > 0");
    }
    if (rule == DerivativeRule::Analytic) {
        const Dual d = eval_dual(sym, r);
        checked(d.v, "symbol evaluation");
        return checked(d.d, "symbol derivative");
    }
    const double h = 1e-4 * (1.0 + r);
    if (r > h) {
        return checked((eval_symbol(sym, r + h) - eval_symbol(sym, r - h)) / (2.0 * h), "finite difference");
    }
    const double f0 = eval_symbol(sym, r);
    const double f1 = eval_symbol(sym, r + h);
    const double f2 = eval_symbol(sym, r + 2.0 * h);
    return checked((-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h), "finite difference");
}

Symbol operator+(const Symbol& a, const Symbol& b) { return Symbol::sum(a, b); }
Symbol operator*(const Symbol& a, const Symbol& b) { return Symbol::product(a, b); }
Symbol operator/(const Symbol& a, const Symbol& b) { return Symbol::quotient(a, b); }

bool operator==(const Symbol& a, const Symbol& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.parameter() != b.parameter()) return false;
    if (a.is_leaf()) return true;
    if (a.kind() == Symbol::Kind::OnePlus) return a.lhs() == b.lhs();
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

std::string format_real(double value) {
    if (value == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string Symbol::to_string() const {
    const std::string p = format_real(parameter());
    switch (kind()) {
        case Kind::Identity: return "identity";
        case Kind::Constant: return "const(" + p + ")";
        case Kind::PowerLaw: return "pow(" + p + ")";
        case Kind::LogPower: return "logpow(" + p + ")";
        case Kind::IterLogPower: return "iterlogpow(" + p + ")";
        case Kind::Sum: return "sum(" + lhs().to_string() + "," + rhs().to_string() + ")";
        case Kind::Product: return "prod(" + lhs().to_string() + "," + rhs().to_string() + ")";
        case Kind::Quotient: return "quot(" + lhs().to_string() + "," + rhs().to_string() + ")";
        case Kind::OnePlus: return "one_plus(" + lhs().to_string() + ")";
    }
    return "?";
}

namespace {

Symbol times(const Symbol& a, const Symbol& b) {
    if (a.kind() == Symbol::Kind::Identity) return b;
    if (b.kind() == Symbol::Kind::Identity) return a;
    return Symbol::product(a, b);
}

}  // namespace

QuotientParts decompose_quotient(const Symbol& sym) {
    using K = Symbol::Kind;
    switch (sym.kind()) {
        case K::PowerLaw:
            if (sym.parameter() < 0.0) return {Symbol::identity(), Symbol::power_law(-sym.parameter())};
            return {sym, Symbol::identity()};
        case K::LogPower:
            if (sym.parameter() < 0.0) return {Symbol::identity(), Symbol::log_power(-sym.parameter())};
            return {sym, Symbol::identity()};
        case K::IterLogPower:
            if (sym.parameter() < 0.0) return {Symbol::identity(), Symbol::iter_log_power(-sym.parameter())};
            return {sym, Symbol::identity()};
        case K::Product: {
            const QuotientParts a = decompose_quotient(sym.lhs());
            const QuotientParts b = decompose_quotient(sym.rhs());
            return {times(a.numerator, b.numerator), times(a.denominator, b.denominator)};
        }
        case K::Quotient: {
            const QuotientParts a = decompose_quotient(sym.lhs());
            const QuotientParts b = decompose_quotient(sym.rhs());
            return {times(a.numerator, b.denominator), times(a.denominator, b.numerator)};
        }
        default:
            return {sym, Symbol::identity()};
    }
}

// ---------------------------------------------------------------------------
// Expression parser: ident [ '(' arg { ',' arg } ')' ], arg = expr | real.

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, int line, int column_offset)
        : text_(text), line_(line), offset_(column_offset) {}

    Symbol parse_all() {
        Symbol s = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, offset_ + static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string_view ident() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) fail("expected symbol name");
        return text_.substr(start, pos_ - start);
    }

    double real() {
        skip_ws();
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        if (first != last && *first == '+') ++first;
        double v = 0.0;
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || !std::isfinite(v)) fail("expected real number");
        pos_ = static_cast<std::size_t>(res.ptr - text_.data());
        return v;
    }

    Symbol parse_expr() {
        const std::size_t at = pos_;
        const std::string_view name = ident();
        auto build = [&](auto&& fn) {
            try {
                return fn();
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                pos_ = at;
                fail(e.what());
            }
        };
        if (name == "identity") {
            if (accept('(')) expect(')');
            return Symbol::identity();
        }
        if (name == "const" || name == "pow" || name == "logpow" || name == "iterlogpow") {
            expect('(');
            const double v = real();
            expect(')');
            return build([&] {
                if (name == "const") return Symbol::constant(v);
                if (name == "pow") return Symbol::power_law(v);
                if (name == "logpow") return Symbol::log_power(v);
                return Symbol::iter_log_power(v);
            });
        }
        if (name == "sum" || name == "prod" || name == "quot") {
            expect('(');
            Symbol a = parse_expr();
            expect(',');
            Symbol b = parse_expr();
            expect(')');
            if (name == "sum") return Symbol::sum(a, b);
            if (name == "prod") return Symbol::product(a, b);
            return Symbol::quotient(a, b);
        }
        if (name == "one_plus") {
            expect('(');
            Symbol a = parse_expr();
            expect(')');
            return Symbol::one_plus(a);
        }
        pos_ = at;
        fail("unknown symbol '" + std::string(name) + "'");
    }

    std::string_view text_;
    int line_;
    int offset_;
    std::size_t pos_ = 0;
};

}  // namespace

Symbol parse_symbol(std::string_view text, int line, int column_offset) {
    return ExprParser(text, line, column_offset).parse_all();
}

Symbol Symbol::parse(std::string_view text) { return parse_symbol(text); }

}  // namespace gsqg::multipliers
