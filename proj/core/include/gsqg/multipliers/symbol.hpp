#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace gsqg::multipliers {

/// Radial Fourier symbol r -> value, built as an immutable expression tree.
///
/// Leaves are the closed-form families below; interior nodes combine
/// subtrees. Copies share structure and are cheap.
class Symbol {
public:
    enum class Kind {
        Identity,      ///< 1
        Constant,      ///< c >= 0
        PowerLaw,      ///< r^alpha
        LogPower,      ///< ln(e + r^2)^mu
        IterLogPower,  ///< ln(e + ln(1 + r^2))^mu
        Sum,
        Product,
        Quotient,
        OnePlus,       ///< 1 + subtree
    };

    /// Defaults to Identity.
    Symbol();

    static Symbol identity();
    static Symbol constant(double c);
    static Symbol power_law(double alpha);
    static Symbol log_power(double mu);
    static Symbol iter_log_power(double mu);
    static Symbol sum(Symbol a, Symbol b);
    static Symbol product(Symbol a, Symbol b);
    static Symbol quotient(Symbol numerator, Symbol denominator);
    static Symbol one_plus(Symbol a);

    /// Parses the textual form produced by to_string(), e.g. "quot(logpow(0),logpow(1))".
    static Symbol parse(std::string_view text);

    [[nodiscard]] Kind kind() const noexcept;
    /// Family parameter (c, alpha or mu); 0 for interior nodes.
    [[nodiscard]] double parameter() const noexcept;
    /// First child of Sum/Product/Quotient/OnePlus.
    [[nodiscard]] const Symbol& lhs() const;
    /// Second child of Sum/Product/Quotient.
    [[nodiscard]] const Symbol& rhs() const;

    [[nodiscard]] bool is_leaf() const noexcept;
    /// True when evaluation at r = 0 is undefined.
    [[nodiscard]] bool singular_at_origin() const;

    [[nodiscard]] double operator()(double r) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Symbol& a, const Symbol& b);

private:
    struct Node;
    struct Null {};
    explicit Symbol(std::shared_ptr<const Node> node);
    explicit Symbol(Null);
    std::shared_ptr<const Node> node_;
};

Symbol operator+(const Symbol& a, const Symbol& b);
Symbol operator*(const Symbol& a, const Symbol& b);
Symbol operator/(const Symbol& a, const Symbol& b);

enum class DerivativeRule { Analytic, CentralDifference };

/// Exact value of the expression tree at r >= 0.
/// Throws SingularAtOrigin or Overflow.
double eval_symbol(const Symbol& sym, double r);

/// d/dr of the symbol at r > 0. CentralDifference uses h = 1e-4 (1 + r),
/// switching to a second-order one-sided stencil when r < h.
double eval_derivative(const Symbol& sym, double r, DerivativeRule rule = DerivativeRule::Analytic);

/// Splits a symbol into nonnegative numerator and denominator factors so that
/// sym = numerator / denominator. Negative-exponent leaves move to the denominator.
struct QuotientParts {
    Symbol numerator;
    Symbol denominator;
};
QuotientParts decompose_quotient(const Symbol& sym);

/// Parser entry used by the config reader; reported columns are offset by
/// column_offset so errors point into the enclosing file.
Symbol parse_symbol(std::string_view text, int line = 1, int column_offset = 0);

/// Formats a double with the shortest representation that round-trips.
std::string format_real(double value);

}  // namespace gsqg::multipliers
