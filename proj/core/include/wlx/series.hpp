#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wlx/rational.hpp"

namespace wlx {

/// Vanishing order of a truncated series: either a certified value (the least
/// exponent with a nonzero coefficient, all lower coefficients provably zero)
/// or Undetermined(N) when every coefficient below the precision N vanishes.
/// Undetermined is a value, not an error; callers decide what to do with it.
class Order {
public:
    static Order known(std::size_t k) { return Order(true, k); }
    static Order undetermined(std::size_t precision) { return Order(false, precision); }

    bool is_known() const { return known_; }

    /// The certified order. Call only when is_known().
    std::size_t value() const;

    /// The precision below which everything vanishes. Call only when !is_known().
    std::size_t precision() const;

    friend bool operator==(const Order&, const Order&) = default;

private:
    Order(bool known, std::size_t n) : known_(known), n_(n) {}
    bool known_;
    std::size_t n_;
};

/// An element of Q[[t]] known modulo t^N: exactly N coefficients, index i
/// holding the coefficient of t^i. N >= 1 always; arithmetic results carry
/// the minimum of the operand precisions.
class TruncatedSeries {
public:
    /// Precision = coefficients.size(), which must be >= 1.
    explicit TruncatedSeries(std::vector<Rat> coefficients);

    static TruncatedSeries zero(std::size_t precision);
    static TruncatedSeries constant(const Rat& value, std::size_t precision);
    /// value * t^degree; degrees at or above the precision truncate to zero.
    static TruncatedSeries monomial(const Rat& value, std::size_t degree, std::size_t precision);

    std::size_t precision() const { return coeffs_.size(); }
    const Rat& coeff(std::size_t i) const { return coeffs_[i]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// True when every known coefficient vanishes (zero modulo t^N).
    bool is_zero() const;

    std::string to_string(std::string_view variable = "t") const;

private:
    std::vector<Rat> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rat& c, const TruncatedSeries& a);

/// Strict equality: same precision and same coefficients.
bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

/// Equality through the common (minimum) precision.
bool equal_mod_precision(const TruncatedSeries& a, const TruncatedSeries& b);

/// Term-wise d/dt. Precision drops by one; throws PrecisionError when the
/// input is only known modulo t^1.
TruncatedSeries derivative(const TruncatedSeries& a);

/// Restriction to a lower precision (no-op when new_precision >= current).
TruncatedSeries truncate(const TruncatedSeries& a, std::size_t new_precision);

/// Least exponent with a nonzero coefficient, or Undetermined(precision) when
/// the series is zero modulo its precision. Never reports N itself as an order.
Order series_order(const TruncatedSeries& a);

/// Exact determinant of a square matrix of series (division-free expansion),
/// at most 9x9. Result precision is the minimum entry precision.
TruncatedSeries series_det(const std::vector<std::vector<TruncatedSeries>>& m);

/// A polynomial expression parsed exactly: nonzero terms with their exponents,
/// in ascending exponent order, plus the variable name seen in the text
/// (empty for constant expressions).
struct ParsedPolynomial {
    std::vector<std::pair<std::size_t, Rat>> terms;
    std::string variable;

    bool is_zero() const { return terms.empty(); }
    /// Largest exponent with nonzero coefficient; 0 for the zero polynomial.
    std::size_t degree() const { return terms.empty() ? 0 : terms.back().first; }
    /// Smallest exponent with nonzero coefficient; 0 for the zero polynomial.
    std::size_t order() const { return terms.empty() ? 0 : terms.front().first; }
};

/// Grammar: sum of terms `c`, `c*t^k`, `c*t`, `t^k`, `t` with `c` an integer
/// or `p/q`; the variable is any identifier, consistent across the expression;
/// whitespace ignored. Throws SyntaxError (position reported), including for
/// zero denominators.
ParsedPolynomial parse_polynomial(std::string_view text);

struct ParsedSeries {
    TruncatedSeries series;
    /// True when terms of degree >= precision were discarded.
    bool truncated;
    std::string variable;
};

/// Parses `text` and truncates at t^precision.
ParsedSeries parse_series(std::string_view text, std::size_t precision);

/// As above, but rejects expressions written in a different variable.
ParsedSeries parse_series(std::string_view text, std::size_t precision,
                          std::string_view expected_variable);

} // namespace wlx
