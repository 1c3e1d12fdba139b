#include "wlx/series.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wlx/errors.hpp"

namespace wlx {

std::size_t Order::value() const {
    if (!known_) {
        throw std::logic_error("Order::value() on an undetermined order");
    }
    return n_;
}

std::size_t Order::precision() const {
    if (known_) {
        throw std::logic_error("Order::precision() on a known order");
    }
    return n_;
}

TruncatedSeries::TruncatedSeries(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
        throw ModelError("a truncated series needs precision >= 1");
    }
}

TruncatedSeries TruncatedSeries::zero(std::size_t precision) {
    return TruncatedSeries(std::vector<Rat>(precision));
}

TruncatedSeries TruncatedSeries::constant(const Rat& value, std::size_t precision) {
    std::vector<Rat> c(precision);
    if (precision > 0) {
        c[0] = value;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::monomial(const Rat& value, std::size_t degree,
                                          std::size_t precision) {
    std::vector<Rat> c(precision);
    if (degree < precision) {
        c[degree] = value;
    }
    return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

std::string TruncatedSeries::to_string(std::string_view variable) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        if (first) {
            if (negative) {
                out << "-";
            }
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const Rat a = negative ? Rat(-c) : c;
        if (i == 0) {
            out << rat_to_string(a);
        } else {
            if (a != 1) {
                out << rat_to_string(a) << "*";
            }
            out << variable;
            if (i > 1) {
                out << "^" << i;
            }
        }
    }
    if (first) {
        out << "0";
    }
    out << " + O(" << variable << "^" << coeffs_.size() << ")";
    return out.str();
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = a.coeff(i) + b.coeff(i);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = a.coeff(i) - b.coeff(i);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    std::vector<Rat> c(a.precision());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = -a.coeff(i);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeff(i) == 0) {
            continue; // skip zero rows; Wronskian matrices are mostly monomials
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coeff(j) != 0) {
                c[i + j] += a.coeff(i) * b.coeff(j);
            }
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const Rat& c, const TruncatedSeries& a) {
    std::vector<Rat> out(a.precision());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = c * a.coeff(i);
    }
    return TruncatedSeries(std::move(out));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs() == b.coeffs();
}

bool equal_mod_precision(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeff(i) != b.coeff(i)) {
            return false;
        }
    }
    return true;
}

TruncatedSeries derivative(const TruncatedSeries& a) {
    if (a.precision() == 1) {
        throw PrecisionError("derivative exhausted the series precision (known modulo t^1)");
    }
    std::vector<Rat> c(a.precision() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = Rat(Int(i + 1)) * a.coeff(i + 1);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t new_precision) {
    if (new_precision >= a.precision()) {
        return a;
    }
    if (new_precision == 0) {
        throw PrecisionError("cannot truncate a series to precision 0");
    }
    std::vector<Rat> c(a.coeffs().begin(), a.coeffs().begin() + static_cast<long>(new_precision));
    return TruncatedSeries(std::move(c));
}

Order series_order(const TruncatedSeries& a) {
    for (std::size_t i = 0; i < a.precision(); ++i) {
        if (a.coeff(i) != 0) {
            return Order::known(i);
        }
    }
    return Order::undetermined(a.precision());
}

TruncatedSeries series_det(const std::vector<std::vector<TruncatedSeries>>& m) {
    const std::size_t n = m.size();
    if (n == 0 || n > 9) {
        throw ModelError("series_det accepts square matrices of size 1..9");
    }
    std::size_t min_prec = m[0][0].precision();
    for (const auto& row : m) {
        if (row.size() != n) {
            throw ModelError("series_det requires a square matrix");
        }
        for (const auto& entry : row) {
            min_prec = std::min(min_prec, entry.precision());
        }
    }

    // dp[mask] = signed sum over all ways to place rows 0..popcount(mask)-1
    // into the column set `mask`; dp[full] is the determinant.
    std::vector<TruncatedSeries> dp;
    dp.reserve(std::size_t{1} << n);
    dp.push_back(TruncatedSeries::constant(1, min_prec));
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        TruncatedSeries acc = TruncatedSeries::zero(min_prec);
        std::size_t parity = row; // cofactor sign (-1)^{row + position of col in mask}
        for (std::size_t col = 0; col < n; ++col) {
            if (!(mask & (std::size_t{1} << col))) {
                continue;
            }
            const TruncatedSeries& entry = m[row][col];
            if (!entry.is_zero()) {
                TruncatedSeries term = dp[mask ^ (std::size_t{1} << col)] * entry;
                acc = (parity % 2 == 0) ? acc + term : acc - term;
            }
            ++parity;
        }
        dp.push_back(std::move(acc));
    }
    return dp.back();
}

namespace {

// Recursive-descent parser for the polynomial grammar. Whitespace-insensitive;
// positions in errors refer to the original text.
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    ParsedPolynomial parse() {
        skip_spaces();
        if (at_end()) {
            throw SyntaxError("empty polynomial expression", pos_);
        }
        bool negative = accept_sign();
        if (at_end()) {
            throw SyntaxError("expected a term", pos_);
        }
        parse_term(negative);
        skip_spaces();
        while (!at_end()) {
            const std::size_t sign_pos = pos_;
            if (!is_sign(peek())) {
                throw SyntaxError("expected '+' or '-'", sign_pos);
            }
            negative = accept_sign();
            skip_spaces();
            if (at_end()) {
                throw SyntaxError("expected a term after sign", pos_);
            }
            parse_term(negative);
            skip_spaces();
        }

        ParsedPolynomial result;
        result.variable = variable_;
        for (const auto& [exponent, coeff] : sums_) {
            if (coeff != 0) {
                result.terms.emplace_back(exponent, coeff);
            }
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    static bool is_sign(char c) { return c == '+' || c == '-'; }

    void skip_spaces() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    // Consumes a leading run of signs (at most one allowed).
    bool accept_sign() {
        skip_spaces();
        if (at_end() || !is_sign(peek())) {
            return false;
        }
        const bool negative = peek() == '-';
        ++pos_;
        skip_spaces();
        if (!at_end() && is_sign(peek())) {
            throw SyntaxError("repeated sign", pos_);
        }
        return negative;
    }

    Int parse_uinteger(const char* what) {
        skip_spaces();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (pos_ == start) {
            throw SyntaxError(std::string("expected ") + what, start);
        }
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    std::string parse_identifier() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    // term := coefficient ['*' varpow] | varpow
    void parse_term(bool negative) {
        skip_spaces();
        Rat coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const Int num = parse_uinteger("an integer");
            coeff = Rat(num);
            have_coeff = true;
            skip_spaces();
            if (!at_end() && peek() == '/') {
                ++pos_;
                const std::size_t den_pos = pos_;
                const Int den = parse_uinteger("a denominator");
                if (den == 0) {
                    throw SyntaxError("zero denominator", den_pos);
                }
                coeff = Rat(num) / Rat(den);
            }
            skip_spaces();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_spaces();
                add_term(negative ? Rat(-coeff) : coeff, parse_varpow());
                return;
            }
            add_term(negative ? Rat(-coeff) : coeff, 0);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            add_term(negative ? Rat(-1) : Rat(1), parse_varpow());
            return;
        }
        (void)have_coeff;
        throw SyntaxError("expected a coefficient or a variable", pos_);
    }

    // varpow := identifier ['^' uinteger]
    std::size_t parse_varpow() {
        skip_spaces();
        const std::size_t name_pos = pos_;
        if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
            throw SyntaxError("expected a variable", pos_);
        }
        const std::string name = parse_identifier();
        if (variable_.empty()) {
            variable_ = name;
        } else if (variable_ != name) {
            throw SyntaxError("inconsistent variable name '" + name + "' (expected '" +
                                  variable_ + "')",
                              name_pos);
        }
        skip_spaces();
        if (!at_end() && peek() == '^') {
            ++pos_;
            const Int exp = parse_uinteger("an exponent");
            if (exp > 100000) {
                throw SyntaxError("exponent too large", pos_);
            }
            return exp.convert_to<std::size_t>();
        }
        return 1;
    }

    void add_term(const Rat& coeff, std::size_t exponent) { sums_[exponent] += coeff; }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::string variable_;
    std::map<std::size_t, Rat> sums_;
};

} // namespace

ParsedPolynomial parse_polynomial(std::string_view text) {
    return PolyParser(text).parse();
}

ParsedSeries parse_series(std::string_view text, std::size_t precision) {
    if (precision == 0) {
        throw ModelError("series precision must be >= 1");
    }
    const ParsedPolynomial poly = parse_polynomial(text);
    std::vector<Rat> coeffs(precision);
    bool truncated = false;
    for (const auto& [exponent, coeff] : poly.terms) {
        if (exponent < precision) {
            coeffs[exponent] = coeff;
        } else {
            truncated = true;
        }
    }
    return ParsedSeries{TruncatedSeries(std::move(coeffs)), truncated, poly.variable};
}

ParsedSeries parse_series(std::string_view text, std::size_t precision,
                          std::string_view expected_variable) {
    ParsedSeries result = parse_series(text, precision);
    if (!result.variable.empty() && result.variable != expected_variable) {
        throw SyntaxError("expression uses variable '" + result.variable + "' where '" +
                              std::string(expected_variable) + "' was declared",
                          0);
    }
    return result;
}

} // namespace wlx
