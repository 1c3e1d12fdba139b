#include "wlx/rational.hpp"

#include <limits>

#include "wlx/errors.hpp"

namespace wlx {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw ModelError("zero denominator");
    }
    // The two-argument cpp_rational constructor rejects negative denominators;
    // division normalizes the sign and reduces.
    return Rat(num) / Rat(den);
}

Int binomial(const Int& n, unsigned k) {
    if (n < 0) {
        throw ModelError("binomial requires n >= 0");
    }
    if (n < k) {
        return 0;
    }
    Int result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

std::string rat_to_string(const Rat& q) {
    if (denominator(q) == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

std::optional<std::int64_t> to_int64(const Int& n) {
    if (n < std::numeric_limits<std::int64_t>::min() ||
        n > std::numeric_limits<std::int64_t>::max()) {
        return std::nullopt;
    }
    return n.convert_to<std::int64_t>();
}

} // namespace wlx
