#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wlx {

/// Input data violates a structural contract (bad schema, inconsistent model,
/// out-of-range argument).
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial expression. `position` is a 0-based byte offset into
/// the input text.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A computation consumed all known coefficients of a truncated series, so an
/// order (or a report built from orders) cannot be certified. Carries the
/// branch name when one is in play and a precision that would plausibly
/// succeed.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string& message, std::string branch = {},
                   std::size_t suggested_precision = 0)
        : std::runtime_error(message),
          branch_(std::move(branch)),
          suggested_precision_(suggested_precision) {}

    const std::string& branch() const { return branch_; }
    std::size_t suggested_precision() const { return suggested_precision_; }

private:
    std::string branch_;
    std::size_t suggested_precision_;
};

/// The branch data describes a point with odd n_P, which no Gorenstein
/// singularity can have.
class NonGorensteinError : public std::runtime_error {
public:
    explicit NonGorensteinError(long n_p)
        : std::runtime_error("non-Gorenstein model: n_P = " + std::to_string(n_p) +
                             " is odd, so n_P = 2*delta_P cannot hold"),
          n_p_(n_p) {}

    long n_p() const { return n_p_; }

private:
    long n_p_;
};

/// Column reduction ran out of pivots: the sections are linearly dependent,
/// or the working precision is too low to separate them.
class RankDeficiencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wlx
