#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wlx/series.hpp"

namespace wlx {

/// A numerical semigroup <generators> with gcd 1, together with its standard
/// invariants. delta (= #gaps) is the local delta-invariant of the monomial
/// branch with this value semigroup; the conductor c is the least integer
/// with c + N contained in the semigroup.
struct NumericalSemigroup {
    std::vector<long> generators;                // sorted, deduplicated
    std::vector<long> elements_below_conductor;  // members of [0, c)
    std::vector<long> gaps;                      // non-members of [0, c)
    long delta = 0;
    long conductor = 0;
    long frobenius = -1;  // conductor - 1
    bool symmetric = false;
};

/// Dynamic-programming membership enumeration. Rejects empty input,
/// non-positive entries, and generator sets with gcd != 1 (infinitely many
/// gaps).
NumericalSemigroup semigroup_from_generators(std::vector<long> generators);

struct GorensteinReport {
    long n_p = 0;  // for a monomial branch, the conductor
    long delta = 0;
    bool symmetric = false;
    bool gorenstein = false;  // n_p == 2 * delta
};

/// Serre's criterion for the monomial branch: Gorenstein iff conductor = 2*delta,
/// which is also equivalent to symmetry of the semigroup.
GorensteinReport gorenstein_test_monomial(const NumericalSemigroup& s);

/// One analytic branch of a singular point. The derivative on the branch is
/// D(f) = multiplier * df/dt, where the multiplier's vanishing order equals
/// the order of a conductor generator on this branch (0 at a smooth branch,
/// where the multiplier is a unit).
struct BranchModel {
    std::string name;
    TruncatedSeries multiplier;
    std::size_t conductor_order = 0;
};

/// Computes conductor_order = order(multiplier); throws PrecisionError when
/// the multiplier is zero modulo its precision.
BranchModel make_branch(std::string name, TruncatedSeries multiplier);

/// A Gorenstein singular point presented by its branches: n_P is the sum of
/// the branch conductor orders and delta_P = n_P / 2.
struct SingularPointModel {
    std::vector<BranchModel> branches;
    long n_p = 0;
    long delta_p = 0;
};

/// Throws NonGorensteinError when n_P is odd, and ModelError when a
/// multibranch point lists a branch with conductor order 0 (a multibranch
/// point is singular on every branch).
SingularPointModel build_singular_point(std::vector<BranchModel> branches);

} // namespace wlx
