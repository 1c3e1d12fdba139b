#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wlx/localring.hpp"
#include "wlx/rational.hpp"
#include "wlx/series.hpp"

namespace wlx {

/// A linear system (L, V) localized at a singular point: sections[i][b] is the
/// restriction of the i-th basis section to branch b, written in the branch
/// coordinate. dim V = r + 1. Metadata d (degree of L) and g (arithmetic
/// genus) are optional and only used for global accounting.
struct LocalLinearSystem {
    std::vector<std::vector<TruncatedSeries>> sections;
    int r = 0;
    std::optional<long> degree;
    std::optional<long> genus;
};

/// Validates the system against the point: one series per branch for every
/// section, constant terms agreeing across branches (sections restrict single
/// local functions), and no section restricting to zero on a branch.
LocalLinearSystem make_local_system(const SingularPointModel& point,
                                    std::vector<std::vector<TruncatedSeries>> sections,
                                    std::optional<long> degree = std::nullopt,
                                    std::optional<long> genus = std::nullopt);

/// (D^0 f, D^1 f, ..., D^r f) with D^0 f = f and D f = multiplier * df/dt.
/// Throws PrecisionError (naming the branch) when the tower consumes all
/// known coefficients.
std::vector<TruncatedSeries> wl_derivative_tower(const TruncatedSeries& f,
                                                 const BranchModel& branch, int r);

/// Per-branch Wronskian: the (r+1)x(r+1) determinant with rows indexed by
/// derivative order 0..r and columns by the basis sections, evaluated on the
/// restrictions to each branch.
std::vector<TruncatedSeries> wl_wronskian(const SingularPointModel& point,
                                          const LocalLinearSystem& sys);

/// Orders of an adapted basis at one branch: a_0 < a_1 < ... < a_r, obtained
/// by column reduction with pivots at minimal row indices.
struct VanishingProfile {
    std::vector<std::size_t> vanishing_sequence;
    std::vector<std::size_t> gap_sequence;  // a_i + 1, ordered increasingly
    long weight = 0;                        // sum a_i - r(r+1)/2
};

/// Throws RankDeficiencyError when no pivot is available within the common
/// precision (dependent sections, or precision too low to tell).
VanishingProfile vanishing_sequence(const std::vector<TruncatedSeries>& sections);

/// Point weight and its Gorenstein decomposition.
struct WeightReport {
    std::vector<Order> per_branch_order;
    long total_weight = 0;
    long lower_bound = 0;  // delta_P * r * (r+1)
    long extraweight = 0;  // total - lower bound
};

/// Requires every branch order to be certified; an Undetermined branch order
/// raises PrecisionError with guidance, and a total below the Gorenstein
/// floor raises ModelError (inconsistent input model).
WeightReport point_weight(const SingularPointModel& point, const LocalLinearSystem& sys);

/// Total ramification weight (r+1)d + (g-1)r(r+1) of a g^r_d on a curve of
/// arithmetic genus g.
Int brill_segre(long r, long d, long g);

/// Weight r(r+2) of a cusp for a linear system of projective dimension r.
Int cusp_weight(long r);

/// Number of pairs (P, Q) with P a special ramification point of K(2Q) on a
/// general curve: 6g^4 + 14g^3 + 10g^2 - 14g - 16. Zero at g = 1.
Int sw_pair_count(long g);

} // namespace wlx
