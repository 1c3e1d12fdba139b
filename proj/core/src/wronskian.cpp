#include "wlx/wronskian.hpp"

#include <algorithm>
#include <string>

#include "wlx/errors.hpp"

namespace wlx {

LocalLinearSystem make_local_system(const SingularPointModel& point,
                                    std::vector<std::vector<TruncatedSeries>> sections,
                                    std::optional<long> degree, std::optional<long> genus) {
    if (sections.empty()) {
        throw ModelError("a linear system needs at least one section");
    }
    if (sections.size() > 9) {
        throw ModelError("linear systems are capped at r = 8 (9 sections)");
    }
    const std::size_t branches = point.branches.size();
    for (std::size_t i = 0; i < sections.size(); ++i) {
        if (sections[i].size() != branches) {
            throw ModelError("section " + std::to_string(i) + " has " +
                             std::to_string(sections[i].size()) + " branch restrictions, expected " +
                             std::to_string(branches));
        }
        for (std::size_t b = 0; b < branches; ++b) {
            if (sections[i][b].coeff(0) != sections[i][0].coeff(0)) {
                throw ModelError("section " + std::to_string(i) +
                                 ": constant term differs between branch '" +
                                 point.branches[0].name + "' and branch '" +
                                 point.branches[b].name +
                                 "'; restrictions of one local function must agree at the point");
            }
            if (sections[i][b].is_zero()) {
                throw ModelError("section " + std::to_string(i) + " restricts to zero on branch '" +
                                 point.branches[b].name + "' (through t^" +
                                 std::to_string(sections[i][b].precision()) +
                                 "); identically vanishing restrictions are rejected");
            }
        }
    }
    LocalLinearSystem sys;
    sys.r = static_cast<int>(sections.size()) - 1;
    sys.sections = std::move(sections);
    sys.degree = degree;
    sys.genus = genus;
    return sys;
}

std::vector<TruncatedSeries> wl_derivative_tower(const TruncatedSeries& f,
                                                 const BranchModel& branch, int r) {
    if (r < 0) {
        throw ModelError("derivative tower needs r >= 0");
    }
    std::vector<TruncatedSeries> tower;
    tower.reserve(static_cast<std::size_t>(r) + 1);
    tower.push_back(f);
    for (int i = 1; i <= r; ++i) {
        if (tower.back().precision() == 1) {
            throw PrecisionError("derivative tower on branch '" + branch.name +
                                     "' exhausted the series precision at step " +
                                     std::to_string(i) + " of " + std::to_string(r),
                                 branch.name, 2 * f.precision());
        }
        tower.push_back(branch.multiplier * derivative(tower.back()));
    }
    return tower;
}

std::vector<TruncatedSeries> wl_wronskian(const SingularPointModel& point,
                                          const LocalLinearSystem& sys) {
    const std::size_t n = sys.sections.size();
    std::vector<TruncatedSeries> result;
    result.reserve(point.branches.size());
    for (std::size_t b = 0; b < point.branches.size(); ++b) {
        // towers[i] holds (D^0 .. D^r) of section i on this branch; the matrix
        // has rows = derivative order, columns = basis order.
        std::vector<std::vector<TruncatedSeries>> towers;
        towers.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            towers.push_back(wl_derivative_tower(sys.sections[i][b], point.branches[b], sys.r));
        }
        std::vector<std::vector<TruncatedSeries>> matrix;
        matrix.reserve(n);
        for (std::size_t row = 0; row < n; ++row) {
            std::vector<TruncatedSeries> entries;
            entries.reserve(n);
            for (std::size_t col = 0; col < n; ++col) {
                entries.push_back(towers[col][row]);
            }
            matrix.push_back(std::move(entries));
        }
        result.push_back(series_det(matrix));
    }
    return result;
}

VanishingProfile vanishing_sequence(const std::vector<TruncatedSeries>& sections) {
    if (sections.empty()) {
        throw ModelError("vanishing sequence of an empty section list");
    }
    const std::size_t n = sections.size();
    std::size_t precision = sections[0].precision();
    for (const auto& s : sections) {
        precision = std::min(precision, s.precision());
    }

    // Column reduction: scan rows (powers of t) from 0 upward; at each row pick
    // the leftmost active column with a nonzero entry, record it as a pivot,
    // and clear that row in the remaining columns. Active columns stay zero
    // below the current row, so pivot rows are strictly increasing.
    std::vector<std::vector<Rat>> cols;
    cols.reserve(n);
    for (const auto& s : sections) {
        cols.emplace_back(s.coeffs().begin(), s.coeffs().begin() + static_cast<long>(precision));
    }
    std::vector<bool> active(n, true);
    std::vector<std::size_t> pivots;
    pivots.reserve(n);
    for (std::size_t row = 0; row < precision && pivots.size() < n; ++row) {
        std::size_t pivot_col = n;
        for (std::size_t c = 0; c < n; ++c) {
            if (active[c] && cols[c][row] != 0) {
                pivot_col = c;
                break;
            }
        }
        if (pivot_col == n) {
            continue;
        }
        const Rat pivot_value = cols[pivot_col][row];
        for (std::size_t c = 0; c < n; ++c) {
            if (c == pivot_col || !active[c] || cols[c][row] == 0) {
                continue;
            }
            const Rat factor = cols[c][row] / pivot_value;
            for (std::size_t k = row; k < precision; ++k) {
                cols[c][k] -= factor * cols[pivot_col][k];
            }
        }
        active[pivot_col] = false;
        pivots.push_back(row);
    }
    if (pivots.size() < n) {
        throw RankDeficiencyError(
            "only " + std::to_string(pivots.size()) + " of " + std::to_string(n) +
            " pivots found through t^" + std::to_string(precision) +
            ": the sections are linearly dependent, or the precision is too low to separate them");
    }

    VanishingProfile profile;
    profile.vanishing_sequence = pivots;
    profile.gap_sequence.reserve(n);
    long sum = 0;
    for (std::size_t a : pivots) {
        profile.gap_sequence.push_back(a + 1);
        sum += static_cast<long>(a);
    }
    const long r = static_cast<long>(n) - 1;
    profile.weight = sum - r * (r + 1) / 2;
    return profile;
}

WeightReport point_weight(const SingularPointModel& point, const LocalLinearSystem& sys) {
    const std::vector<TruncatedSeries> wronskians = wl_wronskian(point, sys);
    WeightReport report;
    report.per_branch_order.reserve(wronskians.size());
    long total = 0;
    for (std::size_t b = 0; b < wronskians.size(); ++b) {
        const Order order = series_order(wronskians[b]);
        report.per_branch_order.push_back(order);
        if (!order.is_known()) {
            throw PrecisionError(
                "Wronskian order on branch '" + point.branches[b].name +
                    "' is undetermined: the series vanishes through t^" +
                    std::to_string(order.precision()) +
                    "; raise the precision (or the sections are degenerate on this branch)",
                point.branches[b].name, 2 * order.precision());
        }
        total += static_cast<long>(order.value());
    }
    report.total_weight = total;
    const long r = static_cast<long>(sys.r);
    report.lower_bound = point.delta_p * r * (r + 1);
    report.extraweight = total - report.lower_bound;
    if (report.extraweight < 0) {
        throw ModelError("inconsistent singularity model: total weight " + std::to_string(total) +
                         " is below the Gorenstein floor " + std::to_string(report.lower_bound));
    }
    return report;
}

Int brill_segre(long r, long d, long g) {
    if (r < 0) {
        throw ModelError("brill_segre requires r >= 0");
    }
    return Int(r + 1) * d + Int(g - 1) * r * (r + 1);
}

Int cusp_weight(long r) {
    if (r < 0) {
        throw ModelError("cusp_weight requires r >= 0");
    }
    return Int(r) * (r + 2);
}

Int sw_pair_count(long g) {
    if (g < 1) {
        throw ModelError("sw_pair_count requires g >= 1");
    }
    const Int gg(g);
    return 6 * gg * gg * gg * gg + 14 * gg * gg * gg + 10 * gg * gg - 14 * gg - 16;
}

} // namespace wlx
