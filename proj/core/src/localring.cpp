#include "wlx/localring.hpp"

#include <algorithm>
#include <numeric>

#include "wlx/errors.hpp"

namespace wlx {

namespace {

// Membership table for [0, bound]; table[x] == true iff x is in the semigroup.
std::vector<char> membership_table(const std::vector<long>& gens, long bound) {
    std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
    member[0] = 1;
    for (long x = 1; x <= bound; ++x) {
        for (long g : gens) {
            if (g <= x && member[static_cast<std::size_t>(x - g)]) {
                member[static_cast<std::size_t>(x)] = 1;
                break;
            }
        }
    }
    return member;
}

} // namespace

NumericalSemigroup semigroup_from_generators(std::vector<long> generators) {
    if (generators.empty()) {
        throw ModelError("semigroup needs at least one generator");
    }
    for (long g : generators) {
        if (g <= 0) {
            throw ModelError("semigroup generators must be positive");
        }
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    long g = 0;
    for (long gen : generators) {
        g = std::gcd(g, gen);
    }
    if (g != 1) {
        throw ModelError("generators have gcd " + std::to_string(g) +
                         " != 1: infinitely many gaps");
    }

    NumericalSemigroup s;
    s.generators = generators;

    const long min_gen = generators.front();
    const long max_gen = generators.back();

    if (min_gen == 1) {
        s.delta = 0;
        s.conductor = 0;
        s.frobenius = -1;
        s.symmetric = true;
        return s;
    }

    // The Frobenius number sits below min_gen * max_gen; a run of min_gen
    // consecutive members certifies the conductor, so verify and widen the
    // bound if the run is not visible yet.
    long bound = min_gen * max_gen + min_gen;
    std::vector<char> member;
    long conductor = -1;
    for (int attempt = 0; attempt < 8; ++attempt) {
        member = membership_table(s.generators, bound);
        long last_gap = -1;
        for (long x = bound; x >= 0; --x) {
            if (!member[static_cast<std::size_t>(x)]) {
                last_gap = x;
                break;
            }
        }
        const long candidate = last_gap + 1;
        bool certified = candidate + min_gen <= bound + 1;
        for (long x = candidate; certified && x < candidate + min_gen; ++x) {
            certified = member[static_cast<std::size_t>(x)];
        }
        if (certified) {
            conductor = candidate;
            break;
        }
        bound *= 2;
    }
    if (conductor < 0) {
        throw std::logic_error("semigroup conductor search failed to converge");
    }

    s.conductor = conductor;
    s.frobenius = conductor - 1;
    for (long x = 0; x < conductor; ++x) {
        if (member[static_cast<std::size_t>(x)]) {
            s.elements_below_conductor.push_back(x);
        } else {
            s.gaps.push_back(x);
        }
    }
    s.delta = static_cast<long>(s.gaps.size());

    s.symmetric = true;
    for (long x = 0; x < conductor; ++x) {
        const bool in_x = member[static_cast<std::size_t>(x)] != 0;
        const bool in_mirror = member[static_cast<std::size_t>(conductor - 1 - x)] != 0;
        if (in_x == in_mirror) {
            s.symmetric = false;
            break;
        }
    }
    return s;
}

GorensteinReport gorenstein_test_monomial(const NumericalSemigroup& s) {
    GorensteinReport report;
    report.n_p = s.conductor;
    report.delta = s.delta;
    report.symmetric = s.symmetric;
    report.gorenstein = (s.conductor == 2 * s.delta);
    return report;
}

BranchModel make_branch(std::string name, TruncatedSeries multiplier) {
    const Order order = series_order(multiplier);
    if (!order.is_known()) {
        throw PrecisionError("multiplier of branch '" + name + "' is zero modulo t^" +
                                 std::to_string(order.precision()) +
                                 "; supply a nonzero multiplier or raise the precision",
                             name, 2 * order.precision());
    }
    return BranchModel{std::move(name), std::move(multiplier), order.value()};
}

SingularPointModel build_singular_point(std::vector<BranchModel> branches) {
    if (branches.empty()) {
        throw ModelError("a singular point model needs at least one branch");
    }
    long n_p = 0;
    for (const BranchModel& branch : branches) {
        n_p += static_cast<long>(branch.conductor_order);
        if (branches.size() > 1 && branch.conductor_order == 0) {
            throw ModelError("branch '" + branch.name +
                             "' has a unit multiplier in a multibranch model; every branch "
                             "of a multibranch point meets the conductor");
        }
    }
    if (n_p % 2 != 0) {
        throw NonGorensteinError(n_p);
    }
    SingularPointModel point;
    point.branches = std::move(branches);
    point.n_p = n_p;
    point.delta_p = n_p / 2;
    return point;
}

} // namespace wlx
