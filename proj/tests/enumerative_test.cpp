#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wlx/enumerative.hpp"
#include "wlx/errors.hpp"

using namespace wlx;

namespace {

// Brute-force oracle for the jet Chern classes: expand prod_{j=0}^{k}
// (1 + zeta + j*eta) in Z[eta, zeta] and read off the degree-2 part.
// poly[i][j] = coefficient of eta^i * zeta^j.
using Poly2 = std::vector<std::vector<Int>>;

Poly2 poly_mul(const Poly2& a, const Poly2& b) {
    Poly2 c(a.size() + b.size() - 1,
            std::vector<Int>(a[0].size() + b[0].size() - 1, Int(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (a[i][j] == 0) {
                continue;
            }
            for (std::size_t k = 0; k < b.size(); ++k) {
                for (std::size_t l = 0; l < b[k].size(); ++l) {
                    c[i + k][j + l] += a[i][j] * b[k][l];
                }
            }
        }
    }
    return c;
}

JetC2 jet_c2_brute_force(long k) {
    Poly2 prod{{Int(1)}};
    for (long j = 0; j <= k; ++j) {
        // 1 + zeta + j*eta
        Poly2 factor{{Int(1), Int(1)}, {Int(j), Int(0)}};
        prod = poly_mul(prod, factor);
    }
    auto at = [&](std::size_t i, std::size_t j) -> Int {
        if (i < prod.size() && j < prod[i].size()) {
            return prod[i][j];
        }
        return 0;
    };
    return JetC2{at(2, 0), at(1, 1), at(0, 2)};
}

DivisorClass class_of(long genus, const Rat& lambda, std::vector<Rat> delta) {
    DivisorClass c = DivisorClass::zero(genus);
    c.lambda = lambda;
    for (std::size_t i = 0; i < delta.size(); ++i) {
        c.delta[i] = delta[i];
    }
    return c;
}

} // namespace

TEST_CASE("jet c1") {
    CHECK(jet_c1(0).zeta_mult == 1);
    CHECK(jet_c1(0).eta_mult == 0);
    CHECK(jet_c1(3).zeta_mult == 4);
    CHECK(jet_c1(3).eta_mult == 6);
    // With zeta set equal to eta (L = omega), c1 of the top exterior power of
    // J^{g-1} is g(g+1)/2 * eta.
    for (long g = 1; g <= 10; ++g) {
        const JetC1 c = jet_c1(g - 1);
        CHECK(c.zeta_mult + c.eta_mult == Int(g) * (g + 1) / 2);
    }
    CHECK_THROWS_AS(jet_c1(-1), ModelError);
}

TEST_CASE("jet c2: pinned values and brute-force expansion") {
    const JetC2 k3 = jet_c2(3);
    CHECK(k3.eta2 == 11);
    CHECK(k3.eta_zeta == 18);
    CHECK(k3.zeta2 == 6);

    const JetC2 k1 = jet_c2(1);
    CHECK(k1.eta2 == 0);
    CHECK(k1.eta_zeta == 1);
    CHECK(k1.zeta2 == 1);

    const JetC2 k0 = jet_c2(0);
    CHECK(k0.eta2 == 0);
    CHECK(k0.eta_zeta == 0);
    CHECK(k0.zeta2 == 0);

    for (long k = 0; k <= 8; ++k) {
        const JetC2 fast = jet_c2(k);
        const JetC2 brute = jet_c2_brute_force(k);
        CHECK(fast.eta2 == brute.eta2);
        CHECK(fast.eta_zeta == brute.eta_zeta);
        CHECK(fast.zeta2 == brute.zeta2);
    }
}

TEST_CASE("pencil nodes") {
    CHECK(pencil_nodes(2, 4) == 27);
    CHECK(pencil_nodes(2, 3) == 12);
    CHECK(pencil_nodes(3, 1) == 0);
    CHECK(pencil_nodes(2, 2) == 3);
    CHECK_THROWS_AS(pencil_nodes(0, 4), ModelError);
}

TEST_CASE("automatic degeneracy of a node") {
    CHECK(ad_node(4) == 5);
    CHECK(ad_node(3) == 1);
    CHECK(ad_node(2) == 0);
    CHECK(ad_node(0) == 0);
    CHECK(kAdCuspOrder4 == 10);
}

TEST_CASE("hyperflex count: the two routes agree") {
    CHECK(hyperflex_count(3) == 0);
    CHECK(hyperflex_count(4) == 60);
    CHECK(hyperflex_count(5) == 156);
    // hyperflex_count itself asserts pipeline == closed form; exercise the
    // whole range.
    for (long d = 1; d <= 50; ++d) {
        CHECK(hyperflex_count(d) == Int(6) * (d - 3) * (3 * d - 2));
    }
}

TEST_CASE("Wronskian multiplicities m_i") {
    CHECK(multiplicity_m(3, 1) == 3);
    CHECK(multiplicity_m(3, 2) == 1);
    CHECK(multiplicity_m(2, 1) == 1);
    CHECK(multiplicity_m(4, 1) == 6);
    CHECK_THROWS_AS(multiplicity_m(3, 0), ModelError);
    CHECK_THROWS_AS(multiplicity_m(3, 3), ModelError);
}

TEST_CASE("sw_class: low genus pins") {
    const SwClassBreakdown g1 = sw_class(1);
    CHECK(g1.final == class_of(1, 24, {Rat(-2)}));
    CHECK(g1.final == Rat(2) * class_of(1, 12, {Rat(-1)}));

    const SwClassBreakdown g2 = sw_class(2);
    CHECK(g2.final == class_of(2, 130, {Rat(-13), Rat(-26)}));
    CHECK(g2.final == Rat(13) * class_of(2, 10, {Rat(-1), Rat(-2)}));

    const SwClassBreakdown g3 = sw_class(3);
    CHECK(g3.final == class_of(3, 452, {Rat(-48), Rat(-124)}));
    CHECK(g3.m.at(1) == 3);
    CHECK(g3.m.at(2) == 1);
    CHECK(g3.c.at(1) == 82);
    CHECK(g3.b.at(1) == 124);
    CHECK(g3.a0 == 48);
    CHECK(g3.lambda_coeff == 452);
}

TEST_CASE("sw_class: coefficient identities for g = 1..30") {
    for (long g = 1; g <= 30; ++g) {
        const SwClassBreakdown breakdown = sw_class(g);
        const Int gg(g);
        CHECK(breakdown.lambda_coeff ==
              3 * gg * gg * gg * gg + 4 * gg * gg * gg + 9 * gg * gg + 6 * gg + 2);
        CHECK(breakdown.lambda_coeff ==
              3 * gg * (gg + 1) * (gg * gg + gg + 2) - 2 * (gg * gg + gg + 1) * (gg - 1));
        CHECK(breakdown.a0 == gg * (gg + 1) * (2 * gg * gg + gg + 3) / 6);
        for (long i = 1; i <= g / 2; ++i) {
            CHECK(breakdown.b.at(i) ==
                  (gg * gg * gg + 3 * gg * gg + 2 * gg + 2) * i * (g - i));
        }
        if (g >= 2) {
            CHECK(12 * breakdown.a0 == breakdown.lambda_coeff + breakdown.b.at(1));
        }
    }
}

TEST_CASE("sw_class: degree zero on the elliptic-tail pencil") {
    for (long g = 2; g <= 12; ++g) {
        CHECK(evaluate_class(sw_class(g).final, hm_pencil_degrees(g)) == 0);
    }
    CHECK(evaluate_class(sw_class(1).final, hm_pencil_degrees(1)) == 0);
}

TEST_CASE("hyperelliptic class in genus 3") {
    const DivisorClass h = hyperelliptic_class_g3();
    CHECK(h == class_of(3, 9, {Rat(-1), Rat(-3)}));
    CHECK(Rat(8) * h == class_of(3, 72, {Rat(-8), Rat(-24)}));
    CHECK(evaluate_class(h, hm_pencil_degrees(3)) == 0);  // 9 - 12 + 3
}

TEST_CASE("hyperflex class in genus 3") {
    const HyperflexClassG3 h = hyperflex_class_g3();
    CHECK(h.value.lambda == 308);
    CHECK(h.value.delta[0] == -32);
    CHECK(h.value.delta[1] == -76);
    CHECK(h.delta1_discrepancy);
    CHECK(h.delta1_alternative == -82);
    CHECK(evaluate_class(h.value, quartic_pencil_degrees()) == 60);
}

TEST_CASE("evaluate_class") {
    const DivisorClass relation = class_of(1, 12, {Rat(-1)});
    DegreeAssignment genus1;
    genus1.lambda = 1;
    genus1.delta = {Rat(12)};
    CHECK(evaluate_class(relation, genus1) == 0);

    CHECK(evaluate_class(DivisorClass::zero(5), hm_pencil_degrees(5)) == 0);

    DegreeAssignment missing;
    missing.lambda = 1;
    missing.delta = {Rat(0)};
    CHECK_THROWS_AS(evaluate_class(DivisorClass::zero(4), missing), ModelError);
    CHECK_THROWS_AS(class_of(2, 1, {}) + class_of(3, 1, {}), ModelError);
}

TEST_CASE("divisor class arithmetic and rendering") {
    const DivisorClass a = class_of(3, Rat(9) / 2, {Rat(-1), Rat(0)});
    const DivisorClass b = class_of(3, Rat(1) / 2, {Rat(1), Rat(-3)});
    CHECK((a + b) == class_of(3, 5, {Rat(0), Rat(-3)}));
    CHECK((a - b) == class_of(3, 4, {Rat(-2), Rat(3)}));
    CHECK(to_string(class_of(3, 452, {Rat(-48), Rat(-124)})) ==
          "452*lambda - 48*delta_0 - 124*delta_1");
    CHECK(to_string(DivisorClass::zero(2)) == "0");
    CHECK(to_string(class_of(2, Rat(-9) / 2, {Rat(1), Rat(0)})) == "-9/2*lambda + delta_0");
}
