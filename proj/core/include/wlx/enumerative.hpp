#pragma once

#include <map>
#include <string>
#include <vector>

#include "wlx/rational.hpp"

namespace wlx {

/// A rational divisor class on the moduli of stable curves of genus g, written
/// on the basis lambda, delta_0, ..., delta_[g/2]. kappa_1 never appears: it
/// is eliminated through kappa_1 = 12*lambda - sum delta_i.
struct DivisorClass {
    long genus = 0;
    Rat lambda;
    std::vector<Rat> delta;  // index i = coefficient of delta_i, i = 0..g/2

    static DivisorClass zero(long genus);
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const Rat& c, const DivisorClass& a);
bool operator==(const DivisorClass& a, const DivisorClass& b);

std::string to_string(const DivisorClass& c);

/// Degrees of the basis symbols on a 1-parameter family.
struct DegreeAssignment {
    Rat lambda;
    std::vector<Rat> delta;
};

/// Sum of coefficient * degree. Throws ModelError when the assignment misses
/// a symbol of the class.
Rat evaluate_class(const DivisorClass& c, const DegreeAssignment& degrees);

/// Degrees (lambda, delta_0, delta_1, rest) = (1, 12, -1, 0) of the pencil
/// glueing a moving plane-cubic tail to a fixed genus g-1 curve.
DegreeAssignment hm_pencil_degrees(long g);

/// Degrees (lambda, delta_0, delta_1) = (3, 27, 0) of a general pencil of
/// plane quartics (genus 3).
DegreeAssignment quartic_pencil_degrees();

/// c1(Lambda^{k+1} J^k(L)) = zeta_mult * zeta + eta_mult * eta, from the Chern
/// roots zeta + j*eta, j = 0..k.
struct JetC1 {
    Int zeta_mult;
    Int eta_mult;
};
JetC1 jet_c1(long k);

/// c2(J^k(L)) = eta2 * eta^2 + eta_zeta * eta*zeta + zeta2 * zeta^2, the
/// degree-2 elementary symmetric function of the same Chern roots.
struct JetC2 {
    Int eta2;
    Int eta_zeta;
    Int zeta2;
};
JetC2 jet_c2(long k);

/// Intersection degrees of eta = c1(omega_pi) and zeta = c1(L) on a fibred
/// surface.
struct ChernModel {
    Rat eta_sq;
    Rat eta_zeta;
    Rat zeta_sq;
};

/// Degrees (3d^2-12d+9, 2d-3, 1) on the blown-up total space of a general
/// pencil of degree-d plane curves. Model data, validated end to end by the
/// hyperflex count.
ChernModel quartic_pencil_chern(long d);

/// Singular members of a general pencil of degree-d hypersurfaces in P^n:
/// (n+1)(d-1)^n.
Int pencil_nodes(long n, long d);

/// m-th order automatic degeneracy of a node: C(m+1, 4).
Int ad_node(long m);

/// Reference value for the 4th-order automatic degeneracy of a cusp germ.
/// No general algorithm is implemented for non-nodal germs.
inline constexpr int kAdCuspOrder4 = 10;

/// Hyperflexes in a general pencil of degree-d plane curves, computed through
/// the jet Chern classes minus the nodal corrections and checked against the
/// closed form 6(d-3)(3d-2). Both routes must agree.
Int hyperflex_count(long d);

/// Multiplicity C(g-i+1, 2) of the relative Wronskian along the genus-i
/// component of a uninodal reducible fibre. Requires 1 <= i <= g-1.
Int multiplicity_m(long g, long i);

/// The class of fibres carrying a special Weierstrass point, with every
/// intermediate coefficient exposed and cross-checked against its closed form.
struct SwClassBreakdown {
    long g = 0;
    std::map<long, Int> m;   // i -> m_i, for 1 <= i <= g-1
    std::map<long, Int> c;   // i -> c_i, for 1 <= i <= g/2
    std::map<long, Int> b;   // i -> b_i = c_i + g(g+1)(g^2+g+2)/4
    Int a0;
    Int lambda_coeff;        // 2 + 6g + 9g^2 + 4g^3 + 3g^4
    DivisorClass final;      // lambda_coeff * lambda - a0 * delta_0 - sum b_i * delta_i
};

SwClassBreakdown sw_class(long g);

/// The stable hyperelliptic class in genus 3: 9*lambda - delta_0 - 3*delta_1,
/// checked against 8*[class] = 72*lambda - 8*delta_0 - 24*delta_1.
DivisorClass hyperelliptic_class_g3();

/// The genus-3 hyperflex class sw_class(3).final - 16 * hyperelliptic:
/// 308*lambda - 32*delta_0 - 76*delta_1. The lambda and delta_0 coefficients
/// are certified by the 60-hyperflex quartic-pencil evaluation; delta_1 has
/// degree 0 there, and this pipeline's 76 disagrees with the value 82 quoted
/// in published tables, so the coefficient carries a discrepancy flag.
struct HyperflexClassG3 {
    DivisorClass value;
    bool delta1_discrepancy = true;
    Rat delta1_alternative;  // -82
};

HyperflexClassG3 hyperflex_class_g3();

} // namespace wlx
