#include "wlx/enumerative.hpp"

#include <sstream>
#include <stdexcept>

#include "wlx/errors.hpp"

namespace wlx {

DivisorClass DivisorClass::zero(long genus) {
    if (genus < 1) {
        throw ModelError("divisor classes need genus >= 1");
    }
    DivisorClass c;
    c.genus = genus;
    c.delta.assign(static_cast<std::size_t>(genus / 2) + 1, Rat(0));
    return c;
}

namespace {

void check_same_genus(const DivisorClass& a, const DivisorClass& b) {
    if (a.genus != b.genus) {
        throw ModelError("divisor classes live on different moduli (genus " +
                         std::to_string(a.genus) + " vs " + std::to_string(b.genus) + ")");
    }
}

} // namespace

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    check_same_genus(a, b);
    DivisorClass c = a;
    c.lambda += b.lambda;
    for (std::size_t i = 0; i < c.delta.size(); ++i) {
        c.delta[i] += b.delta[i];
    }
    return c;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    check_same_genus(a, b);
    DivisorClass c = a;
    c.lambda -= b.lambda;
    for (std::size_t i = 0; i < c.delta.size(); ++i) {
        c.delta[i] -= b.delta[i];
    }
    return c;
}

DivisorClass operator*(const Rat& s, const DivisorClass& a) {
    DivisorClass c = a;
    c.lambda *= s;
    for (Rat& coeff : c.delta) {
        coeff *= s;
    }
    return c;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.genus == b.genus && a.lambda == b.lambda && a.delta == b.delta;
}

std::string to_string(const DivisorClass& c) {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Rat& coeff, const std::string& symbol) {
        if (coeff == 0) {
            return;
        }
        const bool negative = coeff < 0;
        const Rat a = negative ? Rat(-coeff) : coeff;
        if (first) {
            if (negative) {
                out << "-";
            }
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (a != 1) {
            out << rat_to_string(a) << "*";
        }
        out << symbol;
    };
    emit(c.lambda, "lambda");
    for (std::size_t i = 0; i < c.delta.size(); ++i) {
        emit(c.delta[i], "delta_" + std::to_string(i));
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

Rat evaluate_class(const DivisorClass& c, const DegreeAssignment& degrees) {
    if (degrees.delta.size() < c.delta.size()) {
        throw ModelError("degree assignment covers delta_0..delta_" +
                         std::to_string(degrees.delta.empty() ? 0 : degrees.delta.size() - 1) +
                         " but the class has delta_0..delta_" +
                         std::to_string(c.delta.size() - 1));
    }
    Rat value = c.lambda * degrees.lambda;
    for (std::size_t i = 0; i < c.delta.size(); ++i) {
        value += c.delta[i] * degrees.delta[i];
    }
    return value;
}

DegreeAssignment hm_pencil_degrees(long g) {
    if (g < 1) {
        throw ModelError("hm_pencil_degrees requires g >= 1");
    }
    DegreeAssignment d;
    d.lambda = 1;
    d.delta.assign(static_cast<std::size_t>(g / 2) + 1, Rat(0));
    d.delta[0] = 12;
    if (g >= 2) {
        d.delta[1] = -1;
    }
    return d;
}

DegreeAssignment quartic_pencil_degrees() {
    DegreeAssignment d;
    d.lambda = 3;
    d.delta = {Rat(27), Rat(0)};
    return d;
}

JetC1 jet_c1(long k) {
    if (k < 0) {
        throw ModelError("jet_c1 requires k >= 0");
    }
    return JetC1{Int(k + 1), Int(k) * (k + 1) / 2};
}

JetC2 jet_c2(long k) {
    if (k < 0) {
        throw ModelError("jet_c2 requires k >= 0");
    }
    JetC2 out{0, 0, 0};
    for (long i = 0; i <= k; ++i) {
        for (long j = i + 1; j <= k; ++j) {
            out.eta2 += Int(i) * j;
            out.eta_zeta += i + j;
            out.zeta2 += 1;
        }
    }
    return out;
}

ChernModel quartic_pencil_chern(long d) {
    return ChernModel{Rat(3 * d * d - 12 * d + 9), Rat(2 * d - 3), Rat(1)};
}

Int pencil_nodes(long n, long d) {
    if (n < 1 || d < 1) {
        throw ModelError("pencil_nodes requires n >= 1 and d >= 1");
    }
    Int power = 1;
    for (long i = 0; i < n; ++i) {
        power *= d - 1;
    }
    return Int(n + 1) * power;
}

Int ad_node(long m) {
    if (m < 0) {
        throw ModelError("ad_node requires m >= 0");
    }
    return binomial(Int(m + 1), 4);
}

Int hyperflex_count(long d) {
    if (d < 1) {
        throw ModelError("hyperflex_count requires d >= 1");
    }
    const JetC2 c2 = jet_c2(3);
    const ChernModel degrees = quartic_pencil_chern(d);
    const Rat chern_part = Rat(c2.eta2) * degrees.eta_sq + Rat(c2.eta_zeta) * degrees.eta_zeta +
                           Rat(c2.zeta2) * degrees.zeta_sq;
    const Rat pipeline = chern_part - Rat(ad_node(4) * pencil_nodes(2, d));
    const Int closed = Int(6) * (d - 3) * (3 * d - 2);
    if (pipeline != Rat(closed)) {
        throw std::logic_error("hyperflex_count: jet-Chern pipeline and closed form disagree at d = " +
                               std::to_string(d));
    }
    return closed;
}

Int multiplicity_m(long g, long i) {
    if (i < 1 || i > g - 1) {
        throw ModelError("multiplicity_m requires 1 <= i <= g-1");
    }
    return binomial(Int(g - i + 1), 2);
}

SwClassBreakdown sw_class(long g) {
    if (g < 1) {
        throw ModelError("sw_class requires g >= 1");
    }
    SwClassBreakdown out;
    out.g = g;
    const Int gg(g);

    const Int pipeline_lambda = 3 * gg * (gg + 1) * (gg * gg + gg + 2) //
                                - 2 * (gg * gg + gg + 1) * (gg - 1);
    const Int closed_lambda = 3 * gg * gg * gg * gg + 4 * gg * gg * gg + 9 * gg * gg + 6 * gg + 2;
    if (pipeline_lambda != closed_lambda) {
        throw std::logic_error("sw_class: lambda coefficient drifted from its closed form");
    }
    out.lambda_coeff = closed_lambda;

    for (long i = 1; i <= g - 1; ++i) {
        out.m[i] = multiplicity_m(g, i);
    }

    const Int quarter = gg * (gg + 1) * (gg * gg + gg + 2) / 4;
    for (long i = 1; i <= g / 2; ++i) {
        const Int& mi = out.m.at(i);
        const Int& mgi = out.m.at(g - i);
        // The F^2 self-intersection contributes +(m_i - m_{g-i})^2 here; the
        // closed form below pins the sign.
        const Int ci = (gg * gg + gg + 1) * (2 * (i * mi + (g - i) * mgi) - mi - mgi) //
                       + (mi - mgi) * (mi - mgi);
        const Int bi = ci + quarter;
        const Int bi_closed = (gg * gg * gg + 3 * gg * gg + 2 * gg + 2) * i * (g - i);
        if (bi != bi_closed) {
            throw std::logic_error("sw_class: b_" + std::to_string(i) +
                                   " drifted from its closed form at g = " + std::to_string(g));
        }
        out.c[i] = ci;
        out.b[i] = bi;
    }

    out.a0 = gg * (gg + 1) * (2 * gg * gg + gg + 3) / 6;
    if (g >= 2) {
        // The degree-0 evaluation on the elliptic-tail pencil fixes a0.
        const Int from_pencil = out.lambda_coeff + out.b.at(1);
        if (from_pencil != 12 * out.a0) {
            throw std::logic_error("sw_class: a0 disagrees with the elliptic-tail pencil relation");
        }
    }

    DivisorClass cls = DivisorClass::zero(g);
    cls.lambda = Rat(out.lambda_coeff);
    cls.delta[0] = -Rat(out.a0);
    for (long i = 1; i <= g / 2; ++i) {
        cls.delta[static_cast<std::size_t>(i)] = -Rat(out.b.at(i));
    }
    out.final = cls;
    return out;
}

DivisorClass hyperelliptic_class_g3() {
    DivisorClass h = DivisorClass::zero(3);
    h.lambda = 9;
    h.delta[0] = -1;
    h.delta[1] = -3;

    DivisorClass expected = DivisorClass::zero(3);
    expected.lambda = 72;
    expected.delta[0] = -8;
    expected.delta[1] = -24;
    if (!(Rat(8) * h == expected)) {
        throw std::logic_error("hyperelliptic_class_g3: 8*[class] check failed");
    }
    return h;
}

HyperflexClassG3 hyperflex_class_g3() {
    HyperflexClassG3 out;
    out.value = sw_class(3).final - Rat(16) * hyperelliptic_class_g3();
    out.delta1_discrepancy = true;
    out.delta1_alternative = -82;
    return out;
}

} // namespace wlx
