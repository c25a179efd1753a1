#include "g2coh/constant_terms.hpp"

#include <stdexcept>

#include "g2coh/levi.hpp"

namespace g2coh {

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string AffineArg::str() const {
    std::string out;
    auto term = [&out](Rational c, const char* var) {
        if (c == Rational(0)) return;
        if (!out.empty() && c.num > 0) out += "+";
        if (c == Rational(1))
            out += var;
        else if (c == Rational(-1))
            out += std::string("-") + var;
        else
            out += c.str() + var;
    };
    term(z1, "z1");
    term(z2, "z2");
    if (constant != Rational(0) || out.empty()) {
        if (!out.empty() && constant.num > 0) out += "+";
        out += constant.str();
    }
    return out;
}

std::string to_string(FactorKind k) {
    switch (k) {
        case FactorKind::Zeta: return "zeta";
        case FactorKind::StdL: return "L";
        case FactorKind::Sym3L: return "L_sym3";
    }
    return "?";
}

std::string LFactorToken::str() const {
    return to_string(kind) + "(" + numerator.str() + ")/" + to_string(kind) + "(" +
           denominator().str() + ")";
}

std::vector<LFactorToken> c1_factors() {
    return {
        {FactorKind::StdL, {Rational(0), Rational(1), Rational(0)}},
        {FactorKind::Zeta, {Rational(0), Rational(2), Rational(0)}},
        {FactorKind::StdL, {Rational(0), Rational(3), Rational(0)}},
    };
}

std::vector<LFactorToken> c2_factors() {
    return {
        {FactorKind::Sym3L, {Rational(0), Rational(1), Rational(0)}},
        {FactorKind::Zeta, {Rational(0), Rational(2), Rational(0)}},
    };
}

std::pair<std::int64_t, std::int64_t> coroot_pairing(Weight alpha) {
    if (!is_positive_root(alpha))
        throw std::invalid_argument("coroot_pairing: not a positive root");
    const std::int64_t norm = gram(alpha, alpha);
    const std::int64_t t1 = 2 * gram(kGamma1, alpha) / norm;
    const std::int64_t t2 = 2 * gram(kGamma2, alpha) / norm;
    return {t1, t2};
}

std::vector<LFactorToken> c0_factors(const WeylElement& w) {
    std::vector<LFactorToken> tokens;
    for (const Weight& alpha : inversion_set(w)) {
        const auto [t1, t2] = coroot_pairing(alpha);
        // t1*(z1+1) + t2*(z2+1) - 1
        AffineArg arg{Rational(t1 + t2 - 1), Rational(t1), Rational(t2)};
        tokens.push_back({FactorKind::Zeta, arg});
    }
    return tokens;
}

SpecialPoint special_point(Parabolic p, const WeylElement& w, HighestWeight lambda) {
    const LeviWeight lw = levi_coordinates(w, lambda, p);
    SpecialPoint point;
    point.parabolic = p;
    point.rep_label = w.label;
    point.z1 = Rational(-(lw.b + rho_central(p)), 2);
    point.z2 = Rational(0);
    point.cusp_weight = lw.a + 2;
    return point;
}

SpecialPoint special_point(HighestWeight lambda) {
    SpecialPoint point;
    point.parabolic = Parabolic::P0;
    point.rep_label = 0;
    point.z1 = Rational(-lambda.m1 - 1);
    point.z2 = Rational(-lambda.m2 - 1);
    return point;
}

namespace {

bool is_trivial_zeta_zero(Rational arg) {
    return arg.is_integer() && arg.num < 0 && arg.num % 2 == 0;
}

LKind l_kind_of(FactorKind k) { return k == FactorKind::StdL ? LKind::Std : LKind::Sym3; }

}  // namespace

PoleAnalysis pole_order(const std::vector<LFactorToken>& tokens, const SpecialPoint& point,
                        const LOracle& oracle) {
    PoleAnalysis result;
    const Rational half(1, 2);
    bool has_pole_at_one = false;
    std::vector<std::string> trivial_zeros;

    for (const LFactorToken& token : tokens) {
        const Rational num = token.numerator.eval(point.z1, point.z2);
        const Rational den = num + Rational(1);
        if (token.kind == FactorKind::Zeta) {
            if (num == Rational(1)) {
                result.order += 1;
                has_pole_at_one = true;
            }
            if (den == Rational(1)) result.order -= 1;
            if (is_trivial_zeta_zero(num))
                trivial_zeros.push_back("zeta(" + num.str() + ") in a numerator");
            if (is_trivial_zeta_zero(den))
                trivial_zeros.push_back("zeta(" + den.str() + ") in a denominator");
        } else {
            // Entire L-functions: only the central point carries oracle
            // information; everything else is nonzero finite.
            if (!point.cusp_weight.has_value()) continue;
            const LKind kind = l_kind_of(token.kind);
            if (num == half && oracle.central_value_vanishes(kind, *point.cusp_weight))
                result.order -= 1;
            if (den == half && oracle.central_value_vanishes(kind, *point.cusp_weight))
                result.order += 1;
        }
    }

    if (has_pole_at_one)
        for (const std::string& z : trivial_zeros)
            result.warnings.push_back("trivial zero " + z +
                                      " shares a product with the pole at argument 1; "
                                      "not used for cancellation");
    return result;
}

}  // namespace g2coh
