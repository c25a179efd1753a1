#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "g2coh/loracle.hpp"
#include "g2coh/weyl.hpp"

namespace g2coh {

/// Exact rational number, always normalized with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num(n) {}
    constexpr Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    constexpr void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend constexpr Rational operator+(Rational l, Rational r) {
        return {l.num * r.den + r.num * l.den, l.den * r.den};
    }
    friend constexpr Rational operator-(Rational l, Rational r) {
        return {l.num * r.den - r.num * l.den, l.den * r.den};
    }
    friend constexpr Rational operator*(Rational l, Rational r) {
        return {l.num * r.num, l.den * r.den};
    }

    bool is_integer() const { return den == 1; }
    std::string str() const;
};

/// Affine expression c + p*z1 + q*z2 with exact rational coefficients.
/// Factors of the maximal parabolics use the single variable z (= z1).
struct AffineArg {
    Rational constant;
    Rational z1;
    Rational z2;

    Rational eval(Rational v1, Rational v2) const {
        return constant + z1 * v1 + z2 * v2;
    }
    std::string str() const;
};

enum class FactorKind { Zeta, StdL, Sym3L };

std::string to_string(FactorKind k);

/// One quotient factor zeta(arg)/zeta(arg+1) or L(arg, .)/L(arg+1, .): the
/// denominator argument always exceeds the numerator argument by one.
struct LFactorToken {
    FactorKind kind = FactorKind::Zeta;
    AffineArg numerator;

    AffineArg denominator() const {
        AffineArg d = numerator;
        d.constant = d.constant + Rational(1);
        return d;
    }
    std::string str() const;
};

/// Constant-term factor of the P1 Eisenstein series, theta = z*gamma2:
/// L(z,pi)/L(z+1,pi) * zeta(2z)/zeta(2z+1) * L(3z,pi)/L(3z+1,pi).
std::vector<LFactorToken> c1_factors();

/// Constant-term factor of the P2 Eisenstein series, theta = z*gamma1:
/// L(z,Sym3 pi)/L(z+1,Sym3 pi) * zeta(2z)/zeta(2z+1).
std::vector<LFactorToken> c2_factors();

/// Minimal-parabolic factor: one zeta quotient per inversion of w, with
/// numerator argument t1(alpha)*(z1+1) + t2(alpha)*(z2+1) - 1 where
/// (t1, t2) is the coroot pairing <gamma_j, alpha^v> of the fundamental
/// weights against the root. For the six positive roots in height order
/// the pairs are (1,0), (0,1), (1,3), (2,3), (1,1), (1,2).
std::vector<LFactorToken> c0_factors(const WeylElement& w);

/// Coroot pairing table entry for a positive root.
std::pair<std::int64_t, std::int64_t> coroot_pairing(Weight alpha);

/// Evaluation point of a constant term. Maximal case: the single
/// coordinate z = -(b_i(lambda,w) + rho_b)/2 stored in z1, with the cusp
/// weight a_i + 2 recorded for central-value lookups. Minimal case:
/// (z1, z2) = (-m1 - 1, -m2 - 1).
struct SpecialPoint {
    Parabolic parabolic = Parabolic::P0;
    int rep_label = 0;
    Rational z1;
    Rational z2;
    std::optional<std::int64_t> cusp_weight;
};

SpecialPoint special_point(Parabolic p, const WeylElement& w, HighestWeight lambda);
SpecialPoint special_point(HighestWeight lambda);

/// Net pole order of a factor product at a point (positive = pole).
/// Zeta factors contribute +1 for a numerator argument 1 and -1 for a
/// denominator argument 1; their trivial zeros (negative even arguments)
/// are recorded as warnings when they share a product with a pole but are
/// never used to cancel it. L factors are entire; their central values
/// (argument 1/2) cancel one pole order when the oracle declares them
/// zero. Arguments with real part > 1 are nonzero finite without oracle
/// consultation.
struct PoleAnalysis {
    int order = 0;
    std::vector<std::string> warnings;
};

PoleAnalysis pole_order(const std::vector<LFactorToken>& tokens, const SpecialPoint& point,
                        const LOracle& oracle);

}  // namespace g2coh
