#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace g2coh {

/// A point of the G2 weight lattice, stored in simple-root coordinates:
/// the weight a*alpha1 + b*alpha2, with alpha1 the short and alpha2 the
/// long simple root. All coordinate systems used downstream (fundamental
/// weights, Levi bases of the maximal parabolics) are exact integer views
/// of this one.
struct Weight {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend constexpr bool operator==(const Weight&, const Weight&) = default;
    friend constexpr Weight operator+(Weight u, Weight v) { return {u.a + v.a, u.b + v.b}; }
    friend constexpr Weight operator-(Weight u, Weight v) { return {u.a - v.a, u.b - v.b}; }
    friend constexpr Weight operator-(Weight u) { return {-u.a, -u.b}; }
};

inline constexpr Weight kAlpha1{1, 0};
inline constexpr Weight kAlpha2{0, 1};
inline constexpr Weight kGamma1{2, 1};  // fundamental weight gamma1 = 2a1 + a2
inline constexpr Weight kGamma2{3, 2};  // fundamental weight gamma2 = 3a1 + 2a2
inline constexpr Weight kRho{5, 3};     // half the sum of the positive roots

/// Coordinates of a weight in the fundamental basis (gamma1, gamma2).
struct FundamentalCoords {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr bool operator==(const FundamentalCoords&, const FundamentalCoords&) = default;
};

/// Basis change is unimodular: x = 2a - 3b, y = 2b - a.
constexpr FundamentalCoords to_fundamental(Weight w) {
    return {2 * w.a - 3 * w.b, 2 * w.b - w.a};
}

/// Inverse basis change: a = 2x + 3y, b = x + 2y.
constexpr Weight from_fundamental(std::int64_t x, std::int64_t y) {
    return {2 * x + 3 * y, x + 2 * y};
}

/// The six positive roots, in height order.
const std::array<Weight, 6>& positive_roots();

bool is_positive_root(Weight w);
bool is_negative_root(Weight w);

/// Invariant bilinear form normalized by <alpha1, alpha1> = 2
/// (so <alpha2, alpha2> = 6 and <alpha1, alpha2> = -3).
constexpr std::int64_t gram(Weight u, Weight v) {
    return 2 * u.a * v.a + 6 * u.b * v.b - 3 * (u.a * v.b + u.b * v.a);
}

/// Dominant highest weight lambda = m1*gamma1 + m2*gamma2.
struct HighestWeight {
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;

    constexpr Weight weight() const { return {2 * m1 + 3 * m2, m1 + 2 * m2}; }
    friend constexpr bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// Dimension of the irreducible G2 representation with highest weight
/// lambda, by the Weyl dimension formula evaluated exactly. Serves as the
/// sanity oracle for the representation data; throws std::invalid_argument
/// for non-dominant lambda.
std::int64_t weyl_dim_g2(HighestWeight lambda);

}  // namespace g2coh
