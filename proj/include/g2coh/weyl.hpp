#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "g2coh/weight.hpp"

namespace g2coh {

enum class Gen : std::uint8_t { S1 = 1, S2 = 2 };

/// 2x2 integer matrix acting on simple-root coordinates (column vectors).
struct Mat2 {
    std::int64_t m00 = 1, m01 = 0;
    std::int64_t m10 = 0, m11 = 1;

    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;

    friend constexpr Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.m00 * r.m00 + l.m01 * r.m10, l.m00 * r.m01 + l.m01 * r.m11,
                l.m10 * r.m00 + l.m11 * r.m10, l.m10 * r.m01 + l.m11 * r.m11};
    }

    constexpr Weight apply(Weight w) const {
        return {m00 * w.a + m01 * w.b, m10 * w.a + m11 * w.b};
    }

    constexpr std::int64_t det() const { return m00 * m11 - m01 * m10; }

    /// Inverse, valid for det = +-1.
    constexpr Mat2 inverse() const {
        const std::int64_t d = det();
        return {m11 / d, -m01 / d, -m10 / d, m00 / d};
    }

    static constexpr Mat2 identity() { return {}; }
};

/// Generator action in simple-root coordinates:
///   s1: (a, b) -> (3b - a, b),   s2: (a, b) -> (a, a - b).
constexpr Mat2 generator_matrix(Gen g) {
    return g == Gen::S1 ? Mat2{-1, 3, 0, 1} : Mat2{1, 0, 1, -1};
}

/// One of the twelve Weyl group elements. Elements are identified by
/// matrix; the stored word is the canonical reduced expression of the
/// reference table (labels w1..w12), and length equals both the word
/// length and the inversion count.
struct WeylElement {
    int label = 1;  // 1..12
    std::vector<Gen> word;
    Mat2 matrix;
    int length = 0;

    std::string name() const { return "w" + std::to_string(label); }
};

enum class Parabolic { P0, P1, P2 };

std::string to_string(Parabolic p);

/// Dimension of the nilpotent radical: 6 for the Borel, 5 for the maximal
/// parabolics. Equals the maximal length in the corresponding Kostant set.
int dim_nilradical(Parabolic p);

/// Central coordinate of rho in the Levi basis: rho = gamma^M + rho_b * kappa^M,
/// rho_b = 3 for P1 and 5 for P2.
std::int64_t rho_central(Parabolic p);

/// The simple reflection generating the Levi Weyl group of a maximal
/// parabolic: s1 for P1, s2 for P2. Throws for P0.
Gen levi_reflection(Parabolic p);

/// Roots of the nilpotent radical: all positive roots for P0, all but the
/// Levi simple root for P1/P2.
std::vector<Weight> nilradical_roots(Parabolic p);

/// The full Weyl group of G2, generated once and shared read-only.
class WeylGroup {
  public:
    static const WeylGroup& instance();

    const std::vector<WeylElement>& elements() const { return elems_; }
    const WeylElement& element(int label) const;  // label in 1..12
    const WeylElement& identity() const { return element(1); }
    const WeylElement& longest() const { return element(12); }
    const WeylElement& generator(Gen g) const;

    const WeylElement& by_matrix(const Mat2& m) const;
    const WeylElement& product(const WeylElement& u, const WeylElement& v) const {
        return by_matrix(u.matrix * v.matrix);
    }

  private:
    WeylGroup();
    std::vector<WeylElement> elems_;
};

/// Shifted action w . lambda = w(lambda + rho) - rho.
Weight dot_action(const WeylElement& w, Weight nu);
Weight dot_action(const WeylElement& w, HighestWeight lambda);

/// Inversion set {alpha in Phi+ : w^{-1} alpha in -Phi+}; its size equals
/// the length of w.
std::vector<Weight> inversion_set(const WeylElement& w);

/// Kostant's criterion: w(Phi-) \cap Phi+ is contained in the roots of the
/// nilpotent radical of P.
bool is_kostant_representative(const WeylElement& w, Parabolic p);

/// Equivalent criterion: w has minimal length in its coset W_M * w.
bool has_minimal_coset_length(const WeylElement& w, Parabolic p);

/// Labels of the Kostant representatives W^P, ordered by length.
std::vector<int> kostant_representatives(Parabolic p);

/// Unique factorization w = u * v with v in W^P and u in the Levi Weyl
/// group, satisfying len(w) = len(u) + len(v). For P0 the Levi factor is
/// always the identity.
std::pair<const WeylElement*, const WeylElement*> decompose_levi(const WeylElement& w,
                                                                 Parabolic p);

/// The pairing w -> w' = w_M * w * w_{G2} on W^P for maximal P;
/// len(w) + len(w') = dim N_P = 5. Throws if w is not in W^P.
const WeylElement& involution(const WeylElement& w, Parabolic p);

}  // namespace g2coh
