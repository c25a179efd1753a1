#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2coh/golden_tables.hpp"
#include "g2coh/levi.hpp"

using namespace g2coh;

namespace {

const WeylGroup& group() { return WeylGroup::instance(); }

// Independent oracle for dim S_k at level one: the weight-k modular forms
// are the polynomials in E4 and E6, so dim M_k counts the lattice points
// 4a + 6b = k with a, b >= 0, and dim S_k = dim M_k - 1 for even k >= 4.
std::int64_t cusp_dim_oracle(std::int64_t k) {
    if (k < 4 || k % 2 != 0) return 0;
    std::int64_t monomials = 0;
    for (std::int64_t a = 0; 4 * a <= k; ++a)
        if ((k - 4 * a) % 6 == 0) ++monomials;
    return monomials - 1;
}

}  // namespace

TEST_CASE("cusp dimensions against the monomial-count oracle") {
    CHECK(cusp_dim(12) == 1);
    CHECK(cusp_dim(14) == 0);
    CHECK(cusp_dim(24) == 2);
    CHECK(cusp_dim(11) == 0);
    CHECK(cusp_dim(0) == 0);
    CHECK(cusp_dim(-8) == 0);

    for (std::int64_t k = 0; k <= 400; ++k) CHECK(cusp_dim(k) == cusp_dim_oracle(k));
    for (std::int64_t k = 1; k <= 400; k += 2) CHECK(cusp_dim(k) == 0);
    for (std::int64_t k = 4; k <= 400; k += 2) CHECK(cusp_dim(k + 12) == cusp_dim(k) + 1);
}

TEST_CASE("levi coordinates") {
    SUBCASE("examples") {
        const LeviWeight a = levi_coordinates(group().element(3), {1, 2}, Parabolic::P1);
        CHECK(a.a == 10);
        CHECK(a.b == 2);

        const LeviWeight b = levi_coordinates(group().element(4), {3, 1}, Parabolic::P2);
        CHECK(b.a == 7);
        CHECK(b.b == -1);

        const LeviWeight c = levi_coordinates(group().element(1), {0, 0}, Parabolic::P1);
        CHECK(c.a == 0);
        CHECK(c.b == 0);
    }

    SUBCASE("error paths") {
        CHECK_THROWS_AS(levi_coordinates(group().element(2), {0, 0}, Parabolic::P1),
                        std::invalid_argument);
        CHECK_THROWS_AS(levi_coordinates(group().element(1), {0, 0}, Parabolic::P0),
                        std::invalid_argument);
    }

    SUBCASE("golden coefficient lists and parity") {
        for (std::int64_t m1 = 0; m1 <= 8; ++m1)
            for (std::int64_t m2 = 0; m2 <= 8; ++m2) {
                const HighestWeight lambda{m1, m2};
                for (const auto& row : golden::levi_forms_p1()) {
                    const LeviWeight lw =
                        levi_coordinates(group().element(row.label), lambda, Parabolic::P1);
                    CHECK(lw.a == row.value.first.eval(lambda));
                    CHECK(lw.b == row.value.second.eval(lambda));
                    CHECK((lw.a - lw.b) % 2 == 0);
                }
                for (const auto& row : golden::levi_forms_p2()) {
                    const LeviWeight lw =
                        levi_coordinates(group().element(row.label), lambda, Parabolic::P2);
                    CHECK(lw.a == row.value.first.eval(lambda));
                    CHECK(lw.b == row.value.second.eval(lambda));
                    CHECK((lw.a - lw.b) % 2 == 0);
                }
            }
    }

    SUBCASE("involution coefficient identities") {
        const std::vector<std::pair<int, int>> p1_pairs = {{1, 11}, {3, 9}, {5, 7}};
        const std::vector<std::pair<int, int>> p2_pairs = {{1, 10}, {2, 8}, {4, 6}};
        for (std::int64_t m1 = 0; m1 <= 8; ++m1)
            for (std::int64_t m2 = 0; m2 <= 8; ++m2) {
                const HighestWeight lambda{m1, m2};
                for (const auto& [l, r] : p1_pairs) {
                    const auto lw = levi_coordinates(group().element(l), lambda, Parabolic::P1);
                    const auto rw = levi_coordinates(group().element(r), lambda, Parabolic::P1);
                    CHECK(lw.a == rw.a);
                    CHECK(lw.b + rw.b == -6);
                }
                for (const auto& [l, r] : p2_pairs) {
                    const auto lw = levi_coordinates(group().element(l), lambda, Parabolic::P2);
                    const auto rw = levi_coordinates(group().element(r), lambda, Parabolic::P2);
                    CHECK(lw.a == rw.a);
                    CHECK(lw.b + rw.b == -10);
                }
            }
    }
}

TEST_CASE("torus face survival") {
    CHECK(torus_class_survives(group().element(6), {0, 0}));
    CHECK(to_fundamental(dot_action(group().element(6), HighestWeight{0, 0})) ==
          FundamentalCoords{-6, 2});

    CHECK_FALSE(torus_class_survives(group().element(2), {0, 0}));
    CHECK(to_fundamental(dot_action(group().element(2), HighestWeight{0, 0})) ==
          FundamentalCoords{-2, 1});

    CHECK(torus_class_survives(group().element(11), {0, 1}));
    CHECK(to_fundamental(dot_action(group().element(11), HighestWeight{0, 1})) ==
          FundamentalCoords{0, -4});
}

TEST_CASE("gl2 face cohomology rules") {
    // (P1, w5) at lambda = 0: a = 4, b = -2, e = -3.
    const LeviWeight w5 = levi_coordinates(group().element(5), {0, 0}, Parabolic::P1);
    CHECK(w5.a == 4);
    CHECK(w5.b == -2);
    CHECK(w5.det_power() == -3);
    const auto face5 = gl2_face_cohomology(w5);
    CHECK_FALSE(face5.h0);
    CHECK(face5.h1_inner_weight == 6);
    CHECK(face5.h1_eis);

    // (P1, w11) at lambda = (0, 2): a = 0, e odd kills everything.
    const LeviWeight w11a = levi_coordinates(group().element(11), {0, 2}, Parabolic::P1);
    CHECK(w11a.a == 0);
    CHECK(w11a.b == -10);
    CHECK(gl2_face_cohomology(w11a).empty());

    // (P1, w11) at lambda = (0, 1): a = 0, e even keeps the unit class.
    const LeviWeight w11b = levi_coordinates(group().element(11), {0, 1}, Parabolic::P1);
    CHECK(w11b.a == 0);
    CHECK(w11b.b == -8);
    const auto face11 = gl2_face_cohomology(w11b);
    CHECK(face11.h0);
    CHECK_FALSE(face11.h1_inner_weight.has_value());
    CHECK_FALSE(face11.h1_eis);

    // Odd Sym degree kills everything.
    CHECK(gl2_face_cohomology({Parabolic::P1, 3, 1}).empty());
    // Negative Sym degrees never arise from dominant weights.
    CHECK_THROWS_AS(gl2_face_cohomology({Parabolic::P1, -2, 0}), std::invalid_argument);
    // Even degree >= 2 with even det power: inner part only.
    const auto inner_only = gl2_face_cohomology({Parabolic::P2, 4, -4});
    CHECK(inner_only.h1_inner_weight == 6);
    CHECK_FALSE(inner_only.h1_eis);
    CHECK_FALSE(inner_only.h0);
}

TEST_CASE("surviving sets") {
    const SurvivingSets zero = surviving_sets({0, 0});
    CHECK(zero.torus == std::vector<int>({1, 6, 7, 12}));
    CHECK(zero.p1 == std::vector<int>({1, 5, 7}));
    CHECK(zero.p2 == std::vector<int>({1, 4, 6}));

    // m2 odd, m1 = 0: the length-0 torus class dies (w1 . lambda has an
    // odd fundamental coordinate) and its coset partner w2 survives.
    const SurvivingSets odd = surviving_sets({0, 1});
    CHECK(odd.torus == std::vector<int>({2, 4, 9, 11}));
    CHECK(odd.p1 == std::vector<int>({3, 9, 11}));
    CHECK(odd.p2 == std::vector<int>({2, 4, 6, 8}));

    const SurvivingSets both_odd = surviving_sets({1, 1});
    CHECK(both_odd.torus.empty());
    CHECK(both_odd.p1.empty());
    CHECK(both_odd.p2.empty());
}

TEST_CASE("exactly one Eisenstein member per surviving pair") {
    const std::vector<std::pair<int, int>> p1_pairs = {{1, 11}, {3, 9}, {5, 7}};
    const std::vector<std::pair<int, int>> p2_pairs = {{1, 10}, {2, 8}, {4, 6}};
    for (std::int64_t m1 = 0; m1 <= 8; ++m1)
        for (std::int64_t m2 = 0; m2 <= 8; ++m2) {
            const HighestWeight lambda{m1, m2};
            for (Parabolic p : {Parabolic::P1, Parabolic::P2}) {
                const auto& pairs = p == Parabolic::P1 ? p1_pairs : p2_pairs;
                for (const auto& [l, r] : pairs) {
                    const auto lw = levi_coordinates(group().element(l), lambda, p);
                    const auto rw = levi_coordinates(group().element(r), lambda, p);
                    if (lw.a % 2 != 0 || lw.a < 2) continue;
                    const bool left_eis = lw.det_power() % 2 != 0;
                    const bool right_eis = rw.det_power() % 2 != 0;
                    CHECK(left_eis != right_eis);
                }
            }
        }
}

TEST_CASE("Eisenstein targets always survive the torus parity rule") {
    for (std::int64_t m1 = 0; m1 <= 8; ++m1)
        for (std::int64_t m2 = 0; m2 <= 8; ++m2) {
            const HighestWeight lambda{m1, m2};
            for (Parabolic p : {Parabolic::P1, Parabolic::P2}) {
                const auto& s = group().generator(levi_reflection(p));
                for (int label : kostant_representatives(p)) {
                    const auto& v = group().element(label);
                    const auto face = gl2_face_cohomology(levi_coordinates(v, lambda, p));
                    if (face.h1_eis) CHECK(torus_class_survives(group().product(s, v), lambda));
                    if (face.h0) CHECK(torus_class_survives(v, lambda));
                }
            }
        }
}
