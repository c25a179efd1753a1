#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "g2coh/levi.hpp"
#include "g2coh/summand.hpp"

namespace g2coh {

enum class FacePart { TorusUnit, Invariant, Inner, EisBoundary };

std::string to_string(FacePart part);

/// One Kostant summand of a boundary face, located at total degree
/// levi_degree + len(rep). Torus classes have levi_degree 0; GL2 faces
/// contribute at Levi degrees 0 (Invariant) and 1 (Inner, EisBoundary).
struct FaceClass {
    Parabolic parabolic = Parabolic::P0;
    int rep_label = 1;
    int levi_degree = 0;
    FacePart part = FacePart::TorusUnit;
    std::int64_t cusp_weight = 0;  // Inner parts only
    int total_degree = 0;

    Summand summand() const;
};

/// The two-column first page: col0[q] holds the GL2-face classes of total
/// degree q (p = 0), col1[q] the surviving torus classes of length q
/// (p = 1). Entries vanish outside 0 <= q <= 6.
struct E1Page {
    std::array<std::vector<FaceClass>, GradedSpace::kDegrees> col0;
    std::array<std::vector<FaceClass>, GradedSpace::kDegrees> col1;
};

E1Page assemble_E1(HighestWeight lambda);

/// One component of the differential d1: an Invariant class restricts onto
/// the torus class of its own representative, an Eisenstein boundary class
/// onto the torus class at u*v (u the Levi reflection). Each source emits
/// at most one edge, kept only when the target survives the torus parity
/// rule.
struct D1Edge {
    FaceClass source;
    int target_label = 0;
};

std::vector<D1Edge> d1_edges(HighestWeight lambda);

/// Second page: kernel[q] = E2^{0,q}, cokernel[q] = E2^{1,q}. The rank of
/// d1 in degree q is the number of distinct surviving targets hit by at
/// least one edge; every restriction onto a surviving one-dimensional
/// target is nonzero.
struct E2Page {
    std::array<std::vector<Summand>, GradedSpace::kDegrees> kernel;
    std::array<std::vector<Summand>, GradedSpace::kDegrees> cokernel;
};

E2Page compute_E2(HighestWeight lambda);

/// H^q of the boundary: kernel[q] plus cokernel[q-1]. Raw symbolic output;
/// cusp summands of numeric dimension zero are kept.
GradedSpace boundary_cohomology(HighestWeight lambda);

/// The nine-way parity classification of (m1, m2):
///   1: m1 = 0 = m2          2: m1 = 0, m2 > 0 even   3: m1 = 0, m2 odd
///   4: m1 > 0 even, m2 = 0  5: both > 0 even         6: m1 > 0 even, m2 odd
///   7: m1 odd, m2 = 0       8: m1 odd, m2 > 0 even   9: both odd
int classify_case(HighestWeight lambda);

/// The closed-form boundary tables, hardcoded per case with the weights
/// substituted from (m1, m2). Case 1 is printed numerically at its single
/// point, so it lists only the unit classes.
GradedSpace boundary_reference_table(HighestWeight lambda);

}  // namespace g2coh
