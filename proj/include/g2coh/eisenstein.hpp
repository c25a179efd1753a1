#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2coh/loracle.hpp"
#include "g2coh/spectral.hpp"

namespace g2coh {

/// A dual pair {w, w'} of Kostant representatives of a maximal parabolic
/// with len(w) >= 3 (so len(w) + len(w') = 5), carrying the shared Sym
/// degree a and cusp weight k = a + 2. Only pairs with a even and >= 2
/// index inner classes. Exactly one member has odd determinant power; its
/// face carries the Eisenstein boundary class.
struct InnerPair {
    Parabolic parabolic = Parabolic::P1;
    int long_label = 0;
    int short_label = 0;
    std::int64_t sym_degree = 0;
    std::int64_t cusp_weight = 0;
    int eis_label = 0;
};

std::vector<InnerPair> inner_pairs(HighestWeight lambda);

/// The configurations where the constant term acquires a simple pole at
/// the special point: (P1, w7, m2 = 0) and (P2, w6, m1 = 0). In these
/// cases the pair's Eisenstein classes split by the central L-value:
/// eigenforms with nonvanishing value land at degree 3, the rest at
/// degree 4.
bool exceptional_residual(const InnerPair& pair, HighestWeight lambda);

/// The L-function governing the split: standard for P1, Sym^3 for P2.
LKind residual_l_kind(Parabolic p);

/// The single unit class contributed by the minimal boundary, present
/// exactly in the cases where H(boundary) and its inner part differ:
/// degree 0 in case 1, degree 5 in cases 3 and 7, degree 6 in case 5.
std::optional<std::pair<int, Summand>> minimal_boundary_class(HighestWeight lambda);

/// Eisenstein cohomology as a graded formal sum. Each inner pair places
/// S_k at degree 1 + len(long rep); an exceptional-residual pair instead
/// emits the two central-value slices at degrees 3 and 4. The split
/// summands are always emitted symbolically; concrete oracles resolve
/// their sizes at dimension time. Throws OracleError if an Explicit
/// oracle lacks a required (lkind, k) entry.
GradedSpace eisenstein_cohomology(HighestWeight lambda, const LOracle& oracle);

/// The closed-form tables, hardcoded per case with the central-value
/// splits. Case 1 is printed numerically at its single point. The split
/// weight in cases 4 and 7 is 2*m1 + 6 (see reference_notes).
GradedSpace eisenstein_reference_table(HighestWeight lambda, const LOracle& oracle);

/// Output annotations: flags the 2*m1+6 subscript in cases 4 and 7, whose
/// commonly printed m2-variant cannot be right there since m2 = 0.
std::vector<std::string> reference_notes(HighestWeight lambda);

/// Dimensions by degree. Unit classes count 1, full cusp summands
/// dim S_k, split slices their oracle sizes. Under the symbolic oracle a
/// split is counted by the all-nonzero convention (see notes emitted by
/// the record layer).
std::array<std::int64_t, GradedSpace::kDegrees> dims(const GradedSpace& g, const LOracle& oracle);

/// Dimensions of a split-free graded space (boundary side); throws if a
/// split summand is present.
std::array<std::int64_t, GradedSpace::kDegrees> dims(const GradedSpace& g);

}  // namespace g2coh
