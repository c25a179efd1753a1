#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "g2coh/weyl.hpp"

namespace g2coh {

/// dim S_k: the space of level-one holomorphic cusp forms of weight k.
/// Zero for k < 12, odd k and k = 14; otherwise floor(k/12) - 1 when
/// k = 2 mod 12 and floor(k/12) when not.
std::int64_t cusp_dim(std::int64_t k);

/// Coordinates of w.lambda in the Levi basis of a maximal parabolic:
/// w.lambda = a * gamma^M + b * kappa^M. The Levi module is
/// Sym^a V (x) Det^e with e = (b - a)/2; a and b are congruent mod 2 for
/// every Kostant representative and dominant lambda, so e is an integer.
struct LeviWeight {
    Parabolic parabolic = Parabolic::P1;
    std::int64_t a = 0;
    std::int64_t b = 0;

    std::int64_t det_power() const { return (b - a) / 2; }
};

/// Levi coordinates of w.lambda. With (x, y) the fundamental coordinates
/// of w.lambda: a = x, b = x + 2y for P1 and a = y, b = 2x + 3y for P2.
/// Throws std::invalid_argument unless P is maximal and w is in W^P.
LeviWeight levi_coordinates(const WeylElement& w, HighestWeight lambda, Parabolic p);

/// A torus face carries one unit class (in degree 0) exactly when both
/// fundamental coordinates of w.lambda are even.
bool torus_class_survives(const WeylElement& w, HighestWeight lambda);

/// Cohomology of a GL2 face in the Levi module Sym^a V (x) Det^e:
///   a odd                -> everything vanishes;
///   a = 0, e odd         -> everything vanishes;
///   a = 0, e even        -> one unit class in degree 0;
///   a >= 2 even          -> inner part S_{a+2} in degree 1, plus one
///                           Eisenstein unit class in degree 1 iff e odd.
struct GL2FaceCohomology {
    bool h0 = false;
    std::optional<std::int64_t> h1_inner_weight;
    bool h1_eis = false;

    bool empty() const { return !h0 && !h1_inner_weight.has_value() && !h1_eis; }
};

GL2FaceCohomology gl2_face_cohomology(const LeviWeight& lw);

/// Surviving Weyl representatives per face: torus holds the labels of
/// W-bar^0, p1/p2 those of W-bar^1 and W-bar^2 (ordered by length).
struct SurvivingSets {
    std::vector<int> torus;
    std::vector<int> p1;
    std::vector<int> p2;
};

SurvivingSets surviving_sets(HighestWeight lambda);

}  // namespace g2coh
