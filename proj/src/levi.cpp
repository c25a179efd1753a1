#include "g2coh/levi.hpp"

#include <stdexcept>

namespace g2coh {

std::int64_t cusp_dim(std::int64_t k) {
    if (k < 12 || k % 2 != 0 || k == 14) return 0;
    return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

LeviWeight levi_coordinates(const WeylElement& w, HighestWeight lambda, Parabolic p) {
    if (p == Parabolic::P0)
        throw std::invalid_argument("levi_coordinates: P must be a maximal parabolic");
    if (!is_kostant_representative(w, p))
        throw std::invalid_argument("levi_coordinates: " + w.name() + " is not in W^" +
                                    to_string(p));
    const FundamentalCoords f = to_fundamental(dot_action(w, lambda));
    LeviWeight lw;
    lw.parabolic = p;
    if (p == Parabolic::P1) {
        lw.a = f.x;
        lw.b = f.x + 2 * f.y;
    } else {
        lw.a = f.y;
        lw.b = 2 * f.x + 3 * f.y;
    }
    if (lambda.m1 >= 0 && lambda.m2 >= 0 && (lw.a - lw.b) % 2 != 0)
        throw std::logic_error("levi_coordinates: a and b must agree mod 2");
    return lw;
}

bool torus_class_survives(const WeylElement& w, HighestWeight lambda) {
    const FundamentalCoords f = to_fundamental(dot_action(w, lambda));
    return f.x % 2 == 0 && f.y % 2 == 0;
}

GL2FaceCohomology gl2_face_cohomology(const LeviWeight& lw) {
    GL2FaceCohomology result;
    if (lw.a < 0) throw std::invalid_argument("gl2_face_cohomology: negative Sym degree");
    if (lw.a % 2 != 0) return result;
    const bool det_odd = lw.det_power() % 2 != 0;
    if (lw.a == 0) {
        result.h0 = !det_odd;
        return result;
    }
    result.h1_inner_weight = lw.a + 2;
    result.h1_eis = det_odd;
    return result;
}

SurvivingSets surviving_sets(HighestWeight lambda) {
    SurvivingSets sets;
    const auto& group = WeylGroup::instance();
    for (const auto& w : group.elements())
        if (torus_class_survives(w, lambda)) sets.torus.push_back(w.label);
    for (Parabolic p : {Parabolic::P1, Parabolic::P2}) {
        auto& out = p == Parabolic::P1 ? sets.p1 : sets.p2;
        for (int label : kostant_representatives(p)) {
            const auto& w = group.element(label);
            if (!gl2_face_cohomology(levi_coordinates(w, lambda, p)).empty())
                out.push_back(label);
        }
    }
    return sets;
}

}  // namespace g2coh
