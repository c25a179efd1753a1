#pragma once

#include <array>
#include <cstdint>

#include "g2coh/weight.hpp"

namespace g2coh::golden {

/// Integer affine form c1*m1 + c2*m2 + c in the highest-weight parameters.
struct Affine {
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;
    std::int64_t c = 0;

    std::int64_t eval(HighestWeight lambda) const {
        return m1 * lambda.m1 + m2 * lambda.m2 + c;
    }
};

struct AffinePair {
    Affine first;
    Affine second;
};

struct LabeledForm {
    int label = 0;  // Weyl element label 1..12
    AffinePair value;
};

/// Hand-transcribed golden data, independent of the engine. These tables
/// are never generated programmatically; they exist to catch regressions
/// in the group action and coordinate code.

/// w.lambda in simple-root coordinates, one row per Weyl element.
const std::array<LabeledForm, 12>& dot_action_simple_root();

/// w.lambda in fundamental coordinates (gamma1, gamma2).
const std::array<LabeledForm, 12>& dot_action_fundamental();

/// Levi coordinates (a, b) of w.lambda for the P1 representatives.
const std::array<LabeledForm, 6>& levi_forms_p1();

/// Levi coordinates (a, b) of w.lambda for the P2 representatives.
const std::array<LabeledForm, 6>& levi_forms_p2();

}  // namespace g2coh::golden
