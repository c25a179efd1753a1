#include "g2coh/golden_tables.hpp"

namespace g2coh::golden {

const std::array<LabeledForm, 12>& dot_action_simple_root() {
    static const std::array<LabeledForm, 12> rows = {{
        {1, {{2, 3, 0}, {1, 2, 0}}},
        {2, {{1, 3, -1}, {1, 2, 0}}},
        {3, {{2, 3, 0}, {1, 1, -1}}},
        {4, {{1, 0, -4}, {1, 1, -1}}},
        {5, {{1, 3, -1}, {0, 1, -2}}},
        {6, {{-1, 0, -6}, {0, 1, -2}}},
        {7, {{1, 0, -4}, {0, -1, -4}}},
        {8, {{-1, -3, -9}, {0, -1, -4}}},
        {9, {{-1, 0, -6}, {-1, -1, -5}}},
        {10, {{-2, -3, -10}, {-1, -1, -5}}},
        {11, {{-1, -3, -9}, {-1, -2, -6}}},
        {12, {{-2, -3, -10}, {-1, -2, -6}}},
    }};
    return rows;
}

const std::array<LabeledForm, 12>& dot_action_fundamental() {
    static const std::array<LabeledForm, 12> rows = {{
        {1, {{1, 0, 0}, {0, 1, 0}}},
        {2, {{-1, 0, -2}, {1, 1, 1}}},
        {3, {{1, 3, 3}, {0, -1, -2}}},
        {4, {{-1, -3, -5}, {1, 2, 2}}},
        {5, {{2, 3, 4}, {-1, -1, -3}}},
        {6, {{-2, -3, -6}, {1, 2, 2}}},
        {7, {{2, 3, 4}, {-1, -2, -4}}},
        {8, {{-2, -3, -6}, {1, 1, 1}}},
        {9, {{1, 3, 3}, {-1, -2, -4}}},
        {10, {{-1, -3, -5}, {0, 1, 0}}},
        {11, {{1, 0, 0}, {-1, -1, -3}}},
        {12, {{-1, 0, -2}, {0, -1, -2}}},
    }};
    return rows;
}

const std::array<LabeledForm, 6>& levi_forms_p1() {
    static const std::array<LabeledForm, 6> rows = {{
        {1, {{1, 0, 0}, {1, 2, 0}}},
        {3, {{1, 3, 3}, {1, 1, -1}}},
        {5, {{2, 3, 4}, {0, 1, -2}}},
        {7, {{2, 3, 4}, {0, -1, -4}}},
        {9, {{1, 3, 3}, {-1, -1, -5}}},
        {11, {{1, 0, 0}, {-1, -2, -6}}},
    }};
    return rows;
}

const std::array<LabeledForm, 6>& levi_forms_p2() {
    static const std::array<LabeledForm, 6> rows = {{
        {1, {{0, 1, 0}, {2, 3, 0}}},
        {2, {{1, 1, 1}, {1, 3, -1}}},
        {4, {{1, 2, 2}, {1, 0, -4}}},
        {6, {{1, 2, 2}, {-1, 0, -6}}},
        {8, {{1, 1, 1}, {-1, -3, -9}}},
        {10, {{0, 1, 0}, {-2, -3, -10}}},
    }};
    return rows;
}

}  // namespace g2coh::golden
