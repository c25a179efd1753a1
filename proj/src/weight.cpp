#include "g2coh/weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2coh {

const std::array<Weight, 6>& positive_roots() {
    static const std::array<Weight, 6> roots = {{
        {1, 0},  // alpha1
        {0, 1},  // alpha2
        {1, 1},  // alpha1 + alpha2
        {2, 1},  // 2 alpha1 + alpha2
        {3, 1},  // 3 alpha1 + alpha2
        {3, 2},  // 3 alpha1 + 2 alpha2
    }};
    return roots;
}

bool is_positive_root(Weight w) {
    const auto& roots = positive_roots();
    return std::find(roots.begin(), roots.end(), w) != roots.end();
}

bool is_negative_root(Weight w) { return is_positive_root(-w); }

std::int64_t weyl_dim_g2(HighestWeight lambda) {
    if (lambda.m1 < 0 || lambda.m2 < 0)
        throw std::invalid_argument("weyl_dim_g2: highest weight must be dominant");
    const Weight shifted = lambda.weight() + kRho;
    std::int64_t num = 1;
    std::int64_t den = 1;
    for (const Weight& alpha : positive_roots()) {
        num *= gram(shifted, alpha);
        den *= gram(kRho, alpha);
    }
    if (den == 0 || num % den != 0)
        throw std::logic_error("weyl_dim_g2: product is not integral");
    return num / den;
}

}  // namespace g2coh
