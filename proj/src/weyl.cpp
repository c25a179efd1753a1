#include "g2coh/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace g2coh {

namespace {

Mat2 word_matrix(const std::vector<Gen>& word) {
    Mat2 m = Mat2::identity();
    for (Gen g : word) m = m * generator_matrix(g);
    return m;
}

// Canonical reduced words, one element per length with ties ordered as in
// the reference table: w1 = 1, w2 = s1, w3 = s2, ..., w12 = s1s2s1s2s1s2.
const std::vector<std::vector<Gen>>& canonical_words() {
    using enum Gen;
    static const std::vector<std::vector<Gen>> words = {
        {},
        {S1},
        {S2},
        {S1, S2},
        {S2, S1},
        {S1, S2, S1},
        {S2, S1, S2},
        {S1, S2, S1, S2},
        {S2, S1, S2, S1},
        {S1, S2, S1, S2, S1},
        {S2, S1, S2, S1, S2},
        {S1, S2, S1, S2, S1, S2},
    };
    return words;
}

}  // namespace

std::string to_string(Parabolic p) {
    switch (p) {
        case Parabolic::P0: return "P0";
        case Parabolic::P1: return "P1";
        case Parabolic::P2: return "P2";
    }
    return "?";
}

int dim_nilradical(Parabolic p) { return p == Parabolic::P0 ? 6 : 5; }

std::int64_t rho_central(Parabolic p) {
    switch (p) {
        case Parabolic::P1: return 3;
        case Parabolic::P2: return 5;
        case Parabolic::P0: break;
    }
    throw std::invalid_argument("rho_central: undefined for the minimal parabolic");
}

Gen levi_reflection(Parabolic p) {
    switch (p) {
        case Parabolic::P1: return Gen::S1;
        case Parabolic::P2: return Gen::S2;
        case Parabolic::P0: break;
    }
    throw std::invalid_argument("levi_reflection: the Levi Weyl group of P0 is trivial");
}

std::vector<Weight> nilradical_roots(Parabolic p) {
    std::vector<Weight> roots;
    for (const Weight& alpha : positive_roots()) {
        if (p == Parabolic::P1 && alpha == kAlpha1) continue;
        if (p == Parabolic::P2 && alpha == kAlpha2) continue;
        roots.push_back(alpha);
    }
    return roots;
}

WeylGroup::WeylGroup() {
    const auto& words = canonical_words();
    elems_.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        WeylElement w;
        w.label = static_cast<int>(i) + 1;
        w.word = words[i];
        w.matrix = word_matrix(words[i]);
        w.length = static_cast<int>(words[i].size());
        elems_.push_back(std::move(w));
    }

    // The twelve matrices are distinct and closed under multiplication.
    std::set<std::array<std::int64_t, 4>> seen;
    for (const auto& w : elems_)
        seen.insert({w.matrix.m00, w.matrix.m01, w.matrix.m10, w.matrix.m11});
    if (seen.size() != 12) throw std::logic_error("WeylGroup: canonical words collide");
    for (const auto& u : elems_)
        for (const auto& v : elems_) (void)by_matrix(u.matrix * v.matrix);
}

const WeylGroup& WeylGroup::instance() {
    static const WeylGroup group;
    return group;
}

const WeylElement& WeylGroup::element(int label) const {
    if (label < 1 || label > 12) throw std::out_of_range("WeylGroup: label out of range");
    return elems_[static_cast<std::size_t>(label - 1)];
}

const WeylElement& WeylGroup::generator(Gen g) const {
    return g == Gen::S1 ? element(2) : element(3);
}

const WeylElement& WeylGroup::by_matrix(const Mat2& m) const {
    for (const auto& w : elems_)
        if (w.matrix == m) return w;
    throw std::logic_error("WeylGroup: matrix is not a group element");
}

Weight dot_action(const WeylElement& w, Weight nu) {
    return w.matrix.apply(nu + kRho) - kRho;
}

Weight dot_action(const WeylElement& w, HighestWeight lambda) {
    return dot_action(w, lambda.weight());
}

std::vector<Weight> inversion_set(const WeylElement& w) {
    std::vector<Weight> inversions;
    const Mat2 winv = w.matrix.inverse();
    for (const Weight& alpha : positive_roots())
        if (is_negative_root(winv.apply(alpha))) inversions.push_back(alpha);
    return inversions;
}

bool is_kostant_representative(const WeylElement& w, Parabolic p) {
    const auto allowed = nilradical_roots(p);
    for (const Weight& alpha : positive_roots()) {
        const Weight image = w.matrix.apply(-alpha);
        if (!is_positive_root(image)) continue;
        if (std::find(allowed.begin(), allowed.end(), image) == allowed.end()) return false;
    }
    return true;
}

bool has_minimal_coset_length(const WeylElement& w, Parabolic p) {
    if (p == Parabolic::P0) return true;
    const auto& group = WeylGroup::instance();
    const WeylElement& s = group.generator(levi_reflection(p));
    return group.product(s, w).length > w.length;
}

std::vector<int> kostant_representatives(Parabolic p) {
    std::vector<int> labels;
    for (const auto& w : WeylGroup::instance().elements())
        if (is_kostant_representative(w, p)) labels.push_back(w.label);
    std::sort(labels.begin(), labels.end(), [](int l, int r) {
        const auto& group = WeylGroup::instance();
        const auto& wl = group.element(l);
        const auto& wr = group.element(r);
        return wl.length != wr.length ? wl.length < wr.length : l < r;
    });
    return labels;
}

std::pair<const WeylElement*, const WeylElement*> decompose_levi(const WeylElement& w,
                                                                 Parabolic p) {
    const auto& group = WeylGroup::instance();
    if (p == Parabolic::P0) return {&group.identity(), &group.element(w.label)};
    if (is_kostant_representative(w, p)) return {&group.identity(), &group.element(w.label)};
    const WeylElement& s = group.generator(levi_reflection(p));
    const WeylElement& v = group.product(s, w);
    if (!is_kostant_representative(v, p) || v.length + 1 != w.length)
        throw std::logic_error("decompose_levi: coset has no short representative");
    return {&s, &v};
}

const WeylElement& involution(const WeylElement& w, Parabolic p) {
    if (p == Parabolic::P0)
        throw std::invalid_argument("involution: defined for maximal parabolics only");
    if (!is_kostant_representative(w, p))
        throw std::invalid_argument("involution: " + w.name() + " is not in W^" +
                                    (p == Parabolic::P1 ? std::string("P1") : std::string("P2")));
    const auto& group = WeylGroup::instance();
    const Mat2 wm = generator_matrix(levi_reflection(p));
    const WeylElement& result = group.by_matrix(wm * w.matrix * group.longest().matrix);
    if (!is_kostant_representative(result, p) ||
        result.length + w.length != dim_nilradical(p))
        throw std::logic_error("involution: image violates the length identity");
    return result;
}

}  // namespace g2coh
