#include "g2coh/eisenstein.hpp"

#include <stdexcept>

namespace g2coh {

namespace {

// Touch the oracle for every split summand so Explicit tables missing a
// required key fail up front, as the interface contract demands.
void check_oracle_coverage(const GradedSpace& g, const LOracle& oracle) {
    if (oracle.mode() != LOracle::Mode::Explicit) return;
    for (int q = 0; q < GradedSpace::kDegrees; ++q)
        for (const Summand& s : g.at(q))
            if (!s.unit && s.selector != Selector::All) (void)oracle.split(s.lkind, s.k);
}

}  // namespace

std::vector<InnerPair> inner_pairs(HighestWeight lambda) {
    std::vector<InnerPair> pairs;
    const auto& group = WeylGroup::instance();
    for (Parabolic p : {Parabolic::P1, Parabolic::P2}) {
        for (int label : kostant_representatives(p)) {
            const auto& w = group.element(label);
            const auto& wp = involution(w, p);
            if (w.length < wp.length) continue;  // keep W^P_> only
            const LeviWeight lw = levi_coordinates(w, lambda, p);
            const LeviWeight lws = levi_coordinates(wp, lambda, p);
            if (lw.a != lws.a) throw std::logic_error("inner_pairs: Sym degrees differ");
            if (lw.a % 2 != 0 || lw.a < 2) continue;
            const bool long_eis = lw.det_power() % 2 != 0;
            const bool short_eis = lws.det_power() % 2 != 0;
            if (long_eis == short_eis)
                throw std::logic_error("inner_pairs: pair lacks a unique Eisenstein member");
            InnerPair pair;
            pair.parabolic = p;
            pair.long_label = w.label;
            pair.short_label = wp.label;
            pair.sym_degree = lw.a;
            pair.cusp_weight = lw.a + 2;
            pair.eis_label = long_eis ? w.label : wp.label;
            pairs.push_back(pair);
        }
    }
    return pairs;
}

bool exceptional_residual(const InnerPair& pair, HighestWeight lambda) {
    if (pair.parabolic == Parabolic::P1) return pair.long_label == 7 && lambda.m2 == 0;
    if (pair.parabolic == Parabolic::P2) return pair.long_label == 6 && lambda.m1 == 0;
    return false;
}

LKind residual_l_kind(Parabolic p) {
    switch (p) {
        case Parabolic::P1: return LKind::Std;
        case Parabolic::P2: return LKind::Sym3;
        case Parabolic::P0: break;
    }
    throw std::invalid_argument("residual_l_kind: maximal parabolics only");
}

std::optional<std::pair<int, Summand>> minimal_boundary_class(HighestWeight lambda) {
    switch (classify_case(lambda)) {
        case 1: return std::make_pair(0, Summand::make_unit());
        case 3:
        case 7: return std::make_pair(5, Summand::make_unit());
        case 5: return std::make_pair(6, Summand::make_unit());
        default: return std::nullopt;
    }
}

GradedSpace eisenstein_cohomology(HighestWeight lambda, const LOracle& oracle) {
    GradedSpace g;
    const auto& group = WeylGroup::instance();
    for (const InnerPair& pair : inner_pairs(lambda)) {
        if (exceptional_residual(pair, lambda)) {
            const LKind kind = residual_l_kind(pair.parabolic);
            g.add(3, Summand::make_cusp(pair.cusp_weight, pair.parabolic, pair.short_label,
                                        Selector::CentralNonzero, kind));
            g.add(4, Summand::make_cusp(pair.cusp_weight, pair.parabolic, pair.long_label,
                                        Selector::CentralZero, kind));
        } else {
            const int degree = 1 + group.element(pair.long_label).length;
            g.add(degree, Summand::make_cusp(pair.cusp_weight, pair.parabolic, pair.long_label));
        }
    }
    if (auto minimal = minimal_boundary_class(lambda)) g.add(minimal->first, minimal->second);
    g.sort();
    check_oracle_coverage(g, oracle);
    return g;
}

GradedSpace eisenstein_reference_table(HighestWeight lambda, const LOracle& oracle) {
    const std::int64_t m1 = lambda.m1;
    const std::int64_t m2 = lambda.m2;
    GradedSpace g;
    auto unit = [] { return Summand::make_unit(); };
    auto cusp = [](std::int64_t k) { return Summand::make_cusp(k); };
    auto split = [&g](std::int64_t k, LKind kind) {
        g.add(3, Summand::make_cusp(k, Parabolic::P0, 0, Selector::CentralNonzero, kind));
        g.add(4, Summand::make_cusp(k, Parabolic::P0, 0, Selector::CentralZero, kind));
    };

    switch (classify_case(lambda)) {
        case 1:
            g.add(0, unit());
            break;
        case 2:
            split(2 * m2 + 4, LKind::Sym3);
            g.add(4, cusp(3 * m2 + 6));
            g.add(6, cusp(m2 + 2));
            break;
        case 3:
            split(2 * m2 + 4, LKind::Sym3);
            g.add(5, cusp(3 * m2 + 5));
            g.add(5, cusp(m2 + 3));
            g.add(5, unit());
            break;
        case 4:
            split(2 * m1 + 6, LKind::Std);
            g.add(4, cusp(m1 + 4));
            g.add(6, cusp(m1 + 2));
            break;
        case 5:
            g.add(4, cusp(2 * m1 + 3 * m2 + 6));
            g.add(4, cusp(m1 + 2 * m2 + 4));
            g.add(6, cusp(m1 + 2));
            g.add(6, cusp(m2 + 2));
            g.add(6, unit());
            break;
        case 6:
            g.add(4, cusp(m1 + 2 * m2 + 4));
            g.add(5, cusp(m1 + 3 * m2 + 5));
            g.add(5, cusp(m1 + m2 + 3));
            g.add(6, cusp(m1 + 2));
            break;
        case 7:
            split(2 * m1 + 6, LKind::Std);
            g.add(5, cusp(m1 + 5));
            g.add(5, cusp(m1 + 3));
            g.add(5, unit());
            break;
        case 8:
            g.add(4, cusp(2 * m1 + 3 * m2 + 6));
            g.add(5, cusp(m1 + 3 * m2 + 5));
            g.add(5, cusp(m1 + m2 + 3));
            g.add(6, cusp(m2 + 2));
            break;
        case 9:
            break;
    }
    g.sort();
    check_oracle_coverage(g, oracle);
    return g;
}

std::vector<std::string> reference_notes(HighestWeight lambda) {
    std::vector<std::string> notes;
    const int c = classify_case(lambda);
    if (c == 4 || c == 7)
        notes.push_back(
            "central-value split uses weight 2*m1+6 = " + std::to_string(2 * lambda.m1 + 6) +
            "; the m2-form of this subscript seen in some prints of the table cannot apply here "
            "(m2 = 0)");
    return notes;
}

std::array<std::int64_t, GradedSpace::kDegrees> dims(const GradedSpace& g, const LOracle& oracle) {
    std::array<std::int64_t, GradedSpace::kDegrees> out{};
    for (int q = 0; q < GradedSpace::kDegrees; ++q) {
        std::int64_t total = 0;
        for (const Summand& s : g.at(q)) {
            if (s.unit) {
                total += 1;
            } else if (s.selector == Selector::All) {
                total += cusp_dim(s.k);
            } else {
                const SplitCount count = oracle.concrete()
                                             ? oracle.split(s.lkind, s.k)
                                             : LOracle::all_nonzero().split(s.lkind, s.k);
                total += s.selector == Selector::CentralZero ? count.zero : count.nonzero;
            }
        }
        out[static_cast<std::size_t>(q)] = total;
    }
    return out;
}

std::array<std::int64_t, GradedSpace::kDegrees> dims(const GradedSpace& g) {
    for (int q = 0; q < GradedSpace::kDegrees; ++q)
        for (const Summand& s : g.at(q))
            if (!s.unit && s.selector != Selector::All)
                throw std::invalid_argument("dims: split summand needs an L-oracle");
    return dims(g, LOracle::all_nonzero());
}

}  // namespace g2coh
