#include "g2coh/summand.hpp"

#include <algorithm>
#include <stdexcept>

#include "g2coh/levi.hpp"

namespace g2coh {

std::string to_string(Selector s) {
    switch (s) {
        case Selector::All: return "all";
        case Selector::CentralZero: return "central-zero";
        case Selector::CentralNonzero: return "central-nonzero";
    }
    return "?";
}

std::string to_string(LKind k) {
    switch (k) {
        case LKind::None: return "none";
        case LKind::Std: return "std";
        case LKind::Sym3: return "sym3";
    }
    return "?";
}

std::string to_string(const Summand& s) {
    if (s.unit) return "Q";
    std::string out = "S_" + std::to_string(s.k);
    if (s.selector != Selector::All)
        out += "[" + to_string(s.lkind) + " " +
               (s.selector == Selector::CentralZero ? "L(1/2)=0" : "L(1/2)!=0") + "]";
    return out;
}

void GradedSpace::add(int degree, Summand s) {
    if (degree < 0 || degree >= kDegrees)
        throw std::out_of_range("GradedSpace: degree out of range 0..7");
    degrees_[static_cast<std::size_t>(degree)].push_back(s);
}

const std::vector<Summand>& GradedSpace::at(int degree) const {
    if (degree < 0 || degree >= kDegrees)
        throw std::out_of_range("GradedSpace: degree out of range 0..7");
    return degrees_[static_cast<std::size_t>(degree)];
}

bool GradedSpace::empty() const {
    for (const auto& d : degrees_)
        if (!d.empty()) return false;
    return true;
}

void GradedSpace::sort() {
    for (auto& d : degrees_)
        std::sort(d.begin(), d.end(),
                  [](const Summand& l, const Summand& r) { return l.order_key() < r.order_key(); });
}

GradedSpace GradedSpace::drop_zero_dimensional() const {
    GradedSpace out;
    for (int q = 0; q < kDegrees; ++q)
        for (const Summand& s : degrees_[static_cast<std::size_t>(q)])
            if (s.unit || cusp_dim(s.k) > 0) out.add(q, s);
    return out;
}

bool same_classes(const GradedSpace& l, const GradedSpace& r) {
    for (int q = 0; q < GradedSpace::kDegrees; ++q) {
        auto keys = [q](const GradedSpace& g) {
            std::vector<std::tuple<bool, std::int64_t, Selector, LKind>> ks;
            for (const Summand& s : g.at(q)) ks.push_back(s.value_key());
            std::sort(ks.begin(), ks.end());
            return ks;
        };
        if (keys(l) != keys(r)) return false;
    }
    return true;
}

std::string to_string(const GradedSpace& g) {
    std::string out;
    for (int q = 0; q < GradedSpace::kDegrees; ++q) {
        if (g.at(q).empty()) continue;
        out += "H^" + std::to_string(q) + " = ";
        bool first = true;
        for (const Summand& s : g.at(q)) {
            if (!first) out += " + ";
            out += to_string(s);
            first = false;
        }
        out += "\n";
    }
    return out.empty() ? "0\n" : out;
}

}  // namespace g2coh
