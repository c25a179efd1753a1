#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "g2coh/weyl.hpp"

namespace g2coh {

/// Which slice of a cusp space a summand denotes: the full space S_k, or
/// the eigenforms with vanishing / nonvanishing central L-value.
enum class Selector { All, CentralZero, CentralNonzero };

/// Which L-function governs a central-value split.
enum class LKind { None, Std, Sym3 };

std::string to_string(Selector s);
std::string to_string(LKind k);

/// One formal cohomology summand: either a unit class (dimension 1) or a
/// cusp-form space S_k, possibly cut down to a central-value slice. The
/// provenance fields record which face class produced the summand; they
/// drive deterministic output ordering and are ignored by value equality.
struct Summand {
    bool unit = true;
    std::int64_t k = 0;
    Selector selector = Selector::All;
    LKind lkind = LKind::None;

    Parabolic parabolic = Parabolic::P0;
    int rep_label = 0;

    static Summand make_unit(Parabolic p = Parabolic::P0, int rep = 0) {
        Summand s;
        s.parabolic = p;
        s.rep_label = rep;
        return s;
    }

    static Summand make_cusp(std::int64_t k, Parabolic p = Parabolic::P0, int rep = 0,
                             Selector sel = Selector::All, LKind lk = LKind::None) {
        Summand s;
        s.unit = false;
        s.k = k;
        s.selector = sel;
        s.lkind = lk;
        s.parabolic = p;
        s.rep_label = rep;
        return s;
    }

    auto value_key() const { return std::make_tuple(unit, k, selector, lkind); }
    auto order_key() const { return std::make_tuple(parabolic, rep_label, unit, k, selector, lkind); }

    bool same_class(const Summand& other) const { return value_key() == other.value_key(); }
};

std::string to_string(const Summand& s);

/// Formal sum of summands graded by cohomological degree 0..7.
class GradedSpace {
  public:
    static constexpr int kDegrees = 8;

    void add(int degree, Summand s);
    const std::vector<Summand>& at(int degree) const;
    bool empty() const;

    /// Sort each degree by (parabolic, Kostant label, value).
    void sort();

    /// Remove cusp summands whose numeric dimension is zero. Unit classes
    /// and positive-dimensional cusp spaces are kept.
    GradedSpace drop_zero_dimensional() const;

    /// Equality as graded multisets of summand values (provenance ignored).
    friend bool same_classes(const GradedSpace& l, const GradedSpace& r);

  private:
    std::array<std::vector<Summand>, kDegrees> degrees_;
};

std::string to_string(const GradedSpace& g);

}  // namespace g2coh
