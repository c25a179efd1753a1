#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "g2coh/summand.hpp"

namespace g2coh {

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Partition of the |Sigma_k| = dim S_k normalized eigenforms by the
/// vanishing of the central L-value (standard or symmetric cube).
struct SplitCount {
    std::int64_t zero = 0;
    std::int64_t nonzero = 0;
};

/// Pluggable source of central-value information. Symbolic mode carries no
/// numeric information; the concrete modes resolve split sizes:
///   AllNonzero    every central value is nonzero;
///   AllZero       every central value vanishes;
///   SignHeuristic standard L: sign of the functional equation is
///                 (-1)^(k/2), so k = 2 mod 4 forces vanishing, otherwise
///                 assume nonvanishing; Sym3: assume nonvanishing.
///   Explicit      user-supplied table per (lkind, weight).
/// The sign heuristic is a heuristic, external to the tables it feeds.
class LOracle {
  public:
    enum class Mode { Symbolic, AllNonzero, AllZero, SignHeuristic, Explicit };

    static LOracle symbolic() { return LOracle(Mode::Symbolic); }
    static LOracle all_nonzero() { return LOracle(Mode::AllNonzero); }
    static LOracle all_zero() { return LOracle(Mode::AllZero); }
    static LOracle sign_heuristic() { return LOracle(Mode::SignHeuristic); }
    static LOracle explicit_table(std::map<std::pair<LKind, std::int64_t>, SplitCount> table);

    /// Parse the JSON oracle file: an object keyed by "std"/"sym3", each
    /// mapping even weights to {"zero": n, "nonzero": m} with
    /// n + m = dim S_k. Throws OracleError naming the offending key.
    static LOracle from_file(const std::string& path);
    static LOracle from_json_text(const std::string& text, const std::string& origin);

    Mode mode() const { return mode_; }
    bool concrete() const { return mode_ != Mode::Symbolic; }
    std::string name() const;

    /// Split sizes for weight-k eigenforms under the given L-function.
    /// Throws OracleError in Symbolic mode and for missing Explicit keys;
    /// weights with dim S_k = 0 need no Explicit entry (the partition is
    /// forced to (0, 0)).
    SplitCount split(LKind kind, std::int64_t k) const;

    /// Whether a central value L(1/2, .) is treated as zero in the pole
    /// bookkeeping. Symbolic mode answers "nonzero" (generic position);
    /// Explicit tables answer "zero" only when every eigenform of that
    /// weight has vanishing central value.
    bool central_value_vanishes(LKind kind, std::int64_t k) const;

  private:
    explicit LOracle(Mode m) : mode_(m) {}
    Mode mode_;
    std::map<std::pair<LKind, std::int64_t>, SplitCount> table_;
};

}  // namespace g2coh
