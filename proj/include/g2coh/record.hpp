#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2coh/eisenstein.hpp"

namespace g2coh {

enum class What { Boundary, Eisenstein, Both };

What parse_what(const std::string& text);  // throws std::invalid_argument

/// One fully evaluated lambda: summand tables, numeric dimensions and
/// annotations, ready for serialization.
struct OutputRecord {
    HighestWeight lambda;
    int case_id = 1;
    What what = What::Both;
    std::string oracle_name;
    GradedSpace boundary;
    GradedSpace eisenstein;
    std::array<std::int64_t, GradedSpace::kDegrees> boundary_dims{};
    std::array<std::int64_t, GradedSpace::kDegrees> eisenstein_dims{};
    std::vector<std::string> notes;
};

OutputRecord make_record(HighestWeight lambda, const LOracle& oracle, What what);

/// Stable JSON schema: summands are exactly {"type":"unit"} or
/// {"type":"cusp","k":int}, the latter optionally extended by
/// {"selector":..., "lkind":...} for central-value slices.
std::string render_json(const OutputRecord& record);
std::string render_markdown(const OutputRecord& record);
std::string render_latex(const OutputRecord& record);

}  // namespace g2coh
