#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "g2coh/golden_tables.hpp"
#include "g2coh/weyl.hpp"

namespace g2coh {

struct CheckResult {
    std::string name;
    std::string scope;  // grid / range the check swept
    bool passed = true;
    std::string counterexample;  // first failure, empty when passed
    std::int64_t comparisons = 0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    void append(VerificationReport other);
    std::string render_text() const;
    std::string render_json() const;
};

/// Group structure, the closed-form action table and the coordinate lists,
/// checked for (m1, m2) in [0..grid]^2.
VerificationReport verify_weyl_tables(int grid);

/// The pairing on W^P: length sums, involutivity, and the coefficient
/// identities a(w) = a(w') and b(w) + b(w') in {-6, -10} over [0..8]^2.
VerificationReport verify_involution();

/// Engine-vs-table equality for boundary and Eisenstein cohomology,
/// Poincare duality of boundary dimensions, Eisenstein half-dimension and
/// degree complementarity, for all lambda in [0..grid]^2 and every oracle
/// mode.
VerificationReport verify_boundary_and_eis(int grid);

VerificationReport verify_all(int grid);

namespace detail {

/// Table-parameterized checks, so self-tests can feed corrupted copies.
CheckResult check_dot_action_rows(std::span<const golden::LabeledForm> rows, int grid,
                                  const std::string& name);
CheckResult check_fundamental_rows(std::span<const golden::LabeledForm> rows, int grid,
                                   const std::string& name);
CheckResult check_levi_rows(std::span<const golden::LabeledForm> rows, Parabolic p, int grid,
                            const std::string& name);

}  // namespace detail

}  // namespace g2coh
