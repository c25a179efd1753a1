#include "g2coh/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "g2coh/eisenstein.hpp"
#include "g2coh/levi.hpp"
#include "g2coh/spectral.hpp"

namespace g2coh {

namespace {

std::string lambda_str(HighestWeight lambda) {
    return "lambda=(" + std::to_string(lambda.m1) + "," + std::to_string(lambda.m2) + ")";
}

std::string grid_str(int grid) {
    return "(m1,m2) in [0.." + std::to_string(grid) + "]^2";
}

void fail(CheckResult& check, const std::string& counterexample) {
    if (check.passed) {
        check.passed = false;
        check.counterexample = counterexample;
    }
}

template <typename F>
void sweep(int grid, F&& body) {
    for (std::int64_t m1 = 0; m1 <= grid; ++m1)
        for (std::int64_t m2 = 0; m2 <= grid; ++m2) body(HighestWeight{m1, m2});
}

const std::vector<LOracle>& oracle_modes() {
    static const std::vector<LOracle> modes = {LOracle::symbolic(), LOracle::all_nonzero(),
                                               LOracle::all_zero(), LOracle::sign_heuristic()};
    return modes;
}

}  // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

void VerificationReport::append(VerificationReport other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
}

std::string VerificationReport::render_text() const {
    std::string out;
    for (const auto& c : checks) {
        out += c.passed ? "[PASS] " : "[FAIL] ";
        out += c.name + " (" + c.scope + ", " + std::to_string(c.comparisons) + " comparisons)";
        if (!c.passed) out += "\n       counterexample: " + c.counterexample;
        out += "\n";
    }
    return out;
}

std::string VerificationReport::render_json() const {
    nlohmann::ordered_json doc;
    doc["all_passed"] = all_passed();
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json entry;
        entry["name"] = c.name;
        entry["scope"] = c.scope;
        entry["passed"] = c.passed;
        entry["comparisons"] = c.comparisons;
        if (!c.passed) entry["counterexample"] = c.counterexample;
        doc["checks"].push_back(std::move(entry));
    }
    return doc.dump();
}

namespace detail {

CheckResult check_dot_action_rows(std::span<const golden::LabeledForm> rows, int grid,
                                  const std::string& name) {
    CheckResult check{name, grid_str(grid), true, "", 0};
    const auto& group = WeylGroup::instance();
    sweep(grid, [&](HighestWeight lambda) {
        for (const auto& row : rows) {
            const Weight got = dot_action(group.element(row.label), lambda);
            const Weight want{row.value.first.eval(lambda), row.value.second.eval(lambda)};
            ++check.comparisons;
            if (got != want)
                fail(check, lambda_str(lambda) + " w" + std::to_string(row.label) +
                                ": expected (" + std::to_string(want.a) + "," +
                                std::to_string(want.b) + ") got (" + std::to_string(got.a) + "," +
                                std::to_string(got.b) + ")");
        }
    });
    return check;
}

CheckResult check_fundamental_rows(std::span<const golden::LabeledForm> rows, int grid,
                                   const std::string& name) {
    CheckResult check{name, grid_str(grid), true, "", 0};
    const auto& group = WeylGroup::instance();
    sweep(grid, [&](HighestWeight lambda) {
        for (const auto& row : rows) {
            const FundamentalCoords got =
                to_fundamental(dot_action(group.element(row.label), lambda));
            const FundamentalCoords want{row.value.first.eval(lambda),
                                         row.value.second.eval(lambda)};
            ++check.comparisons;
            if (got != want)
                fail(check, lambda_str(lambda) + " w" + std::to_string(row.label) +
                                ": expected (" + std::to_string(want.x) + "," +
                                std::to_string(want.y) + ") got (" + std::to_string(got.x) + "," +
                                std::to_string(got.y) + ")");
        }
    });
    return check;
}

CheckResult check_levi_rows(std::span<const golden::LabeledForm> rows, Parabolic p, int grid,
                            const std::string& name) {
    CheckResult check{name, grid_str(grid), true, "", 0};
    const auto& group = WeylGroup::instance();
    sweep(grid, [&](HighestWeight lambda) {
        for (const auto& row : rows) {
            const LeviWeight got = levi_coordinates(group.element(row.label), lambda, p);
            const std::int64_t a = row.value.first.eval(lambda);
            const std::int64_t b = row.value.second.eval(lambda);
            ++check.comparisons;
            if (got.a != a || got.b != b)
                fail(check, lambda_str(lambda) + " w" + std::to_string(row.label) + " " +
                                to_string(p) + ": expected (" + std::to_string(a) + "," +
                                std::to_string(b) + ") got (" + std::to_string(got.a) + "," +
                                std::to_string(got.b) + ")");
        }
    });
    return check;
}

}  // namespace detail

VerificationReport verify_weyl_tables(int grid) {
    if (grid < 0) throw std::invalid_argument("verify_weyl_tables: grid must be non-negative");
    VerificationReport report;
    const auto& group = WeylGroup::instance();

    CheckResult structure{"weyl-group-structure", "all 12 elements", true, "", 0};
    {
        std::multiset<int> lengths;
        for (const auto& w : group.elements()) lengths.insert(w.length);
        const std::multiset<int> expected = {0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6};
        ++structure.comparisons;
        if (lengths != expected) fail(structure, "length multiset mismatch");
        ++structure.comparisons;
        if (!(group.longest().matrix == Mat2{-1, 0, 0, -1}))
            fail(structure, "longest element is not -identity");
        for (const auto& w : group.elements()) {
            ++structure.comparisons;
            if (w.matrix.det() != (w.length % 2 == 0 ? 1 : -1))
                fail(structure, w.name() + ": det != (-1)^length");
            ++structure.comparisons;
            if (static_cast<int>(inversion_set(w).size()) != w.length)
                fail(structure, w.name() + ": inversion count != length");
        }
    }
    report.checks.push_back(std::move(structure));

    report.checks.push_back(
        detail::check_dot_action_rows(golden::dot_action_simple_root(), grid,
                                      "dot-action-simple-root"));
    report.checks.push_back(
        detail::check_fundamental_rows(golden::dot_action_fundamental(), grid,
                                       "dot-action-fundamental"));
    report.checks.push_back(
        detail::check_levi_rows(golden::levi_forms_p1(), Parabolic::P1, grid,
                                "levi-coordinates-P1"));
    report.checks.push_back(
        detail::check_levi_rows(golden::levi_forms_p2(), Parabolic::P2, grid,
                                "levi-coordinates-P2"));

    CheckResult kostant{"kostant-sets", "all (w, P) pairs", true, "", 0};
    {
        const std::vector<int> p1 = {1, 3, 5, 7, 9, 11};
        const std::vector<int> p2 = {1, 2, 4, 6, 8, 10};
        ++kostant.comparisons;
        if (kostant_representatives(Parabolic::P1) != p1) fail(kostant, "W^P1 list mismatch");
        ++kostant.comparisons;
        if (kostant_representatives(Parabolic::P2) != p2) fail(kostant, "W^P2 list mismatch");
        ++kostant.comparisons;
        if (kostant_representatives(Parabolic::P0).size() != 12)
            fail(kostant, "W^P0 must be the full group");
        for (const auto& w : group.elements())
            for (Parabolic p : {Parabolic::P0, Parabolic::P1, Parabolic::P2}) {
                ++kostant.comparisons;
                if (is_kostant_representative(w, p) != has_minimal_coset_length(w, p))
                    fail(kostant, w.name() + " " + to_string(p) +
                                      ": inversion and length criteria disagree");
            }
    }
    report.checks.push_back(std::move(kostant));

    return report;
}

VerificationReport verify_involution() {
    VerificationReport report;
    const auto& group = WeylGroup::instance();

    CheckResult pairing{"involution-pairing", "both maximal parabolics", true, "", 0};
    const std::map<Parabolic, std::vector<std::pair<int, int>>> expected = {
        {Parabolic::P1, {{1, 11}, {3, 9}, {5, 7}}},
        {Parabolic::P2, {{1, 10}, {2, 8}, {4, 6}}},
    };
    for (const auto& [p, pairs] : expected) {
        for (const auto& [short_label, long_label] : pairs) {
            const auto& w = group.element(short_label);
            const auto& wp = involution(w, p);
            ++pairing.comparisons;
            if (wp.label != long_label)
                fail(pairing, to_string(p) + ": involution(w" + std::to_string(short_label) +
                                  ") = " + wp.name());
            ++pairing.comparisons;
            if (w.length + wp.length != dim_nilradical(p))
                fail(pairing, to_string(p) + " pair (w" + std::to_string(short_label) + ",w" +
                                  std::to_string(long_label) + "): lengths do not sum to 5");
            ++pairing.comparisons;
            if (involution(wp, p).label != w.label)
                fail(pairing, to_string(p) + ": involution is not involutive at " + w.name());
        }
    }
    report.checks.push_back(std::move(pairing));

    CheckResult coeffs{"involution-coefficients", grid_str(8), true, "", 0};
    sweep(8, [&](HighestWeight lambda) {
        for (const auto& [p, pairs] : expected) {
            const std::int64_t bsum = p == Parabolic::P1 ? -6 : -10;
            for (const auto& [short_label, long_label] : pairs) {
                const LeviWeight lw = levi_coordinates(group.element(short_label), lambda, p);
                const LeviWeight lwp = levi_coordinates(group.element(long_label), lambda, p);
                ++coeffs.comparisons;
                if (lw.a != lwp.a)
                    fail(coeffs, lambda_str(lambda) + " " + to_string(p) + " pair (w" +
                                     std::to_string(short_label) + ",w" +
                                     std::to_string(long_label) + "): a(w) != a(w')");
                ++coeffs.comparisons;
                if (lw.b + lwp.b != bsum)
                    fail(coeffs, lambda_str(lambda) + " " + to_string(p) + " pair (w" +
                                     std::to_string(short_label) + ",w" +
                                     std::to_string(long_label) + "): b sum != " +
                                     std::to_string(bsum));
            }
        }
    });
    report.checks.push_back(std::move(coeffs));

    return report;
}

VerificationReport verify_boundary_and_eis(int grid) {
    if (grid < 0)
        throw std::invalid_argument("verify_boundary_and_eis: grid must be non-negative");
    VerificationReport report;

    CheckResult engine{"boundary-engine-vs-table", grid_str(grid), true, "", 0};
    CheckResult duality{"boundary-poincare-duality", grid_str(grid), true, "", 0};
    CheckResult euler{"boundary-euler-characteristic", grid_str(grid), true, "", 0};
    CheckResult eis_engine{"eisenstein-engine-vs-table", grid_str(grid) + ", symbolic oracle",
                           true, "", 0};
    CheckResult half{"eisenstein-half-dimension", grid_str(grid) + ", all oracle modes", true, "",
                     0};
    CheckResult comp{"eisenstein-complementarity", grid_str(grid) + ", all oracle modes", true,
                     "", 0};
    CheckResult contain{"eisenstein-selection-containment", grid_str(grid), true, "", 0};

    sweep(grid, [&](HighestWeight lambda) {
        const GradedSpace bd = boundary_cohomology(lambda);
        const GradedSpace ref = boundary_reference_table(lambda);
        const bool trivial_point = lambda == HighestWeight{0, 0};

        ++engine.comparisons;
        const bool raw_equal = same_classes(bd, ref);
        const bool normalized_equal =
            same_classes(bd.drop_zero_dimensional(), ref.drop_zero_dimensional());
        if (!(trivial_point ? normalized_equal : raw_equal && normalized_equal))
            fail(engine, lambda_str(lambda) + "\nengine:\n" + to_string(bd) + "table:\n" +
                             to_string(ref));

        const auto bdims = dims(bd);
        for (int q = 0; q <= 3; ++q) {
            ++duality.comparisons;
            if (bdims[static_cast<std::size_t>(q)] != bdims[static_cast<std::size_t>(7 - q)])
                fail(duality, lambda_str(lambda) + " q=" + std::to_string(q) + ": dim H^q = " +
                                  std::to_string(bdims[static_cast<std::size_t>(q)]) +
                                  " != dim H^{7-q} = " +
                                  std::to_string(bdims[static_cast<std::size_t>(7 - q)]));
        }

        std::int64_t chi = 0;
        std::int64_t total = 0;
        for (int q = 0; q < GradedSpace::kDegrees; ++q) {
            chi += (q % 2 == 0 ? 1 : -1) * bdims[static_cast<std::size_t>(q)];
            total += bdims[static_cast<std::size_t>(q)];
        }
        ++euler.comparisons;
        if (chi != 0) fail(euler, lambda_str(lambda) + ": Euler characteristic " +
                                      std::to_string(chi));

        const GradedSpace eis = eisenstein_cohomology(lambda, LOracle::symbolic());
        const GradedSpace eis_ref = eisenstein_reference_table(lambda, LOracle::symbolic());
        ++eis_engine.comparisons;
        const bool eraw = same_classes(eis, eis_ref);
        const bool enorm =
            same_classes(eis.drop_zero_dimensional(), eis_ref.drop_zero_dimensional());
        if (!(trivial_point ? enorm : eraw && enorm))
            fail(eis_engine, lambda_str(lambda) + "\nengine:\n" + to_string(eis) + "table:\n" +
                                 to_string(eis_ref));

        for (const LOracle& oracle : oracle_modes()) {
            const auto edims = dims(eis, oracle);
            std::int64_t etotal = 0;
            for (int q = 0; q < GradedSpace::kDegrees; ++q)
                etotal += edims[static_cast<std::size_t>(q)];
            ++half.comparisons;
            if (2 * etotal != total)
                fail(half, lambda_str(lambda) + " oracle=" + oracle.name() + ": total " +
                               std::to_string(etotal) + " != half of " + std::to_string(total));
            for (int q = 0; q < GradedSpace::kDegrees; ++q) {
                ++comp.comparisons;
                if (edims[static_cast<std::size_t>(q)] +
                        edims[static_cast<std::size_t>(7 - q)] !=
                    bdims[static_cast<std::size_t>(q)])
                    fail(comp, lambda_str(lambda) + " oracle=" + oracle.name() + " q=" +
                                   std::to_string(q) + ": complementarity fails");
            }
        }

        // Every Eisenstein summand occurs in the boundary at the same
        // degree with the same weight (splits match the full space).
        for (int q = 0; q < GradedSpace::kDegrees; ++q) {
            std::map<std::pair<bool, std::int64_t>, int> available;
            for (const Summand& s : bd.at(q)) ++available[{s.unit, s.unit ? 0 : s.k}];
            for (const Summand& s : eis.at(q)) {
                ++contain.comparisons;
                if (--available[{s.unit, s.unit ? 0 : s.k}] < 0)
                    fail(contain, lambda_str(lambda) + " q=" + std::to_string(q) + ": " +
                                      to_string(s) + " missing from the boundary");
            }
        }
    });

    report.checks.push_back(std::move(engine));
    report.checks.push_back(std::move(duality));
    report.checks.push_back(std::move(euler));
    report.checks.push_back(std::move(eis_engine));
    report.checks.push_back(std::move(half));
    report.checks.push_back(std::move(comp));
    report.checks.push_back(std::move(contain));
    return report;
}

VerificationReport verify_all(int grid) {
    VerificationReport report = verify_weyl_tables(grid);
    report.append(verify_involution());
    report.append(verify_boundary_and_eis(grid));
    return report;
}

}  // namespace g2coh
