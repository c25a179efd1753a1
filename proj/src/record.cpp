#include "g2coh/record.hpp"

#include <stdexcept>

#include <json.hpp>

#include "g2coh/levi.hpp"

namespace g2coh {

namespace {

using OrderedJson = nlohmann::ordered_json;

bool has_unresolved_split(const GradedSpace& g) {
    for (int q = 0; q < GradedSpace::kDegrees; ++q)
        for (const Summand& s : g.at(q))
            if (!s.unit && s.selector != Selector::All && cusp_dim(s.k) > 0) return true;
    return false;
}

OrderedJson summand_json(const Summand& s) {
    OrderedJson j;
    if (s.unit) {
        j["type"] = "unit";
        return j;
    }
    j["type"] = "cusp";
    j["k"] = s.k;
    if (s.selector != Selector::All) {
        j["selector"] = to_string(s.selector);
        j["lkind"] = to_string(s.lkind);
    }
    return j;
}

OrderedJson graded_json(const GradedSpace& g) {
    OrderedJson j = OrderedJson::object();
    for (int q = 0; q < GradedSpace::kDegrees; ++q) {
        OrderedJson list = OrderedJson::array();
        for (const Summand& s : g.at(q)) list.push_back(summand_json(s));
        j[std::to_string(q)] = std::move(list);
    }
    return j;
}

OrderedJson dims_json(const std::array<std::int64_t, GradedSpace::kDegrees>& dims) {
    OrderedJson j = OrderedJson::object();
    for (int q = 0; q < GradedSpace::kDegrees; ++q)
        j[std::to_string(q)] = dims[static_cast<std::size_t>(q)];
    return j;
}

std::string latex_summand(const Summand& s) {
    if (s.unit) return "\\mathbb{Q}";
    if (s.selector == Selector::All) return "S_{" + std::to_string(s.k) + "}";
    const std::string family = s.lkind == LKind::Std ? "\\mathcal{Z}" : "\\mathcal{Y}";
    const std::string membership = s.selector == Selector::CentralNonzero ? "\\in" : "\\notin";
    return "{\\bigoplus}_{\\psi " + membership + " " + family + "_{" + std::to_string(s.k) +
           "}} \\mathbb{C}\\psi";
}

std::string join_summands(const std::vector<Summand>& summands, bool latex) {
    if (summands.empty()) return latex ? "0" : "0";
    std::string out;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (i > 0) out += latex ? " \\oplus " : " + ";
        out += latex ? latex_summand(summands[i]) : to_string(summands[i]);
    }
    return out;
}

}  // namespace

What parse_what(const std::string& text) {
    if (text == "boundary") return What::Boundary;
    if (text == "eisenstein") return What::Eisenstein;
    if (text == "both") return What::Both;
    throw std::invalid_argument("unknown --what value \"" + text +
                                "\" (expected boundary, eisenstein or both)");
}

OutputRecord make_record(HighestWeight lambda, const LOracle& oracle, What what) {
    if (lambda.m1 < 0 || lambda.m2 < 0)
        throw std::invalid_argument("m1 and m2 must be non-negative");
    OutputRecord record;
    record.lambda = lambda;
    record.case_id = classify_case(lambda);
    record.what = what;
    record.oracle_name = oracle.name();
    record.boundary = boundary_cohomology(lambda);
    record.boundary_dims = dims(record.boundary);
    if (what != What::Boundary) {
        record.eisenstein = eisenstein_cohomology(lambda, oracle);
        record.eisenstein_dims = dims(record.eisenstein, oracle);
        record.notes = reference_notes(lambda);
        if (!oracle.concrete() && has_unresolved_split(record.eisenstein))
            record.notes.push_back(
                "central-value split sizes are unresolved under the symbolic oracle; the "
                "degree-3/4 dims assume nonvanishing central values (pick a concrete --l-oracle "
                "to resolve)");
    }
    return record;
}

std::string render_json(const OutputRecord& record) {
    OrderedJson doc;
    doc["lambda"] = {{"m1", record.lambda.m1}, {"m2", record.lambda.m2}};
    doc["case"] = record.case_id;
    doc["oracle"] = record.oracle_name;
    if (record.what != What::Eisenstein) doc["boundary"] = graded_json(record.boundary);
    if (record.what != What::Boundary) doc["eisenstein"] = graded_json(record.eisenstein);
    OrderedJson dims = OrderedJson::object();
    if (record.what != What::Eisenstein) dims["boundary"] = dims_json(record.boundary_dims);
    if (record.what != What::Boundary) dims["eisenstein"] = dims_json(record.eisenstein_dims);
    doc["dims"] = std::move(dims);
    doc["notes"] = record.notes;
    return doc.dump();
}

std::string render_markdown(const OutputRecord& record) {
    const bool show_boundary = record.what != What::Eisenstein;
    const bool show_eis = record.what != What::Boundary;
    std::string out = "## lambda = (" + std::to_string(record.lambda.m1) + ", " +
                      std::to_string(record.lambda.m2) + ")  [case " +
                      std::to_string(record.case_id) + ", oracle " + record.oracle_name + "]\n\n";
    out += "| q |";
    if (show_boundary) out += " H^q(boundary) | dim |";
    if (show_eis) out += " H^q_Eis | dim |";
    out += "\n|---|";
    if (show_boundary) out += "---|---|";
    if (show_eis) out += "---|---|";
    out += "\n";
    for (int q = 0; q < GradedSpace::kDegrees; ++q) {
        out += "| " + std::to_string(q) + " |";
        if (show_boundary)
            out += " " + join_summands(record.boundary.at(q), false) + " | " +
                   std::to_string(record.boundary_dims[static_cast<std::size_t>(q)]) + " |";
        if (show_eis)
            out += " " + join_summands(record.eisenstein.at(q), false) + " | " +
                   std::to_string(record.eisenstein_dims[static_cast<std::size_t>(q)]) + " |";
        out += "\n";
    }
    for (const std::string& note : record.notes) out += "\n> " + note + "\n";
    return out;
}

std::string render_latex(const OutputRecord& record) {
    const bool show_boundary = record.what != What::Eisenstein;
    const bool show_eis = record.what != What::Boundary;
    std::string cols = "c";
    if (show_boundary) cols += "l";
    if (show_eis) cols += "l";
    std::string out = "% lambda = (" + std::to_string(record.lambda.m1) + ", " +
                      std::to_string(record.lambda.m2) + "), case " +
                      std::to_string(record.case_id) + ", oracle " + record.oracle_name + "\n";
    out += "\\begin{tabular}{" + cols + "}\n\\hline\n$q$";
    if (show_boundary) out += " & $H^q(\\partial S_\\Gamma)$";
    if (show_eis) out += " & $H^q_{Eis}$";
    out += " \\\\\n\\hline\n";
    for (int q = 0; q < GradedSpace::kDegrees; ++q) {
        out += "$" + std::to_string(q) + "$";
        if (show_boundary) out += " & $" + join_summands(record.boundary.at(q), true) + "$";
        if (show_eis) out += " & $" + join_summands(record.eisenstein.at(q), true) + "$";
        out += " \\\\\n";
    }
    out += "\\hline\n\\end{tabular}\n";
    for (const std::string& note : record.notes) out += "% " + note + "\n";
    return out;
}

}  // namespace g2coh
