#include "g2coh/loracle.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "g2coh/levi.hpp"

namespace g2coh {

namespace {

std::string key_name(LKind kind, std::int64_t k) {
    return to_string(kind) + "/" + std::to_string(k);
}

}  // namespace

LOracle LOracle::explicit_table(std::map<std::pair<LKind, std::int64_t>, SplitCount> table) {
    for (const auto& [key, count] : table) {
        const auto& [kind, k] = key;
        if (kind == LKind::None) throw OracleError("l-oracle: entry with no L-kind");
        if (k < 0 || k % 2 != 0)
            throw OracleError("l-oracle entry " + key_name(kind, k) + ": weight must be even");
        if (count.zero < 0 || count.nonzero < 0)
            throw OracleError("l-oracle entry " + key_name(kind, k) + ": negative count");
        if (count.zero + count.nonzero != cusp_dim(k))
            throw OracleError("l-oracle entry " + key_name(kind, k) + ": zero+nonzero = " +
                              std::to_string(count.zero + count.nonzero) + " but dim S_" +
                              std::to_string(k) + " = " + std::to_string(cusp_dim(k)));
    }
    LOracle oracle(Mode::Explicit);
    oracle.table_ = std::move(table);
    return oracle;
}

LOracle LOracle::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw OracleError("l-oracle: cannot open file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str(), path);
}

LOracle LOracle::from_json_text(const std::string& text, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw OracleError("l-oracle " + origin + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object()) throw OracleError("l-oracle " + origin + ": top level must be an object");

    std::map<std::pair<LKind, std::int64_t>, SplitCount> table;
    for (const auto& [kind_key, entries] : doc.items()) {
        LKind kind;
        if (kind_key == "std")
            kind = LKind::Std;
        else if (kind_key == "sym3")
            kind = LKind::Sym3;
        else
            throw OracleError("l-oracle " + origin + ": unknown key \"" + kind_key +
                              "\" (expected \"std\" or \"sym3\")");
        if (!entries.is_object())
            throw OracleError("l-oracle " + origin + ": value of \"" + kind_key +
                              "\" must be an object keyed by weight");
        for (const auto& [weight_key, entry] : entries.items()) {
            std::int64_t k = 0;
            try {
                std::size_t pos = 0;
                k = std::stoll(weight_key, &pos);
                if (pos != weight_key.size()) throw std::invalid_argument(weight_key);
            } catch (const std::exception&) {
                throw OracleError("l-oracle " + origin + ": key \"" + kind_key + "/" + weight_key +
                                  "\" is not an integer weight");
            }
            if (!entry.is_object() || !entry.contains("zero") || !entry.contains("nonzero") ||
                entry.size() != 2 || !entry["zero"].is_number_integer() ||
                !entry["nonzero"].is_number_integer())
                throw OracleError("l-oracle " + origin + ": entry " + key_name(kind, k) +
                                  " must be {\"zero\": n, \"nonzero\": m}");
            table[{kind, k}] = {entry["zero"].get<std::int64_t>(),
                                entry["nonzero"].get<std::int64_t>()};
        }
    }
    return explicit_table(std::move(table));
}

std::string LOracle::name() const {
    switch (mode_) {
        case Mode::Symbolic: return "symbolic";
        case Mode::AllNonzero: return "all-nonzero";
        case Mode::AllZero: return "all-zero";
        case Mode::SignHeuristic: return "sign";
        case Mode::Explicit: return "explicit";
    }
    return "?";
}

SplitCount LOracle::split(LKind kind, std::int64_t k) const {
    const std::int64_t total = cusp_dim(k);
    switch (mode_) {
        case Mode::Symbolic:
            throw OracleError("l-oracle: split sizes are unresolved in symbolic mode");
        case Mode::AllNonzero:
            return {0, total};
        case Mode::AllZero:
            return {total, 0};
        case Mode::SignHeuristic:
            if (kind == LKind::Std && ((k % 4) + 4) % 4 == 2) return {total, 0};
            return {0, total};
        case Mode::Explicit: {
            if (total == 0) return {0, 0};  // nothing to partition
            auto it = table_.find({kind, k});
            if (it == table_.end())
                throw OracleError("l-oracle table has no entry for " + key_name(kind, k));
            return it->second;
        }
    }
    throw OracleError("l-oracle: unknown mode");
}

bool LOracle::central_value_vanishes(LKind kind, std::int64_t k) const {
    switch (mode_) {
        case Mode::Symbolic: return false;
        case Mode::AllNonzero: return false;
        case Mode::AllZero: return true;
        case Mode::SignHeuristic: return kind == LKind::Std && ((k % 4) + 4) % 4 == 2;
        case Mode::Explicit: {
            if (cusp_dim(k) == 0) return true;  // no eigenform has a nonzero value
            auto it = table_.find({kind, k});
            if (it == table_.end())
                throw OracleError("l-oracle table has no entry for " + key_name(kind, k));
            return it->second.nonzero == 0;
        }
    }
    throw OracleError("l-oracle: unknown mode");
}

}  // namespace g2coh
