#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <json.hpp>

#include "g2coh/record.hpp"

using namespace g2coh;
using nlohmann::json;

TEST_CASE("json schema stability") {
    const OutputRecord record = make_record({0, 2}, LOracle::symbolic(), What::Both);
    const json doc = json::parse(render_json(record));

    CHECK(doc["lambda"]["m1"] == 0);
    CHECK(doc["lambda"]["m2"] == 2);
    CHECK(doc["case"] == 2);
    CHECK(doc["oracle"] == "symbolic");

    // Summand objects carry exactly the allowed fields.
    const std::set<std::string> plain = {"type", "k"};
    const std::set<std::string> split = {"type", "k", "selector", "lkind"};
    for (const char* block : {"boundary", "eisenstein"}) {
        REQUIRE(doc.contains(block));
        for (int q = 0; q < 8; ++q) {
            for (const auto& s : doc[block][std::to_string(q)]) {
                std::set<std::string> fields;
                for (auto it = s.begin(); it != s.end(); ++it) fields.insert(it.key());
                if (s["type"] == "unit") {
                    CHECK(fields == std::set<std::string>{"type"});
                } else {
                    REQUIRE(s["type"] == "cusp");
                    CHECK((fields == plain || fields == split));
                    if (fields == split) {
                        CHECK((s["selector"] == "central-zero" ||
                               s["selector"] == "central-nonzero"));
                        CHECK((s["lkind"] == "std" || s["lkind"] == "sym3"));
                    }
                }
            }
        }
    }

    // Boundary of (0,2) at q=3 is S_12 + S_8, listed P1 before P2.
    const auto q3 = doc["boundary"]["3"];
    REQUIRE(q3.size() == 2);
    CHECK(q3[0]["type"] == "cusp");
    CHECK(q3[0]["k"] == 12);
    CHECK(q3[1]["k"] == 8);

    // Numeric dims follow the cusp dimensions.
    CHECK(doc["dims"]["boundary"]["3"] == 1);
    CHECK(doc["dims"]["boundary"]["1"] == 0);
    CHECK(doc["dims"]["eisenstein"]["4"] == 1);

    // The symbolic-mode split is flagged in the notes only when eigenforms
    // actually exist at the split weight; at (0,2) the weight is 8.
    CHECK(doc["notes"].empty());
    const json doc14 =
        json::parse(render_json(make_record({0, 14}, LOracle::symbolic(), What::Both)));
    REQUIRE_FALSE(doc14["notes"].empty());
}

TEST_CASE("what selects the emitted blocks") {
    const json boundary_only =
        json::parse(render_json(make_record({1, 1}, LOracle::symbolic(), What::Boundary)));
    CHECK(boundary_only.contains("boundary"));
    CHECK_FALSE(boundary_only.contains("eisenstein"));
    CHECK(boundary_only["case"] == 9);
    for (int q = 0; q < 8; ++q)
        CHECK(boundary_only["boundary"][std::to_string(q)].empty());

    const json eis_only =
        json::parse(render_json(make_record({0, 3}, LOracle::all_nonzero(), What::Eisenstein)));
    CHECK_FALSE(eis_only.contains("boundary"));
    CHECK(eis_only.contains("eisenstein"));
    CHECK(eis_only["dims"].contains("eisenstein"));
    CHECK_FALSE(eis_only["dims"].contains("boundary"));
}

TEST_CASE("rejects negative parameters") {
    CHECK_THROWS_AS(make_record({-1, 0}, LOracle::symbolic(), What::Both),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_what("everything"), std::invalid_argument);
}

TEST_CASE("markdown and latex renderings") {
    const OutputRecord record = make_record({3, 0}, LOracle::symbolic(), What::Both);

    const std::string md = render_markdown(record);
    CHECK(md.find("case 7") != std::string::npos);
    CHECK(md.find("S_12") != std::string::npos);
    CHECK(md.find("| 5 |") != std::string::npos);

    const std::string tex = render_latex(record);
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    CHECK(tex.find("\\mathbb{Q}") != std::string::npos);
    CHECK(tex.find("\\mathcal{Z}_{12}") != std::string::npos);
    CHECK(tex.find("S_{8}") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    for (const HighestWeight lambda : {HighestWeight{0, 0}, {2, 2}, {5, 3}}) {
        const std::string a = render_json(make_record(lambda, LOracle::sign_heuristic(), What::Both));
        const std::string b = render_json(make_record(lambda, LOracle::sign_heuristic(), What::Both));
        CHECK(a == b);
    }
}
