#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tcat/doc.hpp"

using namespace tcat;
using namespace tcat::testing;

#ifndef TCAT_FIXTURES
#define TCAT_FIXTURES "fixtures"
#endif

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::filesystem::path> fixture_paths() {
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(TCAT_FIXTURES))
        if (entry.path().extension() == ".json") out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("every fixture parses and reserializes canonically") {
    auto paths = fixture_paths();
    REQUIRE(paths.size() >= 7);
    for (const auto& path : paths) {
        CAPTURE(path.string());
        Document doc = parse_document(slurp(path));
        std::string canonical = serialize_document(doc);
        Document again = parse_document(canonical);
        CHECK(serialize_document(again) == canonical);
        CHECK(again.depth == doc.depth);
        CHECK(again.monad_kind == doc.monad_kind);
        if (doc.tcategory) {
            REQUIRE(again.tcategory);
            CHECK(again.tcategory->graph.X1.size() == doc.tcategory->graph.X1.size());
            CHECK(again.tcategory->x2.apex.size() == doc.tcategory->x2.apex.size());
        }
    }
}

TEST_CASE("schema violations carry diagnostics") {
    CHECK_THROWS_AS(parse_document("not json"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"depth": 3})"), ParseError);
    // non-associative monoid rejected with a witness
    CHECK_THROWS_WITH_AS(
        parse_document(R"({
            "monad": {"kind": "writer", "monoid": {
                "elements": ["e", "p", "q"], "unit": "e",
                "table": {
                  "e": {"e": "e", "p": "p", "q": "q"},
                  "p": {"e": "p", "p": "q", "q": "e"},
                  "q": {"e": "q", "p": "p", "q": "p"}}}},
            "tcategory": {"builtin": "discrete", "objects": ["a"]}})"),
        doctest::Contains("associativity"), ParseError);
    // unknown object in an arrow
    CHECK_THROWS_AS(parse_document(R"({
        "monad": {"kind": "identity"},
        "tcategory": {"objects": ["a"],
            "arrows": [{"name": "f", "dom": "zzz", "cod_list_or_T_value": "a"}],
            "comp": [], "unit": []}})"),
                    ParseError);
    // partial composition table
    CHECK_THROWS_AS(parse_document(R"({
        "monad": {"kind": "identity"},
        "tcategory": {"objects": ["a"],
            "arrows": [{"name": "f", "dom": "a", "cod_list_or_T_value": "a"}],
            "comp": [], "unit": [{"object": "a", "arrow": "f"}]}})"),
                    ParseError);
}

TEST_CASE("a multicategory document with a binary arrow parses") {
    // a binary and a nullary arrow: the composable pairs enumerate through
    // fiber products of fibers, though no composition can satisfy the axioms
    std::string text = R"({
        "monad": {"kind": "list"},
        "tcategory": {
          "objects": ["a"],
          "arrows": [
            {"name": "b", "dom": "a", "cod_list_or_T_value": ["a", "a"]},
            {"name": "z", "dom": "a", "cod_list_or_T_value": []},
            {"name": "u", "dom": "a", "cod_list_or_T_value": ["a"]}
          ],
          "comp": [
            {"outer": "u", "inner": ["u"], "result": "u"},
            {"outer": "u", "inner": ["b"], "result": "b"},
            {"outer": "u", "inner": ["z"], "result": "z"},
            {"outer": "b", "inner": ["u", "u"], "result": "b"},
            {"outer": "b", "inner": ["u", "b"], "result": "b"},
            {"outer": "b", "inner": ["u", "z"], "result": "u"},
            {"outer": "b", "inner": ["b", "u"], "result": "b"},
            {"outer": "b", "inner": ["b", "b"], "result": "b"},
            {"outer": "b", "inner": ["b", "z"], "result": "b"},
            {"outer": "b", "inner": ["z", "u"], "result": "u"},
            {"outer": "b", "inner": ["z", "b"], "result": "b"},
            {"outer": "b", "inner": ["z", "z"], "result": "z"},
            {"outer": "z", "inner": [], "result": "z"}
          ],
          "unit": [{"object": "a", "arrow": "u"}]
        }})";
    Document doc = parse_document(text);
    REQUIRE(doc.tcategory);
    CHECK(doc.tcategory->x2.apex.size() == 13);
    // the boundary axiom for composition must fail: a 3-ary composite is
    // needed but no such arrow exists
    bool boundary_fails = false;
    for (const auto& r : check_all_axioms(*doc.tcategory))
        if (!r.ok) boundary_fails = true;
    CHECK(boundary_fails);
}

TEST_CASE("run_command reports are deterministic") {
    std::string ordinal = slurp(std::filesystem::path(TCAT_FIXTURES) / "ordinal1.json");
    std::string bar = slurp(std::filesystem::path(TCAT_FIXTURES) / "bar_z2.json");
    for (const std::string cmd : {"validate", "nerve", "segal", "counts", "copower"}) {
        Report first = run_command(cmd, {ordinal}, std::nullopt);
        Report second = run_command(cmd, {ordinal}, std::nullopt);
        CHECK(first.render_text() == second.render_text());
        CHECK(first.render_json() == second.render_json());
        CHECK(first.all_passed());
    }
    std::string ordinal2 = slurp(std::filesystem::path(TCAT_FIXTURES) / "ordinal2.json");
    Report hom = run_command("hom", {ordinal, ordinal2}, 3);
    CHECK(hom.all_passed());
    CHECK(hom.render_text() == run_command("hom", {ordinal, ordinal2}, 3).render_text());
    Report wbar = run_command("two-cells", {bar, bar}, 3);
    CHECK(wbar.all_passed());
    // documents over different monads cannot be paired
    CHECK_THROWS_AS(run_command("hom", {ordinal, bar}, 3), ParseError);
}

TEST_CASE("command reports over the fixtures") {
    std::string bar = slurp(std::filesystem::path(TCAT_FIXTURES) / "bar_z2.json");
    Report comonad = run_command("comonad", {bar}, 3);
    CHECK(comonad.all_passed());

    std::string mutant = slurp(std::filesystem::path(TCAT_FIXTURES) / "mutated_nerve.json");
    Report segal = run_command("segal", {mutant}, std::nullopt);
    CHECK_FALSE(segal.all_passed());
    CHECK(exit_code_for(segal) == 1);

    std::string multicat = slurp(std::filesystem::path(TCAT_FIXTURES) / "multicat_list.json");
    CHECK_THROWS_AS(run_command("comonad", {multicat}, 3), CapabilityError);
    Report counts = run_command("counts", {multicat}, std::nullopt);
    CHECK(counts.all_passed());

    std::string ordinal = slurp(std::filesystem::path(TCAT_FIXTURES) / "ordinal1.json");
    Report power = run_command("power-delta1", {ordinal}, 2);
    CHECK(power.all_passed());
    bool found_levels = false;
    for (const auto& [k, v] : power.fields)
        if (k == "power-levels") {
            CHECK(v == "3,6,10");
            found_levels = true;
        }
    CHECK(found_levels);
}

TEST_CASE("golden nerve serialization is byte-stable") {
    // pins the canonical element order and enumeration order
    std::string ordinal = slurp(std::filesystem::path(TCAT_FIXTURES) / "ordinal1.json");
    Document doc = parse_document(ordinal);
    TSimplicialObject N = nerve(*doc.tcategory, 2);
    std::string expected = slurp(std::filesystem::path(TCAT_FIXTURES) / "golden" /
                                 "ordinal1_nerve_depth2.json");
    CHECK(serialize_tsimplicial(N, doc.monad_section, "ordinal-1-nerve") == expected);
}

TEST_CASE("tsimplicial serialization round-trip") {
    TSimplicialObject N = nerve(ordinal_category(1), 3);
    std::string text = serialize_tsimplicial(N, R"({"kind":"identity"})", "n1");
    Document doc = parse_document(text);
    REQUIRE(doc.tsimplicial);
    CHECK(doc.tsimplicial->depth == 3);
    for (int n = 0; n <= 3; ++n) CHECK(doc.tsimplicial->level(n) == N.level(n));
    CHECK(check_sa_axioms(*doc.tsimplicial).ok());
    CHECK(check_segal(*doc.tsimplicial));
    CHECK(serialize_document(doc) == text);
}
