#include <fstream>
#include <sstream>

#include "doctest.h"
#include "liftq/corpus.hpp"

using namespace liftq;

TEST_CASE("builtin corpus validates and names all six quantales") {
    auto c = builtin_corpus();
    REQUIRE(c.quantales.size() == 6);
    for (const char* n :
         {"b2", "godel3", "lukasiewicz3", "lukasiewicz4", "maxchain3", "powz2"})
        CHECK(find_quantale(c, n).name == n);
    CHECK(find_quantale(c, "b2").size() == 2);
    CHECK(find_quantale(c, "lukasiewicz4").size() == 4);
    CHECK_THROWS_AS(find_quantale(c, "nosuch"), DanglingReference);
}

TEST_CASE("serialize and parse round-trip the builtin corpus") {
    auto c = builtin_corpus();
    auto back = parse_corpus_text(serialize(c));
    CHECK(semantically_equal(c, back));
    // A second round trip is byte-identical.
    CHECK(serialize(back) == serialize(c));
}

TEST_CASE("bundled corpus files match the builtins") {
    auto c = builtin_corpus();
    for (const auto& q : c.quantales) {
        auto file = parse_corpus(std::string(LIFTQ_CORPUS_DIR) + "/" + q.name + ".q");
        REQUIRE(file.quantales.size() == 1);
        const auto& p = file.quantales.front();
        REQUIRE(p.size() == q.size());
        CHECK(p.unit() == q.unit());
        for (Elt a = 0; a < q.size(); ++a) {
            CHECK(p.label(a) == q.label(a));
            for (Elt b = 0; b < q.size(); ++b) {
                CHECK(p.leq(a, b) == q.leq(a, b));
                CHECK(p.mult(a, b) == q.mult(a, b));
            }
        }
    }
}

TEST_CASE("parser reports malformed input with line numbers") {
    CHECK_THROWS_AS(parse_corpus_text("quantale broken\nelements a b\n"), ParseError);
    try {
        parse_corpus_text("quantale q\nelements a b\nunit c\nend\n");
        FAIL("expected a parse failure");
    } catch (const ParseError& e) {
        CHECK(e.line > 0);
    } catch (const CheckError&) {
        // Dangling labels may surface as reference errors instead.
    }
}

TEST_CASE("parser rejects non-quantale multiplication tables") {
    // min as multiplication with unit 0 on the 2-chain breaks the unit law.
    std::string text =
        "quantale bad\n"
        "elements 0 1\n"
        "leq 0 1\n"
        "unit 0\n"
        "mult 0 0\n"
        "mult 0 1\n"
        "end\n";
    CHECK_THROWS_AS(parse_corpus_text(text), ValidationError);
}

TEST_CASE("relation blocks instantiate against their quantale") {
    std::string text =
        "quantale b2\n"
        "elements 0 1\n"
        "leq 0 1\n"
        "unit 1\n"
        "mult 0 0\n"
        "mult 0 1\n"
        "end\n"
        "relation r\n"
        "quantale b2\n"
        "dom 2\n"
        "cod 2\n"
        "row 0 1\n"
        "row 1 0\n"
        "end\n";
    auto c = parse_corpus_text(text);
    REQUIRE(c.relations.size() == 1);
    auto m = instantiate(c.relations.front(), find_quantale(c, "b2"));
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(1, 0) == 1);
}

TEST_CASE("label lookup") {
    auto c = builtin_corpus();
    const auto& q = find_quantale(c, "godel3");
    CHECK(label_index(q, "1/2") == 1);
    CHECK_THROWS_AS(label_index(q, "2/3"), DanglingReference);
}

TEST_CASE("transitive closure is applied to the declared order") {
    // Only the covering pairs are declared; 0 <= 2 must follow.
    std::string text =
        "quantale chain3\n"
        "elements 0 1 2\n"
        "leq 0 1\n"
        "leq 1 2\n"
        "unit 2\n"
        "mult 0 0 0\n"
        "mult 0 1 1\n"
        "mult 0 1 2\n"
        "end\n";
    auto c = parse_corpus_text(text);
    const auto& q = c.quantales.front();
    CHECK(q.leq(0, 2));
    CHECK(q.mult(2, 1) == 1);
}

TEST_CASE("input with no directives is rejected") {
    CHECK_THROWS_AS(parse_corpus_text("# nothing but a comment\n"), ParseError);
    CHECK_THROWS_AS(parse_corpus_text(""), ParseError);
}
