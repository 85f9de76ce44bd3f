#include "doctest.h"
#include "liftq/corpus.hpp"
#include "liftq/quantale.hpp"

using namespace liftq;

namespace {

const FinQuantale& builtin(const std::string& name) {
    static CorpusFile corpus = builtin_corpus();
    return find_quantale(corpus, name);
}

}  // namespace

TEST_CASE("boolean quantale") {
    auto q = FinQuantale::boolean();
    CHECK(q.size() == 2);
    CHECK(q.unit() == 1);
    CHECK(q.mult(1, 1) == 1);
    CHECK(q.mult(0, 1) == 0);
    CHECK(q.residual(0, 0) == 1);
    CHECK(q.residual(1, 0) == 0);
}

TEST_CASE("residuation adjunction holds exhaustively on every builtin") {
    for (const auto& q : builtin_corpus().quantales)
        for (Elt a = 0; a < q.size(); ++a)
            for (Elt b = 0; b < q.size(); ++b)
                for (Elt c = 0; c < q.size(); ++c)
                    CHECK(q.leq(q.mult(a, c), b) == q.leq(c, q.residual(a, b)));
}

TEST_CASE("three-element truncated-sum chain residuals") {
    // Indices 0 < 1 < 2 encode 0 < 1/2 < 1; a*b = max(0, a+b-1) on the
    // unit-interval reading.
    const auto& q = builtin("lukasiewicz3");
    CHECK(q.unit() == 2);
    CHECK(q.mult(1, 1) == 0);
    CHECK(q.residual(1, 0) == 1);  // 1/2 -o 0 = 1/2
    CHECK(q.residual(2, 0) == 0);
    CHECK(q.residual(0, 0) == 2);
}

TEST_CASE("truncated-sum chains are dualizing at the bottom") {
    CHECK(!builtin("lukasiewicz3").is_dualizing(0));
    CHECK(!builtin("lukasiewicz4").is_dualizing(0));
}

TEST_CASE("min chain fails to dualize at the bottom with witness 1/2") {
    const auto& q = builtin("godel3");
    auto w = q.is_dualizing(0);
    REQUIRE(w.has_value());
    CHECK(*w == 1);  // the middle element: not(not(1/2)) = 1
}

TEST_CASE("two-element chain is dualizing at bottom but not at top") {
    const auto& q = builtin("b2");
    CHECK(!q.is_dualizing(0));
    auto w = q.is_dualizing(1);
    REQUIRE(w.has_value());
    CHECK(*w == 0);  // not(0) = 1, not(1) = 1, so 0 is not recovered
}

TEST_CASE("group powerset quantale is dualizing at the unit singleton") {
    const auto& q = builtin("powz2");
    CHECK(q.unit() == 1);  // the singleton {0}
    CHECK(!q.is_dualizing(1));
    CHECK(q.mult(2, 2) == 1);  // {1}*{1} = {0}
    CHECK(q.mult(3, 3) == 3);
}

TEST_CASE("double negation nucleus on the min chain") {
    const auto& q = builtin("godel3");
    auto j = q.double_negation_nucleus(0);
    CHECK(j(0) == 0);
    CHECK(j(1) == 2);
    CHECK(j(2) == 2);
}

TEST_CASE("quotient by double negation on the min chain is the 2-chain") {
    const auto& q = builtin("godel3");
    auto g = girard_quotient(q, 0);
    REQUIRE(g.quotient.size() == 2);
    CHECK(g.embedding == std::vector<Elt>{0, 2});
    CHECK(g.omega_in_quotient == 0);
    CHECK(!g.quotient.is_dualizing(g.omega_in_quotient));
    // Multiplication restricted to the fixed points is meet.
    CHECK(g.quotient.mult(1, 1) == 1);
    CHECK(g.quotient.mult(0, 1) == 0);
    CHECK(g.quotient.unit() == 1);
}

TEST_CASE("quotient of an already dualizing quantale is the identity") {
    const auto& q = builtin("lukasiewicz3");
    auto g = girard_quotient(q, 0);
    CHECK(g.quotient.size() == q.size());
    CHECK(g.embedding == std::vector<Elt>{0, 1, 2});
    for (Elt a = 0; a < 3; ++a)
        for (Elt b = 0; b < 3; ++b) CHECK(g.quotient.mult(a, b) == q.mult(a, b));
}

TEST_CASE("quotient passes the quantale laws at every omega of every builtin") {
    for (const auto& q : builtin_corpus().quantales)
        for (Elt w = 0; w < q.size(); ++w) {
            auto g = girard_quotient(q, w);
            CHECK(!g.quotient.is_dualizing(g.omega_in_quotient));
            CHECK(g.embedding[g.omega_in_quotient] == q.double_negation_nucleus(w)(w));
        }
}

TEST_CASE("make rejects a multiplication that breaks the unit law") {
    auto lat = FinLattice::chain(2);
    std::vector<Elt> table = {0, 0, 0, 0};  // 1*1 = 0 contradicts unit 1
    auto r = FinQuantale::make(lat, 1, table);
    REQUIRE(std::holds_alternative<Violation>(r));
}
