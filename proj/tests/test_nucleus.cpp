#include "doctest.h"
#include "liftq/corpus.hpp"
#include "liftq/nucleus.hpp"

using namespace liftq;

namespace {

const FinQuantale& builtin(const std::string& name) {
    static CorpusFile corpus = builtin_corpus();
    return find_quantale(corpus, name);
}

}  // namespace

TEST_CASE("double negation family on the min chain closes the middle value") {
    auto P = std::make_shared<PowQ>(builtin("godel3"));
    NucleusFamily fam(P, DualCandidate{0});
    auto X = FinSet::of(1);
    CHECK(fam.jmath(X, P->encode({0})) == P->encode({0}));
    CHECK(fam.jmath(X, P->encode({1})) == P->encode({2}));
    CHECK(fam.jmath(X, P->encode({2})) == P->encode({2}));
    CHECK(fam.supports(X));
    CHECK(!fam.supports(FinSet::of(40)));
}

TEST_CASE("double negation family is the identity when already dualizing") {
    auto P = std::make_shared<PowQ>(builtin("lukasiewicz3"));
    NucleusFamily fam(P, DualCandidate{0});
    auto X = FinSet::of(2);
    for (Elt a : P->carrier(X)) CHECK(fam.jmath(X, a) == a);
}

TEST_CASE("nucleus laws pass on the min chain") {
    auto P = std::make_shared<PowQ>(builtin("godel3"));
    NucleusFamily fam(P, DualCandidate{0});
    Report rep;
    check_nucleus_laws(fam, 2, rep, 1u << 8);
    CHECK(rep.all_pass());
}

TEST_CASE("quotient presheaf carrier and laws on the min chain") {
    auto P = std::make_shared<PowQ>(builtin("godel3"));
    NucleusFamily fam(P, DualCandidate{0});
    auto qj = build_qj(fam, 2, 1u << 8);

    auto X = FinSet::of(1);
    CHECK(qj->carrier_size(X) == 2);
    auto car = qj->carrier(X);
    REQUIRE(car.size() == 2);
    CHECK(car[0] == P->encode({0}));
    CHECK(car[1] == P->encode({2}));
    CHECK(qj->unit_elt() == P->encode({2}));
    CHECK(qj->carrier_size(FinSet::of(2)) == 4);

    // The quotient is dualizing even though the original presheaf is not.
    Report rep;
    CHECK(check_dualizing(*qj, DualCandidate{0}, 2, rep));
    girard_consistency_check(*qj, builtin("godel3"), 0, rep);
    CHECK(rep.all_pass());
}

TEST_CASE("powerset-of-sections presheaf and principal downsets") {
    auto inner = std::make_shared<PowQ>(builtin("b2"));
    PUQPresheaf P(inner);
    auto X = FinSet::of(1);
    CHECK(P.carrier_size(X) == 4);  // subsets of the 2-element carrier
    Elt d0 = P.down_set(X, inner->encode({0}));
    Elt d1 = P.down_set(X, inner->encode({1}));
    CHECK(P.leq(X, d0, d1));
    CHECK(d0 != d1);
    CHECK(P.encode_set(X, {inner->encode({0})}) == d0);
    Report rep;
    check_functoriality(P, 1, rep, 1u << 8);
    check_sup_preservation(P, 1, rep, 1u << 8);
    check_mu_laws(P, 1, rep, 1u << 8);
    CHECK(rep.all_pass());
}

TEST_CASE("representation holds for dualizing bases") {
    for (const char* name : {"lukasiewicz3", "b2"}) {
        auto inner = std::make_shared<PowQ>(builtin(name));
        Report rep;
        representation_check(inner, DualCandidate{0}, 2, rep, 1u << 8);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("representation detects non-dualizing candidates") {
    auto inner = std::make_shared<PowQ>(builtin("godel3"));
    Report rep;
    representation_check(inner, DualCandidate{0}, 2, rep, 1u << 8);
    CHECK(!rep.all_pass());
}
