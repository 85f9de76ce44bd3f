#include "doctest.h"
#include "liftq/corpus.hpp"
#include "liftq/presheaf.hpp"

using namespace liftq;

namespace {

const FinQuantale& builtin(const std::string& name) {
    static CorpusFile corpus = builtin_corpus();
    return find_quantale(corpus, name);
}

}  // namespace

TEST_CASE("pointwise instance encoding") {
    PowQ P(builtin("godel3"));
    auto X = FinSet::of(2);
    CHECK(P.carrier_size(X) == 9);
    CHECK(P.carrier_size(FinSet::empty()) == 1);
    CHECK(P.encode({1, 2}) == 7);  // little-endian in the point index
    CHECK(P.decode(X, 7) == std::vector<Elt>{1, 2});
    CHECK(P.bot(X) == 0);
    CHECK(P.top(X) == 8);
    CHECK(P.leq(X, P.encode({0, 1}), P.encode({1, 1})));
    CHECK(!P.leq(X, P.encode({2, 0}), P.encode({1, 2})));
    CHECK(P.join2(X, P.encode({0, 2}), P.encode({1, 0})) == P.encode({1, 2}));
    CHECK(P.meet2(X, P.encode({0, 2}), P.encode({1, 1})) == P.encode({0, 1}));
}

TEST_CASE("pointwise instance overflow guard") {
    PowQ P(builtin("godel3"));
    auto big = FinSet::of(64);
    CHECK(!P.supports(big));
    CHECK_THROWS_AS(P.carrier_size(big), CarrierTooLarge);
    CHECK_THROWS_AS(P.carrier(FinSet::of(10)), CarrierTooLarge);  // 3^10 > budget
}

TEST_CASE("pointwise morphism action, pairing and internal hom") {
    PowQ P(builtin("lukasiewicz3"));
    const auto& q = *P.base();
    auto X = FinSet::of(2);
    auto I = FinSet::singleton();

    // mu((1, 1/2), (1/2)) = (1*1/2, 1/2*1/2) = (1/2, 0), row-major.
    Elt a = P.encode({2, 1});
    Elt b = P.encode({1});
    CHECK(P.mu(X, I, a, b) == P.encode({1, 0}));
    CHECK(P.unit_elt() == q.unit());

    // Q(f)(a)(y) = join_x a(x) * f(x, y) for the graph of a function.
    QMat f(X, X, &q);
    f.set(0, 1, 2);
    f.set(1, 1, 2);
    CHECK(P.apply(f, P.encode({1, 2})) == P.encode({0, 2}));

    // iota((1, 1/2), (0)) = (1 -o 0, 1/2 -o 0) = (0, 1/2).
    auto io = P.iota_closed(X, I, a, P.encode({0}));
    REQUIRE(io.has_value());
    CHECK(*io == P.encode({0, 1}));

    // pairing(a, beta)(y) = join_x a(x) * beta(x, y).
    auto pc = P.pairing_closed(X, I, a, P.encode({2, 1}));
    REQUIRE(pc.has_value());
    CHECK(*pc == P.encode({2}));
}

TEST_CASE("pointwise instance passes all lifted-functor checkers") {
    for (const char* name : {"b2", "powz2"}) {
        PowQ P(builtin(name));
        Report rep;
        check_functoriality(P, 2, rep, 1u << 8);
        check_sup_preservation(P, 2, rep, 1u << 8);
        CHECK(check_mu_laws(P, 2, rep, 1u << 8));
        check_coherence(P, 2, rep);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("up-closed families carrier sizes follow the free distributive lattice") {
    Nuts P;
    CHECK(P.carrier_size(FinSet::empty()) == 2);
    CHECK(P.carrier_size(FinSet::of(1)) == 3);
    CHECK(P.carrier_size(FinSet::of(2)) == 6);
    CHECK(P.carrier_size(FinSet::of(3)) == 20);
    CHECK(P.carrier_size(FinSet::of(4)) == 168);
    CHECK(P.carrier(FinSet::of(2)).size() == 6);
}

TEST_CASE("up-closed families: closure, unit and action") {
    Nuts P;
    auto X = FinSet::of(2);
    // {{0}} up-closes to {{0}, {0,1}}: subset masks 1 and 3.
    CHECK(P.up_close(X, Elt{1} << 1) == ((Elt{1} << 1) | (Elt{1} << 3)));
    CHECK(P.unit_elt() == 2);
    CHECK(P.top(X) == (Elt{1} << 4) - 1);

    // Direct image along the relation {(0,0), (1,0)} collapses both points.
    const auto& q = *P.base();
    QMat f(X, X, &q);
    f.set(0, 0, 1);
    f.set(1, 0, 1);
    Elt fam = P.up_close(X, Elt{1} << 2);  // the family generated by {1}
    CHECK(P.apply(f, fam) == P.up_close(X, Elt{1} << 1));

    // mu pairs members into products inside P(X x Y).
    auto I = FinSet::singleton();
    Elt left = P.up_close(X, Elt{1} << 1);
    CHECK(P.mu(X, I, left, P.unit_elt()) == P.up_close(FinSet::product(X, I), Elt{1} << 1));
}

TEST_CASE("up-closed families pass the lifted-functor checkers") {
    Nuts P;
    Report rep;
    check_functoriality(P, 2, rep, 1u << 8);
    check_sup_preservation(P, 2, rep, 1u << 8);
    check_mu_laws(P, 2, rep, 1u << 8);
    check_coherence(P, 2, rep);
    CHECK(rep.all_pass());
}

TEST_CASE("point-subset instance basics") {
    Orth P(builtin("b2"));
    auto X = FinSet::of(1);
    CHECK(P.hom_count(X) == 2);
    CHECK(P.carrier_size(X) == 4);
    CHECK(P.unit_elt() == 2);  // the singleton of the unit point
    CHECK(!P.supports(FinSet::of(4)));  // 16 points exceed the bound
    Report rep;
    check_functoriality(P, 1, rep, 1u << 8);
    check_sup_preservation(P, 1, rep, 1u << 8);
    check_mu_laws(P, 1, rep, 1u << 8);
    check_coherence(P, 1, rep);
    CHECK(rep.all_pass());
}

TEST_CASE("point codes round-trip") {
    Orth P(builtin("godel3"));
    auto X = FinSet::of(2);
    for (Elt c = 0; c < P.hom_count(X); ++c) CHECK(P.point_code(P.point(X, c)) == c);
}

TEST_CASE("composite with the constant endofunctor") {
    auto inner = std::make_shared<PowQ>(builtin("b2"));
    const auto& q = *inner->base();
    auto I = FinSet::singleton();
    QMat mult(FinSet::product(I, I), I, &q);
    mult.set(0, 0, q.unit());
    QMat unit = QMat::identity(I, &q);
    ComposedPresheaf C(inner, EndoFunctor::constant(I, mult, unit));
    auto X = FinSet::of(3);
    CHECK(C.carrier_size(X) == 2);  // always Q(I)
    Report rep;
    check_functoriality(C, 2, rep, 1u << 8);
    check_sup_preservation(C, 2, rep, 1u << 8);
    check_mu_laws(C, 2, rep, 1u << 8);
    check_coherence(C, 2, rep);
    CHECK(rep.all_pass());
}
