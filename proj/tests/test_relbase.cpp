#include "doctest.h"
#include "liftq/corpus.hpp"
#include "liftq/relbase.hpp"

using namespace liftq;

namespace {

const FinQuantale* b2() {
    static FinQuantale q = FinQuantale::boolean();
    return &q;
}

}  // namespace

TEST_CASE("product pairing is row-major") {
    auto X = FinSet::of(2);
    auto Y = FinSet::of(3);
    auto XY = FinSet::product(X, Y);
    REQUIRE(XY.size == 6);
    // (x, y) -> x*|Y| + y, checked through the label texture.
    CHECK(XY.labels[1 * 3 + 2] == "(" + X.labels[1] + "," + Y.labels[2] + ")");
}

TEST_CASE("relation composition over the boolean base") {
    auto X = FinSet::of(2);
    QMat f(X, X, b2());  // f = {(0,1)}
    f.set(0, 1, 1);
    QMat g(X, X, b2());  // g = {(1,0), (1,1)}
    g.set(1, 0, 1);
    g.set(1, 1, 1);
    auto h = f.then(g);
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(0, 1) == 1);
    CHECK(h.at(1, 0) == 0);
    CHECK(h.at(1, 1) == 0);
    CHECK(f.converse().at(1, 0) == 1);
    CHECK(f.converse().at(0, 1) == 0);
}

TEST_CASE("composition joins parallel paths in a quantale base") {
    CorpusFile corpus = builtin_corpus();
    const auto& q = find_quantale(corpus, "lukasiewicz3");
    auto X = FinSet::of(2);
    auto I = FinSet::singleton();
    QMat f(I, X, &q);
    f.set(0, 0, 1);
    f.set(0, 1, 1);
    QMat g(X, I, &q);
    g.set(0, 0, 1);
    g.set(1, 0, 2);
    // join(1*1, 1*2) = join(0, 1) = 1.
    CHECK(f.then(g).at(0, 0) == 1);
}

TEST_CASE("identity and tensor") {
    auto X = FinSet::of(2);
    auto id = QMat::identity(X, b2());
    CHECK(id.at(0, 0) == 1);
    CHECK(id.at(0, 1) == 0);
    auto t = id.tensor(id);
    CHECK(t.dom().size == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(t.at(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("structural isomorphisms are struct isos and compose to identity") {
    auto X = FinSet::of(2);
    auto Y = FinSet::of(3);
    auto Z = FinSet::of(2);
    auto a = structural(StructKind::associator, {X, Y, Z}, b2());
    CHECK(a.is_struct_iso());
    auto XYZ = a.dom();
    CHECK(a.then(a.inverse()) == QMat::identity(XYZ, b2()));
    auto s = structural(StructKind::symmetry, {X, Y}, b2());
    // (x, y) -> (y, x) on row-major codes.
    CHECK(s.at(0 * 3 + 2, 2 * 2 + 0) == 1);
    CHECK(s.at(0 * 3 + 2, 0) == 0);
    auto lu = structural(StructKind::left_unitor, {X}, b2());
    CHECK(lu.dom().size == 2);
    CHECK(lu.at(1, 1) == 1);
}

TEST_CASE("evaluation and coevaluation graphs") {
    auto X = FinSet::of(2);
    auto Y = FinSet::of(2);
    auto ev = ev_relation(X, Y, b2());
    CHECK(ev.dom().size == 2 * 4);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t x2 = 0; x2 < 2; ++x2)
            for (std::size_t y = 0; y < 2; ++y)
                CHECK(ev.at(x * 4 + (x2 * 2 + y), y) == (x == x2 ? 1 : 0));
    auto eta = eta_relation(X, Y, b2());
    CHECK(eta.dom().size == 2);
    for (std::size_t y = 0; y < 2; ++y)
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t p = 0; p < 4; ++p)
                CHECK(eta.at(y, x * 4 + p) == (p == x * 2 + y ? 1 : 0));
}

TEST_CASE("internal hom of morphisms is converse tensor") {
    auto X = FinSet::of(2);
    QMat f(X, X, b2());
    f.set(0, 1, 1);
    QMat g(X, X, b2());
    g.set(1, 1, 1);
    CHECK(f.internal_hom(g) == f.converse().tensor(g));
}

TEST_CASE("morphism enumeration count and order") {
    auto X = FinSet::of(2);
    auto I = FinSet::singleton();
    auto ms = all_mats(X, I, b2());
    REQUIRE(ms.size() == 4);  // 2^(2*1)
    CHECK(ms[0].at(0, 0) == 0);
    CHECK(ms[0].at(1, 0) == 0);
    // Entry-lex order: the first entry varies fastest.
    CHECK(ms[1].at(0, 0) == 1);
    CHECK(ms[1].at(1, 0) == 0);
    CHECK(ms[3].at(0, 0) == 1);
    CHECK(ms[3].at(1, 0) == 1);
    CHECK_THROWS_AS(all_mats(X, X, b2(), 8), CarrierTooLarge);

    CorpusFile corpus = builtin_corpus();
    const auto& g3 = find_quantale(corpus, "godel3");
    CHECK(all_mats(X, I, &g3).size() == 9);  // 3^2
}

TEST_CASE("iso enumeration lists permutation graphs") {
    auto X = FinSet::of(3);
    CHECK(all_iso_mats(X, X, b2()).size() == 6);
    CHECK(all_iso_mats(X, FinSet::of(2), b2()).empty());
    for (const auto& m : all_iso_mats(X, X, b2())) CHECK(m.is_struct_iso());
}

TEST_CASE("struct iso recognition rejects non-bijections") {
    auto X = FinSet::of(2);
    QMat f(X, X, b2());
    f.set(0, 0, 1);
    f.set(1, 0, 1);
    CHECK(!f.is_struct_iso());
    CorpusFile corpus = builtin_corpus();
    const auto& g3 = find_quantale(corpus, "godel3");
    QMat h(X, X, &g3);
    h.set(0, 1, 1);  // entry below the unit
    h.set(1, 0, 2);
    CHECK(!h.is_struct_iso());
}
