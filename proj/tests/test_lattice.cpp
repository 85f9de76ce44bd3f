#include "doctest.h"
#include "liftq/lattice.hpp"

using namespace liftq;

TEST_CASE("chain lattice basics") {
    auto c = FinLattice::chain(4);
    CHECK(c.size() == 4);
    CHECK(c.bot() == 0);
    CHECK(c.top() == 3);
    CHECK(c.leq(1, 3));
    CHECK(!c.leq(3, 1));
    CHECK(c.join2(1, 2) == 2);
    CHECK(c.meet2(1, 2) == 1);
    std::vector<Elt> empty;
    CHECK(c.join(empty) == 0);
    CHECK(c.meet(empty) == 3);
}

TEST_CASE("make rejects a non-lattice order with a witness") {
    // Two incomparable atoms under a shared top but no bottom: {a, b, 1}.
    std::vector<std::vector<bool>> leq = {
        {true, false, true},
        {false, true, true},
        {false, false, true},
    };
    auto r = FinLattice::make(leq);
    REQUIRE(std::holds_alternative<Violation>(r));
    CHECK(!std::get<Violation>(r).law.empty());
    CHECK_THROWS_AS(FinLattice::make_or_throw(leq), ValidationError);
}

TEST_CASE("make rejects a non-antisymmetric relation") {
    std::vector<std::vector<bool>> leq = {{true, true}, {true, true}};
    CHECK(std::holds_alternative<Violation>(FinLattice::make(leq)));
}

TEST_CASE("diamond lattice join and meet tables") {
    // 0 < a, b < 1 with a, b incomparable.
    std::vector<std::vector<bool>> leq = {
        {true, true, true, true},
        {false, true, false, true},
        {false, false, true, true},
        {false, false, false, true},
    };
    auto d = FinLattice::make_or_throw(leq);
    CHECK(d.join2(1, 2) == 3);
    CHECK(d.meet2(1, 2) == 0);
    CHECK(d.join2(0, 1) == 1);
    CHECK(d.meet2(3, 2) == 2);
}

TEST_CASE("opposite is involutive and swaps bounds") {
    auto c = FinLattice::chain(3);
    auto op = c.opposite();
    CHECK(op.bot() == 2);
    CHECK(op.top() == 0);
    CHECK(op.leq(2, 0));
    auto back = op.opposite();
    for (Elt a = 0; a < 3; ++a)
        for (Elt b = 0; b < 3; ++b) CHECK(back.leq(a, b) == c.leq(a, b));
}

TEST_CASE("right adjoint of a sup map satisfies the adjunction") {
    auto c = FinLattice::chain(3);
    // Monotone with f(bot) = bot, hence sup-preserving on a chain.
    SupMap f{MonoMap{c, c, {0, 2, 2}}};
    REQUIRE(!f.check_sup_preserving());
    auto g = right_adjoint(f);
    for (Elt x = 0; x < 3; ++x)
        for (Elt y = 0; y < 3; ++y) CHECK(c.leq(f(x), y) == c.leq(x, g(y)));
    CHECK(g(0) == 0);
    CHECK(g(1) == 0);
    CHECK(g(2) == 2);
}

TEST_CASE("right adjoint rejects non-sup-preserving maps") {
    auto c = FinLattice::chain(3);
    SupMap f{MonoMap{c, c, {1, 1, 2}}};  // f(bot) != bot
    CHECK_THROWS_AS(right_adjoint(f), ValidationError);
}

TEST_CASE("closure operator recognition") {
    auto c = FinLattice::chain(3);
    MonoMap j{c, c, {0, 2, 2}};
    CHECK(!is_closure_operator(j));
    MonoMap not_inflationary{c, c, {0, 0, 2}};
    CHECK(is_closure_operator(not_inflationary).has_value());
}

TEST_CASE("fixed points by iteration") {
    auto c = FinLattice::chain(4);
    MonoMap f{c, c, {1, 1, 2, 3}};
    std::size_t it = 0;
    CHECK(greatest_fixpoint(f, &it) == 3);
    CHECK(it == 1);
    CHECK(least_fixpoint(f, &it) == 1);
    CHECK(it == 2);
    MonoMap id{c, c, {0, 1, 2, 3}};
    CHECK(greatest_fixpoint(id) == 3);
    CHECK(least_fixpoint(id) == 0);
}
