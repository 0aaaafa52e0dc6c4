#include <doctest.h>

#include "qons/coaction.hpp"

using namespace qons;

namespace {
const std::tuple<const char*, int, int> kPairs[] = {
    {"a1^1", 0, 1}, {"a2^1", 0, 1}, {"c2^1", 0, 1}, {"g2^1", 1, 2}, {"a2^2", 0, 1}};
}

TEST_CASE("coaction images") {
    const CartanData cd = build("a2^1");
    const TensorPoly d1 = coact(cd, 1);
    CHECK(d1.size() == 3);
    CHECK(counit_left(d1) == NCPoly::letter(Letter::A(1)));
    // c = cbar = 0 leaves K^2 (x) A
    TensorPoly degenerate;
    const std::map<Symbol, RationalFn> kill{{Symbol::c(1), RationalFn(0)}, {Symbol::cbar(1), RationalFn(0)}};
    for (auto& [key, c] : d1.terms()) degenerate.add_term(key.first, key.second, substitute(c, kill));
    CHECK(degenerate == TensorPoly::pure(NCPoly(Monomial::kpow(1, 2)), NCPoly::letter(Letter::A(1))));
    // square of the two-term image (cbar = 0): 2 x 2 products, E K^3 (x) A collects two of them
    const std::map<Symbol, RationalFn> one_sided{{Symbol::cbar(1), RationalFn(0)}};
    TensorPoly two;
    for (auto& [key, c] : d1.terms()) two.add_term(key.first, key.second, substitute(c, one_sided));
    REQUIRE(two.size() == 2);
    const TensorPoly sq = tensor_multiply(two, two, cd);
    CHECK(sq.size() == 3);
    CHECK(counit_left(sq) == NCPoly(Monomial::letters({Letter::A(1), Letter::A(1)})));
}

TEST_CASE("O_q rewriting") {
    const CartanData cd = build("a2^1");
    const std::map<Symbol, RationalFn> rho{{Symbol::rho(0, 0, 1), RationalFn(3)}, {Symbol::rho(0, 1, 0), RationalFn(5)}};
    const OqRewrite oq(cd, 0, 1, rho);
    REQUIRE(oq.rules().size() == 2);
    CHECK(oq.rules()[0].lhs == Word{Letter::A(0), Letter::A(0), Letter::A(1)});
    CHECK(oq.rules()[1].lhs == Word{Letter::A(0), Letter::A(1), Letter::A(1)});
    // both relation elements reduce to zero
    for (auto [x, y] : {std::pair{0, 1}, std::pair{1, 0}}) {
        const NCPoly el = build_relation(cd, x, y).element().map_coefficients([&](auto& c) { return substitute(c, rho); });
        CHECK(oq.reduce(el).is_zero());
    }
    // irreducible words are fixed
    const NCPoly w(Monomial::letters({Letter::A(1), Letter::A(0), Letter::A(1)}));
    std::size_t steps = 7;
    CHECK(oq.reduce(w, &steps) == w);
    CHECK(steps == 0);
}

TEST_CASE("comodule algebra property for the five link types") {
    for (auto [id, i, j] : kPairs) {
        CAPTURE(id);
        const CartanData cd = build(id);
        const CoactionReport rep = verify_coaction_pair(cd, i, j);
        CHECK(rep.passed());
        REQUIRE(rep.checks.size() == 2);
        for (auto& c : rep.checks) {
            CHECK(c.intermediate_factors);
            CHECK(c.residual.is_zero());
            // the unit factor K_x^{2(1-a)} K_y^2
            CHECK(kexp_at(c.unit.k, c.x) == 2 * (1 - cd.a[c.x][c.y]));
            CHECK(kexp_at(c.unit.k, c.y) == 2);
        }
    }
}

TEST_CASE("coaction with K instead of K^2 fails") {
    for (auto [id, i, j] : kPairs) {
        CAPTURE(id);
        const CoactionReport rep = verify_coaction_pair(build(id), i, j, 1);
        CHECK_FALSE(rep.passed());
        CHECK_FALSE(rep.checks[0].residual.is_zero());
    }
}

TEST_CASE("coaction errors") {
    CHECK_THROWS_AS(verify_coaction_pair(build("a2^1"), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(coact(build("a2^1"), 5), std::out_of_range);
}
