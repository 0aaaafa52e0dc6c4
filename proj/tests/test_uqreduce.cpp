#include <doctest.h>

#include "qons/uqreduce.hpp"

#include "oracle_reps.hpp"

#include <random>

using namespace qons;

namespace {

RationalFn T(int e) { return RationalFn::t_power(e); }

Monomial random_monomial(std::mt19937_64& rng, int i, int j, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen), pick(0, 3), kx(-2, 2);
    Monomial m;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) {
        const int c = pick(rng);
        const int node = c % 2 ? j : i;
        m.word.push_back(c < 2 ? Letter::E(node) : Letter::F(node));
    }
    m.k.assign(std::max(i, j) + 1, 0);
    m.k[i] = kx(rng);
    m.k[j] = kx(rng);
    trim_kexp(m.k);
    return m;
}

const Rule* find_rule(const RewriteSystem& rs, const std::string& name) {
    for (auto& r : rs.rules())
        if (r.name == name) return &r;
    return nullptr;
}

} // namespace

TEST_CASE("e-f straightening") {
    const CartanData cd = build("a1^1");
    const RewriteSystem rs(cd, 0, 1);
    const NCPoly nf = normal_form(NCPoly(Monomial::letters({Letter::E(0), Letter::F(0)})), rs);
    const RationalFn inv = (T(2) - T(-2)).inverse();
    NCPoly expect(Monomial::letters({Letter::F(0), Letter::E(0)}));
    expect.add_term(Monomial::kpow(0, 2), inv);
    expect.add_term(Monomial::kpow(0, -2), -inv);
    CHECK(nf == expect);

    // distinct nodes simply commute
    CHECK(normal_form(NCPoly(Monomial::letters({Letter::E(1), Letter::F(0)})), rs) ==
          NCPoly(Monomial::letters({Letter::F(0), Letter::E(1)})));
}

TEST_CASE("oriented Serre rules") {
    SUBCASE("a_ij = -1") {
        const RewriteSystem rs(build("a2^1"), 0, 1);
        const NCPoly nf = normal_form(NCPoly(Monomial::letters({Letter::E(0), Letter::E(0), Letter::E(1)})), rs);
        NCPoly expect;
        expect.add_term(Monomial::letters({Letter::E(0), Letter::E(1), Letter::E(0)}), T(2) + T(-2));
        expect.add_term(Monomial::letters({Letter::E(1), Letter::E(0), Letter::E(0)}), RationalFn(-1));
        CHECK(nf == expect);
        // the mirrored F rule
        const NCPoly nff = normal_form(NCPoly(Monomial::letters({Letter::F(0), Letter::F(0), Letter::F(1)})), rs);
        NCPoly expf;
        expf.add_term(Monomial::letters({Letter::F(0), Letter::F(1), Letter::F(0)}), T(2) + T(-2));
        expf.add_term(Monomial::letters({Letter::F(1), Letter::F(0), Letter::F(0)}), RationalFn(-1));
        CHECK(nff == expf);
    }
    SUBCASE("a_ij = -4 leads with coefficient one") {
        const CartanData cd = build("a2^2");
        const RewriteSystem rs(cd, 0, 1);
        const Rule* r = find_rule(rs, "serreE(1,0)");
        REQUIRE(r != nullptr);
        CHECK(r->lhs == Word{Letter::E(0), Letter::E(1), Letter::E(1), Letter::E(1), Letter::E(1), Letter::E(1)});
        CHECK(r->rhs.size() == 5);
        for (int k = 0; k < 5; ++k) {
            // E1^{5-k} E0 E1^k with coefficient (-1)^k [5;k]_{q_1}
            Word w;
            for (int m = 0; m < 5 - k; ++m) w.push_back(Letter::E(1));
            w.push_back(Letter::E(0));
            for (int m = 0; m < k; ++m) w.push_back(Letter::E(1));
            bool found = false;
            for (auto& t : r->rhs)
                if (t.word == w) {
                    found = true;
                    CHECK(t.coef == qbinom(5, k, cd.d[1]) * RationalFn(k % 2 ? -1 : 1));
                }
            CHECK(found);
        }
        CHECK(rs.certified_degree() == 10);
    }
    SUBCASE("unlinked nodes commute") {
        const RewriteSystem rs(build("a3^1"), 0, 2);
        CHECK(normal_form(NCPoly(Monomial::letters({Letter::E(0), Letter::E(2)})), rs) ==
              NCPoly(Monomial::letters({Letter::E(2), Letter::E(0)})));
    }
}

TEST_CASE("every defining relation reduces to zero") {
    for (auto [id, i, j] : {std::tuple{"a1^1", 0, 1}, {"a2^1", 0, 1}, {"c2^1", 0, 1}, {"g2^1", 1, 2}, {"a2^2", 0, 1}}) {
        CAPTURE(id);
        const RewriteSystem rs(build(id), i, j);
        for (auto& [name, rel] : defining_relations(rs)) {
            CAPTURE(name);
            CHECK(normal_form(rel, rs).is_zero());
        }
    }
}

TEST_CASE("soundness against evaluation representations") {
    std::mt19937_64 rng(2024);
    using namespace oracle;
    for (auto [id, i, j, rep] : {std::tuple{"a1^1", 0, 1, rep_a11()}, {"a2^1", 0, 1, rep_a21()}, {"c2^1", 0, 1, rep_c21()},
                                 {"g2^1", 1, 2, rep_g21()}, {"a2^2", 0, 1, rep_a22()}}) {
        CAPTURE(id);
        const CartanData cd = build(id);
        const RewriteSystem rs(cd, i, j);
        CHECK(violated_relation(rep, cd) == "");
        for (auto& [name, rel] : defining_relations(rs)) CHECK(is_zero(act(rep, rel)));
        for (int k = 0; k < 30; ++k) {
            const NCPoly p(random_monomial(rng, i, j, 6), T(k % 3 - 1));
            CHECK(act(rep, normal_form(p, rs)) == act(rep, p));
        }
    }
}

TEST_CASE("normal forms are idempotent and ordered") {
    std::mt19937_64 rng(99);
    const RewriteSystem rs(build("g2^1"), 1, 2);
    for (int k = 0; k < 30; ++k) {
        const NCPoly p(random_monomial(rng, 1, 2, 5));
        ReductionTrace tr;
        const NCPoly nf = normal_form(p, rs, &tr);
        CHECK(normal_form(nf, rs) == nf);
        CHECK(tr.max_block_degree <= rs.certified_degree());
        for (auto& [m, c] : nf.terms()) {
            bool seen_e = false, ok = true;
            for (auto l : m.word) {
                if (l.kind == LetterKind::E) seen_e = true;
                else if (seen_e) ok = false;
            }
            CHECK(ok); // F-part before E-part
        }
    }
}

TEST_CASE("ideal corpus over the five link types") {
    std::size_t total = 0;
    for (auto [id, i, j] : {std::tuple{"a1^1", 0, 1}, {"a2^1", 0, 1}, {"c2^1", 0, 1}, {"g2^1", 1, 2}, {"a2^2", 0, 1}}) {
        CAPTURE(id);
        const RewriteSystem rs(build(id), i, j);
        const CorpusReport rep = ideal_corpus(rs, 50, 7);
        CHECK(rep.passed());
        for (auto& f : rep.failing) MESSAGE(f);
        total += rep.instances;
    }
    CHECK(total >= 250);
}

TEST_CASE("critical overlaps are joinable") {
    for (auto [id, i, j] : {std::tuple{"a1^1", 0, 1}, {"a2^1", 0, 1}, {"c2^1", 0, 1}, {"g2^1", 1, 2}, {"a2^2", 0, 1}}) {
        CAPTURE(id);
        const RewriteSystem rs(build(id), i, j);
        const OverlapReport rep = overlap_check(rs, rs.longest_lhs() + 2);
        CHECK(!rep.entries.empty());
        CHECK(rep.all_joinable());
        for (auto& e : rep.entries)
            if (!e.joinable) MESSAGE(e.rule1 << " / " << e.rule2 << " on " << e.word);
    }
}

TEST_CASE("rewriting errors") {
    const RewriteSystem rs(build("a2^1"), 0, 1);
    CHECK_THROWS_AS(normal_form(NCPoly::letter(Letter::E(2)), rs), std::invalid_argument);
    CHECK_THROWS_AS(normal_form(NCPoly::letter(Letter::A(0)), rs), std::invalid_argument);
    CHECK_THROWS_AS(RewriteSystem(build("a2^1"), 1, 1), std::invalid_argument);
}
