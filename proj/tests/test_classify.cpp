#include <doctest.h>

#include "qons/classify.hpp"

#include <cmath>

using namespace qons;

namespace {

const char* kTypes[] = {"a2^1", "a3^1", "b3^1", "c2^1", "c3^1", "d4^1", "a5^2", "a6^2",
                        "d3^2", "a2^2", "a4^2", "g2^1", "d4^3", "f4^1", "e6^2", "e6^1"};

/// Family validity by exact polynomial reduction: every published constraint of every
/// link reduces to zero modulo the atoms the family imposes on the link's nodes.
bool valid_by_reduction(const CartanData& cd, const std::vector<Tag>& tags) {
    for (const auto& l : links(cd)) {
        std::vector<WPoly> polys;
        for (auto& c : reference_constraints(cd, l.i, l.j)) polys.push_back(c.poly);
        std::vector<Atom> branch;
        for (int n : {l.i, l.j}) {
            if (tags[n] == Tag::Zero) branch.push_back({AtomKind::Zero, n});
            if (tags[n] == Tag::Root1) branch.push_back({AtomKind::Root1, n});
            if (tags[n] == Tag::Root2) branch.push_back({AtomKind::Root2, n});
        }
        if (!vanishes_on_branch(polys, branch, cd)) return false;
    }
    return true;
}

/// All 4^N tag vectors, filtered for validity and maximality.
std::vector<SolutionFamily> brute_force(const CartanData& cd) {
    const int N = cd.size();
    std::vector<SolutionFamily> valid;
    std::vector<Tag> tags(N);
    for (int code = 0; code < (1 << (2 * N)); ++code) {
        for (int n = 0; n < N; ++n) tags[n] = static_cast<Tag>((code >> (2 * n)) & 3);
        if (valid_by_reduction(cd, tags)) valid.push_back({tags});
    }
    std::vector<SolutionFamily> out;
    for (auto& f : valid)
        if (std::none_of(valid.begin(), valid.end(), [&](auto& g) { return g.strictly_contains(f); })) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

std::complex<double> atom_value(const CartanData& cd, const Atom& a, std::complex<double> w, double t) {
    const double qn = std::pow(t, 2 * cd.d[a.node]);
    const double kap = 1.0 / (qn + 1.0 / qn - 2.0);
    switch (a.kind) {
    case AtomKind::Zero: return w;
    case AtomKind::Root1: return w * w + kap;
    case AtomKind::Root2: return w * w + kap * std::pow(qn + 1.0 / qn - 1.0, 2);
    }
    return {};
}

} // namespace

TEST_CASE("constraint templates") {
    SUBCASE("a2^1: two equations per simple link") {
        const auto cs = constraints_for(build("a2^1"));
        CHECK(cs.constraints.size() == 6);
        CHECK(cs.constraints[0].to_string() == "w1*(w0^2 + 1/(q0 + q0^-1 - 2)) = 0");
    }
    SUBCASE("a2^2: a single equation on the long node") {
        const auto cs = constraints_for(build("a2^2"));
        REQUIRE(cs.constraints.size() == 1);
        CHECK(cs.constraints[0].atoms == std::vector<Atom>{{AtomKind::Zero, 1}, {AtomKind::Root1, 0}});
    }
    SUBCASE("g2^1: simple pair plus the triple pair with the quartic") {
        const auto cs = constraints_for(build("g2^1"));
        REQUIRE(cs.constraints.size() == 4);
        CHECK(cs.constraints[3].atoms ==
              std::vector<Atom>{{AtomKind::Zero, 1}, {AtomKind::Root1, 2}, {AtomKind::Root2, 2}});
    }
}

TEST_CASE("enumerator equals the brute-force oracle") {
    for (auto id : {"a2^1", "a2^2", "c2^1", "g2^1", "d4^3"}) {
        CAPTURE(id);
        const CartanData cd = build(id);
        CHECK(enumerate_families(constraints_for(cd)) == brute_force(cd));
    }
}

TEST_CASE("family counts") {
    auto count = [](const char* id) { return enumerate_families(constraints_for(build(id))).size(); };
    CHECK(count("a2^1") == 2);
    CHECK(count("a2^2") == 2);
    CHECK(count("d4^3") == 2);
    CHECK(count("g2^1") == 3);
    const auto a22 = enumerate_families(constraints_for(build("a2^2")));
    CHECK(a22 == std::vector<SolutionFamily>{{{Tag::Free, Tag::Zero}}, {{Tag::Root1, Tag::Free}}});
}

TEST_CASE("every family solves its system and is maximal") {
    for (auto id : kTypes) {
        CAPTURE(id);
        const CartanData cd = build(id);
        const auto cs = constraints_for(cd);
        const auto fams = enumerate_families(cs);
        CHECK_FALSE(fams.empty());
        for (auto& f : fams) {
            CHECK(f.solves(cs));
            CHECK(valid_by_reduction(cd, f.tags));
            for (std::size_t n = 0; n < f.tags.size(); ++n) {
                if (f.tags[n] == Tag::Free) continue;
                auto g = f;
                g.tags[n] = Tag::Free;
                CHECK_FALSE(g.solves(cs));
            }
            for (auto& g : fams) CHECK_FALSE(g.strictly_contains(f));
        }
    }
}

TEST_CASE("comparison with the published lists") {
    for (auto id : kTypes) {
        CAPTURE(id);
        const CartanData cd = build(id);
        const auto rep = compare_with_paper(cd, enumerate_families(constraints_for(cd)));
        CHECK(rep.all_reference_matched());
        CHECK(rep.extras_zero_type());
    }
    SUBCASE("b3^1 matched exactly") {
        const CartanData cd = build("b3^1");
        const auto rep = compare_with_paper(cd, enumerate_families(constraints_for(cd)));
        const SolutionFamily expect{{Tag::Root1, Tag::Root1, Tag::Root1, Tag::Free}};
        auto it = std::find(rep.computed.begin(), rep.computed.end(), expect);
        REQUIRE(it != rep.computed.end());
        CHECK(rep.match[it - rep.computed.begin()] == PaperMatch::Exact);
    }
    SUBCASE("f4^1: no extras beyond all-zero") {
        const CartanData cd = build("f4^1");
        const auto rep = compare_with_paper(cd, enumerate_families(constraints_for(cd)));
        for (std::size_t k = 0; k < rep.computed.size(); ++k)
            if (rep.match[k] == PaperMatch::Extra)
                CHECK(rep.computed[k] == SolutionFamily{std::vector<Tag>(5, Tag::Zero)});
    }
    SUBCASE("c2^1: interior node free in the computed family") {
        const CartanData cd = build("c2^1");
        const auto rep = compare_with_paper(cd, enumerate_families(constraints_for(cd)));
        const SolutionFamily big{{Tag::Root1, Tag::Free, Tag::Root1}};
        auto it = std::find(rep.computed.begin(), rep.computed.end(), big);
        REQUIRE(it != rep.computed.end());
        CHECK(rep.match[it - rep.computed.begin()] == PaperMatch::Subsumed);
    }
    CHECK_THROWS_AS(compare_with_paper(build("a1^1"), {}), std::invalid_argument);
}

TEST_CASE("numeric instantiation") {
    const CartanData a = build("a2^1");
    const auto v = instantiate_node(a, Tag::Root1, 0, 2.0);
    REQUIRE(v.has_value());
    CHECK(v->real() == 0.0);
    CHECK(v->imag() == doctest::Approx(2.0 / 3.0));
    CHECK(*instantiate_node(a, Tag::Zero, 0, 2.0) == std::complex<double>(0, 0));
    CHECK_FALSE(instantiate_node(a, Tag::Free, 0, 2.0).has_value());
    CHECK_THROWS_AS(instantiate_node(a, Tag::Root1, 0, 1.0), std::domain_error);
    // g2^1 node 2 second factor: i (q + q^-1 - 1)/(q^1/2 - q^-1/2)
    const double t = 1.5, q = t * t;
    CHECK(instantiate_node(build("g2^1"), Tag::Root2, 2, t)->imag() == doctest::Approx((q + 1 / q - 1) / (t - 1 / t)));

    const std::complex<double> free_value(0.37, -1.3);
    for (auto id : kTypes) {
        CAPTURE(id);
        const CartanData cd = build(id);
        const auto cs = constraints_for(cd);
        for (auto& f : enumerate_families(cs))
            for (double tv : {2.0, 1.5}) {
                const auto w = instantiate_numeric(cd, f, tv);
                for (auto& c : cs.constraints) {
                    std::complex<double> prod = 1;
                    for (auto& at : c.atoms) prod *= atom_value(cd, at, w[at.node].value_or(free_value), tv);
                    CHECK(std::abs(prod) < 1e-10);
                }
            }
    }
}

TEST_CASE("q_n + q_n^-1 - 2 is a perfect square") {
    for (int d = 1; d <= 4; ++d) {
        const RationalFn lhs = RationalFn::q_power(d) + RationalFn::q_power(-d) - RationalFn(2);
        CHECK(lhs == (RationalFn::t_power(d) - RationalFn::t_power(-d)).pow(2));
    }
}
