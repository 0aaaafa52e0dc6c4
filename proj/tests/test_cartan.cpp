#include <doctest.h>

#include "qons/cartan.hpp"

#include <gmpxx.h>

using namespace qons;

namespace {

// Rank of an integer matrix by Gaussian elimination over Q.
int matrix_rank(const std::vector<std::vector<int>>& m) {
    std::vector<std::vector<mpq_class>> a;
    for (auto& row : m) a.emplace_back(row.begin(), row.end());
    const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mpq_class f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

TEST_CASE("cartan examples") {
    const auto a11 = build("a1^1");
    CHECK(a11.a == std::vector<std::vector<int>>{{2, -2}, {-2, 2}});
    CHECK(a11.d == std::vector<int>{1, 1});
    CHECK(a11.marks == std::vector<int>{1, 1});

    const auto a22 = build("a2^2");
    CHECK(a22.a == std::vector<std::vector<int>>{{2, -1}, {-4, 2}});
    CHECK(a22.d == std::vector<int>{4, 1});
    CHECK(a22.marks == std::vector<int>{1, 2});

    const auto g2 = build("g2^1");
    CHECK(g2.a == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -3, 2}});
    CHECK(g2.d == std::vector<int>{3, 3, 1});
    CHECK(g2.marks == std::vector<int>{1, 2, 3});
}

TEST_CASE("link classification") {
    CHECK(links(build("a1^1")) == std::vector<LinkClass>{{0, 1, LinkKind::DoubleBoth, -1}});
    CHECK(links(build("g2^1")) ==
          std::vector<LinkClass>{{0, 1, LinkKind::Simple, -1}, {1, 2, LinkKind::Triple, 1}});
    CHECK(links(build("d3^2")) ==
          std::vector<LinkClass>{{0, 1, LinkKind::Double, 1}, {1, 2, LinkKind::Double, 1}});
    CHECK(links(build("a2^2")) == std::vector<LinkClass>{{0, 1, LinkKind::Quadruple, 0}});
    CHECK(links(build("d4^3")).back() == LinkClass{1, 2, LinkKind::Triple, 2});
    CHECK(links(build("b3^1")).back() == LinkClass{2, 3, LinkKind::Double, 2});
    CHECK(links(build("c2^1")) ==
          std::vector<LinkClass>{{0, 1, LinkKind::Double, 0}, {1, 2, LinkKind::Double, 2}});
    CHECK(links(build("a3^1")).size() == 4);
}

TEST_CASE("affine invariants for every admissible type up to rank 8") {
    const auto ids = admissible_ids(8);
    CHECK(ids.size() > 30);
    for (const auto& id : ids) {
        CAPTURE(id.to_string());
        const CartanData cd = build(id);
        const int n = cd.size();
        CHECK(matrix_rank(cd.a) == n - 1); // singular with one-dimensional kernel
        for (int i = 0; i < n; ++i) {
            long s = 0;
            for (int j = 0; j < n; ++j) {
                s += static_cast<long>(cd.a[i][j]) * cd.marks[j];
                CHECK(cd.d[i] * cd.a[i][j] == cd.d[j] * cd.a[j][i]);
                if (i != j && cd.a[i][j] != 0) {
                    const int x = std::min(cd.a[i][j], cd.a[j][i]), y = std::max(cd.a[i][j], cd.a[j][i]);
                    const bool known = (y == -1 && x >= -4) || (x == -2 && y == -2);
                    CHECK(known);
                }
            }
            CHECK(s == 0);
        }
        const CartanData again = build(id);
        CHECK(again.a == cd.a);
        CHECK(again.d == cd.d);
        CHECK(again.marks == cd.marks);
        CHECK(parse_algebra_id(id.to_string()) == id);
    }
}

TEST_CASE("algebra id grammar") {
    CHECK(parse_algebra_id("a2^2") == AlgebraId{'a', 2, 2});
    CHECK(parse_algebra_id("g2^1 ") == AlgebraId{'g', 2, 1});
    CHECK(parse_algebra_id("  d4^3") == AlgebraId{'d', 4, 3});
    CHECK_THROWS_AS(parse_algebra_id("g2"), AlgebraSyntaxError);
    CHECK_THROWS_AS(parse_algebra_id("x2^1"), AlgebraSyntaxError);
    CHECK_THROWS_AS(parse_algebra_id("a2^^1"), AlgebraSyntaxError);
    CHECK_THROWS_AS(parse_algebra_id("a2^4"), AlgebraSyntaxError);
    CHECK_THROWS_AS(parse_algebra_id("b2^1"), InadmissibleAlgebra);
    CHECK_THROWS_AS(parse_algebra_id("a3^2"), InadmissibleAlgebra);
    CHECK_THROWS_AS(parse_algebra_id("d3^1"), InadmissibleAlgebra);
    CHECK_THROWS_AS(parse_algebra_id("e5^1"), InadmissibleAlgebra);
    CHECK_THROWS_AS(parse_algebra_id("g2^3"), InadmissibleAlgebra);
    try {
        parse_algebra_id("b2^1");
    } catch (const InadmissibleAlgebra& e) {
        CHECK(std::string(e.what()).find("minimum 3") != std::string::npos);
    }
    CHECK(AlgebraId{'e', 6, 2}.to_string() == "e6^2");
}
