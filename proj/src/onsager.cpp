#include "qons/onsager.hpp"

#include <stdexcept>

namespace qons {

namespace {

RationalFn q(int e) { return RationalFn::q_power(e); }

bool affine_pattern(int a, int b) {
    if (a == -2 && b == -2) return true;
    if (a == -1 && b >= -4 && b <= -1) return true;
    return b == -1 && a >= -4 && a <= -1;
}

} // namespace

int rho_count(int a) { return (-a + 1) / 2; }

int gamma_l_count(int a, int k) { return -a - 2 * k; }

bool gamma_range_inferred(int a_self, int k) { return a_self == -4 && k == 1; }

RationalFn gamma(int a_self, int a_other, int k, int l) {
    if (!affine_pattern(a_self, a_other))
        throw std::invalid_argument("no gamma table for the pair (" + std::to_string(a_self) + "," +
                                    std::to_string(a_other) + ")");
    if (k < 0 || k >= rho_count(a_self) || l < 0 || l >= gamma_l_count(a_self, k))
        throw std::out_of_range("gamma index (" + std::to_string(k) + "," + std::to_string(l) +
                                ") outside its range for a_ij = " + std::to_string(a_self));
    switch (a_self) {
    case -3:
        if (k == 0 && l == 1)
            return (q(1) + q(-1)) * (q(2) + q(-2)) * (q(2) + RationalFn(3) + q(-2)) /
                   (q(4) + RationalFn(2) * q(2) + RationalFn(4) + RationalFn(2) * q(-2) + q(-4));
        return RationalFn(1);
    case -4:
        if (k == 0 && (l == 1 || l == 2)) return qnum(3, 1) * qnum(5, 1) / (q(4) + q(-4) + RationalFn(3));
        return RationalFn(1);
    default: return RationalFn(1);
    }
}

void validate_gamma_table() {
    for (auto [a, b] : {std::pair{-1, -1}, {-1, -2}, {-2, -1}, {-2, -2}, {-1, -3}, {-3, -1}, {-1, -4}, {-4, -1}})
        for (int k = 0; k < rho_count(a); ++k)
            for (int l = 0; l < gamma_l_count(a, k); ++l) {
                const RationalFn g = gamma(a, b, k, l);
                if (!(g.bar() == g))
                    throw std::logic_error("gamma table entry is not bar-invariant: a=" + std::to_string(a) +
                                           " k=" + std::to_string(k) + " l=" + std::to_string(l));
            }
}

OnsagerRelation build_relation(const CartanData& cd, int i, int j) {
    if (i == j) throw std::invalid_argument("build_relation needs i != j");
    OnsagerRelation rel;
    rel.i = i;
    rel.j = j;
    rel.a_ij = cd.a[i][j];
    const int a = rel.a_ij, n = 1 - a;
    auto word = [&](int left, int right) {
        Monomial m;
        for (int k = 0; k < left; ++k) m.word.push_back(Letter::A(i));
        m.word.push_back(Letter::A(j));
        for (int k = 0; k < right; ++k) m.word.push_back(Letter::A(i));
        return m;
    };
    for (int r = 0; r <= n; ++r)
        rel.lhs.add_term(word(n - r, r), qbinom(n, r, cd.d[i]) * RationalFn(r % 2 ? -1 : 1));
    for (int k = 0; k < rho_count(a); ++k) {
        const Symbol s = Symbol::rho(k, i, j);
        rel.rho_symbols.push_back(s);
        for (int l = 0; l < gamma_l_count(a, k); ++l)
            rel.rhs.add_term(word(-2 * k - a - 1 - l, l),
                             RationalFn::symbol(s) * gamma(a, cd.a[j][i], k, l) * RationalFn(l % 2 ? -1 : 1));
    }
    return rel;
}

OnsagerRelation specialize_q1(const OnsagerRelation& rel) {
    OnsagerRelation r = rel;
    auto at1 = [](const RationalFn& c) { return specialize_t(c, mpq_class(1)); };
    r.lhs = rel.lhs.map_coefficients(at1);
    r.rhs = rel.rhs.map_coefficients(at1);
    return r;
}

NCPoly serre_degeneration(const OnsagerRelation& rel) {
    std::map<Symbol, RationalFn> zero;
    for (auto s : rel.rho_symbols) zero[s] = RationalFn(0);
    return rel.element().map_coefficients([&](const RationalFn& c) { return substitute(c, zero); });
}

} // namespace qons
