#include "qons/coaction.hpp"

#include <algorithm>
#include <stdexcept>

namespace qons {

TensorPoly coact(const CartanData& cd, int i, int kpow) {
    if (i < 0 || i >= cd.size()) throw std::out_of_range("node out of range");
    TensorPoly r;
    const Monomial one;
    Monomial e{Word{Letter::E(i)}, Monomial::kpow(i, 1).k}, f{Word{Letter::F(i)}, Monomial::kpow(i, 1).k};
    r.add_term(e, one, RationalFn::symbol(Symbol::c(i)));
    r.add_term(f, one, RationalFn::symbol(Symbol::cbar(i)));
    r.add_term(Monomial::kpow(i, kpow), Monomial::letters({Letter::A(i)}), RationalFn(1));
    return r;
}

NCPoly counit_left(const TensorPoly& x) {
    NCPoly r;
    for (auto& [key, c] : x.terms())
        if (key.first.word.empty()) r.add_term(key.second, c);
    return r;
}

namespace {

/// Degree-lex with A_hi > A_lo, hi being the smaller index.
bool word_greater(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].node != b[k].node) return a[k].node < b[k].node;
    return false;
}

NCPoly substitute_rho(const NCPoly& p, const std::map<Symbol, RationalFn>& rho) {
    return p.map_coefficients([&](const RationalFn& c) { return substitute(c, rho); });
}

} // namespace

OqRewrite::OqRewrite(const CartanData& cd, int i, int j, const std::map<Symbol, RationalFn>& rho) : cd_(cd) {
    for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        const NCPoly el = substitute_rho(build_relation(cd, x, y).element(), rho);
        const Monomial* lead = nullptr;
        for (auto& [m, c] : el.terms())
            if (!lead || word_greater(m.word, lead->word)) lead = &m;
        if (!lead) continue;
        const RationalFn lc = el.coefficient(*lead);
        NCPoly rest = el;
        rest.add_term(*lead, -lc);
        rules_.push_back({lead->word, rest * (-lc.inverse()), "rel(" + std::to_string(x) + "," + std::to_string(y) + ")"});
    }
}

NCPoly OqRewrite::reduce(const NCPoly& p, std::size_t* steps) const {
    constexpr std::size_t kGuard = 1'000'000;
    NCPoly cur = p;
    std::size_t n = 0;
    for (;;) {
        bool fired = false;
        for (auto& [m, c] : cur.terms()) {
            for (auto& r : rules_) {
                auto it = std::search(m.word.begin(), m.word.end(), r.lhs.begin(), r.lhs.end());
                if (it == m.word.end()) continue;
                Monomial pre{Word(m.word.begin(), it), {}}, post{Word(it + r.lhs.size(), m.word.end()), {}};
                NCPoly replacement = multiply(multiply(NCPoly(pre), r.rhs, cd_), NCPoly(post), cd_) * c;
                NCPoly next = cur;
                next.add_term(m, -c);
                next += replacement;
                cur = std::move(next);
                fired = true;
                break;
            }
            if (fired) break;
        }
        if (!fired) break;
        if (++n > kGuard) throw std::runtime_error("OqRewrite: step guard exceeded");
    }
    if (steps) *steps = n;
    return cur;
}

bool CoactionReport::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.passed(); });
}

CoactionReport verify_coaction_pair(const CartanData& cd, int i, int j, int kpow) {
    if (i == j) throw std::invalid_argument("coaction check needs two distinct nodes");
    if (i < 0 || j < 0 || i >= cd.size() || j >= cd.size()) throw std::out_of_range("node out of range");
    CoactionReport rep;
    rep.algebra = cd.id;
    rep.i = i;
    rep.j = j;
    rep.kpow = kpow;
    // rho from the U_q side; an unlinked pair has none
    if (cd.a[i][j] != 0) rep.rho = verify_pair(cd, i, j).rho;
    const RewriteSystem rs(cd, i, j);
    const OqRewrite oq(cd, i, j, rep.rho);
    const std::map<int, TensorPoly> images{{i, coact(cd, i, kpow)}, {j, coact(cd, j, kpow)}};

    for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        CoactionCheck chk;
        chk.x = x;
        chk.y = y;
        const NCPoly element = substitute_rho(build_relation(cd, x, y).element(), rep.rho);
        TensorPoly expanded;
        for (auto& [m, c] : element.terms()) {
            TensorPoly prod = TensorPoly::pure(NCPoly::scalar(RationalFn(1)), NCPoly::scalar(RationalFn(1)));
            std::size_t raw = 1;
            for (auto l : m.word) {
                prod = tensor_multiply(prod, images.at(l.node), cd);
                raw *= images.at(l.node).size();
            }
            prod *= c;
            expanded += prod;
            chk.raw_terms += raw;
        }
        // left factors to normal form, grouped by right word
        std::map<Monomial, NCPoly, MonomialOrder> by_right;
        for (auto& [key, c] : expanded.terms()) by_right[key.second].add_term(key.first, c);
        for (auto& [right, left] : by_right) {
            const NCPoly nf = normal_form(left, rs);
            for (auto& [l, c] : nf.terms()) chk.intermediate.add_term(l, right, c);
        }
        chk.unit = Monomial::kpow(x, 2 * (1 - cd.a[x][y]));
        {
            auto [u, shift] = multiply(chk.unit, Monomial::kpow(y, 2), cd);
            chk.unit = u;
            (void)shift; // K's commute
        }
        chk.intermediate_factors = chk.intermediate == TensorPoly::pure(NCPoly(chk.unit), element);
        // right factors through the O_q relations, grouped by left monomial
        std::map<Monomial, NCPoly, MonomialOrder> by_left;
        for (auto& [key, c] : chk.intermediate.terms()) by_left[key.first].add_term(key.second, c);
        for (auto& [left, right] : by_left) {
            std::size_t steps = 0;
            const NCPoly red = oq.reduce(right, &steps);
            chk.oq_steps += steps;
            for (auto& [r, c] : red.terms()) chk.residual.add_term(left, r, c);
        }
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

} // namespace qons
